use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::bounds::{combine, Constraint, Derivation, DistanceBound, InconsistentEvidence};
use super::graph::PathwayGraph;
use super::MoveClass;
use crate::catalog::{is_split_name, Catalog, CatalogEntry};
use crate::diagram::LinkDiagram;
use crate::invariants::{
    arf, bracket_certifies_nonsplit, component_arfs, fingerprint, linking_matrix, ConwayEngine,
    InvariantError,
};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnalysisError {
    UnknownLink(String),
    NotSelfEquivalent { a: String, b: String },
    NotMixedEquivalent { a: String, b: String },
    NotProper(String),
    NotAlgebraicallySplit(String),
    UnknownComponentValue { link: String, component: String },
    Invariant(InvariantError),
    Inconsistent(InconsistentEvidence),
}

impl fmt::Display for AnalysisError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnalysisError::UnknownLink(n) => write!(f, "unknown link {n}"),
            AnalysisError::NotSelfEquivalent { a, b } => {
                write!(f, "{a} and {b} are not self delta-equivalent")
            }
            AnalysisError::NotMixedEquivalent { a, b } => {
                write!(f, "{a} and {b} are not mixed delta-equivalent")
            }
            AnalysisError::NotProper(n) => write!(f, "{n} is not a proper link"),
            AnalysisError::NotAlgebraicallySplit(n) => write!(f, "{n} is not algebraically split"),
            AnalysisError::UnknownComponentValue { link, component } => {
                write!(
                    f,
                    "delta-unknotting number of component {component} of {link} is unknown"
                )
            }
            AnalysisError::Invariant(e) => e.fmt(f),
            AnalysisError::Inconsistent(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for AnalysisError {}

impl From<InvariantError> for AnalysisError {
    fn from(e: InvariantError) -> Self {
        AnalysisError::Invariant(e)
    }
}

impl From<InconsistentEvidence> for AnalysisError {
    fn from(e: InconsistentEvidence) -> Self {
        AnalysisError::Inconsistent(e)
    }
}

fn sum_arf(e: &CatalogEntry, engine: &mut ConwayEngine) -> Result<u8, AnalysisError> {
    Ok(component_arfs(&e.diagram, engine)?.iter().sum::<u8>() % 2)
}

fn link_arf(e: &CatalogEntry, engine: &mut ConwayEngine) -> Result<u8, AnalysisError> {
    arf(&e.diagram, engine)?.ok_or_else(|| AnalysisError::NotProper(e.name.clone()))
}

fn same_family(a: &CatalogEntry, b: &CatalogEntry) -> bool {
    match (a.family, b.family) {
        (Some(x), Some(y)) => x.class() == y.class(),
        (None, None) => a.component_count() == b.component_count(),
        _ => false,
    }
}

/// Parity of every self delta-pathway between `a` and `b`:
/// `Σ arf(a_i) + Σ arf(b_i) (mod 2)`.
pub fn parity_self(
    a: &CatalogEntry,
    b: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<u8, AnalysisError> {
    if !same_family(a, b) {
        return Err(AnalysisError::NotSelfEquivalent {
            a: a.name.clone(),
            b: b.name.clone(),
        });
    }
    Ok((sum_arf(a, engine)? + sum_arf(b, engine)?) % 2)
}

/// Parity of every delta-pathway between proper links: `arf(a) + arf(b)`.
pub fn parity_proper(
    a: &CatalogEntry,
    b: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<u8, AnalysisError> {
    Ok((link_arf(a, engine)? + link_arf(b, engine)?) % 2)
}

/// Knot names of the components: the listed ones, or identified sublinks.
pub fn component_names(
    cat: &Catalog,
    e: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<Vec<String>, AnalysisError> {
    if !e.components.is_empty() {
        return Ok(e.components.clone());
    }
    if e.component_count() == 1 {
        return Ok(Vec::from([e.name.clone()]));
    }
    let mut out = Vec::new();
    for k in 0..e.component_count() {
        let fp = fingerprint(
            &e.diagram.sublink(&[k]).map_err(InvariantError::from)?,
            engine,
        )?;
        let hits = cat.identify(&fp);
        out.push(
            hits.first()
                .map_or_else(|| format!("component {k}"), |n| n.to_string()),
        );
    }
    Ok(out)
}

/// `Σ u^Δ` over the components.
pub fn sum_component_u(
    cat: &Catalog,
    e: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<u32, AnalysisError> {
    let mut total = 0;
    for c in component_names(cat, e, engine)? {
        total += cat
            .knot_u_delta(&c)
            .ok_or_else(|| AnalysisError::UnknownComponentValue {
                link: e.name.clone(),
                component: c.clone(),
            })?;
    }
    Ok(total)
}

/// `|Σ u^Δ(a_i) - Σ u^Δ(b_i)|`, a lower bound on the self delta distance.
pub fn lower_self(
    cat: &Catalog,
    a: &CatalogEntry,
    b: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<u32, AnalysisError> {
    Ok(sum_component_u(cat, a, engine)?.abs_diff(sum_component_u(cat, b, engine)?))
}

/// Same component count and the same pairwise linking numbers up to
/// renumbering and orientation.
pub fn mixed_equivalent(a: &LinkDiagram, b: &LinkDiagram) -> bool {
    a.component_count() == b.component_count()
        && linking_matrix(a).canonical_class() == linking_matrix(b).canonical_class()
}

/// Parity of the mixed splitting number: `arf(L) + Σ arf(L_i)`.
pub fn split_parity(e: &CatalogEntry, engine: &mut ConwayEngine) -> Result<u8, AnalysisError> {
    if !linking_matrix(&e.diagram).is_zero() {
        return Err(AnalysisError::NotAlgebraicallySplit(e.name.clone()));
    }
    Ok((link_arf(e, engine)? + sum_arf(e, engine)?) % 2)
}

/// True when the invariants prove that `e` is not a split link.
pub fn certified_nonsplit(
    e: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<Option<&'static str>, AnalysisError> {
    if e.component_count() < 2 {
        return Ok(None);
    }
    if !linking_matrix(&e.diagram).is_zero() {
        return Ok(Some("nonzero linking number"));
    }
    if !engine.conway(&e.diagram)?.is_zero() {
        return Ok(Some("Conway polynomial is nonzero"));
    }
    if bracket_certifies_nonsplit(&e.fingerprint.bracket) {
        return Ok(Some("bracket is not a multiple of the loop value"));
    }
    if e.known.sp.is_some_and(|sp| sp > 0) {
        return Ok(Some("splitting number is positive"));
    }
    Ok(None)
}

/// Lower bound on the mixed splitting number with its derivations; the
/// second list names ingredients that were unavailable.
pub struct SplitLower {
    pub value: u32,
    pub trace: Vec<Derivation>,
    pub missing: Vec<&'static str>,
}

pub fn split_lower(
    cat: &Catalog,
    e: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<SplitLower, AnalysisError> {
    let mut trace = Vec::new();
    let mut missing = Vec::new();
    match (e.known.u_delta, sum_component_u(cat, e, engine)) {
        (Some(u), Ok(s)) => trace.push(Derivation::new(
            Constraint::AtLeast(u.lower.saturating_sub(s)),
            format!("u^D(L) - Σu^D(L_i) >= {} - {s}", u.lower),
        )),
        (None, _) => missing.push("u_delta"),
        (_, Err(_)) => missing.push("component u_delta"),
    }
    match e.known.sp {
        Some(sp) => trace.push(Derivation::new(
            Constraint::AtLeast(sp.div_ceil(2)),
            format!("sp(L)/2 with sp = {sp}"),
        )),
        None => missing.push("sp"),
    }
    if let Some(why) = certified_nonsplit(e, engine)? {
        trace.push(Derivation::new(
            Constraint::AtLeast(1),
            format!("not split: {why}"),
        ));
    }
    let value = trace
        .iter()
        .filter_map(|d| match d.constraint {
            Constraint::AtLeast(n) => Some(n),
            _ => None,
        })
        .max()
        .unwrap_or(0);
    Ok(SplitLower {
        value,
        trace,
        missing,
    })
}

fn entry<'a>(cat: &'a Catalog, name: &str) -> Result<&'a CatalogEntry, AnalysisError> {
    cat.get(name)
        .ok_or_else(|| AnalysisError::UnknownLink(name.to_string()))
}

fn path_reason(kind: MoveClass, path: &[String]) -> String {
    format!("{kind} pathway {}", path.join(" -> "))
}

/// Bounds on the delta distance of the given class between two entries.
pub fn distance(
    cat: &Catalog,
    graph: &PathwayGraph,
    a: &str,
    b: &str,
    class: MoveClass,
    engine: &mut ConwayEngine,
) -> Result<DistanceBound, AnalysisError> {
    let (ea, eb) = (entry(cat, a)?, entry(cat, b)?);
    let mut ev = Vec::new();
    if ea.fingerprint == eb.fingerprint {
        ev.push(Derivation::new(Constraint::AtMost(0), "same link"));
        return Ok(combine(ev)?);
    }
    if !mixed_equivalent(&ea.diagram, &eb.diagram) {
        return Err(AnalysisError::NotMixedEquivalent {
            a: a.into(),
            b: b.into(),
        });
    }
    ev.push(Derivation::new(Constraint::AtLeast(1), "different links"));
    match class {
        MoveClass::SelfDelta => {
            let p = parity_self(ea, eb, engine)?;
            ev.push(Derivation::new(
                Constraint::Parity(p),
                "Σarf(L_i) + Σarf(L'_i)",
            ));
            let low = lower_self(cat, ea, eb, engine)?;
            ev.push(Derivation::new(
                Constraint::AtLeast(low),
                "|Σu^D(L_i) - Σu^D(L'_i)|",
            ));
        }
        MoveClass::Mixed => {
            let (ca, cb) = (
                sorted_component_fps(ea, engine)?,
                sorted_component_fps(eb, engine)?,
            );
            if ca != cb {
                return Err(AnalysisError::NotMixedEquivalent {
                    a: a.into(),
                    b: b.into(),
                });
            }
        }
        MoveClass::Any => {}
    }
    if let (Ok(x), Ok(y)) = (arf(&ea.diagram, engine), arf(&eb.diagram, engine)) {
        if let (Some(x), Some(y)) = (x, y) {
            ev.push(Derivation::new(
                Constraint::Parity((x + y) % 2),
                "arf(L) + arf(L')",
            ));
        }
    }
    if let Some((len, path)) =
        graph.shortest_path(cat, a, |n| cat.canonical(n) == cat.canonical(b), class)
    {
        ev.push(Derivation::new(
            Constraint::AtMost(len),
            path_reason(class, &path),
        ));
    }
    Ok(combine(ev)?)
}

fn sorted_component_fps(
    e: &CatalogEntry,
    engine: &mut ConwayEngine,
) -> Result<Vec<crate::invariants::Fingerprint>, AnalysisError> {
    let mut out = Vec::new();
    for k in 0..e.component_count() {
        out.push(fingerprint(
            &e.diagram.sublink(&[k]).map_err(InvariantError::from)?,
            engine,
        )?);
    }
    out.sort();
    Ok(out)
}

/// Bounds on `sp^Δ` and `sp^mΔ`.
pub struct SplitBounds {
    pub sp_delta: DistanceBound,
    pub sp_mdelta: DistanceBound,
}

pub fn split_bounds(
    cat: &Catalog,
    graph: &PathwayGraph,
    name: &str,
    engine: &mut ConwayEngine,
) -> Result<SplitBounds, AnalysisError> {
    let e = entry(cat, name)?;
    let lower = split_lower(cat, e, engine)?;
    let mut mixed = lower.trace.clone();
    mixed.push(Derivation::new(
        Constraint::Parity(split_parity(e, engine)?),
        "arf(L) + Σarf(L_i)",
    ));
    let mixed_path = graph.shortest_path(cat, name, is_split_name, MoveClass::Mixed);
    if let Some((len, path)) = &mixed_path {
        mixed.push(Derivation::new(
            Constraint::AtMost(*len),
            path_reason(MoveClass::Mixed, path),
        ));
    }
    let sp_mdelta = combine(mixed)?;

    let mut any = Vec::new();
    if let Some(why) = certified_nonsplit(e, engine)? {
        any.push(Derivation::new(
            Constraint::AtLeast(1),
            format!("not split: {why}"),
        ));
    }
    if let Some(u) = sp_mdelta.upper {
        any.push(Derivation::new(Constraint::AtMost(u), "sp^D <= sp^mD"));
    }
    if let Some(u) = e.known.u_delta {
        any.push(Derivation::new(
            Constraint::AtMost(u.upper),
            format!("sp^D <= u^D(L) <= {}", u.upper),
        ));
    }
    if let Some((len, path)) = graph.shortest_path(cat, name, is_split_name, MoveClass::Any) {
        any.push(Derivation::new(
            Constraint::AtMost(len),
            path_reason(MoveClass::Any, &path),
        ));
    }
    Ok(SplitBounds {
        sp_delta: combine(any)?,
        sp_mdelta,
    })
}
