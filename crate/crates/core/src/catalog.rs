//! Reference links with their literature values, identified by fingerprint.
//!
//! Records are one per line, `key = value` pairs separated by `;`:
//!
//! ```text
//! name = L8a4 ; pd = X(5,1,6,4) ... ; components = 0_1,m3_1 ; u_delta = 1 ; sp = 2 ; arf = 1
//! ```
//!
//! Ranges are written `a`, `a-b` or `a-bp`; the trailing `p` restricts the
//! range to the parity of `a`. Mirror images `mX` of knots and links are
//! derived when the file does not list them.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::{Constraint, Derivation};
use crate::diagram::{parse_pd, LinkDiagram};
use crate::invariants::{
    delta_invariants, fingerprint, ConwayEngine, FamilyKey, Fingerprint, InvariantError,
};

/// Name of the mirror image under the `mX` convention.
pub fn mirror_name(name: &str) -> String {
    if let Some(rest) = name.strip_prefix("0_1+") {
        return format!("0_1+{}", mirror_name(rest));
    }
    if name == "0_1" || name.starts_with("Trivial") || name == SPLIT {
        return name.to_string();
    }
    match name.strip_prefix('m') {
        Some(rest) if rest.starts_with(|c: char| c.is_ascii_digit() || c == 'L') => {
            rest.to_string()
        }
        _ => format!("m{name}"),
    }
}

/// Pseudo-node for completely split states matching no entry.
pub const SPLIT: &str = "SPLIT";

/// True for names of split links: trivial links, split unions and [`SPLIT`].
pub fn is_split_name(name: &str) -> bool {
    name.starts_with("Trivial") || name.contains('+') || name == SPLIT
}

/// A published value that may only be known to lie in a range.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct KnownRange {
    pub lower: u32,
    pub upper: u32,
    pub parity: Option<u8>,
}

impl KnownRange {
    pub fn exact(v: u32) -> Self {
        KnownRange {
            lower: v,
            upper: v,
            parity: Some((v % 2) as u8),
        }
    }

    pub fn parse(text: &str) -> Option<KnownRange> {
        let t = text.trim();
        let (t, parity_flag) = match t.strip_suffix('p') {
            Some(rest) => (rest, true),
            None => (t, false),
        };
        let (lower, upper) = match t.split_once('-') {
            Some((a, b)) => (a.trim().parse().ok()?, b.trim().parse().ok()?),
            None => {
                let v: u32 = t.parse().ok()?;
                (v, v)
            }
        };
        if lower > upper || (parity_flag && (upper - lower) % 2 != 0) {
            return None;
        }
        let parity = (parity_flag || lower == upper).then_some((lower % 2) as u8);
        Some(KnownRange {
            lower,
            upper,
            parity,
        })
    }

    pub fn value(&self) -> Option<u32> {
        (self.lower == self.upper).then_some(self.lower)
    }

    pub fn admits(&self, n: u32) -> bool {
        n >= self.lower && n <= self.upper && self.parity.is_none_or(|p| n % 2 == p as u32)
    }

    /// The range as constraints, tagged with `reason`.
    pub fn constraints(&self, reason: &str) -> Vec<Derivation> {
        let mut out = Vec::from([
            Derivation::new(Constraint::AtLeast(self.lower), reason),
            Derivation::new(Constraint::AtMost(self.upper), reason),
        ]);
        if let Some(p) = self.parity.filter(|_| self.lower != self.upper) {
            out.push(Derivation::new(Constraint::Parity(p), reason));
        }
        out
    }

    /// File notation: `a`, `a-b` or `a-bp`.
    pub fn notation(&self) -> String {
        match (self.value(), self.parity) {
            (Some(v), _) => format!("{v}"),
            (None, Some(_)) => format!("{}-{}p", self.lower, self.upper),
            (None, None) => format!("{}-{}", self.lower, self.upper),
        }
    }
}

/// Printed in the style of the published tables: `2`, `1 - 3`, `1 or 3`, `2 or 3`.
impl fmt::Display for KnownRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None if self.parity.is_some() && self.upper == self.lower + 2 => {
                write!(f, "{} or {}", self.lower, self.upper)
            }
            None if self.parity.is_none() && self.upper == self.lower + 1 => {
                write!(f, "{} or {}", self.lower, self.upper)
            }
            None if self.parity.is_some() => write!(
                f,
                "{} - {} (parity {})",
                self.lower,
                self.upper,
                self.lower % 2
            ),
            None => write!(f, "{} - {}", self.lower, self.upper),
        }
    }
}

/// Literature values attached to an entry; `None` means unknown.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct KnownValues {
    pub u_delta: Option<KnownRange>,
    pub sp: Option<u32>,
    pub arf: Option<u8>,
    pub sum_arf: Option<u8>,
    pub sum_u_delta: Option<u32>,
    pub sp_delta: Option<KnownRange>,
    pub sp_mdelta: Option<KnownRange>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: String,
    pub diagram: LinkDiagram,
    /// Knot names of the components, in component order when given.
    pub components: Vec<String>,
    pub known: KnownValues,
    pub fingerprint: Fingerprint,
    pub family: Option<FamilyKey>,
    /// Derived on load as the mirror of another entry.
    pub derived: bool,
    /// The fingerprint does not separate this entry from its mirror.
    pub mirror_ambiguous: bool,
}

impl CatalogEntry {
    pub fn component_count(&self) -> usize {
        self.diagram.component_count()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalogError {
    Parse { line: usize, message: String },
    Validation { name: String, message: String },
}

impl fmt::Display for CatalogError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogError::Parse { line, message } => write!(f, "line {line}: {message}"),
            CatalogError::Validation { name, message } => write!(f, "entry {name}: {message}"),
        }
    }
}

impl core::error::Error for CatalogError {}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    entries: Vec<CatalogEntry>,
    index: BTreeMap<String, usize>,
    warnings: Vec<String>,
}

struct Record {
    line: usize,
    name: String,
    pd: String,
    components: Vec<String>,
    known: KnownValues,
}

fn parse_record(
    line_no: usize,
    line: &str,
    warnings: &mut Vec<String>,
) -> Result<Record, CatalogError> {
    let err = |message: String| CatalogError::Parse {
        line: line_no,
        message,
    };
    let mut name = None;
    let mut pd = None;
    let mut components = Vec::new();
    let mut known = KnownValues::default();
    for part in line.split(';') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got `{part}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let range = |v: &str| {
            KnownRange::parse(v).ok_or_else(|| err(format!("bad range `{v}` for `{key}`")))
        };
        let int = |v: &str| {
            v.parse::<u32>()
                .map_err(|_| err(format!("bad integer `{v}` for `{key}`")))
        };
        let bit = |v: &str| match v {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            _ => Err(err(format!("`{key}` must be 0 or 1, got `{v}`"))),
        };
        match key {
            "name" => name = Some(value.to_string()),
            "pd" => pd = Some(value.to_string()),
            "components" => {
                components = value
                    .split(',')
                    .map(|c| c.trim().to_string())
                    .filter(|c| !c.is_empty())
                    .collect()
            }
            "u_delta" => known.u_delta = Some(range(value)?),
            "sp" => known.sp = Some(int(value)?),
            "arf" => known.arf = Some(bit(value)?),
            "sum_arf" => known.sum_arf = Some(bit(value)?),
            "sum_u_delta" => known.sum_u_delta = Some(int(value)?),
            "sp_delta" => known.sp_delta = Some(range(value)?),
            "sp_mdelta" => known.sp_mdelta = Some(range(value)?),
            _ => warnings.push(format!("line {line_no}: unknown key `{key}` ignored")),
        }
    }
    let name = name
        .filter(|n| !n.is_empty())
        .ok_or_else(|| err("record has no name".into()))?;
    let pd = pd.ok_or_else(|| err(format!("record {name} has no pd")))?;
    Ok(Record {
        line: line_no,
        name,
        pd,
        components,
        known,
    })
}

impl Catalog {
    pub fn empty() -> Self {
        Catalog::default()
    }

    /// Parses, fingerprints and validates a catalog text.
    pub fn parse(text: &str, engine: &mut ConwayEngine) -> Result<Catalog, CatalogError> {
        let mut warnings = Vec::new();
        let mut records = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            records.push(parse_record(i + 1, line, &mut warnings)?);
        }
        let mut cat = Catalog {
            entries: Vec::new(),
            index: BTreeMap::new(),
            warnings,
        };
        for r in &records {
            if cat.index.contains_key(&r.name) {
                return Err(CatalogError::Parse {
                    line: r.line,
                    message: format!("duplicate entry {}", r.name),
                });
            }
            let diagram = parse_pd(&r.pd).map_err(|e| validation(&r.name, format!("{e}")))?;
            cat.push(
                r.name.clone(),
                r.pd.clone(),
                diagram,
                r.components.clone(),
                r.known.clone(),
                false,
                engine,
            )?;
        }
        let listed: Vec<usize> = (0..cat.entries.len()).collect();
        for i in listed {
            let name = cat.entries[i].name.clone();
            let mirror = mirror_name(&name);
            if mirror == name || cat.index.contains_key(&mirror) || is_split_name(&name) {
                continue;
            }
            let e = &cat.entries[i];
            let diagram = e.diagram.mirror();
            let components = e.components.iter().map(|c| mirror_name(c)).collect();
            let (pd, known) = (diagram.to_pd_string(), e.known.clone());
            cat.push(mirror, pd, diagram, components, known, true, engine)?;
        }
        cat.mark_mirror_ambiguity()?;
        cat.check_components(engine)?;
        Ok(cat)
    }

    #[allow(clippy::too_many_arguments)]
    fn push(
        &mut self,
        name: String,
        pd: String,
        diagram: LinkDiagram,
        components: Vec<String>,
        known: KnownValues,
        derived: bool,
        engine: &mut ConwayEngine,
    ) -> Result<(), CatalogError> {
        let inv = |e: InvariantError| validation(&name, format!("{e}"));
        if !components.is_empty() && components.len() != diagram.component_count() {
            return Err(validation(
                &name,
                format!(
                    "lists {} components but the diagram has {}",
                    components.len(),
                    diagram.component_count()
                ),
            ));
        }
        let fp = fingerprint(&diagram, engine).map_err(inv)?;
        let family = if diagram.component_count() == 2 {
            Some(delta_invariants(&diagram, engine).map_err(inv)?)
        } else {
            None
        };
        self.index.insert(name.clone(), self.entries.len());
        self.entries.push(CatalogEntry {
            name,
            pd,
            diagram,
            components,
            known,
            fingerprint: fp,
            family,
            derived,
            mirror_ambiguous: false,
        });
        Ok(())
    }

    fn mark_mirror_ambiguity(&mut self) -> Result<(), CatalogError> {
        let mut groups: BTreeMap<&Fingerprint, Vec<usize>> = BTreeMap::new();
        for (i, e) in self.entries.iter().enumerate() {
            groups.entry(&e.fingerprint).or_default().push(i);
        }
        let mut ambiguous = Vec::new();
        for members in groups.values().filter(|m| m.len() > 1) {
            let names: Vec<&str> = members
                .iter()
                .map(|&i| self.entries[i].name.as_str())
                .collect();
            let pair = names.len() == 2 && mirror_name(names[0]) == names[1];
            if !pair {
                return Err(validation(
                    names[0],
                    format!("fingerprint also matches {}", names[1..].join(", ")),
                ));
            }
            ambiguous.extend(members.iter().copied());
        }
        for i in ambiguous {
            self.entries[i].mirror_ambiguous = true;
        }
        Ok(())
    }

    fn check_components(&self, engine: &mut ConwayEngine) -> Result<(), CatalogError> {
        let unknot = fingerprint(&LinkDiagram::unlink(1), engine)
            .map_err(|e| validation("0_1", format!("{e}")))?;
        for e in self.entries.iter().filter(|e| !e.components.is_empty()) {
            let mut expected = Vec::new();
            for c in &e.components {
                let fp = match self.get(c) {
                    Some(k) if k.component_count() == 1 => k.fingerprint.clone(),
                    _ if c == "0_1" => unknot.clone(),
                    _ => return Err(validation(&e.name, format!("unknown component knot {c}"))),
                };
                expected.push(fp);
            }
            let mut actual = Vec::new();
            for k in 0..e.diagram.component_count() {
                let knot = e
                    .diagram
                    .sublink(&[k])
                    .map_err(|err| validation(&e.name, format!("{err}")))?;
                actual.push(
                    fingerprint(&knot, engine)
                        .map_err(|err| validation(&e.name, format!("{err}")))?,
                );
            }
            expected.sort();
            actual.sort();
            if expected != actual {
                return Err(validation(
                    &e.name,
                    format!(
                        "components {} do not match the sublinks of the diagram",
                        e.components.join(",")
                    ),
                ));
            }
        }
        Ok(())
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.index.get(name).map(|&i| &self.entries[i])
    }

    /// Names of all entries with this fingerprint, listed entries first.
    pub fn identify(&self, fp: &Fingerprint) -> Vec<&str> {
        let mut hits: Vec<&CatalogEntry> = self
            .entries
            .iter()
            .filter(|e| &e.fingerprint == fp)
            .collect();
        hits.sort_by_key(|e| (e.derived, e.name.len(), e.name.as_str()));
        hits.into_iter().map(|e| e.name.as_str()).collect()
    }

    /// Single name for a node: the entry itself, or its listed twin when the
    /// two are mirror-ambiguous.
    pub fn canonical<'a>(&'a self, name: &'a str) -> &'a str {
        match self.get(name) {
            Some(e) if e.derived && e.mirror_ambiguous => self
                .get(&mirror_name(name))
                .map_or(name, |twin| twin.name.as_str()),
            _ => name,
        }
    }

    /// Listed two-component entries with `(|δ1|, |δ2|) = class`, excluding
    /// split unions.
    pub fn family_members(&self, class: (i64, i64)) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|e| !e.derived && !e.name.contains('+'))
            .filter(|e| e.family.is_some_and(|f| f.class() == class))
            .map(|e| e.name.as_str())
            .collect()
    }

    /// Delta-unknotting number of a knot entry, when known exactly.
    pub fn knot_u_delta(&self, name: &str) -> Option<u32> {
        let e = self.get(name).filter(|e| e.component_count() == 1);
        match e {
            Some(e) => e.known.u_delta.and_then(|r| r.value()),
            None if name == "0_1" => Some(0),
            None => None,
        }
    }
}

fn validation(name: &str, message: String) -> CatalogError {
    CatalogError::Validation {
        name: name.to_string(),
        message,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "\
name = 0_1 ; pd = +1 ; u_delta = 0
name = 3_1 ; pd = X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) ; u_delta = 1
name = 4_1 ; pd = X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8) ; u_delta = 1
name = Trivial ; pd = +2 ; components = 0_1,0_1
name = L5a1 ; pd = X(5,1,6,4) X(1,5,2,10) X(7,2,8,3) X(3,8,4,9) X(9,6,10,7) ; components = 0_1,0_1 ; sp_mdelta = 1
";

    fn load(text: &str) -> Result<Catalog, CatalogError> {
        Catalog::parse(text, &mut ConwayEngine::new())
    }

    #[test]
    fn ranges() {
        assert_eq!(KnownRange::parse("2"), Some(KnownRange::exact(2)));
        let r = KnownRange::parse("1-3p").unwrap();
        assert_eq!((r.lower, r.upper, r.parity), (1, 3, Some(1)));
        assert!(!r.admits(2));
        assert_eq!(r.to_string(), "1 or 3");
        assert_eq!(KnownRange::parse("2-3").unwrap().to_string(), "2 or 3");
        assert_eq!(KnownRange::parse("1-3").unwrap().to_string(), "1 - 3");
        assert_eq!(KnownRange::parse("1-2p"), None);
        assert_eq!(KnownRange::parse("x"), None);
    }

    #[test]
    fn mirror_names() {
        assert_eq!(mirror_name("L5a1"), "mL5a1");
        assert_eq!(mirror_name("mL5a1"), "L5a1");
        assert_eq!(mirror_name("m3_1"), "3_1");
        assert_eq!(mirror_name("0_1+m3_1"), "0_1+3_1");
        assert_eq!(mirror_name("Trivial"), "Trivial");
    }

    #[test]
    fn derives_mirrors_and_flags_amphichiral_knots() {
        let c = load(SMALL).unwrap();
        assert!(c
            .get("m3_1")
            .is_some_and(|e| e.derived && !e.mirror_ambiguous));
        assert!(c.get("m4_1").is_some_and(|e| e.mirror_ambiguous));
        assert_eq!(
            c.identify(&c.get("m4_1").unwrap().fingerprint),
            ["4_1", "m4_1"]
        );
        assert_eq!(c.canonical("m4_1"), "4_1");
        assert_eq!(c.canonical("mL5a1"), "mL5a1");
        assert_eq!(c.family_members((0, 1)), ["L5a1"]);
        assert_eq!(c.family_members((0, 0)), ["Trivial"]);
    }

    #[test]
    fn empty_text_is_empty_catalog() {
        assert!(load("").unwrap().is_empty());
        assert!(load("# only a comment\n\n").unwrap().is_empty());
    }

    #[test]
    fn wrong_components_are_rejected() {
        let bad = SMALL.replace(
            "components = 0_1,0_1 ; sp_mdelta",
            "components = 0_1,3_1 ; sp_mdelta",
        );
        match load(&bad) {
            Err(CatalogError::Validation { name, .. }) => assert_eq!(name, "L5a1"),
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert_eq!(
            load("name = 0_1 ; pd = +1\nname = x ; pd = +1 ; sp = two").unwrap_err(),
            CatalogError::Parse {
                line: 2,
                message: "bad integer `two` for `sp`".into()
            }
        );
        assert!(matches!(
            load("pd = +1"),
            Err(CatalogError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn unknown_keys_warn() {
        let c = load("name = 0_1 ; pd = +1 ; colour = blue").unwrap();
        assert_eq!(c.warnings().len(), 1);
    }
}
