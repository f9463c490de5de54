use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;

use super::MoveClass;
use crate::catalog::{is_split_name, mirror_name, Catalog, SPLIT};
use crate::diagram::{parse_pd, LinkDiagram};
use crate::invariants::{fingerprint, ConwayEngine};
use crate::moves::{apply, enumerate_sites, simplify, WITNESS_KINDS};

/// R3 budget of the simplification run after each delta step of a replay.
pub const REPLAY_SIMPLIFY_BUDGET: usize = 200;

/// Every component lies in its own piece of the diagram.
pub fn completely_split(d: &LinkDiagram) -> bool {
    d.piece_count() + d.closed_components() == d.component_count()
}

/// How an edge is justified.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Witness {
    /// Start diagram and step indices into `enumerate_sites(_, &WITNESS_KINDS)`.
    Replay { pd: String, steps: Vec<usize> },
    /// Taken from the literature without a machine-checkable sequence.
    Cited,
}

/// A delta-pathway of known length between two named links.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EvidenceEdge {
    pub from: String,
    pub to: String,
    pub class: MoveClass,
    pub length: u32,
    pub witness: Witness,
}

impl EvidenceEdge {
    pub fn is_cited(&self) -> bool {
        self.witness == Witness::Cited
    }
}

impl fmt::Display for EvidenceEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "edge: {}|{} ; kind={} ; length={} ; witness=",
            self.from, self.to, self.class, self.length
        )?;
        match &self.witness {
            Witness::Cited => f.write_str("cited"),
            Witness::Replay { pd, steps } => {
                let steps: Vec<String> = steps.iter().map(|s| s.to_string()).collect();
                write!(f, "{pd}@{}", steps.join(","))
            }
        }
    }
}

/// Parses one evidence line in the format produced by `Display`.
pub fn parse_edge(line: &str) -> Result<EvidenceEdge, String> {
    let body = line
        .trim()
        .strip_prefix("edge:")
        .ok_or("line does not start with `edge:`")?;
    let mut ends = None;
    let (mut class, mut length, mut witness) = (None, None, None);
    for (i, part) in body.split(';').enumerate() {
        let part = part.trim();
        if i == 0 {
            let (a, b) = part
                .split_once('|')
                .ok_or_else(|| format!("expected `a|b`, got `{part}`"))?;
            ends = Some((a.trim().to_string(), b.trim().to_string()));
            continue;
        }
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected `key=value`, got `{part}`"))?;
        let value = value.trim();
        match key.trim() {
            "kind" => {
                class =
                    Some(MoveClass::parse(value).ok_or_else(|| format!("unknown kind `{value}`"))?)
            }
            "length" => {
                length = Some(
                    value
                        .parse::<u32>()
                        .map_err(|_| format!("bad length `{value}`"))?,
                )
            }
            "witness" if value == "cited" => witness = Some(Witness::Cited),
            "witness" => {
                let (pd, steps) = value
                    .rsplit_once('@')
                    .ok_or("replay witness needs `pd@steps`")?;
                let steps = steps
                    .split(',')
                    .filter(|s| !s.trim().is_empty())
                    .map(|s| {
                        s.trim()
                            .parse::<usize>()
                            .map_err(|_| format!("bad step `{s}`"))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                witness = Some(Witness::Replay {
                    pd: pd.trim().to_string(),
                    steps,
                });
            }
            other => return Err(format!("unknown key `{other}`")),
        }
    }
    let (from, to) = ends.ok_or("missing endpoints")?;
    Ok(EvidenceEdge {
        from,
        to,
        class: class.ok_or("missing kind")?,
        length: length.ok_or("missing length")?,
        witness: witness.ok_or("missing witness")?,
    })
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReplayError {
    Parse(String),
    BadStep {
        step: usize,
        index: usize,
        available: usize,
    },
    LengthMismatch {
        claimed: u32,
        replayed: u32,
    },
    WrongClass {
        step: usize,
    },
    WrongStart(String),
    WrongEnd {
        expected: String,
        found: Vec<String>,
    },
    NotCheckable,
}

impl fmt::Display for ReplayError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReplayError::Parse(m) => write!(f, "witness diagram: {m}"),
            ReplayError::BadStep {
                step,
                index,
                available,
            } => {
                write!(
                    f,
                    "step {step}: site {index} requested, {available} available"
                )
            }
            ReplayError::LengthMismatch { claimed, replayed } => {
                write!(
                    f,
                    "claimed length {claimed} but the witness has {replayed} delta moves"
                )
            }
            ReplayError::WrongClass { step } => {
                write!(f, "step {step}: delta move of the wrong class")
            }
            ReplayError::WrongStart(n) => write!(f, "witness diagram is not {n}"),
            ReplayError::WrongEnd { expected, found } => {
                write!(
                    f,
                    "witness ends at {} instead of {expected}",
                    if found.is_empty() {
                        "an unlisted link".into()
                    } else {
                        found.join("/")
                    }
                )
            }
            ReplayError::NotCheckable => f.write_str("cited edges have no replayable witness"),
        }
    }
}

impl core::error::Error for ReplayError {}

/// Runs a step list and returns the final diagram with the delta moves used.
pub fn replay(pd: &str, steps: &[usize]) -> Result<(LinkDiagram, Vec<MoveClass>), ReplayError> {
    let mut cur = parse_pd(pd).map_err(|e| ReplayError::Parse(format!("{e}")))?;
    let mut used = Vec::new();
    for (step, &index) in steps.iter().enumerate() {
        let sites = enumerate_sites(&cur, &WITNESS_KINDS);
        let site = sites.get(index).ok_or(ReplayError::BadStep {
            step,
            index,
            available: sites.len(),
        })?;
        cur = apply(&cur, site).map_err(|_| ReplayError::BadStep {
            step,
            index,
            available: sites.len(),
        })?;
        if let Some(class) = site.kind.class() {
            used.push(class);
            cur = simplify(&cur, REPLAY_SIMPLIFY_BUDGET);
        }
    }
    Ok((cur, used))
}

/// Replays a witness and checks its endpoints, class and length.
pub fn verify_edge(
    cat: &Catalog,
    edge: &EvidenceEdge,
    engine: &mut ConwayEngine,
) -> Result<(), ReplayError> {
    let Witness::Replay { pd, steps } = &edge.witness else {
        return Err(ReplayError::NotCheckable);
    };
    let start = parse_pd(pd).map_err(|e| ReplayError::Parse(format!("{e}")))?;
    let names = |d: &LinkDiagram, engine: &mut ConwayEngine| -> Result<Vec<String>, ReplayError> {
        let fp = fingerprint(d, engine).map_err(|e| ReplayError::Parse(format!("{e}")))?;
        Ok(cat
            .identify(&fp)
            .into_iter()
            .map(|n| cat.canonical(n).to_string())
            .collect())
    };
    if !names(&start, engine)?
        .iter()
        .any(|n| n == cat.canonical(&edge.from))
    {
        return Err(ReplayError::WrongStart(edge.from.clone()));
    }
    let (end, used) = replay(pd, steps)?;
    if let Some(step) = used.iter().position(|&c| !edge.class.allows(c)) {
        return Err(ReplayError::WrongClass { step });
    }
    if used.len() as u32 != edge.length {
        return Err(ReplayError::LengthMismatch {
            claimed: edge.length,
            replayed: used.len() as u32,
        });
    }
    let found = names(&end, engine)?;
    let reached = if is_split_name(&edge.to) {
        completely_split(&end)
            && (edge.to == SPLIT || found.iter().any(|n| n == cat.canonical(&edge.to)))
    } else {
        found.iter().any(|n| n == cat.canonical(&edge.to))
    };
    if reached {
        Ok(())
    } else {
        Err(ReplayError::WrongEnd {
            expected: edge.to.clone(),
            found,
        })
    }
}

/// Undirected multigraph of delta-pathway evidence between named links.
#[derive(Clone, Debug, Default)]
pub struct PathwayGraph {
    edges: Vec<EvidenceEdge>,
}

impl PathwayGraph {
    pub fn new() -> Self {
        PathwayGraph::default()
    }

    pub fn edges(&self) -> &[EvidenceEdge] {
        &self.edges
    }

    /// Adds an edge unless an edge at least as short between the same ends
    /// with the same class is present; a replayable edge replaces a cited
    /// one of equal length.
    pub fn add(&mut self, edge: EvidenceEdge) {
        let same = |e: &EvidenceEdge| {
            e.class == edge.class
                && ((e.from == edge.from && e.to == edge.to)
                    || (e.from == edge.to && e.to == edge.from))
        };
        if let Some(i) = self.edges.iter().position(same) {
            let old = &self.edges[i];
            if edge.length < old.length
                || (edge.length == old.length && old.is_cited() && !edge.is_cited())
            {
                self.edges[i] = edge;
            }
            return;
        }
        self.edges.push(edge);
    }

    pub fn extend(&mut self, edges: impl IntoIterator<Item = EvidenceEdge>) {
        for e in edges {
            self.add(e);
        }
    }

    fn adjacency(&self, cat: &Catalog, class: MoveClass) -> BTreeMap<String, Vec<(String, u32)>> {
        let mut adj: BTreeMap<String, Vec<(String, u32)>> = BTreeMap::new();
        let node = |n: &str| cat.canonical(n).to_string();
        for e in self.edges.iter().filter(|e| class.allows(e.class)) {
            let pairs = [
                (e.from.clone(), e.to.clone()),
                (mirror_name(&e.from), mirror_name(&e.to)),
            ];
            for (a, b) in pairs {
                let (a, b) = (node(&a), node(&b));
                adj.entry(a.clone())
                    .or_default()
                    .push((b.clone(), e.length));
                adj.entry(b).or_default().push((a, e.length));
            }
        }
        adj
    }

    /// Shortest pathway of the given class from `from` to any node accepted
    /// by `target`, using mirror images of every edge as well.
    pub fn shortest_path(
        &self,
        cat: &Catalog,
        from: &str,
        target: impl Fn(&str) -> bool,
        class: MoveClass,
    ) -> Option<(u32, Vec<String>)> {
        let adj = self.adjacency(cat, class);
        let start = cat.canonical(from).to_string();
        let mut dist: BTreeMap<String, u32> = BTreeMap::from([(start.clone(), 0)]);
        let mut prev: BTreeMap<String, String> = BTreeMap::new();
        let mut done = BTreeSet::new();
        let mut heap = BinaryHeap::from([Reverse((0u32, start.clone()))]);
        while let Some(Reverse((d, n))) = heap.pop() {
            if !done.insert(n.clone()) {
                continue;
            }
            if n != start && target(&n) {
                let mut path = Vec::from([n.clone()]);
                let mut cur = n;
                while let Some(p) = prev.get(&cur) {
                    path.push(p.clone());
                    cur = p.clone();
                }
                path.reverse();
                return Some((d, path));
            }
            for (m, w) in adj.get(&n).into_iter().flatten() {
                let nd = d + w;
                if dist.get(m).is_none_or(|&old| nd < old) {
                    dist.insert(m.clone(), nd);
                    prev.insert(m.clone(), n.clone());
                    heap.push(Reverse((nd, m.clone())));
                }
            }
        }
        None
    }

    /// Length-one edges of a class whose ends are both in `nodes`, with
    /// mirrored edges mapped into `nodes` when possible.
    pub fn unit_edges_among(
        &self,
        cat: &Catalog,
        nodes: &[&str],
        class: MoveClass,
    ) -> Vec<(String, String)> {
        let want: BTreeSet<String> = nodes.iter().map(|n| cat.canonical(n).to_string()).collect();
        let mut out = BTreeSet::new();
        for e in self
            .edges
            .iter()
            .filter(|e| e.length == 1 && class.allows(e.class))
        {
            for (a, b) in [
                (e.from.clone(), e.to.clone()),
                (mirror_name(&e.from), mirror_name(&e.to)),
            ] {
                let (a, b) = (cat.canonical(&a).to_string(), cat.canonical(&b).to_string());
                if a != b && want.contains(&a) && want.contains(&b) {
                    out.insert(if a < b { (a, b) } else { (b, a) });
                }
            }
        }
        out.into_iter().collect()
    }
}
