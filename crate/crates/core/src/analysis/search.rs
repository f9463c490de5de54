use alloc::collections::BTreeSet;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::graph::{completely_split, EvidenceEdge, PathwayGraph, Witness, REPLAY_SIMPLIFY_BUDGET};
use super::MoveClass;
use crate::catalog::{is_split_name, Catalog, SPLIT};
use crate::diagram::{parse_pd, LinkDiagram};
use crate::invariants::{fingerprint, ConwayEngine, InvariantError};
use crate::moves::{apply, enumerate_sites, r3_closure, simplify, MoveKind, WITNESS_KINDS};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SearchConfig {
    /// Delta kinds to try; R3 moves are always allowed between them.
    pub kinds: Vec<MoveKind>,
    /// Maximum number of delta moves.
    pub depth: u32,
    /// States with more crossings after simplification are dropped.
    pub crossing_cap: usize,
    /// Maximum number of distinct states visited over the whole search.
    pub state_budget: usize,
    /// Maximum number of R3 variants explored around each state.
    pub r3_budget: usize,
    /// Also try each delta move after one R2 finger move on every R3 variant.
    pub finger_moves: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            kinds: MoveKind::DELTA.to_vec(),
            depth: 1,
            crossing_cap: 12,
            state_budget: 50_000,
            r3_budget: 50,
            finger_moves: true,
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SearchReport {
    pub graph: PathwayGraph,
    /// Distinct states visited.
    pub states: usize,
    /// States that matched no entry, or matched a split entry without a
    /// completely split diagram.
    pub unidentified: usize,
}

#[derive(Clone, Debug)]
pub enum SearchError {
    UnknownLink(String),
    Invariant(InvariantError),
    /// The state budget ran out; the partial report is kept.
    ResourceLimit(SearchReport),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::UnknownLink(n) => write!(f, "unknown link {n}"),
            SearchError::Invariant(e) => e.fmt(f),
            SearchError::ResourceLimit(r) => write!(
                f,
                "resource limit: state budget exhausted after {} states",
                r.states
            ),
        }
    }
}

impl core::error::Error for SearchError {}

impl From<InvariantError> for SearchError {
    fn from(e: InvariantError) -> Self {
        SearchError::Invariant(e)
    }
}

struct State {
    diagram: LinkDiagram,
    steps: Vec<usize>,
    classes: BTreeSet<MoveClass>,
}

fn edge_class(classes: &BTreeSet<MoveClass>) -> MoveClass {
    match classes.iter().collect::<Vec<_>>().as_slice() {
        [c] => **c,
        _ => MoveClass::Any,
    }
}

/// Breadth-first search for delta-pathways from each start entry. Every
/// state reached by `k` delta moves, with R3 moves and optionally one R2
/// finger move before each, that matches
/// a catalog entry, or is a completely split diagram, yields an edge of length `k`
/// with a replayable witness. Only the first arrival at a state is kept.
pub fn bfs_pathways(
    cat: &Catalog,
    starts: &[&str],
    cfg: &SearchConfig,
    engine: &mut ConwayEngine,
) -> Result<SearchReport, SearchError> {
    let mut report = SearchReport::default();
    for &name in starts {
        let entry = cat
            .get(name)
            .ok_or_else(|| SearchError::UnknownLink(name.to_string()))?;
        let pd = entry.diagram.to_pd_string();
        let start = parse_pd(&pd).map_err(InvariantError::from)?;
        let origin = cat.canonical(name).to_string();
        let mut seen = BTreeSet::from([start.canonical_key()]);
        let mut level = Vec::from([State {
            diagram: start,
            steps: Vec::new(),
            classes: BTreeSet::new(),
        }]);
        for depth in 1..=cfg.depth {
            let mut next_level = Vec::new();
            for state in &level {
                for (variant, r3_steps) in r3_closure(&state.diagram, cfg.r3_budget) {
                    let mut variants = Vec::from([(variant.clone(), r3_steps.clone())]);
                    if cfg.finger_moves {
                        for (i, site) in
                            enumerate_sites(&variant, &WITNESS_KINDS).iter().enumerate()
                        {
                            if site.kind != MoveKind::R2Add {
                                continue;
                            }
                            if let Ok(v) = apply(&variant, site) {
                                let mut p = r3_steps.clone();
                                p.push(i);
                                variants.push((v, p));
                            }
                        }
                    }
                    for (variant, iso_steps) in variants {
                        for (i, site) in
                            enumerate_sites(&variant, &WITNESS_KINDS).iter().enumerate()
                        {
                            if !cfg.kinds.contains(&site.kind) {
                                continue;
                            }
                            let Ok(moved) = apply(&variant, site) else {
                                continue;
                            };
                            let next = simplify(&moved, REPLAY_SIMPLIFY_BUDGET);
                            if next.crossing_count() > cfg.crossing_cap
                                || !seen.insert(next.canonical_key())
                            {
                                continue;
                            }
                            report.states += 1;
                            if report.states > cfg.state_budget {
                                return Err(SearchError::ResourceLimit(report));
                            }
                            let mut steps = state.steps.clone();
                            steps.extend(&iso_steps);
                            steps.push(i);
                            let mut classes = state.classes.clone();
                            classes.extend(site.kind.class());
                            let fp = fingerprint(&next, engine)?;
                            let hit = cat
                                .identify(&fp)
                                .first()
                                .map(|n| cat.canonical(n).to_string());
                            let split = completely_split(&next);
                            let target = match hit {
                                Some(n) if !is_split_name(&n) || split => Some(n),
                                None if split => Some(SPLIT.to_string()),
                                _ => {
                                    report.unidentified += 1;
                                    None
                                }
                            };
                            if let Some(to) = target.filter(|t| *t != origin) {
                                report.graph.add(EvidenceEdge {
                                    from: origin.clone(),
                                    to,
                                    class: edge_class(&classes),
                                    length: depth,
                                    witness: Witness::Replay {
                                        pd: pd.clone(),
                                        steps: steps.clone(),
                                    },
                                });
                            }
                            if depth < cfg.depth {
                                next_level.push(State {
                                    diagram: next,
                                    steps,
                                    classes,
                                });
                            }
                        }
                    }
                }
            }
            level = next_level;
        }
    }
    Ok(report)
}
