use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::InvariantError;
use crate::diagram::LinkDiagram;
use crate::moves::reduce_r1_r2;
use crate::poly::ConwayPoly;

/// Skein-relation evaluator for the Conway polynomial with a memo table keyed
/// on canonical diagram encodings.
///
/// Each call picks base points that leave few crossings first met from
/// below, then walks the diagram switching those crossings one by one:
/// `∇(D) = ∇(descending D) + Σ ±z·∇(smoothing)`. A descending diagram is an
/// unlink, so the recursion only ever grows through smoothings, each of which
/// has one crossing fewer.
#[derive(Debug)]
pub struct ConwayEngine {
    memo: BTreeMap<Vec<u32>, ConwayPoly>,
    budget: u64,
    calls: u64,
}

impl Default for ConwayEngine {
    fn default() -> Self {
        Self::with_budget(2_000_000)
    }
}

impl ConwayEngine {
    pub fn new() -> Self {
        Self::default()
    }

    /// `budget` caps the number of recursive evaluations per top-level call.
    pub fn with_budget(budget: u64) -> Self {
        ConwayEngine {
            memo: BTreeMap::new(),
            budget,
            calls: 0,
        }
    }

    pub fn memo_size(&self) -> usize {
        self.memo.len()
    }

    pub fn conway(&mut self, d: &LinkDiagram) -> Result<ConwayPoly, InvariantError> {
        self.calls = 0;
        self.eval(d.clone())
    }

    fn eval(&mut self, d: LinkDiagram) -> Result<ConwayPoly, InvariantError> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(InvariantError::ResourceLimit(
                "Conway skein recursion budget exhausted",
            ));
        }
        let d = reduce_r1_r2(&d);
        if d.is_split_diagram() {
            return Ok(ConwayPoly::zero());
        }
        if d.crossing_count() == 0 {
            return Ok(if d.component_count() == 1 {
                ConwayPoly::one()
            } else {
                ConwayPoly::zero()
            });
        }
        let key = d.canonical_key();
        if let Some(p) = self.memo.get(&key) {
            return Ok(p.clone());
        }
        let bad = descending_defects(&d);
        let mut result = if d.component_count() == 1 {
            ConwayPoly::one()
        } else {
            ConwayPoly::zero()
        };
        let mut cur = d;
        for c in bad {
            let sign = cur.crossings()[c].sign.value();
            let smoothed = self.eval(cur.smooth_crossing(c))?;
            result.add_z_times(sign, &smoothed);
            cur = cur.switch_crossing(c);
        }
        self.memo.insert(key, result.clone());
        Ok(result)
    }
}

/// Crossings first met as under-crossings when the components are walked in
/// order from greedily chosen base points.
fn descending_defects(d: &LinkDiagram) -> Vec<usize> {
    let mut visited = vec![false; d.crossing_count()];
    let mut bad = Vec::new();
    for k in 0..d.traced_components() {
        let arcs = d.component_arcs(k);
        let mut best = (usize::MAX, arcs.start);
        for start in arcs.clone() {
            let mut trial = visited.clone();
            let count = walk(d, start, &mut trial, None);
            if count < best.0 {
                best = (count, start);
            }
        }
        walk(d, best.1, &mut visited, Some(&mut bad));
    }
    bad
}

fn walk(
    d: &LinkDiagram,
    start: u32,
    visited: &mut [bool],
    mut out: Option<&mut Vec<usize>>,
) -> usize {
    let mut count = 0;
    let mut arc = start;
    loop {
        let (c, slot) = d.head(arc);
        if !visited[c] {
            visited[c] = true;
            if slot == 0 {
                count += 1;
                if let Some(out) = out.as_deref_mut() {
                    out.push(c);
                }
            }
        }
        arc = d.next_arc(arc);
        if arc == start {
            break;
        }
    }
    count
}
