//! Seeded random walks through diagrams, and the invariance suites run on them.

use std::collections::BTreeSet;

use deltalink_core::diagram::parse_pd;
use deltalink_core::invariants::{component_arfs, component_conways, linking_matrix};
use deltalink_core::moves::{apply, enumerate_sites, simplify};
use deltalink_core::{ConwayEngine, LinkDiagram, MoveKind};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const STARTS: [&str; 8] = [
    "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)",
    "X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)",
    "X(5,1,6,4) X(1,5,2,10) X(7,2,8,3) X(3,8,4,9) X(9,6,10,7)",
    "X(5,1,6,4) X(1,9,2,12) X(7,2,8,3) X(3,10,4,11) X(9,5,10,8) X(11,6,12,7)",
    "X(5,1,6,4) X(1,5,2,14) X(9,2,10,3) X(3,10,4,11) X(11,6,12,7) X(7,12,8,13) X(13,8,14,9)",
    "X(5,1,6,4) X(1,10,2,11) X(2,8,3,7) X(12,3,13,4) X(14,10,5,9) X(11,7,12,6) X(8,14,9,13)",
    "X(5,1,6,4) X(1,5,2,16) X(9,2,10,3) X(3,10,4,11) X(11,6,12,7) X(7,15,8,14) X(13,9,14,8) X(15,12,16,13)",
    "X(5,1,6,4) X(1,12,2,13) X(7,2,8,3) X(3,15,4,14) X(10,12,5,11) X(13,7,14,6) X(8,17,9,18) X(16,9,17,10) X(18,16,11,15)",
];

const CROSSING_CAP: usize = 14;

/// Random walk over all move kinds, kept small by simplifying past the cap.
pub struct Walk {
    pub rng: ChaCha8Rng,
    pub cur: LinkDiagram,
}

impl Walk {
    pub fn new(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cur = parse_pd(STARTS.choose(&mut rng).unwrap()).unwrap();
        Walk { rng, cur }
    }

    pub fn restart(&mut self) {
        self.cur = parse_pd(STARTS.choose(&mut self.rng).unwrap()).unwrap();
    }

    /// Applies one random move of any kind and returns the diagrams before and after.
    pub fn step(&mut self) -> (LinkDiagram, LinkDiagram, MoveKind) {
        if self.cur.crossing_count() > CROSSING_CAP {
            self.cur = simplify(&self.cur, 200);
        }
        loop {
            let sites = enumerate_sites(&self.cur, &MoveKind::ALL);
            if let Some(site) = sites.choose(&mut self.rng) {
                let before = self.cur.clone();
                self.cur = apply(&before, site).unwrap();
                return (before, self.cur.clone(), site.kind);
            }
            self.restart();
        }
    }

    /// Wanders a few moves, then applies a random site of `kind`.
    pub fn step_of(&mut self, kind: MoveKind) -> (LinkDiagram, LinkDiagram, usize) {
        loop {
            for _ in 0..self.rng.gen_range(0..4) {
                self.step();
            }
            let sites = enumerate_sites(&self.cur, &[kind]);
            if let Some(site) = sites.choose(&mut self.rng) {
                let before = self.cur.clone();
                let (c, slot) = site.darts[0];
                let component = before.strand_component(c, slot);
                self.cur = apply(&before, site).unwrap();
                return (before, self.cur.clone(), component);
            }
            if self.rng.gen_bool(0.3) {
                self.restart();
            }
        }
    }
}

/// Counts linking-matrix changes over `moves` random moves, and the move kinds met.
pub fn linking_suite(seed: u64, moves: usize) -> (usize, BTreeSet<MoveKind>) {
    let mut walk = Walk::new(seed);
    let mut violations = 0;
    let mut seen = BTreeSet::new();
    for _ in 0..moves {
        let (before, after, kind) = walk.step();
        seen.insert(kind);
        if linking_matrix(&before) != linking_matrix(&after) {
            violations += 1;
            eprintln!(
                "{kind}: {} -> {}",
                before.to_pd_string(),
                after.to_pd_string()
            );
        }
    }
    (violations, seen)
}

/// Counts self-delta moves that do not flip exactly the Arf invariant of the moved component.
pub fn self_delta_suite(seed: u64, moves: usize) -> usize {
    let mut walk = Walk::new(seed);
    let mut engine = ConwayEngine::new();
    let mut violations = 0;
    for _ in 0..moves {
        let (before, after, k) = walk.step_of(MoveKind::DeltaSelf);
        let (a, b) = (
            component_arfs(&before, &mut engine).unwrap(),
            component_arfs(&after, &mut engine).unwrap(),
        );
        let flipped_only_k = a.len() == b.len() && (0..a.len()).all(|i| (a[i] != b[i]) == (i == k));
        if !flipped_only_k {
            violations += 1;
            eprintln!("component {k}: {a:?} -> {b:?} on {}", before.to_pd_string());
        }
    }
    violations
}

fn sorted_conways(d: &LinkDiagram, e: &mut ConwayEngine) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = component_conways(d, e)
        .unwrap()
        .iter()
        .map(|p| p.coeffs().to_vec())
        .collect();
    v.sort();
    v
}

/// Counts mixed delta moves that change the component Conway polynomials or
/// the linking matrix, and how many of the moves involved three components.
pub fn mixed_suite(seed: u64, moves: usize) -> (usize, usize) {
    let mut walk = Walk::new(seed);
    let mut engine = ConwayEngine::new();
    let (mut violations, mut done, mut triples) = (0, 0, 0);
    while done < moves {
        let kind = if walk.rng.gen_bool(0.5) {
            MoveKind::DeltaMixed2
        } else {
            MoveKind::DeltaMixed3
        };
        if kind == MoveKind::DeltaMixed3 && walk.cur.component_count() < 3 {
            walk.restart();
            continue;
        }
        let (before, after, _) = walk.step_of(kind);
        triples += usize::from(kind == MoveKind::DeltaMixed3);
        if sorted_conways(&before, &mut engine) != sorted_conways(&after, &mut engine)
            || linking_matrix(&before) != linking_matrix(&after)
        {
            violations += 1;
            eprintln!("{kind} on {}", before.to_pd_string());
        }
        done += 1;
    }
    (violations, triples)
}
