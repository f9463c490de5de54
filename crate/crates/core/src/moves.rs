//! Local moves on diagrams.
//!
//! Reductions live on monogons (R1) and on bigons whose one strand is over
//! at both corners (R2). A trigon with three distinct corners is an R3 site
//! when one strand is over at both of its corners, and a delta site when the
//! over/under pattern is cyclic (each strand over at exactly one corner).
//! Both are rewritten by the same flip: every strand is slid across the
//! opposite corner, keeping each pair's over/under relation and each
//! crossing's sign.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;
use core::fmt;

use crate::analysis::MoveClass;
use crate::diagram::{Arc, Crossing, Dart, DiagramError, Face, LinkDiagram, Sign};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum MoveKind {
    R1Reduce,
    R1Add,
    R2Reduce,
    R2Add,
    R3,
    DeltaSelf,
    DeltaMixed2,
    DeltaMixed3,
}

impl MoveKind {
    pub const ALL: [MoveKind; 8] = [
        MoveKind::R1Reduce,
        MoveKind::R1Add,
        MoveKind::R2Reduce,
        MoveKind::R2Add,
        MoveKind::R3,
        MoveKind::DeltaSelf,
        MoveKind::DeltaMixed2,
        MoveKind::DeltaMixed3,
    ];
    pub const DELTA: [MoveKind; 3] = [
        MoveKind::DeltaSelf,
        MoveKind::DeltaMixed2,
        MoveKind::DeltaMixed3,
    ];
    pub const MIXED: [MoveKind; 2] = [MoveKind::DeltaMixed2, MoveKind::DeltaMixed3];

    pub fn is_delta(self) -> bool {
        matches!(
            self,
            MoveKind::DeltaSelf | MoveKind::DeltaMixed2 | MoveKind::DeltaMixed3
        )
    }

    pub fn class(self) -> Option<MoveClass> {
        match self {
            MoveKind::DeltaSelf => Some(MoveClass::SelfDelta),
            MoveKind::DeltaMixed2 | MoveKind::DeltaMixed3 => Some(MoveClass::Mixed),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MoveKind::R1Reduce => "R1_reduce",
            MoveKind::R1Add => "R1_add",
            MoveKind::R2Reduce => "R2_reduce",
            MoveKind::R2Add => "R2_add",
            MoveKind::R3 => "R3",
            MoveKind::DeltaSelf => "DeltaSelf",
            MoveKind::DeltaMixed2 => "DeltaMixed2",
            MoveKind::DeltaMixed3 => "DeltaMixed3",
        }
    }
}

impl fmt::Display for MoveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Extra data for moves that add crossings.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Placement {
    /// Kink on `arc`; `variant` in `0..4` picks the sign and which strand
    /// passes first.
    Kink { arc: Arc, variant: u8 },
    /// Pushes the arc at boundary position `first` of the face across the
    /// arc at position `second`.
    Finger {
        first: usize,
        second: usize,
        first_over: bool,
    },
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveSite {
    pub kind: MoveKind,
    /// Face index in `LinkDiagram::faces` order; `None` for kinks.
    pub face: Option<usize>,
    pub darts: Vec<Dart>,
    pub placement: Option<Placement>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum MoveError {
    StaleSite,
    Diagram(DiagramError),
}

impl fmt::Display for MoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MoveError::StaleSite => f.write_str("move site is not valid on this diagram"),
            MoveError::Diagram(e) => e.fmt(f),
        }
    }
}

impl core::error::Error for MoveError {}

impl From<DiagramError> for MoveError {
    fn from(e: DiagramError) -> Self {
        MoveError::Diagram(e)
    }
}

/// Corners and sides of a trigon with three distinct corners. Side `k`
/// leaves corner `k` at `out_slot[k]` and enters corner `k+1` at `in_slot[k+1]`.
struct Trigon {
    corners: [usize; 3],
    out_slot: [usize; 3],
    in_slot: [usize; 3],
}

fn trigon(d: &LinkDiagram, face: &Face) -> Option<Trigon> {
    if face.degree() != 3 {
        return None;
    }
    let corners = [face.darts[0].0, face.darts[1].0, face.darts[2].0];
    if corners[0] == corners[1] || corners[1] == corners[2] || corners[0] == corners[2] {
        return None;
    }
    let out_slot = [face.darts[0].1, face.darts[1].1, face.darts[2].1];
    let mut in_slot = [0; 3];
    for k in 0..3 {
        let (c, s) = d.other_end(face.darts[k]);
        debug_assert_eq!(c, corners[(k + 1) % 3]);
        in_slot[(k + 1) % 3] = s;
    }
    Some(Trigon {
        corners,
        out_slot,
        in_slot,
    })
}

fn classify_trigon(d: &LinkDiagram, t: &Trigon) -> MoveKind {
    let cyclic = (0..3).all(|k| {
        let over_at_start = Crossing::is_over(t.out_slot[k]);
        let over_at_end = Crossing::is_over(t.in_slot[(k + 1) % 3]);
        over_at_start != over_at_end
    });
    if !cyclic {
        return MoveKind::R3;
    }
    let mut comps: Vec<usize> = (0..3)
        .map(|k| d.strand_component(t.corners[k], t.out_slot[k]))
        .collect();
    comps.sort_unstable();
    comps.dedup();
    match comps.len() {
        1 => MoveKind::DeltaSelf,
        2 => MoveKind::DeltaMixed2,
        _ => MoveKind::DeltaMixed3,
    }
}

fn is_r2_bigon(d: &LinkDiagram, face: &Face) -> bool {
    if face.degree() != 2 || face.darts[0].0 == face.darts[1].0 {
        return false;
    }
    let (_, arrive) = d.other_end(face.darts[0]);
    Crossing::is_over(face.darts[0].1) == Crossing::is_over(arrive)
}

/// All sites of the requested kinds, ordered by face index then kind, with
/// kink sites last (ordered by arc).
pub fn enumerate_sites(d: &LinkDiagram, filter: &[MoveKind]) -> Vec<MoveSite> {
    let want = |k: MoveKind| filter.contains(&k);
    let mut out = Vec::new();
    for (fi, face) in d.faces().iter().enumerate() {
        let site = |kind: MoveKind, placement| MoveSite {
            kind,
            face: Some(fi),
            darts: face.darts.clone(),
            placement,
        };
        if want(MoveKind::R1Reduce) && face.degree() == 1 {
            out.push(site(MoveKind::R1Reduce, None));
        }
        if want(MoveKind::R2Reduce) && is_r2_bigon(d, face) {
            out.push(site(MoveKind::R2Reduce, None));
        }
        if want(MoveKind::R2Add) {
            let deg = face.degree();
            for first in 0..deg {
                for second in first + 1..deg {
                    if d.arc_at(face.darts[first]) == d.arc_at(face.darts[second]) {
                        continue;
                    }
                    for first_over in [true, false] {
                        out.push(site(
                            MoveKind::R2Add,
                            Some(Placement::Finger {
                                first,
                                second,
                                first_over,
                            }),
                        ));
                    }
                }
            }
        }
        if let Some(t) = trigon(d, face) {
            let kind = classify_trigon(d, &t);
            if want(kind) {
                out.push(site(kind, None));
            }
        }
    }
    if want(MoveKind::R1Add) {
        for arc in 0..d.arc_count() as Arc {
            for variant in 0..4 {
                out.push(MoveSite {
                    kind: MoveKind::R1Add,
                    face: None,
                    darts: Vec::new(),
                    placement: Some(Placement::Kink { arc, variant }),
                });
            }
        }
        if d.crossing_count() == 0 && d.closed_components() > 0 {
            for variant in 0..4 {
                out.push(MoveSite {
                    kind: MoveKind::R1Add,
                    face: None,
                    darts: Vec::new(),
                    placement: Some(Placement::Kink {
                        arc: u32::MAX,
                        variant,
                    }),
                });
            }
        }
    }
    out
}

/// Applies a site previously enumerated on `d`.
pub fn apply(d: &LinkDiagram, site: &MoveSite) -> Result<LinkDiagram, MoveError> {
    if site.kind == MoveKind::R1Add {
        return match site.placement {
            Some(Placement::Kink { arc, variant }) if variant < 4 => add_kink(d, arc, variant),
            _ => Err(MoveError::StaleSite),
        };
    }
    let faces = d.faces();
    let face = site
        .face
        .and_then(|i| faces.get(i))
        .ok_or(MoveError::StaleSite)?;
    if face.darts != site.darts {
        return Err(MoveError::StaleSite);
    }
    match site.kind {
        MoveKind::R1Reduce if face.degree() == 1 => Ok(d.remove_crossings(&[face.darts[0].0])?),
        MoveKind::R2Reduce if is_r2_bigon(d, face) => {
            Ok(d.remove_crossings(&[face.darts[0].0, face.darts[1].0])?)
        }
        MoveKind::R2Add => match site.placement {
            Some(Placement::Finger {
                first,
                second,
                first_over,
            }) if first < second
                && second < face.degree()
                && d.arc_at(face.darts[first]) != d.arc_at(face.darts[second]) =>
            {
                add_finger(d, face.darts[first], face.darts[second], first_over)
            }
            _ => Err(MoveError::StaleSite),
        },
        MoveKind::R3 | MoveKind::DeltaSelf | MoveKind::DeltaMixed2 | MoveKind::DeltaMixed3 => {
            let t = trigon(d, face).ok_or(MoveError::StaleSite)?;
            if classify_trigon(d, &t) != site.kind {
                return Err(MoveError::StaleSite);
            }
            flip_trigon(d, &t)
        }
        _ => Err(MoveError::StaleSite),
    }
}

/// Slides every strand of the trigon across the opposite corner. At each
/// corner the slot that faced the trigon now holds the strand's far outer
/// arc, and the outer slot holds the (reused) side label.
fn flip_trigon(d: &LinkDiagram, t: &Trigon) -> Result<LinkDiagram, MoveError> {
    let mut raw: Vec<Crossing> = d.crossings().to_vec();
    let old = d.crossings();
    let mut writes: Vec<(usize, usize, Arc)> = Vec::with_capacity(12);
    for k in 0..3 {
        let (start, end) = (t.corners[k], t.corners[(k + 1) % 3]);
        let (s_out, s_in) = (t.out_slot[k], t.in_slot[(k + 1) % 3]);
        let side = old[start].arcs[s_out];
        let outer_at_start = old[start].arcs[(s_out + 2) % 4];
        let outer_at_end = old[end].arcs[(s_in + 2) % 4];
        writes.push((start, s_out, outer_at_end));
        writes.push((start, (s_out + 2) % 4, side));
        writes.push((end, s_in, outer_at_start));
        writes.push((end, (s_in + 2) % 4, side));
    }
    for (c, s, a) in writes {
        raw[c].arcs[s] = a;
    }
    Ok(LinkDiagram::from_crossings(raw, d.closed_components())?)
}

/// Builds a crossing from its four arcs listed counterclockwise with, for
/// each slot, whether the arc enters the crossing and whether it is over.
fn crossing_from_ccw(arcs: [Arc; 4], incoming: [bool; 4], over: [bool; 4]) -> Crossing {
    let k = (0..4)
        .find(|&s| incoming[s] && !over[s])
        .expect("one incoming under-arc");
    let o = (0..4)
        .find(|&s| incoming[s] && over[s])
        .expect("one incoming over-arc");
    let rotated = [
        arcs[k],
        arcs[(k + 1) % 4],
        arcs[(k + 2) % 4],
        arcs[(k + 3) % 4],
    ];
    let sign = if (o + 4 - k) % 4 == 3 {
        Sign::Positive
    } else {
        Sign::Negative
    };
    Crossing::new(rotated, sign)
}

fn add_kink(d: &LinkDiagram, arc: Arc, variant: u8) -> Result<LinkDiagram, MoveError> {
    let n = d.arc_count() as Arc;
    let mut raw: Vec<Crossing> = d.crossings().to_vec();
    let mut closed = d.closed_components();
    let (first, last, lp) = if arc == u32::MAX {
        // kink on a crossingless circle
        if closed == 0 || !raw.is_empty() {
            return Err(MoveError::StaleSite);
        }
        closed -= 1;
        (0, 0, 1)
    } else {
        if arc >= n {
            return Err(MoveError::StaleSite);
        }
        let (hc, hs) = d.head(arc);
        raw[hc].arcs[hs] = n + 1;
        (arc, n + 1, n)
    };
    let arcs = match variant {
        0 => Crossing::new([first, lp, lp, last], Sign::Negative),
        1 => Crossing::new([first, last, lp, lp], Sign::Positive),
        2 => Crossing::new([lp, first, last, lp], Sign::Negative),
        _ => Crossing::new([lp, lp, last, first], Sign::Positive),
    };
    raw.push(arcs);
    Ok(LinkDiagram::from_crossings(raw, closed)?)
}

/// Finger move of the arc leaving at `e_dart` across the arc leaving at
/// `f_dart`, both on the boundary of one face (the face lies to the right of
/// the boundary walk).
fn add_finger(
    d: &LinkDiagram,
    e_dart: Dart,
    f_dart: Dart,
    e_over: bool,
) -> Result<LinkDiagram, MoveError> {
    let n = d.arc_count() as Arc;
    let mut raw: Vec<Crossing> = d.crossings().to_vec();
    let (e, f) = (d.arc_at(e_dart), d.arc_at(f_dart));
    let e_fwd = !d.crossings()[e_dart.0].is_incoming(e_dart.1);
    let f_fwd = !d.crossings()[f_dart.0].is_incoming(f_dart.1);
    let (e1, e2, e3) = (e, n, n + 1);
    let (f1, f2, f3) = (f, n + 2, n + 3);
    let e_far = d.other_end(e_dart);
    let f_far = d.other_end(f_dart);
    raw[e_far.0].arcs[e_far.1] = e3;
    raw[f_far.0].arcs[f_far.1] = f3;
    let over_e = [e_over, !e_over, e_over, !e_over];
    // q: south e1, east f3, north e2, west f2
    let q = crossing_from_ccw([e1, f3, e2, f2], [e_fwd, !f_fwd, !e_fwd, f_fwd], over_e);
    // p: south e3, east f2, north e2, west f1
    let p = crossing_from_ccw([e3, f2, e2, f1], [!e_fwd, !f_fwd, e_fwd, f_fwd], over_e);
    raw.push(q);
    raw.push(p);
    Ok(LinkDiagram::from_crossings(raw, d.closed_components())?)
}

fn reduce_once(d: &LinkDiagram) -> Option<LinkDiagram> {
    let faces = d.faces();
    if let Some(f) = faces.iter().find(|f| f.degree() == 1) {
        return d.remove_crossings(&[f.darts[0].0]).ok();
    }
    let f = faces.iter().find(|f| is_r2_bigon(d, f))?;
    d.remove_crossings(&[f.darts[0].0, f.darts[1].0]).ok()
}

/// Greedy R1/R2 reductions until none applies.
pub fn reduce_r1_r2(d: &LinkDiagram) -> LinkDiagram {
    let mut cur = d.clone();
    while let Some(next) = reduce_once(&cur) {
        cur = next;
    }
    cur
}

/// R1/R2 reductions interleaved with a breadth-first R3 exploration (at most
/// `budget` diagrams per stall) that looks for a diagram where a reduction
/// applies. Deterministic; never increases the crossing count.
pub fn simplify(d: &LinkDiagram, budget: usize) -> LinkDiagram {
    let mut cur = reduce_r1_r2(d);
    'outer: loop {
        if cur.crossing_count() == 0 || budget == 0 {
            return cur;
        }
        let mut seen = BTreeSet::from([cur.canonical_key()]);
        let mut queue = VecDeque::from([cur.clone()]);
        let mut explored = 0;
        while let Some(state) = queue.pop_front() {
            for site in enumerate_sites(&state, &[MoveKind::R3]) {
                let Ok(next) = apply(&state, &site) else {
                    continue;
                };
                if let Some(reduced) = reduce_once(&next) {
                    cur = reduce_r1_r2(&reduced);
                    continue 'outer;
                }
                if seen.insert(next.canonical_key()) {
                    explored += 1;
                    if explored >= budget {
                        return cur;
                    }
                    queue.push_back(next);
                }
            }
        }
        return cur;
    }
}

/// Kinds indexed by replayable step lists.
pub const WITNESS_KINDS: [MoveKind; 5] = [
    MoveKind::R2Add,
    MoveKind::R3,
    MoveKind::DeltaSelf,
    MoveKind::DeltaMixed2,
    MoveKind::DeltaMixed3,
];

/// Diagrams reachable from `d` by R3 moves, breadth first, at most `budget`
/// of them, `d` first. Each comes with its path as indices into
/// `enumerate_sites(_, &WITNESS_KINDS)` of the successive diagrams.
pub fn r3_closure(d: &LinkDiagram, budget: usize) -> Vec<(LinkDiagram, Vec<usize>)> {
    let mut out = Vec::new();
    let mut seen = BTreeSet::from([d.canonical_key()]);
    let mut queue = VecDeque::from([(d.clone(), Vec::new())]);
    while let Some((state, path)) = queue.pop_front() {
        for (i, site) in enumerate_sites(&state, &WITNESS_KINDS).iter().enumerate() {
            if site.kind != MoveKind::R3 || seen.len() >= budget.max(1) {
                continue;
            }
            if let Ok(next) = apply(&state, site) {
                if seen.insert(next.canonical_key()) {
                    let mut p: Vec<usize> = path.clone();
                    p.push(i);
                    queue.push_back((next, p));
                }
            }
        }
        out.push((state, path));
    }
    out
}
