//! Oriented planar link diagrams.
//!
//! A diagram is a list of crossings in PD form: four arc labels listed
//! counterclockwise starting from the incoming under-arc. PD tuples do not
//! record which way the over-strand runs, so each [`Crossing`] also carries
//! its sign; together with the slot order that fixes the orientation of every
//! arc. Crossingless unknotted components are carried as a separate count.
//!
//! Every constructor normalizes: arcs are relabelled `0..2n` so that each
//! traced component is a run of consecutive labels in orientation order, and
//! the result is re-validated (arc pairing, orientation, planarity).

mod canon;
mod faces;
mod pd;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::dsu::Dsu;

pub use faces::Face;
pub use pd::parse_pd;

/// Arc label.
pub type Arc = u32;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flipped(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

/// One crossing: `arcs[0] -> arcs[2]` is the under-strand, `arcs[1]`/`arcs[3]`
/// the over-strand. The over-strand enters at slot 3 for a positive crossing
/// and at slot 1 for a negative one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Crossing {
    pub arcs: [Arc; 4],
    pub sign: Sign,
}

impl Crossing {
    pub fn new(arcs: [Arc; 4], sign: Sign) -> Self {
        Crossing { arcs, sign }
    }

    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out(&self) -> usize {
        4 - self.over_in()
    }

    pub fn is_incoming(&self, slot: usize) -> bool {
        slot == 0 || slot == self.over_in()
    }

    pub fn is_over(slot: usize) -> bool {
        slot % 2 == 1
    }

    /// Same position in the plane with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let [a, b, c, d] = self.arcs;
        match self.sign {
            Sign::Positive => Crossing::new([d, a, b, c], Sign::Negative),
            Sign::Negative => Crossing::new([b, c, d, a], Sign::Positive),
        }
    }

    fn reverse_strands(&self, under: bool, over: bool) -> Crossing {
        let mut out = *self;
        if under {
            let [a, b, c, d] = self.arcs;
            out.arcs = [c, d, a, b];
            out.sign = out.sign.flipped();
        }
        if over {
            out.sign = out.sign.flipped();
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum DiagramError {
    MalformedInput(String),
    NonPlanar { faces: usize, expected: usize },
    DanglingArc { arc: Arc, occurrences: usize },
    EmptySelection,
    NoSuchComponent(usize),
}

impl fmt::Display for DiagramError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiagramError::MalformedInput(msg) => write!(f, "malformed PD code: {msg}"),
            DiagramError::NonPlanar { faces, expected } => write!(
                f,
                "diagram is not planar: traced {faces} faces, a planar diagram needs {expected}"
            ),
            DiagramError::DanglingArc { arc, occurrences } => {
                write!(
                    f,
                    "arc {arc} occurs {occurrences} times, expected exactly 2"
                )
            }
            DiagramError::EmptySelection => f.write_str("empty component selection"),
            DiagramError::NoSuchComponent(k) => write!(f, "no component with index {k}"),
        }
    }
}

impl core::error::Error for DiagramError {}

/// Position of one arc end: crossing index and slot.
pub type Dart = (usize, usize);

/// A validated, normalized oriented link diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkDiagram {
    crossings: Vec<Crossing>,
    closed: usize,
    /// First label of each traced component; component `k` owns
    /// `starts[k]..starts[k+1]` (or up to the arc count).
    starts: Vec<Arc>,
    heads: Vec<Dart>,
    tails: Vec<Dart>,
}

impl LinkDiagram {
    /// Crossingless diagram of the `m`-component trivial link.
    pub fn unlink(m: usize) -> Self {
        LinkDiagram {
            crossings: Vec::new(),
            closed: m,
            starts: Vec::new(),
            heads: Vec::new(),
            tails: Vec::new(),
        }
    }

    /// Builds a diagram from oriented crossings with arbitrary labels.
    pub fn from_crossings(crossings: Vec<Crossing>, closed: usize) -> Result<Self, DiagramError> {
        let d = Self::normalize(crossings, closed)?;
        d.check_planar()?;
        Ok(d)
    }

    fn normalize(raw: Vec<Crossing>, closed: usize) -> Result<Self, DiagramError> {
        let n = raw.len();
        let mut labels: Vec<Arc> = raw.iter().flat_map(|c| c.arcs).collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() != 2 * n {
            // some label is not used exactly twice
            let mut all: Vec<Arc> = raw.iter().flat_map(|c| c.arcs).collect();
            all.sort_unstable();
            for w in all.chunk_by(|a, b| a == b) {
                if w.len() != 2 {
                    return Err(DiagramError::DanglingArc {
                        arc: w[0],
                        occurrences: w.len(),
                    });
                }
            }
        }
        let idx = |a: Arc| labels.binary_search(&a).unwrap();
        let none = (usize::MAX, usize::MAX);
        let mut head = vec![none; 2 * n];
        let mut tail = vec![none; 2 * n];
        for (ci, c) in raw.iter().enumerate() {
            for s in 0..4 {
                let slot = if c.is_incoming(s) {
                    &mut head[idx(c.arcs[s])]
                } else {
                    &mut tail[idx(c.arcs[s])]
                };
                if *slot != none {
                    return Err(DiagramError::MalformedInput(String::from(
                        "inconsistent orientation: an arc enters or leaves crossings twice",
                    )));
                }
                *slot = (ci, s);
            }
        }
        let mut relabel = vec![u32::MAX; 2 * n];
        let mut starts = Vec::new();
        let mut next_label = 0u32;
        for ci in 0..n {
            for s in 0..4 {
                let first = idx(raw[ci].arcs[s]);
                if relabel[first] != u32::MAX {
                    continue;
                }
                starts.push(next_label);
                let mut cur = first;
                loop {
                    relabel[cur] = next_label;
                    next_label += 1;
                    let (hc, hs) = head[cur];
                    cur = idx(raw[hc].arcs[(hs + 2) % 4]);
                    if cur == first {
                        break;
                    }
                }
            }
        }
        let crossings: Vec<Crossing> = raw
            .iter()
            .map(|c| Crossing::new(c.arcs.map(|a| relabel[idx(a)]), c.sign))
            .collect();
        let mut heads = vec![none; 2 * n];
        let mut tails = vec![none; 2 * n];
        for (ci, c) in crossings.iter().enumerate() {
            for s in 0..4 {
                if c.is_incoming(s) {
                    heads[c.arcs[s] as usize] = (ci, s);
                } else {
                    tails[c.arcs[s] as usize] = (ci, s);
                }
            }
        }
        Ok(LinkDiagram {
            crossings,
            closed,
            starts,
            heads,
            tails,
        })
    }

    fn check_planar(&self) -> Result<(), DiagramError> {
        if self.crossings.is_empty() {
            return Ok(());
        }
        let faces = faces::trace(self).len();
        let expected = self.crossings.len() + 2 * self.piece_count();
        if faces != expected {
            return Err(DiagramError::NonPlanar { faces, expected });
        }
        Ok(())
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn arc_count(&self) -> usize {
        2 * self.crossings.len()
    }

    /// Number of crossingless unknotted components.
    pub fn closed_components(&self) -> usize {
        self.closed
    }

    /// Components passing through at least one crossing.
    pub fn traced_components(&self) -> usize {
        self.starts.len()
    }

    pub fn component_count(&self) -> usize {
        self.starts.len() + self.closed
    }

    /// Component index of an arc; traced components come first.
    pub fn arc_component(&self, arc: Arc) -> usize {
        match self.starts.binary_search(&arc) {
            Ok(k) => k,
            Err(k) => k - 1,
        }
    }

    /// Arc labels of traced component `k`, in orientation order.
    pub fn component_arcs(&self, k: usize) -> core::ops::Range<Arc> {
        let end = self
            .starts
            .get(k + 1)
            .copied()
            .unwrap_or(self.arc_count() as Arc);
        self.starts[k]..end
    }

    /// Where the arc ends (enters a crossing).
    pub fn head(&self, arc: Arc) -> Dart {
        self.heads[arc as usize]
    }

    /// Where the arc starts (leaves a crossing).
    pub fn tail(&self, arc: Arc) -> Dart {
        self.tails[arc as usize]
    }

    pub fn arc_at(&self, (c, s): Dart) -> Arc {
        self.crossings[c].arcs[s]
    }

    /// The opposite end of the arc sitting at `dart`.
    pub fn other_end(&self, dart: Dart) -> Dart {
        let arc = self.arc_at(dart);
        if self.crossings[dart.0].is_incoming(dart.1) {
            self.tail(arc)
        } else {
            self.head(arc)
        }
    }

    /// The arc following `arc` along its component.
    pub fn next_arc(&self, arc: Arc) -> Arc {
        let (c, s) = self.head(arc);
        self.crossings[c].arcs[(s + 2) % 4]
    }

    /// Component of the strand occupying `slot` at crossing `c`.
    pub fn strand_component(&self, c: usize, slot: usize) -> usize {
        self.arc_component(self.crossings[c].arcs[slot])
    }

    /// Piece index per crossing, where pieces are the connected parts of the
    /// underlying 4-valent graph.
    pub fn piece_ids(&self) -> Vec<usize> {
        let n = self.crossings.len();
        let mut dsu = Dsu::new(n);
        for a in 0..self.arc_count() as Arc {
            dsu.union(self.head(a).0 as u32, self.tail(a).0 as u32);
        }
        let mut ids = vec![usize::MAX; n];
        let mut root_id: Vec<(u32, usize)> = Vec::new();
        for (c, id) in ids.iter_mut().enumerate() {
            let r = dsu.find(c as u32);
            *id = match root_id.iter().find(|(root, _)| *root == r) {
                Some(&(_, k)) => k,
                None => {
                    root_id.push((r, root_id.len()));
                    root_id.len() - 1
                }
            };
        }
        ids
    }

    pub fn piece_count(&self) -> usize {
        self.piece_ids().into_iter().max().map_or(0, |k| k + 1)
    }

    /// True when the diagram itself is disconnected, which certifies a split link.
    pub fn is_split_diagram(&self) -> bool {
        self.piece_count() + self.closed > 1
    }

    pub fn faces(&self) -> Vec<Face> {
        faces::faces(self)
    }

    /// Canonical encoding, invariant under relabelling arcs, reordering
    /// crossings and renumbering components. Equal keys mean equal diagrams up
    /// to planar isotopy of each piece.
    pub fn canonical_key(&self) -> Vec<u32> {
        canon::canonical_key(self)
    }

    /// PD text using 1-based labels, with a `+k` suffix for crossingless components.
    pub fn to_pd_string(&self) -> String {
        pd::print(self)
    }

    /// Sum of crossing signs over crossings between components `i` and `j`,
    /// or of self-crossings of `i` when `i == j`.
    pub fn signed_crossings_between(&self, i: usize, j: usize) -> i64 {
        self.crossings
            .iter()
            .enumerate()
            .filter(|&(ci, _)| {
                let (u, o) = (self.strand_component(ci, 0), self.strand_component(ci, 1));
                (u == i && o == j) || (u == j && o == i)
            })
            .map(|(_, c)| c.sign.value())
            .sum()
    }

    /// Sum of signs of crossings whose strands belong to the same component.
    pub fn self_writhe(&self) -> i64 {
        (0..self.crossings.len())
            .filter(|&c| self.strand_component(c, 0) == self.strand_component(c, 1))
            .map(|c| self.crossings[c].sign.value())
            .sum()
    }

    pub fn mirror(&self) -> LinkDiagram {
        let raw = self.crossings.iter().map(Crossing::switched).collect();
        Self::from_crossings(raw, self.closed).expect("mirror preserves validity")
    }

    /// The diagram with crossing `c` switched.
    pub fn switch_crossing(&self, c: usize) -> LinkDiagram {
        let mut raw = self.crossings.clone();
        raw[c] = raw[c].switched();
        Self::from_crossings(raw, self.closed).expect("switching preserves validity")
    }

    /// Oriented smoothing of crossing `c`.
    pub fn smooth_crossing(&self, c: usize) -> LinkDiagram {
        let x = self.crossings[c];
        let joins = [
            (x.arcs[0], x.arcs[x.over_out()]),
            (x.arcs[x.over_in()], x.arcs[2]),
        ];
        self.splice(&[c], &joins, None)
            .expect("smoothing preserves validity")
    }

    /// Removes crossings, letting both strands pass straight through each.
    pub(crate) fn remove_crossings(&self, remove: &[usize]) -> Result<LinkDiagram, DiagramError> {
        let joins: Vec<(Arc, Arc)> = remove
            .iter()
            .flat_map(|&c| {
                let a = self.crossings[c].arcs;
                [(a[0], a[2]), (a[1], a[3])]
            })
            .collect();
        self.splice(remove, &joins, None)
    }

    /// Deletes `remove`, identifies each joined pair of arcs, and turns label
    /// classes that no longer touch a crossing into crossingless components.
    /// Classes made only of arcs on components flagged in `dropped` vanish.
    fn splice(
        &self,
        remove: &[usize],
        joins: &[(Arc, Arc)],
        dropped: Option<&[bool]>,
    ) -> Result<LinkDiagram, DiagramError> {
        let mut dsu = Dsu::new(self.arc_count());
        for &(a, b) in joins {
            dsu.union(a, b);
        }
        let mut removed = vec![false; self.crossings.len()];
        for &c in remove {
            removed[c] = true;
        }
        let mut raw = Vec::with_capacity(self.crossings.len() - remove.len());
        let mut touched = vec![false; self.arc_count()];
        for (ci, c) in self.crossings.iter().enumerate() {
            if removed[ci] {
                continue;
            }
            let arcs = c.arcs.map(|a| dsu.find(a));
            for a in arcs {
                touched[a as usize] = true;
            }
            raw.push(Crossing::new(arcs, c.sign));
        }
        let mut closed = self.closed;
        if let Some(dropped) = dropped {
            closed = (self.starts.len()..self.component_count())
                .filter(|&k| !dropped[k])
                .count();
        }
        let mut counted = vec![false; self.arc_count()];
        for a in 0..self.arc_count() as Arc {
            let r = dsu.find(a) as usize;
            if touched[r] || counted[r] {
                continue;
            }
            counted[r] = true;
            if dropped.is_some_and(|dr| dr[self.arc_component(a)]) {
                continue;
            }
            closed += 1;
        }
        Self::from_crossings(raw, closed)
    }

    /// Diagram of the components listed in `keep`; crossings with removed
    /// components are deleted and the surviving strand passes straight through.
    pub fn sublink(&self, keep: &[usize]) -> Result<LinkDiagram, DiagramError> {
        if keep.is_empty() {
            return Err(DiagramError::EmptySelection);
        }
        let m = self.component_count();
        let mut dropped = vec![true; m];
        for &k in keep {
            if k >= m {
                return Err(DiagramError::NoSuchComponent(k));
            }
            dropped[k] = false;
        }
        let remove: Vec<usize> = (0..self.crossings.len())
            .filter(|&c| {
                dropped[self.strand_component(c, 0)] || dropped[self.strand_component(c, 1)]
            })
            .collect();
        let joins: Vec<(Arc, Arc)> = remove
            .iter()
            .flat_map(|&c| {
                let a = self.crossings[c].arcs;
                [(a[0], a[2]), (a[1], a[3])]
            })
            .collect();
        self.splice(&remove, &joins, Some(&dropped))
    }

    /// Side-by-side union; no new crossings.
    pub fn disjoint_union(&self, other: &LinkDiagram) -> LinkDiagram {
        let offset = self.arc_count() as Arc;
        let raw = self
            .crossings
            .iter()
            .copied()
            .chain(
                other
                    .crossings
                    .iter()
                    .map(|c| Crossing::new(c.arcs.map(|a| a + offset), c.sign)),
            )
            .collect();
        Self::from_crossings(raw, self.closed + other.closed).expect("union preserves validity")
    }

    /// Reverses the orientation of every component flagged in `flip`.
    pub fn reverse_components(&self, flip: &[bool]) -> LinkDiagram {
        let raw = self
            .crossings
            .iter()
            .enumerate()
            .map(|(ci, c)| {
                let under = flip[self.strand_component(ci, 0)];
                let over = flip[self.strand_component(ci, 1)];
                c.reverse_strands(under, over)
            })
            .collect();
        Self::from_crossings(raw, self.closed).expect("reversal preserves validity")
    }
}

impl fmt::Display for LinkDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_pd_string())
    }
}
