use alloc::vec;
use alloc::vec::Vec;

use super::{Arc, Dart, LinkDiagram};

/// A face of the embedded diagram.
///
/// The boundary is the cyclic list of darts `(crossing, slot)` at which the
/// walk leaves a crossing along the arc in that slot. Each piece is traced on
/// its own sphere; a crossingless circle contributes two faces of degree 0.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Face {
    pub darts: Vec<Dart>,
}

impl Face {
    pub fn degree(&self) -> usize {
        self.darts.len()
    }

    /// Boundary arcs in walk order.
    pub fn arcs(&self, d: &LinkDiagram) -> Vec<Arc> {
        self.darts.iter().map(|&dart| d.arc_at(dart)).collect()
    }

    /// Distinct crossings at the corners, in walk order.
    pub fn corners(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.darts.iter().map(|&(c, _)| c).collect();
        out.dedup();
        out
    }
}

/// Walks every face: arriving at slot `s` the walk leaves through slot `s+1`.
pub(super) fn trace(d: &LinkDiagram) -> Vec<Face> {
    let n = d.crossing_count();
    let mut used = vec![[false; 4]; n];
    let mut faces = Vec::new();
    for c in 0..n {
        for s in 0..4 {
            if used[c][s] {
                continue;
            }
            let mut darts = Vec::new();
            let mut dart = (c, s);
            while !used[dart.0][dart.1] {
                used[dart.0][dart.1] = true;
                darts.push(dart);
                let (c2, s2) = d.other_end(dart);
                dart = (c2, (s2 + 1) % 4);
            }
            faces.push(Face { darts });
        }
    }
    faces
}

pub(super) fn faces(d: &LinkDiagram) -> Vec<Face> {
    let mut out = trace(d);
    for _ in 0..d.closed_components() {
        out.push(Face { darts: Vec::new() });
        out.push(Face { darts: Vec::new() });
    }
    out
}

#[cfg(test)]
mod tests {
    use crate::diagram::parse_pd;
    use alloc::vec::Vec;

    fn degrees(code: &str) -> Vec<usize> {
        let d = parse_pd(code).unwrap();
        let mut out: Vec<usize> = d.faces().iter().map(|f| f.degree()).collect();
        out.sort_unstable();
        out
    }

    #[test]
    fn hopf_faces_are_four_bigons() {
        assert_eq!(degrees("X(1,4,2,3) X(3,2,4,1)"), [2, 2, 2, 2]);
    }

    #[test]
    fn unknot_has_two_faces() {
        assert_eq!(degrees("+1"), [0, 0]);
    }

    #[test]
    fn trefoil_faces_hand_traced() {
        // standard alternating trefoil: two trigons (inside and outside) and three bigons
        assert_eq!(degrees("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"), [2, 2, 2, 3, 3]);
    }

    #[test]
    fn degrees_sum_to_twice_arcs() {
        let d = parse_pd("X(5,1,6,4) X(1,5,2,10) X(7,2,8,3) X(3,8,4,9) X(9,6,10,7)").unwrap();
        let total: usize = d.faces().iter().map(|f| f.degree()).sum();
        assert_eq!(total, 2 * d.arc_count());
    }
}
