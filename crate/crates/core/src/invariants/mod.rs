//! Link invariants: linking matrix, Conway polynomial, Arf invariant, the
//! self-delta classification pair and an identification fingerprint.

mod bracket;
mod conway;
mod fingerprint;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::{DiagramError, LinkDiagram};
use crate::poly::ConwayPoly;

pub use bracket::{
    bracket_certifies_nonsplit, jones_in_a, kauffman_bracket, loop_value, normalized_bracket,
};
pub use conway::ConwayEngine;
pub use fingerprint::{fingerprint, Fingerprint};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum InvariantError {
    Diagram(DiagramError),
    ResourceLimit(&'static str),
    WrongComponentCount { expected: usize, found: usize },
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::Diagram(e) => e.fmt(f),
            InvariantError::ResourceLimit(what) => write!(f, "resource limit: {what}"),
            InvariantError::WrongComponentCount { expected, found } => {
                write!(
                    f,
                    "expected a {expected}-component link, got {found} components"
                )
            }
        }
    }
}

impl core::error::Error for InvariantError {}

impl From<DiagramError> for InvariantError {
    fn from(e: DiagramError) -> Self {
        InvariantError::Diagram(e)
    }
}

/// Symmetric matrix of pairwise linking numbers with zero diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinkingMatrix {
    m: usize,
    entries: Vec<i64>,
}

impl LinkingMatrix {
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let m = rows.len();
        LinkingMatrix {
            m,
            entries: rows.iter().flatten().copied().collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.m + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// `Σ_{i<j} lk(L_i, L_j)`.
    pub fn pair_sum(&self) -> i64 {
        (0..self.m)
            .flat_map(|i| (i + 1..self.m).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j))
            .sum()
    }

    /// Upper triangle, lexicographically least over simultaneous component
    /// permutations and per-component orientation flips.
    pub fn canonical_class(&self) -> Vec<i64> {
        let m = self.m;
        let mut best: Option<Vec<i64>> = None;
        let mut perm: Vec<usize> = (0..m).collect();
        let flips = if m == 0 { 1 } else { 1u32 << (m - 1) };
        loop {
            for mask in 0..flips {
                let sign = |k: usize| {
                    if k > 0 && mask >> (k - 1) & 1 == 1 {
                        -1
                    } else {
                        1
                    }
                };
                let mut v = Vec::with_capacity(m * m.saturating_sub(1) / 2);
                for i in 0..m {
                    for j in i + 1..m {
                        v.push(self.get(perm[i], perm[j]) * sign(perm[i]) * sign(perm[j]));
                    }
                }
                if best.as_ref().is_none_or(|b| v < *b) {
                    best = Some(v);
                }
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        best.unwrap_or_default()
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[allow(clippy::needless_range_loop)]
pub fn linking_matrix(d: &LinkDiagram) -> LinkingMatrix {
    let m = d.component_count();
    let mut rows = vec![vec![0i64; m]; m];
    for i in 0..d.traced_components() {
        for j in i + 1..d.traced_components() {
            let lk = d.signed_crossings_between(i, j) / 2;
            rows[i][j] = lk;
            rows[j][i] = lk;
        }
    }
    LinkingMatrix::from_rows(&rows)
}

/// Proper links have an even sum of pairwise linking numbers.
pub fn is_proper(d: &LinkDiagram) -> bool {
    linking_matrix(d).pair_sum() % 2 == 0
}

/// Arf invariant of a proper link, `None` for links that are not proper.
///
/// For a knot this is `a2 mod 2`. For links it is read off the Jones
/// polynomial at `t = i`: `V_L(i) = (-sqrt 2)^(m-1) (-1)^Arf(L)`.
pub fn arf(d: &LinkDiagram, engine: &mut ConwayEngine) -> Result<Option<u8>, InvariantError> {
    if !is_proper(d) {
        return Ok(None);
    }
    if d.component_count() == 1 {
        return Ok(Some(engine.conway(d)?.coeff(2).rem_euclid(2) as u8));
    }
    let v = bracket::jones_at_i(d)?;
    let target = bracket::minus_sqrt2_pow(d.component_count() - 1);
    if v == target {
        Ok(Some(0))
    } else if v == target.map(|c| -c) {
        Ok(Some(1))
    } else {
        Err(InvariantError::ResourceLimit(
            "Jones value at t = i outside the proper-link range",
        ))
    }
}

/// Arf invariants of the individual components, in component order.
pub fn component_arfs(
    d: &LinkDiagram,
    engine: &mut ConwayEngine,
) -> Result<Vec<u8>, InvariantError> {
    (0..d.component_count())
        .map(|k| {
            let knot = d.sublink(&[k])?;
            Ok(engine.conway(&knot)?.coeff(2).rem_euclid(2) as u8)
        })
        .collect()
}

/// The pair `(δ1, δ2)` classifying 2-component links up to self delta moves.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FamilyKey {
    pub delta1: i64,
    pub delta2: i64,
}

impl FamilyKey {
    /// Mirror-insensitive class `(|δ1|, |δ2|)`.
    pub fn class(self) -> (i64, i64) {
        (self.delta1.abs(), self.delta2.abs())
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.delta1, self.delta2)
    }
}

/// `δ1 = a1(L)`, `δ2 = a3(L) - a2(L) (a2(L1) + a2(L2))`.
pub fn delta_invariants(
    d: &LinkDiagram,
    engine: &mut ConwayEngine,
) -> Result<FamilyKey, InvariantError> {
    let found = d.component_count();
    if found != 2 {
        return Err(InvariantError::WrongComponentCount { expected: 2, found });
    }
    let link = engine.conway(d)?;
    let k1 = engine.conway(&d.sublink(&[0])?)?;
    let k2 = engine.conway(&d.sublink(&[1])?)?;
    Ok(FamilyKey {
        delta1: link.coeff(1),
        delta2: link.coeff(3) - link.coeff(2) * (k1.coeff(2) + k2.coeff(2)),
    })
}

/// Conway polynomials of the single components, in component order.
pub fn component_conways(
    d: &LinkDiagram,
    engine: &mut ConwayEngine,
) -> Result<Vec<ConwayPoly>, InvariantError> {
    (0..d.component_count())
        .map(|k| engine.conway(&d.sublink(&[k])?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    const HOPF: &str = "X(1,4,2,3) X(3,2,4,1)";
    const TREFOIL: &str = "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)";
    const FIGURE_EIGHT: &str = "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)";
    const WHITEHEAD: &str = "X(5,1,6,4) X(1,5,2,10) X(7,2,8,3) X(3,8,4,9) X(9,6,10,7)";

    fn conway(code: &str) -> ConwayPoly {
        ConwayEngine::new()
            .conway(&parse_pd(code).unwrap())
            .unwrap()
    }

    #[test]
    fn hopf_links_once() {
        let lk = linking_matrix(&parse_pd(HOPF).unwrap());
        assert_eq!(lk.get(0, 1).abs(), 1);
        assert_eq!(lk.get(0, 0), 0);
        assert_eq!(
            conway(HOPF)
                .coeffs()
                .iter()
                .map(|c| c.abs())
                .collect::<Vec<_>>(),
            [0, 1]
        );
    }

    #[test]
    fn base_cases() {
        assert_eq!(
            ConwayEngine::new().conway(&LinkDiagram::unlink(1)).unwrap(),
            ConwayPoly::one()
        );
        assert!(ConwayEngine::new()
            .conway(&LinkDiagram::unlink(3))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn small_knots() {
        assert_eq!(conway(TREFOIL), ConwayPoly::from_coeffs(vec![1, 0, 1]));
        assert_eq!(
            conway(FIGURE_EIGHT),
            ConwayPoly::from_coeffs(vec![1, 0, -1])
        );
    }

    #[test]
    fn whitehead_is_cubic() {
        let p = conway(WHITEHEAD);
        assert_eq!(p.coeff(1), 0);
        assert_eq!(p.coeff(3).abs(), 1);
        assert_eq!(p.degree(), Some(3));
    }

    #[test]
    fn split_unions_vanish() {
        let t = parse_pd(TREFOIL).unwrap();
        let u = t.disjoint_union(&parse_pd(FIGURE_EIGHT).unwrap());
        assert!(ConwayEngine::new().conway(&u).unwrap().is_zero());
        assert!(linking_matrix(&u).is_zero());
    }

    #[test]
    fn arf_values() {
        let mut e = ConwayEngine::new();
        assert_eq!(arf(&parse_pd(TREFOIL).unwrap(), &mut e).unwrap(), Some(1));
        assert_eq!(
            arf(&parse_pd(FIGURE_EIGHT).unwrap(), &mut e).unwrap(),
            Some(1)
        );
        assert_eq!(arf(&LinkDiagram::unlink(3), &mut e).unwrap(), Some(0));
        assert_eq!(arf(&parse_pd(HOPF).unwrap(), &mut e).unwrap(), None);
        assert_eq!(arf(&parse_pd(WHITEHEAD).unwrap(), &mut e).unwrap(), Some(1));
    }

    #[test]
    fn trivial_link_family() {
        let mut e = ConwayEngine::new();
        let key = delta_invariants(&LinkDiagram::unlink(2), &mut e).unwrap();
        assert_eq!(
            key,
            FamilyKey {
                delta1: 0,
                delta2: 0
            }
        );
        assert!(matches!(
            delta_invariants(&LinkDiagram::unlink(3), &mut e),
            Err(InvariantError::WrongComponentCount {
                expected: 2,
                found: 3
            })
        ));
    }

    #[test]
    fn linking_class_ignores_order_and_orientation() {
        let a = LinkingMatrix::from_rows(&[vec![0, 3, 2], vec![3, 0, -1], vec![2, -1, 0]]);
        let b = LinkingMatrix::from_rows(&[vec![0, -1, 3], vec![-1, 0, 2], vec![3, 2, 0]]);
        let c = LinkingMatrix::from_rows(&[vec![0, -3, 2], vec![-3, 0, 1], vec![2, 1, 0]]);
        assert_eq!(a.canonical_class(), b.canonical_class());
        assert_eq!(a.canonical_class(), c.canonical_class());
    }
}
