use alloc::vec::Vec;

use super::{bracket, component_conways, linking_matrix, ConwayEngine, InvariantError};
use crate::diagram::LinkDiagram;
use crate::poly::{ConwayPoly, Laurent};

/// Invariant bundle used to recognise a link up to isotopy, component
/// renumbering and component orientation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Fingerprint {
    pub components: usize,
    pub linking_class: Vec<i64>,
    /// Sign-normalized Conway polynomials over all relative orientations.
    pub conway: Vec<ConwayPoly>,
    /// Sorted Conway polynomials of the individual components.
    pub component_polys: Vec<ConwayPoly>,
    /// Self-writhe normalized Kauffman bracket.
    pub bracket: Laurent,
}

impl Fingerprint {
    /// True for the fingerprint of a crossingless unlink.
    pub fn is_unlink(&self) -> bool {
        self.linking_class.iter().all(|&x| x == 0)
            && self
                .conway
                .iter()
                .all(|p| p.is_zero() || self.components == 1)
            && self.bracket == bracket::loop_value().pow(self.components.saturating_sub(1) as u32)
    }
}

pub fn fingerprint(
    d: &LinkDiagram,
    engine: &mut ConwayEngine,
) -> Result<Fingerprint, InvariantError> {
    let m = d.component_count();
    let traced = d.traced_components();
    let mut conway = Vec::new();
    let patterns = if traced <= 1 {
        1u32
    } else {
        1u32 << (traced - 1)
    };
    for mask in 0..patterns {
        let mut flip = alloc::vec![false; m];
        for (k, f) in flip
            .iter_mut()
            .enumerate()
            .skip(1)
            .take(traced.saturating_sub(1))
        {
            *f = mask >> (k - 1) & 1 == 1;
        }
        let oriented = if mask == 0 {
            d.clone()
        } else {
            d.reverse_components(&flip)
        };
        conway.push(engine.conway(&oriented)?.sign_normalized());
    }
    conway.sort();
    conway.dedup();
    let mut component_polys = component_conways(d, engine)?;
    component_polys.sort();
    Ok(Fingerprint {
        components: m,
        linking_class: linking_matrix(d).canonical_class(),
        conway,
        component_polys,
        bracket: bracket::normalized_bracket(d)?,
    })
}
