use alloc::vec;

use super::InvariantError;
use crate::diagram::LinkDiagram;
use crate::dsu::Dsu;
use crate::poly::Laurent;

const MAX_STATE_CROSSINGS: usize = 22;

/// `d = -A^2 - A^-2`, the value of an extra circle.
pub fn loop_value() -> Laurent {
    Laurent::from_parts(-2, vec![-1, 0, 0, 0, -1])
}

/// Kauffman bracket by state sum, normalized so a single circle is 1.
///
/// At `X(a,b,c,d)` the A-smoothing joins `a` with `b` and `c` with `d`.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<Laurent, InvariantError> {
    let n = d.crossing_count();
    if n > MAX_STATE_CROSSINGS {
        return Err(InvariantError::ResourceLimit(
            "too many crossings for the bracket state sum",
        ));
    }
    // tally[a_count][loops]
    let max_loops = 2 * n + d.closed_components() + 1;
    let mut tally = vec![vec![0u64; max_loops + 1]; n + 1];
    let arcs = d.arc_count();
    for state in 0u64..(1u64 << n) {
        let mut dsu = Dsu::new(arcs);
        let mut loops = arcs;
        for (i, x) in d.crossings().iter().enumerate() {
            let [a, b, c, e] = x.arcs;
            let (p, q) = if state >> i & 1 == 0 {
                ((a, b), (c, e))
            } else {
                ((a, e), (b, c))
            };
            loops -= dsu.union(p.0, p.1) as usize;
            loops -= dsu.union(q.0, q.1) as usize;
        }
        let a_count = n - state.count_ones() as usize;
        tally[a_count][loops + d.closed_components()] += 1;
    }
    let delta = loop_value();
    let mut delta_pows = vec![Laurent::monomial(1, 0)];
    for k in 1..=max_loops {
        delta_pows.push(delta_pows[k - 1].mul(&delta));
    }
    let mut total = Laurent::zero();
    for (a_count, row) in tally.iter().enumerate() {
        for (loops, &count) in row.iter().enumerate() {
            if count == 0 || loops == 0 {
                continue;
            }
            let exp = a_count as i32 - (n - a_count) as i32;
            total = total.add(&delta_pows[loops - 1].shift(exp).scale(count as i64));
        }
    }
    if n == 0 && d.component_count() == 0 {
        return Ok(Laurent::monomial(1, 0));
    }
    Ok(total)
}

/// `(-A^3)^(-w) <D>` with `w` the self-writhe: invariant under Reidemeister
/// moves and under reversing any component.
pub fn normalized_bracket(d: &LinkDiagram) -> Result<Laurent, InvariantError> {
    let b = kauffman_bracket(d)?;
    let w = d.self_writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(b.shift(-3 * w as i32).scale(sign))
}

/// True when the normalized bracket proves the link is not split: the bracket
/// of a split diagram is a multiple of the loop value.
pub fn bracket_certifies_nonsplit(bracket: &Laurent) -> bool {
    bracket.div_exact(&loop_value()).is_none()
}

/// Jones polynomial as a Laurent polynomial in `A` (`t = A^-4`), using the
/// full writhe of the given orientation.
pub fn jones_in_a(d: &LinkDiagram) -> Result<Laurent, InvariantError> {
    let b = kauffman_bracket(d)?;
    let w: i64 = d.crossings().iter().map(|c| c.sign.value()).sum();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    Ok(b.shift(-3 * w as i32).scale(sign))
}

/// Element of `Z[w]`, `w = exp(i pi/4)`, in the basis `1, w, w^2, w^3`.
pub(crate) type Cyclotomic8 = [i64; 4];

fn add_power(acc: &mut Cyclotomic8, coeff: i64, power: i64) {
    let j = power.rem_euclid(8) as usize;
    if j < 4 {
        acc[j] += coeff;
    } else {
        acc[j - 4] -= coeff;
    }
}

/// `(-sqrt 2)^k` with `sqrt 2 = w - w^3`.
pub(crate) fn minus_sqrt2_pow(k: usize) -> Cyclotomic8 {
    let mut acc: Cyclotomic8 = [1, 0, 0, 0];
    for _ in 0..k {
        let mut next = [0; 4];
        for (j, &c) in acc.iter().enumerate() {
            add_power(&mut next, -c, j as i64 + 1);
            add_power(&mut next, c, j as i64 + 3);
        }
        acc = next;
    }
    acc
}

/// Jones polynomial at `t = i`, taking `t^(1/2) = w`, i.e. `A^2 = w^-1`.
pub(crate) fn jones_at_i(d: &LinkDiagram) -> Result<Cyclotomic8, InvariantError> {
    let v = jones_in_a(d)?;
    let mut acc = [0; 4];
    for (k, c) in v.terms() {
        debug_assert!(k % 2 == 0, "link Jones polynomials have even powers of A");
        add_power(&mut acc, c, -(k as i64) / 2);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn unknot_and_unlink() {
        assert_eq!(
            kauffman_bracket(&LinkDiagram::unlink(1)).unwrap(),
            Laurent::monomial(1, 0)
        );
        assert_eq!(
            kauffman_bracket(&LinkDiagram::unlink(2)).unwrap(),
            loop_value()
        );
    }

    #[test]
    fn left_trefoil_jones() {
        // V = -t^-4 + t^-3 + t^-1 for this PD; with t = A^-4: -A^16 + A^12 + A^4
        let d = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        let v = jones_in_a(&d).unwrap();
        let expected = Laurent::monomial(-1, 16)
            .add(&Laurent::monomial(1, 12))
            .add(&Laurent::monomial(1, 4));
        assert_eq!(v, expected);
    }

    #[test]
    fn kink_does_not_change_normalized_bracket() {
        let plain = LinkDiagram::unlink(1);
        let kinked = parse_pd("X(1,1,2,2)").unwrap();
        assert_eq!(
            normalized_bracket(&kinked).unwrap(),
            normalized_bracket(&plain).unwrap()
        );
    }
}
