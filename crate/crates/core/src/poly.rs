//! Integer polynomials used by the invariants: the Conway polynomial in `z`
//! and Laurent polynomials in `A` for the Kauffman bracket.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Conway polynomial `a0 + a1*z + a2*z^2 + ...`, stored densely by degree
/// with trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConwayPoly {
    coeffs: Vec<i64>,
}

impl ConwayPoly {
    pub fn zero() -> Self {
        ConwayPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ConwayPoly { coeffs: vec![1] }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        let mut p = ConwayPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    /// The coefficient `a_i`.
    pub fn coeff(&self, degree: usize) -> i64 {
        self.coeffs.get(degree).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest degree carrying a nonzero coefficient.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn add_assign(&mut self, other: &ConwayPoly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), 0);
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        self.trim();
    }

    /// `self += sign * z * other`
    pub fn add_z_times(&mut self, sign: i64, other: &ConwayPoly) {
        if other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + 1;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, 0);
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            self.coeffs[i + 1] += sign * b;
        }
        self.trim();
    }

    pub fn neg(&self) -> ConwayPoly {
        ConwayPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Representative of `{p, -p}` whose lowest nonzero coefficient is positive.
    pub fn sign_normalized(&self) -> ConwayPoly {
        match self.coeffs.iter().find(|&&c| c != 0) {
            Some(&c) if c < 0 => self.neg(),
            _ => self.clone(),
        }
    }
}

impl fmt::Display for ConwayPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs.iter().enumerate().map(|(i, &c)| (i as i32, c)),
            "z",
        )
    }
}

fn write_terms(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (i32, i64)>,
    var: &str,
) -> fmt::Result {
    let mut first = true;
    for (exp, c) in terms.filter(|&(_, c)| c != 0) {
        let mag = c.unsigned_abs();
        if first {
            if c < 0 {
                f.write_str("-")?;
            }
        } else {
            f.write_str(if c < 0 { " - " } else { " + " })?;
        }
        first = false;
        if exp == 0 {
            write!(f, "{mag}")?;
            continue;
        }
        if mag != 1 {
            write!(f, "{mag}*")?;
        }
        if exp == 1 {
            f.write_str(var)?;
        } else {
            write!(f, "{var}^{exp}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// Laurent polynomial with integer coefficients, `sum c_k x^(low + k)`.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Laurent {
    low: i32,
    coeffs: Vec<i64>,
}

impl Laurent {
    pub fn zero() -> Self {
        Laurent {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn monomial(coeff: i64, exp: i32) -> Self {
        Laurent::from_parts(exp, vec![coeff])
    }

    pub fn from_parts(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = Laurent { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|&&c| c == 0).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i32;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn low_exp(&self) -> i32 {
        self.low
    }

    pub fn high_exp(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, exp: i32) -> i64 {
        let k = exp - self.low;
        if k < 0 {
            return 0;
        }
        self.coeffs.get(k as usize).copied().unwrap_or(0)
    }

    /// Iterator over `(exponent, coefficient)` with nonzero coefficients.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(k, &c)| (self.low + k as i32, c))
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_exp().max(other.high_exp());
        let mut coeffs = vec![0i64; (high - low + 1) as usize];
        for (e, c) in self.terms().chain(other.terms()) {
            coeffs[(e - low) as usize] += c;
        }
        Laurent::from_parts(low, coeffs)
    }

    pub fn scale(&self, k: i64) -> Laurent {
        Laurent::from_parts(self.low, self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn sub(&self, other: &Laurent) -> Laurent {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        if self.is_zero() || other.is_zero() {
            return Laurent::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Laurent::from_parts(self.low + other.low, coeffs)
    }

    pub fn shift(&self, by: i32) -> Laurent {
        if self.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            low: self.low + by,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn pow(&self, n: u32) -> Laurent {
        let mut acc = Laurent::monomial(1, 0);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `x -> x^-1`.
    pub fn invert_variable(&self) -> Laurent {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Laurent::from_parts(-self.high_exp(), coeffs)
    }

    /// Exact quotient when `divisor` divides `self` in `Z[x, x^-1]`.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.clone();
        let dlen = divisor.coeffs.len();
        let mut quot: Vec<(i32, i64)> = Vec::new();
        while !rem.is_zero() && rem.coeffs.len() >= dlen {
            let top = *rem.coeffs.last().unwrap();
            if top % lead != 0 {
                return None;
            }
            let q = top / lead;
            let exp = rem.high_exp() - divisor.high_exp();
            quot.push((exp, q));
            rem = rem.sub(&divisor.shift(exp).scale(q));
        }
        if !rem.is_zero() {
            return None;
        }
        Some(quot.into_iter().fold(Laurent::zero(), |acc, (e, c)| {
            acc.add(&Laurent::monomial(c, e))
        }))
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms(), "A")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn conway_display_omits_zero_terms() {
        assert_eq!(
            ConwayPoly::from_coeffs(vec![1, 0, 1]).to_string(),
            "1 + z^2"
        );
        assert_eq!(
            ConwayPoly::from_coeffs(vec![1, 0, -1]).to_string(),
            "1 - z^2"
        );
        assert_eq!(
            ConwayPoly::from_coeffs(vec![0, 0, 0, -1]).to_string(),
            "-z^3"
        );
        assert_eq!(ConwayPoly::from_coeffs(vec![0, 2, 0, 0]).to_string(), "2*z");
        assert_eq!(ConwayPoly::zero().to_string(), "0");
    }

    #[test]
    fn laurent_division_round_trips() {
        let delta = Laurent::from_parts(-2, vec![-1, 0, 0, 0, -1]);
        let p = Laurent::from_parts(-3, vec![1, 2, 0, -1]);
        let prod = p.mul(&delta);
        assert_eq!(prod.div_exact(&delta), Some(p.clone()));
        assert_eq!(p.div_exact(&delta), None);
    }

    #[test]
    fn invert_variable_mirrors_exponents() {
        let p = Laurent::from_parts(-1, vec![3, 0, 5]);
        let q = p.invert_variable();
        assert_eq!(q.coeff(1), 3);
        assert_eq!(q.coeff(-1), 5);
        assert_eq!(q.invert_variable(), p);
    }
}
