use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One piece of evidence about an unknown nonnegative integer.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Constraint {
    AtLeast(u32),
    AtMost(u32),
    Parity(u8),
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::AtLeast(n) => write!(f, ">= {n}"),
            Constraint::AtMost(n) => write!(f, "<= {n}"),
            Constraint::Parity(p) => write!(f, "= {p} (mod 2)"),
        }
    }
}

/// A constraint together with the reason it holds.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Derivation {
    pub constraint: Constraint,
    pub reason: String,
}

impl Derivation {
    pub fn new(constraint: Constraint, reason: impl Into<String>) -> Self {
        Derivation {
            constraint,
            reason: reason.into(),
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}  [{}]", self.constraint, self.reason)
    }
}

/// Evidence that admits no value.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InconsistentEvidence {
    pub trace: Vec<Derivation>,
}

impl fmt::Display for InconsistentEvidence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("inconsistent evidence:")?;
        for d in &self.trace {
            write!(f, " {{{d}}}")?;
        }
        Ok(())
    }
}

impl core::error::Error for InconsistentEvidence {}

/// Interval with optional parity: everything known about a distance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceBound {
    pub lower: u32,
    pub upper: Option<u32>,
    pub parity: Option<u8>,
    pub trace: Vec<Derivation>,
}

impl DistanceBound {
    pub fn exact(value: u32) -> Self {
        DistanceBound {
            lower: value,
            upper: Some(value),
            parity: Some((value % 2) as u8),
            trace: Vec::new(),
        }
    }

    pub fn unknown() -> Self {
        DistanceBound {
            lower: 0,
            upper: None,
            parity: None,
            trace: Vec::new(),
        }
    }

    pub fn value(&self) -> Option<u32> {
        (self.upper == Some(self.lower)).then_some(self.lower)
    }

    pub fn is_exact(&self) -> bool {
        self.value().is_some()
    }

    pub fn admits(&self, n: u32) -> bool {
        n >= self.lower
            && self.upper.is_none_or(|u| n <= u)
            && self.parity.is_none_or(|p| n % 2 == p as u32)
    }

    /// True when every value admitted by `other` is admitted here.
    pub fn contains(&self, other: &DistanceBound) -> bool {
        if other.lower < self.lower {
            return (other.lower..self.lower).all(|n| !other.admits(n))
                && self.contains_tail(other);
        }
        self.contains_tail(other)
    }

    fn contains_tail(&self, other: &DistanceBound) -> bool {
        match (self.upper, other.upper) {
            (Some(_), None) => false,
            (_, Some(u)) => {
                (other.lower.max(self.lower)..=u).all(|n| !other.admits(n) || self.admits(n))
            }
            (None, None) => self.parity.is_none() || self.parity == other.parity,
        }
    }
}

impl fmt::Display for DistanceBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(v) = self.value() {
            return write!(f, "exact {v}");
        }
        match self.upper {
            Some(u) => write!(f, "[{}, {}]", self.lower, u)?,
            None => write!(f, "[{}, inf)", self.lower)?,
        }
        if let Some(p) = self.parity {
            write!(f, " parity {p}")?;
        }
        Ok(())
    }
}

/// Intersects all constraints and tightens the ends to the parity.
pub fn combine(evidence: Vec<Derivation>) -> Result<DistanceBound, InconsistentEvidence> {
    let mut lower = 0u32;
    let mut upper: Option<u32> = None;
    let mut parity: Option<u8> = None;
    let fail = |trace: Vec<Derivation>| Err(InconsistentEvidence { trace });
    for d in &evidence {
        match d.constraint {
            Constraint::AtLeast(n) => lower = lower.max(n),
            Constraint::AtMost(n) => upper = Some(upper.map_or(n, |u| u.min(n))),
            Constraint::Parity(p) => match parity {
                Some(q) if q != p % 2 => return fail(evidence),
                _ => parity = Some(p % 2),
            },
        }
    }
    if let Some(p) = parity {
        if lower % 2 != p as u32 {
            lower += 1;
        }
        if let Some(u) = upper {
            if u % 2 != p as u32 {
                if u == 0 {
                    return fail(evidence);
                }
                upper = Some(u - 1);
            }
        }
    }
    if upper.is_some_and(|u| u < lower) {
        return fail(evidence);
    }
    if lower == 0 && upper == Some(0) {
        parity = Some(0);
    }
    if let (Some(u), None) = (upper, parity) {
        if u == lower {
            parity = Some((u % 2) as u8);
        }
    }
    Ok(DistanceBound {
        lower,
        upper,
        parity,
        trace: evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn d(c: Constraint) -> Derivation {
        Derivation::new(c, "test")
    }

    #[test]
    fn parity_pins_exact_value() {
        let b = combine(vec![
            d(Constraint::AtLeast(1)),
            d(Constraint::AtMost(2)),
            d(Constraint::Parity(0)),
        ])
        .unwrap();
        assert_eq!(b.value(), Some(2));
    }

    #[test]
    fn conflicting_parity_is_inconsistent() {
        assert!(combine(vec![d(Constraint::Parity(0)), d(Constraint::Parity(1))]).is_err());
        assert!(combine(vec![
            d(Constraint::AtLeast(3)),
            d(Constraint::AtMost(3)),
            d(Constraint::Parity(0))
        ])
        .is_err());
    }

    #[test]
    fn no_evidence_is_unbounded() {
        let b = combine(Vec::new()).unwrap();
        assert_eq!((b.lower, b.upper, b.parity), (0, None, None));
    }

    #[test]
    fn containment() {
        let wide = combine(vec![d(Constraint::AtLeast(1)), d(Constraint::Parity(1))]).unwrap();
        let one_or_three = combine(vec![
            d(Constraint::AtLeast(1)),
            d(Constraint::AtMost(3)),
            d(Constraint::Parity(1)),
        ])
        .unwrap();
        assert!(wide.contains(&one_or_three));
        assert!(wide.contains(&DistanceBound::exact(3)));
        assert!(!wide.contains(&DistanceBound::exact(2)));
        assert!(!one_or_three.contains(&wide));
        assert!(DistanceBound::unknown().contains(&wide));
    }
}
