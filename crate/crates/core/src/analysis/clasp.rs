use alloc::vec::Vec;
use core::fmt;

/// One clasp met while walking along a component: a signed clasp with the
/// other component of the pair, or a clasp with some third component.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Clasp {
    Plus,
    Minus,
    Other,
}

impl Clasp {
    fn sign(self) -> i64 {
        match self {
            Clasp::Plus => 1,
            Clasp::Minus => -1,
            Clasp::Other => 0,
        }
    }

    fn cancels(self, other: Clasp) -> bool {
        self.sign() * other.sign() == -1
    }
}

/// Clasps of one component pair in the order met along a component,
/// written with `+`, `-` and any other character for foreign clasps.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ClaspWord(pub Vec<Clasp>);

impl ClaspWord {
    pub fn parse(text: &str) -> ClaspWord {
        ClaspWord(
            text.chars()
                .filter(|c| !c.is_whitespace())
                .map(|c| match c {
                    '+' => Clasp::Plus,
                    '-' | '\u{2212}' => Clasp::Minus,
                    _ => Clasp::Other,
                })
                .collect(),
        )
    }

    /// Sum of the clasp signs, the linking number of the pair.
    pub fn linking(&self) -> i64 {
        self.0.iter().map(|c| c.sign()).sum()
    }
}

impl fmt::Display for ClaspWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.0 {
            f.write_str(match c {
                Clasp::Plus => "+",
                Clasp::Minus => "-",
                Clasp::Other => "x",
            })?;
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NonzeroLinking {
    pub linking: i64,
}

impl fmt::Display for NonzeroLinking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "clasp word has linking number {}", self.linking)
    }
}

impl core::error::Error for NonzeroLinking {}

/// Upper bound on the delta moves needed to remove all signed clasps.
///
/// Adjacent opposite clasps cancel for free. Otherwise the closest opposite
/// pair is brought together, one delta move per clasp passed, and cancelled.
pub fn clasp_split_upper(word: &ClaspWord) -> Result<u32, NonzeroLinking> {
    let linking = word.linking();
    if linking != 0 {
        return Err(NonzeroLinking { linking });
    }
    let mut w = word.0.clone();
    let mut cost = 0u32;
    loop {
        if let Some(i) = (0..w.len().saturating_sub(1)).find(|&i| w[i].cancels(w[i + 1])) {
            w.drain(i..i + 2);
            continue;
        }
        let mut best: Option<(usize, usize)> = None;
        for i in 0..w.len() {
            if let Some(j) = (i + 1..w.len()).find(|&j| w[i].cancels(w[j])) {
                if best.is_none_or(|(bi, bj)| j - i < bj - bi) {
                    best = Some((i, j));
                }
            }
        }
        let Some((i, j)) = best else { return Ok(cost) };
        cost += (j - i - 1) as u32;
        w.remove(j);
        w.remove(i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn examples() {
        assert_eq!(clasp_split_upper(&ClaspWord::parse("+-")), Ok(0));
        assert_eq!(clasp_split_upper(&ClaspWord::parse("+x-")), Ok(1));
        assert_eq!(clasp_split_upper(&ClaspWord::parse("++--")), Ok(0));
        assert_eq!(clasp_split_upper(&ClaspWord::parse("")), Ok(0));
        assert_eq!(clasp_split_upper(&ClaspWord::parse("+xx-")), Ok(2));
        assert_eq!(
            clasp_split_upper(&ClaspWord::parse("++")),
            Err(NonzeroLinking { linking: 2 })
        );
    }

    #[test]
    fn display_round_trips() {
        let w = ClaspWord::parse("+x-y");
        assert_eq!(w.to_string(), "+x-x");
        assert_eq!(ClaspWord::parse(&w.to_string()), w);
    }
}
