//! PD text format: whitespace-separated `X(a,b,c,d)` tuples with an optional
//! trailing `+k` for `k` crossingless components. `X[..]` brackets and a
//! `PD[...]` wrapper are accepted on input.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use super::{Crossing, DiagramError, LinkDiagram, Sign};

fn malformed(msg: impl Into<String>) -> DiagramError {
    DiagramError::MalformedInput(msg.into())
}

fn tokenize(text: &str) -> Result<(Vec<[u32; 4]>, usize), DiagramError> {
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD[").and_then(|r| r.strip_suffix(']')) {
        body = rest;
    }
    let mut tuples = Vec::new();
    let mut closed = 0usize;
    let mut rest = body;
    loop {
        rest = rest.trim_start_matches(|c: char| c.is_whitespace() || c == ',');
        if rest.is_empty() {
            break;
        }
        if let Some(num) = rest.strip_prefix('+') {
            let end = num.find(|c: char| !c.is_ascii_digit()).unwrap_or(num.len());
            closed += num[..end]
                .parse::<usize>()
                .map_err(|_| malformed("expected a component count after '+'"))?;
            rest = &num[end..];
            continue;
        }
        let open = rest
            .strip_prefix("X(")
            .map(|r| (r, ')'))
            .or_else(|| rest.strip_prefix("X[").map(|r| (r, ']')));
        let Some((inner, close)) = open else {
            return Err(malformed(format!(
                "unexpected text at '{}'",
                rest.chars().take(12).collect::<String>()
            )));
        };
        let end = inner
            .find(close)
            .ok_or_else(|| malformed("unterminated crossing tuple"))?;
        let fields: Vec<&str> = inner[..end].split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(malformed(format!(
                "crossing has {} entries, expected 4",
                fields.len()
            )));
        }
        let mut t = [0u32; 4];
        for (slot, f) in t.iter_mut().zip(&fields) {
            *slot = f
                .parse()
                .map_err(|_| malformed(format!("'{f}' is not a positive integer")))?;
            if *slot == 0 {
                return Err(malformed("arc labels must be positive"));
            }
        }
        tuples.push(t);
        rest = &inner[end + 1..];
    }
    Ok((tuples, closed))
}

/// Parses and validates a PD code.
///
/// Orientation comes from the under-strands (slot 0 is always the incoming
/// under-arc). A component that never passes under anything is oriented so
/// that its labels increase along the strand.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, DiagramError> {
    let (tuples, closed) = tokenize(text)?;
    if tuples.is_empty() {
        return Ok(LinkDiagram::unlink(closed));
    }
    let n = tuples.len();
    let mut labels: Vec<u32> = tuples.iter().flatten().copied().collect();
    labels.sort_unstable();
    for w in labels.chunk_by(|a, b| a == b) {
        if w.len() != 2 {
            return Err(DiagramError::DanglingArc {
                arc: w[0],
                occurrences: w.len(),
            });
        }
    }
    labels.dedup();
    let idx = |a: u32| labels.binary_search(&a).unwrap();
    // the two ends of every label
    let mut ends = vec![Vec::with_capacity(2); labels.len()];
    for (c, t) in tuples.iter().enumerate() {
        for (s, &a) in t.iter().enumerate() {
            ends[idx(a)].push((c, s));
        }
    }
    let other = |c: usize, s: usize| -> (usize, usize) {
        let e = &ends[idx(tuples[c][s])];
        if e[0] == (c, s) {
            e[1]
        } else {
            e[0]
        }
    };

    let mut seen = vec![[false; 4]; n];
    let mut over_in: Vec<Option<usize>> = vec![None; n];
    for c0 in 0..n {
        for s0 in 0..4 {
            if seen[c0][s0] {
                continue;
            }
            // walk the strand, recording every (crossing, arrival slot)
            let mut arrivals = Vec::new();
            let (mut c, mut s) = (c0, s0);
            loop {
                arrivals.push((c, s));
                seen[c][s] = true;
                seen[c][(s + 2) % 4] = true;
                let next = other(c, (s + 2) % 4);
                c = next.0;
                s = next.1;
                if (c, s) == (c0, s0) {
                    break;
                }
            }
            let fwd = arrivals.iter().any(|&(_, s)| s == 0);
            let bwd = arrivals.iter().any(|&(_, s)| s == 2);
            let forward =
                match (fwd, bwd) {
                    (true, true) => return Err(malformed(
                        "inconsistent orientation: a strand enters two crossings through slot 2",
                    )),
                    (true, false) => true,
                    (false, true) => false,
                    (false, false) => {
                        let mut votes = 0i64;
                        for &(c, s) in &arrivals {
                            let (a, b) = (tuples[c][s], tuples[c][(s + 2) % 4]);
                            votes += if b == a + 1 || (b < a && a != b + 1) {
                                1
                            } else {
                                -1
                            };
                        }
                        votes >= 0
                    }
                };
            for &(c, s) in &arrivals {
                let s = if forward { s } else { (s + 2) % 4 };
                if s % 2 == 1 {
                    over_in[c] = Some(s);
                }
            }
        }
    }
    let crossings = tuples
        .iter()
        .zip(&over_in)
        .map(|(t, oi)| {
            let sign = if oi.expect("every crossing has an over-strand") == 3 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            Crossing::new(*t, sign)
        })
        .collect();
    LinkDiagram::from_crossings(crossings, closed)
}

pub(super) fn print(d: &LinkDiagram) -> String {
    let mut out = String::new();
    for (i, c) in d.crossings().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let [a, b, e, f] = c.arcs.map(|x| x + 1);
        let _ = write!(out, "X({a},{b},{e},{f})");
    }
    if d.closed_components() > 0 {
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "+{}", d.closed_components());
    }
    out
}
