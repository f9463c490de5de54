use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use super::{Arc, LinkDiagram, Sign};

/// Relabels one piece by walking strands from `start`, queueing the other
/// strand at every crossing met, and returns the sorted crossing tuples.
fn encode_from(d: &LinkDiagram, start: Arc, label: &mut [u32], piece_size: usize) -> Vec<u32> {
    label.fill(u32::MAX);
    let mut next = 0u32;
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if label[s as usize] != u32::MAX {
            continue;
        }
        let mut arc = s;
        loop {
            label[arc as usize] = next;
            next += 1;
            let (c, slot) = d.head(arc);
            let x = &d.crossings()[c];
            let other_in = if x.is_incoming((slot + 1) % 4) {
                (slot + 1) % 4
            } else {
                (slot + 3) % 4
            };
            let o = x.arcs[other_in];
            if label[o as usize] == u32::MAX {
                queue.push_back(o);
            }
            arc = x.arcs[(slot + 2) % 4];
            if arc == s {
                break;
            }
        }
    }
    let mut tuples: Vec<[u32; 5]> = d
        .crossings()
        .iter()
        .filter(|x| label[x.arcs[0] as usize] != u32::MAX)
        .map(|x| {
            let l = x.arcs.map(|a| label[a as usize]);
            [l[0], l[1], l[2], l[3], (x.sign == Sign::Negative) as u32]
        })
        .collect();
    debug_assert_eq!(tuples.len(), piece_size);
    tuples.sort_unstable();
    tuples.into_iter().flatten().collect()
}

pub(super) fn canonical_key(d: &LinkDiagram) -> Vec<u32> {
    let pieces = d.piece_ids();
    let count = pieces.iter().copied().max().map_or(0, |k| k + 1);
    let mut label = vec![u32::MAX; d.arc_count()];
    let mut encodings: Vec<Vec<u32>> = Vec::with_capacity(count);
    for p in 0..count {
        let size = pieces.iter().filter(|&&q| q == p).count();
        let mut best: Option<Vec<u32>> = None;
        for arc in 0..d.arc_count() as Arc {
            if pieces[d.head(arc).0] != p {
                continue;
            }
            let enc = encode_from(d, arc, &mut label, size);
            if best.as_ref().is_none_or(|b| enc < *b) {
                best = Some(enc);
            }
        }
        encodings.push(best.unwrap_or_default());
    }
    encodings.sort_unstable();
    let mut key = vec![
        d.component_count() as u32,
        d.closed_components() as u32,
        count as u32,
    ];
    for e in encodings {
        key.push(e.len() as u32);
        key.extend(e);
    }
    key
}
