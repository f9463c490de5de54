//! Exhaustive clasp search: swapping two neighbours costs one delta move,
//! cancelling an adjacent opposite pair is free.

use std::collections::{HashMap, VecDeque};

use deltalink_core::analysis::Clasp;

pub fn exhaustive(word: &[Clasp]) -> u32 {
    let mut dist: HashMap<Vec<Clasp>, u32> = HashMap::new();
    let mut queue: VecDeque<(Vec<Clasp>, u32)> = VecDeque::new();
    queue.push_back((word.to_vec(), 0));
    while let Some((w, d)) = queue.pop_front() {
        if dist.get(&w).is_some_and(|&old| old <= d) {
            continue;
        }
        dist.insert(w.clone(), d);
        if w.iter().all(|&c| c == Clasp::Other) {
            return d;
        }
        for i in 0..w.len().saturating_sub(1) {
            let (a, b) = (w[i], w[i + 1]);
            if matches!(
                (a, b),
                (Clasp::Plus, Clasp::Minus) | (Clasp::Minus, Clasp::Plus)
            ) {
                let mut next = w.clone();
                next.drain(i..i + 2);
                queue.push_front((next, d));
            }
            if a != b {
                let mut next = w.clone();
                next.swap(i, i + 1);
                queue.push_back((next, d + 1));
            }
        }
    }
    unreachable!("every word with zero linking number clears")
}

pub fn words(len: usize) -> Vec<Vec<Clasp>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                [Clasp::Plus, Clasp::Minus, Clasp::Other]
                    .into_iter()
                    .map(move |c| {
                        let mut w = w.clone();
                        w.push(c);
                        w
                    })
            })
            .collect();
    }
    out.retain(|w| {
        w.iter().filter(|&&c| c == Clasp::Plus).count()
            == w.iter().filter(|&&c| c == Clasp::Minus).count()
    });
    out
}
