//! Alexander polynomial from the Wirtinger presentation, read straight from
//! PD text with its own parser and polynomial arithmetic.

/// Polynomial in t with integer coefficients, lowest degree first.
pub type Poly = Vec<i64>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn mul(a: &Poly, b: &Poly) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn add(a: &Poly, b: &Poly) -> Poly {
    sub(a, &b.iter().map(|x| -x).collect())
}

fn sub(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn div_exact(a: &Poly, b: &Poly) -> Poly {
    let mut rem = a.clone();
    if rem.is_empty() {
        return rem;
    }
    let lead = *b.last().unwrap();
    let mut q = vec![0; rem.len() + 1 - b.len()];
    for k in (0..q.len()).rev() {
        let c = rem[k + b.len() - 1];
        assert_eq!(c % lead, 0, "inexact division");
        q[k] = c / lead;
        for (i, y) in b.iter().enumerate() {
            rem[k + i] -= q[k] * y;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact division");
    trim(q)
}

/// Bareiss elimination; the result is the determinant up to sign.
fn det(mut m: Vec<Vec<Poly>>) -> Poly {
    let n = m.len();
    let mut prev: Poly = vec![1];
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_empty()) else {
            return Vec::new();
        };
        m.swap(k, p);
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(&mul(&m[i][j], &m[k][k]), &mul(&m[i][k], &m[k][j]));
                m[i][j] = div_exact(&num, &prev);
            }
            m[i][k] = Vec::new();
        }
        prev = m[k][k].clone();
    }
    prev
}

fn parse_tuples(pd: &str) -> Vec<[u32; 4]> {
    pd.split('X')
        .filter(|s| s.contains('('))
        .map(|s| {
            let inner = &s[s.find('(').unwrap() + 1..s.find(')').unwrap()];
            let v: Vec<u32> = inner
                .split(',')
                .map(|x| x.trim().parse().unwrap())
                .collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect()
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    parent[x] = r;
    r
}

/// Δ(t) from the Wirtinger presentation, up to units.
pub fn alexander(pd: &str) -> Poly {
    let xs = parse_tuples(pd);
    let max = xs.iter().flatten().copied().max().unwrap() as usize;
    // components are runs of consecutive labels
    let mut comp = (0..=max).collect::<Vec<_>>();
    for x in &xs {
        for (p, q) in [(x[0], x[2]), (x[1], x[3])] {
            let (a, b) = (find(&mut comp, p as usize), find(&mut comp, q as usize));
            comp[a] = b;
        }
    }
    let succ = |l: u32, comp: &mut Vec<usize>| -> u32 {
        let r = find(comp, l as usize);
        let members: Vec<u32> = (1..=max as u32)
            .filter(|&m| find(comp, m as usize) == r)
            .collect();
        assert!(members.len() >= 3, "two-arc component is ambiguous");
        if l == *members.last().unwrap() {
            members[0]
        } else {
            l + 1
        }
    };
    // over-arcs: labels joined across the over-strand of each crossing
    let mut gen = (0..=max).collect::<Vec<_>>();
    for x in &xs {
        let (a, b) = (find(&mut gen, x[1] as usize), find(&mut gen, x[3] as usize));
        gen[a] = b;
    }
    let mut ids: Vec<usize> = (1..=max).map(|l| find(&mut gen, l)).collect();
    ids.sort_unstable();
    ids.dedup();
    let col = |l: u32, gen: &mut Vec<usize>| ids.binary_search(&find(gen, l as usize)).unwrap();
    let n = xs.len();
    assert_eq!(ids.len(), n);
    let mut m = vec![vec![vec![0i64; 2]; n]; n];
    for (r, x) in xs.iter().enumerate() {
        let positive = succ(x[3], &mut comp) == x[1];
        let (ca, cc, cg) = (
            col(x[0], &mut gen),
            col(x[2], &mut gen),
            col(x[1], &mut gen),
        );
        let (ra, rc, rg): ([i64; 2], [i64; 2], [i64; 2]) = if positive {
            ([0, 1], [-1, 0], [1, -1])
        } else {
            ([1, 0], [0, -1], [-1, 1])
        };
        for (c, v) in [(ca, ra), (cc, rc), (cg, rg)] {
            m[r][c][0] += v[0];
            m[r][c][1] += v[1];
        }
    }
    let minor: Vec<Vec<Poly>> = m
        .into_iter()
        .take(n - 1)
        .map(|row| row.into_iter().take(n - 1).map(trim).collect())
        .collect();
    det(minor)
}

/// Strips powers of t and fixes the sign.
pub fn normalize(p: &Poly) -> Poly {
    let mut p = trim(p.clone());
    let low = p.iter().position(|&c| c != 0).unwrap_or(0);
    p.drain(..low);
    if p.first().is_some_and(|&c| c < 0) {
        p.iter_mut().for_each(|c| *c = -*c);
    }
    p
}

/// ∇(t^½ - t^-½) multiplied through by a power of t.
pub fn conway_at_t(coeffs: &[i64]) -> Poly {
    let top = coeffs.len().saturating_sub(1);
    let mut out: Poly = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mut term: Poly = vec![c];
        for _ in 0..k {
            term = mul(&term, &vec![-1, 1]);
        }
        let shift = (top - k) / 2;
        let mut shifted = vec![0; shift];
        shifted.extend(term);
        out = add(&out, &shifted);
    }
    out
}

pub const CASES: [(&str, &str); 5] = [
    ("3_1", "X(6,3,1,4) X(4,1,5,2) X(2,5,3,6)"),
    ("4_1", "X(8,5,1,6) X(4,1,5,2) X(2,8,3,7) X(6,4,7,3)"),
    (
        "5_1",
        "X(10,5,1,6) X(6,1,7,2) X(2,7,3,8) X(8,3,9,4) X(4,9,5,10)",
    ),
    (
        "5_2",
        "X(1,6,2,7) X(7,2,8,3) X(3,10,4,1) X(9,4,10,5) X(5,8,6,9)",
    ),
    (
        "L5a1",
        "X(5,1,6,4) X(1,5,2,10) X(7,2,8,3) X(3,8,4,9) X(9,6,10,7)",
    ),
];
