//! Brute-force reference implementations. They only use divisibility of
//! exponent vectors, never the library's algorithms.

use std::collections::BTreeMap;

pub type Exps = Vec<u32>;

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Exps], w: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, w))
}

pub fn max_exponents(gens: &[Exps], n: usize) -> Vec<u32> {
    (0..n).map(|i| gens.iter().map(|g| g[i]).max().unwrap_or(0)).collect()
}

/// All vectors with `0 ≤ w_i ≤ bounds[i]`.
pub fn grid(bounds: &[u32]) -> Vec<Exps> {
    let mut out = vec![Vec::new()];
    for &b in bounds {
        out = out
            .into_iter()
            .flat_map(|p: Exps| {
                (0..=b).map(move |e| {
                    let mut v = p.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    out
}

/// `None` is ∞.
pub type Point = Vec<Option<u32>>;

fn point_le(a: &Point, b: &Point) -> bool {
    a.iter().zip(b).all(|(x, y)| match (x, y) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(p), Some(q)) => p <= q,
    })
}

fn infpt(a: &Point) -> Vec<usize> {
    (0..a.len()).filter(|&i| a[i].is_none()).collect()
}

/// Facets of `Γ(I)` by enumerating `∏ ({0, ..., max_i - 1} ∪ {∞})`.
pub fn facets(gens: &[Exps], n: usize) -> Vec<Point> {
    let maxes = max_exponents(gens, n);
    let mut points: Vec<Point> = vec![Vec::new()];
    for &m in &maxes {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..m)
                    .map(Some)
                    .chain([None])
                    .map(move |e| {
                        let mut v = p.clone();
                        v.push(e);
                        v
                    })
            })
            .collect();
    }
    let in_gamma = |a: &Point| {
        !gens.iter().any(|g| {
            g.iter().zip(a).all(|(&gi, ai)| match ai {
                None => true,
                Some(x) => gi <= *x,
            })
        })
    };
    let gamma: Vec<Point> = points.into_iter().filter(in_gamma).collect();
    let maximal: Vec<&Point> = gamma
        .iter()
        .filter(|a| !gamma.iter().any(|b| b != *a && point_le(a, b)))
        .collect();
    let mut out: Vec<Point> = gamma
        .iter()
        .filter(|a| {
            let above: Vec<_> = maximal.iter().filter(|m| point_le(a, m)).collect();
            !above.is_empty() && above.iter().all(|m| infpt(m) == infpt(a))
        })
        .cloned()
        .collect();
    out.sort();
    out
}

/// `I : u` is the prime on `vars`: every `x_j u` lies in `I`, and `u` times
/// a high power of the remaining variables does not.
pub fn colon_is_prime_on(gens: &[Exps], u: &[u32], vars: &[usize]) -> bool {
    if member(gens, u) {
        return false;
    }
    let big = gens.iter().flatten().copied().max().unwrap_or(0) + 1;
    let hits = vars.iter().all(|&j| {
        let mut w = u.to_vec();
        w[j] += 1;
        member(gens, &w)
    });
    let mut w = u.to_vec();
    for (j, e) in w.iter_mut().enumerate() {
        if !vars.contains(&j) {
            *e += big;
        }
    }
    hits && !member(gens, &w)
}

/// Associated primes as sorted variable lists, by searching `u` with
/// `u_i ≤ max_i` for which `I : u` is prime.
pub fn associated_primes(gens: &[Exps], n: usize) -> Vec<Vec<usize>> {
    let us = grid(&max_exponents(gens, n));
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        let vars: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        if us.iter().any(|u| colon_is_prime_on(gens, u, &vars)) {
            out.push(vars);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// `dim_K (S/I)_d` for `d = 0..=up_to`.
pub fn hilbert_counts(gens: &[Exps], n: usize, up_to: u32) -> Vec<i64> {
    let all = grid(&vec![up_to; n]);
    let mut c = vec![0i64; up_to as usize + 1];
    for w in all {
        let d: u32 = w.iter().sum();
        if d <= up_to && !member(gens, &w) {
            c[d as usize] += 1;
        }
    }
    c
}

/// Rank over ℚ by fraction-free elimination with row gcd normalization.
pub fn rank(mut m: Vec<Vec<i128>>) -> usize {
    fn gcd(a: i128, b: i128) -> i128 {
        if b == 0 {
            a.abs()
        } else {
            gcd(b, a % b)
        }
    }
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i == r || m[i][c] == 0 {
                continue;
            }
            let (a, b) = (m[r][c], m[i][c]);
            let pivot = m[r].clone();
            for (x, p) in m[i].iter_mut().zip(&pivot) {
                *x = a * *x - b * p;
            }
            let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
            if g > 1 {
                for x in m[i].iter_mut() {
                    *x /= g;
                }
            }
        }
        r += 1;
    }
    r
}

/// Reduced homology ranks `H̃_{-1}, H̃_0, ...` of the simplicial complex
/// whose faces are the given vertex sets (closed under subsets).
pub fn reduced_homology(faces: &[Vec<usize>]) -> Vec<usize> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.iter().map(Vec::len).max().unwrap();
    let by_size: Vec<Vec<&Vec<usize>>> =
        (0..=top).map(|k| faces.iter().filter(|f| f.len() == k).collect()).collect();
    let boundary = |k: usize| -> Vec<Vec<i128>> {
        // faces of size k → faces of size k - 1
        let mut d = vec![vec![0i128; by_size[k].len()]; by_size[k - 1].len()];
        for (c, f) in by_size[k].iter().enumerate() {
            for pos in 0..f.len() {
                let mut g = (*f).clone();
                g.remove(pos);
                let r = by_size[k - 1].iter().position(|h| **h == g).unwrap();
                d[r][c] = if pos % 2 == 0 { 1 } else { -1 };
            }
        }
        d
    };
    let ranks: Vec<usize> = (1..=top).map(|k| rank(boundary(k))).collect();
    (0..=top)
        .map(|k| {
            let out = if k > 0 { ranks[k - 1] } else { 0 };
            let inc = if k < top { ranks[k] } else { 0 };
            by_size[k].len() - out - inc
        })
        .collect()
}

/// `β_{i,b}(S/I) = dim H̃_{i-2}(K^b(I))` with the upper Koszul complex
/// `K^b(I) = {F ⊆ supp b : x^{b - F} ∈ I}`, over every `b` in the lcm
/// lattice of the generators. Keys are `(i, b)`, plus `β_{0,0} = 1`.
pub fn betti(gens: &[Exps], n: usize) -> BTreeMap<(usize, Exps), usize> {
    let mut lattice: Vec<Exps> = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut l = vec![0u32; n];
        for (k, g) in gens.iter().enumerate() {
            if mask & (1 << k) != 0 {
                for i in 0..n {
                    l[i] = l[i].max(g[i]);
                }
            }
        }
        lattice.push(l);
    }
    lattice.sort();
    lattice.dedup();
    let mut out = BTreeMap::new();
    out.insert((0, vec![0; n]), 1);
    for b in lattice {
        let supp: Vec<usize> = (0..n).filter(|&i| b[i] > 0).collect();
        let mut faces = Vec::new();
        for mask in 0u32..(1 << supp.len()) {
            let f: Vec<usize> = (0..supp.len()).filter(|k| mask & (1 << k) != 0).map(|k| supp[k]).collect();
            let mut w = b.clone();
            for &j in &f {
                w[j] -= 1;
            }
            if member(gens, &w) {
                faces.push(f);
            }
        }
        // H̃_{j}(K^b) sits at index j + 1
        for (idx, h) in reduced_homology(&faces).into_iter().enumerate() {
            if h > 0 {
                out.insert((idx + 1, b.clone()), h);
            }
        }
    }
    out
}

pub fn depth(gens: &[Exps], n: usize) -> usize {
    let pd = betti(gens, n).keys().map(|(i, _)| *i).max().unwrap_or(0);
    n - pd
}

/// All monomials of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Exps> {
    grid(&vec![d; n]).into_iter().filter(|w| w.iter().sum::<u32>() <= d).collect()
}

/// Each standard monomial of degree ≤ `d` lies in exactly one space and no
/// monomial of `I` lies in any space. Spaces are `(u, Z)`.
pub fn decomposition_covers(gens: &[Exps], n: usize, spaces: &[(Exps, Vec<usize>)], d: u32) -> bool {
    monomials_up_to(n, d).iter().all(|w| {
        let hits = spaces
            .iter()
            .filter(|(u, z)| divides(u, w) && (0..n).all(|i| w[i] == u[i] || z.contains(&i)))
            .count();
        if member(gens, w) {
            hits == 0
        } else {
            hits == 1
        }
    })
}
