//! Minimal transversals (minimal vertex covers) of a hypergraph.

use alloc::vec::Vec;

use crate::bitset::BitSet;

/// Inclusion-minimal sets meeting every edge, in canonical order.
///
/// Incremental (Berge) construction: after each edge, every partial cover
/// that misses it is extended by one vertex of the edge, then non-minimal
/// covers are dropped. An empty edge list has the single transversal `∅`;
/// an empty edge makes the family have none.
pub fn minimal_transversals(edges: &[BitSet]) -> Vec<BitSet> {
    let mut covers = alloc::vec![BitSet::new()];
    for edge in edges {
        let mut next = Vec::with_capacity(covers.len());
        for c in covers {
            if c.intersects(edge) {
                next.push(c);
            } else {
                for v in edge.iter() {
                    let mut d = c.clone();
                    d.insert(v);
                    next.push(d);
                }
            }
        }
        covers = minimal_sets(next);
    }
    covers
}

/// Drops duplicates and every set that strictly contains another one.
pub fn minimal_sets(mut sets: Vec<BitSet>) -> Vec<BitSet> {
    sets.sort_by_key(BitSet::len);
    let mut kept: Vec<BitSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sets(v: &[&[usize]]) -> Vec<BitSet> {
        v.iter().map(|s| BitSet::from_indices(s.iter().copied())).collect()
    }

    #[test]
    fn four_cycle() {
        // edges 13, 14, 23, 24 (0-based 02, 03, 12, 13)
        let t = minimal_transversals(&sets(&[&[0, 2], &[0, 3], &[1, 2], &[1, 3]]));
        assert_eq!(t, sets(&[&[0, 1], &[2, 3]]));
    }

    #[test]
    fn single_edge_and_degenerate() {
        assert_eq!(minimal_transversals(&sets(&[&[0, 1]])), sets(&[&[0], &[1]]));
        assert_eq!(minimal_transversals(&[]), sets(&[&[]]));
        assert!(minimal_transversals(&sets(&[&[]])).is_empty());
    }

    #[test]
    fn agrees_with_brute_force_on_small_families() {
        let families: [&[&[usize]]; 3] = [
            &[&[0, 1, 2], &[2, 3], &[3, 4, 0]],
            &[&[0], &[1, 2], &[2, 3], &[3, 1]],
            &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]],
        ];
        for fam in families {
            let edges = sets(fam);
            let n = 5;
            let hits = |s: &BitSet| edges.iter().all(|e| e.intersects(s));
            let mut brute: Vec<BitSet> = (0u32..1 << n)
                .map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect::<BitSet>())
                .filter(|s| hits(s))
                .collect();
            brute = minimal_sets(brute);
            assert_eq!(minimal_transversals(&edges), brute);
        }
    }
}
