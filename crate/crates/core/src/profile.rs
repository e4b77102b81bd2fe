//! Neighbor profiles: how the complement of a set attaches to it.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// For a set S in a graph H: `counts[i]` is the number of vertices outside S
/// with exactly i neighbors in S, and `beta` is the size of the edge cut
/// E(S, V(H) \ S).
///
/// Two counting identities always hold and are checked in debug builds:
/// the counts sum to `n - |S|`, and the i-weighted sum equals `beta`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborProfile {
    pub counts: BTreeMap<usize, usize>,
    pub beta: usize,
}

impl NeighborProfile {
    pub fn count(&self, i: usize) -> usize {
        self.counts.get(&i).copied().unwrap_or(0)
    }

    /// Total number of profiled (outside) vertices.
    pub fn outside_total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Smallest i with a nonzero count.
    pub fn min_attachment(&self) -> Option<usize> {
        self.counts.keys().next().copied()
    }
}

/// Compute the neighbor profile of `s` in `g`.
pub fn neighbor_profile(g: &Graph, s: VertexSet) -> NeighborProfile {
    debug_assert!(s.is_subset_of(g.vertices()));
    let outside = g.vertices().difference(s);
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    let mut beta = 0usize;
    for v in outside.iter() {
        let k = g.neighbors(v).intersection(s).len();
        *counts.entry(k).or_insert(0) += 1;
        beta += k;
    }
    let profile = NeighborProfile { counts, beta };
    debug_assert_eq!(profile.outside_total(), g.n() - s.len());
    debug_assert_eq!(
        profile.counts.iter().map(|(i, c)| i * c).sum::<usize>(),
        profile.beta
    );
    debug_assert_eq!(profile.beta, g.cut_size(s));
    profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, gnp, GraphFamily};

    #[test]
    fn k6_pair_profile() {
        // Every one of the 4 outside vertices of K6 sees both members of a
        // 2-element set.
        let g = generate(&GraphFamily::Complete { n: 6 }).unwrap();
        let s: VertexSet = [0, 1].into_iter().collect();
        let p = neighbor_profile(&g, s);
        assert_eq!(p.counts, BTreeMap::from([(2, 4)]));
        assert_eq!(p.beta, 8);
    }

    #[test]
    fn full_set_has_empty_profile() {
        let g = generate(&GraphFamily::Complete { n: 6 }).unwrap();
        let p = neighbor_profile(&g, g.vertices());
        assert!(p.counts.is_empty());
        assert_eq!(p.beta, 0);
    }

    #[test]
    fn c5_maximum_independent_set_profile() {
        let g = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let s: VertexSet = [0, 2].into_iter().collect();
        let p = neighbor_profile(&g, s);
        assert_eq!(p.counts, BTreeMap::from([(1, 2), (2, 1)]));
        assert_eq!(p.beta, 4);
    }

    #[test]
    fn counting_identities_on_random_instances() {
        for seed in 0..40u64 {
            let g = gnp(9, 0.45, seed).unwrap();
            // A deterministic assortment of subsets.
            for mask in [0u64, 1, 0b1010, 0b111, 0x1ff, 0b100110] {
                let s = VertexSet::from_mask(mask & g.vertices().mask());
                let p = neighbor_profile(&g, s);
                assert_eq!(p.outside_total(), g.n() - s.len());
                assert_eq!(
                    p.counts.iter().map(|(i, c)| i * c).sum::<usize>(),
                    p.beta
                );
                assert_eq!(p.beta, g.cut_size(s));
            }
        }
    }
}
