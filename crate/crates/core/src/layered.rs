//! Layered maximum independent sets.
//!
//! Peel k-1 layers: each layer is a maximum independent set of what is left.
//! The union of the first j layers induces a subgraph with clique number at
//! most j, so the union of k-1 layers is free for the "clique of size >= k"
//! family and its size is a constructive lower bound on that optimum.

use serde::Serialize;

use crate::cliques::clique_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solver::{independence_number, SolverConfig};

#[derive(Clone, Debug, Serialize)]
pub struct LayeredDecomposition {
    /// `layers[j]` is a maximum independent set of the graph with the
    /// earlier layers removed. Pairwise disjoint.
    pub layers: Vec<VertexSet>,
    pub sizes: Vec<usize>,
    /// Union of all layers.
    pub union: VertexSet,
    /// Sum of the layer sizes.
    pub total: usize,
}

/// Peel `k - 1` maximum-independent-set layers (ties broken toward the
/// lexicographically smallest set at every layer).
pub fn layered_mis(g: &Graph, k: usize, cfg: &SolverConfig) -> Result<LayeredDecomposition> {
    if k < 2 {
        return Err(Error::Pattern(
            "layered decomposition needs a clique threshold k >= 2".into(),
        ));
    }
    let mut remaining = g.vertices();
    let mut layers = Vec::with_capacity(k - 1);
    for _ in 0..k - 1 {
        let layer = if remaining.is_empty() {
            VertexSet::EMPTY
        } else {
            let (sub, back) = g.induced(remaining);
            let mis = independence_number(&sub, cfg)?;
            mis.best.iter().map(|v| back[v]).collect()
        };
        remaining = remaining.difference(layer);
        layers.push(layer);
    }
    let union = layers
        .iter()
        .fold(VertexSet::EMPTY, |acc, l| acc.union(*l));
    let (omega, witness) = clique_number(g, union);
    if omega > k - 1 {
        return Err(Error::InvariantViolation(format!(
            "layer union contains a {omega}-clique {witness}, expected clique number < {k}"
        )));
    }
    let sizes: Vec<usize> = layers.iter().map(|l| l.len()).collect();
    let total = sizes.iter().sum();
    Ok(LayeredDecomposition {
        layers,
        sizes,
        union,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, gnp, GraphFamily};
    use crate::pattern::PatternSpec;
    use crate::solver::{max_free_subset, SolveMode};

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    #[test]
    fn k6_two_layers_of_one() {
        let g = generate(&GraphFamily::Complete { n: 6 }).unwrap();
        let d = layered_mis(&g, 3, &cfg()).unwrap();
        assert_eq!(d.sizes, vec![1, 1]);
        assert_eq!(d.total, 2);
        // Matches the exact triangle-threshold optimum.
        let p = PatternSpec::clique_at_least(3).unwrap();
        let exact = max_free_subset(&g, &p, SolveMode::BranchAndBound, &cfg()).unwrap();
        assert_eq!(exact.size, 2);
    }

    #[test]
    fn c5_two_layers_of_two() {
        let g = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let d = layered_mis(&g, 3, &cfg()).unwrap();
        assert_eq!(d.sizes, vec![2, 2]);
        assert_eq!(d.layers[0].to_vec(), vec![0, 2]);
        assert_eq!(d.layers[1].to_vec(), vec![1, 3]);
        assert_eq!(d.total, 4);
    }

    #[test]
    fn edgeless_graph_takes_everything_in_layer_one() {
        let g = Graph::empty(7).unwrap();
        let d = layered_mis(&g, 4, &cfg()).unwrap();
        assert_eq!(d.sizes, vec![7, 0, 0]);
        assert_eq!(d.total, 7);
    }

    #[test]
    fn union_is_clique_threshold_free_and_below_optimum() {
        for seed in 0..20u64 {
            let g = gnp(9, 0.5, seed).unwrap();
            for k in [3usize, 4] {
                let d = layered_mis(&g, k, &cfg()).unwrap();
                assert_eq!(d.layers.len(), k - 1);
                assert!(clique_number(&g, d.union).0 <= k - 1);
                let p = PatternSpec::clique_at_least(k).unwrap();
                let exact = max_free_subset(&g, &p, SolveMode::BranchAndBound, &cfg()).unwrap();
                assert!(
                    d.total <= exact.size,
                    "layered bound exceeded optimum: seed {seed} k {k}"
                );
            }
        }
    }

    #[test]
    fn rejects_k_below_2() {
        let g = Graph::empty(3).unwrap();
        assert!(layered_mis(&g, 1, &cfg()).is_err());
    }
}
