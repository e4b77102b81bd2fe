//! Clique enumeration and clique-number computation.

use crate::graph::{Graph, VertexSet};

/// All maximal cliques of the subgraph induced by `within`, each reported
/// once, sorted lexicographically.
///
/// Bron-Kerbosch with pivoting; the pivot is the candidate covering the most
/// of P (ties to the lowest index), so the recursion and the output order
/// are deterministic.
pub fn maximal_cliques(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if !within.is_empty() {
        bron_kerbosch(g, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    }
    out.sort_by(|a, b| a.lex_cmp(*b));
    out
}

fn bron_kerbosch(
    g: &Graph,
    r: VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() && x.is_empty() {
        out.push(r);
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .map(|u| (g.neighbors(u).intersection(p).len(), std::cmp::Reverse(u)))
        .max()
        .map(|(_, std::cmp::Reverse(u))| u)
        .expect("p or x is nonempty");
    let mut rest = p.difference(g.neighbors(pivot));
    while let Some(v) = rest.min() {
        rest = rest.without(v);
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p = p.without(v);
        x = x.with(v);
    }
}

/// Clique number of the subgraph induced by `within`, with a witness clique
/// (largest, ties to the lexicographically smallest).
pub fn clique_number(g: &Graph, within: VertexSet) -> (usize, VertexSet) {
    if within.is_empty() {
        return (0, VertexSet::EMPTY);
    }
    let mut best = VertexSet::EMPTY;
    for c in maximal_cliques(g, within) {
        if c.len() > best.len() || (c.len() == best.len() && c.lex_cmp(best).is_lt()) {
            best = c;
        }
    }
    (best.len(), best)
}

/// Find any clique of exactly `size` vertices inside `within`.
pub fn find_clique_of_size(g: &Graph, within: VertexSet, size: usize) -> Option<VertexSet> {
    fn rec(g: &Graph, chosen: VertexSet, cand: VertexSet, need: usize) -> Option<VertexSet> {
        if need == 0 {
            return Some(chosen);
        }
        if cand.len() < need {
            return None;
        }
        let mut cand = cand;
        while let Some(v) = cand.min() {
            cand = cand.without(v);
            if cand.len() + 1 < need {
                return None;
            }
            if let Some(hit) = rec(
                g,
                chosen.with(v),
                cand.intersection(g.neighbors(v)),
                need - 1,
            ) {
                return Some(hit);
            }
        }
        None
    }
    rec(g, VertexSet::EMPTY, within, size)
}

/// Every nonempty clique of the subgraph induced by `within`, intended as a
/// brute-force oracle on small graphs (the count is exponential).
pub fn all_cliques(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    fn rec(g: &Graph, chosen: VertexSet, cand: VertexSet, out: &mut Vec<VertexSet>) {
        let mut cand = cand;
        while let Some(v) = cand.min() {
            cand = cand.without(v);
            let next = chosen.with(v);
            out.push(next);
            rec(g, next, cand.intersection(g.neighbors(v)), out);
        }
    }
    let mut out = Vec::new();
    rec(g, VertexSet::EMPTY, within, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, gnp, GraphFamily};

    #[test]
    fn k4_has_one_maximal_clique() {
        let g = generate(&GraphFamily::Complete { n: 4 }).unwrap();
        assert_eq!(maximal_cliques(&g, g.vertices()), vec![g.vertices()]);
    }

    #[test]
    fn p3_has_its_two_edges() {
        let g = generate(&GraphFamily::Path { n: 3 }).unwrap();
        let cliques = maximal_cliques(&g, g.vertices());
        let expect: Vec<VertexSet> = vec![
            [0, 1].into_iter().collect(),
            [1, 2].into_iter().collect(),
        ];
        assert_eq!(cliques, expect);
    }

    #[test]
    fn petersen_maximal_cliques_are_its_15_edges() {
        let g = generate(&GraphFamily::Petersen).unwrap();
        let cliques = maximal_cliques(&g, g.vertices());
        assert_eq!(cliques.len(), 15);
        assert!(cliques.iter().all(|c| c.len() == 2));
        assert_eq!(clique_number(&g, g.vertices()).0, 2);
    }

    #[test]
    fn clique_numbers() {
        let k6 = generate(&GraphFamily::Complete { n: 6 }).unwrap();
        assert_eq!(clique_number(&k6, k6.vertices()).0, 6);
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        let (w, witness) = clique_number(&c5, c5.vertices());
        assert_eq!(w, 2);
        assert_eq!(witness.to_vec(), vec![0, 1]);
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(clique_number(&e3, e3.vertices()).0, 1);
        assert_eq!(clique_number(&e3, VertexSet::EMPTY).0, 0);
    }

    #[test]
    fn clique_of_size_search() {
        let g = gnp(9, 0.6, 3).unwrap();
        let (w, _) = clique_number(&g, g.vertices());
        assert!(find_clique_of_size(&g, g.vertices(), w).is_some());
        assert!(find_clique_of_size(&g, g.vertices(), w + 1).is_none());
        let c = find_clique_of_size(&g, g.vertices(), w).unwrap();
        for u in c.iter() {
            for v in c.iter() {
                assert!(u == v || g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn maximal_cliques_agree_with_all_cliques_on_random_graphs() {
        for seed in 0..20u64 {
            let g = gnp(8, 0.5, seed).unwrap();
            let maximal = maximal_cliques(&g, g.vertices());
            let all = all_cliques(&g, g.vertices());
            // Every maximal clique is a clique, and no clique properly
            // contains a maximal one.
            for m in &maximal {
                assert!(all.contains(m));
                for c in &all {
                    assert!(!(m.is_subset_of(*c) && c.len() > m.len()), "seed {seed}");
                }
            }
            // Every clique extends to some maximal clique.
            for c in &all {
                assert!(maximal.iter().any(|m| c.is_subset_of(*m)), "seed {seed}");
            }
        }
    }
}
