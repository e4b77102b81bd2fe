//! Pattern-free chromatic number: the minimum number of classes in a vertex
//! partition where every class is free.
//!
//! With the K2 pattern this is the ordinary chromatic number. Search is
//! iterative deepening on the class count with backtracking assignment;
//! vertex 0 is pinned to class 0 and a vertex may open at most one new
//! class, which breaks class-relabeling symmetry.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::pattern::{creates_copy_through, CopyMode, PatternSpec};
use crate::solver::SolverConfig;

/// Minimum k admitting a partition of the vertices into k free classes,
/// with a witness partition. Always at most n: singleton classes are free
/// for every admissible pattern.
pub fn gfree_chromatic_number(
    g: &Graph,
    p: &PatternSpec,
    cfg: &SolverConfig,
) -> Result<(usize, Vec<VertexSet>)> {
    gfree_chromatic_number_with(g, p, CopyMode::Subgraph, cfg)
}

pub fn gfree_chromatic_number_with(
    g: &Graph,
    p: &PatternSpec,
    copy_mode: CopyMode,
    cfg: &SolverConfig,
) -> Result<(usize, Vec<VertexSet>)> {
    if g.n() > cfg.chi_cap {
        return Err(Error::OverCap {
            n: g.n(),
            cap: cfg.chi_cap,
            what: "chromatic-search",
        });
    }
    if g.n() == 0 {
        return Ok((0, Vec::new()));
    }
    for k in 1..=g.n() {
        if let Some(classes) = try_color(g, p, copy_mode, k) {
            return Ok((k, classes));
        }
    }
    unreachable!("singleton classes always give a valid n-coloring")
}

fn try_color(g: &Graph, p: &PatternSpec, copy_mode: CopyMode, k: usize) -> Option<Vec<VertexSet>> {
    fn rec(
        g: &Graph,
        p: &PatternSpec,
        copy_mode: CopyMode,
        k: usize,
        v: usize,
        used: usize,
        classes: &mut Vec<VertexSet>,
    ) -> bool {
        if v == g.n() {
            return true;
        }
        // Classes 0..used are open; class `used` (if within k) starts fresh.
        let limit = (used + 1).min(k);
        for c in 0..limit {
            if creates_copy_through(g, classes[c], v, p, copy_mode) {
                continue;
            }
            classes[c] = classes[c].with(v);
            let next_used = used.max(c + 1);
            if rec(g, p, copy_mode, k, v + 1, next_used, classes) {
                return true;
            }
            classes[c] = classes[c].without(v);
        }
        false
    }
    let mut classes = vec![VertexSet::EMPTY; k];
    if rec(g, p, copy_mode, k, 0, 0, &mut classes) {
        classes.retain(|c| !c.is_empty());
        Some(classes)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, GraphFamily};
    use crate::pattern::is_free;

    fn cfg() -> SolverConfig {
        SolverConfig::default()
    }

    fn k(n: usize) -> Graph {
        generate(&GraphFamily::Complete { n }).unwrap()
    }

    #[test]
    fn k6_triangle_chromatic_is_3() {
        let p = PatternSpec::single(k(3)).unwrap();
        let (chi, classes) = gfree_chromatic_number(&k(6), &p, &cfg()).unwrap();
        assert_eq!(chi, 3);
        assert_eq!(classes.len(), 3);
        let mut seen = VertexSet::EMPTY;
        for c in &classes {
            assert!(is_free(&k(6), *c, &p));
            assert!(seen.intersection(*c).is_empty());
            seen = seen.union(*c);
        }
        assert_eq!(seen, k(6).vertices());
    }

    #[test]
    fn k2_pattern_gives_ordinary_chromatic_number() {
        let p = PatternSpec::k2();
        let c5 = generate(&GraphFamily::Cycle { n: 5 }).unwrap();
        assert_eq!(gfree_chromatic_number(&c5, &p, &cfg()).unwrap().0, 3);
        let c6 = generate(&GraphFamily::Cycle { n: 6 }).unwrap();
        assert_eq!(gfree_chromatic_number(&c6, &p, &cfg()).unwrap().0, 2);
        let pet = generate(&GraphFamily::Petersen).unwrap();
        assert_eq!(gfree_chromatic_number(&pet, &p, &cfg()).unwrap().0, 3);
        assert_eq!(gfree_chromatic_number(&k(6), &p, &cfg()).unwrap().0, 6);
    }

    #[test]
    fn free_host_needs_one_class() {
        let p = PatternSpec::single(k(3)).unwrap();
        let pet = generate(&GraphFamily::Petersen).unwrap();
        assert_eq!(gfree_chromatic_number(&pet, &p, &cfg()).unwrap().0, 1);
    }

    #[test]
    fn cycle_family_chromatic_is_vertex_arboricity() {
        // K5 splits into induced forests only with 3 classes of size <= 2...
        // actually ceil(5/2) = 3: classes of at most 2 vertices are forests.
        let (chi, _) = gfree_chromatic_number(&k(5), &PatternSpec::Cycles, &cfg()).unwrap();
        assert_eq!(chi, 3);
    }

    #[test]
    fn over_cap() {
        let g = Graph::empty(13).unwrap();
        assert!(matches!(
            gfree_chromatic_number(&g, &PatternSpec::k2(), &cfg()),
            Err(Error::OverCap { .. })
        ));
    }
}
