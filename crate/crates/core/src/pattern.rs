//! Forbidden-pattern specifications and freeness tests.
//!
//! A vertex set S of a host graph H is *free* for a pattern when the induced
//! subgraph H[S] contains no copy of the forbidden structure: a fixed graph
//! G, any cycle, or any clique of a threshold size. "Copy" defaults to a
//! subgraph embedding (injective map sending pattern edges to host edges);
//! an induced mode is available for experimentation.

use std::fmt;

use crate::cliques;
use crate::error::{Error, Result};
use crate::generate::named_graph;
use crate::graph::{Graph, VertexSet};
use crate::graph6;

/// How a "copy" of a single pattern graph is matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CopyMode {
    /// Pattern edges must map to host edges (host may have extra edges).
    #[default]
    Subgraph,
    /// Pattern edges and non-edges must both be preserved.
    Induced,
}

/// What "free" forbids.
#[derive(Clone, PartialEq)]
pub enum PatternSpec {
    /// No copy of one fixed graph G. G must have at least one edge,
    /// otherwise every nonempty set would contain a copy.
    Single {
        graph: Graph,
        /// delta(G), cached.
        min_degree: usize,
        /// |E(G)|, cached.
        edge_count: usize,
    },
    /// No cycle of any length: free sets induce forests.
    Cycles,
    /// No clique on `k` or more vertices: free sets have clique number < k.
    CliqueAtLeast(usize),
}

impl PatternSpec {
    pub fn single(graph: Graph) -> Result<Self> {
        if graph.edge_count() == 0 {
            return Err(Error::Pattern(
                "a single-graph pattern needs at least one edge".into(),
            ));
        }
        let stats = graph.degree_stats();
        Ok(PatternSpec::Single {
            min_degree: stats.min_degree,
            edge_count: graph.edge_count(),
            graph,
        })
    }

    pub fn cycles() -> Self {
        PatternSpec::Cycles
    }

    pub fn clique_at_least(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::Pattern("clique threshold must be at least 2".into()));
        }
        Ok(PatternSpec::CliqueAtLeast(k))
    }

    /// The complete graph on two vertices; freeness for it is independence.
    pub fn k2() -> Self {
        let g = Graph::from_edges(2, &[(0, 1)]).expect("K2 is a valid graph");
        PatternSpec::single(g).expect("K2 has an edge")
    }

    pub fn as_single(&self) -> Option<&Graph> {
        match self {
            PatternSpec::Single { graph, .. } => Some(graph),
            _ => None,
        }
    }

    /// delta(G) for single patterns, 2 for the cycle family (every cycle is
    /// 2-regular), k - 1 for the clique family.
    pub fn min_degree(&self) -> usize {
        match self {
            PatternSpec::Single { min_degree, .. } => *min_degree,
            PatternSpec::Cycles => 2,
            PatternSpec::CliqueAtLeast(k) => k - 1,
        }
    }

    /// Parse the textual pattern syntax: a built-in graph name (`K3`, `C4`,
    /// `P4`, `K1_3`), `cycles`, `clique>=k`, or `@path` for a pattern read
    /// from a file (graph6, or the edge-list format if the content has a
    /// `;`).
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("cycles") {
            return Ok(PatternSpec::Cycles);
        }
        if let Some(rest) = text.strip_prefix("clique>=") {
            let k: usize = rest
                .parse()
                .map_err(|_| Error::Pattern(format!("malformed clique threshold {rest:?}")))?;
            return PatternSpec::clique_at_least(k);
        }
        if let Some(path) = text.strip_prefix('@') {
            let content = std::fs::read_to_string(path)?;
            let g = if content.contains(';') {
                Graph::parse_edge_list(&content)?
            } else {
                let line = content
                    .lines()
                    .find(|l| !l.trim().is_empty())
                    .ok_or_else(|| Error::Pattern(format!("pattern file {path} is empty")))?;
                graph6::decode(line)?
            };
            return PatternSpec::single(g);
        }
        match named_graph(text) {
            Some(g) => PatternSpec::single(g?),
            None => Err(Error::Pattern(format!(
                "unrecognized pattern {text:?}; expected a graph name, 'cycles', 'clique>=k' or '@file'"
            ))),
        }
    }
}

impl fmt::Debug for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternSpec::Single { graph, .. } => write!(f, "single({})", graph6::encode(graph)),
            PatternSpec::Cycles => write!(f, "cycles"),
            PatternSpec::CliqueAtLeast(k) => write!(f, "clique>={k}"),
        }
    }
}

impl fmt::Display for PatternSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An injective map from pattern vertices to host vertices sending pattern
/// edges to host edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `pairs[i] = (pattern vertex, host vertex)`.
    pub pairs: Vec<(usize, usize)>,
}

impl Embedding {
    pub fn host_image(&self) -> VertexSet {
        self.pairs.iter().map(|&(_, h)| h).collect()
    }

    /// Check injectivity and edge preservation against the given graphs.
    pub fn is_valid(&self, pattern: &Graph, host: &Graph) -> bool {
        let mut map = vec![usize::MAX; pattern.n()];
        let mut used = VertexSet::EMPTY;
        for &(p, h) in &self.pairs {
            if p >= pattern.n() || h >= host.n() || map[p] != usize::MAX || used.contains(h) {
                return false;
            }
            map[p] = h;
            used = used.with(h);
        }
        if map.iter().any(|&h| h == usize::MAX) {
            return false;
        }
        pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(map[u], map[v]))
    }
}

/// Why a set is not free.
#[derive(Clone, Debug)]
pub enum FreeWitness {
    /// A copy of the forbidden graph.
    Copy(Embedding),
    /// A cycle, as a closed vertex sequence.
    Cycle(Vec<usize>),
    /// A clique of the threshold size.
    Clique(VertexSet),
}

/// Backtracking embedding search. Pattern vertices are placed in descending
/// degree order; candidates are pruned by degree and by adjacency to the
/// already-placed neighbors (and non-neighbors in induced mode).
struct EmbedSearch<'a> {
    pattern: &'a Graph,
    host: &'a Graph,
    within: VertexSet,
    mode: CopyMode,
    order: Vec<usize>,
    host_degree: Vec<usize>,
    map: Vec<usize>,
    used: VertexSet,
}

impl<'a> EmbedSearch<'a> {
    fn new(pattern: &'a Graph, host: &'a Graph, within: VertexSet, mode: CopyMode) -> Self {
        let mut order: Vec<usize> = (0..pattern.n()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(pattern.degree(v)), v));
        let host_degree = (0..host.n())
            .map(|v| host.neighbors(v).intersection(within).len())
            .collect();
        EmbedSearch {
            pattern,
            host,
            within,
            mode,
            order,
            host_degree,
            map: vec![usize::MAX; pattern.n()],
            used: VertexSet::EMPTY,
        }
    }

    /// Candidate host vertices for pattern vertex `u` under the current
    /// partial map.
    fn candidates(&self, u: usize) -> VertexSet {
        let mut cand = self.within.difference(self.used);
        for w in self.pattern.neighbors(u).iter() {
            if self.map[w] != usize::MAX {
                cand = cand.intersection(self.host.neighbors(self.map[w]));
            }
        }
        if self.mode == CopyMode::Induced {
            for w in 0..self.pattern.n() {
                if w != u && self.map[w] != usize::MAX && !self.pattern.has_edge(u, w) {
                    cand = cand.difference(self.host.neighbors(self.map[w]));
                }
            }
        }
        let need = self.pattern.degree(u);
        cand.iter()
            .filter(|&h| self.host_degree[h] >= need)
            .collect()
    }

    /// Extend the partial map; calls `emit` on every completed embedding.
    /// `emit` returns false to stop the whole search.
    fn run(&mut self, level: usize, emit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if level == self.order.len() {
            return emit(&self.map);
        }
        let u = self.order[level];
        if self.map[u] != usize::MAX {
            return self.run(level + 1, emit);
        }
        for h in self.candidates(u).iter() {
            self.map[u] = h;
            self.used = self.used.with(h);
            let keep_going = self.run(level + 1, emit);
            self.map[u] = usize::MAX;
            self.used = self.used.without(h);
            if !keep_going {
                return false;
            }
        }
        true
    }
}

fn map_to_embedding(map: &[usize]) -> Embedding {
    Embedding {
        pairs: map.iter().enumerate().map(|(p, &h)| (p, h)).collect(),
    }
}

/// Find one embedding of `pattern` into the subgraph of `host` induced by
/// `within`, or `None`.
pub fn find_embedding(
    pattern: &Graph,
    host: &Graph,
    within: VertexSet,
    mode: CopyMode,
) -> Option<Embedding> {
    if pattern.n() > within.len() {
        return None;
    }
    let mut search = EmbedSearch::new(pattern, host, within, mode);
    let mut found = None;
    search.run(0, &mut |map| {
        found = Some(map_to_embedding(map));
        false
    });
    found
}

/// Find an embedding with pattern vertex `anchor_p` pinned to host vertex
/// `anchor_h`.
fn find_embedding_anchored(
    pattern: &Graph,
    host: &Graph,
    within: VertexSet,
    mode: CopyMode,
    anchor_p: usize,
    anchor_h: usize,
) -> Option<Embedding> {
    if pattern.n() > within.len() || !within.contains(anchor_h) {
        return None;
    }
    let mut search = EmbedSearch::new(pattern, host, within, mode);
    if search.host_degree[anchor_h] < pattern.degree(anchor_p) {
        return None;
    }
    search.map[anchor_p] = anchor_h;
    search.used = search.used.with(anchor_h);
    let mut found = None;
    search.run(0, &mut |map| {
        found = Some(map_to_embedding(map));
        false
    });
    found
}

/// Enumerate every embedding of `pattern` into the subgraph induced by
/// `within`, in deterministic order. The callback returns false to stop.
pub fn for_each_embedding(
    pattern: &Graph,
    host: &Graph,
    within: VertexSet,
    mode: CopyMode,
    mut emit: impl FnMut(&[usize]) -> bool,
) {
    if pattern.n() > within.len() {
        return;
    }
    let mut search = EmbedSearch::new(pattern, host, within, mode);
    search.run(0, &mut |map| emit(map));
}

/// Is the subgraph of `g` induced by `s` free of the forbidden pattern?
pub fn is_free(g: &Graph, s: VertexSet, p: &PatternSpec) -> bool {
    is_free_mode(g, s, p, CopyMode::Subgraph)
}

pub fn is_free_mode(g: &Graph, s: VertexSet, p: &PatternSpec, mode: CopyMode) -> bool {
    free_witness_mode(g, s, p, mode).is_none()
}

/// Like [`is_free`], returning the offending structure when the set is not
/// free.
pub fn free_witness(g: &Graph, s: VertexSet, p: &PatternSpec) -> Option<FreeWitness> {
    free_witness_mode(g, s, p, CopyMode::Subgraph)
}

pub fn free_witness_mode(
    g: &Graph,
    s: VertexSet,
    p: &PatternSpec,
    mode: CopyMode,
) -> Option<FreeWitness> {
    debug_assert!(s.is_subset_of(g.vertices()));
    match p {
        PatternSpec::Single { graph, .. } => {
            find_embedding(graph, g, s, mode).map(FreeWitness::Copy)
        }
        PatternSpec::Cycles => g.find_cycle_within(s).map(FreeWitness::Cycle),
        PatternSpec::CliqueAtLeast(k) => {
            cliques::find_clique_of_size(g, s, *k).map(FreeWitness::Clique)
        }
    }
}

/// Does adding `v` to the free set `s` create a copy through `v`?
///
/// For a set `s` that is already free this decides freeness of `s + v`
/// (copies not through `v` would already sit inside `s`), which is what the
/// exact searches branch on.
pub fn creates_copy_through(
    g: &Graph,
    s: VertexSet,
    v: usize,
    p: &PatternSpec,
    mode: CopyMode,
) -> bool {
    debug_assert!(!s.contains(v));
    match p {
        PatternSpec::Single { graph, .. } => {
            let within = s.with(v);
            (0..graph.n())
                .any(|pv| find_embedding_anchored(graph, g, within, mode, pv, v).is_some())
        }
        PatternSpec::Cycles => {
            // A cycle through v needs two of v's neighbors connected in H[s].
            let nbrs = g.neighbors(v).intersection(s);
            if nbrs.len() < 2 {
                return false;
            }
            g.components_within(s)
                .iter()
                .any(|c| c.intersection(nbrs).len() >= 2)
        }
        PatternSpec::CliqueAtLeast(k) => {
            cliques::find_clique_of_size(g, g.neighbors(v).intersection(s), k - 1).is_some()
        }
    }
}

/// Is `s` free with no free proper superset? (Every outside vertex would
/// close a copy.)
pub fn is_maximal_free(g: &Graph, s: VertexSet, p: &PatternSpec, mode: CopyMode) -> bool {
    if !is_free_mode(g, s, p, mode) {
        return false;
    }
    g.vertices()
        .difference(s)
        .iter()
        .all(|v| creates_copy_through(g, s, v, p, mode))
}

/// Remove a minimum-degree vertex from a single-graph pattern.
///
/// Ties break toward the lowest vertex index. Returns the reduced graph,
/// the removed vertex's degree, and the reduced-label positions of its
/// former neighbors (the attachment points).
pub fn pattern_minus_min_degree_vertex(p: &PatternSpec) -> Result<(Graph, usize, VertexSet)> {
    let graph = p
        .as_single()
        .ok_or_else(|| Error::Pattern("expected a single-graph pattern".into()))?;
    if graph.n() < 2 {
        return Err(Error::Pattern("pattern too small to remove a vertex".into()));
    }
    let min_deg = (0..graph.n()).map(|v| graph.degree(v)).min().unwrap();
    let removed = (0..graph.n())
        .find(|&v| graph.degree(v) == min_deg)
        .unwrap();
    let keep = graph.vertices().without(removed);
    let (reduced, old_labels) = graph.induced(keep);
    let mut attachment = VertexSet::EMPTY;
    for (new, &old) in old_labels.iter().enumerate() {
        if graph.has_edge(removed, old) {
            attachment = attachment.with(new);
        }
    }
    debug_assert_eq!(attachment.len(), min_deg);
    Ok((reduced, min_deg, attachment))
}

/// Graph isomorphism for small graphs: degree-sequence prefilter, then an
/// induced spanning embedding search.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    if a.degree_stats().sequence != b.degree_stats().sequence {
        return false;
    }
    find_embedding(a, b, b.vertices(), CopyMode::Induced).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, gnp, GraphFamily};

    fn k(n: usize) -> Graph {
        generate(&GraphFamily::Complete { n }).unwrap()
    }

    fn c(n: usize) -> Graph {
        generate(&GraphFamily::Cycle { n }).unwrap()
    }

    fn path(n: usize) -> Graph {
        generate(&GraphFamily::Path { n }).unwrap()
    }

    fn petersen() -> Graph {
        generate(&GraphFamily::Petersen).unwrap()
    }

    #[test]
    fn pattern_requires_an_edge() {
        assert!(PatternSpec::single(Graph::empty(3).unwrap()).is_err());
        assert!(PatternSpec::clique_at_least(1).is_err());
    }

    #[test]
    fn k6_contains_triangles_with_valid_witness() {
        let host = k(6);
        let p = PatternSpec::single(k(3)).unwrap();
        let w = free_witness(&host, host.vertices(), &p);
        match w {
            Some(FreeWitness::Copy(e)) => assert!(e.is_valid(&k(3), &host)),
            other => panic!("expected a copy witness, got {other:?}"),
        }
    }

    #[test]
    fn petersen_is_triangle_free() {
        let p = PatternSpec::single(k(3)).unwrap();
        assert!(is_free(&petersen(), petersen().vertices(), &p));
    }

    #[test]
    fn cycle_freeness_on_c5() {
        let g = c(5);
        assert!(!is_free(&g, g.vertices(), &PatternSpec::Cycles));
        let four: VertexSet = [0, 1, 2, 3].into_iter().collect();
        assert!(is_free(&g, four, &PatternSpec::Cycles));
    }

    #[test]
    fn k2_freeness_is_independence() {
        for seed in 0..30u64 {
            let g = gnp(8, 0.5, seed).unwrap();
            let p = PatternSpec::k2();
            for mask in 0u64..256 {
                let s = VertexSet::from_mask(mask);
                let independent = s
                    .iter()
                    .all(|u| g.neighbors(u).intersection(s).is_empty());
                assert_eq!(is_free(&g, s, &p), independent, "seed {seed} mask {mask}");
            }
        }
    }

    #[test]
    fn freeness_is_hereditary() {
        let patterns = [
            PatternSpec::single(k(3)).unwrap(),
            PatternSpec::single(c(4)).unwrap(),
            PatternSpec::single(path(4)).unwrap(),
            PatternSpec::Cycles,
            PatternSpec::clique_at_least(3).unwrap(),
        ];
        for seed in 0..12u64 {
            let g = gnp(8, 0.5, seed).unwrap();
            for p in &patterns {
                for mask in (0u64..256).step_by(3) {
                    let s = VertexSet::from_mask(mask);
                    if is_free(&g, s, p) {
                        for v in s.iter() {
                            assert!(
                                is_free(&g, s.without(v), p),
                                "heredity failed: seed {seed} mask {mask} pattern {p}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn anchored_check_matches_full_check() {
        let patterns = [
            PatternSpec::single(k(3)).unwrap(),
            PatternSpec::single(c(4)).unwrap(),
            PatternSpec::single(path(4)).unwrap(),
            PatternSpec::Cycles,
            PatternSpec::clique_at_least(3).unwrap(),
        ];
        for seed in 40..55u64 {
            let g = gnp(7, 0.5, seed).unwrap();
            for p in &patterns {
                for mask in 0u64..128 {
                    let s = VertexSet::from_mask(mask);
                    if !is_free(&g, s, p) {
                        continue;
                    }
                    for v in g.vertices().difference(s).iter() {
                        assert_eq!(
                            creates_copy_through(&g, s, v, p, CopyMode::Subgraph),
                            !is_free(&g, s.with(v), p),
                            "seed {seed} mask {mask} v {v} pattern {p}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn induced_and_subgraph_modes_differ_on_p3_in_k3() {
        let host = k(3);
        let p3 = path(3);
        assert!(find_embedding(&p3, &host, host.vertices(), CopyMode::Subgraph).is_some());
        assert!(find_embedding(&p3, &host, host.vertices(), CopyMode::Induced).is_none());
    }

    #[test]
    fn isolated_pattern_vertices_embed_anywhere() {
        // K2 plus an isolated vertex embeds into any graph with an edge and
        // three vertices.
        let pat = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let host = path(3);
        assert!(find_embedding(&pat, &host, host.vertices(), CopyMode::Subgraph).is_some());
        let two: VertexSet = [0, 1].into_iter().collect();
        assert!(find_embedding(&pat, &host, two, CopyMode::Subgraph).is_none());
    }

    #[test]
    fn min_degree_vertex_removal() {
        let (reduced, d, att) =
            pattern_minus_min_degree_vertex(&PatternSpec::single(k(3)).unwrap()).unwrap();
        assert!(are_isomorphic(&reduced, &k(2)));
        assert_eq!(d, 2);
        assert_eq!(att.len(), 2);

        let (reduced, d, _) =
            pattern_minus_min_degree_vertex(&PatternSpec::single(path(3)).unwrap()).unwrap();
        assert!(are_isomorphic(&reduced, &path(2)));
        assert_eq!(d, 1);

        let (reduced, d, att) =
            pattern_minus_min_degree_vertex(&PatternSpec::single(c(4)).unwrap()).unwrap();
        assert!(are_isomorphic(&reduced, &path(3)));
        assert_eq!(d, 2);
        // The attachment points of a removed C4 vertex are the path ends.
        assert_eq!(att.len(), 2);
        assert!(reduced.degree(att.min().unwrap()) == 1);
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&c(5), &c(5)));
        assert!(!are_isomorphic(&c(5), &path(5)));
        // C6 vs two triangles: same degree sequence, not isomorphic.
        let two_triangles =
            Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap();
        assert!(!are_isomorphic(&c(6), &two_triangles));
    }

    #[test]
    fn parse_pattern_syntax() {
        assert!(matches!(
            PatternSpec::parse("cycles").unwrap(),
            PatternSpec::Cycles
        ));
        assert!(matches!(
            PatternSpec::parse("clique>=4").unwrap(),
            PatternSpec::CliqueAtLeast(4)
        ));
        let k3 = PatternSpec::parse("K3").unwrap();
        assert_eq!(k3.as_single().unwrap().n(), 3);
        assert!(PatternSpec::parse("clique>=1").is_err());
        assert!(PatternSpec::parse("nonsense").is_err());
    }
}
