//! Undirected simple graphs on at most 64 vertices.
//!
//! Vertices are dense integers `0..n`. Adjacency is stored as one `u64`
//! neighbor mask per vertex, which keeps the exact-search kernels branch-free
//! and makes vertex subsets cheap to pass around.

use std::fmt;

use crate::error::{Error, Result};

/// Hard representation limit: one bit per vertex in a `u64`.
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..64`, stored as a bit mask.
///
/// The set does not know which graph it belongs to; operations that need the
/// graph take both.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub fn from_mask(mask: u64) -> Self {
        VertexSet(mask)
    }

    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn mask(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterate members in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compare two sets as ascending vertex sequences.
    ///
    /// The set containing the smallest vertex where the two differ is the
    /// smaller one; a proper prefix sorts first. Used to tie-break equal-size
    /// optima deterministically.
    pub fn lex_cmp(self, other: Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let diff = self.0 ^ other.0;
        let low = diff & diff.wrapping_neg();
        if self.0 & low != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl serde::Serialize for VertexSet {
    /// Serializes as a sorted array of vertex indices.
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut mask = 0u64;
        for v in iter {
            debug_assert!(v < MAX_VERTICES);
            mask |= 1u64 << v;
        }
        VertexSet(mask)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Maximum degree, minimum degree and the descending degree sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeStats {
    pub max_degree: usize,
    pub min_degree: usize,
    /// Sorted descending.
    pub sequence: Vec<usize>,
}

/// An undirected simple graph on vertices `0..n`, `n <= 64`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
            edge_count: 0,
        })
    }

    /// Build a graph from an explicit edge list.
    ///
    /// Rejects out-of-range endpoints, self-loops and duplicate edges, so the
    /// result is always simple.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Parse(format!(
                "edge ({u}, {v}) out of range for n={}",
                self.n
            )));
        }
        if u == v {
            return Err(Error::Parse(format!("self-loop at vertex {u}")));
        }
        if self.adj[u] >> v & 1 == 1 {
            return Err(Error::Parse(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        self.edge_count += 1;
        Ok(())
    }

    /// Add an edge that is known to be absent; used by generators.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        debug_assert_eq!(self.adj[u] >> v & 1, 0);
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        self.edge_count += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// All vertices as a set.
    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n {
            let higher = self.adj[u] & !((1u64 << u) | (1u64 << u).wrapping_sub(1));
            for v in VertexSet(higher).iter() {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of edges with both endpoints inside `within`.
    pub fn edges_within(&self, within: VertexSet) -> usize {
        let mut twice = 0usize;
        for v in within.iter() {
            twice += (self.adj[v] & within.mask()).count_ones() as usize;
        }
        twice / 2
    }

    /// Number of edges with exactly one endpoint in `s`.
    pub fn cut_size(&self, s: VertexSet) -> usize {
        let outside = self.vertices().difference(s);
        let mut total = 0usize;
        for v in outside.iter() {
            total += (self.adj[v] & s.mask()).count_ones() as usize;
        }
        total
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let mut sequence: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        let max_degree = sequence.iter().copied().max().unwrap_or(0);
        let min_degree = sequence.iter().copied().min().unwrap_or(0);
        sequence.sort_unstable_by(|a, b| b.cmp(a));
        DegreeStats {
            max_degree,
            min_degree,
            sequence,
        }
    }

    /// Whether the graph is connected. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in VertexSet(frontier).iter() {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen.count_ones() as usize == self.n
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut remaining = within;
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let mut seen = 1u64 << start;
            let mut frontier = seen;
            while frontier != 0 {
                let mut next = 0u64;
                for v in VertexSet(frontier).iter() {
                    next |= self.adj[v] & within.mask();
                }
                frontier = next & !seen;
                seen |= next;
            }
            out.push(VertexSet(seen));
            remaining = remaining.difference(VertexSet(seen));
        }
        out
    }

    /// Whether the subgraph induced by `within` is acyclic.
    pub fn is_acyclic_within(&self, within: VertexSet) -> bool {
        // A forest on k vertices with c components has exactly k - c edges.
        let e = self.edges_within(within);
        let c = self.components_within(within).len();
        e + c == within.len()
    }

    /// A cycle contained in `within`, as a vertex sequence, if one exists.
    pub fn find_cycle_within(&self, within: VertexSet) -> Option<Vec<usize>> {
        // Iterative DFS keeping parent pointers; a visited neighbor that is
        // not the parent closes a cycle.
        let mut parent = vec![usize::MAX; self.n];
        let mut visited = VertexSet::EMPTY;
        for root in within.iter() {
            if visited.contains(root) {
                continue;
            }
            let mut stack = vec![(root, usize::MAX)];
            while let Some((v, from)) = stack.pop() {
                if visited.contains(v) {
                    continue;
                }
                visited = visited.with(v);
                parent[v] = from;
                for w in self.neighbors(v).intersection(within).iter() {
                    if w == from {
                        continue;
                    }
                    if visited.contains(w) {
                        // Walk v up to the common ancestor w.
                        let mut path = vec![v];
                        let mut cur = v;
                        while cur != w && parent[cur] != usize::MAX {
                            cur = parent[cur];
                            path.push(cur);
                        }
                        if cur == w {
                            return Some(path);
                        }
                    } else {
                        stack.push((w, v));
                    }
                }
            }
        }
        None
    }

    /// Vertices of a path from `a` to `b` inside `within` (BFS, so a
    /// shortest one), or `None` if they are not connected there.
    pub fn path_between_within(&self, a: usize, b: usize, within: VertexSet) -> Option<Vec<usize>> {
        if !within.contains(a) || !within.contains(b) {
            return None;
        }
        if a == b {
            return Some(vec![a]);
        }
        let mut parent = vec![usize::MAX; self.n];
        let mut seen = VertexSet::singleton(a);
        let mut frontier = vec![a];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for &v in &frontier {
                for w in self.neighbors(v).intersection(within).iter() {
                    if !seen.contains(w) {
                        seen = seen.with(w);
                        parent[w] = v;
                        if w == b {
                            let mut path = vec![b];
                            let mut cur = b;
                            while cur != a {
                                cur = parent[cur];
                                path.push(cur);
                            }
                            path.reverse();
                            return Some(path);
                        }
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        None
    }

    /// The subgraph induced by `within`, with vertices relabeled `0..k` in
    /// ascending order of their original labels. Returns the graph and the
    /// map from new labels back to the originals.
    pub fn induced(&self, within: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = within.to_vec();
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in old.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = Graph {
            n: old.len(),
            adj: vec![0; old.len()],
            edge_count: 0,
        };
        for (i, &v) in old.iter().enumerate() {
            for w in self.neighbors(v).intersection(within).iter() {
                if w > v {
                    g.add_edge(i, pos[w]);
                }
            }
        }
        (g, old)
    }

    /// Parse the edge-list format: vertex count, `;`, then comma-separated
    /// `u v` pairs. Whitespace is insignificant, a trailing comma is allowed.
    ///
    /// `"3; 0 1, 1 2"` is the path on three vertices.
    pub fn parse_edge_list(input: &str) -> Result<Self> {
        let (head, tail) = input
            .split_once(';')
            .ok_or_else(|| Error::Parse("edge list must contain ';' after the vertex count".into()))?;
        let n: usize = head
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("malformed vertex count {:?}", head.trim())))?;
        let mut g = Graph::empty(n)?;
        for chunk in tail.split(',') {
            let chunk = chunk.trim();
            if chunk.is_empty() {
                continue;
            }
            let mut it = chunk.split_whitespace();
            let (u, v) = match (it.next(), it.next(), it.next()) {
                (Some(u), Some(v), None) => (u, v),
                _ => {
                    return Err(Error::Parse(format!(
                        "edge {chunk:?} is not a pair of vertex indices"
                    )))
                }
            };
            let u: usize = u
                .parse()
                .map_err(|_| Error::Parse(format!("malformed vertex index {u:?}")))?;
            let v: usize = v
                .parse()
                .map_err(|_| Error::Parse(format!("malformed vertex index {v:?}")))?;
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    /// Serialize to the edge-list format accepted by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let pairs: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{u} {v}"))
            .collect();
        format!("{}; {}", self.n, pairs.join(", "))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, e={}, {:?})", self.n, self.edge_count, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 2, 5].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(2));
        assert!(!s.contains(1));
        assert_eq!(s.to_vec(), vec![0, 2, 5]);
        assert_eq!(s.without(2).to_vec(), vec![0, 5]);
        assert_eq!(format!("{s}"), "{0,2,5}");
    }

    #[test]
    fn lex_order_compares_sorted_sequences() {
        use std::cmp::Ordering::*;
        let set = |vs: &[usize]| vs.iter().copied().collect::<VertexSet>();
        assert_eq!(set(&[0, 3]).lex_cmp(set(&[1, 2])), Less);
        assert_eq!(set(&[0, 1]).lex_cmp(set(&[0, 2])), Less);
        assert_eq!(set(&[0]).lex_cmp(set(&[0, 1])), Less);
        assert_eq!(set(&[2]).lex_cmp(set(&[0, 1])), Greater);
        assert_eq!(set(&[1, 4]).lex_cmp(set(&[1, 4])), Equal);
    }

    #[test]
    fn parse_path_p3() {
        let g = Graph::parse_edge_list("3; 0 1, 1 2").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parse_rejects_self_loop() {
        let err = Graph::parse_edge_list("2; 0 0").unwrap_err();
        assert!(matches!(err, Error::Parse(_)), "{err}");
    }

    #[test]
    fn parse_rejects_duplicate_edge() {
        assert!(Graph::parse_edge_list("3; 0 1, 1 0").is_err());
    }

    #[test]
    fn parse_rejects_out_of_range() {
        assert!(Graph::parse_edge_list("3; 0 3").is_err());
    }

    #[test]
    fn parse_allows_edgeless_and_trailing_comma() {
        assert_eq!(Graph::parse_edge_list("4;").unwrap().edge_count(), 0);
        assert_eq!(Graph::parse_edge_list("3; 0 1,").unwrap().edge_count(), 1);
    }

    #[test]
    fn edge_list_round_trip() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let back = Graph::parse_edge_list(&g.to_edge_list()).unwrap();
        assert_eq!(g, back);
    }

    #[test]
    fn cut_and_within_counts() {
        // C5 with S = {0, 2}: cut has 4 edges, outside has 1 edge (3-4).
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let s: VertexSet = [0, 2].into_iter().collect();
        assert_eq!(g.cut_size(s), 4);
        assert_eq!(g.edges_within(g.vertices().difference(s)), 1);
    }

    #[test]
    fn acyclicity_and_cycle_witness() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!g.is_acyclic_within(g.vertices()));
        let cyc = g.find_cycle_within(g.vertices()).unwrap();
        assert!(cyc.len() >= 3);
        // Witness really is a closed walk of distinct vertices.
        for i in 0..cyc.len() {
            assert!(g.has_edge(cyc[i], cyc[(i + 1) % cyc.len()]));
        }
        let four: VertexSet = [0, 1, 2, 3].into_iter().collect();
        assert!(g.is_acyclic_within(four));
        assert!(g.find_cycle_within(four).is_none());
    }

    #[test]
    fn connectivity() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!g.is_connected());
        let h = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(h.is_connected());
        assert_eq!(g.components_within(g.vertices()).len(), 2);
    }

    #[test]
    fn induced_subgraph_preserves_label_order() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let (sub, back) = g.induced([1, 3, 4].into_iter().collect());
        assert_eq!(back, vec![1, 3, 4]);
        assert_eq!(sub.n(), 3);
        // Only edge among {1,3,4} in C5 is 3-4, relabeled 1-2.
        assert_eq!(sub.edges(), vec![(1, 2)]);
    }
}
