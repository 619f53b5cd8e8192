//! Simple undirected graphs with dense vertex ids `0..n`.
//!
//! Neighbor lists are kept sorted, so adjacency tests are binary searches
//! and edge iteration is cache-friendly. Graphs never contain self-loops
//! or parallel edges; every mutating operation maintains symmetry and the
//! exact edge count.

use crate::error::{Error, Result};

/// A finite simple undirected graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    /// Sorted neighbor ids per vertex.
    adj: Vec<Vec<usize>>,
    /// Number of edges, maintained incrementally.
    edges: usize,
}

/// Degrees of a graph together with their extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
}

/// The named constructions understood by [`Graph::named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Path,
    Star,
    Cycle,
    Complete,
    /// Circular ladder: two disjoint `size`-cycles joined by a perfect
    /// matching of rung edges. 3-regular with `3 * size` edges.
    Prism,
}

impl std::str::FromStr for GraphKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(GraphKind::Path),
            "star" => Ok(GraphKind::Star),
            "cycle" => Ok(GraphKind::Cycle),
            "complete" => Ok(GraphKind::Complete),
            "prism" => Ok(GraphKind::Prism),
            other => Err(Error::Unsupported(format!(
                "unknown graph kind {other:?}; expected path, star, cycle, complete or prism"
            ))),
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edges: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting out-of-range ids and
    /// self-loops. Duplicate pairs are dropped silently; use
    /// [`Graph::from_edges_reporting`] to observe them.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Ok(Self::from_edges_reporting(n, edges)?.0)
    }

    /// Like [`Graph::from_edges`], but also reports whether duplicate
    /// pairs were dropped, so lenient loaders can warn.
    pub fn from_edges_reporting(n: usize, edges: &[(usize, usize)]) -> Result<(Self, bool)> {
        let mut g = Graph::new(n);
        let mut duplicates = false;
        for &(u, v) in edges {
            match g.add_edge(u, v) {
                Ok(()) => {}
                Err(Error::AlreadyAdjacent { .. }) => duplicates = true,
                Err(e) => return Err(e),
            }
        }
        Ok((g, duplicates))
    }

    /// One of the standard constructions; see [`GraphKind`].
    ///
    /// `size` is the vertex count for path, star, cycle and complete, and
    /// the cycle length for prism (which has `2 * size` vertices). Paths
    /// and stars need `size >= 1`, the rest `size >= 3`.
    pub fn named(kind: GraphKind, size: usize) -> Result<Self> {
        match kind {
            GraphKind::Path => Self::path(size),
            GraphKind::Star => Self::star(size),
            GraphKind::Cycle => Self::cycle(size),
            GraphKind::Complete => Self::complete(size),
            GraphKind::Prism => Self::prism(size),
        }
    }

    /// The path on `n` vertices, `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::SizeTooSmall {
                what: "path",
                size: n,
                min: 1,
            });
        }
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(u - 1, u).expect("path edges are valid");
        }
        Ok(g)
    }

    /// The star on `n` vertices: vertex 0 adjacent to all others.
    pub fn star(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::SizeTooSmall {
                what: "star",
                size: n,
                min: 1,
            });
        }
        let mut g = Graph::new(n);
        for u in 1..n {
            g.add_edge(0, u).expect("star edges are valid");
        }
        Ok(g)
    }

    /// The cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::SizeTooSmall {
                what: "cycle",
                size: n,
                min: 3,
            });
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            g.add_edge(u, (u + 1) % n).expect("cycle edges are valid");
        }
        Ok(g)
    }

    /// The complete graph on `n >= 3` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::SizeTooSmall {
                what: "complete",
                size: n,
                min: 3,
            });
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).expect("complete edges are valid");
            }
        }
        Ok(g)
    }

    /// The prism (circular ladder) over two `s`-cycles, `s >= 3`: outer
    /// cycle `0..s`, inner cycle `s..2s`, rungs `k - (s + k)`.
    pub fn prism(s: usize) -> Result<Self> {
        if s < 3 {
            return Err(Error::SizeTooSmall {
                what: "prism",
                size: s,
                min: 3,
            });
        }
        let mut g = Graph::new(2 * s);
        for k in 0..s {
            g.add_edge(k, (k + 1) % s).expect("outer cycle");
            g.add_edge(s + k, s + (k + 1) % s).expect("inner cycle");
            g.add_edge(k, s + k).expect("rung");
        }
        Ok(g)
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    /// Degree of `u`. Panics if `u` is out of range.
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    /// Sorted neighbors of `u`. Panics if `u` is out of range.
    pub fn neighbors(&self, u: usize) -> &[usize] {
        &self.adj[u]
    }

    pub fn has_vertex(&self, u: usize) -> bool {
        u < self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.has_vertex(u) && self.has_vertex(v) && self.adj[u].binary_search(&v).is_ok()
    }

    fn check_vertex(&self, u: usize) -> Result<()> {
        if self.has_vertex(u) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: u,
                order: self.order(),
            })
        }
    }

    /// Appends an isolated vertex and returns its id `n`.
    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    /// Inserts the edge `uv`. Fails on out-of-range ids, self-loops and
    /// already-present edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        let pos_v = match self.adj[u].binary_search(&v) {
            Ok(_) => return Err(Error::AlreadyAdjacent { u, v }),
            Err(pos) => pos,
        };
        self.adj[u].insert(pos_v, v);
        let pos_u = self.adj[v]
            .binary_search(&u)
            .expect_err("symmetry: uv was absent");
        self.adj[v].insert(pos_u, u);
        self.edges += 1;
        Ok(())
    }

    /// Removes the edge `uv`. Fails if it is not present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let pos_v = self.adj[u]
            .binary_search(&v)
            .map_err(|_| Error::NotAnEdge { u, v })?;
        self.adj[u].remove(pos_v);
        let pos_u = self.adj[v]
            .binary_search(&u)
            .expect("symmetry: uv was present");
        self.adj[v].remove(pos_u);
        self.edges -= 1;
        Ok(())
    }

    /// All edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nbrs)| nbrs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        DegreeProfile {
            max_degree: degrees.iter().copied().max().unwrap_or(0),
            min_degree: degrees.iter().copied().min().unwrap_or(0),
            degrees,
        }
    }

    /// Maximum degree; 0 for the empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// True iff every vertex is reachable from vertex 0 (vacuously true
    /// for `n <= 1`).
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// True iff the graph is connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.order() >= 1 && self.edges + 1 == self.order() && self.is_connected()
    }

    /// The graph with vertex `u` renamed to `perm[u]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length mismatch");
        let mut g = Graph::new(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])
                .expect("permuted edge is valid");
        }
        g
    }

    /// Handshake identity; holds by construction, checked in debug builds.
    #[cfg(debug_assertions)]
    pub(crate) fn debug_validate(&self) {
        let degree_sum: usize = self.adj.iter().map(Vec::len).sum();
        debug_assert_eq!(degree_sum, 2 * self.edges, "handshake violated");
        for (u, nbrs) in self.adj.iter().enumerate() {
            debug_assert!(nbrs.windows(2).all(|w| w[0] < w[1]), "unsorted adjacency");
            debug_assert!(!nbrs.contains(&u), "self-loop");
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_edges_builds_a_path() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let degs = g.degree_profile().degrees;
        assert_eq!(degs, vec![1, 2, 1]);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn from_edges_single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn from_edges_deduplicates_with_warning() {
        let (g, dup) = Graph::from_edges_reporting(4, &[(0, 1), (0, 1), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(dup);
        let (_, clean) = Graph::from_edges_reporting(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!clean);
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange {
                vertex: 3,
                order: 3
            })
        ));
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(Error::SelfLoop { vertex: 1 })
        ));
    }

    #[test]
    fn named_star() {
        let g = Graph::named(GraphKind::Star, 5).unwrap();
        assert_eq!(g.degree_profile().degrees, vec![4, 1, 1, 1, 1]);
    }

    #[test]
    fn named_prism_is_cubic() {
        let g = Graph::named(GraphKind::Prism, 3).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.edge_count(), 9);
        assert!((0..6).all(|v| g.degree(v) == 3));
    }

    #[test]
    fn named_complete() {
        let g = Graph::named(GraphKind::Complete, 5).unwrap();
        assert_eq!(g.edge_count(), 10);
    }

    #[test]
    fn named_size_minimums() {
        assert!(Graph::named(GraphKind::Cycle, 2).is_err());
        assert!(Graph::named(GraphKind::Prism, 2).is_err());
        assert!(Graph::named(GraphKind::Path, 0).is_err());
    }

    #[test]
    fn prism_is_cubic_for_every_size() {
        for s in 3..=12 {
            let g = Graph::prism(s).unwrap();
            assert_eq!(g.edge_count(), 3 * s);
            assert!((0..2 * s).all(|v| g.degree(v) == 3));
        }
    }

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).unwrap().is_connected());
        let two_edges = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!two_edges.is_connected());
        assert!(!Graph::new(2).is_connected());
        assert!(Graph::new(1).is_connected());
        assert!(Graph::new(0).is_connected());
    }

    #[test]
    fn tree_predicate() {
        assert!(Graph::star(6).unwrap().is_tree());
        assert!(!Graph::cycle(4).unwrap().is_tree());
        assert!(Graph::new(1).is_tree());
        assert!(!Graph::new(0).is_tree());
        assert!(!Graph::new(2).is_tree());
    }

    #[test]
    fn handshake_holds_for_named_graphs() {
        for g in [
            Graph::path(7).unwrap(),
            Graph::star(7).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete(6).unwrap(),
            Graph::prism(5).unwrap(),
        ] {
            let sum: usize = g.degree_profile().degrees.iter().sum();
            assert_eq!(sum, 2 * g.edge_count());
        }
    }

    #[test]
    fn remove_then_add_restores() {
        let mut g = Graph::cycle(5).unwrap();
        let orig = g.clone();
        g.remove_edge(1, 2).unwrap();
        assert!(matches!(g.remove_edge(1, 2), Err(Error::NotAnEdge { .. })));
        g.add_edge(2, 1).unwrap();
        assert_eq!(g, orig);
    }
}
