//! Exact integer irregularity indices.
//!
//! For an edge `uv`, the imbalance is `|d_u - d_v|`; summed over all
//! edges this is the Albertson index `A(G)`. Replacing each term by
//! `|d_u^2 - d_v^2|` gives the degree-square variant `A*(G)`, the main
//! invariant of this crate. `A*` is always a non-negative even integer,
//! vanishes exactly on graphs whose components are all regular, and for
//! trees is bounded below by `max_degree * (max_degree^2 - 1)`.
//!
//! All arithmetic is 64-bit: at desk scale (orders below 2^16) per-edge
//! terms stay below 2^32 and the sums fit comfortably.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Neighbor counts of a vertex, split by degree comparison against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NeighborPartition {
    /// Neighbors with strictly smaller degree.
    pub smaller: usize,
    /// Neighbors with equal degree.
    pub equal: usize,
    /// Neighbors with strictly greater degree.
    pub greater: usize,
}

impl NeighborPartition {
    /// The three counts always add up to the vertex degree.
    pub fn degree(&self) -> usize {
        self.smaller + self.equal + self.greater
    }
}

/// Summary of both indices for one graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub albertson: u64,
    pub modified: u64,
    pub max_degree: usize,
    /// `(u, v, |d_u^2 - d_v^2|)` per edge, populated on request only.
    pub per_edge_terms: Option<Vec<(usize, usize, u64)>>,
}

#[inline]
fn square_term(du: usize, dv: usize) -> u64 {
    let du = du as u64;
    let dv = dv as u64;
    (du * du).abs_diff(dv * dv)
}

/// `|d_u - d_v|` for the edge `uv`.
pub fn edge_imbalance(g: &Graph, u: usize, v: usize) -> Result<u64> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    Ok((g.degree(u) as u64).abs_diff(g.degree(v) as u64))
}

/// The Albertson index: the sum of edge imbalances.
pub fn albertson(g: &Graph) -> u64 {
    g.edges()
        .map(|(u, v)| (g.degree(u) as u64).abs_diff(g.degree(v) as u64))
        .sum()
}

/// The degree-square index `A*(G)`: the sum of `|d_u^2 - d_v^2|` over
/// all edges.
///
/// The result is provably even; the assertion guards against degree
/// bookkeeping bugs and stays on in release builds.
pub fn modified_albertson(g: &Graph) -> u64 {
    let total: u64 = g
        .edges()
        .map(|(u, v)| square_term(g.degree(u), g.degree(v)))
        .sum();
    assert!(
        total.is_multiple_of(2),
        "degree-square index came out odd ({total}); adjacency state is corrupt"
    );
    total
}

/// Per-edge terms of `A*`, in edge order.
pub fn per_edge_terms(g: &Graph) -> Vec<(usize, usize, u64)> {
    g.edges()
        .map(|(u, v)| (u, v, square_term(g.degree(u), g.degree(v))))
        .collect()
}

/// Both indices at once; per-edge terms only when `with_terms` is set,
/// keeping the common path allocation-free.
pub fn invariant_report(g: &Graph, with_terms: bool) -> InvariantReport {
    InvariantReport {
        albertson: albertson(g),
        modified: modified_albertson(g),
        max_degree: g.max_degree(),
        per_edge_terms: with_terms.then(|| per_edge_terms(g)),
    }
}

/// Splits the neighbors of `u` by degree comparison against `d_u`.
pub fn neighbor_partition(g: &Graph, u: usize) -> Result<NeighborPartition> {
    if !g.has_vertex(u) {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    let du = g.degree(u);
    let mut part = NeighborPartition {
        smaller: 0,
        equal: 0,
        greater: 0,
    };
    for &v in g.neighbors(u) {
        match g.degree(v).cmp(&du) {
            std::cmp::Ordering::Less => part.smaller += 1,
            std::cmp::Ordering::Equal => part.equal += 1,
            std::cmp::Ordering::Greater => part.greater += 1,
        }
    }
    Ok(part)
}

/// Lower bound for `A*` on trees with the given maximum degree:
/// `max_degree * (max_degree^2 - 1)`, 0 when the degree is 0 or 1.
pub fn tree_lower_bound(max_degree: u64) -> u64 {
    if max_degree == 0 {
        0
    } else {
        max_degree * (max_degree * max_degree - 1)
    }
}

/// True iff the tree attains [`tree_lower_bound`] exactly: the tree is a
/// path, or has exactly one vertex of degree greater than 2 (a spider).
pub fn tree_bound_is_tight(t: &Graph) -> Result<bool> {
    if !t.is_tree() {
        return Err(Error::NotATree);
    }
    let high = (0..t.order()).filter(|&v| t.degree(v) > 2).count();
    Ok(high <= 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn imbalance_examples() {
        let s4 = Graph::star(4).unwrap();
        assert_eq!(edge_imbalance(&s4, 0, 1).unwrap(), 2);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(edge_imbalance(&c5, 0, 1).unwrap(), 0);
        let p4 = Graph::path(4).unwrap();
        assert_eq!(edge_imbalance(&p4, 1, 2).unwrap(), 0);
        assert!(matches!(
            edge_imbalance(&p4, 0, 3),
            Err(Error::NotAnEdge { .. })
        ));
    }

    #[test]
    fn albertson_small_cases() {
        // P_4: |1-2| + |2-2| + |2-1|.
        assert_eq!(albertson(&Graph::path(4).unwrap()), 2);
        // S_4: three edges of imbalance 2.
        assert_eq!(albertson(&Graph::star(4).unwrap()), 6);
        assert_eq!(albertson(&Graph::complete(5).unwrap()), 0);
    }

    #[test]
    fn modified_small_cases() {
        assert_eq!(modified_albertson(&Graph::path(3).unwrap()), 6);
        // S_5: 4 * |16 - 1|.
        assert_eq!(modified_albertson(&Graph::star(5).unwrap()), 60);
        for n in 3..10 {
            assert_eq!(modified_albertson(&Graph::cycle(n).unwrap()), 0);
        }
        assert_eq!(modified_albertson(&Graph::new(0)), 0);
    }

    #[test]
    fn per_edge_terms_sum_to_modified() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (2, 4), (4, 5)])
            .unwrap();
        let terms = per_edge_terms(&g);
        let sum: u64 = terms.iter().map(|&(_, _, t)| t).sum();
        assert_eq!(sum, modified_albertson(&g));
        let report = invariant_report(&g, true);
        assert_eq!(report.per_edge_terms.unwrap(), terms);
        assert!(invariant_report(&g, false).per_edge_terms.is_none());
    }

    #[test]
    fn partition_examples() {
        let s4 = Graph::star(4).unwrap();
        let center = neighbor_partition(&s4, 0).unwrap();
        assert_eq!((center.smaller, center.equal, center.greater), (3, 0, 0));
        let leaf = neighbor_partition(&s4, 1).unwrap();
        assert_eq!((leaf.smaller, leaf.equal, leaf.greater), (0, 0, 1));
        let c4 = Graph::cycle(4).unwrap();
        let v = neighbor_partition(&c4, 2).unwrap();
        assert_eq!((v.smaller, v.equal, v.greater), (0, 2, 0));
        assert_eq!(v.degree(), c4.degree(2));
        assert!(neighbor_partition(&s4, 9).is_err());
    }

    #[test]
    fn bound_values() {
        assert_eq!(tree_lower_bound(4), 60);
        assert_eq!(tree_lower_bound(1), 0);
        assert_eq!(tree_lower_bound(0), 0);
        // Equals A* of the degree-3 spider with legs of length 2:
        // three legs each contributing |9-4| + |4-1|.
        assert_eq!(tree_lower_bound(3), 24);
        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(modified_albertson(&spider), 24);
    }

    #[test]
    fn tightness_classification() {
        assert!(tree_bound_is_tight(&Graph::path(7).unwrap()).unwrap());

        let spider =
            Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert!(tree_bound_is_tight(&spider).unwrap());
        assert_eq!(modified_albertson(&spider), tree_lower_bound(3));

        // Double star: two adjacent degree-3 centers, four leaves.
        let double_star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)]).unwrap();
        assert!(!tree_bound_is_tight(&double_star).unwrap());
        assert_eq!(modified_albertson(&double_star), 32);
        assert!(modified_albertson(&double_star) > tree_lower_bound(3));

        assert!(matches!(
            tree_bound_is_tight(&Graph::cycle(4).unwrap()),
            Err(Error::NotATree)
        ));
    }

    #[test]
    fn star_closed_form() {
        for n in 2..12u64 {
            let star = Graph::star(n as usize).unwrap();
            assert_eq!(
                modified_albertson(&star),
                (n - 1) * ((n - 1) * (n - 1)).abs_diff(1)
            );
        }
    }
}
