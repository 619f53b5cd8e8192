//! Incremental maintenance of the degree-square index under edge
//! insertion and deletion.
//!
//! Adding an edge `uv` (with `d_u >= d_v`, degrees taken before the
//! insertion) changes `A*` by exactly
//!
//! ```text
//! 3 d_u (d_u + 1) + d_v (d_v - 1) - 2 [ (2 d_u + 1) g_u + (2 d_v + 1) g_v ]
//! ```
//!
//! where `g_x` counts the neighbors of `x` with degree strictly greater
//! than `d_x`. The delta only needs the two neighborhoods, so an update
//! costs `O(d_u + d_v)` degree inspections instead of the `O(m)` of a
//! full recomputation. Deletion reuses the same formula algebraically:
//! removing `uv` subtracts the delta that re-adding `uv` to `G - uv`
//! would produce, evaluated with the post-removal degrees of `u` and `v`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::modified_albertson;

/// A graph paired with its cached `A*` value and an instrumentation
/// counter of neighbor-degree inspections spent on incremental updates.
#[derive(Debug, Clone)]
pub struct RunningIndex {
    graph: Graph,
    current: u64,
    work: u64,
}

/// Change in `A*` caused by inserting the absent edge `uv`.
///
/// The endpoints may be given in either order.
pub fn edge_addition_delta(g: &Graph, u: usize, v: usize) -> Result<i64> {
    check_absent(g, u, v)?;
    let mut work = 0;
    Ok(addition_delta(g, u, v, &mut work))
}

fn check_absent(g: &Graph, u: usize, v: usize) -> Result<()> {
    if !g.has_vertex(u) {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: g.order(),
        });
    }
    if !g.has_vertex(v) {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if u == v {
        return Err(Error::SelfLoop { vertex: u });
    }
    if g.has_edge(u, v) {
        return Err(Error::AlreadyAdjacent { u, v });
    }
    Ok(())
}

/// The delta formula with explicit degrees. `d_hi >= d_lo` is required;
/// `g_hi`, `g_lo` are the greater-degree neighbor counts of the two
/// endpoints.
#[inline]
fn delta_formula(d_hi: i64, d_lo: i64, g_hi: i64, g_lo: i64) -> i64 {
    debug_assert!(d_hi >= d_lo);
    3 * d_hi * (d_hi + 1) + d_lo * (d_lo - 1) - 2 * ((2 * d_hi + 1) * g_hi + (2 * d_lo + 1) * g_lo)
}

/// Counts neighbors of `x` (excluding `skip`) whose degree exceeds
/// `threshold`; every inspected neighbor increments `work`.
fn count_greater(
    g: &Graph,
    x: usize,
    skip: Option<usize>,
    threshold: usize,
    work: &mut u64,
) -> i64 {
    let mut count = 0;
    for &w in g.neighbors(x) {
        if Some(w) == skip {
            continue;
        }
        *work += 1;
        if g.degree(w) > threshold {
            count += 1;
        }
    }
    count
}

fn addition_delta(g: &Graph, u: usize, v: usize, work: &mut u64) -> i64 {
    // The formula is asymmetric: the higher-degree endpoint goes first.
    let (hi, lo) = if g.degree(u) >= g.degree(v) {
        (u, v)
    } else {
        (v, u)
    };
    let d_hi = g.degree(hi);
    let d_lo = g.degree(lo);
    let g_hi = count_greater(g, hi, None, d_hi, work);
    let g_lo = count_greater(g, lo, None, d_lo, work);
    delta_formula(d_hi as i64, d_lo as i64, g_hi, g_lo)
}

/// Delta that re-adding `uv` to `g - uv` would produce, evaluated on `g`
/// (which still contains `uv`) by adjusting the endpoint degrees.
///
/// Only `u` and `v` change degree when `uv` is removed, so the
/// greater-degree counts in `g - uv` can be read off the neighborhoods
/// of `g` directly.
fn removal_delta(g: &Graph, u: usize, v: usize, work: &mut u64) -> i64 {
    let du = g.degree(u) - 1;
    let dv = g.degree(v) - 1;
    let (hi, d_hi, lo, d_lo) = if du >= dv {
        (u, du, v, dv)
    } else {
        (v, dv, u, du)
    };
    let g_hi = count_greater(g, hi, Some(lo), d_hi, work);
    let g_lo = count_greater(g, lo, Some(hi), d_lo, work);
    delta_formula(d_hi as i64, d_lo as i64, g_hi, g_lo)
}

impl RunningIndex {
    /// Takes ownership of a graph and caches its `A*` value (one full
    /// computation; not counted as incremental work).
    pub fn new(graph: Graph) -> Self {
        let current = modified_albertson(&graph);
        RunningIndex {
            graph,
            current,
            work: 0,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// The maintained `A*` value.
    pub fn current(&self) -> u64 {
        self.current
    }

    /// Cumulative neighbor-degree inspections spent by updates.
    pub fn work_counter(&self) -> u64 {
        self.work
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Inserts `uv` and updates the cached value in `O(d_u + d_v)`.
    pub fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        check_absent(&self.graph, u, v)?;
        let delta = addition_delta(&self.graph, u, v, &mut self.work);
        self.graph.add_edge(u, v).expect("checked absent");
        self.apply_delta(delta);
        Ok(())
    }

    /// Deletes `uv` and updates the cached value in `O(d_u + d_v)`.
    pub fn delete_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if !self.graph.has_edge(u, v) {
            return Err(Error::NotAnEdge { u, v });
        }
        let delta = removal_delta(&self.graph, u, v, &mut self.work);
        self.graph.remove_edge(u, v).expect("checked present");
        self.apply_delta(-delta);
        Ok(())
    }

    fn apply_delta(&mut self, delta: i64) {
        debug_assert!(delta % 2 == 0, "update deltas are even");
        let next = self.current as i64 + delta;
        assert!(next >= 0, "index went negative; delta bookkeeping broken");
        self.current = next as u64;
        assert!(
            self.current.is_multiple_of(2),
            "index parity broken by an update"
        );
        #[cfg(debug_assertions)]
        {
            self.graph.debug_validate();
            debug_assert_eq!(self.current, modified_albertson(&self.graph));
        }
    }
}
