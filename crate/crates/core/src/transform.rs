//! Edge subdivisions with known effect on the degree-square index.
//!
//! Subdividing an edge whose endpoints both have degree 3 raises `A*` by
//! exactly 10: the (3,3) term 0 is replaced by two (3,2) terms worth 5
//! each. Subdividing an edge with a degree-2 endpoint, or a pendant edge
//! whose other endpoint has degree at least 2, leaves `A*` unchanged.
//! Both facts are asserted on every application.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::modified_albertson;

/// Replaces the edge `uv` by a path `u - x - v` through a new vertex
/// `x = n`. All other adjacencies are untouched, so connectivity is
/// preserved.
pub fn subdivide_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let mut out = g.clone();
    out.remove_edge(u, v).expect("checked present");
    let x = out.add_vertex();
    out.add_edge(u, x).expect("fresh vertex");
    out.add_edge(x, v).expect("fresh vertex");
    Ok(out)
}

/// Subdivides an edge with `d_u = d_v = 3`, raising the index by exactly
/// 10 (asserted).
pub fn subdivide_cubic_edge(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let (du, dv) = (g.degree(u), g.degree(v));
    if du != 3 || dv != 3 {
        return Err(Error::Precondition(format!(
            "the +10 subdivision needs both endpoints of degree 3; \
             edge ({u}, {v}) has degrees ({du}, {dv})"
        )));
    }
    let out = subdivide_edge(g, u, v)?;
    assert_eq!(
        modified_albertson(&out),
        modified_albertson(g) + 10,
        "cubic-edge subdivision must raise the index by exactly 10"
    );
    Ok(out)
}

/// Subdivides an edge under the conditions that keep the index unchanged
/// (asserted): either some endpoint has degree 2, or the edge is a
/// pendant edge whose internal endpoint has degree at least 2.
pub fn neutral_subdivide(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let (du, dv) = (g.degree(u), g.degree(v));
    let pendant_case = (du == 1 && dv >= 2) || (dv == 1 && du >= 2);
    let degree_two_case = du == 2 || dv == 2;
    if !pendant_case && !degree_two_case {
        return Err(Error::Precondition(format!(
            "an index-preserving subdivision needs an endpoint of degree 2, \
             or a pendant endpoint attached to a vertex of degree >= 2; \
             edge ({u}, {v}) has degrees ({du}, {dv})"
        )));
    }
    let out = subdivide_edge(g, u, v)?;
    assert_eq!(
        modified_albertson(&out),
        modified_albertson(g),
        "neutral subdivision must not move the index"
    );
    Ok(out)
}
