//! Irregularity indices on simple undirected graphs.
//!
//! The crate centers on the degree-square index
//! `A*(G) = sum over edges uv of |d_u^2 - d_v^2|`, a sharpened variant
//! of the Albertson irregularity `A(G) = sum of |d_u - d_v|`. It
//! provides:
//!
//! - exact computation of both indices ([`invariants`]);
//! - incremental maintenance under edge insertion and deletion in
//!   `O(d_u + d_v)` per update ([`dynamic`]);
//! - subdivision transformations with pinned effect on the index — +10
//!   on cubic edges, 0 under the neutral conditions ([`transform`]);
//! - constructive witnesses for every attainable value, arbitrarily many
//!   per value ([`family`]);
//! - exhaustive enumeration of free trees and of all small labeled
//!   graphs, used to verify the extremal and parity laws ([`enumerate`],
//!   [`sweep`]);
//! - batch verification campaigns behind the `verify-all` CLI command
//!   ([`verify`]);
//! - graph6 and edge-list codecs ([`codec`]).
//!
//! All index arithmetic is exact 64-bit integer arithmetic; there are no
//! tolerances anywhere.

pub mod codec;
pub mod dynamic;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod invariants;
pub mod iso;
pub mod sweep;
pub mod transform;
pub mod verify;

pub use error::{Error, ErrorKind, Result};
pub use graph::{DegreeProfile, Graph, GraphKind};
