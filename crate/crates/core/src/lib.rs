//! Topology toolkit for the integer simplex network `T_m^n`.
//!
//! * [`simplex`]: vertices, implicit adjacency, the h-metric, enumeration.
//! * [`routing`]: constructive containers of internally disjoint paths and
//!   fault-avoiding route selection.
//! * [`oracles`]: brute-force BFS, flow, fault-diameter and wide-diameter ground truth.
//! * [`embeddings`]: triangular mesh and tripy coordinates and their maps into `T_m^n`.
//! * [`harness`]: verification campaigns binding the router to the oracles.
//! * [`export`] and [`cli`]: DOT / edge list / JSON output and the `tsimplex` binary.

pub mod cli;
pub mod embeddings;
pub mod export;
pub mod harness;
pub mod oracles;
pub mod routing;
pub mod simplex;

pub use oracles::{Extent, FaultSet};
pub use routing::{Container, Path};
pub use simplex::{GraphParams, Vertex};
