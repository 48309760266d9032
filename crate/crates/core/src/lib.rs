//! Equitable colorings of bipartite graphs with `ceil(delta/2) + 1` colors.
//!
//! The pipeline lives in [`engine`]: it normalizes `|A|`, splits the leftover
//! A-vertices over a few mixed classes completed greedily from B, and covers
//! the rest of B directly. [`verify`] certifies any cover independently and
//! [`oracle`] computes exact answers on small graphs by backtracking.

pub mod bench;
pub mod engine;
pub mod formats;
pub mod generate;
pub mod graph;
pub mod oracle;
pub mod rational;
pub mod verify;

pub use engine::{color_equitably, Cover, Mode, Outcome};
pub use graph::{build_graph, BipartiteGraph, RawGraph, Side};
pub use rational::Rational;
pub use verify::{verify, VerificationReport};
