//! Exact small-graph Ramsey computations.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: dense graphs on at most 64 vertices, graph6, canonical forms,
//!   enumeration of small graphs, chromatic numbers and subgraph embeddings.
//! * [`colouring`]: edge colourings of complete graphs and their text format.
//! * [`engine`]: the arrowing search and Ramsey numbers with certificates.
//! * [`constructions`]: the graph families with prescribed Ramsey growth and
//!   the rules that pick their parameters from known Ramsey values.
//! * [`extraction`]: monochromatic-structure extraction from a colouring
//!   (long paths, greedy tilings, clique-paths) ending in a certified copy
//!   or a certified failure.
//! * [`lower_bounds`]: witness colourings (random `K_{t,t}`-free colourings,
//!   the blocked three-colouring).
//! * [`spectrum`]: the sets of Ramsey values attained by `n`-vertex graphs.

pub mod colouring;
pub mod constructions;
pub mod engine;
pub mod error;
pub mod extraction;
pub mod graph;
pub mod lower_bounds;
pub mod spectrum;

pub use colouring::{EdgeColouring, BLUE, GREEN, RED};
pub use error::*;
pub use graph::{Embedding, Graph};
