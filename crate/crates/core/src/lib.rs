//! Maximum clique and maximum independent set heuristics.
//!
//! * [`graph`]: bitset adjacency graphs, DIMACS I/O and G(n, d) generation.
//! * [`micro`]: exact lookup-table solver for six-vertex chunks and the
//!   chunked quasi-exact solver built on it.
//! * [`heuristics`]: five sequential greedy constructions.
//! * [`local_search`]: (1,k)-swap local search seeded by any of them.
//! * [`bench`]: suite runner, relative solution/time measures, CSV output
//!   and random instance collections.

pub mod bench;
pub mod graph;
pub mod heuristics;
pub mod local_search;
pub mod micro;

pub use graph::{Graph, GraphError, ProblemMode, VertexSet};
pub use heuristics::HeuristicKind;
pub use micro::MicroTable;
