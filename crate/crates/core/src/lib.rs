//! Extremal small-diameter scale-free graphs.
//!
//! The crate builds the deterministic family `G*_t` (order `2^{t+2} - 1`,
//! size `2^{t+1}(t + 2) - 2`, diameter 2) two independent ways, analyses
//! degree distributions and diameters of arbitrary simple graphs, and
//! contrasts the family with a seeded preferential-attachment baseline.
//!
//! ```
//! use extremal_sf::{analytics, extremal};
//!
//! let g = extremal::build_direct(4).unwrap();
//! assert_eq!(g.graph().order(), 63);
//! assert_eq!(analytics::exact_diameter(g.graph()).unwrap().diameter, 2);
//! ```

pub mod analytics;
pub mod baseline;
pub mod cli;
pub mod experiments;
pub mod extremal;
pub mod graph;
pub mod io;

pub use graph::{DegreeRow, DegreeTable, Graph, GraphBuilder, GraphError, VertexId};
