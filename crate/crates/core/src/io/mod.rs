//! File formats: plain-text edge lists, JSON analysis reports, DOT drawings
//! of small family members, and CSV scaling tables.

pub mod dot;
pub mod edgelist;
pub mod report;
pub mod scaling;

pub use dot::{export_dot, DotError, MAX_DOT_T};
pub use edgelist::{parse_edge_list, read_edge_list, write_edge_list, EdgeListError};
pub use report::{analyze, AnalysisReport, AnalyzeOptions, SCHEMA_VERSION};
pub use scaling::{parse_scaling_spec, write_scaling_csv, SpecError};
