//! Companion to `neighborly-core`: edge-list files, JSON and CSV reports,
//! parallel parameter sweeps and the `neighborly` command line.

pub mod io;
pub mod report;
pub mod sweep;

pub use io::{parse_edge_list, read_edge_list, EdgeListError};
pub use report::{ComplexJson, GraphReportJson, ReportJson, TraceJson};
pub use sweep::{sweep, SweepError};
