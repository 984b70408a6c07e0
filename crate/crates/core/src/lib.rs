//! Reconfiguration of c-colorable vertex sets.
//!
//! Exact shortest token addition/removal sequences on interval graphs,
//! fixed-c reachability on split graphs, a brute-force oracle, and
//! instance factories for the standard hardness reductions.

pub mod coloring;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod instance;
pub mod interval;
pub mod interval_model;
pub mod oracle;
pub mod reductions;
pub mod split;
pub mod split_model;

pub use coloring::{is_colorable_clique_bound, is_colorable_exact, PerfectModel};
pub use error::{Error, Result};
pub use format::{
    parse_instance, parse_reduction_source, parse_sequence, render_instance, render_sequence,
};
pub use graph::{Graph, VertexSet};
pub use instance::{
    verify_sequence, Instance, ReconSequence, Representation, Rule, Step, Violation, ViolationKind,
};
pub use interval::{
    shortest_tar_sequence, shortest_tj_sequence, tar_distance, tj_distance, DistanceCase,
    DistanceVerdict, Witness,
};
pub use interval_model::IntervalModel;
pub use oracle::{oracle_connectivity_report, oracle_distance, OracleLimits, StateSpace};
pub use split::{build_meta_graph, split_tar_reachable, split_tar_witness, t_set, MetaGraph};
pub use split_model::{split_partition, SplitModel};
