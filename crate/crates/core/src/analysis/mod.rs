//! Partition, contraction and ratio quantities computed on concrete
//! instances.

mod audit;
mod hgraph;
mod partition;
mod report;
mod search;

pub use audit::{
    audit_contraction_bounds, audit_contraction_bounds_unchecked, audit_contraction_bounds_with,
    AuditReport, BoundCheck, Relation,
};
pub use hgraph::{build_h_multigraph, HGraph, TieBreak};
pub use partition::{
    far_from_high_set, high_degree_set, partition_wrt, threshold_set, undominated_bound_holds,
    undominated_bound_holds_with, PartitionReport,
};
pub use report::{approximation_report, RunReport};
pub use search::{counterexample_search, Counterexample, SearchOptions, SearchOutcome, SEARCH_RANGE};
