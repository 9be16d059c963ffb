//! Exhaustive scans over tree space and the verification suites built
//! on them.

mod golden;
mod monotonicity;
mod random;
mod report;
mod scan;
mod verify;

pub use golden::{verify_table, verify_table_against, GoldenError, GoldenTable};
pub use monotonicity::monotonicity_suite;
pub use random::{
    disjoint_union_all, random_forest, random_forest_components, random_graph, random_tree,
};
pub use report::{Counterexample, ExtremalReport, Status, VerificationResult, Witness};
pub use scan::{scan_order, ScanError, MAX_SCAN_ORDER, MIN_SCAN_ORDER};
pub use verify::{
    branch_decomposition, check_second_max, run_identity_suite, run_route_agreement,
    verify_lemma_inequalities, verify_max_theorem, verify_min_theorems, IdentityConfig,
    LemmaConfig,
};
