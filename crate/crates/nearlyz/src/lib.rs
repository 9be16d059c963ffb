//! Exact combinatorics of nearly independent edge subsets.
//!
//! An edge subset of a simple graph is *k-nearly independent* when
//! exactly `k` of its edge pairs share an endpoint; `Z_k(G)` counts
//! such subsets, `Z_0` being the classic matching count and `Z_1` its
//! first relaxation. The companion vertex invariant `sigma_1(G)`
//! counts vertex subsets inducing exactly one edge.
//!
//! The crate provides:
//!
//! - graph plumbing: immutable simple graphs, graph6 and edge-list
//!   codecs, line graphs, canonical codes for free trees;
//! - invariants: exhaustive subset sweeps, a linear tree DP, memoized
//!   recursions, and exact Binet-style closed forms for paths, cycles,
//!   stars and brooms;
//! - enumeration: every free tree of a given order, exactly once, as a
//!   deterministic restartable stream, plus named family constructors;
//! - extremal machinery: parallel scans for the extreme trees of each
//!   order, golden-table checks, and verification suites for the
//!   minimum/maximum theorems, inequality lemmas, identities and
//!   monotonicity claims.

pub mod canon;
pub mod closed;
pub mod exact;
pub mod extremal;
pub mod family;
pub mod fib;
pub mod graph;
pub mod graph6;
pub mod oracle;
pub mod treegen;

pub use canon::{canonical_tree_code, CanonicalTreeCode};
pub use exact::{forest_z0_z1, z0, z1_recursive, z1_tree_dp, BigCount};
pub use graph::{Edge, Graph, GraphError, P3Sub, VertexId};
pub use graph6::{parse_edgelist, parse_graph6, to_graph6, FormatError};
pub use oracle::{
    count_adjacent_pairs, check_pivot_recursion, sigma1_oracle, zk_oracle, zk_profile, OracleCap,
    OracleError, DEFAULT_ORACLE_CAP,
};
pub use treegen::{
    enumerate_free_trees, enumerate_free_trees_range, free_tree_count, prufer_to_tree, FreeTrees,
    TreeGenError, MAX_ORDER,
};
