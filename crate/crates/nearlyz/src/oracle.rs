//! Brute-force subset counters.
//!
//! These anchor every other computation in the crate: they walk all
//! 2^m edge subsets (or 2^n vertex subsets) in Gray-code order, so one
//! element flips per step and the adjacent-pair (or induced-edge)
//! count updates in O(1) amortized.

use num_bigint::BigUint;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, VertexId};

/// Size limits for the exhaustive counters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleCap {
    /// Largest edge count accepted by the edge-subset sweep.
    pub max_edges: usize,
    /// Largest vertex count accepted by the vertex-subset sweep.
    pub max_vertices: usize,
}

pub const DEFAULT_ORACLE_CAP: OracleCap = OracleCap {
    max_edges: 24,
    max_vertices: 24,
};

impl Default for OracleCap {
    fn default() -> Self {
        DEFAULT_ORACLE_CAP
    }
}

impl OracleCap {
    pub fn uniform(limit: usize) -> OracleCap {
        OracleCap {
            max_edges: limit,
            max_vertices: limit,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {actual} {unit}, oracle cap is {cap}; raise the cap to force the sweep")]
    CapExceeded {
        unit: &'static str,
        actual: usize,
        cap: usize,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Number of unordered pairs of edges in `s` sharing an endpoint.
pub fn count_adjacent_pairs(g: &Graph, s: &[Edge]) -> Result<u64, GraphError> {
    let mut incidence = vec![0u64; g.vertex_count()];
    for e in s {
        let (a, b) = e.endpoints();
        if !g.has_edge(a, b) {
            return Err(GraphError::MissingEdge(a, b));
        }
        incidence[a.0] += 1;
        incidence[b.0] += 1;
    }
    Ok(incidence.iter().map(|&t| t * (t.saturating_sub(1)) / 2).sum())
}

/// Subset counts by adjacent-pair count: entry `k` is the number of
/// edge subsets with exactly `k` adjacent pairs. Entries sum to 2^m.
pub fn zk_profile(g: &Graph, cap: OracleCap) -> Result<Vec<BigUint>, OracleError> {
    let m = g.edge_count();
    if m > cap.max_edges {
        return Err(OracleError::CapExceeded {
            unit: "edges",
            actual: m,
            cap: cap.max_edges,
        });
    }
    let edges: Vec<Edge> = g.edges().collect();
    let mut counts = vec![0u64; m * m.saturating_sub(1) / 2 + 1];
    let mut incidence = vec![0u64; g.vertex_count()];
    let mut selected = vec![false; m];
    let mut pairs = 0u64;
    counts[0] = 1; // empty subset
    for step in 1u64..(1u64 << m) {
        let idx = step.trailing_zeros() as usize;
        let (a, b) = edges[idx].endpoints();
        if selected[idx] {
            selected[idx] = false;
            incidence[a.0] -= 1;
            incidence[b.0] -= 1;
            pairs -= incidence[a.0] + incidence[b.0];
        } else {
            selected[idx] = true;
            pairs += incidence[a.0] + incidence[b.0];
            incidence[a.0] += 1;
            incidence[b.0] += 1;
        }
        counts[pairs as usize] += 1;
    }
    Ok(counts.into_iter().map(BigUint::from).collect())
}

/// Number of edge subsets with exactly `k` adjacent pairs, by
/// exhaustive sweep.
pub fn zk_oracle(g: &Graph, k: usize, cap: OracleCap) -> Result<BigUint, OracleError> {
    let profile = zk_profile(g, cap)?;
    Ok(profile.into_iter().nth(k).unwrap_or_default())
}

/// Number of vertex subsets whose induced subgraph has exactly one
/// edge, by exhaustive sweep.
pub fn sigma1_oracle(g: &Graph, cap: OracleCap) -> Result<BigUint, OracleError> {
    let n = g.vertex_count();
    if n > cap.max_vertices {
        return Err(OracleError::CapExceeded {
            unit: "vertices",
            actual: n,
            cap: cap.max_vertices,
        });
    }
    let masks: Vec<u64> = g
        .vertices()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .fold(0u64, |acc, w| acc | (1u64 << w.0))
        })
        .collect();
    let mut count = 0u64;
    let mut member = 0u64;
    let mut induced_edges = 0u64;
    for step in 1u64..(1u64 << n) {
        let idx = step.trailing_zeros() as usize;
        let bit = 1u64 << idx;
        if member & bit != 0 {
            member ^= bit;
            induced_edges -= (masks[idx] & member).count_ones() as u64;
        } else {
            induced_edges += (masks[idx] & member).count_ones() as u64;
            member ^= bit;
        }
        if induced_edges == 1 {
            count += 1;
        }
    }
    Ok(BigUint::from(count))
}

/// Checks the pivot recursion
/// `Z_1(G) = Z_1(G-z) + sum_{v in N(z)} Z_1(G-z-v) + sum_{P3 at z} Z_0(G-P)`
/// with every term evaluated by the exhaustive sweep.
pub fn check_pivot_recursion(g: &Graph, z: VertexId, cap: OracleCap) -> Result<bool, OracleError> {
    let lhs = zk_oracle(g, 1, cap)?;
    let minus_z = g.delete_vertex(z)?;
    let mut rhs = zk_oracle(&minus_z, 1, cap)?;
    for &v in g.neighbors(z) {
        let h = g.delete_vertices(&[z, v].into_iter().collect())?;
        rhs += zk_oracle(&h, 1, cap)?;
    }
    for p in g.p3_containing(z)? {
        let h = g.delete_vertices(&p.vertices().into_iter().collect())?;
        rhs += zk_oracle(&h, 0, cap)?;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    fn cap() -> OracleCap {
        OracleCap::default()
    }

    #[test]
    fn adjacent_pair_counts() {
        let p3 = path(3);
        let all: Vec<Edge> = p3.edges().collect();
        assert_eq!(count_adjacent_pairs(&p3, &all).unwrap(), 1);

        let claw = star(4);
        let all: Vec<Edge> = claw.edges().collect();
        assert_eq!(count_adjacent_pairs(&claw, &all).unwrap(), 3);

        let p4 = path(4);
        let picked: Vec<Edge> = p4.edges().step_by(2).collect();
        assert_eq!(count_adjacent_pairs(&p4, &picked).unwrap(), 0);

        let foreign = [Edge::new(VertexId(0), VertexId(2))];
        assert!(count_adjacent_pairs(&p4, &foreign).is_err());
    }

    #[test]
    fn z1_of_small_paths() {
        assert_eq!(zk_oracle(&path(2), 1, cap()).unwrap(), 0u32.into());
        assert_eq!(zk_oracle(&path(3), 1, cap()).unwrap(), 1u32.into());
        assert_eq!(zk_oracle(&path(4), 1, cap()).unwrap(), 2u32.into());
        assert_eq!(zk_oracle(&path(5), 1, cap()).unwrap(), 5u32.into());
        assert_eq!(zk_oracle(&path(6), 1, cap()).unwrap(), 10u32.into());
    }

    #[test]
    fn z1_of_big_star() {
        assert_eq!(zk_oracle(&star(9), 1, cap()).unwrap(), 28u32.into());
    }

    #[test]
    fn edgeless_profile() {
        let profile = zk_profile(&Graph::new(4), cap()).unwrap();
        assert_eq!(profile, vec![BigUint::from(1u32)]);
    }

    #[test]
    fn profile_sums_to_power_of_two() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let profile = zk_profile(&g, cap()).unwrap();
        let total: BigUint = profile.iter().sum();
        assert_eq!(total, BigUint::from(1u64 << g.edge_count()));
    }

    #[test]
    fn cap_is_enforced() {
        let big = star(30);
        assert!(matches!(
            zk_oracle(&big, 1, cap()),
            Err(OracleError::CapExceeded { unit: "edges", .. })
        ));
        assert!(matches!(
            sigma1_oracle(&big, cap()),
            Err(OracleError::CapExceeded {
                unit: "vertices",
                ..
            })
        ));
        // raising the cap unlocks the sweep
        let wider = star(26);
        assert_eq!(
            zk_oracle(&wider, 1, OracleCap::uniform(25)).unwrap(),
            BigUint::from(25u32 * 24 / 2)
        );
    }

    #[test]
    fn sigma1_small_cases() {
        assert_eq!(sigma1_oracle(&path(4), cap()).unwrap(), 5u32.into());
        assert_eq!(sigma1_oracle(&path(2), cap()).unwrap(), 1u32.into());
        let c3 = Graph::from_edges(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(sigma1_oracle(&c3, cap()).unwrap(), 3u32.into());
    }

    #[test]
    fn pivot_recursion_on_examples() {
        for v in 0..5 {
            assert!(check_pivot_recursion(&path(5), VertexId(v), cap()).unwrap());
        }
        assert!(check_pivot_recursion(&star(5), VertexId(0), cap()).unwrap());
        assert!(check_pivot_recursion(&Graph::new(3), VertexId(1), cap()).unwrap());
    }
}
