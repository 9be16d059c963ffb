//! Exact Z_0 and Z_1 without subset sweeps.
//!
//! Forests get a linear rooted DP that carries, per subtree, the number
//! of edge subsets grouped by (adjacent pairs so far, selected edges at
//! the subtree root). General graphs fall back to memoized recursions:
//! the standard matching edge recursion for Z_0 and the vertex-pivot
//! recursion for Z_1. Memo tables key on the graph6 string of each
//! intermediate graph and live only for one invocation.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::graph::{Graph, GraphError, VertexId};
use crate::graph6::to_graph6;

/// Arbitrary-precision nonnegative count. Every invariant value in this
/// crate is one of these; nothing is ever truncated to machine width.
pub type BigCount = BigUint;

/// DP table per vertex: index by pairs accumulated (0 or 1) and by
/// selected edges meeting the vertex (0, 1, or 2). Three or more edges
/// at one vertex already make three pairs, so wider states are dead.
#[derive(Clone)]
struct NodeState([BigCount; 6]);

impl NodeState {
    fn fresh() -> NodeState {
        let mut s = NodeState(Default::default());
        s.0[0] = BigCount::one();
        s
    }

    fn get(&self, pairs: usize, incident: usize) -> &BigCount {
        &self.0[pairs * 3 + incident]
    }

    fn add(&mut self, pairs: usize, incident: usize, value: BigCount) {
        self.0[pairs * 3 + incident] += value;
    }

    /// Fold a finished child into this vertex across the connecting edge.
    fn absorb(&self, child: &NodeState) -> NodeState {
        let mut next = NodeState(Default::default());
        for p1 in 0..2 {
            for t1 in 0..3 {
                let base = self.get(p1, t1);
                if base.is_zero() {
                    continue;
                }
                for p2 in 0..2 {
                    for t2 in 0..3 {
                        let cnt = child.get(p2, t2);
                        if cnt.is_zero() {
                            continue;
                        }
                        // leave the connecting edge out
                        if p1 + p2 <= 1 {
                            next.add(p1 + p2, t1, base * cnt);
                        }
                        // take it: it pairs with every edge now at
                        // either endpoint
                        let pairs = p1 + p2 + t1 + t2;
                        if pairs <= 1 && t1 < 2 {
                            next.add(pairs, t1 + 1, base * cnt);
                        }
                    }
                }
            }
        }
        next
    }

    fn totals(&self) -> (BigCount, BigCount) {
        let z0 = self.get(0, 0) + self.get(0, 1) + self.get(0, 2);
        let z1 = self.get(1, 0) + self.get(1, 1) + self.get(1, 2);
        (z0, z1)
    }
}

/// (Z_0, Z_1) of a forest in one linear pass.
pub fn forest_z0_z1(g: &Graph) -> Result<(BigCount, BigCount), GraphError> {
    if !g.is_forest() {
        return Err(GraphError::NotAForest);
    }
    let n = g.vertex_count();
    let mut visited = vec![false; n];
    let mut z0 = BigCount::one();
    let mut z1 = BigCount::zero();
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // post order of this component
        let mut order = Vec::new();
        let mut stack = vec![(VertexId(root), None::<VertexId>)];
        visited[root] = true;
        while let Some((v, parent)) = stack.pop() {
            order.push((v, parent));
            for &c in g.neighbors(v) {
                if Some(c) != parent {
                    visited[c.0] = true;
                    stack.push((c, Some(v)));
                }
            }
        }
        let mut states: HashMap<usize, NodeState> = HashMap::new();
        for (v, parent) in order.into_iter().rev() {
            let state = states.remove(&v.0).unwrap_or_else(NodeState::fresh);
            match parent {
                Some(p) => {
                    let ps = states.remove(&p.0).unwrap_or_else(NodeState::fresh);
                    states.insert(p.0, ps.absorb(&state));
                }
                None => {
                    let (c0, c1) = state.totals();
                    z1 = &z1 * &c0 + &z0 * &c1;
                    z0 *= c0;
                }
            }
        }
    }
    Ok((z0, z1))
}

/// Z_1 of a forest via the linear DP.
pub fn z1_tree_dp(g: &Graph) -> Result<BigCount, GraphError> {
    forest_z0_z1(g).map(|(_, z1)| z1)
}

fn memo_key(g: &Graph) -> String {
    to_graph6(g).expect("intermediate graphs stay within graph6 range")
}

/// Number of matchings, the empty one included. Forest components take
/// the linear DP; components with cycles use
/// `Z_0(G) = Z_0(G - e) + Z_0(G - {u, v})` with memoization.
pub fn z0(g: &Graph) -> BigCount {
    let mut memo = HashMap::new();
    g.connected_components()
        .iter()
        .map(|c| z0_component(c, &mut memo))
        .product()
}

fn z0_component(g: &Graph, memo: &mut HashMap<String, BigCount>) -> BigCount {
    if g.is_forest() {
        return forest_z0_z1(g).expect("checked forest").0;
    }
    let key = memo_key(g);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let e = g.edges().next().expect("cyclic graphs have edges");
    let (u, v) = e.endpoints();
    let without_edge = g.delete_edge(u, v).expect("edge present");
    let without_ends = g
        .delete_vertices(&BTreeSet::from([u, v]))
        .expect("vertices present");
    let result: BigCount = without_edge
        .connected_components()
        .iter()
        .map(|c| z0_component(c, memo))
        .product::<BigCount>()
        + without_ends
            .connected_components()
            .iter()
            .map(|c| z0_component(c, memo))
            .product::<BigCount>();
    memo.insert(key, result.clone());
    result
}

/// Z_1 by the vertex-pivot recursion
/// `Z_1(G) = Z_1(G-z) + sum_{v in N(z)} Z_1(G-z-v) + sum_{P3 at z} Z_0(G-P)`,
/// for arbitrary graphs, memoized on intermediate graphs.
///
/// On a forest the pivot is the leaf `z` of a pseudo-leaf `v`, which
/// collapses the P3 sum to two matching counts:
/// `Z_1 = Z_1(G-z) + Z_1(G-z-v) + Z_0(G-N(v)) + (d-2) Z_0(G-(N[v] \ u))`.
/// Elsewhere the pivot is the smallest vertex of minimum positive
/// degree and the P3 sum is taken literally. Values agree with
/// [`z1_tree_dp`] on forests by a different computation path.
pub fn z1_recursive(g: &Graph) -> BigCount {
    let mut memo = HashMap::new();
    z1_rec(g, &mut memo)
}

fn z1_rec(g: &Graph, memo: &mut HashMap<String, BigCount>) -> BigCount {
    if g.edge_count() < 2 {
        return BigCount::zero();
    }
    let key = memo_key(g);
    if let Some(hit) = memo.get(&key) {
        return hit.clone();
    }
    let total = if g.is_forest() {
        z1_forest_step(g, memo)
    } else {
        z1_general_step(g, memo)
    };
    memo.insert(key, total.clone());
    total
}

fn z1_forest_step(g: &Graph, memo: &mut HashMap<String, BigCount>) -> BigCount {
    let spot = crate::family::find_pseudo_leaf(g).expect("forest with an edge has a pseudo-leaf");
    let (v, z, u, d) = (spot.vertex, spot.leaf, spot.heavy_neighbor, spot.degree);
    let mut total = z1_rec(&g.delete_vertex(z).expect("leaf present"), memo);
    total += z1_rec(
        &g.delete_vertices(&BTreeSet::from([z, v])).expect("present"),
        memo,
    );
    // No P3 passes through z when v is itself a leaf (a P_2 component).
    if d >= 2 {
        let open_neighborhood: BTreeSet<VertexId> = g.neighbors(v).iter().copied().collect();
        total += z0(&g.delete_vertices(&open_neighborhood).expect("present"));
        let mut closed_minus_u: BTreeSet<VertexId> = open_neighborhood;
        closed_minus_u.insert(v);
        closed_minus_u.remove(&u);
        let rest = z0(&g.delete_vertices(&closed_minus_u).expect("present"));
        total += BigCount::from(d as u64 - 2) * rest;
    }
    total
}

fn z1_general_step(g: &Graph, memo: &mut HashMap<String, BigCount>) -> BigCount {
    let z = g
        .vertices()
        .filter(|&v| g.degree(v) > 0)
        .min_by_key(|&v| (g.degree(v), v))
        .expect("graphs with edges have non-isolated vertices");
    let mut total = z1_rec(&g.delete_vertex(z).expect("vertex present"), memo);
    for &v in g.neighbors(z) {
        let h = g
            .delete_vertices(&BTreeSet::from([z, v]))
            .expect("vertices present");
        total += z1_rec(&h, memo);
    }
    for p in g.p3_containing(z).expect("pivot in range") {
        let h = g
            .delete_vertices(&p.vertices().into_iter().collect())
            .expect("vertices present");
        total += z0(&h);
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::oracle::{zk_oracle, OracleCap};

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn star(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (0, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn z0_of_paths() {
        let got: Vec<u32> = (0..8)
            .map(|n| z0(&path(n)).try_into().unwrap())
            .collect();
        assert_eq!(got, [1, 1, 2, 3, 5, 8, 13, 21]);
    }

    #[test]
    fn z0_multiplies_over_components() {
        let g = path(3).disjoint_union(&path(4));
        assert_eq!(z0(&g), BigCount::from(15u32));
    }

    #[test]
    fn z0_on_cycles_matches_oracle() {
        for n in 3..10 {
            let g = cycle(n);
            assert_eq!(
                z0(&g),
                zk_oracle(&g, 0, OracleCap::default()).unwrap(),
                "C_{n}"
            );
        }
    }

    #[test]
    fn z1_dp_reference_values() {
        assert_eq!(z1_tree_dp(&path(9)).unwrap(), BigCount::from(71u32));
        assert_eq!(z1_tree_dp(&path(10)).unwrap(), BigCount::from(130u32));
        assert_eq!(z1_tree_dp(&star(9)).unwrap(), BigCount::from(28u32));
        assert_eq!(z1_tree_dp(&star(10)).unwrap(), BigCount::from(36u32));
    }

    #[test]
    fn z1_dp_on_disjoint_edges_is_zero() {
        let g = path(2).disjoint_union(&path(2));
        assert_eq!(z1_tree_dp(&g).unwrap(), BigCount::zero());
    }

    #[test]
    fn z1_dp_rejects_cycles() {
        assert!(z1_tree_dp(&cycle(4)).is_err());
    }

    #[test]
    fn z1_recursive_matches_oracle_on_cycles() {
        for n in 3..9 {
            let g = cycle(n);
            assert_eq!(
                z1_recursive(&g),
                zk_oracle(&g, 1, OracleCap::default()).unwrap(),
                "C_{n}"
            );
        }
    }

    #[test]
    fn z1_recursive_known_values() {
        assert_eq!(z1_recursive(&star(10)), BigCount::from(36u32));
        assert_eq!(z1_recursive(&path(9)), BigCount::from(71u32));
        assert_eq!(z1_recursive(&Graph::new(4)), BigCount::zero());
    }

    #[test]
    fn recursion_and_dp_agree_on_forests() {
        for n in 2..10 {
            assert_eq!(z1_recursive(&path(n)), z1_tree_dp(&path(n)).unwrap(), "P_{n}");
            assert_eq!(
                z1_recursive(&star(n)),
                z1_tree_dp(&star(n)).unwrap(),
                "K_1_{}",
                n - 1
            );
        }
        let forest = path(5).disjoint_union(&star(4)).disjoint_union(&path(2));
        assert_eq!(z1_recursive(&forest), z1_tree_dp(&forest).unwrap());
    }

    #[test]
    fn broom_value() {
        // degree sequence (n-2, 2, 1, ...): a path of three with
        // pendants at one end
        let b39 = Graph::from_edges(9, [(0, 1), (1, 2)].into_iter().chain((3..9).map(|i| (2, i))))
            .unwrap();
        assert_eq!(z1_tree_dp(&b39).unwrap(), BigCount::from(37u32));
    }
}
