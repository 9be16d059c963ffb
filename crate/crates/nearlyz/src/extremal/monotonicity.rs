//! Sampled checks of how Z_1 reacts to adding an edge or deleting a
//! vertex, strictness side conditions included.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId};
use crate::oracle::{zk_oracle, OracleCap};

use super::random::random_graph;
use super::report::{Counterexample, VerificationResult};

fn z1_sweep(g: &Graph) -> num_bigint::BigUint {
    zk_oracle(g, 1, OracleCap::default()).expect("sampled graphs fit the oracle")
}

/// One sampled instance: a random graph, one random edge addition and
/// one random vertex deletion, all claims checked exactly.
fn check_instance(
    rng: &mut ChaCha8Rng,
    counterexamples: &mut Vec<Counterexample>,
) -> u64 {
    let n = rng.gen_range(3..=9);
    let p = rng.gen_range(0.1..0.5);
    let g = random_graph(rng, n, p, 13);
    let base = z1_sweep(&g);
    let mut checked = 0;

    // edge addition: never decreases; strict exactly when the rest
    // holds a P3 or an endpoint is already covered
    let absent: Vec<(VertexId, VertexId)> = (0..n)
        .flat_map(|a| ((a + 1)..n).map(move |b| (VertexId(a), VertexId(b))))
        .filter(|&(a, b)| !g.has_edge(a, b))
        .collect();
    if !absent.is_empty() {
        checked += 1;
        let (u, v) = absent[rng.gen_range(0..absent.len())];
        let bigger = g.add_edge(u, v).expect("edge was absent");
        let after = z1_sweep(&bigger);
        let remainder = g
            .delete_vertices(&[u, v].into_iter().collect())
            .expect("vertices exist");
        let expect_strict =
            remainder.contains_p3() || g.degree(u) > 0 || g.degree(v) > 0;
        let ok = if expect_strict {
            after > base
        } else {
            after == base
        };
        if !ok {
            counterexamples.push(Counterexample {
                graph6: crate::graph6::to_graph6(&g).unwrap_or_default(),
                details: format!(
                    "adding {u}-{v}: Z_1 went {base} -> {after}, strict expected: {expect_strict}"
                ),
            });
        }
    }

    // vertex deletion by degree class
    checked += 1;
    let v = VertexId(rng.gen_range(0..n));
    let smaller = g.delete_vertex(v).expect("vertex exists");
    let after = z1_sweep(&smaller);
    let degree = g.degree(v);
    let report = |msg: String, cx: &mut Vec<Counterexample>| {
        cx.push(Counterexample {
            graph6: crate::graph6::to_graph6(&g).unwrap_or_default(),
            details: msg,
        });
    };
    if degree == 0 {
        if after != base {
            report(
                format!("isolated {v} removed but Z_1 moved {base} -> {after}"),
                counterexamples,
            );
        }
    } else if degree >= 2 {
        if after >= base {
            report(
                format!("degree-{degree} vertex {v} removed but Z_1 went {base} -> {after}"),
                counterexamples,
            );
        }
    } else {
        let support = g.neighbors(v)[0];
        if g.degree(support) >= 2 {
            if after >= base {
                report(
                    format!("leaf {v} on a branching vertex removed but Z_1 went {base} -> {after}"),
                    counterexamples,
                );
            }
        } else {
            // v sits in a P_2 component: never an increase, strict
            // exactly when a P3 survives outside the component
            let outside = g
                .delete_vertices(&[v, support].into_iter().collect())
                .expect("vertices exist");
            if outside.contains_p3() {
                if after >= base {
                    report(
                        format!("P_2 vertex {v} removed beside a P3 but Z_1 went {base} -> {after}"),
                        counterexamples,
                    );
                }
            } else if after != base {
                report(
                    format!("P_2 vertex {v} removed with no P3 outside but Z_1 moved {base} -> {after}"),
                    counterexamples,
                );
            }
        }
    }
    checked
}

/// Runs `trials` seeded instances; any violated claim is a failure.
pub fn monotonicity_suite(seed: u64, trials: usize) -> VerificationResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for _ in 0..trials {
        checked += check_instance(&mut rng, &mut counterexamples);
    }
    // fixed boundary instance: joining two isolated vertices changes
    // nothing
    checked += 1;
    let two = Graph::new(2);
    let joined = two.add_edge(VertexId(0), VertexId(1)).expect("was absent");
    if !z1_sweep(&joined).is_zero() {
        counterexamples.push(Counterexample {
            graph6: crate::graph6::to_graph6(&two).unwrap_or_default(),
            details: "a single fresh edge created a pair".to_string(),
        });
    }
    VerificationResult::new(
        "edge addition and vertex deletion move Z_1 as claimed",
        format!("{trials} seeded instances"),
        checked,
        counterexamples,
        Vec::new(),
    )
}
