//! Seeded random graphs and forests for the sampled suites.
//!
//! Everything draws from a caller-provided ChaCha stream, so a fixed
//! seed reproduces the exact instance list on any platform.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;
use crate::treegen::prufer_to_tree;

/// Random simple graph with `n` vertices where each pair is an edge
/// with probability `p`, resampled until the edge count respects
/// `max_edges`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64, max_edges: usize) -> Graph {
    loop {
        let mut edges = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if rng.gen_bool(p) {
                    edges.push((a, b));
                }
            }
        }
        if edges.len() <= max_edges {
            return Graph::from_edges(n, edges).expect("pairs are simple by construction");
        }
    }
}

/// Uniform random labeled tree on `n` vertices via a Pruefer sequence.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Graph {
    match n {
        0 => Graph::new(0),
        1 => Graph::new(1),
        2 => Graph::from_edges(2, [(0, 1)]).expect("single edge"),
        _ => {
            let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
            prufer_to_tree(&seq)
        }
    }
}

/// Random forest given as its list of tree components.
pub fn random_forest_components(
    rng: &mut ChaCha8Rng,
    max_components: usize,
    max_component_order: usize,
) -> Vec<Graph> {
    let k = rng.gen_range(1..=max_components);
    (0..k)
        .map(|_| {
            let n = rng.gen_range(1..=max_component_order);
            random_tree(rng, n)
        })
        .collect()
}

/// Random forest on exactly `n` vertices: a random tree with a random
/// subset of edges removed.
pub fn random_forest(rng: &mut ChaCha8Rng, n: usize, keep_probability: f64) -> Graph {
    let tree = random_tree(rng, n);
    let edges: Vec<(usize, usize)> = tree
        .edges()
        .filter(|_| rng.gen_bool(keep_probability))
        .map(|e| {
            let (a, b) = e.endpoints();
            (a.0, b.0)
        })
        .collect();
    Graph::from_edges(n, edges).expect("subset of tree edges is simple")
}

pub fn disjoint_union_all(components: &[Graph]) -> Graph {
    components
        .iter()
        .fold(Graph::new(0), |acc, c| acc.disjoint_union(c))
}
