//! Route agreement and canonical-code soundness against the most
//! literal possible checks.

use nearlyz::canon::canonical_tree_code;
use nearlyz::extremal::{run_route_agreement, IdentityConfig};
use nearlyz::graph::Graph;
use nearlyz::{enumerate_free_trees, zk_oracle, OracleCap};

/// Bitset fingerprint of a graph on at most eight vertices.
fn mask(g: &Graph) -> u64 {
    g.edges().fold(0u64, |acc, e| {
        let (a, b) = e.endpoints();
        acc | 1 << (a.0 * 8 + b.0)
    })
}

fn relabeled_mask(g: &Graph, perm: &[usize]) -> u64 {
    g.edges().fold(0u64, |acc, e| {
        let (a, b) = e.endpoints();
        let (x, y) = (perm[a.0], perm[b.0]);
        let (x, y) = if x < y { (x, y) } else { (y, x) };
        acc | 1 << (x * 8 + y)
    })
}

/// Exhaustive isomorphism test by scanning every vertex permutation.
fn isomorphic_by_brute_force(a: &Graph, b: &Graph) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    assert!(n <= 8, "mask fingerprint needs n <= 8");
    let target = mask(b);
    let mut perm: Vec<usize> = (0..n).collect();
    // Heap's algorithm
    let mut c = vec![0usize; n];
    if relabeled_mask(a, &perm) == target {
        return true;
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if relabeled_mask(a, &perm) == target {
                return true;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

#[test]
fn codes_match_brute_force_isomorphism_on_all_pairs_to_eight() {
    for n in 2..=8 {
        let trees: Vec<Graph> = enumerate_free_trees(n).unwrap().collect();
        for i in 0..trees.len() {
            for j in i + 1..trees.len() {
                let same_code = canonical_tree_code(&trees[i]).unwrap()
                    == canonical_tree_code(&trees[j]).unwrap();
                let same_graph = isomorphic_by_brute_force(&trees[i], &trees[j]);
                assert_eq!(same_code, same_graph, "n = {n}, pair ({i}, {j})");
                assert!(!same_code, "stream emitted an isomorphic pair at n = {n}");
            }
        }
    }
}

#[test]
fn codes_are_invariant_under_relabeling() {
    // a fixed set of permutations exercises every tree of order <= 8
    for n in 2..=8 {
        for tree in enumerate_free_trees(n).unwrap() {
            let code = canonical_tree_code(&tree).unwrap();
            let reversed: Vec<usize> = (0..n).rev().collect();
            let rotated: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
            for perm in [reversed, rotated] {
                let relabeled = tree.relabel(&perm);
                assert_eq!(code, canonical_tree_code(&relabeled).unwrap(), "n = {n}");
            }
        }
    }
}

#[test]
fn order_nine_sample_pairs_against_permutation_scan() {
    let trees: Vec<Graph> = enumerate_free_trees(9).unwrap().collect();
    assert_eq!(trees.len(), 47);
    // distinct-degree-profile pairs are cheap to refute; sample pairs
    // with equal degree multisets, the hard case for a code
    let degree_profile = |g: &Graph| {
        let mut d: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
        d.sort_unstable();
        d
    };
    let mut hard_pairs = 0;
    for i in 0..trees.len() {
        for j in i + 1..trees.len() {
            if degree_profile(&trees[i]) != degree_profile(&trees[j]) {
                continue;
            }
            hard_pairs += 1;
            if hard_pairs % 7 != 0 {
                continue; // sample; the full scan of 9! per pair is slow
            }
            assert!(!isomorphic_by_brute_force_9(&trees[i], &trees[j]), "pair ({i}, {j})");
            assert_ne!(
                canonical_tree_code(&trees[i]).unwrap(),
                canonical_tree_code(&trees[j]).unwrap()
            );
        }
    }
    assert!(hard_pairs > 50, "sample unexpectedly small: {hard_pairs}");
}

/// Permutation scan for order nine; 16-bit pair indexing.
fn isomorphic_by_brute_force_9(a: &Graph, b: &Graph) -> bool {
    let n = 9;
    let fingerprint = |g: &Graph, perm: &[usize]| -> u128 {
        g.edges().fold(0u128, |acc, e| {
            let (x, y) = e.endpoints();
            let (x, y) = (perm[x.0], perm[y.0]);
            let (x, y) = if x < y { (x, y) } else { (y, x) };
            acc | (1u128 << (x * 9 + y))
        })
    };
    let identity: Vec<usize> = (0..n).collect();
    let target = fingerprint(b, &identity);
    let mut perm = identity;
    let mut c = vec![0usize; n];
    if fingerprint(a, &perm) == target {
        return true;
    }
    let mut i = 1;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            if fingerprint(a, &perm) == target {
                return true;
            }
            c[i] += 1;
            i = 1;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    false
}

#[test]
fn all_routes_agree_with_the_sweep() {
    let result = run_route_agreement(&IdentityConfig::default());
    assert!(result.passed(), "{result}");
}

#[test]
fn table_one_and_two_anchor_values() {
    // stars and paths at the tabulated orders, straight from the sweep
    let cap = OracleCap::default();
    let star9 = nearlyz::family::star(9);
    assert_eq!(zk_oracle(&star9, 1, cap).unwrap(), 28u32.into());
    let path9 = nearlyz::family::path(9);
    assert_eq!(zk_oracle(&path9, 1, cap).unwrap(), 71u32.into());
    let star10 = nearlyz::family::star(10);
    assert_eq!(zk_oracle(&star10, 1, cap).unwrap(), 36u32.into());
    let broom10 = nearlyz::family::broom(10, 3).unwrap();
    assert_eq!(zk_oracle(&broom10, 1, cap).unwrap(), 50u32.into());
}
