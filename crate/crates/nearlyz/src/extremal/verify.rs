//! Verification of the extremal theorems, the technical inequalities,
//! and the exact identities, each over an explicit instance set.
//!
//! Two of the strict inequalities genuinely need a minimum order. The
//! branch-ironing inequality for Z_1 reverses below order 9 (the star
//! beats the path there) and admits two equality instances at order 9;
//! the branch-merge inequality reverses or degenerates to equality
//! below order 9. The suites assert strictness only where exhaustive
//! sweeps confirm it and report the boundary cases as notes instead of
//! failures.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canon::canonical_tree_code;
use crate::closed::{
    sigma1_cycle_closed, sigma1_path_closed, z0_path_closed, z1_broom3_closed, z1_cycle_closed,
    z1_path_closed, z1_star_closed,
};
use crate::exact::{forest_z0_z1, z0, z1_recursive, z1_tree_dp, BigCount};
use crate::family::{self, RootedTree};
use crate::graph::{Graph, VertexId};
use crate::graph6::to_graph6;
use crate::oracle::{check_pivot_recursion, sigma1_oracle, zk_oracle, zk_profile, OracleCap};
use crate::treegen::enumerate_free_trees;

use super::random::{disjoint_union_all, random_forest, random_forest_components, random_graph};
use super::report::{Counterexample, VerificationResult};
use super::scan::{scan_order, ScanError};

fn ce(graph: &Graph, details: String) -> Counterexample {
    Counterexample {
        graph6: to_graph6(graph).unwrap_or_default(),
        details,
    }
}

/// Theorems: over all trees of each order in `lo..=hi` (both at least
/// 9), the unique minimum is the star with value (n-1)(n-2)/2 and the
/// unique runner-up the broom B^3_n with value (n-3)^2 + 1.
pub fn verify_min_theorems(lo: usize, hi: usize, jobs: usize) -> Result<VerificationResult, ScanError> {
    assert!(lo >= 9, "the minimum theorems start at order 9");
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for n in lo..=hi {
        let report = scan_order(n, jobs)?;
        checked += report.tree_count as u64;
        let star = family::star(n);
        let star_code = canonical_tree_code(&star).expect("star is a tree").to_string();
        let broom = family::broom(n, 3).expect("n >= 9");
        let broom_code = canonical_tree_code(&broom).expect("broom is a tree").to_string();

        if report.min.code != star_code {
            counterexamples.push(Counterexample {
                graph6: report.min.graph6.clone(),
                details: format!("minimum at n = {n} is not the star"),
            });
        }
        if report.min.value != z1_star_closed(n).expect("n >= 9").to_string() {
            counterexamples.push(ce(&star, format!("star value mismatch at n = {n}: {}", report.min.value)));
        }
        // uniqueness: the runner-up must sit strictly above the minimum
        if report.second_min.value == report.min.value {
            counterexamples.push(Counterexample {
                graph6: report.second_min.graph6.clone(),
                details: format!("minimum at n = {n} is not unique"),
            });
        }
        if report.second_min.code != broom_code {
            counterexamples.push(Counterexample {
                graph6: report.second_min.graph6.clone(),
                details: format!("second minimum at n = {n} is not B^3_n"),
            });
        }
        if report.second_min.value != z1_broom3_closed(n).expect("n >= 9").to_string() {
            counterexamples.push(ce(&broom, format!("broom value mismatch at n = {n}: {}", report.second_min.value)));
        }
        // second-minimum uniqueness: no third tree may share its value
        let second_min_count = count_trees_with_value(n, &report.second_min.value);
        if second_min_count != 1 {
            counterexamples.push(Counterexample {
                graph6: report.second_min.graph6.clone(),
                details: format!(
                    "second-minimum value at n = {n} attained by {second_min_count} trees"
                ),
            });
        }
    }
    Ok(VerificationResult::new(
        "unique minimum K_{1,n-1} and unique second minimum B^3_n",
        format!("trees of order {lo}..={hi}"),
        checked,
        counterexamples,
        Vec::new(),
    ))
}

fn count_trees_with_value(n: usize, value: &str) -> usize {
    let target: BigUint = value.parse().expect("witness values are decimal");
    enumerate_free_trees(n)
        .expect("scan orders are enumerable")
        .filter(|t| z1_tree_dp(t).expect("trees") == target)
        .count()
}

/// Theorem: the path is the unique Z_1 maximizer among trees of each
/// order in `lo..=hi`, with its closed-form value; additionally a
/// seeded sample of forests per order stays at or below the path.
pub fn verify_max_theorem(
    lo: usize,
    hi: usize,
    jobs: usize,
    seed: u64,
    forests_per_order: usize,
) -> Result<VerificationResult, ScanError> {
    assert!(lo >= 9, "the maximum theorem starts at order 9");
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in lo..=hi {
        let report = scan_order(n, jobs)?;
        checked += report.tree_count as u64;
        let path = family::path(n);
        let path_code = canonical_tree_code(&path).expect("path is a tree").to_string();
        let path_value = z1_path_closed(n);
        if report.max.code != path_code {
            counterexamples.push(Counterexample {
                graph6: report.max.graph6.clone(),
                details: format!("maximum at n = {n} is not the path"),
            });
        }
        if report.max.value != path_value.to_string() {
            counterexamples.push(ce(&path, format!("path value mismatch at n = {n}: {}", report.max.value)));
        }
        if report
            .second_max
            .iter()
            .any(|w| w.value == report.max.value)
        {
            counterexamples.push(Counterexample {
                graph6: report.max.graph6.clone(),
                details: format!("maximum at n = {n} is not unique"),
            });
        }
        // sampled forest side
        for _ in 0..forests_per_order {
            let forest = random_forest(&mut rng, n, 0.8);
            checked += 1;
            let (_, z1f) = forest_z0_z1(&forest).expect("forest by construction");
            let is_path = forest.is_tree()
                && canonical_tree_code(&forest).expect("tree").to_string() == path_code;
            let ok = if is_path {
                z1f == path_value
            } else {
                z1f < path_value
            };
            if !ok {
                counterexamples.push(ce(
                    &forest,
                    format!("forest of order {n} has Z_1 = {z1f}, path has {path_value}"),
                ));
            }
        }
    }
    Ok(VerificationResult::new(
        "unique maximum P_n over trees; sampled forests do not exceed it",
        format!("trees of order {lo}..={hi}"),
        checked,
        counterexamples,
        Vec::new(),
    ))
}

/// Second-maximum characterisation: every runner-up witness is a
/// tripod; the named spider ([P_1,P_1,P_{n-3}] at 9 and 11,
/// [P_3,P_3,P_{n-7}] at 10 and 12..=20) is among the witnesses. Ties
/// are reported verbatim in the notes.
pub fn check_second_max(lo: usize, hi: usize, jobs: usize) -> Result<VerificationResult, ScanError> {
    assert!((9..=20).contains(&lo) && lo <= hi && hi <= 20);
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    let mut checked = 0;
    for n in lo..=hi {
        let report = scan_order(n, jobs)?;
        checked += report.tree_count as u64;
        let expected_branches: Vec<usize> = if n == 9 || n == 11 {
            vec![n - 3, 1, 1]
        } else {
            vec![n - 7, 3, 3]
        };
        let expected = family::star_like(&expected_branches).expect("positive branches");
        let expected_code = canonical_tree_code(&expected).expect("spider is a tree").to_string();

        for w in &report.second_max {
            let tree = crate::graph6::parse_graph6(&w.graph6).expect("witness round-trips");
            let leaves = tree.vertices().filter(|&v| tree.degree(v) == 1).count();
            if leaves != 3 {
                counterexamples.push(Counterexample {
                    graph6: w.graph6.clone(),
                    details: format!("second-max witness at n = {n} has {leaves} leaves, not 3"),
                });
            }
        }
        if !report.second_max.iter().any(|w| w.code == expected_code) {
            counterexamples.push(Counterexample {
                graph6: report.second_max.first().map(|w| w.graph6.clone()).unwrap_or_default(),
                details: format!(
                    "expected second-max spider with branches {expected_branches:?} missing at n = {n}"
                ),
            });
        }
        if report.second_max.len() > 1 {
            let ties: Vec<&str> = report.second_max.iter().map(|w| w.graph6.as_str()).collect();
            notes.push(format!(
                "n = {n}: second maximum {} shared by {} trees: {}",
                report.second_max[0].value,
                report.second_max.len(),
                ties.join(" ")
            ));
        }
    }
    Ok(VerificationResult::new(
        "second maximum is a tripod with the predicted branch profile",
        format!("trees of order {lo}..={hi}"),
        checked,
        counterexamples,
        notes,
    ))
}

/// Instance bounds for the inequality sweep.
#[derive(Debug, Clone, Copy)]
pub struct LemmaConfig {
    /// Path inequalities run for all orders up to this bound.
    pub path_max_order: usize,
    /// Branch ironing runs over every rooted branch decomposition of
    /// every tree up to this order.
    pub ironing_max_order: usize,
    /// Branch merging runs over every spider up to this order.
    pub merge_max_order: usize,
    /// The matching-maximality check runs over every tree up to this
    /// order.
    pub matching_max_order: usize,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            path_max_order: 200,
            ironing_max_order: 12,
            merge_max_order: 12,
            matching_max_order: 10,
        }
    }
}

/// Branches of `tree` around `root`, each with compacted ids and its
/// attachment vertex as root.
pub fn branch_decomposition(tree: &Graph, root: VertexId) -> Vec<RootedTree> {
    let mut out = Vec::new();
    for &c in tree.neighbors(root) {
        // vertices reachable from c without passing through root
        let mut members = vec![c];
        let mut seen: BTreeSet<VertexId> = BTreeSet::from([root, c]);
        let mut cursor = 0;
        while cursor < members.len() {
            let v = members[cursor];
            cursor += 1;
            for &w in tree.neighbors(v) {
                if seen.insert(w) {
                    members.push(w);
                }
            }
        }
        members.sort();
        let index_of = |v: VertexId| members.binary_search(&v).expect("member");
        let edges = members.iter().flat_map(|&v| {
            tree.neighbors(v)
                .iter()
                .filter(move |&&w| w > v && w != root)
                .map(move |&w| (index_of(v), index_of(w)))
        });
        let graph = Graph::from_edges(members.len(), edges.collect::<Vec<_>>())
            .expect("branch edges are simple");
        out.push(RootedTree::new(graph, VertexId(index_of(c))).expect("branch is a tree"));
    }
    out
}

struct LemmaOutcome {
    checked: u64,
    counterexamples: Vec<Counterexample>,
    notes: Vec<String>,
}

fn path_lemmas(max_order: usize) -> LemmaOutcome {
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    let report = |msg: String| Counterexample {
        graph6: String::new(),
        details: msg,
    };
    for n in 0..=max_order {
        checked += 1;
        if z0_path_closed(n) < BigUint::from(n as u64) {
            counterexamples.push(report(format!("Z_0(P_{n}) < {n}")));
        }
        if n >= 4 && z0_path_closed(n) < BigUint::from(n as u64 + 1) {
            counterexamples.push(report(format!("Z_0(P_{n}) < {}", n + 1)));
        }
        if n >= 3 && z1_path_closed(n) < BigUint::from(n as u64 - 2) {
            counterexamples.push(report(format!("Z_1(P_{n}) < {}", n - 2)));
        }
    }
    // (d-1) Z_0(P_{n-d}) + Z_1(P_{n-d}) <= Z_0(P_{n-3}) + Z_1(P_{n-2}), d >= 5
    for d in 5..max_order {
        for n in d + 1..=max_order {
            checked += 1;
            let lhs = BigUint::from(d as u64 - 1) * z0_path_closed(n - d) + z1_path_closed(n - d);
            let rhs = z0_path_closed(n - 3) + z1_path_closed(n - 2);
            if lhs > rhs {
                counterexamples.push(report(format!("handle inequality fails at n = {n}, d = {d}")));
            }
        }
    }
    // Z_1(P_{n-3}) + Z_0(P_{n-4}) + Z_0(P_{n-3}) <= Z_1(P_{n-2}) + Z_0(P_{n-3}), n >= 7
    for n in 7..=max_order {
        checked += 1;
        let lhs = z1_path_closed(n - 3) + z0_path_closed(n - 4) + z0_path_closed(n - 3);
        let rhs = z1_path_closed(n - 2) + z0_path_closed(n - 3);
        if lhs > rhs {
            counterexamples.push(report(format!("degree-3 inequality fails at n = {n}")));
        }
    }
    // Z_1(P_{n-4}) + Z_0(P_{n-5}) + 2 Z_0(P_{n-4}) <= Z_1(P_{n-2}) + Z_0(P_{n-3}), n >= 7
    for n in 7..=max_order {
        checked += 1;
        let lhs = z1_path_closed(n - 4) + z0_path_closed(n - 5) + 2u32 * z0_path_closed(n - 4);
        let rhs = z1_path_closed(n - 2) + z0_path_closed(n - 3);
        if lhs > rhs {
            counterexamples.push(report(format!("degree-4 inequality fails at n = {n}")));
        }
    }
    LemmaOutcome {
        checked,
        counterexamples,
        notes: Vec::new(),
    }
}

fn matching_max_lemma(max_order: usize) -> LemmaOutcome {
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for n in 1..=max_order {
        let bound = z0_path_closed(n);
        for tree in enumerate_free_trees(n).expect("bounded order") {
            checked += 1;
            let value = z0(&tree);
            if value > bound {
                counterexamples.push(ce(
                    &tree,
                    format!("tree of order {n} has Z_0 = {value} above the path's {bound}"),
                ));
            }
        }
    }
    LemmaOutcome {
        checked,
        counterexamples,
        notes: Vec::new(),
    }
}

/// Strictness threshold for the Z_1 ironing and merge inequalities:
/// below this order exhaustive sweeps show reversals, and at order 9
/// ironing admits equality.
const Z1_STRICT_MIN_ORDER: usize = 9;

fn ironing_lemmas(max_order: usize) -> LemmaOutcome {
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    let mut checked = 0;
    let mut small_skipped = 0u64;
    let mut equalities_at_nine = 0u64;
    for n in 2..=max_order {
        for tree in enumerate_free_trees(n).expect("bounded order") {
            let (tree_z0, tree_z1) = forest_z0_z1(&tree).expect("tree");
            for root in tree.vertices() {
                if tree.degree(root) == 0 {
                    continue;
                }
                let branches = branch_decomposition(&tree, root);
                for i in 0..branches.len() {
                    if branches[i].is_end_rooted_path() {
                        continue;
                    }
                    let mut ironed_branches: Vec<RootedTree> = branches.clone();
                    ironed_branches[i] =
                        RootedTree::end_rooted_path(branches[i].graph.vertex_count());
                    let ironed =
                        family::attach_branches(&ironed_branches).expect("branches are trees");
                    let (ironed_z0, ironed_z1) = forest_z0_z1(&ironed).expect("tree");

                    // matching count: strict at every order
                    checked += 1;
                    if tree_z0 >= ironed_z0 {
                        counterexamples.push(ce(
                            &tree,
                            format!(
                                "Z_0 ironing fails at n = {n}: {tree_z0} vs {ironed_z0} after replacing branch {i} at root {root}"
                            ),
                        ));
                    }

                    if n < Z1_STRICT_MIN_ORDER {
                        small_skipped += 1;
                        continue;
                    }
                    checked += 1;
                    if n == Z1_STRICT_MIN_ORDER {
                        // order 9 provably admits equality; demand only <=
                        if tree_z1 > ironed_z1 {
                            counterexamples.push(ce(
                                &tree,
                                format!("Z_1 ironing reverses at n = {n}: {tree_z1} vs {ironed_z1}"),
                            ));
                        } else if tree_z1 == ironed_z1 {
                            equalities_at_nine += 1;
                        }
                    } else if tree_z1 >= ironed_z1 {
                        counterexamples.push(ce(
                            &tree,
                            format!(
                                "Z_1 ironing fails at n = {n}: {tree_z1} vs {ironed_z1} after replacing branch {i} at root {root}"
                            ),
                        ));
                    }
                }
            }
        }
    }
    if small_skipped > 0 {
        notes.push(format!(
            "{small_skipped} decompositions of order < {Z1_STRICT_MIN_ORDER} are documented \
             non-instances for the Z_1 inequality (the direction reverses at tiny orders)"
        ));
    }
    if equalities_at_nine > 0 {
        notes.push(format!(
            "{equalities_at_nine} order-9 decompositions attain Z_1 equality; strictness starts at order 10"
        ));
    }
    LemmaOutcome {
        checked,
        counterexamples,
        notes,
    }
}

fn descending_compositions(total: usize, max_part: usize) -> Vec<Vec<usize>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=total.min(max_part)).rev() {
        for mut rest in descending_compositions(total - first, first) {
            let mut v = vec![first];
            v.append(&mut rest);
            out.push(v);
        }
    }
    out
}

fn merge_lemma(max_order: usize) -> LemmaOutcome {
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    let mut checked = 0;
    let mut small_skipped = 0u64;
    for n in 4..=max_order {
        for branches in descending_compositions(n - 1, n - 1) {
            if branches.len() < 3 {
                continue;
            }
            if n < Z1_STRICT_MIN_ORDER {
                small_skipped += 1;
                continue;
            }
            checked += 1;
            let spider = family::star_like(&branches).expect("positive branches");
            let mut merged_branches = vec![branches[0] + branches[1]];
            merged_branches.extend_from_slice(&branches[2..]);
            merged_branches.sort_unstable_by(|a, b| b.cmp(a));
            let merged = family::star_like(&merged_branches).expect("positive branches");
            let lhs = z1_tree_dp(&spider).expect("tree");
            let rhs = z1_tree_dp(&merged).expect("tree");
            if lhs >= rhs {
                counterexamples.push(ce(
                    &spider,
                    format!(
                        "branch merge fails at n = {n}, branches {branches:?}: {lhs} vs {rhs}"
                    ),
                ));
            }
        }
    }
    if small_skipped > 0 {
        notes.push(format!(
            "{small_skipped} spiders of order < {Z1_STRICT_MIN_ORDER} are documented \
             non-instances for the merge inequality (the star side inverts at tiny orders)"
        ));
    }
    LemmaOutcome {
        checked,
        counterexamples,
        notes,
    }
}

/// Runs the whole inequality sweep.
pub fn verify_lemma_inequalities(config: &LemmaConfig) -> VerificationResult {
    let mut checked = 0;
    let mut counterexamples = Vec::new();
    let mut notes = Vec::new();
    for (label, outcome) in [
        ("path bounds", path_lemmas(config.path_max_order)),
        ("matching maximality", matching_max_lemma(config.matching_max_order)),
        ("branch ironing", ironing_lemmas(config.ironing_max_order)),
        ("branch merging", merge_lemma(config.merge_max_order)),
    ] {
        checked += outcome.checked;
        counterexamples.extend(outcome.counterexamples);
        notes.extend(outcome.notes.into_iter().map(|n| format!("{label}: {n}")));
        notes.push(format!("{label}: {} instances", outcome.checked));
    }
    VerificationResult::new(
        "inequality lemma suite",
        format!(
            "paths to order {}, trees to order {}, spiders to order {}",
            config.path_max_order, config.ironing_max_order, config.merge_max_order
        ),
        checked,
        counterexamples,
        notes,
    )
}

/// Configuration of the exact-identity suite.
#[derive(Debug, Clone, Copy)]
pub struct IdentityConfig {
    pub seed: u64,
    pub tree_max_order: usize,
    pub random_graphs: usize,
    pub random_graph_max_edges: usize,
    pub random_forests: usize,
}

impl Default for IdentityConfig {
    fn default() -> Self {
        IdentityConfig {
            seed: 42,
            tree_max_order: 8,
            random_graphs: 200,
            random_graph_max_edges: 12,
            random_forests: 100,
        }
    }
}

fn identity_corpus(cfg: &IdentityConfig) -> Vec<Graph> {
    let mut corpus = Vec::new();
    for n in 1..=cfg.tree_max_order {
        corpus.extend(enumerate_free_trees(n).expect("bounded order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for _ in 0..cfg.random_graphs {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.15..0.55);
        corpus.push(random_graph(&mut rng, n, p, cfg.random_graph_max_edges));
    }
    corpus
}

/// Exact identity suite: the pivot recursion at every vertex, the
/// line-graph identity, component multiplicativity of Z_0, the subset
/// partition identity, and closed-form/oracle agreement.
pub fn run_identity_suite(cfg: &IdentityConfig) -> Vec<VerificationResult> {
    let cap = OracleCap::default();
    let corpus = identity_corpus(cfg);
    let mut results = Vec::new();

    // pivot recursion at every vertex of every corpus graph
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for g in &corpus {
        for v in g.vertices() {
            checked += 1;
            if !check_pivot_recursion(g, v, cap).expect("corpus fits the oracle") {
                counterexamples.push(ce(g, format!("pivot recursion fails at vertex {v}")));
            }
        }
    }
    results.push(VerificationResult::new(
        "pivot recursion holds at every vertex",
        format!(
            "trees to order {}, {} random graphs",
            cfg.tree_max_order, cfg.random_graphs
        ),
        checked,
        counterexamples,
        Vec::new(),
    ));

    // Z_1(G) = sigma_1(L(G))
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for g in &corpus {
        checked += 1;
        let direct = z1_recursive(g);
        let via_line = sigma1_oracle(&g.line_graph(), cap).expect("line graph fits the oracle");
        if direct != via_line {
            counterexamples.push(ce(g, format!("Z_1 = {direct} but sigma_1(L) = {via_line}")));
        }
    }
    results.push(VerificationResult::new(
        "Z_1 equals sigma_1 of the line graph",
        "same corpus",
        checked,
        counterexamples,
        Vec::new(),
    ));

    // multiplicativity over components
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0x5eed);
    for _ in 0..cfg.random_forests {
        checked += 1;
        let components = random_forest_components(&mut rng, 4, 8);
        let union = disjoint_union_all(&components);
        let product: BigCount = components.iter().map(z0).product();
        let direct = z0(&union);
        if direct != product {
            counterexamples.push(ce(
                &union,
                format!("Z_0 of union is {direct}, component product {product}"),
            ));
        }
    }
    results.push(VerificationResult::new(
        "Z_0 multiplies over connected components",
        format!("{} seeded random forests", cfg.random_forests),
        checked,
        counterexamples,
        Vec::new(),
    ));

    // partition: sum over k of Z_k = 2^m
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for g in &corpus {
        checked += 1;
        let profile = zk_profile(g, cap).expect("corpus fits the oracle");
        let total: BigUint = profile.iter().sum();
        let expected = BigUint::from(1u64) << g.edge_count();
        if total != expected {
            counterexamples.push(ce(g, format!("subset profile sums to {total}, not 2^m")));
        }
    }
    results.push(VerificationResult::new(
        "subset counts by pair count partition the power set",
        "same corpus",
        checked,
        counterexamples,
        Vec::new(),
    ));

    // closed forms against sweeps
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    for n in 0..=20 {
        let path = family::path(n);
        checked += 2;
        let z0_sweep = zk_oracle(&path, 0, cap).expect("paths fit the oracle");
        if z0_path_closed(n) != z0_sweep {
            counterexamples.push(ce(&path, format!("Z_0(P_{n}) closed form disagrees with sweep")));
        }
        let z1_sweep = zk_oracle(&path, 1, cap).expect("paths fit the oracle");
        if z1_path_closed(n) != z1_sweep {
            counterexamples.push(ce(&path, format!("Z_1(P_{n}) closed form disagrees with sweep")));
        }
    }
    for n in 2..=20 {
        let path = family::path(n);
        checked += 1;
        let sweep = sigma1_oracle(&path, cap).expect("paths fit the oracle");
        if sigma1_path_closed(n) != sweep {
            counterexamples.push(ce(&path, format!("sigma_1(P_{n}) closed form disagrees with sweep")));
        }
    }
    for n in 3..=12 {
        let cycle = family::cycle(n);
        checked += 2;
        let z1_sweep = zk_oracle(&cycle, 1, cap).expect("cycles fit the oracle");
        if z1_cycle_closed(n).expect("n >= 3") != z1_sweep {
            counterexamples.push(ce(&cycle, format!("Z_1(C_{n}) closed form disagrees with sweep")));
        }
        let s_sweep = sigma1_oracle(&cycle, cap).expect("cycles fit the oracle");
        if sigma1_cycle_closed(n).expect("n >= 3") != s_sweep {
            counterexamples.push(ce(&cycle, format!("sigma_1(C_{n}) closed form disagrees with sweep")));
        }
    }
    // the matching count of the five-path is eight, not the seven a
    // misprint would suggest
    checked += 1;
    if z0_path_closed(5) != BigUint::from(8u32)
        || zk_oracle(&family::path(5), 0, cap).expect("fits") != BigUint::from(8u32)
    {
        counterexamples.push(ce(&family::path(5), "Z_0(P_5) must be 8".to_string()));
    }
    results.push(VerificationResult::new(
        "closed forms agree with exhaustive sweeps",
        "paths to order 20, cycles to order 12",
        checked,
        counterexamples,
        Vec::new(),
    ));

    results
}

/// Oracle agreement between independent routes, over trees up to order
/// `tree_max_order` and the seeded random corpus.
pub fn run_route_agreement(cfg: &IdentityConfig) -> VerificationResult {
    let cap = OracleCap::default();
    let mut counterexamples = Vec::new();
    let mut checked = 0;
    let mut corpus = Vec::new();
    for n in 1..=9 {
        corpus.extend(enumerate_free_trees(n).expect("bounded order"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ 0xa9ee);
    for _ in 0..cfg.random_graphs {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.15..0.55);
        corpus.push(random_graph(&mut rng, n, p, 14));
    }
    for g in &corpus {
        checked += 1;
        let z0_sweep = zk_oracle(g, 0, cap).expect("corpus fits the oracle");
        if z0(g) != z0_sweep {
            counterexamples.push(ce(g, "Z_0 recursion disagrees with sweep".to_string()));
        }
        let z1_sweep = zk_oracle(g, 1, cap).expect("corpus fits the oracle");
        if z1_recursive(g) != z1_sweep {
            counterexamples.push(ce(g, "Z_1 recursion disagrees with sweep".to_string()));
        }
        if g.is_forest() {
            let (_, dp) = forest_z0_z1(g).expect("forest");
            if dp != z1_sweep {
                counterexamples.push(ce(g, "Z_1 tree DP disagrees with sweep".to_string()));
            }
        }
    }
    VerificationResult::new(
        "all computation routes agree with the exhaustive sweep",
        format!("trees to order 9, {} random graphs", cfg.random_graphs),
        checked,
        counterexamples,
        Vec::new(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn min_theorems_hold_at_nine_and_ten() {
        let result = verify_min_theorems(9, 10, 2).unwrap();
        assert!(result.passed(), "{result}");
    }

    #[test]
    fn max_theorem_holds_at_nine_and_ten() {
        let result = verify_max_theorem(9, 10, 2, 42, 10).unwrap();
        assert!(result.passed(), "{result}");
    }

    #[test]
    fn second_max_at_nine_through_twelve() {
        let result = check_second_max(9, 12, 2).unwrap();
        assert!(result.passed(), "{result}");
        // the order-11 tie is reported, not failed
        assert!(result.notes.iter().any(|n| n.contains("n = 11")), "{result:?}");
    }

    #[test]
    fn lemma_suite_small_bounds() {
        let cfg = LemmaConfig {
            path_max_order: 60,
            ironing_max_order: 10,
            merge_max_order: 10,
            matching_max_order: 8,
        };
        let result = verify_lemma_inequalities(&cfg);
        assert!(result.passed(), "{result}");
    }

    #[test]
    fn identity_suite_smoke() {
        let cfg = IdentityConfig {
            random_graphs: 25,
            random_forests: 20,
            tree_max_order: 6,
            ..IdentityConfig::default()
        };
        for result in run_identity_suite(&cfg) {
            assert!(result.passed(), "{result}");
        }
    }

    #[test]
    fn route_agreement_smoke() {
        let cfg = IdentityConfig {
            random_graphs: 15,
            ..IdentityConfig::default()
        };
        let result = run_route_agreement(&cfg);
        assert!(result.passed(), "{result}");
    }

    #[test]
    fn branch_decomposition_covers_the_tree() {
        let tree = family::broom(9, 3).unwrap();
        for v in tree.vertices() {
            if tree.degree(v) == 0 {
                continue;
            }
            let branches = branch_decomposition(&tree, v);
            assert_eq!(branches.len(), tree.degree(v));
            let total: usize = branches.iter().map(|b| b.graph.vertex_count()).sum();
            assert_eq!(total, tree.vertex_count() - 1);
            let rebuilt = family::attach_branches(&branches).unwrap();
            assert_eq!(
                canonical_tree_code(&rebuilt).unwrap(),
                canonical_tree_code(&tree).unwrap()
            );
        }
    }
}
