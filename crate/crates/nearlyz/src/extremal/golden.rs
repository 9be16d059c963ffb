//! Golden Z_1 tables for the trees of orders 9 and 10.
//!
//! The values ship as CSV files under `tables/` at the repository root
//! and are compiled in. `verify_table` recomputes every tree of the
//! order and demands multiset equality.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::exact::z1_tree_dp;
use crate::graph6::to_graph6;
use crate::treegen::enumerate_free_trees;

use super::report::{Counterexample, VerificationResult};

const TABLE_N9: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../tables/z1_n9.csv"
));
const TABLE_N10: &str = include_str!(concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../tables/z1_n10.csv"
));

/// Reference multiset of Z_1 values over all trees of one order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GoldenTable {
    pub n: usize,
    /// Values in table order.
    pub values: Vec<u64>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GoldenError {
    #[error("no golden table for order {0}; only 9 and 10 are tabulated")]
    NoTable(usize),
}

impl GoldenTable {
    pub fn for_order(n: usize) -> Result<GoldenTable, GoldenError> {
        let raw = match n {
            9 => TABLE_N9,
            10 => TABLE_N10,
            _ => return Err(GoldenError::NoTable(n)),
        };
        let values = raw
            .lines()
            .skip(1) // header
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                let value = l.split(',').nth(1).expect("CSV has two columns");
                value.trim().parse().expect("golden values are integers")
            })
            .collect();
        Ok(GoldenTable { n, values })
    }

    pub fn csv(&self) -> String {
        let mut out = String::from("index,value\n");
        for (i, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{},{}\n", i + 1, v));
        }
        out
    }

    pub fn sorted_values(&self) -> Vec<u64> {
        let mut v = self.values.clone();
        v.sort_unstable();
        v
    }
}

/// Checks the computed Z_1 multiset of order `n` against the golden
/// table.
pub fn verify_table(n: usize) -> Result<VerificationResult, GoldenError> {
    let table = GoldenTable::for_order(n)?;
    Ok(verify_table_against(&table))
}

/// Same check against a caller-supplied table; lets tests prove the
/// harness actually fails on a perturbed value.
pub fn verify_table_against(table: &GoldenTable) -> VerificationResult {
    let n = table.n;
    let mut computed: BTreeMap<BigUint, (u64, String)> = BTreeMap::new();
    let mut total = 0u64;
    for tree in enumerate_free_trees(n).expect("tabulated orders are enumerable") {
        let value = z1_tree_dp(&tree).expect("enumerated graphs are trees");
        let entry = computed.entry(value).or_insert_with(|| {
            (0, to_graph6(&tree).expect("small orders encode"))
        });
        entry.0 += 1;
        total += 1;
    }
    let mut golden: BTreeMap<BigUint, u64> = BTreeMap::new();
    for &v in &table.values {
        *golden.entry(BigUint::from(v)).or_default() += 1;
    }

    let mut counterexamples = Vec::new();
    for (value, (count, sample)) in &computed {
        let expected = golden.get(value).copied().unwrap_or(0);
        if *count != expected {
            counterexamples.push(Counterexample {
                graph6: sample.clone(),
                details: format!(
                    "value {value} computed {count} times, tabulated {expected} times"
                ),
            });
        }
    }
    for (value, expected) in &golden {
        if !computed.contains_key(value) {
            counterexamples.push(Counterexample {
                graph6: String::new(),
                details: format!("value {value} tabulated {expected} times, never computed"),
            });
        }
    }
    if total != table.values.len() as u64 {
        counterexamples.push(Counterexample {
            graph6: String::new(),
            details: format!(
                "{total} trees enumerated but {} table entries",
                table.values.len()
            ),
        });
    }
    VerificationResult::new(
        format!("Z_1 multiset over all trees of order {n} equals the table"),
        format!("n = {n}"),
        total,
        counterexamples,
        Vec::new(),
    )
}
