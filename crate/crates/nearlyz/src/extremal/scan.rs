//! Exhaustive extremal scan over the free trees of one order.
//!
//! The tree stream is split into contiguous index ranges, one per
//! worker; each worker folds its slice into a small accumulator that
//! keeps the two lowest and two highest distinct values together with
//! every witness attaining them. Accumulator merge is associative and
//! commutative and witnesses are ordered by canonical code, so the
//! report does not depend on the worker count.

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::BigUint;
use thiserror::Error;

use crate::canon::{canonical_tree_code, CanonicalTreeCode};
use crate::exact::z1_tree_dp;
use crate::graph6::to_graph6;
use crate::treegen::{enumerate_free_trees_range, free_tree_count, TreeGenError};

use super::report::{ExtremalReport, Witness};

/// Practical scan ceiling; the order-20 stream already holds 823,065
/// trees.
pub const MAX_SCAN_ORDER: usize = 20;
pub const MIN_SCAN_ORDER: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ScanError {
    #[error("scan order {0} outside {MIN_SCAN_ORDER}..={MAX_SCAN_ORDER}")]
    OrderOutOfRange(usize),
    #[error(transparent)]
    TreeGen(#[from] TreeGenError),
}

/// Witnesses for the two extreme distinct values on one side.
#[derive(Clone, Default)]
struct TwoLevels {
    levels: BTreeMap<BigUint, BTreeMap<CanonicalTreeCode, String>>,
}

impl TwoLevels {
    fn insert(&mut self, keep_low: bool, value: BigUint, code: CanonicalTreeCode, graph6: String) {
        self.levels.entry(value).or_default().insert(code, graph6);
        self.trim(keep_low);
    }

    fn merge(&mut self, keep_low: bool, other: TwoLevels) {
        for (value, witnesses) in other.levels {
            self.levels.entry(value).or_default().extend(witnesses);
        }
        self.trim(keep_low);
    }

    fn trim(&mut self, keep_low: bool) {
        while self.levels.len() > 2 {
            let worst = if keep_low {
                self.levels.keys().next_back().cloned()
            } else {
                self.levels.keys().next().cloned()
            };
            self.levels.remove(&worst.expect("nonempty"));
        }
    }

    /// Entries ordered best-first.
    fn ranked(&self, keep_low: bool) -> Vec<(&BigUint, &BTreeMap<CanonicalTreeCode, String>)> {
        let mut out: Vec<_> = self.levels.iter().collect();
        if !keep_low {
            out.reverse();
        }
        out
    }
}

#[derive(Clone, Default)]
struct Accumulator {
    low: TwoLevels,
    high: TwoLevels,
    count: usize,
}

impl Accumulator {
    fn add(&mut self, value: BigUint, code: CanonicalTreeCode, graph6: String) {
        self.low
            .insert(true, value.clone(), code.clone(), graph6.clone());
        self.high.insert(false, value, code, graph6);
        self.count += 1;
    }

    fn merge(mut self, other: Accumulator) -> Accumulator {
        self.low.merge(true, other.low);
        self.high.merge(false, other.high);
        self.count += other.count;
        self
    }
}

fn scan_slice(n: usize, start: usize, end: usize) -> Result<Accumulator, ScanError> {
    let mut acc = Accumulator::default();
    for tree in enumerate_free_trees_range(n, start, end)? {
        let value = z1_tree_dp(&tree).expect("enumerated graphs are trees");
        let code = canonical_tree_code(&tree).expect("enumerated graphs are trees");
        let graph6 = to_graph6(&tree).expect("orders stay within graph6 range");
        acc.add(value, code, graph6);
    }
    Ok(acc)
}

fn witness(value: &BigUint, code: &CanonicalTreeCode, graph6: &str) -> Witness {
    Witness {
        code: code.to_string(),
        graph6: graph6.to_string(),
        value: value.to_string(),
    }
}

/// Scans every free tree of order `n` with `jobs` parallel workers and
/// reports the extremes of Z_1.
pub fn scan_order(n: usize, jobs: usize) -> Result<ExtremalReport, ScanError> {
    if !(MIN_SCAN_ORDER..=MAX_SCAN_ORDER).contains(&n) {
        return Err(ScanError::OrderOutOfRange(n));
    }
    let started = Instant::now();
    let total = free_tree_count(n)?;
    let jobs = jobs.clamp(1, total);
    let chunk = total.div_ceil(jobs);
    let acc = std::thread::scope(|scope| -> Result<Accumulator, ScanError> {
        let mut handles = Vec::new();
        for w in 0..jobs {
            let start = (w * chunk).min(total);
            let end = (start + chunk).min(total);
            if start == end {
                continue;
            }
            handles.push(scope.spawn(move || scan_slice(n, start, end)));
        }
        let mut acc = Accumulator::default();
        for h in handles {
            acc = acc.merge(h.join().expect("scan worker must not panic")?);
        }
        Ok(acc)
    })?;
    debug_assert_eq!(acc.count, total);

    let ranked_low = acc.low.ranked(true);
    let (min_value, min_witnesses) = ranked_low[0];
    let (min_code, min_g6) = min_witnesses.iter().next().expect("level is nonempty");
    let min = witness(min_value, min_code, min_g6);
    let second_min = if min_witnesses.len() > 1 {
        let (code, g6) = min_witnesses.iter().nth(1).expect("checked len");
        witness(min_value, code, g6)
    } else {
        let (value, witnesses) = ranked_low
            .get(1)
            .expect("an order with at least two trees has a runner-up");
        let (code, g6) = witnesses.iter().next().expect("level is nonempty");
        witness(value, code, g6)
    };

    let ranked_high = acc.high.ranked(false);
    let (max_value, max_witnesses) = ranked_high[0];
    let (max_code, max_g6) = max_witnesses.iter().next().expect("level is nonempty");
    let max = witness(max_value, max_code, max_g6);
    let second_max: Vec<Witness> = if max_witnesses.len() > 1 {
        max_witnesses
            .iter()
            .skip(1)
            .map(|(code, g6)| witness(max_value, code, g6))
            .collect()
    } else {
        let (value, witnesses) = ranked_high
            .get(1)
            .expect("an order with at least two trees has a runner-up");
        witnesses
            .iter()
            .map(|(code, g6)| witness(value, code, g6))
            .collect()
    };

    Ok(ExtremalReport {
        schema: 1,
        n,
        tree_count: acc.count,
        min,
        second_min,
        max,
        second_max,
        elapsed: started.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_nine_extremes() {
        let report = scan_order(9, 1).unwrap();
        assert_eq!(report.tree_count, 47);
        assert_eq!(report.min.value, "28");
        assert_eq!(report.second_min.value, "37");
        assert_eq!(report.max.value, "71");
        assert_eq!(report.second_max.len(), 1);
        assert_eq!(report.second_max[0].value, "69");
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let baseline = scan_order(10, 1).unwrap().to_json();
        for jobs in [2, 3, 8, 64] {
            assert_eq!(scan_order(10, jobs).unwrap().to_json(), baseline, "jobs = {jobs}");
        }
    }

    #[test]
    fn order_four_is_inverted() {
        // the star holds the larger value at tiny orders
        let report = scan_order(4, 2).unwrap();
        assert_eq!(report.tree_count, 2);
        assert_eq!(report.min.value, "2");
        assert_eq!(report.max.value, "3");
    }

    #[test]
    fn range_is_enforced() {
        assert!(scan_order(3, 1).is_err());
        assert!(scan_order(21, 1).is_err());
    }

    #[test]
    fn eleven_has_a_three_way_second_max_tie() {
        let report = scan_order(11, 4).unwrap();
        assert_eq!(report.max.value, "235");
        assert_eq!(report.second_max.len(), 3);
        assert!(report.second_max.iter().all(|w| w.value == "223"));
    }
}
