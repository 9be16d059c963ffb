//! Acceptance suite: one test per release criterion, each printing a
//! pass/fail line and holding its runtime budget. Run with
//! `cargo test -p nearlyz-cli --test acceptance` (add `-- --nocapture`
//! to see the lines on success).

use std::process::Command;
use std::time::{Duration, Instant};

use nearlyz::extremal::{
    check_second_max, monotonicity_suite, run_identity_suite, scan_order,
    verify_lemma_inequalities, verify_max_theorem, verify_min_theorems, verify_table,
    GoldenTable, IdentityConfig, LemmaConfig,
};
use nearlyz::closed::{
    sigma1_cycle_closed, z0_path_closed, z1_broom3_closed, z1_cycle_closed, z1_path_closed,
    z1_star_closed,
};
use nearlyz::family::{cycle, path};
use nearlyz::oracle::{sigma1_oracle, zk_oracle, OracleCap};

fn report(criterion: &str, passed: bool, elapsed: Duration, budget: Duration) {
    let within = elapsed <= budget;
    println!(
        "criterion {criterion}: {} in {elapsed:?} (budget {budget:?})",
        if passed && within { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed");
    assert!(
        within,
        "criterion {criterion} exceeded its budget: {elapsed:?} > {budget:?}"
    );
}

#[test]
fn criterion_1_golden_tables() {
    let started = Instant::now();
    let mut ok = true;
    for (n, count, min, max) in [(9, 47, 28, 71), (10, 106, 36, 130)] {
        let table = GoldenTable::for_order(n).unwrap();
        ok &= table.values.len() == count;
        ok &= table.sorted_values().first() == Some(&min);
        ok &= table.sorted_values().last() == Some(&max);
        let result = verify_table(n).unwrap();
        if !result.passed() {
            print!("{result}");
            ok = false;
        }
    }
    report(
        "1 (golden tables n=9,10)",
        ok,
        started.elapsed(),
        Duration::from_secs(5),
    );
}

#[test]
fn criterion_2_closed_forms_vs_sweeps() {
    let started = Instant::now();
    let cap = OracleCap::default();
    let mut ok = true;
    for n in 0..=20 {
        let p = path(n);
        ok &= z0_path_closed(n) == zk_oracle(&p, 0, cap).unwrap();
        ok &= z1_path_closed(n) == zk_oracle(&p, 1, cap).unwrap();
    }
    for n in 3..=12 {
        let c = cycle(n);
        ok &= z1_cycle_closed(n).unwrap() == zk_oracle(&c, 1, cap).unwrap();
        ok &= sigma1_cycle_closed(n).unwrap() == sigma1_oracle(&c, cap).unwrap();
    }
    // the five-vertex path has eight matchings; a misprinted seven
    // would fail here
    ok &= z0_path_closed(5) == 8u32.into();
    ok &= zk_oracle(&path(5), 0, cap).unwrap() == 8u32.into();
    report(
        "2 (closed forms vs sweeps)",
        ok,
        started.elapsed(),
        Duration::from_secs(10),
    );
}

#[test]
fn criterion_3_identity_suites() {
    let started = Instant::now();
    let mut ok = true;
    for result in run_identity_suite(&IdentityConfig::default()) {
        if !result.passed() {
            print!("{result}");
            ok = false;
        }
    }
    report(
        "3 (exact identity suites)",
        ok,
        started.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_4_extremal_theorems_nine_to_thirteen() {
    let started = Instant::now();
    let mut ok = true;
    let min = verify_min_theorems(9, 13, 4).unwrap();
    if !min.passed() {
        print!("{min}");
        ok = false;
    }
    let max = verify_max_theorem(9, 13, 4, 42, 50).unwrap();
    if !max.passed() {
        print!("{max}");
        ok = false;
    }
    // the advertised closed-form values
    for n in 9..=13 {
        let report = scan_order(n, 4).unwrap();
        ok &= report.min.value == z1_star_closed(n).unwrap().to_string();
        ok &= report.second_min.value == z1_broom3_closed(n).unwrap().to_string();
        ok &= report.max.value == z1_path_closed(n).to_string();
    }
    report(
        "4 (min/second-min/max theorems, n=9..13)",
        ok,
        started.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_5_second_max_nine_to_sixteen() {
    let started = Instant::now();
    let mut ok = true;
    let result = check_second_max(9, 16, 4).unwrap();
    if !result.passed() {
        print!("{result}");
        ok = false;
    }
    let ten = scan_order(10, 4).unwrap();
    ok &= ten.second_max.iter().any(|w| w.value == "126");
    report(
        "5 (second-max tripods, n=9..16)",
        ok,
        started.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_6_inequality_lemmas() {
    let started = Instant::now();
    let result = verify_lemma_inequalities(&LemmaConfig::default());
    if !result.passed() {
        print!("{result}");
    }
    report(
        "6 (inequality lemma suite)",
        result.passed(),
        started.elapsed(),
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_7_monotonicity() {
    let started = Instant::now();
    let result = monotonicity_suite(42, 500);
    if !result.passed() {
        print!("{result}");
    }
    report(
        "7 (monotonicity, 500 seeded instances)",
        result.passed(),
        started.elapsed(),
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_8_determinism() {
    let started = Instant::now();
    let bin = env!("CARGO_BIN_EXE_nearlyz");
    let scan_json = |jobs: &str| {
        let out = Command::new(bin)
            .args(["scan", "--n", "12", "--jobs", jobs, "--json"])
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let baseline = scan_json("1");
    let mut ok = !baseline.is_empty();
    for jobs in ["2", "8"] {
        ok &= scan_json(jobs) == baseline;
    }

    // stream slices concatenate to the full enumeration
    let enumerate = |extra: &[&str]| {
        let out = Command::new(bin)
            .args(["enumerate", "--n", "10"])
            .args(extra)
            .output()
            .expect("binary runs");
        assert!(out.status.success());
        out.stdout
    };
    let full = enumerate(&[]);
    let mut stitched = enumerate(&["--range", "0..10"]);
    stitched.extend(enumerate(&["--range", "10..106"]));
    ok &= stitched == full;

    report(
        "8 (determinism across jobs and slices)",
        ok,
        started.elapsed(),
        Duration::from_secs(60),
    );
}
