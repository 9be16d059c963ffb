//! Report types shared by the scan and verification operations.

use std::fmt;
use std::time::Duration;

use serde::Serialize;

/// One tree together with its invariant value. `code` is the canonical
/// tree code rendered as parentheses; `value` an exact decimal.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub code: String,
    pub graph6: String,
    pub value: String,
}

/// Extremes found over all free trees of one order.
///
/// `second_max` lists every tree attaining the runner-up value;
/// `elapsed` is informational and deliberately left out of the JSON so
/// reruns and different worker counts serialize identically.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub schema: u32,
    pub n: usize,
    pub tree_count: usize,
    pub min: Witness,
    pub second_min: Witness,
    pub max: Witness,
    pub second_max: Vec<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ExtremalReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for ExtremalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {}: {} trees", self.n, self.tree_count)?;
        writeln!(f, "  min         {:>12}  {}", self.min.value, self.min.graph6)?;
        writeln!(
            f,
            "  second min  {:>12}  {}",
            self.second_min.value, self.second_min.graph6
        )?;
        writeln!(f, "  max         {:>12}  {}", self.max.value, self.max.graph6)?;
        for w in &self.second_max {
            writeln!(f, "  second max  {:>12}  {}", w.value, w.graph6)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub graph6: String,
    pub details: String,
}

/// Outcome of one verification claim over a stated range.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationResult {
    pub claim: String,
    pub range: String,
    pub status: Status,
    pub checked: u64,
    pub counterexamples: Vec<Counterexample>,
    /// Informational only: tie reports, documented boundary cases,
    /// descriptive results outside the asserted range.
    pub notes: Vec<String>,
}

impl VerificationResult {
    /// Status is derived: pass exactly when no counterexample exists.
    pub fn new(
        claim: impl Into<String>,
        range: impl Into<String>,
        checked: u64,
        counterexamples: Vec<Counterexample>,
        notes: Vec<String>,
    ) -> VerificationResult {
        let status = if counterexamples.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        };
        VerificationResult {
            claim: claim.into(),
            range: range.into(),
            status,
            checked,
            counterexamples,
            notes,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for VerificationResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "[{}] {} ({}; {} instances)",
            match self.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            },
            self.claim,
            self.range,
            self.checked
        )?;
        for c in &self.counterexamples {
            writeln!(f, "    counterexample {}: {}", c.graph6, c.details)?;
        }
        for n in &self.notes {
            writeln!(f, "    note: {n}")?;
        }
        Ok(())
    }
}
