use std::collections::BTreeMap;

use serde::Serialize;

/// One violated predicate with the inputs that violate it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Failure {
    pub predicate: String,
    /// Inputs in hexadecimal floating point, see
    /// [`format_element`](super::hexfloat::format_element).
    pub inputs: Vec<String>,
    /// How far the predicate is from holding; always above its tolerance.
    pub violation: f64,
}

/// Outcome of running one suite on one algebra.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub algebra: String,
    pub seed: u64,
    pub samples: usize,
    pub pass: bool,
    pub failures: Vec<Failure>,
    pub elapsed_s: f64,
    /// Worst residual per predicate and other reported-only numbers.
    pub metrics: BTreeMap<String, f64>,
    /// No predicate was evaluated.
    pub vacuous: bool,
}

impl VerificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with `elapsed_s` zeroed, for reproducibility comparisons.
    pub fn fingerprint(&self) -> String {
        let mut copy = self.clone();
        copy.elapsed_s = 0.0;
        copy.to_json()
    }

    pub fn failed_predicates(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.failures.iter().map(|f| f.predicate.as_str()).collect();
        names.dedup();
        names
    }
}
