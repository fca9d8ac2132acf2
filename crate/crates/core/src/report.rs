//! Machine-readable outcome of an inequality run.

use std::time::Duration;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bigmath::decimal;

pub const SCHEMA_VERSION: u32 = 1;

/// Terms of the checked sequence copied into a report.
pub const PREFIX_LEN: usize = 100;

/// Which way the product is expected to compare with the next term.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `s_1 * ... * s_n > s_{n+1}^k`
    ProductGreater,
    /// `s_1 * ... * s_n < s_{n+1}^k`
    ProductLess,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct ReportContext {
    /// Canonical polynomial text or a sequence label.
    pub family: String,
    pub bound: Option<u64>,
    pub exhaustive: bool,
    pub probabilistic_primality: bool,
}

impl ReportContext {
    pub fn new(family: impl Into<String>) -> Self {
        Self {
            family: family.into(),
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timings {
    pub elapsed_ms: u64,
}

impl From<Duration> for Timings {
    fn from(d: Duration) -> Self {
        Self {
            elapsed_ms: d.as_millis() as u64,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub family: String,
    pub bound: Option<u64>,
    pub exhaustive: bool,
    pub probabilistic_primality: bool,
    pub sequence_length: usize,
    #[serde(with = "decimal::vec")]
    pub sequence_prefix: Vec<BigUint>,
    /// Inclusive `[first, last]` values of `n` that were checked.
    pub n_range: [u64; 2],
    pub relation: Relation,
    pub violations: Vec<u64>,
    /// Largest violating `n` in the checked range, 0 if there is none. This
    /// is an observation over a finite range, not a proven constant.
    pub empirical_threshold: u64,
    pub threshold_kind: String,
    pub exponent: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl VerificationReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    /// True if some violation comes after an `n` where the relation held.
    pub fn relapses(&self) -> bool {
        let [lo, hi] = self.n_range;
        let first_ok = (lo..=hi).find(|n| self.violations.binary_search(n).is_err());
        match first_ok {
            Some(ok) => self.violations.iter().any(|&v| v > ok),
            None => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}
