use std::collections::HashSet;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::simultaneous::{NormKind, SimultaneousPrimePoint, SimultaneousScan};
use crate::bigmath::decimal;
use crate::error::Result;
use crate::inequality::verify_inequality;
use crate::poly::IntPoly;
use crate::report::{ReportContext, VerificationReport};

/// Greedy pairwise-coprime products of a polynomial system's simultaneous
/// prime values, taken in norm order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetaSequence {
    pub system: Vec<IntPoly>,
    pub bound: u64,
    pub norm: NormKind,
    #[serde(with = "decimal::vec")]
    pub betas: Vec<BigUint>,
    pub chosen_points: Vec<SimultaneousPrimePoint>,
    pub exhaustive: bool,
}

impl BetaSequence {
    pub fn family(&self) -> String {
        let members: Vec<String> = self.system.iter().map(|f| f.to_string()).collect();
        format!("beta({})", members.join("; "))
    }
}

/// Walks the ranked points and keeps each one whose value product is coprime
/// to every product kept so far.
///
/// All values are prime, so coprimality reduces to "no value was used before".
pub fn build_beta(scan: &SimultaneousScan) -> BetaSequence {
    let mut used: HashSet<u64> = HashSet::new();
    let mut betas = Vec::new();
    let mut chosen_points = Vec::new();
    for candidate in &scan.points {
        if candidate.values.iter().any(|v| used.contains(v)) {
            continue;
        }
        used.extend(candidate.values.iter().copied());
        betas.push(candidate.values.iter().map(|&v| BigUint::from(v)).product());
        chosen_points.push(candidate.clone());
    }
    BetaSequence {
        system: scan.system.clone(),
        bound: scan.bound,
        norm: scan.norm,
        betas,
        chosen_points,
        exhaustive: scan.exhaustive,
    }
}

/// `beta_1 ... beta_n > beta_{n+1}` over the constructed sequence. The report
/// is evidence over a finite range only.
pub fn verify_beta_inequality(beta: &BetaSequence, n_min: usize) -> Result<VerificationReport> {
    let ctx = ReportContext {
        family: beta.family(),
        bound: Some(beta.bound),
        exhaustive: beta.exhaustive,
        probabilistic_primality: false,
    };
    verify_inequality(&beta.betas, n_min, 1, &ctx)
}
