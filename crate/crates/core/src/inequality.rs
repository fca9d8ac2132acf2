//! Exact comparison of prefix products against powers of the next term.
//!
//! Each comparison first looks at `sum ln s_i - k ln s_{n+1}`. When that gap
//! is wider than the configured margin the sign decides; otherwise the
//! product and the power are formed exactly and compared as big integers.

use std::cmp::Ordering;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bigmath::{ln_big, product, CompensatedSum};
use crate::error::{Error, Result};
use crate::primes::PrimeTable;
use crate::report::{Relation, ReportContext, VerificationReport, PREFIX_LEN, SCHEMA_VERSION};

/// Natural-log gap below which the exact path is taken.
pub const DEFAULT_LOG_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Comparator {
    pub margin: f64,
}

impl Default for Comparator {
    fn default() -> Self {
        Self {
            margin: DEFAULT_LOG_MARGIN,
        }
    }
}

impl Comparator {
    /// A comparator that never trusts the log domain.
    pub fn exact() -> Self {
        Self {
            margin: f64::INFINITY,
        }
    }

    fn decide(&self, lhs_log: f64, rhs_log: f64) -> Option<Ordering> {
        let gap = lhs_log - rhs_log;
        if gap.abs() > self.margin {
            Some(if gap > 0.0 {
                Ordering::Greater
            } else {
                Ordering::Less
            })
        } else {
            None
        }
    }

    /// Orders `seq[0] * ... * seq[n-1]` against `seq[n]^k`.
    pub fn compare(&self, seq: &[BigUint], n: usize, k: u32) -> Result<Ordering> {
        check_index(seq, n)?;
        let mut lhs = CompensatedSum::new();
        seq[..n].iter().for_each(|s| lhs.add(ln_big(s)));
        let rhs_log = k as f64 * ln_big(&seq[n]);
        Ok(self
            .decide(lhs.value(), rhs_log)
            .unwrap_or_else(|| product(&seq[..n]).cmp(&seq[n].pow(k))))
    }
}

fn check_index(seq: &[BigUint], n: usize) -> Result<()> {
    if n == 0 || n + 1 > seq.len() {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as u64,
            max: seq.len().saturating_sub(1) as u64,
        });
    }
    Ok(())
}

/// Exact ordering of the product of the first `n` terms against the `(n+1)`-th
/// term raised to `k`.
pub fn compare_product_power(seq: &[BigUint], n: usize, k: u32) -> Result<Ordering> {
    Comparator::default().compare(seq, n, k)
}

/// One checked `n`: the log-domain sides and the decided ordering.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InequalityRow {
    pub n: u64,
    pub lhs_log: f64,
    pub rhs_log: f64,
    pub ordering: RowOrdering,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RowOrdering {
    Less,
    Equal,
    Greater,
}

impl From<Ordering> for RowOrdering {
    fn from(o: Ordering) -> Self {
        match o {
            Ordering::Less => RowOrdering::Less,
            Ordering::Equal => RowOrdering::Equal,
            Ordering::Greater => RowOrdering::Greater,
        }
    }
}

impl RowOrdering {
    pub fn as_str(self) -> &'static str {
        match self {
            RowOrdering::Less => "less",
            RowOrdering::Equal => "equal",
            RowOrdering::Greater => "greater",
        }
    }
}

/// Product of a growing prefix, extended only when the exact path needs it.
struct LazyPrefix<'a> {
    seq: &'a [BigUint],
    len: usize,
    value: BigUint,
}

impl LazyPrefix<'_> {
    fn upto(&mut self, n: usize) -> &BigUint {
        debug_assert!(n >= self.len);
        if n - self.len > 64 {
            self.value *= product(&self.seq[self.len..n]);
        } else {
            for s in &self.seq[self.len..n] {
                self.value *= s;
            }
        }
        self.len = n;
        &self.value
    }
}

/// Orderings for every `n` in `n_min..=len-1`.
pub fn inequality_rows(
    seq: &[BigUint],
    n_min: usize,
    k: u32,
    comparator: &Comparator,
) -> Result<Vec<InequalityRow>> {
    if n_min == 0 {
        return Err(Error::precondition("n_min must be at least 1"));
    }
    if seq.len() < n_min + 1 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            needed: n_min + 1,
        });
    }
    let mut lhs = CompensatedSum::new();
    seq[..n_min - 1].iter().for_each(|s| lhs.add(ln_big(s)));
    let mut exact = LazyPrefix {
        seq,
        len: 0,
        value: BigUint::from(1u8),
    };
    let mut rows = Vec::with_capacity(seq.len() - n_min);
    for n in n_min..seq.len() {
        lhs.add(ln_big(&seq[n - 1]));
        let lhs_log = lhs.value();
        let rhs_log = k as f64 * ln_big(&seq[n]);
        let ordering = match comparator.decide(lhs_log, rhs_log) {
            Some(o) => o,
            None => exact.upto(n).cmp(&seq[n].pow(k)),
        };
        rows.push(InequalityRow {
            n: n as u64,
            lhs_log,
            rhs_log,
            ordering: ordering.into(),
        });
    }
    Ok(rows)
}

/// Builds a report from already computed rows.
pub fn report_from_rows(
    seq: &[BigUint],
    rows: &[InequalityRow],
    k: u32,
    relation: Relation,
    ctx: &ReportContext,
) -> VerificationReport {
    let wanted = match relation {
        Relation::ProductGreater => RowOrdering::Greater,
        Relation::ProductLess => RowOrdering::Less,
    };
    let violations: Vec<u64> = rows
        .iter()
        .filter(|r| r.ordering != wanted)
        .map(|r| r.n)
        .collect();
    VerificationReport {
        schema_version: SCHEMA_VERSION,
        family: ctx.family.clone(),
        bound: ctx.bound,
        exhaustive: ctx.exhaustive,
        probabilistic_primality: ctx.probabilistic_primality,
        sequence_length: seq.len(),
        sequence_prefix: seq.iter().take(PREFIX_LEN).cloned().collect(),
        n_range: [
            rows.first().map_or(0, |r| r.n),
            rows.last().map_or(0, |r| r.n),
        ],
        relation,
        empirical_threshold: violations.iter().copied().max().unwrap_or(0),
        violations,
        threshold_kind: "empirical".to_string(),
        exponent: k,
        timings: None,
    }
}

/// Checks `prod_{i<=n} s_i > s_{n+1}^k` for every `n` from `n_min` to `len - 1`.
pub fn verify_inequality(
    seq: &[BigUint],
    n_min: usize,
    k: u32,
    ctx: &ReportContext,
) -> Result<VerificationReport> {
    verify_relation(
        seq,
        n_min,
        k,
        Relation::ProductGreater,
        ctx,
        &Comparator::default(),
    )
}

pub fn verify_relation(
    seq: &[BigUint],
    n_min: usize,
    k: u32,
    relation: Relation,
    ctx: &ReportContext,
    comparator: &Comparator,
) -> Result<VerificationReport> {
    if seq.len() < n_min + 2 {
        return Err(Error::SequenceTooShort {
            len: seq.len(),
            needed: n_min + 2,
        });
    }
    let rows = inequality_rows(seq, n_min, k, comparator)?;
    Ok(report_from_rows(seq, &rows, k, relation, ctx))
}

/// Largest `k >= 0` with `prod_{i<=n} s_i > s_{n+1}^k`.
pub fn max_bonse_exponent(seq: &[BigUint], n: usize) -> Result<u32> {
    check_index(seq, n)?;
    let next = &seq[n];
    if *next <= BigUint::from(1u8) {
        return Err(Error::precondition("sequence terms must exceed 1"));
    }
    let prod = product(&seq[..n]);
    let estimate = (ln_big(&prod) / ln_big(next)).floor().max(0.0) as u32;
    let mut k = estimate;
    while prod > next.pow(k + 1) {
        k += 1;
    }
    while k > 0 && prod <= next.pow(k) {
        k -= 1;
    }
    Ok(k)
}

/// Whether `theta(p_n) > ln p_{n+1}` agrees with the exact `p_1 ... p_n > p_{n+1}`.
pub fn theta_equivalence_check(table: &PrimeTable, n: usize) -> Result<bool> {
    if n == 0 || n + 1 > table.count() {
        return Err(Error::OutOfRange {
            what: "n (table too small)",
            value: n as u64,
            max: table.count().saturating_sub(1) as u64,
        });
    }
    let primes: Vec<BigUint> = table.primes()[..=n].iter().map(|&p| p.into()).collect();
    let pn = table.nth_prime(n)?;
    let pn1 = table.nth_prime(n + 1)?;
    let by_theta = table.theta(pn)?.value > (pn1 as f64).ln();
    let exact = compare_product_power(&primes, n, 1)? == Ordering::Greater;
    Ok(by_theta == exact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(xs: &[u64]) -> Vec<BigUint> {
        xs.iter().map(|&x| x.into()).collect()
    }

    const PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

    #[test]
    fn small_comparisons() {
        let p = big(&PRIMES);
        assert_eq!(compare_product_power(&p, 2, 1).unwrap(), Ordering::Greater);
        assert_eq!(compare_product_power(&p, 4, 2).unwrap(), Ordering::Greater);
        assert_eq!(compare_product_power(&p, 3, 2).unwrap(), Ordering::Less);
        assert_eq!(compare_product_power(&p, 5, 3).unwrap(), Ordering::Greater);
        assert_eq!(compare_product_power(&p, 4, 3).unwrap(), Ordering::Less);
        assert!(compare_product_power(&p, 12, 1).is_err());
        assert!(compare_product_power(&p, 0, 1).is_err());
    }

    #[test]
    fn equality_goes_exact() {
        let seq = big(&[2, 8, 4]); // 2*8 = 16 = 4^2
        assert_eq!(compare_product_power(&seq, 2, 2).unwrap(), Ordering::Equal);
        let rows = inequality_rows(&seq, 1, 2, &Comparator::default()).unwrap();
        assert_eq!(rows[1].ordering, RowOrdering::Equal);
    }

    #[test]
    fn bonse_exponents() {
        let p = big(&PRIMES);
        assert_eq!(max_bonse_exponent(&p, 4).unwrap(), 2);
        assert_eq!(max_bonse_exponent(&p, 2).unwrap(), 1);
        assert_eq!(max_bonse_exponent(&p, 1).unwrap(), 0);
        // brute-force oracle at n = 9
        let prod: u128 = PRIMES[..9].iter().map(|&p| p as u128).product();
        let mut k = 0;
        while prod > 29u128.pow(k + 1) {
            k += 1;
        }
        assert_eq!(max_bonse_exponent(&p, 9).unwrap(), k);
        assert_eq!(k, 5);
    }

    #[test]
    fn report_fields() {
        // 3x-1 prime values
        let seq = big(&[2, 5, 11, 17, 23, 29, 41, 47, 53, 59]);
        let report = verify_inequality(&seq, 1, 1, &ReportContext::new("3*x-1")).unwrap();
        assert_eq!(report.violations, vec![1, 2]);
        assert_eq!(report.empirical_threshold, 2);
        assert_eq!(report.n_range, [1, 9]);
        assert!(!report.relapses());
        let short = verify_inequality(&seq[..2], 1, 1, &ReportContext::default());
        assert!(matches!(short, Err(Error::SequenceTooShort { .. })));
    }

    #[test]
    fn relapse_detection() {
        let seq = big(&[2, 3, 5, 1000]);
        let report = verify_inequality(&seq, 1, 1, &ReportContext::default()).unwrap();
        assert_eq!(report.violations, vec![1, 3]);
        assert!(report.relapses());
    }

    #[test]
    fn theta_agreement_small() {
        let table = PrimeTable::new(1000).unwrap();
        for n in 1..100 {
            assert!(theta_equivalence_check(&table, n).unwrap(), "n = {n}");
        }
        assert!(theta_equivalence_check(&table, table.count()).is_err());
    }
}
