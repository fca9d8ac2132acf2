//! A prime sequence on which the product inequality reverses: each term is the
//! least prime `k * M + 1` with `M` the product of the earlier terms.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::bigmath::decimal;
use crate::error::{Error, Result};
use crate::inequality::{inequality_rows, report_from_rows, Comparator};
use crate::primes::{is_prime, is_prime_big, Primality};
use crate::report::{Relation, ReportContext, VerificationReport};

/// Which product serves as the modulus for terms from the third on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModulusReading {
    /// `M` is the product of the previous terms of the sequence itself.
    ProductOfTerms,
    /// `M` is the product of the first `n - 1` ordinary primes. Under this
    /// reading the reverse inequality already fails at `n = 3`.
    ProductOfPrimes,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HSequence {
    pub reading: ModulusReading,
    #[serde(with = "decimal::vec")]
    pub terms: Vec<BigUint>,
    /// Multiplier `k` used for each term from the third on.
    pub multipliers: Vec<u64>,
    pub probabilistic_primality: bool,
}

/// First `count` terms under the product-of-terms reading, scanning
/// `k = 1..=max_search` for each term.
pub fn build_h_sequence(count: usize, max_search: u64) -> Result<HSequence> {
    build(count, max_search, ModulusReading::ProductOfTerms)
}

/// First `count` terms with the ordinary primorial as modulus.
pub fn build_literal_h_sequence(count: usize, max_search: u64) -> Result<HSequence> {
    build(count, max_search, ModulusReading::ProductOfPrimes)
}

fn build(count: usize, max_search: u64, reading: ModulusReading) -> Result<HSequence> {
    if count == 0 {
        return Err(Error::precondition("count must be at least 1"));
    }
    let mut terms: Vec<BigUint> = [2u32, 3].iter().take(count).map(|&t| t.into()).collect();
    let mut multipliers = Vec::new();
    let mut probabilistic = false;
    // 2 * 3 under either reading
    let mut modulus = BigUint::from(6u8);
    let mut next_prime = 3u64;
    while terms.len() < count {
        let mut hit = None;
        for k in 1..=max_search {
            let candidate = &modulus * k + 1u32;
            match is_prime_big(&candidate) {
                Primality::Composite => continue,
                verdict => {
                    hit = Some((k, candidate, verdict.is_probabilistic()));
                    break;
                }
            }
        }
        let Some((k, term, prob)) = hit else {
            return Err(Error::SearchExhausted {
                term: terms.len() + 1,
                max_search,
                partial: terms,
            });
        };
        probabilistic |= prob;
        multipliers.push(k);
        match reading {
            ModulusReading::ProductOfTerms => modulus *= &term,
            ModulusReading::ProductOfPrimes => {
                next_prime += 1;
                while !is_prime(next_prime) {
                    next_prime += 1;
                }
                modulus *= next_prime;
            }
        }
        terms.push(term);
    }
    Ok(HSequence {
        reading,
        terms,
        multipliers,
        probabilistic_primality: probabilistic,
    })
}

/// Checks `h(1) ... h(n) < h(n+1)` exactly for every available `n`.
pub fn verify_reverse_inequality(h: &HSequence) -> Result<VerificationReport> {
    if h.terms.len() < 2 {
        return Err(Error::SequenceTooShort {
            len: h.terms.len(),
            needed: 2,
        });
    }
    let label = match h.reading {
        ModulusReading::ProductOfTerms => "h-sequence (modulus: product of previous terms)",
        ModulusReading::ProductOfPrimes => "h-sequence (modulus: product of the first primes)",
    };
    let ctx = ReportContext {
        family: label.to_string(),
        bound: None,
        exhaustive: true,
        probabilistic_primality: h.probabilistic_primality,
    };
    let rows = inequality_rows(&h.terms, 1, 1, &Comparator::exact())?;
    Ok(report_from_rows(
        &h.terms,
        &rows,
        1,
        Relation::ProductLess,
        &ctx,
    ))
}

impl HSequence {
    /// Product of the first `n` terms.
    pub fn prefix_product(&self, n: usize) -> BigUint {
        self.terms[..n]
            .iter()
            .fold(BigUint::one(), |acc, t| acc * t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer;

    fn as_u64(h: &HSequence) -> Vec<u64> {
        h.terms.iter().map(|t| u64::try_from(t).unwrap()).collect()
    }

    /// Least prime 1 mod m by trial division.
    fn least_prime_one_mod(m: u64) -> u64 {
        let mut c = m + 1;
        loop {
            if (2..).take_while(|d| d * d <= c).all(|d| c % d != 0) {
                return c;
            }
            c += m;
        }
    }

    #[test]
    fn leading_terms() {
        assert_eq!(as_u64(&build_h_sequence(1, 10).unwrap()), vec![2]);
        assert_eq!(as_u64(&build_h_sequence(3, 10).unwrap()), vec![2, 3, 7]);
        assert_eq!(as_u64(&build_h_sequence(4, 10).unwrap()), vec![2, 3, 7, 43]);
        let h5 = build_h_sequence(5, 100).unwrap();
        assert_eq!(as_u64(&h5)[4], least_prime_one_mod(1806));
        assert!(as_u64(&h5)[4] > 1807);
    }

    #[test]
    fn congruence_and_reverse_inequality() {
        let h = build_h_sequence(9, 100_000).unwrap();
        for n in 2..h.terms.len() {
            assert!((&h.terms[n] % h.prefix_product(n)).is_one());
        }
        let r = verify_reverse_inequality(&h).unwrap();
        assert!(r.violations.is_empty());
        assert_eq!(r.n_range, [1, 8]);
        assert!(
            h.probabilistic_primality,
            "terms past 2^64 need probable-prime tests"
        );
    }

    #[test]
    fn literal_reading_fails_at_three() {
        let h = build_literal_h_sequence(5, 1000).unwrap();
        assert_eq!(as_u64(&h), vec![2, 3, 7, 31, 211]);
        let r = verify_reverse_inequality(&h).unwrap();
        assert_eq!(r.violations, vec![3, 4]);
        assert!((&h.terms[3] - 1u32).is_multiple_of(&30u32.into()));
    }

    #[test]
    fn exhausted_search_keeps_partial() {
        match build_h_sequence(6, 1) {
            Err(Error::SearchExhausted { term, partial, .. }) => {
                assert_eq!(term, 5);
                assert_eq!(partial.len(), 4);
            }
            other => panic!("{other:?}"),
        }
        assert!(build_h_sequence(0, 10).is_err());
        assert!(verify_reverse_inequality(&build_h_sequence(1, 1).unwrap()).is_err());
    }
}
