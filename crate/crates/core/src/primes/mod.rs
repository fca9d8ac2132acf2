//! Prime tables, primality, prime counting and Chebyshev theta.

mod cache;
mod primality;
mod sieve;

use serde::{Deserialize, Serialize, Serializer};

use crate::bigmath::CompensatedSum;
use crate::error::{Error, Result};

pub use primality::{is_prime, is_prime_big, Primality, PROBABLE_PRIME_ROUNDS};

/// Default memory budget for a sieve: 1 GiB, enough for limits around 10^9.
pub const DEFAULT_MEMORY_BUDGET: u64 = 1 << 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SieveConfig {
    pub memory_budget: u64,
    pub threads: usize,
}

impl Default for SieveConfig {
    fn default() -> Self {
        Self {
            memory_budget: DEFAULT_MEMORY_BUDGET,
            threads: 1,
        }
    }
}

/// All primes up to a fixed limit. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeTable {
    limit: u64,
    primes: Vec<u64>,
}

impl PrimeTable {
    pub fn new(limit: u64) -> Result<Self> {
        Self::with_config(limit, &SieveConfig::default())
    }

    pub fn with_config(limit: u64, config: &SieveConfig) -> Result<Self> {
        if limit < 2 {
            return Err(Error::LimitTooSmall(limit));
        }
        let needed = sieve::estimated_bytes(limit, config.threads);
        if needed > config.memory_budget {
            return Err(Error::MemoryBudget {
                limit,
                needed,
                budget: config.memory_budget,
            });
        }
        Ok(Self {
            limit,
            primes: sieve::primes_up_to(limit, config.threads),
        })
    }

    /// Smallest table guaranteed to hold at least `count` primes.
    pub fn with_prime_count(count: usize, config: &SieveConfig) -> Result<Self> {
        Self::with_config(nth_prime_upper_bound(count as u64), config)
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn count(&self) -> usize {
        self.primes.len()
    }

    /// Table membership; `false` for anything above the limit.
    pub fn contains(&self, n: u64) -> bool {
        n <= self.limit && self.primes.binary_search(&n).is_ok()
    }

    /// The `i`-th prime, 1-based.
    pub fn nth_prime(&self, i: usize) -> Result<u64> {
        if i == 0 || i > self.primes.len() {
            return Err(Error::OutOfRange {
                what: "prime index",
                value: i as u64,
                max: self.primes.len() as u64,
            });
        }
        Ok(self.primes[i - 1])
    }

    /// Number of primes `<= x`.
    pub fn pi(&self, x: u64) -> Result<usize> {
        self.check_x(x)?;
        Ok(self.primes.partition_point(|&p| p <= x))
    }

    /// Chebyshev's theta: the sum of `ln p` over primes `p <= x`.
    pub fn theta(&self, x: u64) -> Result<ThetaValue> {
        self.check_x(x)?;
        let value = sum_logs(self.primes.iter().copied().take_while(|&p| p <= x));
        Ok(ThetaValue {
            x,
            modulus: 1,
            residue: 0,
            value,
        })
    }

    /// Theta restricted to primes congruent to `residue` modulo `modulus`.
    pub fn theta_ap(&self, x: u64, modulus: u64, residue: i64) -> Result<ThetaValue> {
        self.check_x(x)?;
        if modulus == 0 {
            return Err(Error::precondition("modulus must be positive"));
        }
        let r = residue.rem_euclid(modulus as i64) as u64;
        if num_integer::gcd(r, modulus) != 1 {
            return Err(Error::NotCoprime { residue, modulus });
        }
        let value = sum_logs(
            self.primes
                .iter()
                .copied()
                .take_while(|&p| p <= x)
                .filter(|&p| p % modulus == r),
        );
        Ok(ThetaValue {
            x,
            modulus,
            residue,
            value,
        })
    }

    fn check_x(&self, x: u64) -> Result<()> {
        if x > self.limit {
            return Err(Error::OutOfRange {
                what: "argument",
                value: x,
                max: self.limit,
            });
        }
        Ok(())
    }
}

fn sum_logs(primes: impl Iterator<Item = u64>) -> f64 {
    let mut acc = CompensatedSum::new();
    for p in primes {
        acc.add((p as f64).ln());
    }
    acc.value()
}

/// Upper bound for the `n`-th prime (Rosser's bound for n >= 6).
pub fn nth_prime_upper_bound(n: u64) -> u64 {
    if n < 6 {
        return 13;
    }
    let x = n as f64;
    (x * (x.ln() + x.ln().ln())).ceil() as u64 + 1
}

/// A theta sum at `x`, optionally restricted to one residue class.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ThetaValue {
    pub x: u64,
    pub modulus: u64,
    pub residue: i64,
    #[serde(serialize_with = "twelve_significant")]
    pub value: f64,
}

/// Rounds to 12 significant digits, the precision carried in reports.
pub fn round_significant(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

fn twelve_significant<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(round_significant(*v))
}

/// Euler's totient via trial-division factorization.
pub fn euler_phi(mut b: u64) -> u64 {
    assert!(b >= 1, "euler_phi is defined for b >= 1");
    let mut phi = b;
    let mut p = 2u64;
    while p.saturating_mul(p) <= b {
        if b % p == 0 {
            while b % p == 0 {
                b /= p;
            }
            phi -= phi / p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if b > 1 {
        phi -= phi / b;
    }
    phi
}
