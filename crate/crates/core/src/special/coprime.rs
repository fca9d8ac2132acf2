//! Pairwise-coprime sets: the largest one inside `{2, ..., n}`, and the
//! termwise comparison of a coprime sequence with the primes.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::primes::PrimeTable;

/// Largest `n` accepted by the exhaustive subset search.
pub const MAX_SUBSET_N: u64 = 60;

/// Exact size of the largest pairwise-coprime subset of `{2, ..., n}`.
pub fn max_coprime_subset_size(n: u64) -> Result<usize> {
    Ok(max_coprime_subset(n)?.len())
}

/// One largest pairwise-coprime subset of `{2, ..., n}`, ascending.
///
/// Two elements are coprime iff their prime supports are disjoint, and
/// elements with the same support are interchangeable, so the search runs over
/// support classes. Each chosen element is charged to its smallest prime; at
/// prime `p` the search either picks a class whose smallest prime is `p` or
/// leaves `p` unused. Since every element consumes at least one prime, a
/// branch is cut once its size plus the free primes cannot beat the best.
pub fn max_coprime_subset(n: u64) -> Result<Vec<u64>> {
    if !(2..=MAX_SUBSET_N).contains(&n) {
        return Err(Error::OutOfRange {
            what: "subset search n",
            value: n,
            max: MAX_SUBSET_N,
        });
    }
    let primes: Vec<u64> = (2..=n).filter(|&m| crate::primes::is_prime(m)).collect();
    // smallest representative per support mask, grouped by smallest prime index
    let mut classes: Vec<Vec<(u64, u64)>> = vec![Vec::new(); primes.len()];
    for m in 2..=n {
        let mask = primes
            .iter()
            .enumerate()
            .filter(|(_, &p)| m % p == 0)
            .fold(0u64, |acc, (i, _)| acc | 1 << i);
        let lowest = mask.trailing_zeros() as usize;
        if !classes[lowest].iter().any(|&(mk, _)| mk == mask) {
            classes[lowest].push((mask, m));
        }
    }
    let mut search = Search {
        classes: &classes,
        best: Vec::new(),
        current: Vec::new(),
    };
    search.run(0, 0);
    let mut best = search.best;
    best.sort_unstable();
    Ok(best)
}

struct Search<'a> {
    classes: &'a [Vec<(u64, u64)>],
    best: Vec<u64>,
    current: Vec<u64>,
}

impl Search<'_> {
    fn run(&mut self, index: usize, used: u64) {
        let total = self.classes.len();
        if index == total {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let free = (index..total).filter(|&i| used >> i & 1 == 0).count();
        if self.current.len() + free <= self.best.len() {
            return;
        }
        if used >> index & 1 == 1 {
            self.run(index + 1, used);
            return;
        }
        for &(mask, rep) in &self.classes[index] {
            if mask & used == 0 {
                self.current.push(rep);
                self.run(index + 1, used | mask);
                self.current.pop();
            }
        }
        self.run(index + 1, used);
    }
}

/// Outcome of comparing a sequence termwise with the primes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub holds: bool,
    /// 1-based index of the first `i` with `p_i > a_i`.
    pub first_failure: Option<usize>,
}

/// Checks `p_i <= a_i` for a strictly increasing, pairwise-coprime sequence of
/// integers above 1. Inputs that are not pairwise coprime are rejected with
/// the offending pair.
pub fn check_prime_domination(seq: &[BigUint], table: &PrimeTable) -> Result<OrderCheck> {
    for (i, a) in seq.iter().enumerate() {
        if *a <= BigUint::one() || (i > 0 && *a <= seq[i - 1]) {
            return Err(Error::NotAscending { index: i + 1 });
        }
    }
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if !seq[i].gcd(&seq[j]).is_one() {
                return Err(Error::NotPairwiseCoprime {
                    first: i + 1,
                    second: j + 1,
                    a: seq[i].clone(),
                    b: seq[j].clone(),
                });
            }
        }
    }
    if seq.len() > table.count() {
        return Err(Error::OutOfRange {
            what: "sequence length (table too small)",
            value: seq.len() as u64,
            max: table.count() as u64,
        });
    }
    let first_failure = seq
        .iter()
        .zip(table.primes())
        .position(|(a, &p)| BigUint::from(p) > *a)
        .map(|i| i + 1);
    Ok(OrderCheck {
        holds: first_failure.is_none(),
        first_failure,
    })
}
