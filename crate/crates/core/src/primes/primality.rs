//! Miller–Rabin primality testing.
//!
//! Below 2^64 the test is deterministic: the first twelve primes as witnesses
//! are known to have no strong pseudoprime below 3.3 * 10^24. Above 2^64 the
//! same strong test runs with [`PROBABLE_PRIME_ROUNDS`] fixed prime bases, so
//! results are reproducible but only probabilistic.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

const DETERMINISTIC_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Number of strong-probable-prime rounds applied above 2^64.
pub const PROBABLE_PRIME_ROUNDS: usize = 24;

const PROBABLE_PRIME_BASES: [u32; PROBABLE_PRIME_ROUNDS] = [
    2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Primality {
    Composite,
    /// Proven prime (deterministic witness set).
    Prime,
    /// Passed every probable-prime round; not proven.
    ProbablePrime,
}

impl Primality {
    pub fn is_prime(self) -> bool {
        !matches!(self, Primality::Composite)
    }

    pub fn is_probabilistic(self) -> bool {
        matches!(self, Primality::ProbablePrime)
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic primality test for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_WITNESSES {
        if n % p == 0 {
            return n == p;
        }
    }
    let d_shift = (n - 1).trailing_zeros();
    let d = (n - 1) >> d_shift;
    'witness: for &a in &DETERMINISTIC_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..d_shift {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality of an arbitrary-precision integer.
pub fn is_prime_big(n: &BigUint) -> Primality {
    if let Some(small) = n.to_u64() {
        return if is_prime(small) {
            Primality::Prime
        } else {
            Primality::Composite
        };
    }
    for p in (3u32..1000).step_by(2).chain(std::iter::once(2)) {
        if (n % p).is_zero() {
            return Primality::Composite;
        }
    }
    let one = BigUint::one();
    let n_minus_one = n - &one;
    let shift = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> shift;
    'base: for &a in &PROBABLE_PRIME_BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n_minus_one {
            continue;
        }
        for _ in 1..shift {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'base;
            }
        }
        return Primality::Composite;
    }
    if n.is_even() {
        return Primality::Composite;
    }
    Primality::ProbablePrime
}
