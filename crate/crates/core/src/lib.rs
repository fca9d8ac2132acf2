//! Exact verification of primorial-type inequalities.
//!
//! The crate enumerates the distinct prime values `P(f, 1) < P(f, 2) < ...` of
//! integer polynomials over positive-integer arguments and checks
//! `P(f,1) * ... * P(f,n) > P(f,n+1)^k` exactly, together with Bonse-type
//! exponents, greedy pairwise-coprime product sequences of polynomial systems,
//! the reverse-inequality sequence built from `1 mod` previous products, and
//! brute-force checks of the coprime-subset facts behind them.

pub mod bigmath;
pub mod error;
pub mod inequality;
pub mod poly;
pub mod primes;
pub mod report;
pub mod special;

pub use error::{Error, ErrorClass, Result};
pub use inequality::{
    compare_product_power, max_bonse_exponent, theta_equivalence_check, verify_inequality,
    Comparator, InequalityRow, DEFAULT_LOG_MARGIN,
};
pub use poly::{
    check_hypotheses, enumerate_prime_values, fixed_divisor, parse_poly, EnumerationConfig,
    HypothesisReport, IntPoly, Irreducibility, PrimeValueSequence,
};
pub use primes::{euler_phi, is_prime, is_prime_big, PrimeTable, SieveConfig, ThetaValue};
pub use report::{ReportContext, VerificationReport};
