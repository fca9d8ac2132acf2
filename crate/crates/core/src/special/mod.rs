//! Constructions built on top of prime-value enumeration: products over
//! simultaneous prime points, coprime-residue searches, the reverse
//! inequality sequence, and brute-force checks on pairwise-coprime sets.

mod beta;
mod coprime;
mod hseq;
mod simultaneous;
mod zmstar;

pub use beta::{build_beta, verify_beta_inequality, BetaSequence};
pub use coprime::{
    check_prime_domination, max_coprime_subset, max_coprime_subset_size, OrderCheck, MAX_SUBSET_N,
};
pub use hseq::{
    build_h_sequence, build_literal_h_sequence, verify_reverse_inequality, HSequence,
    ModulusReading,
};
pub use simultaneous::{
    enumerate_simultaneous_points, NormKind, SimultaneousPrimePoint, SimultaneousScan,
};
pub use zmstar::{check_zm_star, check_zm_star_in, ZmStarOutcome};
