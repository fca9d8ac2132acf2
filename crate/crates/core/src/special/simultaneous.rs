use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{scan_prime_points, EnumerationConfig, IntPoly};
use crate::primes::PrimeTable;

/// How value vectors are ranked when the system has several polynomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    /// Euclidean order, compared through the exact sum of squares.
    #[default]
    SumOfSquares,
    Max,
}

/// A point at which every polynomial of a system takes a prime value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimultaneousPrimePoint {
    pub point: Vec<u64>,
    pub values: Vec<u64>,
    /// Sum of the squared values.
    #[serde(with = "u128_decimal")]
    pub norm_sq: u128,
}

impl SimultaneousPrimePoint {
    pub fn new(point: Vec<u64>, values: Vec<u64>) -> Self {
        let norm_sq = values.iter().map(|&v| v as u128 * v as u128).sum();
        Self {
            point,
            values,
            norm_sq,
        }
    }

    fn norm_key(&self, norm: NormKind) -> u128 {
        match norm {
            NormKind::SumOfSquares => self.norm_sq,
            NormKind::Max => self.values.iter().copied().max().unwrap_or(0) as u128,
        }
    }

    /// Norm first, then the value vector, then the point, all ascending.
    pub fn rank(&self, other: &Self, norm: NormKind) -> Ordering {
        self.norm_key(norm)
            .cmp(&other.norm_key(norm))
            .then_with(|| self.values.cmp(&other.values))
            .then_with(|| self.point.cmp(&other.point))
    }
}

/// Ranked simultaneous prime points of a system up to a value bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimultaneousScan {
    pub system: Vec<IntPoly>,
    pub bound: u64,
    pub norm: NormKind,
    pub points: Vec<SimultaneousPrimePoint>,
    pub exhaustive: bool,
}

/// Every point where all `f_i` are primes `<= bound`, ranked by `norm`.
pub fn enumerate_simultaneous_points(
    system: &[IntPoly],
    bound: u64,
    table: &PrimeTable,
    norm: NormKind,
    config: &EnumerationConfig,
) -> Result<SimultaneousScan> {
    let mut points: Vec<SimultaneousPrimePoint> = scan_prime_points(system, bound, table, config)?
        .into_iter()
        .map(|(point, values)| SimultaneousPrimePoint::new(point, values))
        .collect();
    points.sort_by(|a, b| a.rank(b, norm));
    Ok(SimultaneousScan {
        system: system.to_vec(),
        bound,
        norm,
        points,
        exhaustive: true,
    })
}

mod u128_decimal {
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &u128, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<u128, D::Error> {
        String::deserialize(d)?.parse().map_err(D::Error::custom)
    }
}
