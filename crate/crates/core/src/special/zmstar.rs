use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::poly::{enumerate_prime_values, EnumerationConfig, IntPoly, PrimeValueSequence};
use crate::primes::PrimeTable;

/// Result of looking for a prime value of a polynomial among the residues
/// `1 <= v <= m` coprime to `m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ZmStarOutcome {
    Found { point: Vec<u64>, value: u64 },
    NotFound,
}

impl ZmStarOutcome {
    pub fn is_found(&self) -> bool {
        matches!(self, ZmStarOutcome::Found { .. })
    }
}

/// Least prime value `<= m` of `poly` that is coprime to `m`.
///
/// The enumeration below `m` is exhaustive, so `NotFound` is definitive.
pub fn check_zm_star(
    poly: &IntPoly,
    m: u64,
    table: &PrimeTable,
    config: &EnumerationConfig,
) -> Result<ZmStarOutcome> {
    if m < 2 {
        return Ok(ZmStarOutcome::NotFound);
    }
    let seq = enumerate_prime_values(poly, m, table, config)?;
    Ok(check_zm_star_in(&seq, m))
}

/// Same search over an already enumerated sequence whose bound is at least `m`.
pub fn check_zm_star_in(seq: &PrimeValueSequence, m: u64) -> ZmStarOutcome {
    debug_assert!(seq.bound >= m || m < 2);
    seq.values
        .iter()
        .zip(&seq.witness_points)
        .take_while(|(&v, _)| v <= m)
        .find(|(&v, _)| num_integer::gcd(v, m) == 1)
        .map_or(ZmStarOutcome::NotFound, |(&value, point)| {
            ZmStarOutcome::Found {
                point: point.clone(),
                value,
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn run(text: &str, m: u64) -> ZmStarOutcome {
        let table = PrimeTable::new(m.max(2)).unwrap();
        check_zm_star(&parse_poly(text).unwrap(), m, &table, &Default::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(
            run("6*x+1", 10),
            ZmStarOutcome::Found {
                point: vec![1],
                value: 7
            }
        );
        assert_eq!(run("6*x+1", 7), ZmStarOutcome::NotFound);
        assert_eq!(run("x", 2), ZmStarOutcome::NotFound);
        assert_eq!(run("x", 1), ZmStarOutcome::NotFound);
        assert_eq!(
            run("x", 6),
            ZmStarOutcome::Found {
                point: vec![5],
                value: 5
            }
        );
    }

    #[test]
    fn serializes_with_tag() {
        let json = serde_json::to_string(&run("6*x+1", 7)).unwrap();
        assert_eq!(json, r#"{"outcome":"not_found"}"#);
    }
}
