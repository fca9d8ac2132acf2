//! Integer polynomials over positive-integer arguments.

mod enumerate;
mod hypotheses;
mod parse;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub(crate) use enumerate::scan_prime_points;
pub use enumerate::{
    enumerate_prime_values, EnumerationConfig, PrimeValueSequence, DEFAULT_POINT_BUDGET,
};
pub use hypotheses::{check_hypotheses, fixed_divisor, HypothesisReport, Irreducibility};
pub use parse::parse_poly;

/// Largest number of variables the grammar can name (`x1` … `x9`).
pub const MAX_ARITY: usize = 9;

/// Exponent vector of a monomial, one entry per variable.
pub type Exponents = Vec<u32>;

/// A polynomial with integer coefficients, read as a map from `N^k` to `Z`.
///
/// Every non-constant coefficient is positive; only the constant term may be
/// negative. This makes the polynomial strictly increasing in each variable
/// it mentions, which is what makes prime-value enumeration exhaustive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    arity: usize,
    terms: BTreeMap<Exponents, i64>,
}

impl IntPoly {
    /// Builds a polynomial from distinct exponent vectors; zero coefficients
    /// are dropped.
    pub fn new(arity: usize, terms: impl IntoIterator<Item = (Exponents, i64)>) -> Result<Self> {
        if arity == 0 || arity > MAX_ARITY {
            return Err(Error::precondition(format!(
                "arity must be between 1 and {MAX_ARITY}, got {arity}"
            )));
        }
        let mut map = BTreeMap::new();
        for (exps, coeff) in terms {
            if exps.len() != arity {
                return Err(Error::ArityMismatch {
                    expected: arity,
                    found: exps.len(),
                });
            }
            if coeff != 0 {
                map.insert(exps, coeff);
            }
        }
        let poly = Self { arity, terms: map };
        poly.validate()?;
        Ok(poly)
    }

    /// `a + b*x` in one variable.
    pub fn linear(a: i64, b: i64) -> Result<Self> {
        Self::new(1, [(vec![0], a), (vec![1], b)])
    }

    fn validate(&self) -> Result<()> {
        let mut non_constant = false;
        for (exps, &coeff) in &self.terms {
            if exps.iter().all(|&e| e == 0) {
                continue;
            }
            non_constant = true;
            if coeff <= 0 {
                return Err(Error::Enumerability {
                    term: format_term(self.arity, exps, coeff, true),
                });
            }
        }
        if !non_constant {
            return Err(Error::ConstantPolynomial);
        }
        Ok(())
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn terms(&self) -> &BTreeMap<Exponents, i64> {
        &self.terms
    }

    pub fn constant(&self) -> i64 {
        self.terms.get(&vec![0; self.arity]).copied().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    /// Variables that occur with a positive exponent.
    pub fn active_variables(&self) -> Vec<usize> {
        (0..self.arity)
            .filter(|&j| self.terms.keys().any(|e| e[j] > 0))
            .collect()
    }

    /// Exact value at a point of positive integers.
    pub fn eval(&self, point: &[u64]) -> Result<BigInt> {
        self.check_point(point)?;
        let mut acc = BigInt::zero();
        for (exps, &coeff) in &self.terms {
            let mut term = BigInt::from(coeff);
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term *= num_traits::pow(BigInt::from(x), e as usize);
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Fast evaluation; `None` on `i128` overflow. The point is not validated.
    pub(crate) fn eval_i128(&self, point: &[u64]) -> Option<i128> {
        let mut acc: i128 = 0;
        for (exps, &coeff) in &self.terms {
            let mut term = coeff as i128;
            for (&x, &e) in point.iter().zip(exps) {
                if e > 0 {
                    term = term.checked_mul((x as i128).checked_pow(e)?)?;
                }
            }
            acc = acc.checked_add(term)?;
        }
        Some(acc)
    }

    fn check_point(&self, point: &[u64]) -> Result<()> {
        if point.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: point.len(),
            });
        }
        if point.contains(&0) {
            return Err(Error::NonPositivePoint);
        }
        Ok(())
    }

    /// Terms in graded-lexicographic order: higher total degree first, then
    /// larger exponent vectors first.
    fn graded_terms(&self) -> Vec<(&Exponents, i64)> {
        let mut terms: Vec<_> = self.terms.iter().map(|(e, &c)| (e, c)).collect();
        terms.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        terms
    }
}

pub(crate) fn variable_name(arity: usize, index: usize) -> String {
    if arity <= 3 {
        ["x", "y", "z"][index].to_string()
    } else {
        format!("x{}", index + 1)
    }
}

fn format_term(arity: usize, exps: &[u32], coeff: i64, leading: bool) -> String {
    let mut factors = Vec::new();
    for (j, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => factors.push(variable_name(arity, j)),
            _ => factors.push(format!("{}^{}", variable_name(arity, j), e)),
        }
    }
    let magnitude = coeff.unsigned_abs();
    let body = if factors.is_empty() {
        magnitude.to_string()
    } else if magnitude == 1 {
        factors.join("*")
    } else {
        format!("{magnitude}*{}", factors.join("*"))
    };
    match (coeff < 0, leading) {
        (true, _) => format!("-{body}"),
        (false, true) => body,
        (false, false) => format!("+{body}"),
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (exps, coeff)) in self.graded_terms().into_iter().enumerate() {
            f.write_str(&format_term(self.arity, exps, coeff, i == 0))?;
        }
        Ok(())
    }
}

impl std::str::FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_poly(s)
    }
}

impl Serialize for IntPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for IntPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        parse_poly(&text).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_is_graded_lex() {
        assert_eq!(parse_poly("1+6*x").unwrap().to_string(), "6*x+1");
        assert_eq!(
            parse_poly("1 + y^2 + x^2").unwrap().to_string(),
            "x^2+y^2+1"
        );
        assert_eq!(parse_poly("2*y^3+x^3").unwrap().to_string(), "x^3+2*y^3");
        assert_eq!(parse_poly("3*x-1").unwrap().to_string(), "3*x-1");
        assert_eq!(
            parse_poly("x*y+x^2+y+4").unwrap().to_string(),
            "x^2+x*y+y+4"
        );
    }

    #[test]
    fn evaluation() {
        let f = parse_poly("3*x-1").unwrap();
        assert_eq!(f.eval(&[1]).unwrap(), BigInt::from(2));
        let g = parse_poly("x^2+y^2+1").unwrap();
        assert_eq!(g.eval(&[1, 1]).unwrap(), BigInt::from(3));
        let h = parse_poly("x^3+2*y^3").unwrap();
        assert_eq!(h.eval(&[3, 2]).unwrap(), BigInt::from(43));
        assert!(matches!(
            h.eval(&[3]),
            Err(Error::ArityMismatch {
                expected: 2,
                found: 1
            })
        ));
        assert!(matches!(h.eval(&[0, 1]), Err(Error::NonPositivePoint)));
    }

    #[test]
    fn big_evaluation_matches_fast_path() {
        let f = parse_poly("x^7+3*x*y^5+y+11").unwrap();
        for x in 1..30u64 {
            for y in 1..30u64 {
                let fast = f.eval_i128(&[x, y]).unwrap();
                assert_eq!(BigInt::from(fast), f.eval(&[x, y]).unwrap());
            }
        }
        let g = parse_poly("x^40").unwrap();
        assert_eq!(g.eval_i128(&[u32::MAX as u64]), None);
        assert!(g.eval(&[u32::MAX as u64]).is_ok());
    }

    #[test]
    fn construction_rules() {
        assert!(matches!(
            IntPoly::new(1, [(vec![0], 5)]),
            Err(Error::ConstantPolynomial)
        ));
        assert!(matches!(
            IntPoly::linear(1, -2),
            Err(Error::Enumerability { .. })
        ));
        assert!(IntPoly::linear(-29, 30).is_ok());
        assert_eq!(IntPoly::linear(1, 6).unwrap(), parse_poly("6*x+1").unwrap());
    }

    #[test]
    fn serde_uses_canonical_text() {
        let f = parse_poly("x^2 + y^4").unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"y^4+x^2\"");
        assert_eq!(serde_json::from_str::<IntPoly>(&json).unwrap(), f);
    }
}
