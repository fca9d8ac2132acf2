//! Screening of the classical hypotheses for a polynomial to take infinitely
//! many prime values: positive leading coefficient, trivial fixed divisor,
//! irreducibility.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::bigmath::decimal;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Irreducibility {
    Irreducible,
    Reducible,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub positive_leading: bool,
    #[serde(with = "decimal")]
    pub fixed_divisor: BigUint,
    pub irreducibility: Irreducibility,
    pub admissible: bool,
}

/// Largest |coefficient| for which the cubic rational-root search factors by
/// trial division.
const RATIONAL_ROOT_LIMIT: u64 = 1_000_000_000_000;

/// The gcd of all values over `N^k`.
///
/// A polynomial of total degree `D` is an integer combination of binomial
/// products `C(x_1 - 1, i_1) ... C(x_k - 1, i_k)` with `sum i <= D`, and the
/// coefficients of that expansion are integer combinations of the values on
/// the box `{1, ..., D+1}^k`; so the gcd over that box is the gcd everywhere.
pub fn fixed_divisor(poly: &IntPoly) -> BigUint {
    let side = poly.total_degree() as u64 + 1;
    let active = poly.active_variables();
    let mut point = vec![1u64; poly.arity()];
    let mut g = BigInt::zero();
    loop {
        let v = poly
            .eval(&point)
            .expect("box points are positive and of full arity");
        g = g.gcd(&v);
        // odometer over the active coordinates
        let mut advanced = false;
        for &j in &active {
            if point[j] < side {
                point[j] += 1;
                advanced = true;
                break;
            }
            point[j] = 1;
        }
        if !advanced {
            break;
        }
    }
    g.magnitude().clone()
}

/// Univariate screening; polynomials of arity 2 or more are rejected.
pub fn check_hypotheses(poly: &IntPoly) -> Result<HypothesisReport> {
    if poly.arity() != 1 {
        return Err(Error::precondition(format!(
            "hypothesis screening is univariate, got arity {}",
            poly.arity()
        )));
    }
    let degree = poly.total_degree() as usize;
    let mut coeffs = vec![0i64; degree + 1];
    for (exps, &c) in poly.terms() {
        coeffs[exps[0] as usize] = c;
    }
    let positive_leading = coeffs[degree] > 0;
    let fixed_divisor = fixed_divisor(poly);
    let irreducibility = match degree {
        1 => Irreducibility::Irreducible,
        2 => quadratic(&coeffs),
        3 => cubic(&coeffs),
        _ => Irreducibility::Unknown,
    };
    let admissible =
        positive_leading && fixed_divisor.is_one() && irreducibility != Irreducibility::Reducible;
    Ok(HypothesisReport {
        positive_leading,
        fixed_divisor,
        irreducibility,
        admissible,
    })
}

/// Reducible over Q iff the discriminant is a perfect square.
fn quadratic(c: &[i64]) -> Irreducibility {
    let (a, b, c0) = (c[2] as i128, c[1] as i128, c[0] as i128);
    let disc = b * b - 4 * a * c0;
    if disc < 0 {
        return Irreducibility::Irreducible;
    }
    let r = BigInt::from(disc).sqrt();
    if &r * &r == BigInt::from(disc) {
        Irreducibility::Reducible
    } else {
        Irreducibility::Irreducible
    }
}

/// Reducible over Q iff there is a rational root `p/q` with `p | c0`, `q | c3`.
fn cubic(c: &[i64]) -> Irreducibility {
    if c[0] == 0 {
        return Irreducibility::Reducible;
    }
    let (a0, a3) = (c[0].unsigned_abs(), c[3].unsigned_abs());
    if a0 > RATIONAL_ROOT_LIMIT || a3 > RATIONAL_ROOT_LIMIT {
        return Irreducibility::Unknown;
    }
    for p in divisors(a0) {
        for q in divisors(a3) {
            if p.gcd(&q) != 1 {
                continue;
            }
            for sign in [1i64, -1] {
                // q^3 f(p/q) = sum c_i p^i q^(3-i)
                let p = BigInt::from(p) * sign;
                let q = BigInt::from(q);
                let mut acc = BigInt::zero();
                for (i, &ci) in c.iter().enumerate() {
                    acc += BigInt::from(ci)
                        * num_traits::pow(p.clone(), i)
                        * num_traits::pow(q.clone(), 3 - i);
                }
                if acc.is_zero() {
                    return Irreducibility::Reducible;
                }
            }
        }
    }
    Irreducibility::Irreducible
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}
