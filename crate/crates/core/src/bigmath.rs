//! Big-integer helpers shared by the inequality engine and the sequence builders.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// Natural logarithm of a big unsigned integer. Returns `-inf` for zero.
pub fn ln_big(n: &BigUint) -> f64 {
    let bits = n.bits();
    if bits <= 64 {
        return (n.to_u64().unwrap_or(0) as f64).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap_or(u64::MAX) as f64;
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Product of a slice by balanced binary splitting.
pub fn product(terms: &[BigUint]) -> BigUint {
    match terms.len() {
        0 => BigUint::one(),
        1 => terms[0].clone(),
        len => {
            let (lo, hi) = terms.split_at(len / 2);
            product(lo) * product(hi)
        }
    }
}

/// Neumaier compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

/// Serde adapters writing big integers as decimal strings.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        BigUint::parse_bytes(text.as_bytes(), 10)
            .ok_or_else(|| D::Error::custom(format!("invalid decimal integer `{text}`")))
    }

    pub mod vec {
        use num_bigint::BigUint;
        use serde::{de::Error as _, ser::SerializeSeq, Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(values: &[BigUint], s: S) -> Result<S::Ok, S::Error> {
            let mut seq = s.serialize_seq(Some(values.len()))?;
            for v in values {
                seq.serialize_element(&v.to_str_radix(10))?;
            }
            seq.end()
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigUint>, D::Error> {
            Vec::<String>::deserialize(d)?
                .into_iter()
                .map(|text| {
                    BigUint::parse_bytes(text.as_bytes(), 10).ok_or_else(|| {
                        D::Error::custom(format!("invalid decimal integer `{text}`"))
                    })
                })
                .collect()
        }
    }
}
