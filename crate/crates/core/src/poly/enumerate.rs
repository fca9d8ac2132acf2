//! Exhaustive enumeration of prime values below a bound.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::thread;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::IntPoly;
use crate::error::{Error, Result};
use crate::primes::PrimeTable;

/// Default cap on evaluated points per scan.
pub const DEFAULT_POINT_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub point_budget: u64,
    pub threads: usize,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        Self {
            point_budget: DEFAULT_POINT_BUDGET,
            threads: 1,
        }
    }
}

/// The distinct prime values `P(f,1) < P(f,2) < ...` of a polynomial up to a bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeValueSequence {
    pub poly: IntPoly,
    pub bound: u64,
    pub values: Vec<u64>,
    /// Lexicographically least point attaining each value.
    pub witness_points: Vec<Vec<u64>>,
    /// Every prime `<= bound` taken by the polynomial on `N^k` is listed.
    pub exhaustive: bool,
}

impl PrimeValueSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn terms_big(&self) -> Vec<BigUint> {
        self.values.iter().map(|&v| BigUint::from(v)).collect()
    }
}

struct Scan<'a> {
    polys: &'a [IntPoly],
    active: Vec<usize>,
    bound: i128,
    table: &'a PrimeTable,
    budget: u64,
    evaluated: &'a AtomicU64,
}

impl Scan<'_> {
    /// Evaluates every polynomial at `point`; `None` once any value passes the bound.
    fn within_bound(&self, point: &[u64]) -> Result<Option<Vec<i128>>> {
        if self.evaluated.fetch_add(1, Ordering::Relaxed) >= self.budget {
            return Err(Error::PointBudget {
                budget: self.budget,
            });
        }
        let mut values = Vec::with_capacity(self.polys.len());
        for f in self.polys {
            match f.eval_i128(point) {
                Some(v) if v <= self.bound => values.push(v),
                _ => return Ok(None),
            }
        }
        Ok(Some(values))
    }

    fn level(
        &self,
        depth: usize,
        point: &mut Vec<u64>,
        first: u64,
        step: u64,
        out: &mut Vec<(Vec<u64>, Vec<u64>)>,
    ) -> Result<()> {
        let axis = self.active[depth];
        let mut x = first;
        loop {
            point[axis] = x;
            for &deeper in &self.active[depth + 1..] {
                point[deeper] = 1;
            }
            // each polynomial is nondecreasing in every coordinate, so the first
            // point past the bound ends this axis for every deeper choice too
            let Some(values) = self.within_bound(point)? else {
                break;
            };
            if depth + 1 == self.active.len() {
                if values
                    .iter()
                    .all(|&v| v >= 2 && self.table.contains(v as u64))
                {
                    out.push((point.clone(), values.iter().map(|&v| v as u64).collect()));
                }
            } else {
                self.level(depth + 1, point, 1, 1, out)?;
            }
            x += step;
        }
        Ok(())
    }
}

/// All points of `N^k` at which every polynomial of the system is a prime
/// `<= bound`, with their values, sorted by point.
///
/// Inactive coordinates (variables no polynomial mentions) are held at 1.
pub(crate) fn scan_prime_points(
    polys: &[IntPoly],
    bound: u64,
    table: &PrimeTable,
    config: &EnumerationConfig,
) -> Result<Vec<(Vec<u64>, Vec<u64>)>> {
    let Some(first) = polys.first() else {
        return Err(Error::precondition("polynomial system is empty"));
    };
    let arity = first.arity();
    if let Some(bad) = polys.iter().find(|f| f.arity() != arity) {
        return Err(Error::ArityMismatch {
            expected: arity,
            found: bad.arity(),
        });
    }
    if bound > table.limit() {
        return Err(Error::OutOfRange {
            what: "enumeration bound",
            value: bound,
            max: table.limit(),
        });
    }
    let mut active: Vec<usize> = polys.iter().flat_map(|f| f.active_variables()).collect();
    active.sort_unstable();
    active.dedup();

    let evaluated = AtomicU64::new(0);
    let scan = Scan {
        polys,
        active,
        bound: bound as i128,
        table,
        budget: config.point_budget,
        evaluated: &evaluated,
    };
    let threads = config.threads.max(1) as u64;
    let mut found = if threads == 1 {
        let mut out = Vec::new();
        scan.level(0, &mut vec![1; arity], 1, 1, &mut out)?;
        out
    } else {
        let parts: Vec<Result<Vec<_>>> = thread::scope(|s| {
            let handles: Vec<_> = (0..threads)
                .map(|t| {
                    let scan = &scan;
                    s.spawn(move || {
                        let mut out = Vec::new();
                        scan.level(0, &mut vec![1; arity], 1 + t, threads, &mut out)?;
                        Ok(out)
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("scan worker panicked"))
                .collect()
        });
        let mut out = Vec::new();
        for part in parts {
            out.extend(part?);
        }
        out
    };
    found.sort_unstable();
    Ok(found)
}

/// Enumerates the distinct prime values `<= bound` of `poly` over `N^k`.
pub fn enumerate_prime_values(
    poly: &IntPoly,
    bound: u64,
    table: &PrimeTable,
    config: &EnumerationConfig,
) -> Result<PrimeValueSequence> {
    let points = scan_prime_points(std::slice::from_ref(poly), bound, table, config)?;
    let mut least: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    // points arrive in lexicographic order, so the first hit per value is the least
    for (point, values) in points {
        least.entry(values[0]).or_insert(point);
    }
    let (values, witness_points) = least.into_iter().unzip();
    Ok(PrimeValueSequence {
        poly: poly.clone(),
        bound,
        values,
        witness_points,
        exhaustive: true,
    })
}
