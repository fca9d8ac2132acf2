use std::collections::BTreeSet;

use primorial::poly::{
    enumerate_prime_values, fixed_divisor, parse_poly, EnumerationConfig, IntPoly,
};
use primorial::primes::PrimeTable;
use proptest::prelude::*;

fn enumerate(f: &IntPoly, bound: u64, table: &PrimeTable) -> Vec<u64> {
    enumerate_prime_values(f, bound, table, &EnumerationConfig::default())
        .unwrap()
        .values
}

#[test]
fn linear_families_match_congruence_filter() {
    let bound = 10_000;
    let table = PrimeTable::new(bound).unwrap();
    for b in 1i64..=30 {
        for a in -30i64..=30 {
            if num_integer::gcd(a.unsigned_abs(), b as u64) != 1 {
                continue;
            }
            let f = IntPoly::linear(a, b).unwrap();
            let expected: Vec<u64> = table
                .primes()
                .iter()
                .copied()
                .filter(|&p| (p as i64 - a).rem_euclid(b) == 0 && p as i64 >= a + b)
                .collect();
            assert_eq!(enumerate(&f, bound, &table), expected, "a = {a}, b = {b}");
        }
    }
}

#[test]
fn fixed_divisor_caps_prime_values() {
    let table = PrimeTable::new(50_000).unwrap();
    for text in ["4*x+2", "x^2+x+2", "6*x+3", "x^2+x"] {
        let f = parse_poly(text).unwrap();
        let d = fixed_divisor(&f);
        assert!(d > 1u32.into());
        for bound in [10, 1_000, 50_000] {
            let values = enumerate(&f, bound, &table);
            assert!(values.len() <= 1, "{text}");
            if let Some(&v) = values.first() {
                assert_eq!(d, v.into());
            }
        }
    }
}

#[test]
fn symmetric_values_are_listed_once() {
    let table = PrimeTable::new(10_000).unwrap();
    let f = parse_poly("x^2+y^2+1").unwrap();
    let values = enumerate(&f, 10_000, &table);
    let unique: BTreeSet<u64> = values.iter().copied().collect();
    assert_eq!(unique.len(), values.len());
    assert!(values.contains(&11));
    assert_eq!(f.eval(&[1, 3]).unwrap(), f.eval(&[3, 1]).unwrap());
}

fn poly_strategy() -> impl Strategy<Value = IntPoly> {
    let term = (prop::collection::vec(0u32..4, 2), 1i64..20);
    (prop::collection::vec(term, 1..5), -20i64..20).prop_filter_map(
        "needs a non-constant term",
        |(terms, c)| {
            let mut map = std::collections::BTreeMap::new();
            for (e, coeff) in terms {
                if e.iter().any(|&x| x > 0) {
                    *map.entry(e).or_insert(0) += coeff;
                }
            }
            if map.is_empty() {
                return None;
            }
            map.insert(vec![0, 0], c);
            IntPoly::new(2, map).ok()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(f in poly_strategy()) {
        let text = f.to_string();
        let again = parse_poly(&text).unwrap();
        prop_assert_eq!(again.to_string(), text.clone());
        if again.arity() == f.arity() {
            prop_assert_eq!(&again, &f);
        }
    }

    #[test]
    fn larger_bound_extends_the_prefix(f in poly_strategy(), b in 10u64..3_000, extra in 1u64..3_000) {
        let table = PrimeTable::new(6_000).unwrap();
        let small = enumerate(&f, b, &table);
        let large = enumerate(&f, b + extra, &table);
        let prefix: Vec<u64> = large.iter().copied().take_while(|&v| v <= b).collect();
        prop_assert_eq!(small, prefix);
    }

    #[test]
    fn enumeration_matches_full_box(f in poly_strategy(), b in 10u64..2_000) {
        let table = PrimeTable::new(2_000).unwrap();
        let active = f.active_variables();
        // per-axis extent: largest t with f(.., t, ..) <= b at the other coordinates = 1
        let extent = |axis: usize| -> u64 {
            if !active.contains(&axis) {
                return 1;
            }
            let mut t = 1;
            loop {
                let mut point = vec![1, 1];
                point[axis] = t + 1;
                if f.eval(&point).unwrap() > b.into() {
                    return t;
                }
                t += 1;
            }
        };
        let (nx, ny) = (extent(0), extent(1));
        let mut expected = BTreeSet::new();
        for x in 1..=nx {
            for y in 1..=ny {
                if let Ok(v) = u64::try_from(f.eval(&[x, y]).unwrap()) {
                    if v <= b && table.contains(v) {
                        expected.insert(v);
                    }
                }
            }
        }
        prop_assert_eq!(enumerate(&f, b, &table), expected.into_iter().collect::<Vec<_>>());
    }
}
