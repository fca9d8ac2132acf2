use std::cmp::Ordering;

use num_bigint::BigUint;
use primorial::inequality::{
    compare_product_power, inequality_rows, max_bonse_exponent, theta_equivalence_check,
    verify_relation, Comparator,
};
use primorial::primes::PrimeTable;
use primorial::report::{Relation, ReportContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn naive(seq: &[BigUint], n: usize, k: u32) -> Ordering {
    let mut prod = BigUint::from(1u8);
    for s in &seq[..n] {
        prod *= s;
    }
    let mut power = BigUint::from(1u8);
    for _ in 0..k {
        power *= &seq[n];
    }
    prod.cmp(&power)
}

fn random_sequence(rng: &mut ChaCha8Rng) -> Vec<BigUint> {
    let len = rng.gen_range(2..40);
    let mut xs: Vec<u64> = (0..len)
        .map(|_| rng.gen_range(2..u32::MAX as u64))
        .collect();
    xs.sort_unstable();
    xs.dedup();
    xs.into_iter().map(BigUint::from).collect()
}

#[test]
fn agrees_with_naive_multiplication() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut checked = 0;
    while checked < 1000 {
        let seq = random_sequence(&mut rng);
        if seq.len() < 2 {
            continue;
        }
        let n = rng.gen_range(1..seq.len());
        let k = rng.gen_range(1..12);
        assert_eq!(
            compare_product_power(&seq, n, k).unwrap(),
            naive(&seq, n, k)
        );
        checked += 1;
    }
}

#[test]
fn near_ties_are_resolved_exactly() {
    // products equal to, one above and one below the power
    for (seq, expected) in [
        (vec![4u64, 4, 16], Ordering::Equal),
        (vec![3, 5, 15], Ordering::Equal),
        (vec![2, 3, 5, 7, 11, 13, 30029], Ordering::Greater),
        (vec![2, 3, 5, 7, 11, 13, 30031], Ordering::Less),
    ] {
        let big: Vec<BigUint> = seq.iter().map(|&x| x.into()).collect();
        let n = big.len() - 1;
        assert_eq!(
            compare_product_power(&big, n, 1).unwrap(),
            expected,
            "{seq:?}"
        );
    }
}

#[test]
fn forcing_exact_path_changes_nothing() {
    let table = PrimeTable::new(200_000).unwrap();
    let primes: Vec<BigUint> = table.primes()[..3000].iter().map(|&p| p.into()).collect();
    for k in 1..=3 {
        let ctx = ReportContext::new("primes");
        let fast = verify_relation(
            &primes,
            1,
            k,
            Relation::ProductGreater,
            &ctx,
            &Comparator::default(),
        )
        .unwrap();
        let exact = verify_relation(
            &primes,
            1,
            k,
            Relation::ProductGreater,
            &ctx,
            &Comparator::exact(),
        )
        .unwrap();
        assert_eq!(fast, exact);
        let a = inequality_rows(&primes, 1, k, &Comparator::default()).unwrap();
        let b = inequality_rows(&primes, 1, k, &Comparator::exact()).unwrap();
        assert!(a.iter().zip(&b).all(|(x, y)| x.ordering == y.ordering));
    }
}

#[test]
fn bonse_exponent_matches_brute_force() {
    let table = PrimeTable::new(10_000).unwrap();
    let primes: Vec<BigUint> = table.primes().iter().map(|&p| p.into()).collect();
    for n in 1..200 {
        let prod: BigUint = primes[..n].iter().product();
        let mut k = 0u32;
        while prod > primes[n].pow(k + 1) {
            k += 1;
        }
        assert_eq!(max_bonse_exponent(&primes, n).unwrap(), k, "n = {n}");
    }
}

#[test]
fn theta_agreement_up_to_ten_thousand() {
    let table = PrimeTable::new(110_000).unwrap();
    assert!(table.count() > 10_001);
    for n in 1..=10_000 {
        assert!(theta_equivalence_check(&table, n).unwrap(), "n = {n}");
    }
}

#[test]
fn reports_are_deterministic() {
    let table = PrimeTable::new(50_000).unwrap();
    let primes: Vec<BigUint> = table.primes().iter().map(|&p| p.into()).collect();
    let ctx = ReportContext::new("primes");
    let a = primorial::verify_inequality(&primes, 1, 2, &ctx).unwrap();
    let b = primorial::verify_inequality(&primes, 1, 2, &ctx).unwrap();
    assert_eq!(a.to_json(), b.to_json());
    let back: primorial::VerificationReport = serde_json::from_str(&a.to_json()).unwrap();
    assert_eq!(back, a);
}
