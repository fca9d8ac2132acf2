use primorial::primes::{euler_phi, is_prime, PrimeTable, SieveConfig};
use proptest::prelude::*;

fn trial_division_count(limit: u64) -> usize {
    (2..=limit)
        .filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
        .count()
}

/// Byte-per-integer sieve, written independently of the library's segmented one.
fn plain_sieve(limit: usize) -> Vec<u64> {
    let mut flags = vec![true; limit + 1];
    flags[0] = false;
    flags[1] = false;
    let mut i = 2;
    while i * i <= limit {
        if flags[i] {
            (i * i..=limit).step_by(i).for_each(|j| flags[j] = false);
        }
        i += 1;
    }
    flags
        .iter()
        .enumerate()
        .filter(|(_, &f)| f)
        .map(|(i, _)| i as u64)
        .collect()
}

#[test]
fn counts_match_independent_oracles() {
    assert_eq!(trial_division_count(100_000), 9592);
    assert_eq!(PrimeTable::new(100_000).unwrap().count(), 9592);
    let table = PrimeTable::new(1_000_000).unwrap();
    assert_eq!(table.primes(), plain_sieve(1_000_000).as_slice());
    assert_eq!(table.count(), 78498);
}

#[test]
fn threaded_table_matches() {
    let cfg = SieveConfig {
        threads: 4,
        ..Default::default()
    };
    assert_eq!(
        PrimeTable::with_config(2_000_000, &cfg).unwrap(),
        PrimeTable::new(2_000_000).unwrap()
    );
}

#[test]
fn table_invariants() {
    let limit = 100_000u64;
    let table = PrimeTable::new(limit).unwrap();
    assert!(table.primes().windows(2).all(|w| w[0] < w[1]));
    assert_eq!(table.primes()[0], 2);
    // composites have a prime factor <= sqrt(limit) in the table
    let small: Vec<u64> = table
        .primes()
        .iter()
        .copied()
        .take_while(|p| p * p <= limit)
        .collect();
    for n in 2..=limit {
        if !table.contains(n) {
            assert!(small.iter().any(|p| n % p == 0), "n = {n}");
        }
    }
    // pi steps and primality agree everywhere
    let mut prev = 0;
    for x in 2..=limit {
        let pi = table.pi(x).unwrap();
        assert!(pi - prev <= 1);
        assert_eq!(pi - prev == 1, is_prime(x), "x = {x}");
        assert_eq!(is_prime(x), table.contains(x));
        prev = pi;
    }
    for &p in table.primes() {
        assert_eq!(table.nth_prime(table.pi(p).unwrap()).unwrap(), p);
    }
}

#[test]
fn theta_asymptotics() {
    let table = PrimeTable::new(1_000_000).unwrap();
    let theta = table.theta(1_000_000).unwrap().value;
    assert!((0.95..=1.05).contains(&(theta / 1e6)));
    let ap = table.theta_ap(1_000_000, 4, 1).unwrap().value;
    assert!((0.9..=1.1).contains(&(ap / (1e6 / euler_phi(4) as f64))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn theta_is_monotone(x in 1u64..20_000, dx in 0u64..5_000) {
        let table = PrimeTable::new(25_000).unwrap();
        prop_assert!(table.theta(x).unwrap().value <= table.theta(x + dx).unwrap().value);
    }

    #[test]
    fn theta_partitions_over_residues(x in 2u64..20_000, b in 1u64..40) {
        let table = PrimeTable::new(20_000).unwrap();
        let mut total: f64 = (0..b)
            .filter(|&a| num_integer::gcd(a, b) == 1)
            .map(|a| table.theta_ap(x, b, a as i64).unwrap().value)
            .sum();
        total += table
            .primes()
            .iter()
            .take_while(|&&p| p <= x)
            .filter(|&&p| b % p == 0)
            .map(|&p| (p as f64).ln())
            .sum::<f64>();
        let theta = table.theta(x).unwrap().value;
        prop_assert!((total - theta).abs() < 1e-9 * theta.max(1.0));
    }
}
