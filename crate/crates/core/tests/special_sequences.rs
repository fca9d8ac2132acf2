use num_bigint::BigUint;
use num_integer::Integer;
use primorial::poly::{enumerate_prime_values, parse_poly, IntPoly};
use primorial::primes::PrimeTable;
use primorial::special::{
    build_beta, build_h_sequence, check_prime_domination, check_zm_star_in,
    enumerate_simultaneous_points, max_coprime_subset_size, NormKind, ZmStarOutcome,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn largest_coprime_subset_is_pi() {
    let table = PrimeTable::new(60).unwrap();
    for n in 2..=60 {
        assert_eq!(
            max_coprime_subset_size(n).unwrap(),
            table.pi(n).unwrap(),
            "n = {n}"
        );
    }
}

/// Ascending sequence built by drawing candidates and keeping those coprime to
/// everything kept so far.
fn random_coprime_sequence(rng: &mut ChaCha8Rng) -> Vec<u64> {
    let mut kept: Vec<u64> = Vec::new();
    let mut acc = BigUint::from(1u8);
    let len = rng.gen_range(1..30);
    let mut tries = 0;
    while kept.len() < len && tries < 500 {
        tries += 1;
        let c = rng.gen_range(2..=1_000_000u64);
        if acc.gcd(&c.into()) == BigUint::from(1u8) {
            acc *= c;
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept
}

#[test]
fn random_coprime_sequences_dominate_primes() {
    let table = PrimeTable::new(1_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..1000 {
        let seq: Vec<BigUint> = random_coprime_sequence(&mut rng)
            .into_iter()
            .map(Into::into)
            .collect();
        assert!(check_prime_domination(&seq, &table).unwrap().holds);
    }
}

#[test]
fn beta_sequences_dominate_primes() {
    let table = PrimeTable::new(20_000).unwrap();
    let systems: [&[&str]; 4] = [
        &["x", "x+2"],
        &["x", "x+4", "x+6"],
        &["x^2+y^2+1"],
        &["6*x+1", "6*x+5"],
    ];
    for texts in systems {
        let system: Vec<IntPoly> = texts.iter().map(|t| parse_poly(t).unwrap()).collect();
        let scan = enumerate_simultaneous_points(
            &system,
            20_000,
            &table,
            NormKind::default(),
            &Default::default(),
        )
        .unwrap();
        let beta = build_beta(&scan);
        let mut sorted = beta.betas.clone();
        sorted.sort();
        assert!(
            check_prime_domination(&sorted, &table).unwrap().holds,
            "{texts:?}"
        );
    }
}

#[test]
fn missing_coprime_value_forces_large_modulus() {
    let bound = 10_000;
    let table = PrimeTable::new(bound).unwrap();
    let f = parse_poly("6*x+1").unwrap();
    let seq = enumerate_prime_values(&f, bound, &table, &Default::default()).unwrap();
    let first = seq.values[0];
    let mut misses = 0;
    for m in first..=bound {
        if check_zm_star_in(&seq, m) == ZmStarOutcome::NotFound {
            misses += 1;
            // every value <= m divides m, so m is at least their product
            let product: BigUint = seq
                .values
                .iter()
                .take_while(|&&v| v <= m)
                .filter(|&&v| m.gcd(&v) > 1)
                .map(|&v| BigUint::from(v))
                .product();
            assert!(BigUint::from(m) >= product, "m = {m}");
        }
    }
    assert!(misses > 0);
}

#[test]
fn h_terms_more_than_double_the_product() {
    let h = build_h_sequence(8, 1_000_000).unwrap();
    for n in 1..h.terms.len() {
        let prod = h.prefix_product(n);
        assert!(h.terms[n] > prod);
        assert!(prod >= BigUint::from(2u8).pow(n as u32));
    }
}
