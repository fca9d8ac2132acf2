//! Segmented odd-only sieve of Eratosthenes.

use std::thread;

/// Odd numbers covered per segment (one byte each).
const SEGMENT_ODDS: u64 = 1 << 18;

/// Plain sieve for the base primes up to `limit`.
pub(crate) fn simple_primes(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

pub(crate) fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while (r as u128) * (r as u128) > n as u128 {
        r -= 1;
    }
    while ((r + 1) as u128) * ((r + 1) as u128) <= n as u128 {
        r += 1;
    }
    r
}

/// Sieves the odd numbers in `[lo, hi]` (both odd, `lo >= 3`) and appends the primes.
fn sieve_span(lo: u64, hi: u64, base: &[u64], out: &mut Vec<u64>) {
    let mut seg = vec![true; SEGMENT_ODDS as usize];
    let mut start = lo;
    while start <= hi {
        let end = (start + 2 * (SEGMENT_ODDS - 1)).min(hi);
        let len = ((end - start) / 2 + 1) as usize;
        seg[..len].iter_mut().for_each(|b| *b = true);
        for &p in base.iter().skip(1) {
            let sq = p * p;
            if sq > end {
                break;
            }
            // first odd multiple of p that is >= max(start, p^2)
            let mut m = if sq >= start {
                sq
            } else {
                let r = start.div_ceil(p) * p;
                if r % 2 == 0 {
                    r + p
                } else {
                    r
                }
            };
            while m <= end {
                seg[((m - start) / 2) as usize] = false;
                m += 2 * p;
            }
        }
        out.extend(
            seg[..len]
                .iter()
                .enumerate()
                .filter(|(_, &b)| b)
                .map(|(i, _)| start + 2 * i as u64),
        );
        start = end + 2;
    }
}

/// All primes `<= limit`, in ascending order.
///
/// With `threads > 1` the odd range is split into contiguous spans sieved
/// concurrently; spans are concatenated in order so the output does not
/// depend on scheduling.
pub(crate) fn primes_up_to(limit: u64, threads: usize) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let base = simple_primes(isqrt(limit));
    let mut primes = vec![2];
    if limit < 3 {
        return primes;
    }
    let hi = if limit % 2 == 0 { limit - 1 } else { limit };
    let odd_count = (hi - 3) / 2 + 1;
    let threads = threads.max(1) as u64;
    if threads == 1 || odd_count < 4 * SEGMENT_ODDS {
        sieve_span(3, hi, &base, &mut primes);
        return primes;
    }
    let per = odd_count.div_ceil(threads);
    let spans: Vec<(u64, u64)> = (0..threads)
        .map(|t| {
            let first = t * per;
            let last = ((t + 1) * per).min(odd_count) - 1;
            (3 + 2 * first, 3 + 2 * last)
        })
        .filter(|&(lo, hi)| lo <= hi)
        .collect();
    let parts: Vec<Vec<u64>> = thread::scope(|s| {
        let handles: Vec<_> = spans
            .iter()
            .map(|&(lo, hi)| {
                let base = &base;
                s.spawn(move || {
                    let mut v = Vec::new();
                    sieve_span(lo, hi, base, &mut v);
                    v
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sieve worker panicked"))
            .collect()
    });
    for part in parts {
        primes.extend(part);
    }
    primes
}

/// Upper bound on the bytes needed to hold the primes up to `limit`
/// plus per-thread segment buffers.
pub(crate) fn estimated_bytes(limit: u64, threads: usize) -> u64 {
    let x = limit.max(17) as f64;
    // pi(x) < 1.25506 x / ln x for x > 1
    let count = 1.25506 * x / x.ln();
    (count * 8.0) as u64 + SEGMENT_ODDS * threads.max(1) as u64
}
