//! Rational-integer helpers: gcd, modular inverse, primality, trial division.

use crate::error::{Error, Result};

/// Default trial-division bound for integer factorization.
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

pub fn gcd_u64(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `(g, s, t)` with `s·a + t·b = g = gcd(a, b) ≥ 0`.
pub fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut s0, mut s1) = (1i128, 0i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 < 0 {
        (-r0, -s0, -t0)
    } else {
        (r0, s0, t0)
    }
}

/// Inverse of `a` modulo `m > 0`, in `[0, m)`, if it exists.
pub fn mod_inverse(a: i128, m: i128) -> Option<i128> {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(m))
}

fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= u64::MAX as u128 {
        return a * b % m;
    }
    let (mut a, mut b, mut acc) = (a % m, b, 0u128);
    while b > 0 {
        if b & 1 == 1 {
            acc = add_mod(acc, a, m);
        }
        a = add_mod(a, a, m);
        b >>= 1;
    }
    acc
}

fn add_mod(a: u128, b: u128, m: u128) -> u128 {
    if a >= m - b {
        a - (m - b)
    } else {
        a + b
    }
}

pub(crate) fn pow_mod(mut base: u128, mut exp: u128, m: u128) -> u128 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const SMALL_PRIMES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Miller–Rabin with the first thirteen prime bases: deterministic below
/// 3.3·10²⁴, which covers every norm the rest of the crate can enumerate.
pub fn is_rational_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for a in SMALL_PRIMES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// Complete factorization by ascending trial division, divisors up to `bound`.
///
/// A cofactor left once the bound is reached is accepted only if it passes
/// the primality test.
pub fn trial_factor(mut n: u128, bound: u64) -> Result<Vec<(u128, u32)>> {
    let original = n;
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= n {
        if d > bound as u128 {
            if is_rational_prime(n) {
                break;
            }
            return Err(Error::FactorBoundExceeded { n: original, bound });
        }
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    Ok(out)
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: u128) -> Result<Vec<u128>> {
    let mut divs = vec![1u128];
    for (p, e) in trial_factor(n, DEFAULT_TRIAL_BOUND)? {
        let len = divs.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divs.push(divs[i] * pk);
            }
        }
    }
    divs.sort_unstable();
    Ok(divs)
}

pub fn lcm_u128(a: u128, b: u128) -> u128 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u128(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trial_factor_examples() {
        assert_eq!(trial_factor(19, DEFAULT_TRIAL_BOUND).unwrap(), vec![(19, 1)]);
        assert_eq!(trial_factor(5184, DEFAULT_TRIAL_BOUND).unwrap(), vec![(2, 6), (3, 4)]);
        assert!(trial_factor(1, DEFAULT_TRIAL_BOUND).unwrap().is_empty());
        // 1_000_003² needs a divisor above the bound
        let n = 1_000_003u128 * 1_000_033;
        assert_eq!(
            trial_factor(n, 1000),
            Err(Error::FactorBoundExceeded { n, bound: 1000 })
        );
        assert_eq!(trial_factor(n, DEFAULT_TRIAL_BOUND + 100).unwrap(), vec![(1_000_003, 1), (1_000_033, 1)]);
        // a large prime cofactor is accepted past the bound
        let n = 12 * 1_000_000_007u128;
        assert_eq!(trial_factor(n, 100).unwrap(), vec![(2, 2), (3, 1), (1_000_000_007, 1)]);
    }

    #[test]
    fn primality_agrees_with_sieve() {
        let limit = 20_000usize;
        let mut sieve = vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                for j in (i * i..limit).step_by(i) {
                    sieve[j] = false;
                }
            }
        }
        for (n, &p) in sieve.iter().enumerate() {
            assert_eq!(is_rational_prime(n as u128), p, "{n}");
        }
        assert!(is_rational_prime(1_000_000_007));
        assert!(is_rational_prime(18_446_744_073_709_551_557)); // largest prime below 2^64
        assert!(!is_rational_prime(18_446_744_073_709_551_557 * 3));
        // Carmichael numbers
        assert!(!is_rational_prime(561));
        assert!(!is_rational_prime(3_215_031_751));
    }

    #[test]
    fn inverse_and_divisors() {
        assert_eq!(mod_inverse(5, 49), Some(10));
        let (g, s, t) = ext_gcd_i128(-5, 3);
        assert_eq!((g, s * -5 + t * 3), (1, 1));
        let (g, s, t) = ext_gcd_i128(240, -46);
        assert_eq!((g, s * 240 + t * -46), (2, 2));
        assert_eq!(mod_inverse(-5, 49), Some(39));
        assert_eq!(mod_inverse(7, 49), None);
        assert_eq!(divisors(18).unwrap(), vec![1, 2, 3, 6, 9, 18]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(lcm_u128(6, 4), 12);
    }
}
