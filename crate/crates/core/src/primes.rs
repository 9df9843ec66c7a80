//! Eisenstein primes: testing, the three categories, splitting of rational
//! primes `q ≡ 1 (mod 3)`, and unique factorization.

use std::fmt;

use serde::Serialize;

use crate::eint::{EInt, Unit};
use crate::error::{Error, Result};
use crate::euclid::exact_div;
use crate::integer::{self, is_rational_prime, DEFAULT_TRIAL_BOUND};

/// The canonical associate of the even prime `β = 1 − ρ`.
pub const EVEN_PRIME: EInt = EInt::new(2, 1);

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum PrimeCategory {
    /// Associates of `β = 1 − ρ`, norm 3.
    EvenPrime,
    /// Associates of a rational prime `p ≡ 2 (mod 3)`, norm `p²`.
    RationalInert,
    /// A factor `ψ` of a rational prime `q ≡ 1 (mod 3)`, norm `q`.
    SplitFactor,
}

impl fmt::Display for PrimeCategory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeCategory::EvenPrime => "even",
            PrimeCategory::RationalInert => "inert",
            PrimeCategory::SplitFactor => "split",
        })
    }
}

/// If `x` is an associate of a positive rational integer, that integer.
fn rational_associate(x: EInt) -> Option<u64> {
    let c = x.canonical();
    (c.b == 0 && c.a > 0).then_some(c.a as u64)
}

pub fn categorize_prime(x: EInt) -> Result<PrimeCategory> {
    let n = x.norm();
    if n == 3 {
        return Ok(PrimeCategory::EvenPrime);
    }
    if n % 3 == 1 && is_rational_prime(n) {
        return Ok(PrimeCategory::SplitFactor);
    }
    match rational_associate(x) {
        Some(p) if p % 3 == 2 && is_rational_prime(p as u128) => Ok(PrimeCategory::RationalInert),
        _ => Err(Error::NotPrime(x)),
    }
}

pub fn is_prime(x: EInt) -> bool {
    categorize_prime(x).is_ok()
}

/// Splits `q = ψ·ψ̄` for a rational prime `q ≡ 1 (mod 3)`.
///
/// Both factors are canonical and share the same `a`; `ψ` is the one with
/// the smaller `b`, i.e. the first hit when scanning `a` upward from 1 and
/// `b` from 0 to `a`.
pub fn split_rational_prime(q: u128) -> Result<(EInt, EInt)> {
    if q % 3 != 1 || !is_rational_prime(q) || q > i64::MAX as u128 {
        return Err(Error::NotSplittable(q));
    }
    // t with t² + t + 1 ≡ 0 (mod q), so q and t − ρ share a factor of norm q.
    let t = (2..q)
        .map(|g| integer::pow_mod(g, (q - 1) / 3, q))
        .find(|&t| t != 1)
        .expect("the cubic residues form a proper subgroup");
    let g = crate::euclid::gcd(EInt::from_int(q as i64), EInt::new(t as i64, -1))?;
    debug_assert_eq!(g.norm(), q);
    let (x, y) = (g, g.conj().canonical());
    Ok(if x.b <= y.b { (x, y) } else { (y, x) })
}

pub fn norm_trial_factor(n: u128) -> Result<Vec<(u128, u32)>> {
    integer::trial_factor(n, DEFAULT_TRIAL_BOUND)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct PrimePower {
    pub prime: EInt,
    pub exponent: u32,
}

/// `unit · ∏ primeᵉ` with canonical, pairwise non-associate primes sorted by
/// `(norm, a, b)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Factorization {
    pub unit: Unit,
    pub factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn recompose(&self) -> Result<EInt> {
        self.factors.iter().try_fold(self.unit.to_eint(), |acc, f| acc.try_mul(f.prime.try_pow(f.exponent)?))
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// The same factorization written with `β = 1 − ρ` in place of the
    /// canonical even prime `2 + ρ`, the unit adjusted to compensate.
    pub fn with_beta_convention(&self) -> Factorization {
        // 2 + ρ = (−ρ²)·β
        let mut unit = self.unit;
        let factors = self
            .factors
            .iter()
            .map(|f| {
                if f.prime == EVEN_PRIME {
                    unit = unit * Unit::NegRhoSq.pow(f.exponent);
                    PrimePower { prime: EInt::BETA, exponent: f.exponent }
                } else {
                    *f
                }
            })
            .collect();
        Factorization { unit, factors }
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.unit != Unit::One || self.factors.is_empty() {
            parts.push(format!("({})", self.unit));
        }
        for pp in &self.factors {
            if pp.exponent == 1 {
                parts.push(format!("({})", pp.prime));
            } else {
                parts.push(format!("({})^{}", pp.prime, pp.exponent));
            }
        }
        f.write_str(&parts.join(" * "))
    }
}

struct Accumulator {
    rest: EInt,
    factors: Vec<PrimePower>,
}

impl Accumulator {
    /// Divides out `prime` as often as it goes and records the exponent.
    fn strip(&mut self, prime: EInt) -> u32 {
        let mut e = 0;
        while let Some(q) = exact_div(self.rest, prime) {
            self.rest = q;
            e += 1;
        }
        if e > 0 {
            match self.factors.iter_mut().find(|f| f.prime == prime) {
                Some(f) => f.exponent += e,
                None => self.factors.push(PrimePower { prime, exponent: e }),
            }
        }
        e
    }
}

pub fn factor(x: EInt) -> Result<Factorization> {
    factor_with_bound(x, DEFAULT_TRIAL_BOUND)
}

/// Unique factorization. Powers of the even prime are removed first by the
/// parity test, then the rational content `gcd(a, b)`, then the split primes
/// read off the norm of the primitive remainder.
pub fn factor_with_bound(x: EInt, bound: u64) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::ZeroInput("factorization"));
    }
    let mut acc = Accumulator { rest: x, factors: Vec::new() };

    while acc.rest.parity() == crate::eint::Parity::Even {
        acc.strip(EVEN_PRIME);
    }

    let content = acc.rest.content() as u128;
    for (p, _) in integer::trial_factor(content, bound)? {
        if p % 3 == 2 {
            acc.strip(EInt::from_int(p as i64));
        } else {
            let (psi, psi_bar) = split_rational_prime(p)?;
            acc.strip(psi);
            acc.strip(psi_bar);
        }
    }

    for (q, _) in integer::trial_factor(acc.rest.norm(), bound)? {
        let (psi, psi_bar) = split_rational_prime(q)?;
        acc.strip(psi);
        acc.strip(psi_bar);
    }

    let unit = Unit::from_eint(acc.rest).expect("cofactor after removing every prime is a unit");
    let mut factors = acc.factors;
    factors.sort_by_key(|f| (f.prime.norm(), f.prime.a, f.prime.b));
    Ok(Factorization { unit, factors })
}

/// Canonical primes with norm at most `max_norm`, sorted by `(norm, a, b)`.
pub fn primes_up_to_norm(max_norm: u64) -> Vec<EInt> {
    let mut out = Vec::new();
    if max_norm >= 3 {
        out.push(EVEN_PRIME);
    }
    for n in 2..=max_norm as u128 {
        if !is_rational_prime(n) {
            continue;
        }
        if n % 3 == 1 {
            let (psi, psi_bar) = split_rational_prime(n).expect("q = 1 mod 3 splits");
            out.extend([psi, psi_bar]);
        } else if n % 3 == 2 && n * n <= max_norm as u128 {
            out.push(EInt::from_int(n as i64));
        }
    }
    out.sort_by_key(|z| (z.norm(), z.a, z.b));
    out
}
