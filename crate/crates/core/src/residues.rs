//! Residue classes of Z[ρ]/(η).
//!
//! For a prime power `γⁿ` the representatives are the four systems
//!
//! | case        | representatives                               |
//! |-------------|-----------------------------------------------|
//! | `β^(2m)`    | `a + bρ`, `0 ≤ a, b < 3^m`                    |
//! | `β^(2m+1)`  | `a + bρ`, `0 ≤ a < 3^(m+1)`, `0 ≤ b < 3^m`    |
//! | `pⁿ`        | `a + bρ`, `0 ≤ a, b < pⁿ`                     |
//! | `ψⁿ`        | `a`, `0 ≤ a < qⁿ`                             |
//!
//! and [`reduce`] maps into them case by case.
//!
//! A general [`Modulus`] uses the box `0 ≤ a < N/g`, `0 ≤ b < g` where `g`
//! is the gcd of the coordinates of η. The ideal (η) is generated as a
//! lattice by `(N/g, 0)` and `(s, g)` for some shift `s`, so the box is a
//! complete residue system; on prime powers it coincides with the table above.

use serde::Serialize;

use crate::eint::EInt;
use crate::error::{Error, Result};
use crate::euclid::{divides, exact_div, ext_gcd, gcd};
use crate::integer::{ext_gcd_i128, mod_inverse};
use crate::primes::{categorize_prime, factor, Factorization, PrimeCategory};

/// Largest modulus norm accepted; keeps every product of two
/// representatives inside `i128`.
pub const MAX_MODULUS_NORM: u128 = 1 << 60;

/// A nonzero modulus with its factorization and reduction box.
#[derive(Clone, Debug)]
pub struct Modulus {
    eta: EInt,
    norm: u128,
    factorization: Factorization,
    width: i128,
    height: i128,
    shift: i128,
}

impl Modulus {
    pub fn new(eta: EInt) -> Result<Modulus> {
        if eta.is_zero() {
            return Err(Error::ZeroInput("modulus"));
        }
        let norm = eta.norm();
        if norm > MAX_MODULUS_NORM {
            return Err(Error::Overflow("modulus norm"));
        }
        let factorization = factor(eta)?;
        let (c, d) = (eta.a as i128, eta.b as i128);
        // ρ-coordinates of the generators η = (c, d) and ηρ = (−d, c − d)
        let (height, s, t) = ext_gcd_i128(d, c - d);
        let width = norm as i128 / height;
        let shift = (s * c - t * d).rem_euclid(width);
        Ok(Modulus { eta, norm, factorization, width, height, shift })
    }

    pub fn eta(&self) -> EInt {
        self.eta
    }

    /// Number of residue classes.
    pub fn norm(&self) -> u128 {
        self.norm
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    /// Box dimensions `(N/g, g)`.
    pub fn box_dims(&self) -> (u128, u128) {
        (self.width as u128, self.height as u128)
    }

    fn reduce_wide(&self, a: i128, b: i128) -> EInt {
        let k = b.div_euclid(self.height);
        let b = b - k * self.height;
        let a = (a - k * self.shift).rem_euclid(self.width);
        EInt::new(a as i64, b as i64)
    }

    /// Canonical representative of the class of `theta`.
    pub fn reduce(&self, theta: EInt) -> EInt {
        self.reduce_wide(theta.a as i128, theta.b as i128)
    }

    pub fn is_representative(&self, x: EInt) -> bool {
        let (a, b) = (x.a as i128, x.b as i128);
        (0..self.width).contains(&a) && (0..self.height).contains(&b)
    }

    /// All canonical representatives, ordered by `(b, a)`.
    pub fn representatives(&self) -> impl Iterator<Item = EInt> + '_ {
        (0..self.height).flat_map(move |b| (0..self.width).map(move |a| EInt::new(a as i64, b as i64)))
    }

    pub fn one(&self) -> EInt {
        self.reduce(EInt::ONE)
    }

    pub fn add(&self, x: EInt, y: EInt) -> EInt {
        self.reduce_wide(x.a as i128 + y.a as i128, x.b as i128 + y.b as i128)
    }

    /// Product of two classes; both inputs are reduced first.
    pub fn mul(&self, x: EInt, y: EInt) -> EInt {
        let (x, y) = (self.reduce(x), self.reduce(y));
        let (a, b, c, d) = (x.a as i128, x.b as i128, y.a as i128, y.b as i128);
        let bd = b * d;
        self.reduce_wide(a * c - bd, a * d + b * c - bd)
    }
}

/// Which of the four prime-power residue systems applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum ResidueSystemKind {
    BetaEven { m: u32 },
    BetaOdd { m: u32 },
    RationalPower { p: i64, n: u32 },
    SplitPower { psi: EInt, q: i64, n: u32 },
}

fn pow_i64(base: i64, e: u32) -> Result<i64> {
    base.checked_pow(e).ok_or(Error::Overflow("prime power"))
}

impl ResidueSystemKind {
    pub fn of(gamma: EInt, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("exponent must be at least 1".into()));
        }
        Ok(match categorize_prime(gamma)? {
            PrimeCategory::EvenPrime if n.is_multiple_of(2) => ResidueSystemKind::BetaEven { m: n / 2 },
            PrimeCategory::EvenPrime => ResidueSystemKind::BetaOdd { m: (n - 1) / 2 },
            PrimeCategory::RationalInert => ResidueSystemKind::RationalPower { p: gamma.canonical().a, n },
            PrimeCategory::SplitFactor => {
                ResidueSystemKind::SplitPower { psi: gamma, q: gamma.norm() as i64, n }
            }
        })
    }

    /// `(a_len, b_len)` of the representative rectangle.
    fn dims(&self) -> Result<(i64, i64)> {
        Ok(match *self {
            ResidueSystemKind::BetaEven { m } => (pow_i64(3, m)?, pow_i64(3, m)?),
            ResidueSystemKind::BetaOdd { m } => (pow_i64(3, m + 1)?, pow_i64(3, m)?),
            ResidueSystemKind::RationalPower { p, n } => (pow_i64(p, n)?, pow_i64(p, n)?),
            ResidueSystemKind::SplitPower { q, n, .. } => (pow_i64(q, n)?, 1),
        })
    }
}

/// Iterator over a prime-power residue system in `(b, a)` order.
#[derive(Clone, Debug)]
pub struct ResidueSystem {
    kind: ResidueSystemKind,
    a_len: i64,
    b_len: i64,
    next: u128,
}

impl ResidueSystem {
    pub fn kind(&self) -> ResidueSystemKind {
        self.kind
    }

    pub fn cardinality(&self) -> u128 {
        self.a_len as u128 * self.b_len as u128
    }
}

impl Iterator for ResidueSystem {
    type Item = EInt;

    fn next(&mut self) -> Option<EInt> {
        if self.next >= self.cardinality() {
            return None;
        }
        let i = self.next;
        self.next += 1;
        let a_len = self.a_len as u128;
        Some(EInt::new((i % a_len) as i64, (i / a_len) as i64))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.cardinality() - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for ResidueSystem {}

/// The complete residue system of `γⁿ` for a prime `γ`.
pub fn residue_system(gamma: EInt, n: u32) -> Result<ResidueSystem> {
    let kind = ResidueSystemKind::of(gamma, n)?;
    let (a_len, b_len) = kind.dims()?;
    Ok(ResidueSystem { kind, a_len, b_len, next: 0 })
}

/// The representative of `[theta]` in `residue_system(gamma, n)`.
pub fn reduce(theta: EInt, gamma: EInt, n: u32) -> Result<EInt> {
    let kind = ResidueSystemKind::of(gamma, n)?;
    let (a, b) = (theta.a as i128, theta.b as i128);
    let rep = match kind {
        ResidueSystemKind::BetaEven { m } => {
            let modulus = pow_i64(3, m)? as i128;
            (a.rem_euclid(modulus), b.rem_euclid(modulus))
        }
        ResidueSystemKind::BetaOdd { m } => {
            let small = pow_i64(3, m)? as i128;
            let big = 3 * small;
            let (mut x, mut y) = (a.rem_euclid(big), b.rem_euclid(big));
            // x + yρ = (x + 3^m) + (y − 3^m)ρ − 3^m·β
            while y >= small {
                x += small;
                y -= small;
            }
            (x.rem_euclid(big), y)
        }
        ResidueSystemKind::RationalPower { p, n } => {
            let modulus = pow_i64(p, n)? as i128;
            (a.rem_euclid(modulus), b.rem_euclid(modulus))
        }
        ResidueSystemKind::SplitPower { psi, q, n } => {
            let qn = pow_i64(q, n)? as i128;
            let power = psi.try_pow(n)?;
            let (x, y) = (power.a as i128, power.b as i128);
            // ψⁿ = x + yρ ≡ 0, so ρ ≡ −x·y⁻¹ (mod qⁿ); q ∤ y by the coprime-parts property
            let y_inv = mod_inverse(y, qn).expect("y is a unit modulo q^n");
            let rho = (-(x.rem_euclid(qn)) * y_inv).rem_euclid(qn);
            ((a.rem_euclid(qn) + b.rem_euclid(qn) * rho).rem_euclid(qn), 0)
        }
    };
    Ok(EInt::new(rep.0 as i64, rep.1 as i64))
}

/// Whether `x ≡ y (mod η)`, decided by exact divisibility.
pub fn classes_equal(x: EInt, y: EInt, modulus: &Modulus) -> bool {
    match x.checked_sub(y) {
        Some(diff) => divides(modulus.eta, diff),
        None => modulus.reduce(x) == modulus.reduce(y),
    }
}

/// Whether `[theta]` is a unit of Z[ρ]/(γⁿ), by the per-category criterion.
pub fn is_unit_class(theta: EInt, gamma: EInt, n: u32) -> Result<bool> {
    Ok(match ResidueSystemKind::of(gamma, n)? {
        ResidueSystemKind::BetaEven { .. } | ResidueSystemKind::BetaOdd { .. } => {
            (theta.a as i128 + theta.b as i128).rem_euclid(3) != 0
        }
        ResidueSystemKind::RationalPower { p, .. } => theta.a % p != 0 || theta.b % p != 0,
        ResidueSystemKind::SplitPower { q, .. } => reduce(theta, gamma, n)?.a % q != 0,
    })
}

/// CRT idempotents `eᵢ ≡ 1 (mod πᵢ)`, `eᵢ ≡ 0 (mod πⱼ)` for pairwise coprime
/// `πᵢ` whose product is associate to `total.eta()`.
fn idempotents(parts: &[EInt], total: &Modulus) -> Result<Vec<EInt>> {
    parts
        .iter()
        .map(|&part| {
            let cofactor = exact_div(total.eta, part).ok_or(Error::NotCoprime(total.eta, part))?;
            let local = Modulus::new(part)?;
            let inv = inverse_mod(cofactor, &local)?;
            Ok(total.mul(cofactor, inv))
        })
        .collect()
}

/// All unit classes of Z[ρ]/(η) as canonical representatives, ordered by `(b, a)`.
///
/// Built by combining the unit classes of each prime-power factor through
/// the Chinese remainder isomorphism.
pub fn unit_classes(modulus: &Modulus) -> Result<Vec<EInt>> {
    let factors = &modulus.factorization.factors;
    let mut parts = Vec::with_capacity(factors.len());
    let mut local_units = Vec::with_capacity(factors.len());
    for pp in factors {
        parts.push(pp.prime.try_pow(pp.exponent)?);
        let mut units = Vec::new();
        for theta in residue_system(pp.prime, pp.exponent)? {
            if is_unit_class(theta, pp.prime, pp.exponent)? {
                units.push(theta);
            }
        }
        local_units.push(units);
    }
    let idem = idempotents(&parts, modulus)?;

    let mut acc = vec![EInt::ZERO];
    for (units, e) in local_units.iter().zip(&idem) {
        let mut next = Vec::with_capacity(acc.len() * units.len());
        for &partial in &acc {
            for &u in units {
                next.push(modulus.add(partial, modulus.mul(u, *e)));
            }
        }
        acc = next;
    }
    if factors.is_empty() {
        acc = vec![modulus.one()];
    }
    acc.sort_by_key(|z| (z.b, z.a));
    Ok(acc)
}

/// The canonical representative of `theta⁻¹ (mod η)`.
pub fn inverse_mod(theta: EInt, modulus: &Modulus) -> Result<EInt> {
    let reduced = modulus.reduce(theta);
    let (g, s, _) = ext_gcd(reduced, modulus.eta)?;
    if g != EInt::ONE {
        return Err(Error::NotInvertible { value: theta, modulus: modulus.eta });
    }
    Ok(modulus.reduce(s))
}

/// Square-and-multiply; `k = 0` gives the class of 1.
pub fn pow_mod(theta: EInt, mut k: u128, modulus: &Modulus) -> EInt {
    let mut base = modulus.reduce(theta);
    let mut acc = modulus.one();
    while k > 0 {
        if k & 1 == 1 {
            acc = modulus.mul(acc, base);
        }
        k >>= 1;
        if k > 0 {
            base = modulus.mul(base, base);
        }
    }
    acc
}

/// Solves `x ≡ rᵢ (mod mᵢ)` for pairwise coprime `mᵢ`, returning the
/// canonical representative modulo `∏ mᵢ`.
pub fn crt_solve(congruences: &[(EInt, EInt)]) -> Result<EInt> {
    if congruences.is_empty() {
        return Err(Error::InvalidArgument("no congruences given".into()));
    }
    for (i, &(_, mi)) in congruences.iter().enumerate() {
        if mi.is_zero() {
            return Err(Error::ZeroInput("modulus"));
        }
        for &(_, mj) in &congruences[i + 1..] {
            if gcd(mi, mj)? != EInt::ONE {
                return Err(Error::NotCoprime(mi, mj));
            }
        }
    }
    let product = congruences.iter().try_fold(EInt::ONE, |acc, &(_, m)| acc.try_mul(m))?;
    let total = Modulus::new(product)?;
    let parts: Vec<EInt> = congruences.iter().map(|&(_, m)| m).collect();
    let idem = idempotents(&parts, &total)?;
    Ok(congruences
        .iter()
        .zip(&idem)
        .fold(EInt::ZERO, |acc, (&(r, _), &e)| total.add(acc, total.mul(r, e))))
}
