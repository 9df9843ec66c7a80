//! The value type `a + bρ` and the ring structure of Z[ρ].
//!
//! Coordinates are `i64`. Every operation that can leave that range either
//! has a `checked_*` form returning `None`/[`Error::Overflow`] or, for the
//! `std::ops` impls, panics with an explicit overflow message. Nothing wraps.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// An Eisenstein integer `a + bρ` where `ρ² = −1 − ρ`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct EInt {
    pub a: i64,
    pub b: i64,
}

fn narrow(v: i128) -> Option<i64> {
    i64::try_from(v).ok()
}

impl EInt {
    pub const ZERO: EInt = EInt { a: 0, b: 0 };
    pub const ONE: EInt = EInt { a: 1, b: 0 };
    pub const RHO: EInt = EInt { a: 0, b: 1 };
    /// The even prime `1 − ρ`.
    pub const BETA: EInt = EInt { a: 1, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        EInt { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        EInt { a, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, o: EInt) -> Option<EInt> {
        Some(EInt::new(self.a.checked_add(o.a)?, self.b.checked_add(o.b)?))
    }

    pub fn checked_sub(self, o: EInt) -> Option<EInt> {
        Some(EInt::new(self.a.checked_sub(o.a)?, self.b.checked_sub(o.b)?))
    }

    pub fn checked_neg(self) -> Option<EInt> {
        Some(EInt::new(self.a.checked_neg()?, self.b.checked_neg()?))
    }

    /// `(ac − bd) + (ad + bc − bd)ρ`, computed in 128-bit and narrowed.
    pub fn checked_mul(self, o: EInt) -> Option<EInt> {
        let (a, b, c, d) = (self.a as i128, self.b as i128, o.a as i128, o.b as i128);
        let bd = b * d;
        Some(EInt::new(narrow(a * c - bd)?, narrow(a * d + b * c - bd)?))
    }

    pub fn checked_conj(self) -> Option<EInt> {
        Some(EInt::new(self.a.checked_sub(self.b)?, self.b.checked_neg()?))
    }

    pub fn checked_pow(self, mut exp: u32) -> Option<EInt> {
        let mut base = self;
        let mut acc = EInt::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.checked_mul(base)?;
            }
        }
        Some(acc)
    }

    pub fn checked_scale(self, k: i64) -> Option<EInt> {
        Some(EInt::new(self.a.checked_mul(k)?, self.b.checked_mul(k)?))
    }

    pub fn try_add(self, o: EInt) -> Result<EInt> {
        self.checked_add(o).ok_or(Error::Overflow("add"))
    }

    pub fn try_sub(self, o: EInt) -> Result<EInt> {
        self.checked_sub(o).ok_or(Error::Overflow("sub"))
    }

    pub fn try_mul(self, o: EInt) -> Result<EInt> {
        self.checked_mul(o).ok_or(Error::Overflow("mul"))
    }

    pub fn try_pow(self, exp: u32) -> Result<EInt> {
        self.checked_pow(exp).ok_or(Error::Overflow("pow"))
    }

    /// The conjugate `(a − b) − bρ`.
    ///
    /// Panics if a coordinate overflows; see [`EInt::checked_conj`].
    pub fn conj(self) -> EInt {
        self.checked_conj().expect("Eisenstein integer overflow in conj")
    }

    /// `a² − ab + b²`. Always fits: the maximum over `i64` inputs is `3·2¹²⁶`.
    pub fn norm(&self) -> u128 {
        let (a, b) = (self.a as i128, self.b as i128);
        let a2 = (a * a) as u128;
        let b2 = (b * b) as u128;
        let ab = a * b;
        if ab >= 0 {
            a2 + b2 - ab as u128
        } else {
            a2 + b2 + ab.unsigned_abs()
        }
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn parity(&self) -> Parity {
        match (self.a as i128 + self.b as i128).rem_euclid(3) {
            0 => Parity::Even,
            1 => Parity::Odd1,
            _ => Parity::Odd2,
        }
    }

    /// The six unit multiples in the order of [`Unit::ALL`].
    pub fn associates(&self) -> [EInt; 6] {
        Unit::ALL.map(|u| u.apply(*self))
    }

    pub fn is_associate(&self, other: &EInt) -> bool {
        self.associates().contains(other)
    }

    /// True for the half-open sector `b ≥ 0, a > b` (argument in `[0°, 60°)`).
    pub fn in_canonical_sector(&self) -> bool {
        self.b >= 0 && self.a > self.b
    }

    /// Returns `(u, c)` with `self = u·c` and `c` in the canonical sector.
    /// Zero maps to `(1, 0)`.
    pub fn canonical_associate(&self) -> (Unit, EInt) {
        if self.is_zero() {
            return (Unit::One, EInt::ZERO);
        }
        for u in Unit::ALL {
            let c = u.inverse().apply(*self);
            if c.in_canonical_sector() {
                return (u, c);
            }
        }
        unreachable!("every nonzero element has an associate in the canonical sector")
    }

    pub fn canonical(&self) -> EInt {
        self.canonical_associate().1
    }

    /// `gcd(a, b)` over the integers; zero only for zero.
    pub fn content(&self) -> u64 {
        crate::integer::gcd_u64(self.a.unsigned_abs(), self.b.unsigned_abs())
    }
}

impl fmt::Debug for EInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EInt({})", self)
    }
}

impl Serialize for EInt {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl From<i64> for EInt {
    fn from(a: i64) -> Self {
        EInt::from_int(a)
    }
}

impl From<Unit> for EInt {
    fn from(u: Unit) -> Self {
        u.to_eint()
    }
}

impl Add for EInt {
    type Output = EInt;
    fn add(self, o: EInt) -> EInt {
        self.checked_add(o).expect("Eisenstein integer overflow in add")
    }
}

impl Sub for EInt {
    type Output = EInt;
    fn sub(self, o: EInt) -> EInt {
        self.checked_sub(o).expect("Eisenstein integer overflow in sub")
    }
}

impl Neg for EInt {
    type Output = EInt;
    fn neg(self) -> EInt {
        self.checked_neg().expect("Eisenstein integer overflow in neg")
    }
}

impl Mul for EInt {
    type Output = EInt;
    fn mul(self, o: EInt) -> EInt {
        self.checked_mul(o).expect("Eisenstein integer overflow in mul")
    }
}

/// The six units, listed as successive powers of the generator `−ρ²`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Unit {
    One,
    NegRhoSq,
    Rho,
    NegOne,
    RhoSq,
    NegRho,
}

impl Unit {
    pub const ALL: [Unit; 6] = [
        Unit::One,
        Unit::NegRhoSq,
        Unit::Rho,
        Unit::NegOne,
        Unit::RhoSq,
        Unit::NegRho,
    ];

    /// Exponent `k` with `self = (−ρ²)^k`.
    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn from_index(k: u8) -> Unit {
        Unit::ALL[(k % 6) as usize]
    }

    pub fn to_eint(self) -> EInt {
        match self {
            Unit::One => EInt::new(1, 0),
            Unit::NegRhoSq => EInt::new(1, 1),
            Unit::Rho => EInt::new(0, 1),
            Unit::NegOne => EInt::new(-1, 0),
            Unit::RhoSq => EInt::new(-1, -1),
            Unit::NegRho => EInt::new(0, -1),
        }
    }

    pub fn from_eint(x: EInt) -> Option<Unit> {
        Unit::ALL.into_iter().find(|u| u.to_eint() == x)
    }

    pub fn inverse(self) -> Unit {
        Unit::from_index(6 - self.index())
    }

    pub fn pow(self, e: u32) -> Unit {
        Unit::from_index(((self.index() as u64 * e as u64) % 6) as u8)
    }

    /// Multiplies `x` by this unit; panics on overflow.
    pub fn apply(self, x: EInt) -> EInt {
        self.checked_apply(x).expect("Eisenstein integer overflow in unit multiplication")
    }

    pub fn checked_apply(self, x: EInt) -> Option<EInt> {
        let (a, b) = (x.a, x.b);
        Some(match self {
            Unit::One => x,
            Unit::NegRhoSq => EInt::new(a.checked_sub(b)?, a),
            Unit::Rho => EInt::new(b.checked_neg()?, a.checked_sub(b)?),
            Unit::NegOne => EInt::new(a.checked_neg()?, b.checked_neg()?),
            Unit::RhoSq => EInt::new(b.checked_sub(a)?, a.checked_neg()?),
            Unit::NegRho => EInt::new(b, b.checked_sub(a)?),
        })
    }
}

impl std::ops::Mul for Unit {
    type Output = Unit;

    // Indices are exponents of the generator, so products add them.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, o: Unit) -> Unit {
        Unit::from_index(self.index() + o.index())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.to_eint(), f)
    }
}

/// The three classes of Z[ρ] modulo the even prime, decided by `(a + b) mod 3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize)]
pub enum Parity {
    Even,
    Odd1,
    Odd2,
}

/// Parity of a product, from the parities of the factors.
impl std::ops::Mul for Parity {
    type Output = Parity;

    fn mul(self, o: Parity) -> Parity {
        use Parity::*;
        match (self, o) {
            (Even, _) | (_, Even) => Even,
            (Odd1, Odd1) | (Odd2, Odd2) => Odd1,
            _ => Odd2,
        }
    }
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "Even",
            Parity::Odd1 => "Odd1",
            Parity::Odd2 => "Odd2",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// All lattice points with `norm ≤ max_norm`, sorted by `(b, a)`.
pub fn lattice_points(max_norm: u64) -> Vec<EInt> {
    // norm ≥ 3b²/4 and norm ≥ 3a²/4
    let r = ((4 * max_norm as u128 / 3) as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for b in -r..=r {
        for a in -r..=r {
            let z = EInt::new(a, b);
            if z.norm() <= max_norm as u128 {
                out.push(z);
            }
        }
    }
    out
}

/// Canonical representatives of every associate class with
/// `1 ≤ norm ≤ max_norm`, sorted by `(norm, a, b)`.
pub fn canonical_up_to_norm(max_norm: u64) -> Vec<EInt> {
    let r = ((4 * max_norm as u128 / 3) as f64).sqrt() as i64 + 1;
    let mut out = Vec::new();
    for a in 1..=r {
        for b in 0..a {
            let z = EInt::new(a, b);
            if z.norm() <= max_norm as u128 {
                out.push(z);
            }
        }
    }
    out.sort_by_key(|z| (z.norm(), z.a, z.b));
    out
}
