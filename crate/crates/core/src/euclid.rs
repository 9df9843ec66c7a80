//! Euclidean division, gcd and Bezout certificates in Z[ρ].

use crate::eint::{EInt, Unit};
use crate::error::{Error, Result};

/// Nearest integer to `p / n` for `n > 0`, ties to even.
fn round_half_even(p: i128, n: i128) -> i128 {
    let q = p.div_euclid(n);
    let r = p.rem_euclid(n);
    match (2 * r).cmp(&n) {
        std::cmp::Ordering::Less => q,
        std::cmp::Ordering::Greater => q + 1,
        std::cmp::Ordering::Equal => {
            if q % 2 == 0 {
                q
            } else {
                q + 1
            }
        }
    }
}

/// Returns `(q, r)` with `x = q·d + r` and `4·N(r) ≤ 3·N(d)`.
///
/// The quotient is `x·conj(d) / N(d)` with each coordinate rounded to the
/// nearest integer, ties to even.
pub fn div_rem(x: EInt, d: EInt) -> Result<(EInt, EInt)> {
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let overflow = || Error::Overflow("div_rem");
    let n = i128::try_from(d.norm()).map_err(|_| overflow())?;
    // x·conj(d) where conj(d) = (d.a − d.b) − d.b·ρ
    let (xa, xb) = (x.a as i128, x.b as i128);
    let (ca, cb) = (d.a as i128 - d.b as i128, -(d.b as i128));
    let bd = xb.checked_mul(cb).ok_or_else(overflow)?;
    let pa = xa.checked_mul(ca).and_then(|v| v.checked_sub(bd)).ok_or_else(overflow)?;
    let pb = xa
        .checked_mul(cb)
        .and_then(|v| v.checked_add(xb.checked_mul(ca)?))
        .and_then(|v| v.checked_sub(bd))
        .ok_or_else(overflow)?;
    let qa = i64::try_from(round_half_even(pa, n)).map_err(|_| overflow())?;
    let qb = i64::try_from(round_half_even(pb, n)).map_err(|_| overflow())?;
    // r = x − q·d, evaluated wide since q·d alone may leave i64
    let (qa, qb) = (qa as i128, qb as i128);
    let (da, db) = (d.a as i128, d.b as i128);
    let qbdb = qb.checked_mul(db).ok_or_else(overflow)?;
    let ra = qa.checked_mul(da).and_then(|v| v.checked_sub(qbdb)).and_then(|v| xa.checked_sub(v));
    let rb = qa
        .checked_mul(db)
        .and_then(|v| v.checked_add(qb.checked_mul(da)?))
        .and_then(|v| v.checked_sub(qbdb))
        .and_then(|v| xb.checked_sub(v));
    let narrow = |v: Option<i128>| v.and_then(|v| i64::try_from(v).ok()).ok_or_else(overflow);
    let r = EInt::new(narrow(ra)?, narrow(rb)?);
    Ok((EInt::new(qa as i64, qb as i64), r))
}

/// `x / d` when `d` divides `x` exactly.
pub fn exact_div(x: EInt, d: EInt) -> Option<EInt> {
    match div_rem(x, d) {
        Ok((q, r)) if r.is_zero() => Some(q),
        _ => None,
    }
}

/// Whether `d` divides `x`. Zero divides only zero.
pub fn divides(d: EInt, x: EInt) -> bool {
    if d.is_zero() {
        return x.is_zero();
    }
    exact_div(x, d).is_some()
}

/// Greatest common divisor as a canonical associate; `gcd(0, 0) = 0`.
pub fn gcd(x: EInt, y: EInt) -> Result<EInt> {
    let (mut r0, mut r1) = (x, y);
    while !r1.is_zero() {
        let (_, r) = div_rem(r0, r1)?;
        (r0, r1) = (r1, r);
    }
    Ok(r0.canonical())
}

/// Bezout certificate: returns `(g, s, t)` with `s·x + t·y = g`, `g` canonical.
pub fn ext_gcd(x: EInt, y: EInt) -> Result<(EInt, EInt, EInt)> {
    let (mut r0, mut r1) = (x, y);
    let (mut s0, mut s1) = (EInt::ONE, EInt::ZERO);
    let (mut t0, mut t1) = (EInt::ZERO, EInt::ONE);
    while !r1.is_zero() {
        let (q, r) = div_rem(r0, r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1, s0.try_sub(q.try_mul(s1)?)?);
        (t0, t1) = (t1, t0.try_sub(q.try_mul(t1)?)?);
    }
    if r0.is_zero() {
        return Ok((EInt::ZERO, EInt::ZERO, EInt::ZERO));
    }
    let (u, g) = r0.canonical_associate();
    let inv: Unit = u.inverse();
    let scale = |v: EInt| inv.checked_apply(v).ok_or(Error::Overflow("ext_gcd"));
    Ok((g, scale(s0)?, scale(t0)?))
}
