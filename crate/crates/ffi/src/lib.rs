//! C interface to the `eisen` library.
//!
//! Elements cross the boundary by value as [`EisenInt`]. Moduli and
//! factorizations are opaque handles created by `*_new`/`eisen_factor` and
//! released with the matching `*_free`. Every fallible function returns an
//! [`EisenStatus`] and writes its result through an out-pointer only on
//! success. Panics never unwind into the caller; they surface as
//! `EISEN_STATUS_INTERNAL`.

use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eisen::primes::Factorization;
use eisen::residues::Modulus;
use eisen::{EInt, Error};

/// `a + bρ`.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EisenInt {
    pub a: i64,
    pub b: i64,
}

impl From<EInt> for EisenInt {
    fn from(z: EInt) -> Self {
        EisenInt { a: z.a, b: z.b }
    }
}

impl From<EisenInt> for EInt {
    fn from(z: EisenInt) -> Self {
        EInt::new(z.a, z.b)
    }
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EisenStatus {
    Ok = 0,
    Overflow = 1,
    DivisionByZero = 2,
    ZeroInput = 3,
    NotPrime = 4,
    WrongCategory = 5,
    NotSplittable = 6,
    NotInvertible = 7,
    NotCoprime = 8,
    FactorBoundExceeded = 9,
    EnumerationBound = 10,
    Parse = 11,
    InvalidArgument = 12,
    NullPointer = 13,
    BufferTooSmall = 14,
    Internal = 15,
}

impl From<&Error> for EisenStatus {
    fn from(e: &Error) -> Self {
        match e {
            Error::Overflow(_) => EisenStatus::Overflow,
            Error::DivisionByZero => EisenStatus::DivisionByZero,
            Error::ZeroInput(_) => EisenStatus::ZeroInput,
            Error::NotPrime(_) => EisenStatus::NotPrime,
            Error::WrongCategory(_) => EisenStatus::WrongCategory,
            Error::NotSplittable(_) => EisenStatus::NotSplittable,
            Error::NotInvertible { .. } => EisenStatus::NotInvertible,
            Error::NotCoprime(..) => EisenStatus::NotCoprime,
            Error::FactorBoundExceeded { .. } => EisenStatus::FactorBoundExceeded,
            Error::EnumerationBound { .. } => EisenStatus::EnumerationBound,
            Error::Parse { .. } => EisenStatus::Parse,
            Error::InvalidArgument(_) => EisenStatus::InvalidArgument,
        }
    }
}

/// Opaque modulus handle.
pub struct EisenModulus(Modulus);

/// Opaque factorization handle.
pub struct EisenFactorization(Factorization);

type Step = Result<(), EisenStatus>;

fn guard(f: impl FnOnce() -> Step) -> EisenStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => EisenStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => EisenStatus::Internal,
    }
}

fn lift<T>(r: eisen::Result<T>) -> Result<T, EisenStatus> {
    r.map_err(|e| EisenStatus::from(&e))
}

unsafe fn write<T>(out: *mut T, value: T) -> Step {
    if out.is_null() {
        return Err(EisenStatus::NullPointer);
    }
    out.write(value);
    Ok(())
}

unsafe fn borrow<'a, T>(p: *const T) -> Result<&'a T, EisenStatus> {
    p.as_ref().ok_or(EisenStatus::NullPointer)
}

const STATUSES: [EisenStatus; 16] = [
    EisenStatus::Ok,
    EisenStatus::Overflow,
    EisenStatus::DivisionByZero,
    EisenStatus::ZeroInput,
    EisenStatus::NotPrime,
    EisenStatus::WrongCategory,
    EisenStatus::NotSplittable,
    EisenStatus::NotInvertible,
    EisenStatus::NotCoprime,
    EisenStatus::FactorBoundExceeded,
    EisenStatus::EnumerationBound,
    EisenStatus::Parse,
    EisenStatus::InvalidArgument,
    EisenStatus::NullPointer,
    EisenStatus::BufferTooSmall,
    EisenStatus::Internal,
];

/// Static description of a status code; unknown codes get a generic text.
/// Never null.
#[no_mangle]
pub extern "C" fn eisen_status_message(code: i32) -> *const c_char {
    let Some(&status) = usize::try_from(code).ok().and_then(|i| STATUSES.get(i)) else {
        return c"unknown status code".as_ptr();
    };
    let text: &'static CStr = match status {
        EisenStatus::Ok => c"ok",
        EisenStatus::Overflow => c"integer overflow",
        EisenStatus::DivisionByZero => c"division by zero",
        EisenStatus::ZeroInput => c"operation undefined on zero",
        EisenStatus::NotPrime => c"not an Eisenstein prime",
        EisenStatus::WrongCategory => c"prime of the wrong category",
        EisenStatus::NotSplittable => c"not a rational prime congruent to 1 mod 3",
        EisenStatus::NotInvertible => c"class is not invertible",
        EisenStatus::NotCoprime => c"arguments are not coprime",
        EisenStatus::FactorBoundExceeded => c"trial division bound exceeded",
        EisenStatus::EnumerationBound => c"enumeration bound exceeded",
        EisenStatus::Parse => c"malformed literal",
        EisenStatus::InvalidArgument => c"invalid argument",
        EisenStatus::NullPointer => c"null pointer argument",
        EisenStatus::BufferTooSmall => c"output buffer too small",
        EisenStatus::Internal => c"internal error",
    };
    text.as_ptr()
}

/// Parses a NUL-terminated literal such as `"48-72p"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_parse(text: *const c_char, out: *mut EisenInt) -> EisenStatus {
    guard(|| {
        if text.is_null() {
            return Err(EisenStatus::NullPointer);
        }
        let s = CStr::from_ptr(text).to_str().map_err(|_| EisenStatus::Parse)?;
        let z = lift(eisen::literal::parse(s))?;
        write(out, z.into())
    })
}

/// Writes the canonical text of `x` with a trailing NUL into `buf`.
/// `needed` (if non-null) receives the required size including the NUL,
/// also when the buffer is too small.
///
/// # Safety
/// `buf` must point to `len` writable bytes, or be null when `len` is 0.
#[no_mangle]
pub unsafe extern "C" fn eisen_format(x: EisenInt, buf: *mut c_char, len: usize, needed: *mut usize) -> EisenStatus {
    guard(|| {
        let text = EInt::from(x).to_string();
        let size = text.len() + 1;
        if !needed.is_null() {
            needed.write(size);
        }
        if len < size {
            return Err(EisenStatus::BufferTooSmall);
        }
        if buf.is_null() {
            return Err(EisenStatus::NullPointer);
        }
        ptr::copy_nonoverlapping(text.as_ptr().cast::<c_char>(), buf, text.len());
        buf.add(text.len()).write(0);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_add(x: EisenInt, y: EisenInt, out: *mut EisenInt) -> EisenStatus {
    guard(|| write(out, lift(EInt::from(x).try_add(y.into()))?.into()))
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_mul(x: EisenInt, y: EisenInt, out: *mut EisenInt) -> EisenStatus {
    guard(|| write(out, lift(EInt::from(x).try_mul(y.into()))?.into()))
}

/// Norm `a² − ab + b²`; `EISEN_STATUS_OVERFLOW` if it exceeds `uint64_t`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_norm(x: EisenInt, out: *mut u64) -> EisenStatus {
    guard(|| {
        let n = u64::try_from(EInt::from(x).norm()).map_err(|_| EisenStatus::Overflow)?;
        write(out, n)
    })
}

/// # Safety
/// `quotient` and `remainder` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_div_rem(
    x: EisenInt,
    d: EisenInt,
    quotient: *mut EisenInt,
    remainder: *mut EisenInt,
) -> EisenStatus {
    guard(|| {
        if quotient.is_null() || remainder.is_null() {
            return Err(EisenStatus::NullPointer);
        }
        let (q, r) = lift(eisen::euclid::div_rem(x.into(), d.into()))?;
        write(quotient, q.into())?;
        write(remainder, r.into())
    })
}

/// Canonical gcd.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_gcd(x: EisenInt, y: EisenInt, out: *mut EisenInt) -> EisenStatus {
    guard(|| write(out, lift(eisen::euclid::gcd(x.into(), y.into()))?.into()))
}

/// Writes 1 if `x` is prime, 0 otherwise.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_is_prime(x: EisenInt, out: *mut i32) -> EisenStatus {
    guard(|| write(out, eisen::primes::is_prime(x.into()) as i32))
}

/// ϕ_ρ(η); `EISEN_STATUS_OVERFLOW` if it exceeds `uint64_t`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_phi(eta: EisenInt, out: *mut u64) -> EisenStatus {
    guard(|| {
        let v = lift(eisen::totient::phi(eta.into()))?.value;
        write(out, u64::try_from(v).map_err(|_| EisenStatus::Overflow)?)
    })
}

/// Factors `x` into a new handle owned by the caller.
///
/// # Safety
/// `out` must be writable. Release the handle with `eisen_factorization_free`.
#[no_mangle]
pub unsafe extern "C" fn eisen_factor(x: EisenInt, out: *mut *mut EisenFactorization) -> EisenStatus {
    guard(|| {
        let f = lift(eisen::primes::factor(x.into()))?;
        write(out, Box::into_raw(Box::new(EisenFactorization(f))))
    })
}

/// # Safety
/// `f` must come from `eisen_factor` and not be freed yet; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eisen_factorization_free(f: *mut EisenFactorization) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Number of distinct prime factors.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_factorization_len(f: *const EisenFactorization, out: *mut usize) -> EisenStatus {
    guard(|| write(out, borrow(f)?.0.factors.len()))
}

/// The unit in front of the factorization.
///
/// # Safety
/// `f` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_factorization_unit(f: *const EisenFactorization, out: *mut EisenInt) -> EisenStatus {
    guard(|| write(out, borrow(f)?.0.unit.to_eint().into()))
}

/// The `index`-th canonical prime and its exponent, ordered by norm.
///
/// # Safety
/// `f` must be a live handle; `prime` and `exponent` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_factorization_get(
    f: *const EisenFactorization,
    index: usize,
    prime: *mut EisenInt,
    exponent: *mut u32,
) -> EisenStatus {
    guard(|| {
        let pp = borrow(f)?.0.factors.get(index).ok_or(EisenStatus::InvalidArgument)?;
        if prime.is_null() || exponent.is_null() {
            return Err(EisenStatus::NullPointer);
        }
        write(prime, pp.prime.into())?;
        write(exponent, pp.exponent)
    })
}

/// Creates a modulus handle for `eta ≠ 0`.
///
/// # Safety
/// `out` must be writable. Release the handle with `eisen_modulus_free`.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_new(eta: EisenInt, out: *mut *mut EisenModulus) -> EisenStatus {
    guard(|| {
        let m = lift(Modulus::new(eta.into()))?;
        write(out, Box::into_raw(Box::new(EisenModulus(m))))
    })
}

/// # Safety
/// `m` must come from `eisen_modulus_new` and not be freed yet; null is ignored.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_free(m: *mut EisenModulus) {
    if !m.is_null() {
        drop(Box::from_raw(m));
    }
}

/// Number of residue classes, `N(eta)`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_norm(m: *const EisenModulus, out: *mut u64) -> EisenStatus {
    guard(|| write(out, borrow(m)?.0.norm() as u64))
}

/// Canonical representative of `x`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_reduce(m: *const EisenModulus, x: EisenInt, out: *mut EisenInt) -> EisenStatus {
    guard(|| write(out, borrow(m)?.0.reduce(x.into()).into()))
}

/// Reduced product `x·y`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_mul(
    m: *const EisenModulus,
    x: EisenInt,
    y: EisenInt,
    out: *mut EisenInt,
) -> EisenStatus {
    guard(|| write(out, borrow(m)?.0.mul(x.into(), y.into()).into()))
}

/// `x⁻¹`, or `EISEN_STATUS_NOT_INVERTIBLE`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_inverse(m: *const EisenModulus, x: EisenInt, out: *mut EisenInt) -> EisenStatus {
    guard(|| {
        let inv = lift(eisen::residues::inverse_mod(x.into(), &borrow(m)?.0))?;
        write(out, inv.into())
    })
}

/// `x^k`.
///
/// # Safety
/// `m` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_modulus_pow(
    m: *const EisenModulus,
    x: EisenInt,
    k: u64,
    out: *mut EisenInt,
) -> EisenStatus {
    guard(|| write(out, eisen::residues::pow_mod(x.into(), k as u128, &borrow(m)?.0).into()))
}

/// Invariant factors of the unit group modulo `eta`.
///
/// Writes up to `cap` factors into `factors`, the factor count into `len`
/// and the group order into `order`. Returns `EISEN_STATUS_BUFFER_TOO_SMALL`
/// (with `len` set) when `cap` is insufficient.
///
/// # Safety
/// `factors` must hold `cap` entries; `len` and `order` must be writable.
#[no_mangle]
pub unsafe extern "C" fn eisen_group_structure(
    eta: EisenInt,
    factors: *mut u64,
    cap: usize,
    len: *mut usize,
    order: *mut u64,
) -> EisenStatus {
    guard(|| {
        let s = lift(eisen::groups::group_structure(eta.into()))?;
        write(len, s.invariant_factors.len())?;
        write(order, s.order as u64)?;
        if s.invariant_factors.len() > cap {
            return Err(EisenStatus::BufferTooSmall);
        }
        if factors.is_null() && !s.invariant_factors.is_empty() {
            return Err(EisenStatus::NullPointer);
        }
        for (i, &d) in s.invariant_factors.iter().enumerate() {
            factors.add(i).write(d as u64);
        }
        Ok(())
    })
}
