use std::ffi::{CStr, CString};
use std::ptr;

use eisen_ffi::*;

fn e(a: i64, b: i64) -> EisenInt {
    EisenInt { a, b }
}

fn parse(text: &str) -> EisenInt {
    let c = CString::new(text).unwrap();
    let mut out = e(0, 0);
    assert_eq!(unsafe { eisen_parse(c.as_ptr(), &mut out) }, EisenStatus::Ok);
    out
}

#[test]
fn parse_and_format() {
    assert_eq!(parse("48-72p"), e(48, -72));
    let bad = CString::new("3x").unwrap();
    let mut out = e(0, 0);
    assert_eq!(unsafe { eisen_parse(bad.as_ptr(), &mut out) }, EisenStatus::Parse);
    assert_eq!(unsafe { eisen_parse(ptr::null(), &mut out) }, EisenStatus::NullPointer);

    let mut needed = 0usize;
    let mut small = [0 as std::ffi::c_char; 4];
    let status = unsafe { eisen_format(e(48, -72), small.as_mut_ptr(), small.len(), &mut needed) };
    assert_eq!((status, needed), (EisenStatus::BufferTooSmall, 7));
    let mut buf = [0 as std::ffi::c_char; 16];
    assert_eq!(unsafe { eisen_format(e(48, -72), buf.as_mut_ptr(), buf.len(), ptr::null_mut()) }, EisenStatus::Ok);
    assert_eq!(unsafe { CStr::from_ptr(buf.as_ptr()) }.to_str().unwrap(), "48-72p");
}

#[test]
fn arithmetic() {
    let mut out = e(0, 0);
    unsafe {
        assert_eq!(eisen_mul(e(1, -1), e(1, -1), &mut out), EisenStatus::Ok);
        assert_eq!(out, e(0, -3));
        assert_eq!(eisen_add(e(i64::MAX, 0), e(1, 0), &mut out), EisenStatus::Overflow);
        let mut n = 0u64;
        assert_eq!(eisen_norm(e(48, -72), &mut n), EisenStatus::Ok);
        assert_eq!(n, 48 * 48 + 48 * 72 + 72 * 72);
        let (mut q, mut r) = (e(0, 0), e(0, 0));
        assert_eq!(eisen_div_rem(e(48, -72), e(1, -1), &mut q, &mut r), EisenStatus::Ok);
        assert_eq!((q, r), (e(56, -8), e(0, 0)));
        assert_eq!(eisen_div_rem(e(1, 0), e(0, 0), &mut q, &mut r), EisenStatus::DivisionByZero);
        assert_eq!(eisen_gcd(e(48, -72), e(3, 0), &mut out), EisenStatus::Ok);
        assert_eq!(out, e(3, 0));
        let mut flag = -1;
        assert_eq!(eisen_is_prime(e(5, 2), &mut flag), EisenStatus::Ok);
        assert_eq!(flag, 1);
        assert_eq!(eisen_is_prime(e(4, 0), &mut flag), EisenStatus::Ok);
        assert_eq!(flag, 0);
        assert_eq!(eisen_mul(e(1, 1), e(1, 1), ptr::null_mut()), EisenStatus::NullPointer);
    }
}

#[test]
fn factorization_handle() {
    unsafe {
        let mut f = ptr::null_mut();
        assert_eq!(eisen_factor(e(48, -72), &mut f), EisenStatus::Ok);
        let mut len = 0usize;
        assert_eq!(eisen_factorization_len(f, &mut len), EisenStatus::Ok);
        assert_eq!(len, 3);
        let mut unit = e(0, 0);
        assert_eq!(eisen_factorization_unit(f, &mut unit), EisenStatus::Ok);
        let mut parts = Vec::new();
        for i in 0..len {
            let (mut p, mut k) = (e(0, 0), 0u32);
            assert_eq!(eisen_factorization_get(f, i, &mut p, &mut k), EisenStatus::Ok);
            parts.push((p, k));
        }
        assert_eq!(parts, vec![(e(2, 1), 2), (e(2, 0), 3), (e(5, 2), 1)]);
        let (mut p, mut k) = (e(0, 0), 0u32);
        assert_eq!(eisen_factorization_get(f, 3, &mut p, &mut k), EisenStatus::InvalidArgument);
        // recompose through the ABI
        let mut acc = unit;
        for (p, k) in parts {
            for _ in 0..k {
                let prev = acc;
                assert_eq!(eisen_mul(prev, p, &mut acc), EisenStatus::Ok);
            }
        }
        assert_eq!(acc, e(48, -72));
        eisen_factorization_free(f);
        eisen_factorization_free(ptr::null_mut());
        assert_eq!(eisen_factor(e(0, 0), &mut f), EisenStatus::ZeroInput);
    }
}

#[test]
fn modulus_handle() {
    unsafe {
        let mut m = ptr::null_mut();
        assert_eq!(eisen_modulus_new(parse("8+5p"), &mut m), EisenStatus::Ok);
        let mut out = e(0, 0);
        assert_eq!(eisen_modulus_reduce(m, parse("17-3p"), &mut out), EisenStatus::Ok);
        assert_eq!(out, e(12, 0));
        let mut n = 0u64;
        assert_eq!(eisen_modulus_norm(m, &mut n), EisenStatus::Ok);
        assert_eq!(n, 49);
        eisen_modulus_free(m);

        assert_eq!(eisen_modulus_new(e(0, -3), &mut m), EisenStatus::Ok);
        assert_eq!(eisen_modulus_inverse(m, e(2, 2), &mut out), EisenStatus::Ok);
        assert_eq!(out, e(0, 1));
        assert_eq!(eisen_modulus_mul(m, e(2, 2), e(0, 1), &mut out), EisenStatus::Ok);
        assert_eq!(out, e(1, 0));
        assert_eq!(eisen_modulus_inverse(m, e(3, 0), &mut out), EisenStatus::NotInvertible);
        assert_eq!(eisen_modulus_pow(m, e(2, -1), 6, &mut out), EisenStatus::Ok);
        assert_eq!(out, e(1, 0));
        eisen_modulus_free(m);

        assert_eq!(eisen_modulus_new(e(0, 0), &mut m), EisenStatus::ZeroInput);
        assert_eq!(eisen_modulus_reduce(ptr::null(), e(1, 0), &mut out), EisenStatus::NullPointer);
    }
}

#[test]
fn totient_and_groups() {
    unsafe {
        let mut v = 0u64;
        assert_eq!(eisen_phi(e(48, -72), &mut v), EisenStatus::Ok);
        assert_eq!(v, 5184);
        let mut factors = [0u64; 4];
        let (mut len, mut order) = (0usize, 0u64);
        assert_eq!(
            eisen_group_structure(e(0, -6), factors.as_mut_ptr(), factors.len(), &mut len, &mut order),
            EisenStatus::Ok
        );
        assert_eq!((&factors[..len], order), (&[3u64, 6][..], 18));
        assert_eq!(
            eisen_group_structure(e(0, -6), factors.as_mut_ptr(), 1, &mut len, &mut order),
            EisenStatus::BufferTooSmall
        );
        assert_eq!(len, 2);
    }
}

#[test]
fn status_messages() {
    for code in 0..16 {
        let text = unsafe { CStr::from_ptr(eisen_status_message(code)) };
        assert!(!text.to_bytes().is_empty());
    }
    let unknown = unsafe { CStr::from_ptr(eisen_status_message(99)) };
    assert_eq!(unknown.to_str().unwrap(), "unknown status code");
    assert_eq!(unsafe { CStr::from_ptr(eisen_status_message(EisenStatus::NotInvertible as i32)) }.to_str().unwrap(), "class is not invertible");
}
