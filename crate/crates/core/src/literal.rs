//! Text form of Eisenstein integers.
//!
//! ```text
//! expr := term (('+' | '-') term)*
//! term := INT | INT? 'p'
//! ```
//!
//! The first term may carry a leading sign. `p` stands for ρ.
//! Formatting emits `a`, `bp` or `a+bp`/`a-bp` with no spaces, writing a
//! unit coefficient on `p` as a bare `p` or `-p`.

use std::fmt;
use std::str::FromStr;

use crate::eint::EInt;
use crate::error::{Error, Result};

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Parse { offset, message: message.into() }
}

pub fn parse(text: &str) -> Result<EInt> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(err(0, "empty literal"));
    }
    let (mut a, mut b) = (0i64, 0i64);
    let mut pos = 0;
    let mut first = true;
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            b'+' | b'-' => {
                negative = bytes[pos] == b'-';
                pos += 1;
            }
            _ if first => {}
            c => return Err(err(pos, format!("expected '+' or '-', found {:?}", c as char))),
        }
        first = false;
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let has_rho = pos < bytes.len() && bytes[pos] == b'p';
        let magnitude: i128 = if start == pos {
            if !has_rho {
                return match bytes.get(pos) {
                    Some(&c) => Err(err(pos, format!("expected digit or 'p', found {:?}", c as char))),
                    None => Err(err(pos, "expected digit or 'p' at end of input")),
                };
            }
            1
        } else {
            text[start..pos].parse().map_err(|_| err(start, "integer literal out of range"))?
        };
        let value = i64::try_from(if negative { -magnitude } else { magnitude })
            .map_err(|_| err(start, "integer literal out of range"))?;
        let slot = if has_rho {
            pos += 1;
            &mut b
        } else {
            &mut a
        };
        *slot = slot.checked_add(value).ok_or_else(|| err(start, "literal overflows i64"))?;
    }
    Ok(EInt::new(a, b))
}

impl FromStr for EInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse(s)
    }
}

fn write_rho_coeff(f: &mut fmt::Formatter<'_>, b: i64, leading: bool) -> fmt::Result {
    let sign = if b < 0 { "-" } else if leading { "" } else { "+" };
    match b.unsigned_abs() {
        1 => write!(f, "{sign}p"),
        m => write!(f, "{sign}{m}p"),
    }
}

impl fmt::Display for EInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write_rho_coeff(f, b, true),
            (a, b) => {
                write!(f, "{a}")?;
                write_rho_coeff(f, b, false)
            }
        }
    }
}
