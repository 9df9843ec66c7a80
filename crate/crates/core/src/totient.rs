//! The Eisenstein totient ϕ_ρ(η) = |(Z[ρ]/(η))×|.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::eint::{canonical_up_to_norm, EInt};
use crate::error::{Error, Result};
use crate::euclid::gcd;
use crate::primes::{categorize_prime, factor, PrimePower};
use crate::residues::{pow_mod, Modulus};

/// ϕ_ρ(η) with the contribution of each prime-power factor.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct PhiValue {
    pub value: u128,
    pub breakdown: Vec<(PrimePower, u128)>,
}

/// ϕ_ρ(γⁿ) for a prime `γ`:
/// `3ⁿ − 3ⁿ⁻¹` for the even prime, `p²ⁿ − p²ⁿ⁻²` for inert `p`,
/// `qⁿ − qⁿ⁻¹` for a split factor of norm `q`.
pub fn phi_prime_power(gamma: EInt, n: u32) -> Result<u128> {
    if n == 0 {
        return Err(Error::InvalidArgument("exponent must be at least 1".into()));
    }
    let overflow = || Error::Overflow("phi_prime_power");
    categorize_prime(gamma)?;
    // all three closed forms are N(γ)ⁿ − N(γ)ⁿ⁻¹
    let q = gamma.norm();
    let high = q.checked_pow(n).ok_or_else(overflow)?;
    Ok(high - high / q)
}

pub fn phi(eta: EInt) -> Result<PhiValue> {
    if eta.is_zero() {
        return Err(Error::ZeroInput("phi"));
    }
    let factorization = factor(eta)?;
    let mut value: u128 = 1;
    let mut breakdown = Vec::with_capacity(factorization.factors.len());
    for pp in factorization.factors {
        let part = phi_prime_power(pp.prime, pp.exponent)?;
        value = value.checked_mul(part).ok_or(Error::Overflow("phi"))?;
        breakdown.push((pp, part));
    }
    Ok(PhiValue { value, breakdown })
}

/// Whether `theta^ϕ(η) ≡ 1 (mod η)`; `theta` must be coprime to `eta`.
pub fn euler_fermat_check(theta: EInt, eta: EInt) -> Result<bool> {
    let modulus = Modulus::new(eta)?;
    if gcd(theta, eta)? != EInt::ONE {
        return Err(Error::NotCoprime(theta, eta));
    }
    let exponent = phi(eta)?.value;
    Ok(pow_mod(theta, exponent, &modulus) == modulus.one())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum PhiParity {
    One,
    Three,
    Even,
}

/// Parity class of ϕ_ρ(η), read off the factorization: units give 1, the
/// associates of 2 give 3, and any other prime-power factor contributes an
/// even number.
pub fn phi_parity(eta: EInt) -> Result<PhiParity> {
    if eta.is_zero() {
        return Err(Error::ZeroInput("phi"));
    }
    let factorization = factor(eta)?;
    Ok(match factorization.factors.as_slice() {
        [] => PhiParity::One,
        [PrimePower { prime, exponent: 1 }] if *prime == EInt::from_int(2) => PhiParity::Three,
        _ => PhiParity::Even,
    })
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct TotientScan {
    /// Each attained value with the canonical η attaining it, sorted by `(norm, a, b)`.
    pub attained: BTreeMap<u64, Vec<EInt>>,
    /// Even values up to the largest attained value that never occur.
    pub missing_even: Vec<u64>,
}

/// ϕ_ρ over every canonical η with `1 ≤ N(η) ≤ max_norm`.
pub fn totient_value_scan(max_norm: u64) -> Result<TotientScan> {
    if max_norm == 0 {
        return Err(Error::InvalidArgument("max_norm must be at least 1".into()));
    }
    let mut attained: BTreeMap<u64, Vec<EInt>> = BTreeMap::new();
    for eta in canonical_up_to_norm(max_norm) {
        let value = phi(eta)?.value as u64;
        attained.entry(value).or_default().push(eta);
    }
    let top = attained.keys().next_back().copied().unwrap_or(0);
    let missing_even = (2..=top).step_by(2).filter(|v| !attained.contains_key(v)).collect();
    Ok(TotientScan { attained, missing_even })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::primes::EVEN_PRIME;

    fn e(a: i64, b: i64) -> EInt {
        EInt::new(a, b)
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(phi_prime_power(EInt::BETA, 2).unwrap(), 6);
        assert_eq!(phi_prime_power(e(2, 0), 3).unwrap(), 48);
        assert_eq!(phi_prime_power(e(5, 2), 1).unwrap(), 18);
        assert!(matches!(phi_prime_power(e(4, 0), 1), Err(Error::NotPrime(_))));
    }

    #[test]
    fn phi_examples() {
        let v = phi(e(48, -72)).unwrap();
        assert_eq!(v.value, 5184);
        let parts: Vec<(EInt, u32, u128)> =
            v.breakdown.iter().map(|(pp, c)| (pp.prime, pp.exponent, *c)).collect();
        assert_eq!(parts, vec![(EVEN_PRIME, 2, 6), (e(2, 0), 3, 48), (e(5, 2), 1, 18)]);
        assert_eq!(phi(e(1, 1)).unwrap().value, 1);
        assert_eq!(phi(EInt::BETA.try_pow(3).unwrap()).unwrap().value, 18);
        assert_eq!(phi(EInt::ZERO), Err(Error::ZeroInput("phi")));
    }

    #[test]
    fn euler_fermat_examples() {
        let beta2 = EInt::BETA * EInt::BETA;
        assert!(euler_fermat_check(e(2, -1), beta2).unwrap());
        assert!(euler_fermat_check(EInt::ONE, e(17, -3)).unwrap());
        assert!(euler_fermat_check(e(4, 3), e(0, -6)).unwrap());
        assert!(matches!(euler_fermat_check(e(3, 0), beta2), Err(Error::NotCoprime(..))));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(phi_parity(e(2, 0)).unwrap(), PhiParity::Three);
        assert_eq!(phi_parity(e(-2, -2)).unwrap(), PhiParity::Three);
        assert_eq!(phi_parity(e(0, -1)).unwrap(), PhiParity::One);
        assert_eq!(phi_parity(e(5, 2)).unwrap(), PhiParity::Even);
        assert_eq!(phi_parity(e(4, 0)).unwrap(), PhiParity::Even);
    }

    #[test]
    fn scan_examples() {
        let scan = totient_value_scan(9).unwrap();
        // 3 is the canonical associate of β² = −3ρ
        assert!(scan.attained[&6].contains(&e(3, 0)));
        let scan = totient_value_scan(1).unwrap();
        assert_eq!(scan.attained.len(), 1);
        assert_eq!(scan.attained[&1], vec![EInt::ONE]);
        assert!(scan.missing_even.is_empty());
        let json = serde_json::to_string(&totient_value_scan(4).unwrap()).unwrap();
        assert_eq!(json, r#"{"attained":{"1":["1"],"2":["2+p"],"3":["2"]},"missing_even":[]}"#);
    }
}
