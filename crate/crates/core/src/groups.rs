//! Structure of the unit group (Z[ρ]/(η))×.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::eint::EInt;
use crate::error::{Error, Result};
use crate::euclid::gcd;
use crate::integer::{divisors, gcd_u64, gcd_u128, lcm_u128};
use crate::primes::{categorize_prime, PrimeCategory};
use crate::residues::{pow_mod, unit_classes, Modulus};
use crate::totient::phi;

/// Largest modulus norm enumerated by default.
pub const DEFAULT_ENUMERATION_BOUND: u128 = 10_000;

/// A finite abelian group `Z_{d₁} × … × Z_{d_k}` with `d₁ | d₂ | … | d_k`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct GroupStructure {
    pub order: u128,
    pub invariant_factors: Vec<u128>,
    pub cyclic: bool,
}

impl GroupStructure {
    fn from_factors(invariant_factors: Vec<u128>) -> Self {
        let order = invariant_factors.iter().product();
        let cyclic = invariant_factors.len() <= 1;
        GroupStructure { order, invariant_factors, cyclic }
    }

    pub fn exponent(&self) -> u128 {
        self.invariant_factors.last().copied().unwrap_or(1)
    }

    /// Number of elements whose order divides `m`.
    pub fn elements_dividing(&self, m: u128) -> u128 {
        self.invariant_factors.iter().map(|&d| gcd_u128(m, d)).product()
    }

    /// Multiset of element orders, keyed by order.
    pub fn order_counts(&self) -> Result<BTreeMap<u128, u128>> {
        Ok(counts_from_divisibility(&divisors(self.order)?, |m| self.elements_dividing(m)))
    }
}

/// Turns `#{x : ord(x) | m}` for every divisor `m` into `#{x : ord(x) = m}`.
fn counts_from_divisibility(divs: &[u128], f: impl Fn(u128) -> u128) -> BTreeMap<u128, u128> {
    let mut exact: BTreeMap<u128, u128> = BTreeMap::new();
    for &m in divs {
        let below: u128 = exact.iter().filter(|(&d, _)| m % d == 0).map(|(_, &c)| c).sum();
        let count = f(m) - below;
        if count > 0 {
            exact.insert(m, count);
        }
    }
    exact
}

/// Order of a unit class given the ascending divisors of the group order.
fn order_with_divisors(theta: EInt, modulus: &Modulus, divs: &[u128]) -> u128 {
    let one = modulus.one();
    divs.iter()
        .copied()
        .find(|&d| pow_mod(theta, d, modulus) == one)
        .expect("the group order annihilates every unit")
}

fn check_unit(theta: EInt, modulus: &Modulus) -> Result<()> {
    if gcd(theta, modulus.eta())? != EInt::ONE {
        return Err(Error::NotInvertible { value: theta, modulus: modulus.eta() });
    }
    Ok(())
}

/// Least `n ≥ 1` with `thetaⁿ ≡ 1 (mod η)`.
pub fn element_order(theta: EInt, eta: EInt) -> Result<u128> {
    let modulus = Modulus::new(eta)?;
    check_unit(theta, &modulus)?;
    let divs = divisors(phi(eta)?.value)?;
    Ok(order_with_divisors(theta, &modulus, &divs))
}

/// Every unit class with its multiplicative order, ordered by `(b, a)`.
pub fn element_orders(eta: EInt, bound: u128) -> Result<Vec<(EInt, u128)>> {
    let modulus = Modulus::new(eta)?;
    if modulus.norm() > bound {
        return Err(Error::EnumerationBound { norm: modulus.norm(), bound });
    }
    let divs = divisors(phi(eta)?.value)?;
    Ok(unit_classes(&modulus)?
        .into_iter()
        .map(|theta| (theta, order_with_divisors(theta, &modulus, &divs)))
        .collect())
}

/// Chains `d₁ | d₂ | … | d_k`, every `dᵢ > 1`, with product `n`.
fn divisor_chains(n: u128) -> Result<Vec<Vec<u128>>> {
    fn extend(rest: u128, prev: u128, divs: &[u128], chain: &mut Vec<u128>, out: &mut Vec<Vec<u128>>) {
        if rest == 1 {
            out.push(chain.clone());
            return;
        }
        for &d in divs {
            if d == 1 || d % prev != 0 || !rest.is_multiple_of(d) {
                continue;
            }
            // every later factor is a multiple of d
            let tail = rest / d;
            if tail == 1 || tail.is_multiple_of(d) {
                chain.push(d);
                extend(rest / d, d, divs, chain, out);
                chain.pop();
            }
        }
    }
    let divs = divisors(n)?;
    let mut out = Vec::new();
    extend(n, 1, &divs, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Invariant factors of the group whose element orders are `orders`.
///
/// Finite abelian groups are determined by `m ↦ #{x : ord(x) | m}`, so the
/// unique chain reproducing those counts is returned.
fn match_invariant_factors(orders: &[u128]) -> Result<Vec<u128>> {
    let order = orders.len() as u128;
    let divs = divisors(order)?;
    let observed: Vec<u128> =
        divs.iter().map(|&m| orders.iter().filter(|&&o| m % o == 0).count() as u128).collect();
    divisor_chains(order)?
        .into_iter()
        .find(|chain| {
            divs.iter()
                .zip(&observed)
                .all(|(&m, &count)| chain.iter().map(|&d| gcd_u128(m, d)).product::<u128>() == count)
        })
        .ok_or_else(|| Error::InvalidArgument("element orders match no abelian group".into()))
}

pub fn group_structure(eta: EInt) -> Result<GroupStructure> {
    group_structure_with_bound(eta, DEFAULT_ENUMERATION_BOUND)
}

/// Full enumeration of element orders, then matching against every
/// divisor chain of the group order.
pub fn group_structure_with_bound(eta: EInt, bound: u128) -> Result<GroupStructure> {
    let orders: Vec<u128> = element_orders(eta, bound)?.into_iter().map(|(_, o)| o).collect();
    let exponent = orders.iter().fold(1, |acc, &o| lcm_u128(acc, o));
    if exponent == orders.len() as u128 {
        let factors = if exponent == 1 { Vec::new() } else { vec![exponent] };
        return Ok(GroupStructure::from_factors(factors));
    }
    Ok(GroupStructure::from_factors(match_invariant_factors(&orders)?))
}

/// Unit classes of order ϕ_ρ(η); empty exactly when the group is not cyclic.
pub fn primitive_roots(eta: EInt) -> Result<Vec<EInt>> {
    primitive_roots_with_bound(eta, DEFAULT_ENUMERATION_BOUND)
}

pub fn primitive_roots_with_bound(eta: EInt, bound: u128) -> Result<Vec<EInt>> {
    let orders = element_orders(eta, bound)?;
    let order = orders.len() as u128;
    Ok(orders.into_iter().filter(|&(_, o)| o == order).map(|(z, _)| z).collect())
}

fn require_split(psi: EInt) -> Result<()> {
    match categorize_prime(psi) {
        Ok(PrimeCategory::SplitFactor) => Ok(()),
        _ => Err(Error::WrongCategory(psi)),
    }
}

/// Whether (Z[ρ]/(ψⁿ))× is cyclic of order `qⁿ − qⁿ⁻¹`, `q = N(ψ)`.
pub fn split_power_cyclicity_check(psi: EInt, n: u32) -> Result<bool> {
    require_split(psi)?;
    let q = psi.norm();
    let qn = q.checked_pow(n).ok_or(Error::Overflow("split power"))?;
    let structure = group_structure(psi.try_pow(n)?)?;
    Ok(structure.cyclic && structure.order == qn - qn / q)
}

/// Whether `ψⁿ = c + dρ` has `gcd(c, d) = 1`.
pub fn coprime_parts_check(psi: EInt, n: u32) -> Result<bool> {
    require_split(psi)?;
    let power = psi.try_pow(n)?;
    Ok(gcd_u64(power.a.unsigned_abs(), power.b.unsigned_abs()) == 1)
}
