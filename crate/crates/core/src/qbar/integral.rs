//! Integrality: algebraic integers, denominators and divisibility by
//! rational integers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::AlgebraicNumber;
use crate::error::{consistency, domain, Result};
use crate::exact::integers::{prime_divisors, valuation};
use crate::exact::poly::{IntPoly, RatPoly};
use crate::exact::rational::{lcm_denominators, Rational};

/// True iff the minimal polynomial has integer coefficients.
pub fn is_algebraic_integer(a: &AlgebraicNumber) -> bool {
    a.minpoly().is_integral()
}

/// A multiplier `d` clearing the denominators of `α`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegerMultiplier {
    /// Least `d >= 1` with `dα` integral.
    pub d: BigInt,
    /// Monic minimal polynomial of `dα`.
    pub poly: IntPoly,
    /// Common denominator of the minimal polynomial's coefficients.
    pub common_denominator: BigInt,
    /// Monic polynomial annihilating `common_denominator · α`.
    pub common_poly: IntPoly,
}

/// Coefficients `a_i d^(n-i)`: the monic minimal polynomial of `dα`.
fn scaled_minpoly(a: &AlgebraicNumber, d: &BigInt) -> Option<IntPoly> {
    let f = a.minpoly();
    let n = f.deg();
    let dq = Rational::from_integer(d.clone());
    let mut out = Vec::with_capacity(n + 1);
    let mut pw = Rational::one();
    for i in (0..=n).rev() {
        let c = f.coeff(i) * &pw;
        if !c.is_integer() {
            return None;
        }
        out.push(c.to_integer());
        pw *= &dq;
    }
    out.reverse();
    Some(IntPoly::new(out))
}

/// Least `d >= 1` such that `d` times every root of the monic `f` is an
/// algebraic integer, i.e. `d^(n-i) a_i ∈ Z` for all `i`.
pub fn root_multiplier(f: &RatPoly) -> BigInt {
    let n = f.deg();
    let common = lcm_denominators(f.coeffs());
    // v_q(d) (n - i) >= v_q(den a_i) for every prime q and every i < n
    let mut d = BigInt::one();
    for q in prime_divisors(&common) {
        let mut need = 0u32;
        for i in 0..n {
            let c = f.coeff(i);
            if c.is_zero() {
                continue;
            }
            let v = valuation(c.denom(), &q);
            need = need.max(v.div_ceil((n - i) as u32));
        }
        d *= num_traits::pow(q.clone(), need as usize);
    }
    d
}

pub fn integer_multiplier(a: &AlgebraicNumber) -> Result<IntegerMultiplier> {
    let f = a.minpoly();
    let common = lcm_denominators(f.coeffs());
    let Some(common_poly) = scaled_minpoly(a, &common) else {
        return consistency("the common denominator does not clear the minimal polynomial");
    };
    let d = root_multiplier(f);
    let Some(poly) = scaled_minpoly(a, &d) else {
        return consistency("the minimal multiplier does not clear the minimal polynomial");
    };
    if !common.is_multiple_of(&d) {
        return consistency("the minimal multiplier does not divide the common denominator");
    }
    for q in prime_divisors(&d) {
        if scaled_minpoly(a, &(&d / &q)).is_some() {
            return consistency("the multiplier is not minimal");
        }
    }
    Ok(IntegerMultiplier { d, poly, common_denominator: common, common_poly })
}

/// Whether `α / n` is an algebraic integer, for algebraic integer `α`.
pub fn divisible_by_integer(a: &AlgebraicNumber, n: &BigInt) -> Result<bool> {
    if !is_algebraic_integer(a) {
        return domain("divisibility is defined for algebraic integers");
    }
    if n.is_zero() {
        return domain("division by zero");
    }
    // the minimal polynomial of α/n has coefficients a_i / n^(deg - i)
    let f = a.minpoly();
    let deg = f.deg();
    let mut pw = BigInt::one();
    for i in (0..deg).rev() {
        pw *= n;
        if !f.coeff(i).to_integer().is_multiple_of(&pw) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Primes `p` dividing `α`. Candidates come from the norm `(-1)^m f(0)`.
pub fn prime_divisor_set(a: &AlgebraicNumber) -> Result<Vec<BigInt>> {
    if a.is_zero() {
        return domain("zero is divisible by every prime");
    }
    if !is_algebraic_integer(a) {
        return domain("divisibility is defined for algebraic integers");
    }
    let norm = a.minpoly().coeff(0).to_integer().abs();
    let mut out = Vec::new();
    for p in prime_divisors(&norm) {
        if divisible_by_integer(a, &p)? {
            out.push(p);
        }
    }
    Ok(out)
}
