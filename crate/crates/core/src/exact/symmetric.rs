//! Newton's identities: power sums of the roots of a monic polynomial, and
//! the inverse map back to coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rational::Rational;
use crate::error::{domain, Result};

/// `p_0..=p_count` where `p_s` is the sum of the s-th powers of the roots of
/// the monic `f`, counted with multiplicity.
pub fn power_sums(f: &RatPoly, count: usize) -> Result<Vec<Rational>> {
    if !f.is_monic() {
        return domain(format!("power sums need a monic polynomial, got {f}"));
    }
    let n = f.deg();
    let a = f.coeffs();
    let mut p = Vec::with_capacity(count + 1);
    p.push(Rational::from_integer(BigInt::from(n)));
    for s in 1..=count {
        // p_s + a_{n-1} p_{s-1} + ... = -s a_{n-s}   (s <= n)
        let mut acc = Rational::zero();
        for i in 1..s.min(n) {
            acc += &a[n - i] * &p[s - i];
        }
        if s <= n {
            acc += &a[n - s] * Rational::from_integer(BigInt::from(s));
        } else if n > 0 {
            acc += &a[0] * &p[s - n];
        }
        p.push(-acc);
    }
    Ok(p)
}

/// Monic polynomial of degree `n` whose root power sums are `p_1..p_n`
/// (`sums[0]` is ignored).
pub fn from_power_sums(sums: &[Rational], n: usize) -> RatPoly {
    assert!(sums.len() > n, "need power sums p_1..p_n");
    let mut a = vec![Rational::zero(); n + 1];
    a[n] = Rational::one();
    for s in 1..=n {
        let mut acc = sums[s].clone();
        for i in 1..s {
            acc += &a[n - i] * &sums[s - i];
        }
        a[n - s] = -acc / Rational::from_integer(BigInt::from(s));
    }
    RatPoly::new(a)
}

/// `Σ g(β_i)` over the roots of the monic nonconstant `f`, with multiplicity.
pub fn sum_over_roots(g: &RatPoly, f: &RatPoly) -> Result<Rational> {
    if f.is_constant() {
        return domain("sum over roots of a constant polynomial");
    }
    let p = power_sums(f, g.deg())?;
    Ok(sum_with_power_sums(g, &p))
}

/// `Σ coeff(g, s) p_s` for precomputed power sums.
pub fn sum_with_power_sums(g: &RatPoly, p: &[Rational]) -> Rational {
    g.coeffs().iter().zip(p).fold(Rational::zero(), |acc, (c, ps)| acc + c * ps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn newton_identities() {
        assert_eq!(power_sums(&p("x^3"), 4).unwrap(), vec![int(3), int(0), int(0), int(0), int(0)]);
        let s = power_sums(&p("x^2 - 3*x + 2"), 2).unwrap();
        assert_eq!(s[1..], [int(3), int(5)]);
        let s = power_sums(&p("x^2 + 1"), 4).unwrap();
        assert_eq!(s[1..], [int(0), int(-2), int(0), int(2)]);
        assert!(power_sums(&p("2*x^2 + 1"), 3).is_err());
    }

    #[test]
    fn inverse_map() {
        let f = p("x^4 - 3/2*x^3 + 7*x - 5");
        let s = power_sums(&f, 4).unwrap();
        assert_eq!(from_power_sums(&s, 4), f);
    }

    #[test]
    fn sums_over_roots() {
        assert_eq!(sum_over_roots(&RatPoly::one(), &p("x^3 - x + 5")).unwrap(), int(3));
        assert_eq!(sum_over_roots(&p("x"), &p("x^2 - 3*x + 2")).unwrap(), int(3));
        assert_eq!(sum_over_roots(&p("x^2"), &p("x^2 + 1")).unwrap(), int(-2));
    }
}
