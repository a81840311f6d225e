//! Resultants by the subresultant pseudo-remainder sequence over Z, and the
//! bivariate eliminants used for algebraic-number arithmetic, obtained by
//! evaluating at integer points and interpolating.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::{IntPoly, RatPoly};
use super::rational::Rational;
use crate::error::{domain, Result};

/// `Res(f, g) = lc(f)^deg(g) · Π g(α_i)` over the roots of `f`.
pub fn resultant(f: &RatPoly, g: &RatPoly) -> Result<Rational> {
    if f.is_zero() || g.is_zero() {
        return domain("resultant of a zero polynomial");
    }
    let (cf, pf) = f.primitive_int();
    let (cg, pg) = g.primitive_int();
    let r = int_resultant(&pf, &pg);
    let scale = num_traits::pow(cf, g.deg()) * num_traits::pow(cg, f.deg());
    Ok(Rational::from_integer(r) * scale)
}

/// Subresultant PRS resultant of two nonzero integer polynomials.
pub fn int_resultant(f: &IntPoly, g: &IntPoly) -> BigInt {
    assert!(!f.is_zero() && !g.is_zero(), "resultant of a zero polynomial");
    let (df, dg) = (f.deg(), g.deg());
    if df == 0 {
        return num_traits::pow(f.lc(), dg);
    }
    if dg == 0 {
        return num_traits::pow(g.lc(), df);
    }
    let (mut a, mut b, mut sign) = if df < dg {
        (g.clone(), f.clone(), if (df * dg) % 2 == 1 { -1 } else { 1 })
    } else {
        (f.clone(), g.clone(), 1)
    };
    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
    let mut gg = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            sign = -sign;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        if r.is_zero() {
            return BigInt::zero();
        }
        let div = &gg * num_traits::pow(h.clone(), delta);
        b = r.div_scalar_exact(&div);
        gg = a.lc();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h.clone()
        } else {
            num_traits::pow(gg.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.deg() == 0 {
            let da = a.deg();
            let hh = if da == 0 {
                h.clone()
            } else {
                num_traits::pow(b.lc(), da) / num_traits::pow(h.clone(), da - 1)
            };
            let res = t * hh;
            return if sign < 0 { -res } else { res };
        }
    }
}

/// Discriminant-free helper: interpolate a polynomial of degree `<= deg` from
/// its values at `x = 0, 1, ..., deg` (Newton divided differences).
pub fn interpolate_at_naturals(values: &[Rational]) -> RatPoly {
    let n = values.len();
    let mut dd: Vec<Rational> = values.to_vec();
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / Rational::from_integer(BigInt::from(level));
        }
    }
    // Newton form: dd[0] + dd[1] x + dd[2] x(x-1) + ...
    let mut poly = RatPoly::zero();
    for i in (0..n).rev() {
        let factor = RatPoly::new(vec![-Rational::from_integer(BigInt::from(i)), Rational::one()]);
        poly = &(&poly * &factor) + &RatPoly::constant(dd[i].clone());
    }
    poly
}

/// Build a polynomial in x of degree at most `deg` whose value at each integer
/// x0 is `eval(x0)`.
fn eliminate(deg: usize, mut eval: impl FnMut(&Rational) -> Result<Rational>) -> Result<RatPoly> {
    let mut values = Vec::with_capacity(deg + 1);
    for i in 0..=deg {
        values.push(eval(&Rational::from_integer(BigInt::from(i)))?);
    }
    Ok(interpolate_at_naturals(&values))
}

/// `Res_y(f(y), g(x - y))`: its roots are all sums `α_i + β_j`.
pub fn sum_annihilator(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    let (m, n) = (f.deg(), g.deg());
    let g_neg = g.negate_var();
    eliminate(m * n, |x0| resultant(f, &g_neg.shift(&-x0)))
}

/// `Res_y(f(y), y^deg(g) g(x / y))`: its roots are all products `α_i β_j`.
pub fn product_annihilator(f: &RatPoly, g: &RatPoly) -> Result<RatPoly> {
    let (m, n) = (f.deg(), g.deg());
    eliminate(m * n, |x0| {
        // y^n g(x0 / y) = Σ g_i x0^i y^(n-i)
        let mut coeffs = vec![Rational::zero(); n + 1];
        let mut pw = Rational::one();
        for i in 0..=n {
            coeffs[n - i] = g.coeff(i) * &pw;
            pw *= x0;
        }
        let h = RatPoly::new(coeffs);
        if h.is_zero() {
            return Ok(Rational::zero());
        }
        resultant(f, &h)
    })
}

/// `Res_y(h(y), x - a(y))` for monic `h`: the characteristic polynomial of
/// multiplication by `a(θ)` in `Q[θ] = Q[y]/(h)`.
pub fn char_poly_mod(h: &RatPoly, a: &RatPoly) -> Result<RatPoly> {
    let n = h.deg();
    let r = eliminate(n, |x0| {
        let g = &RatPoly::constant(x0.clone()) - a;
        if g.is_zero() {
            return Ok(Rational::zero());
        }
        resultant(h, &g)
    })?;
    // Res_y(h, x - a) = Π (x - a(θ_i)) when h is monic.
    let lc = r.lc();
    Ok(if lc.is_one() || r.is_zero() { r } else { r.scale(&lc.recip()) })
}

/// Sylvester-matrix determinant, used only to cross-check small cases.
pub fn sylvester_resultant(f: &RatPoly, g: &RatPoly) -> Rational {
    let (m, n) = (f.deg(), g.deg());
    let size = m + n;
    if size == 0 {
        return Rational::one();
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for row in 0..n {
        for (k, c) in f.coeffs().iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in g.coeffs().iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    super::linalg::determinant(mat)
}

pub fn sign_of(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn resultant_examples() {
        let g = p("x^3 - 2*x + 7");
        assert_eq!(resultant(&p("x - 3"), &g).unwrap(), g.eval(&int(3)));
        assert_eq!(resultant(&p("x^2 + x + 1"), &RatPoly::one()).unwrap(), int(1));
        assert_eq!(resultant(&p("x^2 - 2"), &p("x^2 - 3")).unwrap(), int(1));
        assert_eq!(resultant(&p("x^2 - 1"), &p("x - 1")).unwrap(), int(0));
        assert!(resultant(&RatPoly::zero(), &g).is_err());
    }

    #[test]
    fn agrees_with_sylvester() {
        let cases = [
            ("3*x^4 - x + 2", "x^3 + 5*x^2 - 1"),
            ("1/2*x^2 + x", "2*x^3 - 7"),
            ("x^4 + 1", "x^2 - x"),
            ("-x^3 + 2*x", "x^4 - 3*x^2 + 1"),
        ];
        for (a, b) in cases {
            let (a, b) = (p(a), p(b));
            assert_eq!(resultant(&a, &b).unwrap(), sylvester_resultant(&a, &b), "{a} / {b}");
        }
    }

    #[test]
    fn annihilators() {
        let s2 = p("x^2 - 2");
        let s3 = p("x^2 - 3");
        assert_eq!(sum_annihilator(&s2, &s3).unwrap(), p("x^4 - 10*x^2 + 1"));
        assert_eq!(product_annihilator(&s2, &s3).unwrap(), p("x^4 - 12*x^2 + 36"));
        assert_eq!(char_poly_mod(&s2, &p("x + 1")).unwrap(), p("x^2 - 2*x - 1"));
        assert_eq!(interpolate_at_naturals(&[int(1), int(2), int(5)]), p("x^2 + 1"));
    }
}
