use num_traits::{One, Zero};

use super::poly::RatPoly;
use super::rational::Rational;
use crate::error::{domain, Result};

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn gcd(f: &RatPoly, g: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.rem(&b);
        a = b;
        b = r;
    }
    a.monic()
}

/// Extended Euclid: `(d, u, v)` with `u·f + v·g = d`, `d` the monic gcd.
pub fn ext_gcd(f: &RatPoly, g: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly)> {
    if f.is_zero() && g.is_zero() {
        return domain("ext_gcd of two zero polynomials");
    }
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (RatPoly::one(), RatPoly::zero());
    let (mut v0, mut v1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem(&r1);
        let u2 = &u0 - &(&q * &u1);
        let v2 = &v0 - &(&q * &v1);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u2);
        v0 = std::mem::replace(&mut v1, v2);
    }
    let inv = r0.lc().recip();
    Ok((r0.scale(&inv), u0.scale(&inv), v0.scale(&inv)))
}

pub fn is_squarefree(f: &RatPoly) -> bool {
    !f.is_zero() && gcd(f, &f.derivative()).is_constant()
}

/// Yun's squarefree decomposition of a nonzero polynomial:
/// `monic(f) = Π g_i^i` with the `g_i` monic, squarefree and pairwise coprime.
/// Only factors of positive degree are returned.
pub fn squarefree_decomposition(f: &RatPoly) -> Vec<(RatPoly, usize)> {
    let mut out = Vec::new();
    if f.degree().is_none_or(|d| d == 0) {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let b = gcd(&f, &df);
    let mut c = f.div_exact(&b).expect("gcd divides f");
    let mut d = &df.div_exact(&b).expect("gcd divides f'") - &c.derivative();
    let mut i = 1;
    while !c.is_constant() {
        let a = gcd(&c, &d);
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        c = c.div_exact(&a).expect("gcd divides c");
        d = &d.div_exact(&a).expect("gcd divides d") - &c.derivative();
        i += 1;
    }
    out
}

/// Product of the distinct monic irreducible factors' squarefree part.
pub fn squarefree_part(f: &RatPoly) -> RatPoly {
    if f.is_constant() {
        return RatPoly::one();
    }
    let g = gcd(f, &f.derivative());
    f.div_exact(&g).expect("gcd divides f").monic()
}

/// Polynomial square root over Q, `None` if `f` is not a perfect square.
pub fn poly_sqrt(f: &RatPoly) -> Option<RatPoly> {
    let Some(d) = f.degree() else { return Some(RatPoly::zero()) };
    if d % 2 == 1 {
        return None;
    }
    let lc = f.lc();
    let root_lc = rational_sqrt(&lc)?;
    let m = d / 2;
    // determine coefficients from the top down
    let mut r = vec![Rational::zero(); m + 1];
    r[m] = root_lc.clone();
    let two_lc = &root_lc + &root_lc;
    for k in (0..m).rev() {
        // coefficient of x^(m + k) in r^2 must equal f's
        let mut acc = f.coeff(m + k);
        for i in (k + 1)..=m {
            let j = m + k - i;
            if j > k && j <= m {
                acc -= &r[i] * &r[j];
            }
        }
        r[k] = acc / &two_lc;
    }
    let root = RatPoly::new(r);
    (&root * &root == *f).then_some(root)
}

fn rational_sqrt(q: &Rational) -> Option<Rational> {
    use num_traits::Signed;
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Is the polynomial equal to the constant one?
pub fn is_one(f: &RatPoly) -> bool {
    f.degree() == Some(0) && f.lc().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn ext_gcd_examples() {
        let f = p("2*x - 3");
        let (d, u, v) = ext_gcd(&f, &RatPoly::zero()).unwrap();
        assert_eq!(d, p("x - 3/2"));
        assert_eq!(u, RatPoly::constant(rat(1, 2)));
        assert!(v.is_zero());

        let (d, u, v) = ext_gcd(&p("x - 1"), &p("x - 1")).unwrap();
        assert_eq!((d, u, v), (p("x - 1"), RatPoly::zero(), RatPoly::one()));

        let (d, u, v) = ext_gcd(&p("x^2 - 2"), &p("x")).unwrap();
        assert_eq!(d, RatPoly::one());
        assert_eq!(u, RatPoly::constant(rat(-1, 2)));
        assert_eq!(v, p("1/2*x"));

        assert!(ext_gcd(&RatPoly::zero(), &RatPoly::zero()).is_err());
    }

    #[test]
    fn yun_decomposition() {
        let f = p("x^3 - 2*x^2 + x"); // x (x-1)^2
        let sf = squarefree_decomposition(&f);
        assert_eq!(sf, vec![(p("x"), 1), (p("x - 1"), 2)]);
        assert_eq!(squarefree_part(&f), p("x^2 - x"));
        assert!(!is_squarefree(&f));
        assert!(is_squarefree(&p("x^2 + 1")));
    }

    #[test]
    fn square_roots() {
        let g = p("x^2 - 3*x + 1/2");
        assert_eq!(poly_sqrt(&(&g * &g)), Some(g));
        assert_eq!(poly_sqrt(&p("x^2 + 1")), None);
        assert_eq!(poly_sqrt(&p("4*x^2 + 4*x + 1")), Some(p("2*x + 1")));
    }
}
