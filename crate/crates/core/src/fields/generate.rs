//! Primitive elements for `Q(α_1, ..., α_k)`, one generator at a time.
//!
//! With `K = Q(θ)` built so far and a new generator `γ`, the candidate
//! `θ' = θ + kγ` for `k = 1, 2, ...` has its minimal polynomial among the
//! factors of the relative norm `Res_t(h(t), g_t((x - t)/k))`, where `g` is
//! the minimal polynomial of `γ` with the roots already known in `K` divided
//! out. `θ'` is primitive exactly when `f_γ(y)` and `h(θ' - ky)` have a
//! linear gcd over `Q(θ')`; the degree-1 subresultant then gives `γ` as a
//! polynomial in `θ'`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{FieldElement, NumberField};
use crate::error::{consistency, domain, Error, Result};
use crate::exact::factor::factor_rational;
use crate::exact::linalg::{determinant, solve, Matrix};
use crate::exact::poly::RatPoly;
use crate::exact::rational::Rational;
use crate::exact::resultant::{interpolate_at_naturals, resultant};
use crate::numerics::ball::ComplexBall;
use crate::qbar::{same_value, select_root, AlgebraicNumber};

const MAX_WEIGHT: i64 = 60;

fn q(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `r(s) mod m`.
fn compose_mod(r: &RatPoly, s: &RatPoly, m: &RatPoly) -> RatPoly {
    let mut acc = RatPoly::zero();
    for c in r.coeffs().iter().rev() {
        acc = (&(&acc * s) + &RatPoly::constant(c.clone())).rem(m);
    }
    acc
}

/// Quotient of `g` (coefficients mod `h`) by the monic linear `y - r`.
fn divide_linear(g: &[RatPoly], r: &RatPoly, h: &RatPoly) -> Result<Vec<RatPoly>> {
    let d = g.len() - 1;
    let mut out = vec![RatPoly::zero(); d];
    let mut carry = RatPoly::zero();
    for i in (1..=d).rev() {
        carry = (&g[i] + &(&carry * r)).rem(h);
        out[i - 1] = carry.clone();
    }
    let rem = (&g[0] + &(&carry * r)).rem(h);
    if !rem.is_zero() {
        return consistency("a known root does not divide the minimal polynomial");
    }
    Ok(out)
}

/// `Res_t(h(t), k^d g_t((x - t)/k))` as a polynomial in `x`.
fn relative_norm(h: &RatPoly, g: &[RatPoly], k: i64) -> Result<RatPoly> {
    let n = h.deg();
    let d = g.len() - 1;
    let big = n * d;
    let kq = q(k);
    let mut values = Vec::with_capacity(big + 1);
    for x0 in 0..=big {
        // Σ_j g_j(t) (x0 - t)^j k^(d-j)
        let lin = RatPoly::new(vec![q(x0 as i64), -Rational::one()]);
        let mut p = RatPoly::zero();
        let mut pw = RatPoly::one();
        for (j, gj) in g.iter().enumerate() {
            let kk = num_traits::pow(kq.clone(), d - j);
            p = &p + &(&(gj * &pw).rem(h)).scale(&kk);
            pw = (&pw * &lin).rem(h);
        }
        let p = p.rem(h);
        values.push(if p.is_zero() { Rational::zero() } else { resultant(h, &p)? });
    }
    let r = interpolate_at_naturals(&values);
    if r.deg() != big {
        return consistency("relative norm has the wrong degree");
    }
    Ok(r.monic())
}

/// Coefficients `(s_11, s_10)` of the degree-1 subresultant of `a` and `b`,
/// both of degree at least 2, from the determinantal definition.
fn subresultant_one(a: &RatPoly, b: &RatPoly) -> (Rational, Rational) {
    let (m, n) = (a.deg(), b.deg());
    let size = m + n - 2;
    let width = m + n - 1;
    // row vectors over y^(width-1) .. y^0
    let row = |p: &RatPoly, shift: usize| -> Vec<Rational> {
        let mut v = vec![Rational::zero(); width];
        for (i, c) in p.coeffs().iter().enumerate() {
            v[width - 1 - (i + shift)] = c.clone();
        }
        v
    };
    let mut rows = Vec::with_capacity(size);
    for s in (0..n - 1).rev() {
        rows.push(row(a, s));
    }
    for s in (0..m - 1).rev() {
        rows.push(row(b, s));
    }
    let pick = |last: usize| -> Rational {
        let mat: Matrix = rows
            .iter()
            .map(|r| {
                let mut v: Vec<Rational> = r[..size - 1].to_vec();
                v.push(r[last].clone());
                v
            })
            .collect();
        determinant(mat)
    };
    (pick(width - 2), pick(width - 1))
}

/// `γ` as a polynomial in `θ'` (a root of `h2`), or `None` when `f(y)` and
/// `h(θ' - ky)` have a gcd of degree above one.
fn linear_common_root(f: &RatPoly, h: &RatPoly, k: i64, h2: &RatPoly) -> Result<Option<RatPoly>> {
    let (m, n) = (f.deg(), h.deg());
    let bound = (m - 1) * n;
    let mut s11 = Vec::with_capacity(bound + 1);
    let mut s10 = Vec::with_capacity(bound + 1);
    for x0 in 0..=bound {
        let inner = RatPoly::new(vec![q(x0 as i64), q(-k)]);
        let b = h.compose(&inner);
        let (u, v) = subresultant_one(f, &b);
        s11.push(u);
        s10.push(v);
    }
    let a = interpolate_at_naturals(&s11).rem(h2);
    if a.is_zero() {
        return Ok(None);
    }
    let b = interpolate_at_naturals(&s10).rem(h2);
    let Some(u) = divide_mod(&b, &a, h2) else {
        return consistency("the candidate minimal polynomial is reducible");
    };
    Ok(Some(u.scale(&-Rational::one())))
}

/// `b / a mod h` from the linear system `(a · u) mod h = b`; `None` when
/// `a` is a zero divisor.
fn divide_mod(b: &RatPoly, a: &RatPoly, h: &RatPoly) -> Option<RatPoly> {
    let n = h.deg();
    let mut cols = Vec::with_capacity(n);
    let mut cur = a.rem(h);
    for _ in 0..n {
        cols.push(cur.clone());
        cur = (&cur * &RatPoly::x()).rem(h);
    }
    let mat: Matrix = (0..n).map(|r| (0..n).map(|c| cols[c].coeff(r)).collect()).collect();
    let rhs: Vec<Rational> = (0..n).map(|r| b.coeff(r)).collect();
    solve(&mat, &rhs).map(RatPoly::new)
}

/// Coordinates of `u` (a polynomial in `θ'`) in the power basis of
/// `θ = s(θ')`, when both generate the same field.
fn change_basis(u: &RatPoly, s: &RatPoly, h2: &RatPoly) -> Result<RatPoly> {
    let n = h2.deg();
    let mut cols = Vec::with_capacity(n);
    let mut pw = RatPoly::one();
    for _ in 0..n {
        cols.push(pw.clone());
        pw = (&pw * s).rem(h2);
    }
    let mat: Matrix = (0..n).map(|r| (0..n).map(|c| cols[c].coeff(r)).collect()).collect();
    let rhs: Vec<Rational> = (0..n).map(|r| u.coeff(r)).collect();
    let Some(sol) = solve(&mat, &rhs) else {
        return consistency("θ does not generate the field");
    };
    Ok(RatPoly::new(sol))
}

struct State {
    h: RatPoly,
    theta: AlgebraicNumber,
    weights: Vec<i64>,
    reps: Vec<RatPoly>,
}

/// Adjoin `γ` with `g` the part of its minimal polynomial not yet split.
fn adjoin(st: &mut State, gamma: &AlgebraicNumber, g: &[RatPoly]) -> Result<()> {
    let f = gamma.minpoly();
    for k in 1..=MAX_WEIGHT {
        let norm = relative_norm(&st.h, g, k)?;
        let (_, factors) = factor_rational(&norm)?;
        let factors: Vec<RatPoly> = factors.into_iter().map(|(p, _)| p).collect();
        let (th, ga) = (&st.theta, gamma);
        let theta2 = select_root(&factors, |prec| {
            let (u, v) = (th.enclosure(prec + 8)?, ga.enclosure(prec + 8)?);
            Ok(u.add(&v.mul(&ComplexBall::from_i64(k), prec + 16), prec + 16))
        })?;
        let h2 = theta2.minpoly().clone();
        if h2.deg() < st.h.deg() {
            continue;
        }
        let Some(u) = linear_common_root(f, &st.h, k, &h2)? else { continue };
        // θ = θ' - k γ
        let s = (&RatPoly::x() - &u.scale(&q(k))).rem(&h2);
        if !compose_mod(&st.h, &s, &h2).is_zero() || !compose_mod(f, &u, &h2).is_zero() {
            return consistency("primitive element representation fails its defining relations");
        }
        if h2.deg() == st.h.deg() {
            st.reps.push(change_basis(&u, &s, &h2)?);
            st.weights.push(0);
        } else {
            for r in st.reps.iter_mut() {
                *r = compose_mod(r, &s, &h2);
            }
            st.reps.push(u);
            st.weights.push(k);
            st.h = h2;
            st.theta = theta2;
        }
        return Ok(());
    }
    Err(Error::Consistency(format!("no primitive element with weight up to {MAX_WEIGHT}")))
}

/// The field generated by `gens`, a primitive element `θ = Σ w_i α_i`, and
/// each generator as a polynomial in `θ`.
pub fn field_generate(gens: &[AlgebraicNumber]) -> Result<(NumberField, Vec<FieldElement>)> {
    if gens.is_empty() {
        return domain("field_generate needs at least one generator");
    }
    let mut st = State { h: RatPoly::x(), theta: AlgebraicNumber::zero(), weights: Vec::new(), reps: Vec::new() };
    // repeats reuse the first occurrence's representation
    let mut repeat = vec![false; gens.len()];
    for (idx, gamma) in gens.iter().enumerate() {
        if let Some(qv) = gamma.as_rational() {
            st.reps.push(RatPoly::constant(qv));
            st.weights.push(0);
            continue;
        }
        let mut seen = None;
        for j in 0..idx {
            if same_value(&gens[j], gamma)? {
                seen = Some(j);
                break;
            }
        }
        if let Some(j) = seen {
            repeat[idx] = true;
            let r = st.reps[j].clone();
            st.reps.push(r);
            st.weights.push(0);
            continue;
        }
        if st.h.deg() == 1 {
            st.h = gamma.minpoly().clone();
            st.theta = gamma.clone();
            st.reps.push(RatPoly::x());
            st.weights.push(1);
            continue;
        }
        // divide out roots of the same minimal polynomial already present
        let f = gamma.minpoly();
        let mut g: Vec<RatPoly> = f.coeffs().iter().map(|c| RatPoly::constant(c.clone())).collect();
        for j in 0..idx {
            if !repeat[j] && gens[j].minpoly() == f {
                g = divide_linear(&g, &st.reps[j], &st.h)?;
            }
        }
        if g.len() == 2 {
            // monic linear: the one remaining root
            st.reps.push(g[0].scale(&-Rational::one()));
            st.weights.push(0);
            continue;
        }
        adjoin(&mut st, gamma, &g)?;
    }
    let field = NumberField::from_generator(st.theta.clone(), st.weights.clone())?;
    let reps: Vec<FieldElement> = st.reps.into_iter().map(|r| field.element(r)).collect();
    // each representation must evaluate to its generator under the identity
    let id = field.identity();
    for (g, r) in gens.iter().zip(&reps) {
        let v = super::apply_embedding(&id, r, 64)?;
        if !v.overlaps(&g.enclosure(64)?) {
            return consistency("a generator representation does not match its value");
        }
    }
    Ok((field, reps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn root(h: &str, re: Rational, im: Rational) -> AlgebraicNumber {
        AlgebraicNumber::near(&poly(h), &re, &im, &rat(1, 20)).unwrap()
    }

    #[test]
    fn sqrt2_sqrt3() {
        let (a, b) = (root("x^2 - 2", rat(141, 100), int(0)), root("x^2 - 3", rat(173, 100), int(0)));
        let (k, reps) = field_generate(&[a.clone(), b]).unwrap();
        assert_eq!(k.h(), &poly("x^4 - 10*x^2 + 1"));
        assert_eq!(reps[0].rep(), &poly("1/2*x^3 - 9/2*x"));
        assert_eq!(k.weights(), &[1, 1]);
        let (k1, r1) = field_generate(&[a]).unwrap();
        assert_eq!((k1.degree(), r1[0].rep().clone()), (2, RatPoly::x()));
    }

    #[test]
    fn already_present() {
        let i = root("x^2 + 1", int(0), int(1));
        let (k, reps) = field_generate(&[i.clone(), i.neg()]).unwrap();
        assert_eq!(k.degree(), 2);
        assert_eq!(reps[1].rep(), &poly("-x"));
        // a cube root and its conjugates: degree 6 splitting field
        let c = root("x^3 - 2", rat(126, 100), int(0));
        let conj = crate::qbar::conjugates(&c).unwrap();
        let (k, reps) = field_generate(&conj).unwrap();
        assert_eq!(k.degree(), 6);
        assert_eq!(reps.len(), 3);
        // the other square root of 2 lies in Q(√2 + √3)
        let (a, b) = (root("x^2 - 2", rat(141, 100), int(0)), root("x^2 - 3", rat(173, 100), int(0)));
        let s = a.add(&b).unwrap();
        let (k, reps) = field_generate(&[s, a]).unwrap();
        assert_eq!(k.degree(), 4);
        assert_eq!(reps[0].rep(), &RatPoly::x());
    }

    #[test]
    fn repeated_generators() {
        let c = root("x^3 - 2", rat(126, 100), int(0));
        let conj = crate::qbar::conjugates(&c).unwrap();
        let set = [conj[1].clone(), conj[1].clone(), conj[2].clone()];
        let (k, reps) = field_generate(&set).unwrap();
        assert_eq!(k.degree(), 6);
        assert_eq!(reps[0], reps[1]);
        assert_ne!(reps[1], reps[2]);
    }
}
