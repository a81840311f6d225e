//! Number fields `Q(θ) = Q[x]/(h)` given by a primitive element, their
//! elements in the power basis of `θ`, and their embeddings into C.

mod generate;
mod symmetric;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;

use crate::error::{consistency, domain, Error, Result};
use crate::exact::gcd::{ext_gcd, squarefree_part};
use crate::exact::poly::RatPoly;
use crate::exact::rational::{pow_rational, Rational};
use crate::exact::resultant::{char_poly_mod, resultant};
use crate::numerics::ball::ComplexBall;
use crate::numerics::roots::{isolate_squarefree, refine_known, IsolatingBox, PREC_CAP};
use crate::qbar::{select_root, AlgebraicNumber};

pub use generate::field_generate;
pub use symmetric::symmetric_set_polynomial;

struct FieldData {
    h: RatPoly,
    theta: AlgebraicNumber,
    weights: Vec<i64>,
    embeddings: Vec<IsolatingBox>,
}

/// `Q(θ)` with `θ` a root of the monic irreducible `h`. Cloning is cheap.
#[derive(Clone)]
pub struct NumberField(Arc<FieldData>);

impl NumberField {
    /// The rationals, presented as `Q[x]/(x)`.
    pub fn rationals() -> Self {
        Self::from_generator(AlgebraicNumber::zero(), Vec::new()).expect("Q has one embedding")
    }

    /// `Q(θ)` for an algebraic number `θ`.
    pub fn from_generator(theta: AlgebraicNumber, weights: Vec<i64>) -> Result<Self> {
        let h = theta.minpoly().clone();
        let embeddings = embedding_boxes(&h, &theta)?;
        Ok(NumberField(Arc::new(FieldData { h, theta, weights, embeddings })))
    }

    pub fn h(&self) -> &RatPoly {
        &self.0.h
    }

    pub fn degree(&self) -> usize {
        self.0.h.deg()
    }

    pub fn theta(&self) -> &AlgebraicNumber {
        &self.0.theta
    }

    pub fn theta_box(&self) -> &IsolatingBox {
        self.0.theta.isolating_box()
    }

    /// Integer weights of `θ` as a combination of the generators it was
    /// built from.
    pub fn weights(&self) -> &[i64] {
        &self.0.weights
    }

    pub fn element(&self, rep: RatPoly) -> FieldElement {
        FieldElement { field: self.clone(), rep: rep.rem(self.h()) }
    }

    pub fn from_rational(&self, q: Rational) -> FieldElement {
        self.element(RatPoly::constant(q))
    }

    pub fn zero(&self) -> FieldElement {
        self.element(RatPoly::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.element(RatPoly::one())
    }

    pub fn gen(&self) -> FieldElement {
        self.element(RatPoly::x())
    }

    /// All embeddings; the identity comes first.
    pub fn embeddings(&self) -> Vec<Embedding> {
        self.0
            .embeddings
            .iter()
            .enumerate()
            .map(|(index, b)| Embedding { field: self.clone(), index, image: b.clone() })
            .collect()
    }

    pub fn identity(&self) -> Embedding {
        Embedding { field: self.clone(), index: 0, image: self.0.embeddings[0].clone() }
    }

    fn same(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.h == o.0.h && self.theta_box() == o.theta_box())
    }
}

impl PartialEq for NumberField {
    fn eq(&self, o: &Self) -> bool {
        self.same(o)
    }
}

impl fmt::Debug for NumberField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q[x]/({})", self.0.h)
    }
}

impl serde::Serialize for NumberField {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("NumberField", 2)?;
        st.serialize_field("h", &self.0.h.to_string())?;
        st.serialize_field("theta_box", self.theta_box())?;
        st.end()
    }
}

/// Root boxes of `h` with the box of `theta` first and the rest by center.
fn embedding_boxes(h: &RatPoly, theta: &AlgebraicNumber) -> Result<Vec<IsolatingBox>> {
    if h.deg() == 1 {
        return Ok(vec![theta.isolating_box().clone()]);
    }
    let own = theta.isolating_box();
    let mut tgt = Rational::new(BigInt::one(), BigInt::from(64));
    for _ in 0..40 {
        let boxes = isolate_squarefree(h, &tgt)?;
        let hits: Vec<usize> = (0..boxes.len()).filter(|&i| boxes[i].intersects(own)).collect();
        if hits.len() == 1 {
            let mut rest: Vec<IsolatingBox> =
                boxes.into_iter().enumerate().filter(|(i, _)| *i != hits[0]).map(|(_, b)| b).collect();
            rest.sort_by(|a, b| a.center_cmp(b));
            let mut out = vec![own.clone()];
            out.extend(rest);
            return Ok(out);
        }
        if hits.is_empty() {
            return consistency(format!("the generator box lost its root of {h}"));
        }
        tgt /= Rational::from_integer(16.into());
    }
    Err(Error::Precision { bits: PREC_CAP, detail: format!("embeddings of {h}") })
}

/// `Σ a_i θ^i` with `deg rep < [K:Q]`.
#[derive(Clone)]
pub struct FieldElement {
    field: NumberField,
    rep: RatPoly,
}

impl FieldElement {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn rep(&self) -> &RatPoly {
        &self.rep
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.field.same(&o.field) {
            Ok(())
        } else {
            domain("elements belong to different fields")
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(FieldElement { field: self.field.clone(), rep: &self.rep + &o.rep })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(FieldElement { field: self.field.clone(), rep: &self.rep - &o.rep })
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check(o)?;
        Ok(self.field.element(&self.rep * &o.rep))
    }

    pub fn neg(&self) -> Self {
        FieldElement { field: self.field.clone(), rep: self.rep.scale(&-Rational::one()) }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        FieldElement { field: self.field.clone(), rep: self.rep.scale(q) }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same field");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same field");
            }
        }
        acc
    }

    pub fn inverse(&self) -> Result<Self> {
        element_inverse(self)
    }

    /// The constant term when the representation is constant.
    pub fn fixed_rational(&self) -> Option<Rational> {
        fixed_rational(self)
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, o: &Self) -> bool {
        self.field.same(&o.field) && self.rep == o.rep
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.rep)
    }
}

impl serde::Serialize for FieldElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("FieldElement", 1)?;
        st.serialize_field("rep", &self.rep.to_string())?;
        st.end()
    }
}

/// Bézout with `h`: `u·rep + v·h = 1` gives `rep^{-1} = u`.
pub fn element_inverse(a: &FieldElement) -> Result<FieldElement> {
    if a.is_zero() {
        return domain("the zero element has no inverse");
    }
    let (d, u, _) = ext_gcd(&a.rep, a.field.h())?;
    if d != RatPoly::one() {
        return consistency("the defining polynomial is reducible");
    }
    Ok(a.field.element(u))
}

pub fn fixed_rational(a: &FieldElement) -> Option<Rational> {
    (a.rep.deg() == 0 || a.rep.is_zero()).then(|| a.rep.coeff(0))
}

/// `Π σ(a)` over all embeddings, as `Res(h, rep)` for monic `h`.
pub fn norm(a: &FieldElement) -> Result<Rational> {
    if a.is_zero() {
        return Ok(Rational::zero());
    }
    if let Some(q) = fixed_rational(a) {
        return Ok(pow_rational(&q, a.field.degree() as u64));
    }
    resultant(a.field.h(), &a.rep)
}

/// Characteristic polynomial of multiplication by `a`; a power of the
/// minimal polynomial.
pub fn char_poly(a: &FieldElement) -> Result<RatPoly> {
    if let Some(q) = fixed_rational(a) {
        return Ok(RatPoly::linear_root(&q).pow(a.field.degree() as u32));
    }
    char_poly_mod(a.field.h(), &a.rep)
}

/// Minimal polynomial over Q of an element.
pub fn element_minpoly(a: &FieldElement) -> Result<RatPoly> {
    let cp = char_poly(a)?;
    Ok(squarefree_part(&cp).monic())
}

/// The norm as `[(-1)^m f_a(0)]^k` with `f_a` the minimal polynomial of
/// degree `m` and `k = n / m`.
pub fn norm_closed_form(a: &FieldElement) -> Result<Rational> {
    let cp = char_poly(a)?;
    let f = squarefree_part(&cp).monic();
    let (m, n) = (f.deg(), a.field.degree());
    if n % m != 0 || f.pow((n / m) as u32) != cp {
        return consistency("characteristic polynomial is not a power of the minimal polynomial");
    }
    let base = if m % 2 == 0 { f.coeff(0) } else { -f.coeff(0) };
    Ok(pow_rational(&base, (n / m) as u64))
}

/// One embedding `θ ↦ θ_j`, named by an isolating box of `θ_j`.
#[derive(Clone)]
pub struct Embedding {
    field: NumberField,
    index: usize,
    image: IsolatingBox,
}

impl Embedding {
    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn image_box(&self) -> &IsolatingBox {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.index == 0
    }

    /// `σ(θ)` as an algebraic number.
    pub fn image(&self) -> AlgebraicNumber {
        AlgebraicNumber::from_parts(self.field.h().clone(), self.image.clone())
    }
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "σ{}", self.index)
    }
}

impl serde::Serialize for Embedding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Embedding", 2)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("image_box", &self.image)?;
        st.end()
    }
}

fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

/// `rep(σ(θ))` enclosed in a ball of radius at most about `2^-prec`.
pub fn apply_embedding(s: &Embedding, a: &FieldElement, prec: u32) -> Result<ComplexBall> {
    if !s.field.same(&a.field) {
        return domain("embedding and element belong to different fields");
    }
    if let Some(q) = fixed_rational(a) {
        return Ok(ComplexBall::from_real(&q, prec + 8));
    }
    let coeff_bits = a.rep.coeffs().iter().map(|c| c.numer().bits() + c.denom().bits()).max().unwrap_or(0) as u32;
    let deg = a.rep.deg() as u32;
    let goal = crate::numerics::dyadic::Dyadic::pow2(-(prec as i64));
    let mut extra = 16 + coeff_bits + 4 * deg;
    loop {
        let wp = prec + extra;
        let b = refine_known(s.field.h(), &s.image, &pow2_neg(wp))?;
        let v = ComplexBall::eval_rat_poly(&a.rep, &b.to_ball(wp + 8), wp + 8);
        if v.rad() <= &goal || wp > PREC_CAP {
            return Ok(v);
        }
        extra *= 2;
    }
}

/// `σ(a)` as an exact algebraic number.
pub fn embed_exact(s: &Embedding, a: &FieldElement) -> Result<AlgebraicNumber> {
    if let Some(q) = fixed_rational(a) {
        return Ok(AlgebraicNumber::from_rational(q));
    }
    let f = element_minpoly(a)?;
    select_root(&[f], |prec| apply_embedding(s, a, prec))
}

/// The value of `a` under the identity embedding.
pub fn element_value(a: &FieldElement) -> Result<AlgebraicNumber> {
    embed_exact(&a.field.identity(), a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn field(h: &str, re: Rational, im: Rational) -> NumberField {
        let theta = AlgebraicNumber::near(&poly(h), &re, &im, &rat(1, 20)).unwrap();
        NumberField::from_generator(theta, vec![1]).unwrap()
    }

    #[test]
    fn inverses_and_norms() {
        let k = field("x^2 - 2", rat(141, 100), int(0));
        let t = k.gen();
        assert_eq!(t.inverse().unwrap(), k.element(poly("1/2*x")));
        assert_eq!(norm(&t).unwrap(), int(-2));
        assert_eq!(norm_closed_form(&t).unwrap(), int(-2));
        let qi = field("x^2 + 1", int(0), int(1));
        let a = qi.one().add(&qi.gen()).unwrap();
        assert_eq!(a.inverse().unwrap(), qi.element(poly("-1/2*x + 1/2")));
        assert_eq!(norm(&a).unwrap(), int(2));
        assert!(qi.zero().inverse().is_err());
        assert_eq!(norm(&k.from_rational(rat(3, 2))).unwrap(), rat(9, 4));
    }

    #[test]
    fn embeddings_and_images() {
        let k = field("x^2 - 2", rat(141, 100), int(0));
        let e = k.embeddings();
        assert_eq!(e.len(), 2);
        assert!(e[0].is_identity());
        let v = apply_embedding(&e[1], &k.gen(), 128).unwrap();
        assert!((v.to_c64().0 + 2f64.sqrt()).abs() < 1e-15);
        let sq = k.gen().pow(2);
        assert_eq!(fixed_rational(&sq), Some(int(2)));
        assert_eq!(fixed_rational(&k.gen()), None);
        let img = embed_exact(&e[1], &k.gen()).unwrap();
        assert_eq!(img.minpoly(), &poly("x^2 - 2"));
        assert!(img.approx().unwrap().0 < 0.0);
        assert_eq!(NumberField::rationals().embeddings().len(), 1);
        let q4 = field("x^4 - 10*x^2 + 1", rat(3146, 1000), int(0));
        assert_eq!(q4.embeddings().len(), 4);
    }
}
