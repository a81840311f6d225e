//! Algebraic numbers: a monic irreducible polynomial over Q together with an
//! isolating box that picks out one of its roots.
//!
//! Arithmetic goes through resultant annihilators, which are factored; the
//! factor and root holding the true value are then selected by comparing
//! ever tighter numeric enclosures against the candidate root boxes.

mod integral;
pub mod oracle;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;

use crate::error::{consistency, domain, Error, Result};
use crate::exact::factor::factor_rational;
use crate::exact::poly::RatPoly;
use crate::exact::rational::Rational;
use crate::exact::resultant::{product_annihilator, sum_annihilator};
use crate::numerics::ball::ComplexBall;
use crate::numerics::roots::{isolate_squarefree, refine_known, IsolatingBox, PREC_CAP};

pub use integral::{
    divisible_by_integer, integer_multiplier, is_algebraic_integer, prime_divisor_set, root_multiplier, IntegerMultiplier,
};

#[derive(Clone, Debug)]
pub struct AlgebraicNumber {
    minpoly: RatPoly,
    bx: IsolatingBox,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl FromStr for ArithOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "add" => Ok(ArithOp::Add),
            "sub" => Ok(ArithOp::Sub),
            "mul" => Ok(ArithOp::Mul),
            "div" => Ok(ArithOp::Div),
            _ => Err(Error::Parse(format!("unknown operation `{s}`"))),
        }
    }
}

fn pow2_neg(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits as usize)
}

fn ball_box(b: &ComplexBall) -> IsolatingBox {
    let (rl, rh) = b.re_interval();
    let (il, ih) = b.im_interval();
    IsolatingBox::new(rl, rh, il, ih)
}

fn neg_box(b: &IsolatingBox) -> IsolatingBox {
    IsolatingBox::new(-b.re_hi.clone(), -b.re_lo.clone(), -b.im_hi.clone(), -b.im_lo.clone())
}

fn shift_box(b: &IsolatingBox, q: &Rational) -> IsolatingBox {
    IsolatingBox::new(&b.re_lo + q, &b.re_hi + q, b.im_lo.clone(), b.im_hi.clone())
}

fn scale_box(b: &IsolatingBox, q: &Rational) -> IsolatingBox {
    let (r0, r1) = (&b.re_lo * q, &b.re_hi * q);
    let (i0, i1) = (&b.im_lo * q, &b.im_hi * q);
    if q.is_negative() {
        IsolatingBox::new(r1, r0, i1, i0)
    } else {
        IsolatingBox::new(r0, r1, i0, i1)
    }
}

/// `(re + i im)` plugged into `f`, exactly.
fn eval_gaussian(f: &RatPoly, re: &Rational, im: &Rational) -> (Rational, Rational) {
    let (mut a, mut b) = (Rational::zero(), Rational::zero());
    for c in f.coeffs().iter().rev() {
        let na = &a * re - &b * im + c;
        let nb = &a * im + &b * re;
        a = na;
        b = nb;
    }
    (a, b)
}

impl AlgebraicNumber {
    pub fn from_rational(q: Rational) -> Self {
        AlgebraicNumber { minpoly: RatPoly::linear_root(&q), bx: IsolatingBox::point(q, Rational::zero()) }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Self::from_i64(0)
    }

    pub fn one() -> Self {
        Self::from_i64(1)
    }

    /// Trusts the caller: `minpoly` monic irreducible, `bx` isolating.
    pub(crate) fn from_parts(minpoly: RatPoly, bx: IsolatingBox) -> Self {
        if minpoly.deg() == 1 {
            return Self::from_rational(-minpoly.monic().coeff(0));
        }
        AlgebraicNumber { minpoly, bx }
    }

    /// The root of `f` lying in `bx`; `f` is factored and the box refined
    /// until it meets exactly one root of `f`.
    pub fn from_poly(f: &RatPoly, bx: &IsolatingBox) -> Result<Self> {
        algebraic_from_poly(f, bx)
    }

    /// The root of `f` within `tol` of `re + i im` in both coordinates.
    pub fn near(f: &RatPoly, re: &Rational, im: &Rational, tol: &Rational) -> Result<Self> {
        algebraic_from_poly(f, &IsolatingBox::around(re, im, tol))
    }

    pub fn minpoly(&self) -> &RatPoly {
        &self.minpoly
    }

    pub fn isolating_box(&self) -> &IsolatingBox {
        &self.bx
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    /// Zero exactly when the minimal polynomial is `x`.
    pub fn is_zero(&self) -> bool {
        self.minpoly.deg() == 1 && self.minpoly.coeff(0).is_zero()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        (self.minpoly.deg() == 1).then(|| -self.minpoly.coeff(0))
    }

    pub fn is_rational(&self) -> bool {
        self.minpoly.deg() == 1
    }

    /// Decided exactly: the mirrored box must identify the same root.
    pub fn is_real(&self) -> Result<bool> {
        if self.is_rational() || self.bx.is_real() {
            return Ok(true);
        }
        if self.bx.im_lo.is_positive() || self.bx.im_hi.is_negative() {
            return Ok(false);
        }
        same_value(self, &self.conj())
    }

    /// Same value with a box of side at most `target`.
    pub fn refined(&self, target: &Rational) -> Result<Self> {
        if self.is_rational() {
            return Ok(self.clone());
        }
        Ok(AlgebraicNumber { minpoly: self.minpoly.clone(), bx: refine_known(&self.minpoly, &self.bx, target)? })
    }

    /// A ball of radius about `2^-prec` around the value.
    pub fn enclosure(&self, prec: u32) -> Result<ComplexBall> {
        self.clone().sharpen(prec)
    }

    fn sharpen(&mut self, prec: u32) -> Result<ComplexBall> {
        if let Some(q) = self.as_rational() {
            return Ok(ComplexBall::from_real(&q, prec + 8));
        }
        self.bx = refine_known(&self.minpoly, &self.bx, &pow2_neg(prec + 1))?;
        Ok(self.bx.to_ball(prec + 8))
    }

    /// Double-precision approximation of the value.
    pub fn approx(&self) -> Result<(f64, f64)> {
        Ok(self.enclosure(60)?.to_c64())
    }

    pub fn neg(&self) -> Self {
        let n = self.minpoly.deg();
        let mut f = self.minpoly.negate_var();
        if n % 2 == 1 {
            f = f.scale(&-Rational::one());
        }
        AlgebraicNumber { minpoly: f, bx: neg_box(&self.bx) }
    }

    pub fn conj(&self) -> Self {
        AlgebraicNumber { minpoly: self.minpoly.clone(), bx: self.bx.conj() }
    }

    pub fn add_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return self.clone();
        }
        if let Some(r) = self.as_rational() {
            return Self::from_rational(r + q);
        }
        AlgebraicNumber { minpoly: self.minpoly.shift(&-q.clone()), bx: shift_box(&self.bx, q) }
    }

    pub fn mul_rational(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        if let Some(r) = self.as_rational() {
            return Self::from_rational(r * q);
        }
        let f = self.minpoly.scale_var(&q.recip()).monic();
        AlgebraicNumber { minpoly: f, bx: scale_box(&self.bx, q) }
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return domain("division by zero");
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        let f = self.minpoly.reverse().monic();
        let mut me = self.clone();
        select_root(&[f], |prec| {
            let b = me.sharpen(prec + 4)?;
            b.inv(prec + 8).ok_or_else(|| Error::Consistency("enclosure of a nonzero value meets zero".into()))
        })
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        qbar_arith(ArithOp::Add, self, o)
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        qbar_arith(ArithOp::Sub, self, o)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        qbar_arith(ArithOp::Mul, self, o)
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        qbar_arith(ArithOp::Div, self, o)
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }
}

impl fmt::Display for AlgebraicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{}", crate::exact::rational::fmt_rational(&q));
        }
        let (re, im) = self.bx.center();
        let (re, im) = (crate::numerics::ball::decimal_text(&re), crate::numerics::ball::decimal_text(&im));
        write!(f, "root of {} near {re}{}{}i", self.minpoly, if im.starts_with('-') { "" } else { "+" }, im)
    }
}

impl serde::Serialize for AlgebraicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("AlgebraicNumber", 2)?;
        st.serialize_field("minpoly", &self.minpoly.to_string())?;
        st.serialize_field("box", &self.bx)?;
        st.end()
    }
}

fn root_boxes(g: &RatPoly, target: &Rational) -> Result<Vec<IsolatingBox>> {
    if g.deg() == 1 {
        return Ok(vec![IsolatingBox::point(-g.monic().coeff(0), Rational::zero())]);
    }
    isolate_squarefree(g, target)
}

/// Pick the unique root among the roots of `factors` (monic, irreducible,
/// pairwise distinct) whose value `value(prec)` encloses. Candidates whose
/// boxes miss an enclosure are dropped for good, so the loop ends once the
/// enclosures are finer than the distance to the nearest other root.
pub(crate) fn select_root(
    factors: &[RatPoly],
    mut value: impl FnMut(u32) -> Result<ComplexBall>,
) -> Result<AlgebraicNumber> {
    let quarter = Rational::new(BigInt::one(), BigInt::from(4));
    let mut cands: Vec<(usize, IsolatingBox)> = Vec::new();
    for (k, g) in factors.iter().enumerate() {
        for b in root_boxes(g, &quarter)? {
            cands.push((k, b));
        }
    }
    let mut prec = 64u32;
    loop {
        let bb = ball_box(&value(prec)?);
        cands.retain(|(_, b)| b.intersects(&bb));
        match cands.len() {
            0 => return consistency("no candidate root meets the numeric enclosure"),
            1 => {
                let (k, b) = cands.pop().unwrap();
                return Ok(AlgebraicNumber::from_parts(factors[k].clone(), b));
            }
            _ => {}
        }
        if prec >= PREC_CAP {
            return Err(Error::Precision { bits: prec, detail: "candidate roots not separated".into() });
        }
        let mut w = bb.width() / Rational::from_integer(4.into());
        if w.is_zero() {
            w = pow2_neg(prec);
        }
        for (k, b) in cands.iter_mut() {
            *b = refine_known(&factors[*k], b, &w)?;
        }
        prec *= 2;
    }
}

/// The root of `f` inside `bx`.
pub fn algebraic_from_poly(f: &RatPoly, bx: &IsolatingBox) -> Result<AlgebraicNumber> {
    if f.is_zero() || f.is_constant() {
        return domain("an algebraic number needs a nonconstant polynomial");
    }
    let (_, factors) = factor_rational(f)?;
    let factors: Vec<RatPoly> = factors.into_iter().map(|(g, _)| g).collect();
    if bx.re_lo == bx.re_hi && bx.im_lo == bx.im_hi {
        // a point selects a root only if it is one
        let hits: Vec<&RatPoly> =
            factors.iter().filter(|g| eval_gaussian(g, &bx.re_lo, &bx.im_lo) == (Rational::zero(), Rational::zero())).collect();
        return match hits.as_slice() {
            [] => domain("the point is not a root"),
            [g] => Ok(AlgebraicNumber::from_parts((*g).clone(), bx.clone())),
            _ => unreachable!("distinct irreducible factors share no root"),
        };
    }
    let mut tgt = bx.width() / Rational::from_integer(4.into());
    for _ in 0..50 {
        let mut inside = Vec::new();
        let mut straddling = false;
        for g in &factors {
            for b in root_boxes(g, &tgt)? {
                if bx.contains_box(&b) {
                    inside.push((g, b));
                } else if b.intersects(bx) {
                    straddling = true;
                }
            }
        }
        if inside.len() > 1 {
            return Err(Error::Ambiguous(format!("the box holds {} or more roots of {f}", inside.len())));
        }
        if !straddling {
            return match inside.pop() {
                Some((g, b)) => Ok(AlgebraicNumber::from_parts(g.clone(), b)),
                None => domain(format!("the box holds no root of {f}")),
            };
        }
        tgt /= Rational::from_integer(16.into());
    }
    Err(Error::Ambiguous(format!("a root of {f} lies on the boundary of the box")))
}

/// `α op β`, exactly.
pub fn qbar_arith(op: ArithOp, a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<AlgebraicNumber> {
    match op {
        ArithOp::Sub => return qbar_arith(ArithOp::Add, a, &b.neg()),
        ArithOp::Div => return qbar_arith(ArithOp::Mul, a, &b.inverse()?),
        _ => {}
    }
    let add = op == ArithOp::Add;
    if add {
        if b.is_zero() {
            return Ok(a.clone());
        }
        if a.is_zero() {
            return Ok(b.clone());
        }
        if let Some(q) = b.as_rational() {
            return Ok(a.add_rational(&q));
        }
        if let Some(q) = a.as_rational() {
            return Ok(b.add_rational(&q));
        }
    } else {
        if let Some(q) = b.as_rational() {
            return Ok(a.mul_rational(&q));
        }
        if let Some(q) = a.as_rational() {
            return Ok(b.mul_rational(&q));
        }
    }
    let ann = if add { sum_annihilator(&a.minpoly, &b.minpoly)? } else { product_annihilator(&a.minpoly, &b.minpoly)? };
    if ann.is_zero() {
        return consistency("vanishing annihilator");
    }
    let (_, factors) = factor_rational(&ann)?;
    let factors: Vec<RatPoly> = factors.into_iter().map(|(g, _)| g).collect();
    let (mut x, mut y) = (a.clone(), b.clone());
    select_root(&factors, |prec| {
        let (u, v) = (x.sharpen(prec + 8)?, y.sharpen(prec + 8)?);
        Ok(if add { u.add(&v, prec + 16) } else { u.mul(&v, prec + 16) })
    })
}

/// Whether `a` and `b` denote the same number: equal minimal polynomials and
/// boxes that identify the same root of a common isolation.
pub fn same_value(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<bool> {
    if a.minpoly != b.minpoly {
        return Ok(false);
    }
    if !a.bx.intersects(&b.bx) {
        return Ok(false);
    }
    if a.is_rational() || a.bx == b.bx {
        return Ok(true);
    }
    let g = &a.minpoly;
    let mut tgt = a.bx.width().min(b.bx.width()) / Rational::from_integer(4.into());
    if tgt.is_zero() {
        tgt = pow2_neg(30);
    }
    for _ in 0..50 {
        let boxes = root_boxes(g, &tgt)?;
        let hit = |x: &IsolatingBox| -> Vec<usize> { (0..boxes.len()).filter(|&i| boxes[i].intersects(x)).collect() };
        let (ha, hb) = (hit(&a.bx), hit(&b.bx));
        if ha.len() == 1 && hb.len() == 1 {
            return Ok(ha[0] == hb[0]);
        }
        if ha.is_empty() || hb.is_empty() {
            return consistency(format!("an isolating box of {g} lost its root"));
        }
        tgt /= Rational::from_integer(16.into());
    }
    Err(Error::Precision { bits: PREC_CAP, detail: format!("could not match roots of {g}") })
}

/// All roots of the minimal polynomial, ordered by box center.
pub fn conjugates(a: &AlgebraicNumber) -> Result<Vec<AlgebraicNumber>> {
    if a.is_rational() {
        return Ok(vec![a.clone()]);
    }
    let tgt = Rational::new(BigInt::one(), BigInt::from(1024));
    let mut boxes = isolate_squarefree(&a.minpoly, &tgt)?;
    boxes.sort_by(|x, y| x.center_cmp(y));
    Ok(boxes.into_iter().map(|b| AlgebraicNumber { minpoly: a.minpoly.clone(), bx: b }).collect())
}

/// Sign of the real part, for a value whose real part is known to be nonzero.
fn re_sign_nonzero(x: &AlgebraicNumber) -> Result<Ordering> {
    let mut x = x.clone();
    let mut prec = 32u32;
    while prec <= PREC_CAP {
        let (lo, hi) = x.sharpen(prec)?.re_interval();
        if lo.is_positive() {
            return Ok(Ordering::Greater);
        }
        if hi.is_negative() {
            return Ok(Ordering::Less);
        }
        prec *= 2;
    }
    Err(Error::Precision { bits: PREC_CAP, detail: "sign of a nonzero real part".into() })
}

/// Lexicographic order on (real part, imaginary part), decided exactly.
pub fn lex_cmp(a: &AlgebraicNumber, b: &AlgebraicNumber) -> Result<Ordering> {
    if let (Some(p), Some(q)) = (a.as_rational(), b.as_rational()) {
        return Ok(p.cmp(&q));
    }
    if same_value(a, b)? {
        return Ok(Ordering::Equal);
    }
    // cheap numeric separation first
    for prec in [64u32, 160] {
        let (u, v) = (a.enclosure(prec)?, b.enclosure(prec)?);
        let (ul, uh) = u.re_interval();
        let (vl, vh) = v.re_interval();
        if uh < vl {
            return Ok(Ordering::Less);
        }
        if vh < ul {
            return Ok(Ordering::Greater);
        }
    }
    let d = a.sub(b)?;
    let twice_re = d.add(&d.conj())?;
    if !twice_re.is_zero() {
        return re_sign_nonzero(&twice_re);
    }
    // equal real parts, so d = i y with y real and nonzero
    re_sign_nonzero(&d.mul(&AlgebraicNumber::i().neg())?)
}

impl AlgebraicNumber {
    /// The imaginary unit.
    pub fn i() -> Self {
        let one = Rational::one();
        let half = Rational::new(BigInt::one(), BigInt::from(2));
        AlgebraicNumber {
            minpoly: RatPoly::from_i64(&[1, 0, 1]),
            bx: IsolatingBox::new(-half.clone(), half.clone(), &one - &half, one + half),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn sqrt(n: i64) -> AlgebraicNumber {
        let r = (n as f64).sqrt();
        AlgebraicNumber::near(&RatPoly::from_i64(&[-n, 0, 1]), &Rational::from_float(r).unwrap(), &int(0), &rat(1, 100)).unwrap()
    }

    #[test]
    fn construction() {
        let a = AlgebraicNumber::near(&poly("x^4 - 4"), &rat(1414, 1000), &int(0), &rat(1, 10)).unwrap();
        assert_eq!(a.minpoly(), &poly("x^2 - 2"));
        let three = algebraic_from_poly(&poly("x - 3"), &IsolatingBox::around(&int(3), &int(0), &int(1))).unwrap();
        assert_eq!(three.as_rational(), Some(int(3)));
        let i = AlgebraicNumber::near(&poly("x^2 + 1"), &int(0), &int(1), &rat(1, 10)).unwrap();
        assert!(same_value(&i, &AlgebraicNumber::i()).unwrap());
        let both = AlgebraicNumber::near(&poly("x^4 - 4"), &int(0), &int(0), &int(2));
        assert!(matches!(both, Err(Error::Ambiguous(_))));
        let pt = algebraic_from_poly(&poly("x^2 + 1"), &IsolatingBox::point(int(0), int(-1))).unwrap();
        assert!(same_value(&pt, &AlgebraicNumber::i().conj()).unwrap());
    }

    #[test]
    fn arithmetic_examples() {
        let (r2, r3) = (sqrt(2), sqrt(3));
        assert_eq!(r2.add(&r2).unwrap().minpoly(), &poly("x^2 - 8"));
        assert_eq!(r2.mul(&r3).unwrap().minpoly(), &poly("x^2 - 6"));
        assert_eq!(AlgebraicNumber::one().div(&r2).unwrap().minpoly(), &poly("x^2 - 1/2"));
        let z = r2.add(&AlgebraicNumber::zero()).unwrap();
        assert_eq!(z.minpoly(), r2.minpoly());
        assert!(r2.sub(&r2).unwrap().is_zero());
        let s = r2.add(&r3).unwrap();
        assert_eq!(s.minpoly(), &poly("x^4 - 10*x^2 + 1"));
        assert!(same_value(&s.sub(&r3).unwrap(), &r2).unwrap());
        assert!(!same_value(&s.sub(&r3).unwrap(), &r2.neg()).unwrap());
        assert!(r2.div(&AlgebraicNumber::zero()).is_err());
        let m = r2.mul_rational(&rat(-3, 2));
        assert_eq!(m.minpoly(), &poly("x^2 - 9/2"));
        assert!(m.approx().unwrap().0 < 0.0);
    }

    #[test]
    fn conjugate_sets() {
        let c = conjugates(&sqrt(2)).unwrap();
        assert_eq!(c.len(), 2);
        let cube = AlgebraicNumber::near(&poly("x^3 - 2"), &rat(126, 100), &int(0), &rat(1, 10)).unwrap();
        let c = conjugates(&cube).unwrap();
        assert_eq!(c.len(), 3);
        assert_eq!(c.iter().filter(|x| x.is_real().unwrap()).count(), 1);
        assert!(c.iter().any(|x| same_value(x, &cube).unwrap()));
    }

    #[test]
    fn ordering() {
        let (r2, i) = (sqrt(2), AlgebraicNumber::i());
        assert_eq!(lex_cmp(&r2.neg(), &r2).unwrap(), Ordering::Less);
        assert_eq!(lex_cmp(&i, &i.conj()).unwrap(), Ordering::Greater);
        // equal real parts decided exactly
        let a = r2.add(&i).unwrap();
        let b = r2.sub(&i).unwrap();
        assert_eq!(lex_cmp(&a, &b).unwrap(), Ordering::Greater);
        assert_eq!(lex_cmp(&a, &a.refined(&rat(1, 1000)).unwrap()).unwrap(), Ordering::Equal);
    }
}
