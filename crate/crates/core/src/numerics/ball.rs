//! Complex disc balls: a dyadic midpoint and a radius that bounds the error.
//! Every operation returns a ball containing all results of applying the
//! exact operation to points of the inputs.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;

use super::dyadic::{Dyadic, Round};
use crate::exact::poly::{IntPoly, RatPoly};
use crate::exact::rational::{round_decimal, Rational};

/// Radii are kept to this many bits, rounded up.
const RAD_BITS: u32 = 30;

fn rad_up(x: &Dyadic) -> Dyadic {
    x.round(RAD_BITS, Round::Up)
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct ComplexBall {
    re: Dyadic,
    im: Dyadic,
    rad: Dyadic,
}

impl ComplexBall {
    pub fn new(re: Dyadic, im: Dyadic, rad: Dyadic) -> Self {
        assert!(!rad.is_negative(), "negative radius");
        ComplexBall { re, im, rad: rad_up(&rad) }
    }

    pub fn exact(re: Dyadic, im: Dyadic) -> Self {
        ComplexBall { re, im, rad: Dyadic::zero() }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::exact(Dyadic::one(), Dyadic::zero())
    }

    pub fn from_i64(n: i64) -> Self {
        Self::exact(Dyadic::from_i64(n), Dyadic::zero())
    }

    pub fn from_bigint(n: &BigInt, prec: u32) -> Self {
        Self::from_real_dyadic(&Dyadic::new(n.clone(), 0), prec)
    }

    pub fn from_real_dyadic(x: &Dyadic, prec: u32) -> Self {
        let (m, e) = x.round_with_error(prec);
        Self::new(m, Dyadic::zero(), e)
    }

    pub fn from_rational(re: &Rational, im: &Rational, prec: u32) -> Self {
        let r = Dyadic::from_rational(re, prec, Round::Nearest);
        let i = Dyadic::from_rational(im, prec, Round::Nearest);
        // |q - round(q)| <= ulp; measure it exactly
        let er = (&r.to_rational() - re).abs();
        let ei = (&i.to_rational() - im).abs();
        let err = Dyadic::from_rational(&(er + ei), RAD_BITS, Round::Up);
        Self::new(r, i, err)
    }

    pub fn from_real(q: &Rational, prec: u32) -> Self {
        Self::from_rational(q, &Rational::zero(), prec)
    }

    pub fn re(&self) -> &Dyadic {
        &self.re
    }

    pub fn im(&self) -> &Dyadic {
        &self.im
    }

    pub fn rad(&self) -> &Dyadic {
        &self.rad
    }

    pub fn is_exact(&self) -> bool {
        self.rad.is_zero()
    }

    pub fn with_rad(&self, extra: &Dyadic) -> Self {
        Self::new(self.re.clone(), self.im.clone(), self.rad.add(extra))
    }

    pub fn mid(&self) -> Self {
        Self::exact(self.re.clone(), self.im.clone())
    }

    fn rounded(re: Dyadic, im: Dyadic, rad: Dyadic, prec: u32) -> Self {
        let (r, er) = re.round_with_error(prec);
        let (i, ei) = im.round_with_error(prec);
        Self::new(r, i, rad.add(&er).add(&ei))
    }

    pub fn neg(&self) -> Self {
        ComplexBall { re: self.re.neg(), im: self.im.neg(), rad: self.rad.clone() }
    }

    pub fn conj(&self) -> Self {
        ComplexBall { re: self.re.clone(), im: self.im.neg(), rad: self.rad.clone() }
    }

    pub fn add(&self, o: &Self, prec: u32) -> Self {
        Self::rounded(self.re.add(&o.re), self.im.add(&o.im), self.rad.add(&o.rad), prec)
    }

    pub fn sub(&self, o: &Self, prec: u32) -> Self {
        self.add(&o.neg(), prec)
    }

    pub fn mul(&self, o: &Self, prec: u32) -> Self {
        let re = self.re.mul(&o.re).sub(&self.im.mul(&o.im));
        let im = self.re.mul(&o.im).add(&self.im.mul(&o.re));
        let rad = if self.rad.is_zero() && o.rad.is_zero() {
            Dyadic::zero()
        } else {
            self.mid_abs_upper()
                .mul(&o.rad)
                .add(&o.mid_abs_upper().mul(&self.rad))
                .add(&self.rad.mul(&o.rad))
        };
        Self::rounded(re, im, rad, prec)
    }

    pub fn sqr(&self, prec: u32) -> Self {
        self.mul(self, prec)
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        ComplexBall { re: self.re.mul_pow2(k), im: self.im.mul_pow2(k), rad: self.rad.mul_pow2(k) }
    }

    pub fn mul_real(&self, x: &Dyadic, prec: u32) -> Self {
        Self::rounded(self.re.mul(x), self.im.mul(x), self.rad.mul(&x.abs()), prec)
    }

    pub fn mul_i(&self) -> Self {
        ComplexBall { re: self.im.neg(), im: self.re.clone(), rad: self.rad.clone() }
    }

    /// Divide by a positive integer.
    pub fn div_u64(&self, d: u64, prec: u32) -> Self {
        assert!(d > 0);
        if d == 1 {
            return self.clone();
        }
        let q = |x: &Dyadic| Dyadic::from_rational(&(x.to_rational() / Rational::from_integer(d.into())), prec, Round::Nearest);
        let (r, i) = (q(&self.re), q(&self.im));
        let dd = Dyadic::from_i64(d as i64);
        // exact residual of the rounded quotient
        let er = r.mul(&dd).sub(&self.re).abs();
        let ei = i.mul(&dd).sub(&self.im).abs();
        let err = Dyadic::from_rational(&(er.add(&ei).to_rational() / Rational::from_integer(d.into())), RAD_BITS, Round::Up);
        let rad = Dyadic::from_rational(&(self.rad.to_rational() / Rational::from_integer(d.into())), RAD_BITS, Round::Up);
        Self::new(r, i, rad.add(&err))
    }

    /// `|mid|²`, exact.
    pub fn mid_norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }

    pub fn mid_abs_upper(&self) -> Dyadic {
        self.mid_norm_sqr().round(64, Round::Up).sqrt_up(RAD_BITS + 2)
    }

    pub fn mid_abs_lower(&self) -> Dyadic {
        self.mid_norm_sqr().round(64, Round::Down).sqrt_down(RAD_BITS + 2)
    }

    /// Upper bound on `|w|` over the ball.
    pub fn abs_upper(&self) -> Dyadic {
        rad_up(&self.mid_abs_upper().add(&self.rad))
    }

    /// Lower bound on `|w|` over the ball, clamped at zero.
    pub fn abs_lower(&self) -> Dyadic {
        let l = self.mid_abs_lower().sub(&self.rad);
        if l.is_positive() {
            l.round(RAD_BITS, Round::Down)
        } else {
            Dyadic::zero()
        }
    }

    pub fn contains_zero(&self) -> bool {
        self.mid_norm_sqr() <= self.rad.mul(&self.rad)
    }

    pub fn contains_point(&self, re: &Rational, im: &Rational) -> bool {
        let dr = re - self.re.to_rational();
        let di = im - self.im.to_rational();
        let r = self.rad.to_rational();
        &dr * &dr + &di * &di <= &r * &r
    }

    /// Do the two discs share a point?
    pub fn overlaps(&self, o: &Self) -> bool {
        let dr = self.re.sub(&o.re);
        let di = self.im.sub(&o.im);
        let r = self.rad.add(&o.rad);
        dr.mul(&dr).add(&di.mul(&di)) <= r.mul(&r)
    }

    /// Is `o` entirely inside `self`?
    pub fn contains(&self, o: &Self) -> bool {
        let slack = self.rad.sub(&o.rad);
        if slack.is_negative() {
            return false;
        }
        let dr = self.re.sub(&o.re);
        let di = self.im.sub(&o.im);
        dr.mul(&dr).add(&di.mul(&di)) <= slack.mul(&slack)
    }

    /// Is `o` inside the open disc of `self`?
    pub fn contains_strictly(&self, o: &Self) -> bool {
        let slack = self.rad.sub(&o.rad);
        if !slack.is_positive() {
            return false;
        }
        let dr = self.re.sub(&o.re);
        let di = self.im.sub(&o.im);
        dr.mul(&dr).add(&di.mul(&di)) < slack.mul(&slack)
    }

    /// Reciprocal; `None` when the ball may contain zero.
    pub fn inv(&self, prec: u32) -> Option<Self> {
        let low = self.abs_lower();
        if low.is_zero() {
            return None;
        }
        let n = self.mid_norm_sqr();
        let wp = prec + 8;
        let nr = n.to_rational();
        let mre = Dyadic::from_rational(&(self.re.to_rational() / &nr), wp, Round::Nearest);
        let mim = Dyadic::from_rational(&(-self.im.to_rational() / &nr), wp, Round::Nearest);
        let m = ComplexBall::exact(mre, mim);
        // |1/z0 - m| = |1 - m z0| / |z0|
        let resid = ComplexBall::one().sub(&m.mul(&self.mid(), u32::MAX), u32::MAX);
        let mid_low = self.mid_abs_lower();
        let e1 = div_up(&resid.mid_abs_upper(), &mid_low);
        // |1/w - 1/z0| <= r / (|z0| (|z0| - r))
        let e2 = if self.rad.is_zero() { Dyadic::zero() } else { div_up(&self.rad, &mid_low.mul(&low)) };
        let out = Self::new(m.re, m.im, e1.add(&e2));
        Some(Self::rounded(out.re.clone(), out.im.clone(), out.rad.clone(), prec))
    }

    pub fn div(&self, o: &Self, prec: u32) -> Option<Self> {
        Some(self.mul(&o.inv(prec + 4)?, prec))
    }

    pub fn pow(&self, mut e: u64, prec: u32) -> Self {
        let mut result = ComplexBall::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base, prec);
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr(prec);
            }
        }
        result
    }

    /// `e^z` over the ball.
    pub fn exp(&self, prec: u32) -> Self {
        let point = exp_point(&self.re, &self.im, prec);
        if self.rad.is_zero() {
            return point;
        }
        // |e^w - e^z0| <= |e^z0| (e^r - 1)
        let growth = expm1_upper(&self.rad);
        point.with_rad(&rad_up(&point.abs_upper().mul(&growth)))
    }

    /// Horner evaluation of a rational polynomial.
    pub fn eval_rat_poly(f: &RatPoly, z: &Self, prec: u32) -> Self {
        let mut acc = ComplexBall::zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(z, prec).add(&ComplexBall::from_real(c, prec), prec);
        }
        acc
    }

    pub fn eval_int_poly(f: &IntPoly, z: &Self, prec: u32) -> Self {
        let mut acc = ComplexBall::zero();
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(z, prec).add(&ComplexBall::from_bigint(c, prec), prec);
        }
        acc
    }

    /// Horner evaluation with ball coefficients.
    pub fn eval_ball_poly(coeffs: &[ComplexBall], z: &Self, prec: u32) -> Self {
        let mut acc = ComplexBall::zero();
        for c in coeffs.iter().rev() {
            acc = acc.mul(z, prec).add(c, prec);
        }
        acc
    }

    /// Bounds on the real part.
    pub fn re_interval(&self) -> (Rational, Rational) {
        let (m, r) = (self.re.to_rational(), self.rad.to_rational());
        (&m - &r, &m + &r)
    }

    pub fn im_interval(&self) -> (Rational, Rational) {
        let (m, r) = (self.im.to_rational(), self.rad.to_rational());
        (&m - &r, &m + &r)
    }

    pub fn to_c64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// Decimal midpoint strings and an outward-rounded radius that also
    /// covers the midpoint rounding.
    pub fn to_decimal(&self, sig: u32) -> (String, String, String) {
        let re = self.re.to_rational();
        let im = self.im.to_rational();
        let rre = round_decimal(&re, sig, false);
        let rim = round_decimal(&im, sig, false);
        let extra = (&re - &rre).abs() + (&im - &rim).abs();
        let rad = &self.rad.to_rational() + extra;
        (decimal_text(&rre), decimal_text(&rim), decimal_text(&round_decimal(&rad, 6, true)))
    }
}

/// `a / b` rounded up, both positive.
fn div_up(a: &Dyadic, b: &Dyadic) -> Dyadic {
    Dyadic::from_rational(&(a.to_rational() / b.to_rational()), RAD_BITS, Round::Up)
}

/// Upper bound on `e^r - 1` for `r >= 0`.
pub fn expm1_upper(r: &Dyadic) -> Dyadic {
    if r.is_zero() {
        return Dyadic::zero();
    }
    if *r <= Dyadic::pow2(-1) {
        // e^r - 1 <= r + r² for r <= 1/2
        return rad_up(&r.add(&r.mul(r)));
    }
    let e = exp_point(&r.round(64, Round::Up), &Dyadic::zero(), 64);
    rad_up(&e.abs_upper().sub(&Dyadic::one()))
}

/// Upper bound on `e^x` for real `x`.
pub fn exp_real_upper(x: &Dyadic) -> Dyadic {
    exp_point(&x.round(64, Round::Up), &Dyadic::zero(), 64).abs_upper()
}

/// Lower bound on `e^x` for real `x`.
pub fn exp_real_lower(x: &Dyadic) -> Dyadic {
    exp_point(&x.round(64, Round::Down), &Dyadic::zero(), 64).abs_lower()
}

/// `e^(x + iy)` for an exact point: halve until tiny, sum the Taylor series
/// with a tail bound, then square back.
fn exp_point(x: &Dyadic, y: &Dyadic, prec: u32) -> ComplexBall {
    if x.is_zero() && y.is_zero() {
        return ComplexBall::one();
    }
    let z = ComplexBall::exact(x.clone(), y.clone());
    let m = z.mid_abs_upper().mag();
    let k = (m + 10).max(0);
    let wp = prec + 20 + k as u32;
    let w = z.mul_pow2(-k);
    let eps = Dyadic::pow2(-(wp as i64) - 4);
    let mut sum = ComplexBall::one();
    let mut term = ComplexBall::one();
    let mut j = 1u64;
    loop {
        term = term.mul(&w, wp).div_u64(j, wp);
        let size = term.abs_upper();
        if size < eps {
            // remaining terms shrink by a factor below 1/2
            sum = sum.with_rad(&size.mul_pow2(1));
            break;
        }
        sum = sum.add(&term, wp);
        j += 1;
    }
    for _ in 0..k {
        sum = sum.sqr(wp);
    }
    let (r, i, rad) = (sum.re.clone(), sum.im.clone(), sum.rad.clone());
    ComplexBall::rounded(r, i, rad, prec)
}

/// Compact decimal text: plain notation for moderate exponents, otherwise
/// `d.ddde±k`.
pub fn decimal_text(q: &Rational) -> String {
    use crate::exact::rational::{decimal_exponent, fmt_rational};
    if q.is_zero() {
        return "0".to_string();
    }
    let e = decimal_exponent(q);
    if (-6..=21).contains(&e) {
        return fmt_rational(q);
    }
    let shift = if e >= 0 {
        Rational::new(1.into(), num_traits::pow(BigInt::from(10), e as usize))
    } else {
        Rational::from_integer(num_traits::pow(BigInt::from(10), (-e) as usize))
    };
    format!("{}e{}", fmt_rational(&(q * shift)), e)
}

impl fmt::Debug for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im, rad) = self.to_decimal(20);
        write!(f, "[{re} + {im}i ± {rad}]")
    }
}

impl fmt::Display for ComplexBall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl serde::Serialize for ComplexBall {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let (re, im, rad) = self.to_decimal(40);
        let mut st = s.serialize_struct("ComplexBall", 3)?;
        st.serialize_field("re_mid", &re)?;
        st.serialize_field("im_mid", &im)?;
        st.serialize_field("radius", &rad)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn e_approx() -> Rational {
        crate::exact::rational::parse_rational("2.718281828459045235360287471352662497757").unwrap()
    }

    #[test]
    fn exp_of_one_contains_e() {
        for prec in [64, 128, 256] {
            let e = ComplexBall::one().exp(prec);
            let tol = num_traits::pow(rat(1, 10), 38);
            let (lo, hi) = e.re_interval();
            let ea = e_approx();
            assert!(lo <= &ea + &tol && &ea - &tol <= hi, "prec {prec}: {e:?}");
            assert!(e.rad() < &Dyadic::pow2(-(prec as i64) + 8));
        }
    }

    #[test]
    fn exp_of_i_is_on_unit_circle() {
        let z = ComplexBall::exact(Dyadic::zero(), Dyadic::one()).exp(128);
        let (c, s) = z.to_c64();
        assert!((c - 1f64.cos()).abs() < 1e-15 && (s - 1f64.sin()).abs() < 1e-15);
        let big = ComplexBall::from_i64(-40).exp(128);
        assert!((big.re().to_f64() - (-40f64).exp()).abs() < 1e-30);
    }

    #[test]
    fn inverse_contains_true_value() {
        let z = ComplexBall::from_rational(&rat(3, 7), &rat(-2, 5), 100).with_rad(&Dyadic::pow2(-60));
        let w = z.inv(100).unwrap();
        // 1/(3/7 - 2/5 i) = (3/7 + 2/5 i) / (9/49 + 4/25)
        let n = rat(9, 49) + rat(4, 25);
        assert!(w.contains_point(&(rat(3, 7) / &n), &(rat(2, 5) / &n)));
        assert!(ComplexBall::zero().with_rad(&Dyadic::one()).inv(64).is_none());
    }

    #[test]
    fn arithmetic_is_inclusive() {
        let a = ComplexBall::from_rational(&rat(1, 3), &rat(1, 7), 40);
        let b = ComplexBall::from_rational(&rat(-2, 9), &rat(5, 11), 40);
        let p = a.mul(&b, 40);
        let (re, im) = (rat(1, 3) * rat(-2, 9) - rat(1, 7) * rat(5, 11), rat(1, 3) * rat(5, 11) + rat(1, 7) * rat(-2, 9));
        assert!(p.contains_point(&re, &im));
        let s = a.add(&b, 20);
        assert!(s.contains_point(&(rat(1, 3) - rat(2, 9)), &(rat(1, 7) + rat(5, 11))));
        let d = ComplexBall::from_i64(1).div_u64(3, 50);
        assert!(d.contains_point(&rat(1, 3), &int(0)));
    }

    #[test]
    fn decimal_output_covers_value() {
        let third = ComplexBall::from_real(&rat(1, 3), 200);
        let (re, _, rad) = third.to_decimal(10);
        assert_eq!(re, "0.3333333333");
        assert!(rad.starts_with("3.33334e-11") || rad.starts_with("3.33333e-11"), "{rad}");
        assert_eq!(decimal_text(&rat(1, 8)), "0.125");
    }
}
