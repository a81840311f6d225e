//! Certified isolation of complex polynomial roots.
//!
//! Approximations come from Aberth's simultaneous iteration, first in double
//! precision and then in dyadic arithmetic at doubling precision. A set of
//! approximations is accepted when Smith's inclusion discs
//! `D(z_i, n |f(z_i) / Π_{j≠i} (z_i - z_j)|)` are pairwise disjoint, since each
//! component of k discs holds exactly k roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;

use super::ball::{decimal_text, ComplexBall};
use super::dyadic::{Dyadic, Round};
use crate::error::{domain, Error, Result};
use crate::exact::gcd::{squarefree_decomposition, squarefree_part};
use crate::exact::poly::RatPoly;
use crate::exact::rational::{round_decimal, Rational};

/// Largest working precision before giving up.
pub const PREC_CAP: u32 = 8192;

/// Closed axis-aligned rectangle with exact rational corners.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IsolatingBox {
    pub re_lo: Rational,
    pub re_hi: Rational,
    pub im_lo: Rational,
    pub im_hi: Rational,
}

impl IsolatingBox {
    pub fn new(re_lo: Rational, re_hi: Rational, im_lo: Rational, im_hi: Rational) -> Self {
        assert!(re_lo <= re_hi && im_lo <= im_hi, "inverted box");
        IsolatingBox { re_lo, re_hi, im_lo, im_hi }
    }

    pub fn point(re: Rational, im: Rational) -> Self {
        IsolatingBox { re_lo: re.clone(), re_hi: re, im_lo: im.clone(), im_hi: im }
    }

    /// Square of half-side `half` centered at `(re, im)`.
    pub fn around(re: &Rational, im: &Rational, half: &Rational) -> Self {
        IsolatingBox::new(re - half, re + half, im - half, im + half)
    }

    pub fn width(&self) -> Rational {
        let w = &self.re_hi - &self.re_lo;
        let h = &self.im_hi - &self.im_lo;
        if w > h {
            w
        } else {
            h
        }
    }

    pub fn center(&self) -> (Rational, Rational) {
        let two = Rational::from_integer(2.into());
        ((&self.re_lo + &self.re_hi) / &two, (&self.im_lo + &self.im_hi) / two)
    }

    pub fn is_real(&self) -> bool {
        self.im_lo.is_zero() && self.im_hi.is_zero()
    }

    pub fn contains_point(&self, re: &Rational, im: &Rational) -> bool {
        &self.re_lo <= re && re <= &self.re_hi && &self.im_lo <= im && im <= &self.im_hi
    }

    pub fn contains_box(&self, o: &Self) -> bool {
        self.re_lo <= o.re_lo && o.re_hi <= self.re_hi && self.im_lo <= o.im_lo && o.im_hi <= self.im_hi
    }

    pub fn intersects(&self, o: &Self) -> bool {
        self.re_lo <= o.re_hi && o.re_lo <= self.re_hi && self.im_lo <= o.im_hi && o.im_lo <= self.im_hi
    }

    pub fn intersection(&self, o: &Self) -> Option<Self> {
        if !self.intersects(o) {
            return None;
        }
        let max = |a: &Rational, b: &Rational| if a > b { a.clone() } else { b.clone() };
        let min = |a: &Rational, b: &Rational| if a < b { a.clone() } else { b.clone() };
        Some(IsolatingBox {
            re_lo: max(&self.re_lo, &o.re_lo),
            re_hi: min(&self.re_hi, &o.re_hi),
            im_lo: max(&self.im_lo, &o.im_lo),
            im_hi: min(&self.im_hi, &o.im_hi),
        })
    }

    /// Mirror image in the real axis.
    pub fn conj(&self) -> Self {
        IsolatingBox {
            re_lo: self.re_lo.clone(),
            re_hi: self.re_hi.clone(),
            im_lo: -self.im_hi.clone(),
            im_hi: -self.im_lo.clone(),
        }
    }

    /// A ball containing the whole box.
    pub fn to_ball(&self, prec: u32) -> ComplexBall {
        let (cr, ci) = self.center();
        let two = Rational::from_integer(2.into());
        let hw = (&self.re_hi - &self.re_lo) / &two;
        let hh = (&self.im_hi - &self.im_lo) / two;
        let d2 = Dyadic::from_rational(&(&hw * &hw + &hh * &hh), 64, Round::Up);
        ComplexBall::from_rational(&cr, &ci, prec).with_rad(&d2.sqrt_up(32))
    }

    /// Order by center, real part first.
    pub fn center_cmp(&self, o: &Self) -> Ordering {
        let (a, b) = (self.center(), o.center());
        a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1))
    }
}

impl serde::Serialize for IsolatingBox {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // outward rounding keeps the printed box a superset
        let lo = |q: &Rational| decimal_text(&round_decimal(q, 40, false));
        let hi = |q: &Rational| decimal_text(&round_decimal(q, 40, true));
        let mut st = s.serialize_struct("IsolatingBox", 4)?;
        st.serialize_field("re_lo", &lo(&self.re_lo))?;
        st.serialize_field("re_hi", &hi(&self.re_hi))?;
        st.serialize_field("im_lo", &lo(&self.im_lo))?;
        st.serialize_field("im_hi", &hi(&self.im_hi))?;
        st.end()
    }
}

/// All distinct roots of `f` with multiplicities. Boxes are pairwise disjoint,
/// have side at most `target`, and come sorted by center (real part, then
/// imaginary part). Roots that are provably real get boxes of zero height.
pub fn isolate_complex_roots(f: &RatPoly, target: &Rational) -> Result<Vec<(IsolatingBox, usize)>> {
    if f.is_zero() || f.is_constant() {
        return domain("root isolation needs a nonconstant polynomial");
    }
    if !target.is_positive() {
        return domain("target radius must be positive");
    }
    let parts = squarefree_decomposition(f);
    let mut tgt = target.clone();
    for _ in 0..40 {
        let mut all = Vec::new();
        for (g, mult) in &parts {
            for b in isolate_squarefree(g, &tgt)? {
                all.push((b, *mult));
            }
        }
        let disjoint = (0..all.len()).all(|i| (i + 1..all.len()).all(|j| !all[i].0.intersects(&all[j].0)));
        if disjoint {
            all.sort_by(|a, b| a.0.center_cmp(&b.0));
            return Ok(all);
        }
        tgt /= Rational::from_integer(16.into());
    }
    Err(Error::Precision { bits: PREC_CAP, detail: "could not separate roots of distinct squarefree factors".into() })
}

/// Boxes for the roots of a squarefree polynomial.
pub fn isolate_squarefree(g: &RatPoly, target: &Rational) -> Result<Vec<IsolatingBox>> {
    let n = g.deg();
    let g = g.monic();
    if n == 1 {
        return Ok(vec![IsolatingBox::point(-g.coeff(0), Rational::zero())]);
    }
    let mut prec = 64u32;
    let mut z = match aberth_f64(&g) {
        Some(z) => z,
        None => aberth_dyadic(&g, initial_points(&g), prec, 400),
    };
    loop {
        if let Some(boxes) = certify(&g, &z, prec, target) {
            return Ok(boxes);
        }
        prec *= 2;
        if prec > PREC_CAP {
            return Err(Error::Precision { bits: PREC_CAP, detail: format!("root isolation of {g}") });
        }
        z = aberth_dyadic(&g, z, prec, 60);
    }
}

/// Approximate complex value with dyadic parts; no error tracking.
#[derive(Clone, Debug)]
struct Cx {
    re: Dyadic,
    im: Dyadic,
}

impl Cx {
    fn zero() -> Self {
        Cx { re: Dyadic::zero(), im: Dyadic::zero() }
    }
    fn one() -> Self {
        Cx { re: Dyadic::one(), im: Dyadic::zero() }
    }
    fn from_c64(z: Complex64) -> Self {
        Cx { re: Dyadic::from_f64(z.re), im: Dyadic::from_f64(z.im) }
    }
    fn add(&self, o: &Self, p: u32) -> Self {
        Cx { re: self.re.add(&o.re).round(p, Round::Nearest), im: self.im.add(&o.im).round(p, Round::Nearest) }
    }
    fn sub(&self, o: &Self, p: u32) -> Self {
        Cx { re: self.re.sub(&o.re).round(p, Round::Nearest), im: self.im.sub(&o.im).round(p, Round::Nearest) }
    }
    fn mul(&self, o: &Self, p: u32) -> Self {
        Cx {
            re: self.re.mul(&o.re).sub(&self.im.mul(&o.im)).round(p, Round::Nearest),
            im: self.re.mul(&o.im).add(&self.im.mul(&o.re)).round(p, Round::Nearest),
        }
    }
    fn norm_sqr(&self) -> Dyadic {
        self.re.mul(&self.re).add(&self.im.mul(&self.im))
    }
    fn div(&self, o: &Self, p: u32) -> Option<Self> {
        let n = o.norm_sqr();
        if n.is_zero() {
            return None;
        }
        let num = self.mul(&Cx { re: o.re.clone(), im: o.im.neg() }, p + 8);
        Some(Cx { re: num.re.div_approx(&n, p), im: num.im.div_approx(&n, p) })
    }
    fn to_ball(&self) -> ComplexBall {
        ComplexBall::exact(self.re.clone(), self.im.clone())
    }
}

fn f64_coeffs(g: &RatPoly) -> Option<Vec<Complex64>> {
    let v: Vec<f64> = g
        .coeffs()
        .iter()
        .map(|c| Dyadic::from_rational(c, 60, Round::Nearest).to_f64())
        .collect();
    v.iter().all(|x| x.is_finite() && x.abs() < 1e250).then(|| v.into_iter().map(|x| Complex64::new(x, 0.0)).collect())
}

/// Fujiwara's bound on root moduli for a monic polynomial.
fn root_bound(g: &RatPoly) -> f64 {
    let n = g.deg();
    let mut best: f64 = 0.0;
    for k in 1..=n {
        let c = Dyadic::from_rational(&g.coeff(n - k).abs(), 53, Round::Up).to_f64();
        let c = if k == n { c / 2.0 } else { c };
        if c > 0.0 {
            best = best.max(c.powf(1.0 / k as f64));
        }
    }
    (2.0 * best).max(1e-3)
}

fn start_c64(n: usize, r: f64) -> Vec<Complex64> {
    (0..n)
        .map(|k| Complex64::from_polar(r, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect()
}

fn initial_points(g: &RatPoly) -> Vec<Cx> {
    let r = root_bound(g).min(1e300);
    start_c64(g.deg(), r).into_iter().map(Cx::from_c64).collect()
}

fn aberth_f64(g: &RatPoly) -> Option<Vec<Cx>> {
    let c = f64_coeffs(g)?;
    let n = g.deg();
    let dc: Vec<Complex64> = (1..=n).map(|i| c[i] * i as f64).collect();
    let horner = |cs: &[Complex64], z: Complex64| cs.iter().rev().fold(Complex64::zero(), |acc, &a| acc * z + a);
    let mut z = start_c64(n, root_bound(g));
    for _ in 0..1000 {
        let mut worst: f64 = 0.0;
        for i in 0..n {
            let p = horner(&c, z[i]);
            let dp = horner(&dc, z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (Complex64::one() - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                worst = worst.max(w.norm() / z[i].norm().max(1e-300));
            }
        }
        if worst < 1e-15 {
            break;
        }
    }
    z.iter().all(|w| w.is_finite()).then(|| z.into_iter().map(Cx::from_c64).collect())
}

fn aberth_dyadic(g: &RatPoly, mut z: Vec<Cx>, prec: u32, max_iter: usize) -> Vec<Cx> {
    let n = g.deg();
    let coeffs: Vec<Cx> = g
        .coeffs()
        .iter()
        .map(|c| Cx { re: Dyadic::from_rational(c, prec + 16, Round::Nearest), im: Dyadic::zero() })
        .collect();
    let dg = g.derivative();
    let dcoeffs: Vec<Cx> = dg
        .coeffs()
        .iter()
        .map(|c| Cx { re: Dyadic::from_rational(c, prec + 16, Round::Nearest), im: Dyadic::zero() })
        .collect();
    let wp = prec + 16;
    let horner = |cs: &[Cx], x: &Cx| cs.iter().rev().fold(Cx::zero(), |acc, a| acc.mul(x, wp).add(a, wp));
    let tol = -(prec as i64) + 6;
    for _ in 0..max_iter {
        let mut converged = true;
        for i in 0..n {
            let p = horner(&coeffs, &z[i]);
            if p.norm_sqr().is_zero() {
                continue;
            }
            let dp = horner(&dcoeffs, &z[i]);
            let Some(ratio) = p.div(&dp, wp) else { continue };
            let mut s = Cx::zero();
            for j in (0..n).filter(|&j| j != i) {
                if let Some(q) = Cx::one().div(&z[i].sub(&z[j], wp), wp) {
                    s = s.add(&q, wp);
                }
            }
            let denom = Cx::one().sub(&ratio.mul(&s, wp), wp);
            let Some(w) = ratio.div(&denom, wp) else { continue };
            z[i] = z[i].sub(&w, wp);
            let scale = z[i].norm_sqr().mag().max(0) / 2;
            if w.norm_sqr().mag() / 2 > tol + scale {
                converged = false;
            }
        }
        if converged {
            break;
        }
    }
    z
}

/// Smith-disc certification; `None` if the discs are not yet separated or
/// too large.
fn certify(g: &RatPoly, z: &[Cx], prec: u32, target: &Rational) -> Option<Vec<IsolatingBox>> {
    let n = g.deg();
    let wp = prec + 32;
    let balls: Vec<ComplexBall> = z.iter().map(Cx::to_ball).collect();
    let nb = Dyadic::from_i64(n as i64);
    let mut radii = Vec::with_capacity(n);
    for i in 0..n {
        let val = ComplexBall::eval_rat_poly(g, &balls[i], wp);
        let mut denom = ComplexBall::one();
        for j in (0..n).filter(|&j| j != i) {
            denom = denom.mul(&balls[i].sub(&balls[j], wp), wp);
        }
        let w = val.div(&denom, wp)?;
        radii.push(w.abs_upper().mul(&nb));
    }
    let half_target = Dyadic::from_rational(target, 64, Round::Down).mul_pow2(-1);
    if radii.iter().any(|r| *r > half_target) {
        return None;
    }
    // pairwise disjoint discs
    for i in 0..n {
        for j in (i + 1)..n {
            let d = z[i].sub(&z[j], u32::MAX).norm_sqr();
            let r = radii[i].add(&radii[j]);
            if d <= r.mul(&r) {
                return None;
            }
        }
    }
    let mut boxes = Vec::with_capacity(n);
    for i in 0..n {
        let (re, im, r) = (z[i].re.to_rational(), z[i].im.to_rational(), radii[i].to_rational());
        // the root is real when the mirrored disc meets only its own disc
        let meets_axis = im.abs() <= r;
        let mirror_alone = meets_axis
            && (0..n).filter(|&j| j != i).all(|j| {
                let dr = z[i].re.sub(&z[j].re);
                let di = z[i].im.neg().sub(&z[j].im);
                let rr = radii[i].add(&radii[j]);
                dr.mul(&dr).add(&di.mul(&di)) > rr.mul(&rr)
            });
        boxes.push(if mirror_alone {
            IsolatingBox::new(&re - &r, &re + &r, Rational::zero(), Rational::zero())
        } else {
            IsolatingBox::around(&re, &im, &r)
        });
    }
    let disjoint = (0..n).all(|i| (i + 1..n).all(|j| !boxes[i].intersects(&boxes[j])));
    disjoint.then_some(boxes)
}

/// Shrink a box known to hold exactly one root of `f` (validated by a full
/// isolation first) to side at most `target`. The result lies inside `bx`.
pub fn refine_box(f: &RatPoly, bx: &IsolatingBox, target: &Rational) -> Result<IsolatingBox> {
    if f.is_constant() {
        return domain("refinement needs a nonconstant polynomial");
    }
    if !target.is_positive() {
        return domain("target radius must be positive");
    }
    let g = squarefree_part(f);
    let inside = locate_in_box(&g, bx)?;
    refine_known(&g, &inside, target)
}

/// Find the root box (from a full isolation) that lies in `bx`, requiring that
/// exactly one root of squarefree `g` lies in `bx`.
fn locate_in_box(g: &RatPoly, bx: &IsolatingBox) -> Result<IsolatingBox> {
    let mut tgt = bx.width() / Rational::from_integer(4.into());
    if tgt.is_zero() {
        tgt = Rational::new(BigInt::one(), BigInt::from(1u64 << 20));
    }
    for _ in 0..60 {
        let boxes = isolate_squarefree(g, &tgt)?;
        let mut inside = Vec::new();
        let mut straddling = 0;
        for b in boxes {
            if bx.contains_box(&b) {
                inside.push(b);
            } else if b.intersects(bx) {
                straddling += 1;
            }
        }
        if straddling == 0 {
            return match inside.len() {
                1 => Ok(inside.pop().unwrap()),
                0 => domain(format!("box contains no root of {g}")),
                k => domain(format!("box contains {k} roots of {g}")),
            };
        }
        if inside.len() > 1 {
            return domain(format!("box contains at least {} roots of {g}", inside.len()));
        }
        tgt /= Rational::from_integer(16.into());
    }
    domain(format!("a root of {g} lies on the boundary of the box"))
}

/// Refine a box trusted to isolate one root of the squarefree `g`.
pub fn refine_known(g: &RatPoly, bx: &IsolatingBox, target: &Rational) -> Result<IsolatingBox> {
    if bx.width() <= *target {
        return Ok(bx.clone());
    }
    if g.deg() == 1 {
        return Ok(IsolatingBox::point(-g.monic().coeff(0), Rational::zero()));
    }
    if bx.is_real() {
        return Ok(refine_real(g, bx, target));
    }
    if let Some(b) = krawczyk_refine(g, bx, target) {
        return Ok(b);
    }
    // fall back to full isolation until only one root box meets bx
    let mut tgt = target.clone();
    for _ in 0..60 {
        let boxes = isolate_squarefree(g, &tgt)?;
        let hits: Vec<&IsolatingBox> = boxes.iter().filter(|b| b.intersects(bx)).collect();
        if hits.len() == 1 {
            return Ok(hits[0].intersection(bx).expect("intersecting boxes"));
        }
        if hits.is_empty() {
            return Err(Error::Consistency(format!("box lost its root of {g}")));
        }
        tgt /= Rational::from_integer(16.into());
    }
    Err(Error::Precision { bits: PREC_CAP, detail: format!("refinement of a root of {g}") })
}

fn sign(q: &Rational) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_negative() {
        -1
    } else {
        1
    }
}

/// Newton-accelerated bisection on the real line with exact sign tests.
fn refine_real(g: &RatPoly, bx: &IsolatingBox, target: &Rational) -> IsolatingBox {
    let (mut lo, mut hi) = (bx.re_lo.clone(), bx.re_hi.clone());
    let mut s_lo = sign(&g.eval(&lo));
    if s_lo == 0 {
        return IsolatingBox::point(lo, Rational::zero());
    }
    if sign(&g.eval(&hi)) == 0 {
        return IsolatingBox::point(hi, Rational::zero());
    }
    let dg = g.derivative();
    let two = Rational::from_integer(2.into());
    let bits = (target.denom().bits() as i64 - target.numer().bits() as i64).max(0) as u32 + 64;
    let quarter = target / Rational::from_integer(4.into());
    while &hi - &lo > *target {
        // Newton from the midpoint, then test a tight bracket around it
        let mid = (&lo + &hi) / &two;
        let mut x = Dyadic::from_rational(&mid, bits, Round::Nearest).to_rational();
        for _ in 0..6 {
            let d = dg.eval(&x);
            if d.is_zero() {
                break;
            }
            let step = g.eval(&x) / d;
            x -= step;
            x = Dyadic::from_rational(&x, bits, Round::Nearest).to_rational();
        }
        if x > lo && x < hi {
            let a = if &x - &quarter > lo { &x - &quarter } else { lo.clone() };
            let b = if &x + &quarter < hi { &x + &quarter } else { hi.clone() };
            let (sa, sb) = (sign(&g.eval(&a)), sign(&g.eval(&b)));
            if sa == 0 {
                return IsolatingBox::point(a, Rational::zero());
            }
            if sb == 0 {
                return IsolatingBox::point(b, Rational::zero());
            }
            if sa != sb {
                lo = a;
                hi = b;
                s_lo = sa;
                continue;
            }
        }
        let sm = sign(&g.eval(&mid));
        if sm == 0 {
            return IsolatingBox::point(mid, Rational::zero());
        }
        if sm == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    IsolatingBox::new(lo, hi, Rational::zero(), Rational::zero())
}

/// Newton iteration followed by a complex Krawczyk test on a disc inside `bx`.
fn krawczyk_refine(g: &RatPoly, bx: &IsolatingBox, target: &Rational) -> Option<IsolatingBox> {
    let dg = g.derivative();
    let need = (target.denom().bits() as i64 - target.numer().bits() as i64).max(0) as u32;
    let mut prec = (need + 64).max(128);
    let (cr, ci) = bx.center();
    let mut z = Cx {
        re: Dyadic::from_rational(&cr, prec, Round::Nearest),
        im: Dyadic::from_rational(&ci, prec, Round::Nearest),
    };
    let rho = Dyadic::from_rational(target, 40, Round::Down).mul_pow2(-2);
    for _attempt in 0..3 {
        let wp = prec + 16;
        for _ in 0..200 {
            let p = ComplexBall::eval_rat_poly(g, &z.to_ball(), wp);
            let dp = ComplexBall::eval_rat_poly(&dg, &z.to_ball(), wp);
            let Some(step) = p.div(&dp, wp) else { return None };
            z = Cx {
                re: z.re.sub(step.re()).round(prec, Round::Nearest),
                im: z.im.sub(step.im()).round(prec, Round::Nearest),
            };
            if step.mid_abs_upper().mag() < rho.mag() - 20 {
                break;
            }
        }
        let (zr, zi) = (z.re.to_rational(), z.im.to_rational());
        let r = rho.to_rational();
        let square = IsolatingBox::around(&zr, &zi, &r);
        if !bx.contains_box(&square) {
            return None;
        }
        let disc = z.to_ball().with_rad(&rho);
        if krawczyk_contracts(g, &dg, &z, &disc, wp) {
            return square.intersection(bx);
        }
        prec *= 2;
        if prec > PREC_CAP {
            return None;
        }
    }
    None
}

/// `K = z - Y g(z) + (1 - Y g'(D))(D - z)` strictly inside `D` proves a unique
/// root in `D`.
fn krawczyk_contracts(g: &RatPoly, dg: &RatPoly, z: &Cx, disc: &ComplexBall, wp: u32) -> bool {
    let zb = z.to_ball();
    let gz = ComplexBall::eval_rat_poly(g, &zb, wp);
    let dgz = ComplexBall::eval_rat_poly(dg, &zb, wp);
    let Some(y) = dgz.inv(wp) else { return false };
    let y = y.mid();
    let dgd = ComplexBall::eval_rat_poly(dg, disc, wp);
    let spread = ComplexBall::zero().with_rad(disc.rad());
    let k = zb
        .sub(&y.mul(&gz, wp), wp)
        .add(&ComplexBall::one().sub(&y.mul(&dgd, wp), wp).mul(&spread, wp), wp);
    disc.contains_strictly(&k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn isolates_simple_cases() {
        let t = rat(1, 1000);
        let r = isolate_complex_roots(&p("x"), &t).unwrap();
        assert_eq!(r, vec![(IsolatingBox::point(int(0), int(0)), 1)]);
        let r = isolate_complex_roots(&p("x^2 + 1"), &t).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r[0].0.contains_point(&int(0), &int(-1)) || r[0].0.im_hi < int(0));
        assert!(r[1].0.im_lo > int(0));
        let r = isolate_complex_roots(&p("x^3 - 2*x^2 + x"), &t).unwrap();
        assert_eq!(r.iter().map(|x| x.1).collect::<Vec<_>>(), vec![1, 2]);
        assert!(isolate_complex_roots(&p("x^2 - 2"), &int(0)).is_err());
    }

    #[test]
    fn real_roots_are_flagged() {
        let r = isolate_complex_roots(&p("x^3 - 2"), &rat(1, 1_000_000)).unwrap();
        assert_eq!(r.len(), 3);
        assert_eq!(r.iter().filter(|b| b.0.is_real()).count(), 1);
        let r = isolate_complex_roots(&p("x^4 - 10*x^2 + 1"), &rat(1, 1000)).unwrap();
        assert!(r.iter().all(|b| b.0.is_real()));
    }

    #[test]
    fn refines_to_tiny_boxes() {
        let f = p("x^2 - 2");
        let bx = IsolatingBox::around(&rat(141, 100), &int(0), &rat(1, 10));
        let tiny = num_traits::pow(rat(1, 10), 30);
        let r = refine_box(&f, &bx, &tiny).unwrap();
        assert!(r.width() <= tiny && bx.contains_box(&r));
        let lo = &r.re_lo;
        assert!(lo * lo <= int(2) && &r.re_hi * &r.re_hi >= int(2));

        let f = p("x^2 + 1");
        let upper = IsolatingBox::new(rat(-1, 2), rat(1, 2), rat(1, 2), rat(3, 2));
        let tiny = num_traits::pow(rat(1, 10), 50);
        let r = refine_box(&f, &upper, &tiny).unwrap();
        assert!(r.width() <= tiny && r.contains_point(&int(0), &int(1)) || r.im_lo <= int(1) && r.im_hi >= int(1));
        assert!(refine_box(&f, &IsolatingBox::around(&int(0), &int(0), &int(3)), &tiny).is_err());
    }

    #[test]
    fn clustered_and_high_degree() {
        // roots 1, 1 + 1e-12
        let f = &p("x - 1") * &p("x - 1000000000001/1000000000000");
        let r = isolate_complex_roots(&f, &rat(1, 10)).unwrap();
        assert_eq!(r.len(), 2);
        let mut f = RatPoly::one();
        for k in 1..=20 {
            f = &f * &RatPoly::linear_root(&int(k));
        }
        let r = isolate_complex_roots(&(&f + &p("1/1000000")), &rat(1, 100)).unwrap();
        assert_eq!(r.len(), 20);
    }
}
