//! Enclosures of `∫_a^b f(x) e^{-x} dx` along the straight segment from `a`
//! to `b`, for polynomial `f`.
//!
//! The production route integrates by parts: with `F = f + f' + f'' + ...`
//! the integral is `e^{-a} F(a) - e^{-b} F(b)`. The second route expands the
//! integrand in a Taylor series along the segment and bounds the tail, and is
//! kept as an independent check.

use num_bigint::BigInt;

use super::ball::{exp_real_upper, ComplexBall};
use super::dyadic::{Dyadic, Round};
use crate::error::{domain, Error, Result};
use crate::exact::poly::ScaledPoly;

/// Below this working precision the enclosures are not worth having.
pub const MIN_PREC: u32 = 64;

fn check(prec: u32) -> Result<()> {
    if prec < MIN_PREC {
        return domain(format!("precision {prec} is below the floor of {MIN_PREC} bits"));
    }
    Ok(())
}

fn div_scale(x: &ComplexBall, scale: &BigInt, prec: u32) -> Result<ComplexBall> {
    if scale == &BigInt::from(1) {
        return Ok(x.clone());
    }
    let s = ComplexBall::from_bigint(scale, prec + 32);
    x.div(&s, prec).ok_or_else(|| Error::Consistency("nonpositive scale".into()))
}

/// Integration by parts through the derivative sum.
pub fn segment_integral_exp(f: &ScaledPoly, a: &ComplexBall, b: &ComplexBall, prec: u32) -> Result<ComplexBall> {
    check(prec)?;
    if a == b && a.is_exact() {
        return Ok(ComplexBall::zero());
    }
    let big = f.derivative_sum();
    let wp = prec + 32 + cancellation_bits(&big, &[a, b]);
    let at = |z: &ComplexBall| -> ComplexBall {
        let e = z.neg().exp(wp);
        e.mul(&ComplexBall::eval_int_poly(&big.numer, z, wp), wp)
    };
    let value = at(a).sub(&at(b), wp);
    Ok(round_to(&div_scale(&value, &f.scale, wp)?, prec))
}

/// `e^{-a} F(a)` for the derivative sum `F` of `f`, scaled. Exposed so the
/// Hermite identities can be checked endpoint by endpoint.
pub fn weighted_derivative_sum(f: &ScaledPoly, z: &ComplexBall, prec: u32) -> Result<ComplexBall> {
    check(prec)?;
    let big = f.derivative_sum();
    let wp = prec + 32 + cancellation_bits(&big, &[z]);
    let v = z.neg().exp(wp).mul(&ComplexBall::eval_int_poly(&big.numer, z, wp), wp);
    Ok(round_to(&div_scale(&v, &f.scale, wp)?, prec))
}

/// Taylor expansion along the segment: with `x = a + sΔ`,
/// `I = Δ e^{-a} Σ_k c_k Σ_n (-Δ)^n / (n! (k+n+1))`, where `c_k` are the
/// coefficients of `f(a + sΔ)` in `s`. The inner series is cut once its terms
/// drop below the working precision, and its tail is bounded by
/// `|Δ|^{N+1}/(N+1)! · e^{|Δ|}`.
pub fn segment_integral_exp_taylor(f: &ScaledPoly, a: &ComplexBall, b: &ComplexBall, prec: u32) -> Result<ComplexBall> {
    check(prec)?;
    if a == b && a.is_exact() {
        return Ok(ComplexBall::zero());
    }
    let wp = prec + 48;
    let delta = b.sub(a, wp);
    // coefficients of f(a + sΔ) by Horner on polynomials in s
    let lin = [a.clone(), delta.clone()];
    let mut g: Vec<ComplexBall> = Vec::new();
    for c in f.numer.coeffs().iter().rev() {
        let mut next = vec![ComplexBall::zero(); g.len() + 1];
        for (i, gi) in g.iter().enumerate() {
            next[i] = next[i].add(&gi.mul(&lin[0], wp), wp);
            next[i + 1] = next[i + 1].add(&gi.mul(&lin[1], wp), wp);
        }
        next[0] = next[0].add(&ComplexBall::from_bigint(c, wp), wp);
        g = next;
    }
    // e_n = (-Δ)^n / n!
    let dabs = delta.abs_upper();
    let eps = Dyadic::pow2(-(wp as i64) - 8);
    let mut e = vec![ComplexBall::one()];
    let mut tail;
    let mut n = 0u64;
    loop {
        n += 1;
        let next = e.last().unwrap().mul(&delta.neg(), wp).div_u64(n, wp);
        // |Δ|^n / n! bounds the next omitted term's size
        let size = next.abs_upper();
        if size < eps && n as f64 > 2.0 * dabs.to_f64() {
            tail = size;
            break;
        }
        e.push(next);
    }
    // Σ_{m>=n} |Δ|^m/m! <= |Δ|^n/n! · e^{|Δ|}
    tail = tail.mul(&exp_real_upper(&dabs)).round(32, Round::Up);
    let mut total = ComplexBall::zero();
    let mut abs_sum = Dyadic::zero();
    for (k, ck) in g.iter().enumerate() {
        if ck.is_exact() && ck.re().is_zero() && ck.im().is_zero() {
            continue;
        }
        let mut inner = ComplexBall::zero();
        for (m, em) in e.iter().enumerate() {
            inner = inner.add(&em.div_u64((k + m + 1) as u64, wp), wp);
        }
        total = total.add(&ck.mul(&inner, wp), wp);
        abs_sum = abs_sum.add(&ck.abs_upper());
    }
    total = total.with_rad(&abs_sum.mul(&tail));
    let value = delta.mul(&a.neg().exp(wp), wp).mul(&total, wp);
    Ok(round_to(&div_scale(&value, &f.scale, wp)?, prec))
}

/// Bits lost when the endpoint terms are large and the integral is small:
/// `log2 |F(z)| + log2 |e^{-z}|`, bounded crudely.
fn cancellation_bits(big: &ScaledPoly, pts: &[&ComplexBall]) -> u32 {
    let coeff_bits = big.numer.coeffs().iter().map(|c| c.bits()).max().unwrap_or(0) as i64;
    let deg = big.numer.degree().unwrap_or(0) as i64;
    let mut worst = 0i64;
    for z in pts {
        let m = z.abs_upper();
        let lg = if m.is_zero() { 0 } else { m.mag().max(0) };
        // |e^{-z}| <= e^{|z|} < 2^{1.45 |z|}
        let e_bits = (m.to_f64() * 1.45).ceil() as i64;
        worst = worst.max(coeff_bits + deg * lg + e_bits + 8);
    }
    worst.clamp(0, 1 << 20) as u32
}

fn round_to(x: &ComplexBall, prec: u32) -> ComplexBall {
    x.add(&ComplexBall::zero(), prec)
}
