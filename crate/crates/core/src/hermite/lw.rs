//! The machine behind `R = Σ_j b*_j e^{β_j}`, obtained from `Σ b_k e^{α_k}`
//! by multiplying over all embeddings of the normal closure.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;

use super::certificate::{best, HermiteCertificate};
use super::galois::NormalClosure;
use super::pi::{segment_max, DEFAULT_CAP};
use crate::error::{consistency, domain, Error, Result};
use crate::exact::integers::{factorial, is_prime_u64, mod_u64, primes_up_to};
use crate::exact::poly::IntPoly;
use crate::exact::rational::Rational;
use crate::fields::{apply_embedding, element_minpoly, element_value, norm, FieldElement};
use crate::numerics::ball::{exp_real_upper, ComplexBall};
use crate::numerics::dyadic::{Dyadic, Round};
use crate::qbar::{lex_cmp, root_multiplier, same_value, AlgebraicNumber};

#[derive(Clone, Debug)]
pub struct LwMachine {
    pub alphas: Vec<AlgebraicNumber>,
    pub b: Vec<BigInt>,
    pub closure: NormalClosure,
    /// Distinct exponents, in increasing lexicographic order of value.
    pub w: Vec<FieldElement>,
    pub w_values: Vec<AlgebraicNumber>,
    pub b_star: Vec<BigInt>,
    pub c: BigInt,
    /// `c^t ∏(x - β_j)`, which has integer coefficients.
    pub h: IntPoly,
    /// Coefficients of `U_j = c^{t-1} ∏_{i≠j} (x - β_i)`, low degree first.
    pub u: Vec<Vec<FieldElement>>,
    /// `∏_j N(b*_j c U_j(β_j))`.
    pub d: BigInt,
}

impl serde::Serialize for LwMachine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("LwMachine", 9)?;
        st.serialize_field("kind", "lw")?;
        st.serialize_field("alphas", &self.alphas)?;
        st.serialize_field("b", &self.b.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("L", &self.closure.field)?;
        st.serialize_field("W", &self.w)?;
        st.serialize_field("b_star", &self.b_star.iter().map(|x| x.to_string()).collect::<Vec<_>>())?;
        st.serialize_field("c", &self.c.to_string())?;
        st.serialize_field("H", &self.h.to_string())?;
        st.serialize_field("D", &self.d.to_string())?;
        st.end()
    }
}

type LPoly = Vec<FieldElement>;

fn eval_lpoly(f: &[FieldElement], x: &FieldElement) -> Result<FieldElement> {
    let mut acc = x.field().zero();
    for c in f.iter().rev() {
        acc = acc.mul(x)?.add(c)?;
    }
    Ok(acc)
}

/// `f · (x - r)`.
fn mul_linear(f: &[FieldElement], r: &FieldElement) -> Result<LPoly> {
    let zero = r.field().zero();
    let mut out = vec![zero; f.len() + 1];
    for (i, c) in f.iter().enumerate() {
        out[i + 1] = out[i + 1].add(c)?;
        out[i] = out[i].sub(&c.mul(r)?)?;
    }
    Ok(out)
}

fn pow_u32(x: &BigInt, e: u64) -> BigInt {
    num_traits::pow(x.clone(), e as usize)
}

fn is_integral(a: &FieldElement) -> Result<bool> {
    if a.is_zero() {
        return Ok(true);
    }
    Ok(element_minpoly(a)?.is_integral())
}

pub fn conjugate_expand(alphas: &[AlgebraicNumber], b: &[BigInt]) -> Result<LwMachine> {
    conjugate_expand_capped(alphas, b, DEFAULT_CAP)
}

pub fn conjugate_expand_capped(alphas: &[AlgebraicNumber], b: &[BigInt], cap: u128) -> Result<LwMachine> {
    let n = alphas.len();
    if n == 0 || b.len() != n {
        return domain("need as many nonzero coefficients as exponents, at least one");
    }
    if b.iter().any(|x| x.is_zero()) {
        return domain("coefficients must be nonzero");
    }
    for i in 0..n {
        for j in 0..i {
            if same_value(&alphas[i], &alphas[j])? {
                return domain(format!("exponents {} and {} coincide", j + 1, i + 1));
            }
        }
    }
    let closure = NormalClosure::new(alphas)?;
    let m = closure.degree();
    let terms = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if terms > cap {
        return Err(Error::Size { terms, cap });
    }
    let field = closure.field.clone();
    // σ_s(α_k), both exactly in L and as numbers
    let mut img_num = Vec::with_capacity(m);
    let mut img = Vec::with_capacity(m);
    for s in 0..m {
        let nums: Vec<AlgebraicNumber> = alphas.iter().map(|a| closure.image_of_seed(s, a)).collect::<Result<_>>()?;
        img.push(nums.iter().map(|a| closure.element_of(a)).collect::<Result<Vec<_>>>()?);
        img_num.push(nums);
    }
    // R = ∏_s Σ_k b_k e^{σ_s(α_k)}, merging equal exponents as they appear
    let mut terms_map: BTreeMap<Vec<Rational>, (FieldElement, BigInt)> = BTreeMap::new();
    terms_map.insert(Vec::new(), (field.zero(), BigInt::one()));
    for row in &img {
        let mut next: BTreeMap<Vec<Rational>, (FieldElement, BigInt)> = BTreeMap::new();
        for (e, coef) in terms_map.values() {
            for (k, a) in row.iter().enumerate() {
                let e2 = e.add(a)?;
                let c2 = coef * &b[k];
                next.entry(e2.rep().coeffs().to_vec())
                    .and_modify(|(_, c)| *c += &c2)
                    .or_insert((e2, c2));
            }
        }
        terms_map = next;
    }
    terms_map.retain(|_, (_, c)| !c.is_zero());
    // the sum of lexicographic maxima cannot cancel
    let mut top = field.zero();
    let mut top_coef = BigInt::one();
    for s in 0..m {
        let mut l = 0;
        for k in 1..n {
            if lex_cmp(&img_num[s][k], &img_num[s][l])? == Ordering::Greater {
                l = k;
            }
        }
        top = top.add(&img[s][l])?;
        top_coef *= &b[l];
    }
    match terms_map.get(top.rep().coeffs()) {
        Some((_, c)) if c == &top_coef => {}
        _ => return consistency("the lexicographically largest exponent lost its coefficient"),
    }
    let mut entries: Vec<(FieldElement, AlgebraicNumber, BigInt)> = Vec::with_capacity(terms_map.len());
    for (e, c) in terms_map.into_values() {
        let v = element_value(&e)?;
        entries.push((e, v, c));
    }
    let mut err = None;
    entries.sort_by(|x, y| {
        lex_cmp(&x.1, &y.1).unwrap_or_else(|e| {
            err = Some(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    let w: Vec<FieldElement> = entries.iter().map(|e| e.0.clone()).collect();
    let w_values: Vec<AlgebraicNumber> = entries.iter().map(|e| e.1.clone()).collect();
    let b_star: Vec<BigInt> = entries.iter().map(|e| e.2.clone()).collect();
    let t = w.len();
    // σ(W) = W with matching coefficients
    for s in 0..m {
        for (j, beta) in w.iter().enumerate() {
            let img = closure.apply(s, beta)?;
            match w.iter().position(|x| x == &img) {
                Some(j2) if b_star[j2] == b_star[j] => {}
                _ => return consistency("an embedding does not permute the exponent set"),
            }
        }
    }
    let mut c = BigInt::one();
    for beta in &w {
        c = c.lcm(&root_multiplier(&element_minpoly(beta)?));
    }
    let cq = Rational::from_integer(c.clone());
    for beta in &w {
        if !is_integral(&beta.scale(&cq))? {
            return consistency("c β is not an algebraic integer");
        }
    }
    let c_t = Rational::from_integer(pow_u32(&c, t as u64));
    let mut hp: LPoly = vec![field.from_rational(c_t)];
    for beta in &w {
        hp = mul_linear(&hp, beta)?;
    }
    let mut hc = Vec::with_capacity(t + 1);
    for x in &hp {
        match x.fixed_rational() {
            Some(q) if q.is_integer() => hc.push(q.to_integer()),
            _ => return consistency("H has a coefficient outside Z"),
        }
    }
    let h = IntPoly::new(hc);
    let c_t1 = Rational::from_integer(pow_u32(&c, t as u64 - 1));
    let mut u = Vec::with_capacity(t);
    let mut d = BigInt::one();
    for j in 0..t {
        let mut uj: LPoly = vec![field.from_rational(c_t1.clone())];
        for (i, beta) in w.iter().enumerate() {
            if i != j {
                uj = mul_linear(&uj, beta)?;
            }
        }
        let key = eval_lpoly(&uj, &w[j])?.scale(&(&cq * Rational::from_integer(b_star[j].clone())));
        let nk = norm(&key)?;
        if !nk.is_integer() || nk.is_zero() {
            return consistency("N(b* c U_j(β_j)) is not a nonzero integer");
        }
        d *= nk.to_integer();
        u.push(uj);
    }
    Ok(LwMachine { alphas: alphas.to_vec(), b: b.to_vec(), closure, w, w_values, b_star, c, h, u, d: d.abs() })
}

impl LwMachine {
    pub fn t(&self) -> usize {
        self.w.len()
    }

    /// `(p-1)! f_{p,j} = H^p / (x - β_j)`, over `L`.
    fn scaled_fpj(&self, p: u64, j: usize) -> Result<LPoly> {
        let field = &self.closure.field;
        let g = self.h.pow(p as u32);
        let beta = &self.w[j];
        let n = g.deg();
        let mut q = vec![field.zero(); n];
        let mut acc = field.zero();
        for i in (1..=n).rev() {
            acc = acc.mul(beta)?.add(&field.from_rational(Rational::from_integer(g.coeff(i))))?;
            q[i - 1] = acc.clone();
        }
        let rem = acc.mul(beta)?.add(&field.from_rational(Rational::from_integer(g.coeff(0))))?;
        if !rem.is_zero() {
            return consistency("β_j is not a root of H");
        }
        Ok(q)
    }

    /// `F_{p,j}(β_i)` for all `i`, exactly.
    fn f_values(&self, p: u64, j: usize) -> Result<Vec<FieldElement>> {
        let f = self.scaled_fpj(p, j)?;
        let fact = Rational::new(BigInt::one(), factorial(p - 1));
        let mut big_f = vec![self.closure.field.zero(); f.len()];
        let mut acc = self.closure.field.zero();
        for e in (0..f.len()).rev() {
            acc = f[e].add(&acc.scale(&Rational::from_integer(BigInt::from(e + 1))))?;
            big_f[e] = acc.scale(&fact);
        }
        self.w.iter().map(|b| eval_lpoly(&big_f, b)).collect()
    }

    /// Enclosure of `R = Σ b*_j e^{β_j}`.
    pub fn exponential_sum(&self, prec: u32) -> Result<ComplexBall> {
        let wp = prec + 16;
        let id = self.closure.field.identity();
        let mut r = ComplexBall::zero();
        for (beta, bs) in self.w.iter().zip(&self.b_star) {
            let e = apply_embedding(&id, beta, wp)?.exp(wp);
            r = r.add(&e.mul(&ComplexBall::from_bigint(bs, wp), wp), wp);
        }
        Ok(r)
    }
}

/// Exact data for one index `j` at one prime.
#[derive(Clone, Debug)]
pub struct LwTable {
    pub j: usize,
    /// Coefficients of `(p-1)! f_{p,j}`.
    pub scaled_f: Vec<FieldElement>,
    /// `F_{p,j}(β_i)` for every `i`.
    pub f_values: Vec<FieldElement>,
    /// `f_{p,j}^{(h)}(β_i)`, indexed `[i][h]`.
    pub derivatives: Vec<Vec<FieldElement>>,
}

/// Taylor coefficients of `f` at `r`: `f(r + y) = Σ τ_h y^h`.
fn taylor_at(f: &[FieldElement], r: &FieldElement) -> Result<LPoly> {
    let mut a = f.to_vec();
    let n = a.len();
    for k in 0..n {
        for i in (k..n - 1).rev() {
            let t = a[i + 1].mul(r)?;
            a[i] = a[i].add(&t)?;
        }
    }
    Ok(a)
}

pub fn lw_tables(m: &LwMachine, p: u64) -> Result<Vec<LwTable>> {
    if !is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    let t = m.t();
    let field = &m.closure.field;
    let fact = factorial(p - 1);
    let pq = Rational::from_integer(BigInt::from(p));
    let cp = Rational::from_integer(pow_u32(&m.c, p - 1));
    let mut out = Vec::with_capacity(t);
    for j in 0..t {
        let f = m.scaled_fpj(p, j)?;
        let f_values = m.f_values(p, j)?;
        let mut derivatives = Vec::with_capacity(t);
        for (i, beta) in m.w.iter().enumerate() {
            let tau = taylor_at(&f, beta)?;
            let mut row = Vec::with_capacity(tau.len());
            let mut hfact = BigInt::one();
            let mut sum = field.zero();
            for (h, th) in tau.iter().enumerate() {
                if h > 0 {
                    hfact *= h;
                }
                let v = th.scale(&Rational::new(hfact.clone(), fact.clone()));
                let hp = h as u64;
                if (hp < p && i != j || hp + 1 < p) && !v.is_zero() {
                    return consistency(format!("f_(p,j)^({h})(β_i) should vanish"));
                }
                if i == j && hp + 1 == p {
                    let uj = eval_lpoly(&m.u[j], beta)?;
                    if v != uj.pow(p).scale(&cp) {
                        return consistency("f_(p,j)^(p-1)(β_j) differs from c^(p-1) U_j(β_j)^p");
                    }
                } else if !is_integral(&v.scale(&(Rational::one() / &pq)))? {
                    return consistency(format!("f_(p,j)^({h})(β_i) is not divisible by {p}"));
                }
                sum = sum.add(&v)?;
                row.push(v);
            }
            if sum != f_values[i] {
                return consistency("derivative sum and F_(p,j) disagree");
            }
            derivatives.push(row);
        }
        out.push(LwTable { j, scaled_f: f, f_values, derivatives });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct LwCritical {
    pub p: u64,
    /// `S_j = -Σ_i b*_i F_{p,j}(β_i)`.
    pub s_j: Vec<FieldElement>,
    pub s: BigInt,
    pub residue_ok: bool,
    pub s_balls: Vec<ComplexBall>,
    /// Per `j`: upper bound on `|Σ_i b*_i e^{β_i} I_{p,j}(i)|`.
    pub tails: Vec<Rational>,
    /// Per `j`: upper bound on `|e^{-β_j} F_{p,j}(β_j)|`.
    pub weights: Vec<Rational>,
    /// Per `j`: `(|S_j| - tail) / weight` when positive.
    pub bounds: Vec<Option<Rational>>,
}

pub fn lw_critical(m: &LwMachine, p: u64, prec: u32) -> Result<LwCritical> {
    if !is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    let prec = prec.max(64);
    let t = m.t();
    let field = &m.closure.field;
    let id = field.identity();
    let cq = Rational::from_integer(m.c.clone());
    let up = Round::Up;
    let betas: Vec<ComplexBall> = m.w.iter().map(|b| apply_embedding(&id, b, prec + 16)).collect::<Result<_>>()?;
    let exp_up: Vec<Dyadic> = betas.iter().map(|b| exp_real_upper(&b.re().add(b.rad()))).collect();
    let emx_up: Vec<Dyadic> = betas.iter().map(|b| exp_real_upper(&b.re().sub(b.rad()).neg())).collect();
    let fact = Rational::from_integer(factorial(p - 1));
    let c_d = Dyadic::new(m.c.clone(), 0);
    let c_t1 = Dyadic::new(pow_u32(&m.c, t as u64 - 1), 0);
    let mut s_j = Vec::with_capacity(t);
    let mut s_balls = Vec::with_capacity(t);
    let (mut tails, mut weights, mut bounds) = (Vec::new(), Vec::new(), Vec::new());
    let mut total = field.one();
    let mut expected = field.one();
    for j in 0..t {
        let fv = m.f_values(p, j)?;
        let mut s = field.zero();
        for (i, v) in fv.iter().enumerate() {
            s = s.sub(&v.scale(&Rational::from_integer(m.b_star[i].clone())))?;
        }
        total = total.mul(&s)?;
        let uj = eval_lpoly(&m.u[j], &m.w[j])?;
        expected = expected.mul(&uj.pow(p).scale(&(Rational::from_integer(-m.b_star[j].clone()) * num_traits::pow(cq.clone(), (p - 1) as usize))))?;
        // Σ_{i≠j} |b*_i| |e^{β_i}| c|Δ|T (c|Δ|T)^{p-1} T' / (p-1)!
        let roots: Vec<(ComplexBall, usize)> =
            (0..t).filter(|&i| i != j).map(|i| (betas[i].clone(), 1)).collect();
        let mut tail = Dyadic::zero();
        for i in (0..t).filter(|&i| i != j) {
            let dist = betas[i].sub(&betas[j], prec).abs_upper();
            let tij = segment_max(&c_t1, &betas[j], &betas[i], &roots, prec);
            let tup = Dyadic::max(&emx_up[i], &emx_up[j]);
            let base = c_d.mul(&dist).mul(&tij).round(prec, up);
            let mut term = base.mul(&tup).round(prec, up);
            for _ in 1..p {
                term = term.mul(&base).round(prec, up);
            }
            let bi = Dyadic::new(m.b_star[i].abs(), 0);
            tail = tail.add(&term.mul(&exp_up[i]).mul(&bi)).round(prec, up);
        }
        let tail = tail.to_rational() / &fact;
        let weight = betas[j].neg().exp(prec).mul(&apply_embedding(&id, &fv[j], prec + 16)?, prec).abs_upper().to_rational();
        let sb = apply_embedding(&id, &s, prec + 16)?;
        let s_lo = sb.abs_lower().to_rational();
        let bound = (tail.is_positive() && s_lo > tail && weight.is_positive()).then(|| (&s_lo - &tail) / &weight);
        s_j.push(s);
        s_balls.push(sb);
        tails.push(tail);
        weights.push(weight);
        bounds.push(bound);
    }
    let s = match total.fixed_rational() {
        Some(q) if q.is_integer() => q.to_integer(),
        _ => return consistency(format!("S({p}) is not a rational integer")),
    };
    let key = match expected.fixed_rational() {
        Some(q) if q.is_integer() => q.to_integer(),
        _ => return consistency("∏ b*_j c^(p-1) U_j(β_j)^p is not a rational integer"),
    };
    let residue_ok = mod_u64(&s, p) == mod_u64(&key, p);
    if !residue_ok {
        return consistency(format!("S({p}) has the wrong residue mod {p}"));
    }
    if mod_u64(&m.d, p) != 0 && mod_u64(&s, p) == 0 {
        return consistency(format!("S({p}) vanishes mod {p} although {p} does not divide D"));
    }
    Ok(LwCritical { p, s_j, s, residue_ok, s_balls, tails, weights, bounds })
}

fn lw_certificate(m: &LwMachine, machine: &serde_json::Value, enclosure: &ComplexBall, p: u64, prec: u32) -> Result<HermiteCertificate> {
    let crit = lw_critical(m, p, prec)?;
    let mut pick = 0;
    for j in 1..crit.bounds.len() {
        if crit.bounds[j] > crit.bounds[pick] {
            pick = j;
        }
    }
    let lower_bound = crit.bounds[pick].clone();
    if let Some(lb) = &lower_bound {
        if lb > &enclosure.abs_upper().to_rational() {
            return consistency(format!("the bound at p = {p} exceeds the enclosure of |R|"));
        }
    }
    Ok(HermiteCertificate {
        machine: machine.clone(),
        p,
        critical: crit.s,
        residue_ok: crit.residue_ok,
        tail: crit.tails[pick].clone(),
        f0: crit.weights[pick].clone(),
        lower_bound,
        enclosure: enclosure.clone(),
        precision_bits: prec,
        j: Some(pick),
    })
}

/// One certificate per prime `p <= p_max` not dividing `D`, in increasing order.
pub fn sweep_lw(m: &LwMachine, p_max: u64, prec: u32) -> Result<Vec<HermiteCertificate>> {
    let machine = serde_json::to_value(m).expect("machine summaries serialize");
    let enclosure = m.exponential_sum(prec)?;
    let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| mod_u64(&m.d, p) != 0).collect();
    primes.par_iter().map(|&p| lw_certificate(m, &machine, &enclosure, p, prec)).collect()
}

pub fn certify_gap_lw(m: &LwMachine, p_max: u64, prec: u32) -> Result<HermiteCertificate> {
    let certs = sweep_lw(m, p_max, prec)?;
    best(&certs).cloned().ok_or_else(|| {
        let tried: Vec<String> = certs.iter().map(|c| c.p.to_string()).collect();
        Error::NoCertificate(format!(
            "no prime up to {p_max} gives |S_j| > bound (tried {}; D = {})",
            tried.join(", "),
            m.d
        ))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::poly::RatPoly;
    use crate::exact::rational::{int, rat};

    fn root(h: &str, re: i64, im: i64) -> AlgebraicNumber {
        AlgebraicNumber::near(&h.parse::<RatPoly>().unwrap(), &rat(re, 100), &rat(im, 100), &rat(1, 20)).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn rational_exponents() {
        let m = conjugate_expand(&[AlgebraicNumber::zero(), AlgebraicNumber::one()], &ints(&[1, 1])).unwrap();
        assert_eq!(m.closure.degree(), 1);
        let w: Vec<_> = m.w.iter().map(|x| x.fixed_rational().unwrap()).collect();
        assert_eq!(w, vec![int(0), int(1)]);
        assert_eq!(m.b_star, ints(&[1, 1]));
        assert!(conjugate_expand(&[AlgebraicNumber::one(), AlgebraicNumber::one()], &ints(&[1, 2])).is_err());
    }

    #[test]
    fn square_roots_of_two() {
        let r = root("x^2 - 2", 141, 0);
        let m = conjugate_expand(&[r.clone(), r.neg()], &ints(&[1, 1])).unwrap();
        assert_eq!(m.closure.degree(), 2);
        assert_eq!(m.b_star, ints(&[1, 2, 1]));
        assert_eq!(m.w_values[0].minpoly(), &"x^2 - 8".parse::<RatPoly>().unwrap());
        assert!(m.w_values[1].is_zero());
        assert_eq!(m.h, IntPoly::from_i64(&[0, -8, 0, 1]));
        let tabs = lw_tables(&m, 3).unwrap();
        assert_eq!(tabs.len(), 3);
        let crit = lw_critical(&m, 5, 128).unwrap();
        assert!(!crit.s.is_zero());
        assert!(matches!(
            conjugate_expand_capped(&[r.clone(), r.neg()], &ints(&[1, 1]), 3),
            Err(Error::Size { terms: 4, cap: 3 })
        ));
    }

    #[test]
    fn i_and_minus_i() {
        let i = AlgebraicNumber::i();
        let m = conjugate_expand(&[i.clone(), i.neg()], &ints(&[1, 1])).unwrap();
        assert_eq!(m.b_star, ints(&[1, 2, 1]));
        assert_eq!(m.w_values[2].minpoly(), &"x^2 + 4".parse::<RatPoly>().unwrap());
    }
}
