//! The machine behind `U = k + e^{β_1} + ... + e^{β_t}`, where the `β` are the
//! nonzero subset sums of the roots of a polynomial `f`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::ser::SerializeStruct;

use super::certificate::{best, HermiteCertificate};
use crate::error::{consistency, domain, Error, Result};
use crate::exact::factor::factor_rational;
use crate::exact::gcd::is_squarefree;
use crate::exact::integers::{factorial, mod_u64, primes_up_to};
use crate::exact::poly::{IntPoly, RatPoly, ScaledPoly};
use crate::exact::rational::{fmt_rational, Rational};
use crate::exact::symmetric::{from_power_sums, power_sums, sum_with_power_sums};
use crate::fields::{apply_embedding, NumberField};
use crate::numerics::ball::{exp_real_upper, ComplexBall};
use crate::numerics::dyadic::{Dyadic, Round};
use crate::numerics::quadrature::segment_integral_exp_taylor;
use crate::numerics::roots::{isolate_squarefree, PREC_CAP};
use crate::qbar::{root_multiplier, AlgebraicNumber};

pub const DEFAULT_CAP: u128 = 20_000;

/// Log of the number of pieces per segment when maximizing `|H|`.
const PIECES_LOG: i64 = 6;

/// The roots of one irreducible factor of `∏(x - β_j)`, as the embeddings of
/// the field it defines.
#[derive(Clone, Debug)]
struct RootFamily {
    field: NumberField,
    multiplicity: usize,
}

#[derive(Clone, Debug)]
pub struct PiMachine {
    pub f: RatPoly,
    /// Roots: the `2^n - 1` nonempty subset sums of the roots of `f`.
    pub p_poly: RatPoly,
    pub t: usize,
    pub k: usize,
    pub c: BigInt,
    /// `c^t ∏(x - β_j)`.
    pub h: IntPoly,
    /// `∏(x - β_j)`.
    q: RatPoly,
    families: Vec<RootFamily>,
}

impl serde::Serialize for PiMachine {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PiMachine", 7)?;
        st.serialize_field("kind", "pi")?;
        st.serialize_field("f", &self.f.to_string())?;
        st.serialize_field("P", &self.p_poly.to_string())?;
        st.serialize_field("t", &self.t)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("c", &self.c.to_string())?;
        st.serialize_field("H", &self.h.to_string())?;
        st.end()
    }
}

/// Power sums `Φ_0..=Φ_N` of the `2^n` subset sums (empty set included).
///
/// `Σ_k Φ_k z^k / k! = ∏(1 + e^{zα_i}) = 2^n exp(Σ_{m>=1} c_m p_m z^m)` where
/// `log(1 + e^w) = log 2 + Σ c_m w^m` and `p_m` are power sums of the roots.
fn subset_power_sums(f: &RatPoly, big_n: usize) -> Result<Vec<Rational>> {
    let n = f.deg();
    let p = power_sums(f, big_n)?;
    let mut inv_fact = vec![Rational::one()];
    for k in 1..=big_n {
        let prev = inv_fact[k - 1].clone();
        inv_fact.push(prev / Rational::from_integer(BigInt::from(k)));
    }
    // σ(w) = e^w / (1 + e^w) = d/dw log(1 + e^w)
    let two = Rational::from_integer(BigInt::from(2));
    let mut sigma: Vec<Rational> = Vec::with_capacity(big_n);
    for k in 0..big_n {
        let mut acc = inv_fact[k].clone();
        for j in 1..=k {
            acc -= &inv_fact[j] * &sigma[k - j];
        }
        sigma.push(acc / &two);
    }
    let mut g = vec![Rational::zero(); big_n + 1];
    for m in 1..=big_n {
        g[m] = &sigma[m - 1] * &p[m] / Rational::from_integer(BigInt::from(m));
    }
    // y = exp(g) through y' = g' y
    let mut y = vec![Rational::one()];
    for k in 1..=big_n {
        let mut acc = Rational::zero();
        for j in 1..=k {
            acc += Rational::from_integer(BigInt::from(j)) * &g[j] * &y[k - j];
        }
        y.push(acc / Rational::from_integer(BigInt::from(k)));
    }
    let count = Rational::from_integer(BigInt::one() << n);
    let mut fact = Rational::one();
    let mut out = Vec::with_capacity(big_n + 1);
    for (k, yk) in y.iter().enumerate() {
        if k > 0 {
            fact *= Rational::from_integer(BigInt::from(k));
        }
        out.push(&count * &fact * yk);
    }
    Ok(out)
}

pub fn subset_sum_closure(f: &RatPoly) -> Result<PiMachine> {
    subset_sum_closure_capped(f, DEFAULT_CAP)
}

pub fn subset_sum_closure_capped(f: &RatPoly, cap: u128) -> Result<PiMachine> {
    if f.is_zero() || f.is_constant() {
        return domain("the polynomial must have degree at least 1");
    }
    if !is_squarefree(f) {
        return domain(format!("{f} has a repeated root; pass its squarefree part"));
    }
    let n = f.deg();
    let terms = if n >= 127 { u128::MAX } else { (1u128 << n) - 1 };
    if terms > cap {
        return Err(Error::Size { terms, cap });
    }
    let big_n = 1usize << n;
    let monic = f.monic();
    let sums = subset_power_sums(&monic, big_n)?;
    let with_empty = from_power_sums(&sums, big_n);
    let (p_poly, r) = with_empty.div_rem(&RatPoly::x());
    if !r.is_zero() {
        return consistency("the subset-sum polynomial misses the empty sum");
    }
    let zeros = p_poly.coeffs().iter().take_while(|c| c.is_zero()).count();
    let q = RatPoly::new(p_poly.coeffs()[zeros..].to_vec());
    let (d, t) = (p_poly.deg(), q.deg());
    let k = zeros + 1;
    if k != d + 1 - t {
        return consistency("zero-sum count disagrees with the degree count");
    }
    let c = root_multiplier(&q);
    let cq = Rational::from_integer(c.clone());
    let mut hc = Vec::with_capacity(t + 1);
    let mut pw = Rational::one();
    for _ in 0..t {
        pw *= &cq;
    }
    for a in q.coeffs() {
        hc.push(a * &pw);
    }
    let Some(h) = RatPoly::new(hc).to_int_poly() else {
        return consistency("c^t ∏(x - β) is not integral");
    };
    let mut families = Vec::new();
    if t > 0 {
        let (_, factors) = factor_rational(&q)?;
        for (g, e) in factors {
            let theta = if g.deg() == 1 {
                AlgebraicNumber::from_rational(-g.monic().coeff(0))
            } else {
                let boxes = isolate_squarefree(&g, &Rational::new(BigInt::one(), BigInt::from(1024)))?;
                AlgebraicNumber::from_parts(g.monic(), boxes[0].clone())
            };
            families.push(RootFamily { field: NumberField::from_generator(theta, vec![1])?, multiplicity: e });
        }
    }
    Ok(PiMachine { f: f.clone(), p_poly, t, k, c, h, q, families })
}

impl PiMachine {
    /// `∏(x - β_j)`, monic.
    pub fn beta_poly(&self) -> &RatPoly {
        &self.q
    }

    /// The primes the sweep skips: divisors of `k c H(0)`.
    pub fn divides_key(&self, p: u64) -> bool {
        let key = BigInt::from(self.k) * &self.c * self.h.coeff(0);
        mod_u64(&key, p) == 0
    }

    /// Root balls `β` with multiplicities, under every embedding of each family.
    fn root_balls(&self, prec: u32) -> Result<Vec<(ComplexBall, usize)>> {
        let mut out = Vec::new();
        for fam in &self.families {
            let gen = fam.field.gen();
            for s in fam.field.embeddings() {
                out.push((apply_embedding(&s, &gen, prec)?, fam.multiplicity));
            }
        }
        Ok(out)
    }

    fn power_sums_to(&self, deg: usize) -> Result<Vec<Rational>> {
        if self.t == 0 {
            return Ok(vec![Rational::zero(); deg + 1]);
        }
        power_sums(&self.q, deg)
    }

    /// Enclosure of `U = k + Σ e^{β_j}`.
    pub fn exponential_sum(&self, prec: u32) -> Result<ComplexBall> {
        let wp = prec + 16;
        let mut u = ComplexBall::from_i64(self.k as i64);
        for (b, e) in self.root_balls(wp)? {
            let eb = b.exp(wp);
            for _ in 0..e {
                u = u.add(&eb, wp);
            }
        }
        Ok(u)
    }
}

/// `(p-1)! f_p = c^{p-1} x^{p-1} H^p`, with the factorial as the scale.
pub fn hermite_fp_pi(m: &PiMachine, p: u64) -> ScaledPoly {
    let cp = num_traits::pow(m.c.clone(), (p - 1) as usize);
    let numer = &IntPoly::monomial(cp, (p - 1) as usize) * &m.h.pow(p as u32);
    ScaledPoly::new(numer, factorial(p - 1))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivativeRow {
    pub h: usize,
    /// `f_p^{(h)}(0)`.
    pub at_zero: BigInt,
    /// `Σ_i f_p^{(h)}(β_i)`.
    pub root_sum: BigInt,
    /// `at_zero / p` for `h >= p`.
    pub at_zero_over_p: Option<BigInt>,
    /// `root_sum / p` for `h >= p`.
    pub root_sum_over_p: Option<BigInt>,
}

#[derive(Clone, Debug)]
pub struct FDerivativeTable {
    pub p: u64,
    pub rows: Vec<DerivativeRow>,
}

fn to_integer(q: Rational, what: &str) -> Result<BigInt> {
    if !q.is_integer() {
        return consistency(format!("{what} is not an integer: {}", fmt_rational(&q)));
    }
    Ok(q.to_integer())
}

fn check_prime(p: u64) -> Result<()> {
    if !crate::exact::integers::is_prime_u64(p) {
        return domain(format!("{p} is not prime"));
    }
    Ok(())
}

pub fn derivative_table(m: &PiMachine, p: u64) -> Result<FDerivativeTable> {
    check_prime(p)?;
    let fp = hermite_fp_pi(m, p);
    let d_p = fp.numer.deg();
    let ps = m.power_sums_to(d_p)?;
    let fact = Rational::from_integer(fp.scale.clone());
    let pb = BigInt::from(p);
    let expected = num_traits::pow(m.c.clone(), (p - 1) as usize) * num_traits::pow(m.h.coeff(0), p as usize);
    let mut g = fp.numer.clone();
    let mut rows = Vec::with_capacity(d_p + 1);
    for h in 0..=d_p {
        let at_zero = to_integer(Rational::from_integer(g.coeff(0)) / &fact, "a derivative at 0")?;
        let root_sum = to_integer(sum_with_power_sums(&g.to_rat(), &ps) / &fact, "a derivative root sum")?;
        let hp = h as u64;
        if hp + 1 < p && !at_zero.is_zero() {
            return consistency(format!("f_p^({h})(0) should vanish"));
        }
        if hp + 1 == p && at_zero != expected {
            return consistency("f_p^(p-1)(0) differs from c^(p-1) H(0)^p");
        }
        if hp < p && !root_sum.is_zero() {
            return consistency(format!("the root sum of f_p^({h}) should vanish"));
        }
        let (mut zq, mut rq) = (None, None);
        if hp >= p {
            let (a, ra) = at_zero.div_rem(&pb);
            let (b, rb) = root_sum.div_rem(&pb);
            if !ra.is_zero() || !rb.is_zero() {
                return consistency(format!("row {h} is not divisible by {p}"));
            }
            zq = Some(a);
            rq = Some(b);
        }
        rows.push(DerivativeRow { h, at_zero, root_sum, at_zero_over_p: zq, root_sum_over_p: rq });
        g = g.derivative();
    }
    Ok(FDerivativeTable { p, rows })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalInteger {
    pub p: u64,
    /// `C(p) = -Σ F_p(β_i) - k F_p(0)`.
    pub value: BigInt,
    pub f0: BigInt,
    /// `Σ F_p(β_i)`.
    pub root_sum: BigInt,
    /// `C(p) mod p` and `-k c^{p-1} H(0)^p mod p`, in `0..p`.
    pub residue: u64,
    pub expected_residue: u64,
    pub residue_ok: bool,
}

pub fn critical_integer(m: &PiMachine, p: u64) -> Result<CriticalInteger> {
    check_prime(p)?;
    let big_f = hermite_fp_pi(m, p).derivative_sum();
    let fact = Rational::from_integer(big_f.scale.clone());
    let ps = m.power_sums_to(big_f.numer.deg())?;
    let f0 = to_integer(Rational::from_integer(big_f.numer.coeff(0)) / &fact, "F_p(0)")?;
    let root_sum = to_integer(sum_with_power_sums(&big_f.numer.to_rat(), &ps) / &fact, "Σ F_p(β)")?;
    let value = -&root_sum - BigInt::from(m.k) * &f0;
    let key = -BigInt::from(m.k)
        * num_traits::pow(m.c.clone(), (p - 1) as usize)
        * num_traits::pow(m.h.coeff(0), p as usize);
    let (residue, expected_residue) = (mod_u64(&value, p), mod_u64(&key, p));
    Ok(CriticalInteger { p, value, f0, root_sum, residue, expected_residue, residue_ok: residue == expected_residue })
}

/// Upper bound on `max |scale · ∏(z - r)^e|` over the segment from `a` to
/// `b`, by covering it with `2^PIECES_LOG` disks.
pub(crate) fn segment_max(
    scale: &Dyadic,
    a: &ComplexBall,
    b: &ComplexBall,
    roots: &[(ComplexBall, usize)],
    prec: u32,
) -> Dyadic {
    let delta = b.sub(a, prec);
    let half = delta.abs_upper().mul_pow2(-(PIECES_LOG + 1));
    let mut best = Dyadic::zero();
    for i in 0..(1i64 << PIECES_LOG) {
        let s = Dyadic::new(BigInt::from(2 * i + 1), -(PIECES_LOG + 1));
        let z = a.add(&delta.mul_real(&s, prec), prec).with_rad(&half);
        let mut v = scale.clone();
        for (r, e) in roots {
            let d = z.sub(r, prec).abs_upper();
            for _ in 0..*e {
                v = v.mul(&d).round(prec, Round::Up);
            }
        }
        best = Dyadic::max(&best, &v);
    }
    best
}

/// `B(p) >= Σ_i |e^{β_i}| |β_i| W_i V_i (c T_i V_i)^{p-1} / (p-1)!`.
pub fn tail_bound(m: &PiMachine, p: u64, prec: u32) -> Result<Rational> {
    check_prime(p)?;
    let prec = prec.max(64);
    let roots = m.root_balls(prec)?;
    let c = Dyadic::new(m.c.clone(), 0);
    let c_t = Dyadic::new(num_traits::pow(m.c.clone(), m.t), 0);
    let up = Round::Up;
    let mut total = Dyadic::zero();
    for (b, e) in &roots {
        let t_i = b.abs_upper();
        let re_lo = b.re().sub(b.rad());
        let re_hi = b.re().add(b.rad());
        let w_i = exp_real_upper(&Dyadic::max(&Dyadic::zero(), &re_lo.neg()));
        let v_i = segment_max(&c_t, &ComplexBall::zero(), b, &roots, prec);
        let base = c.mul(&t_i).mul(&v_i).round(prec, up);
        let mut term = exp_real_upper(&re_hi).mul(&t_i).mul(&w_i).mul(&v_i).round(prec, up);
        for _ in 1..p {
            term = term.mul(&base).round(prec, up);
        }
        total = total.add(&term.mul(&Dyadic::from_i64(*e as i64))).round(prec, up);
    }
    Ok(total.to_rational() / Rational::from_integer(factorial(p - 1)))
}

/// Both sides of `I_p(i) = -e^{-β_i} F_p(β_i) + F_p(0)` for one root.
#[derive(Clone, Debug)]
pub struct IdentityPair {
    pub beta: ComplexBall,
    /// Taylor quadrature of `∫_0^β f_p(x) e^{-x} dx`.
    pub quadrature: ComplexBall,
    /// `F_p(0) - e^{-β} F_p(β)` with `F_p(β)` evaluated in `Q(β)`.
    pub transform: ComplexBall,
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub pairs: Vec<IdentityPair>,
    /// Largest distance between the two midpoints.
    pub residual: Rational,
    /// Sum of the radii of the pair attaining it.
    pub radius_sum: Rational,
}

pub fn integral_identity_check(m: &PiMachine, p: u64, prec: u32) -> Result<IdentityReport> {
    check_prime(p)?;
    let fp = hermite_fp_pi(m, p);
    let big_f = fp.derivative_sum().to_rat();
    let f0 = big_f.coeff(0);
    let mut wp = prec.max(64);
    loop {
        let goal = Dyadic::pow2(-((prec / 2) as i64));
        let mut pairs = Vec::new();
        let (mut residual, mut radius_sum) = (Rational::zero(), Rational::zero());
        let mut wide = false;
        for fam in &m.families {
            let fe = fam.field.element(big_f.clone());
            let gen = fam.field.gen();
            for s in fam.field.embeddings() {
                let beta = apply_embedding(&s, &gen, wp + 32)?;
                let quadrature = segment_integral_exp_taylor(&fp, &ComplexBall::zero(), &beta, wp)?;
                let fb = apply_embedding(&s, &fe, wp + 32)?;
                let transform =
                    ComplexBall::from_real(&f0, wp + 32).sub(&beta.neg().exp(wp + 32).mul(&fb, wp + 32), wp);
                if !quadrature.overlaps(&transform) {
                    return consistency(format!("the integral identity fails at p = {p}"));
                }
                let dist = quadrature.sub(&transform, wp).mid_abs_upper().to_rational();
                let rads = quadrature.rad().add(transform.rad()).to_rational();
                if dist > residual {
                    residual = dist;
                    radius_sum = rads.clone();
                }
                wide |= quadrature.rad() > &goal || transform.rad() > &goal;
                pairs.push(IdentityPair { beta, quadrature, transform });
            }
        }
        if pairs.is_empty() || !wide {
            return Ok(IdentityReport { pairs, residual, radius_sum });
        }
        if wp >= PREC_CAP {
            return Err(Error::Precision {
                bits: wp,
                detail: format!("identity residual {} with radii {}", fmt_rational(&residual), fmt_rational(&radius_sum)),
            });
        }
        wp *= 2;
    }
}

fn pi_certificate(m: &PiMachine, machine: &serde_json::Value, enclosure: &ComplexBall, p: u64, prec: u32) -> Result<HermiteCertificate> {
    let crit = critical_integer(m, p)?;
    if !crit.residue_ok {
        return consistency(format!("C({p}) has the wrong residue mod {p}"));
    }
    let tail = tail_bound(m, p, prec)?;
    let c_abs = Rational::from_integer(crit.value.abs());
    let lower_bound = (tail.is_positive() && c_abs > tail && !crit.f0.is_zero())
        .then(|| (&c_abs - &tail) / Rational::from_integer(crit.f0.abs()));
    if let Some(lb) = &lower_bound {
        if lb > &enclosure.abs_upper().to_rational() {
            return consistency(format!("the bound at p = {p} exceeds the enclosure of |U|"));
        }
    }
    Ok(HermiteCertificate {
        machine: machine.clone(),
        p,
        critical: crit.value,
        residue_ok: crit.residue_ok,
        tail,
        f0: Rational::from_integer(crit.f0),
        lower_bound,
        enclosure: enclosure.clone(),
        precision_bits: prec,
        j: None,
    })
}

/// One certificate per prime `p <= p_max` not dividing `k c H(0)`, in
/// increasing order of `p`.
pub fn sweep_pi(m: &PiMachine, p_max: u64, prec: u32) -> Result<Vec<HermiteCertificate>> {
    let machine = serde_json::to_value(m).expect("machine summaries serialize");
    let enclosure = m.exponential_sum(prec)?;
    let primes: Vec<u64> = primes_up_to(p_max).into_iter().filter(|&p| !m.divides_key(p)).collect();
    primes.par_iter().map(|&p| pi_certificate(m, &machine, &enclosure, p, prec)).collect()
}

/// The sweep's best certificate: largest lower bound, ties to the smallest prime.
pub fn certify_gap_pi(m: &PiMachine, p_max: u64, prec: u32) -> Result<HermiteCertificate> {
    let certs = sweep_pi(m, p_max, prec)?;
    best(&certs).cloned().ok_or_else(|| {
        let tried: Vec<String> = certs.iter().map(|c| c.p.to_string()).collect();
        Error::NoCertificate(format!("no prime up to {p_max} gives |C| > B > 0 (tried {})", tried.join(", ")))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn poly(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn machines() {
        let m = subset_sum_closure(&poly("x - 1")).unwrap();
        assert_eq!((m.t, m.k, m.c.clone(), m.h.clone()), (1, 1, BigInt::one(), IntPoly::from_i64(&[-1, 1])));
        let m = subset_sum_closure(&poly("x^2 + 1")).unwrap();
        assert_eq!(m.p_poly, poly("x^3 + x"));
        assert_eq!((m.t, m.k, m.h.clone()), (2, 2, IntPoly::from_i64(&[1, 0, 1])));
        let m = subset_sum_closure(&poly("x^2 - 2")).unwrap();
        assert_eq!(m.h, IntPoly::from_i64(&[-2, 0, 1]));
        // roots 1/2 and 1/3: sums 1/2, 1/3, 5/6, so c = 6
        let m = subset_sum_closure(&poly("6*x^2 - 5*x + 1")).unwrap();
        assert_eq!((m.t, m.c.clone()), (3, BigInt::from(6)));
        assert!(subset_sum_closure(&poly("x^2 - 2*x + 1")).is_err());
        let z = subset_sum_closure(&poly("x")).unwrap();
        assert_eq!((z.t, z.k, z.h.clone()), (0, 2, IntPoly::one()));
    }

    #[test]
    fn hermite_polynomials() {
        let m = subset_sum_closure(&poly("x - 1")).unwrap();
        let f2 = hermite_fp_pi(&m, 2);
        assert_eq!((f2.numer, f2.scale), (IntPoly::from_i64(&[0, 1, -2, 1]), BigInt::one()));
        let f3 = hermite_fp_pi(&m, 3);
        assert_eq!((f3.numer, f3.scale), (IntPoly::from_i64(&[0, 0, -1, 3, -3, 1]), BigInt::from(2)));
        let m = subset_sum_closure(&poly("x^2 + 1")).unwrap();
        assert_eq!(hermite_fp_pi(&m, 3).numer.deg(), 8);
    }

    #[test]
    fn table_and_critical_integer() {
        let m = subset_sum_closure(&poly("x - 1")).unwrap();
        let tab = derivative_table(&m, 3).unwrap();
        let at_zero: Vec<i64> = tab.rows.iter().map(|r| r.at_zero.clone().try_into().unwrap()).collect();
        let at_one: Vec<i64> = tab.rows.iter().map(|r| r.root_sum.clone().try_into().unwrap()).collect();
        assert_eq!(at_zero, vec![0, 0, -1, 9, -36, 60]);
        assert_eq!(at_one, vec![0, 0, 0, 3, 24, 60]);
        let c = critical_integer(&m, 3).unwrap();
        assert_eq!((c.f0.clone(), c.root_sum.clone(), c.value.clone()), (BigInt::from(32), BigInt::from(87), BigInt::from(-119)));
        assert!(c.residue_ok);
        assert_eq!(c.residue, 1);
        let m = subset_sum_closure(&poly("x^2 + 1")).unwrap();
        assert_eq!(critical_integer(&m, 5).unwrap().residue, 3);
        assert!(derivative_table(&m, 4).is_err());
    }

    #[test]
    fn tail_bounds_decay() {
        let m = subset_sum_closure(&poly("x - 1")).unwrap();
        let b7 = tail_bound(&m, 7, 128).unwrap();
        assert!(b7 < rat(4, 1000));
        assert!(b7 >= rat(2718, 720_000));
        let b3 = tail_bound(&m, 3, 128).unwrap();
        assert!(b3 < rat(136, 100) && b3 > int(1));
    }

    #[test]
    fn identity_and_certificate() {
        let m = subset_sum_closure(&poly("x - 1")).unwrap();
        let rep = integral_identity_check(&m, 2, 128).unwrap();
        assert_eq!(rep.pairs.len(), 1);
        assert!(rep.residual <= rep.radius_sum);
        let cert = certify_gap_pi(&m, 11, 128).unwrap();
        let lb = cert.lower_bound.unwrap();
        assert!(lb >= rat(36, 10) && lb <= rat(371829, 100000));
        let z = subset_sum_closure(&poly("x")).unwrap();
        assert!(integral_identity_check(&z, 3, 128).unwrap().pairs.is_empty());
        assert!(matches!(certify_gap_pi(&z, 11, 128), Err(Error::NoCertificate(_))));
    }
}
