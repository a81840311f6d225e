//! Factorization over Q: Yun's squarefree decomposition, then for each
//! squarefree part a Berlekamp factorization modulo a small prime, quadratic
//! Hensel lifting past the Mignotte bound, and exhaustive subset
//! recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::gcd::squarefree_decomposition;
use super::integers::{is_prime_u64, mod_u64};
use super::modp::{self, Zp};
use super::poly::{IntPoly, RatPoly};
use super::rational::Rational;
use crate::error::{domain, Result};

/// Complete factorization: `f = lead · Π g_i^{e_i}` with the `g_i` monic,
/// irreducible over Q, pairwise distinct and sorted by (degree, coefficients
/// from the constant term up).
pub fn factor_rational(f: &RatPoly) -> Result<(Rational, Vec<(RatPoly, usize)>)> {
    if f.is_zero() {
        return domain("factorization of the zero polynomial");
    }
    let lead = f.lc();
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for g in factor_squarefree(&part) {
            out.push((g, mult));
        }
    }
    out.sort_by(|a, b| a.0.canonical_cmp(&b.0));
    Ok((lead, out))
}

/// Monic irreducible factors of a squarefree rational polynomial, sorted.
pub fn factor_squarefree(f: &RatPoly) -> Vec<RatPoly> {
    if f.deg() <= 1 {
        return if f.is_constant() { Vec::new() } else { vec![f.monic()] };
    }
    let (_, prim) = f.primitive_int();
    let mut out: Vec<RatPoly> = factor_primitive(&prim).iter().map(|g| g.to_rat().monic()).collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Irreducible factors in Z[x] of a primitive squarefree integer polynomial
/// with positive leading coefficient.
pub fn factor_primitive(f: &IntPoly) -> Vec<IntPoly> {
    let n = f.deg();
    if n <= 1 {
        return vec![f.clone()];
    }
    // pull out x separately so the constant-term filter below stays useful
    if f.coeff(0).is_zero() {
        let rest = f.div_exact(&IntPoly::x()).expect("x divides f");
        let mut out = vec![IntPoly::x()];
        out.extend(factor_primitive(&rest.primitive_part()));
        return out;
    }
    let (p, modular) = choose_prime(f);
    if modular.len() == 1 {
        return vec![f.clone()];
    }
    let bound = coefficient_bound(f);
    let mut modulus = BigInt::from(p);
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let lifted = hensel_lift(f, &modular, p, &modulus);
    recombine(f, lifted, &modulus)
}

/// `2·|lc|·B` with `B` the Mignotte bound on coefficients of any factor.
fn coefficient_bound(f: &IntPoly) -> BigInt {
    let n = f.deg() as u32;
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap();
    // sqrt(n + 1) <= ceil, so overestimating by ceiling keeps it a bound
    let sqrt = BigInt::from(((n + 1) as f64).sqrt().ceil() as u64);
    BigInt::from(2) * f.lc().abs() * (BigInt::one() << n) * sqrt * max
}

fn reduce(f: &IntPoly, p: u64) -> Zp {
    modp::trim(f.coeffs().iter().map(|c| mod_u64(c, p)).collect())
}

/// Fixed schedule: odd primes in increasing order. A prime qualifies when it
/// does not divide the leading coefficient and keeps `f` squarefree. Among the
/// first few qualifying primes, the one with fewest modular factors wins;
/// ties go to the smaller prime.
fn choose_prime(f: &IntPoly) -> (u64, Vec<Zp>) {
    const CANDIDATES: usize = 5;
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut seen = 0;
    let mut p = 2u64;
    while seen < CANDIDATES {
        p += 1;
        if !is_prime_u64(p) || mod_u64(&f.lc(), p) == 0 {
            continue;
        }
        let fp = reduce(f, p);
        let d = modp::derivative(&fp, p);
        if d.is_empty() || modp::deg(&modp::gcd(&fp, &d, p)) != Some(0) {
            continue;
        }
        seen += 1;
        let factors = modp::berlekamp_factor(&modp::monic(&fp, p), p);
        if best.as_ref().is_none_or(|(_, b)| factors.len() < b.len()) {
            best = Some((p, factors));
        }
        if best.as_ref().unwrap().1.len() == 1 {
            break;
        }
    }
    best.expect("a squarefree integer polynomial has good primes")
}

// ---- polynomials modulo a big modulus, coefficients in [0, m)

type Zm = Vec<BigInt>;

fn trim_m(mut a: Zm) -> Zm {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn norm_m(a: Vec<BigInt>, m: &BigInt) -> Zm {
    trim_m(a.into_iter().map(|c| c.mod_floor(m)).collect())
}

fn add_m(a: &Zm, b: &Zm, m: &BigInt) -> Zm {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    norm_m((0..n).map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z)).collect(), m)
}

fn sub_m(a: &Zm, b: &Zm, m: &BigInt) -> Zm {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    norm_m((0..n).map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z)).collect(), m)
}

fn mul_m(a: &Zm, b: &Zm, m: &BigInt) -> Zm {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    norm_m(out, m)
}

/// Division by a monic divisor modulo `m`.
fn div_rem_m(a: &Zm, b: &Zm, m: &BigInt) -> (Zm, Zm) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if !c.is_zero() {
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = (&r[k + j] - &c * bj).mod_floor(m);
            }
        }
        q[k] = c;
    }
    r.truncate(db);
    (norm_m(q, m), norm_m(r, m))
}

fn lift_zp(a: &Zp) -> Zm {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// One quadratic Hensel step: from `f ≡ g h`, `s g + t h ≡ 1 (mod m)` with
/// `g`, `h` monic, produce the same relations modulo `m²`.
fn hensel_step(f: &Zm, g: &Zm, h: &Zm, s: &Zm, t: &Zm, m: &BigInt) -> (Zm, Zm, Zm, Zm) {
    let m2 = m * m;
    let e = sub_m(f, &mul_m(g, h, &m2), &m2);
    let (q, r) = div_rem_m(&mul_m(s, &e, &m2), h, &m2);
    let g2 = add_m(&add_m(g, &mul_m(t, &e, &m2), &m2), &mul_m(&q, g, &m2), &m2);
    let h2 = add_m(h, &r, &m2);
    let one: Zm = vec![BigInt::one()];
    let b = sub_m(&add_m(&mul_m(s, &g2, &m2), &mul_m(t, &h2, &m2), &m2), &one, &m2);
    let (c, d) = div_rem_m(&mul_m(s, &b, &m2), &h2, &m2);
    let s2 = sub_m(s, &d, &m2);
    let t2 = sub_m(&sub_m(t, &mul_m(t, &b, &m2), &m2), &mul_m(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lift the monic modular factors of `lc(f)^{-1} f` to monic factors modulo
/// `target`, which must be a power `p^(2^k)`.
fn hensel_lift(f: &IntPoly, factors: &[Zp], p: u64, target: &BigInt) -> Vec<Zm> {
    let lc_inv = f.lc().modinv(target).expect("p does not divide lc");
    let monic: Zm = norm_m(f.coeffs().iter().map(|c| c * &lc_inv).collect(), target);
    let mut out = Vec::with_capacity(factors.len());
    lift_tree(&monic, factors, p, target, &mut out);
    out
}

fn lift_tree(f: &Zm, factors: &[Zp], p: u64, target: &BigInt, out: &mut Vec<Zm>) {
    if factors.len() == 1 {
        out.push(f.clone());
        return;
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[Zp]| fs.iter().fold(vec![1u64], |acc, g| modp::mul(&acc, g, p));
    let (g0, h0) = (prod(left), prod(right));
    let (one, s0, t0) = modp::ext_gcd(&g0, &h0, p);
    debug_assert_eq!(one, vec![1]);
    let (mut g, mut h, mut s, mut t) = (lift_zp(&g0), lift_zp(&h0), lift_zp(&s0), lift_zp(&t0));
    let mut m = BigInt::from(p);
    while &m < target {
        (g, h, s, t) = hensel_step(f, &g, &h, &s, &t, &m);
        m = &m * &m;
    }
    lift_tree(&g, left, p, target, out);
    lift_tree(&h, right, p, target, out);
}

fn symmetric(c: &BigInt, m: &BigInt) -> BigInt {
    let r = c.mod_floor(m);
    if &r + &r > *m {
        r - m
    } else {
        r
    }
}

/// Zassenhaus recombination: try subsets of increasing size; a subset gives a
/// true factor when `lc · Π u_i` (symmetric residues) divides the remaining
/// polynomial exactly.
fn recombine(f: &IntPoly, mut lifted: Vec<Zm>, m: &BigInt) -> Vec<IntPoly> {
    let mut remaining = f.clone();
    let mut found = Vec::new();
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        for subset in Combinations::new(lifted.len(), size) {
            let lc = remaining.lc();
            let c0 = subset.iter().fold(lc.clone(), |acc, &i| (acc * &lifted[i][0]).mod_floor(m));
            let c0 = symmetric(&c0, m);
            if c0.is_zero() || !(&lc * remaining.coeff(0)).is_multiple_of(&c0) {
                continue;
            }
            let prod = subset.iter().fold(vec![lc.clone()], |acc, &i| mul_m(&acc, &lifted[i], m));
            let cand = IntPoly::new(prod.iter().map(|c| symmetric(c, m)).collect()).primitive_part();
            if let Some(q) = remaining.div_exact(&cand) {
                hit = Some((subset, cand, q));
                break;
            }
        }
        match hit {
            Some((subset, cand, q)) => {
                found.push(cand);
                remaining = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    found.push(remaining.primitive_part());
    found.into_iter().map(|g| if g.lc().is_negative() { g.scale(&BigInt::from(-1)) } else { g }).collect()
}

/// Index subsets of `0..n` of a fixed size, in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations { n, idx: (0..k).collect(), done: k > n }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let current = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in (i + 1)..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(current)
    }
}

/// Rational roots of a nonzero polynomial by the rational-root theorem.
/// Exponential in the number of divisors; used as a test oracle.
pub fn rational_roots_bruteforce(f: &RatPoly) -> Vec<Rational> {
    let (_, prim) = f.primitive_int();
    let mut roots = Vec::new();
    if prim.coeff(0).is_zero() {
        roots.push(Rational::zero());
    }
    let low = prim.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let a0 = prim.coeff(low).abs();
    let an = prim.lc().abs();
    let divs = |n: &BigInt| -> Vec<BigInt> {
        let n = n.to_u64().expect("small oracle input");
        (1..=n).filter(|d| n % d == 0).map(BigInt::from).collect()
    };
    for num in divs(&a0) {
        for den in divs(&an) {
            for sign in [1, -1] {
                let r = Rational::new(&num * sign, den.clone());
                if f.eval(&r).is_zero() && !roots.contains(&r) {
                    roots.push(r);
                }
            }
        }
    }
    roots.sort();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    fn expand(lead: &Rational, fs: &[(RatPoly, usize)]) -> RatPoly {
        fs.iter().fold(RatPoly::constant(lead.clone()), |acc, (g, e)| &acc * &g.pow(*e as u32))
    }

    #[test]
    fn small_examples() {
        let (lead, fs) = factor_rational(&p("x^2 - 1")).unwrap();
        assert_eq!(lead, int(1));
        assert_eq!(fs, vec![(p("x - 1"), 1), (p("x + 1"), 1)]);
        let (_, fs) = factor_rational(&p("x^2 + 1")).unwrap();
        assert_eq!(fs, vec![(p("x^2 + 1"), 1)]);
        let (_, fs) = factor_rational(&p("x^4 - 4")).unwrap();
        assert_eq!(fs, vec![(p("x^2 - 2"), 1), (p("x^2 + 2"), 1)]);
        assert!(factor_rational(&RatPoly::zero()).is_err());
    }

    #[test]
    fn multiplicities_and_leading_constant() {
        let f = p("3*x^5 - 3*x^3");
        let (lead, fs) = factor_rational(&f).unwrap();
        assert_eq!(lead, int(3));
        assert_eq!(fs, vec![(p("x - 1"), 1), (p("x"), 3), (p("x + 1"), 1)]);
        assert_eq!(expand(&lead, &fs), f);
    }

    #[test]
    fn hard_recombination() {
        // x^4 + 1 splits modulo every prime but is irreducible over Q
        let (_, fs) = factor_rational(&p("x^4 + 1")).unwrap();
        assert_eq!(fs.len(), 1);
        // Swinnerton-Dyer polynomial for sqrt2, sqrt3, sqrt5
        let f = p("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
        let (_, fs) = factor_rational(&f).unwrap();
        assert_eq!(fs.len(), 1);
        let g = p("x^8 - 40*x^6 + 352*x^4 - 960*x^2 + 576");
        let h = p("5*x^3 - 7*x + 11");
        let (lead, fs) = factor_rational(&(&g * &h)).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(expand(&lead, &fs), &g * &h);
    }

    #[test]
    fn non_monic_factors() {
        let f = p("6*x^2 + 5*x + 1");
        let (lead, fs) = factor_rational(&f).unwrap();
        assert_eq!(fs, vec![(p("x + 1/3"), 1), (p("x + 1/2"), 1)]);
        assert_eq!(expand(&lead, &fs), f);
    }

    #[test]
    fn combinations_enumerate() {
        let all: Vec<_> = Combinations::new(4, 2).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], vec![0, 1]);
        assert_eq!(all[5], vec![2, 3]);
        assert_eq!(rational_roots_bruteforce(&p("2*x^2 - x - 1")), vec![Rational::new((-1).into(), 2.into()), int(1)]);
    }
}
