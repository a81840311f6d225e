//! Dense univariate polynomials over Q and Z, stored low-to-high with no
//! trailing zero coefficients.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{fmt_rational, parse_rational, Rational};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        trim(&mut coeffs);
        RatPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut v = vec![Rational::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rational) -> Self {
        Self::new(vec![-r.clone(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0; only for callers that
    /// already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn lc(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        RatPoly { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let inv = self.lc().recip();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        if self.degree().is_none_or(|d| d < dd) {
            return (Self::zero(), self.clone());
        }
        let inv_lc = divisor.lc().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &inv_lc;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let dd = divisor.deg();
        match self.degree() {
            None => return Self::zero(),
            Some(d) if d < dd => return self.clone(),
            Some(d) if dd <= 1 || d - dd < 2 => return self.div_rem(divisor).1,
            _ => {}
        }
        // pseudo-remainder over Z, then one rescaling
        let (ca, a) = self.primitive_int();
        let (_, b) = divisor.primitive_int();
        let e = a.deg() - b.deg() + 1;
        let r = a.pseudo_rem(&b);
        let lc = Rational::from_integer(num_traits::pow(b.lc(), e));
        r.to_rat().scale(&(ca / lc))
    }

    /// Exact quotient, `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(x + a)`.
    pub fn shift(&self, a: &Rational) -> Self {
        let mut c = self.coeffs.clone();
        let n = c.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = &c[j + 1] * a;
                c[j] += t;
            }
        }
        Self::new(c)
    }

    /// `self(k x)`.
    pub fn scale_var(&self, k: &Rational) -> Self {
        let mut p = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &p);
            p *= k;
        }
        Self::new(out)
    }

    /// `self(-x)`.
    pub fn negate_var(&self) -> Self {
        self.scale_var(&-Rational::one())
    }

    /// `x^deg · self(1/x)`.
    pub fn reverse(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// Split into a positive rational content and a primitive integer polynomial
    /// with positive leading coefficient: `self = content · prim`.
    pub fn primitive_int(&self) -> (Rational, IntPoly) {
        if self.is_zero() {
            return (Rational::zero(), IntPoly::zero());
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> =
            self.coeffs.iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
        let ip = IntPoly::new(ints);
        let mut content = ip.content();
        if ip.lc().is_negative() {
            content = -content;
        }
        let prim = ip.div_scalar_exact(&content);
        (Rational::new(content, den), prim)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients if every coefficient is integral.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.is_integral().then(|| IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
    }

    /// Ordering used wherever output order must be reproducible: degree first,
    /// then coefficients compared from the constant term up.
    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().cmp(other.coeffs.iter()))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        trim(&mut coeffs);
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// gcd of the coefficients (nonnegative).
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn div_scalar_exact(&self, d: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c / d).collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rational(&self, x: &Rational) -> Rational {
        self.to_rat().eval(x)
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    /// Exact division in Z[x]; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = divisor.deg();
        if self.deg() < dd {
            return None;
        }
        let lc = divisor.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        rem.iter().all(|c| c.is_zero()).then(|| Self::new(quot))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a mod b`.
    pub fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.deg();
        let Some(da) = self.degree() else { return Self::zero() };
        if da < db {
            return self.clone();
        }
        let lc = b.lc();
        let mut r = self.coeffs.clone();
        let mut e = da - db + 1;
        while r.len() > db && !r.is_empty() {
            let k = r.len() - 1 - db;
            let top = r.last().unwrap().clone();
            for c in r.iter_mut() {
                *c *= &lc;
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[k + j] -= &top * bc;
            }
            r.pop();
            trim(&mut r);
            e -= 1;
        }
        let scale = num_traits::pow(lc, e);
        Self::new(r.into_iter().map(|c| c * &scale).collect())
    }
}

fn schoolbook<C: Clone + Zero + for<'a> std::ops::AddAssign<&'a C>>(a: &[C], b: &[C], mul: impl Fn(&C, &C) -> C) -> Vec<C> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut v = vec![C::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            v[i + j] += &mul(x, y);
        }
    }
    v
}

impl IntPoly {
    fn mul_impl(&self, rhs: &Self) -> Self {
        IntPoly::new(schoolbook(&self.coeffs, &rhs.coeffs, |a, b| a * b))
    }
}

impl RatPoly {
    /// Long products go through integer polynomials to avoid normalizing
    /// every intermediate fraction.
    fn mul_impl(&self, rhs: &Self) -> Self {
        if self.coeffs.len().min(rhs.coeffs.len()) <= 2 {
            return RatPoly::new(schoolbook(&self.coeffs, &rhs.coeffs, |a, b| a * b));
        }
        let (ca, a) = self.primitive_int();
        let (cb, b) = rhs.primitive_int();
        a.mul_impl(&b).to_rat().scale(&(ca * cb))
    }
}

macro_rules! impl_ring_ops {
    ($t:ident, $c:ty) => {
        impl Add for &$t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                let n = self.coeffs.len().max(rhs.coeffs.len());
                let mut v: Vec<$c> = Vec::with_capacity(n);
                for i in 0..n {
                    let a = self.coeffs.get(i);
                    let b = rhs.coeffs.get(i);
                    v.push(match (a, b) {
                        (Some(a), Some(b)) => a + b,
                        (Some(a), None) => a.clone(),
                        (None, Some(b)) => b.clone(),
                        (None, None) => <$c>::zero(),
                    });
                }
                $t::new(v)
            }
        }
        impl Sub for &$t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                self + &(-rhs)
            }
        }
        impl Neg for &$t {
            type Output = $t;
            fn neg(self) -> $t {
                $t { coeffs: self.coeffs.iter().map(|c| -c).collect() }
            }
        }
        impl Mul for &$t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                $t::mul_impl(self, rhs)
            }
        }
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

impl_ring_ops!(RatPoly, Rational);
impl_ring_ops!(IntPoly, BigInt);

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        p.to_rat()
    }
}

// ---- text syntax ------------------------------------------------------------

fn write_poly<C>(
    f: &mut fmt::Formatter<'_>,
    coeffs: &[C],
    is_neg: impl Fn(&C) -> bool,
    abs_text: impl Fn(&C) -> String,
) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        let text = abs_text(c);
        if text == "0" {
            continue;
        }
        let neg = is_neg(c);
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if neg { "-" } else { "+" })?;
        }
        first = false;
        let mono = match k {
            0 => String::new(),
            1 => "x".to_string(),
            _ => format!("x^{k}"),
        };
        if k == 0 {
            write!(f, "{text}")?;
        } else if text == "1" {
            write!(f, "{mono}")?;
        } else {
            write!(f, "{text}*{mono}")?;
        }
    }
    Ok(())
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, |c| c.is_negative(), |c| {
            let a = c.abs();
            if a.is_integer() {
                a.numer().to_string()
            } else {
                format!("{}/{}", a.numer(), a.denom())
            }
        })
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, |c| c.is_negative(), |c| c.abs().to_string())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Accepts sums of terms like `3/2*x^2`, `-x`, `5/4`, `2x`, `(1/2)*x`.
impl FromStr for RatPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = false;
        let mut depth = 0i32;
        for (i, ch) in text.chars().enumerate() {
            match ch {
                '(' => {
                    depth += 1;
                    cur.push(ch);
                }
                ')' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 && !(i > 0 && cur.ends_with('^')) => {
                    if !cur.is_empty() {
                        terms.push((sign, std::mem::take(&mut cur)));
                    } else if i > 0 {
                        return Err(Error::Parse(format!("dangling sign in `{s}`")));
                    }
                    sign = ch == '-';
                }
                _ => cur.push(ch),
            }
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("trailing operator in `{s}`")));
        }
        terms.push((sign, cur));
        let mut poly = RatPoly::zero();
        for (neg, term) in terms {
            let (c, k) = parse_term(&term).map_err(|e| match e {
                Error::Parse(m) => Error::Parse(format!("{m} in `{s}`")),
                other => other,
            })?;
            let c = if neg { -c } else { c };
            poly = &poly + &RatPoly::monomial(c, k);
        }
        Ok(poly)
    }
}

fn parse_term(term: &str) -> Result<(Rational, usize)> {
    let Some(xpos) = term.find('x') else {
        return Ok((parse_coeff(term)?, 0));
    };
    let (coef, rest) = term.split_at(xpos);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() { Rational::one() } else { parse_coeff(coef)? };
    let rest = &rest[1..];
    let k = if rest.is_empty() {
        1
    } else if let Some(e) = rest.strip_prefix('^') {
        e.parse::<usize>().map_err(|_| Error::Parse(format!("bad exponent `{e}`")))?
    } else {
        return Err(Error::Parse(format!("unexpected `{rest}` after x")));
    };
    Ok((c, k))
}

fn parse_coeff(s: &str) -> Result<Rational> {
    let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(s);
    parse_rational(inner)
}

impl serde::Serialize for RatPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> serde::Deserialize<'de> for RatPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl serde::Serialize for IntPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Exact string for a rational, used by serializers.
/// An integer polynomial over a positive integer scale: `numer / scale`.
/// Hermite polynomials carry their `1/(p-1)!` this way.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledPoly {
    pub numer: IntPoly,
    pub scale: BigInt,
}

impl ScaledPoly {
    pub fn new(numer: IntPoly, scale: BigInt) -> Self {
        assert!(scale.is_positive(), "scale must be positive");
        ScaledPoly { numer, scale }
    }

    pub fn to_rat(&self) -> RatPoly {
        self.numer.to_rat().scale(&Rational::new(BigInt::one(), self.scale.clone()))
    }

    /// `F = f + f' + f'' + ...`, same scale.
    pub fn derivative_sum(&self) -> ScaledPoly {
        ScaledPoly { numer: self.numer.derivative_sum(), scale: self.scale.clone() }
    }
}

impl IntPoly {
    /// `f + f' + f'' + ...`: coefficient `j` is `Σ_{i>=j} a_i i!/j!`.
    pub fn derivative_sum(&self) -> IntPoly {
        let n = self.coeffs.len();
        let mut out = vec![BigInt::zero(); n];
        let mut acc = BigInt::zero();
        for j in (0..n).rev() {
            acc = &self.coeffs[j] + acc * BigInt::from(j + 1);
            out[j] = acc.clone();
        }
        IntPoly::new(out)
    }
}

pub fn rational_text(q: &Rational) -> String {
    fmt_rational(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn p(s: &str) -> RatPoly {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        for s in ["x^4 - 4", "x^2 + 3/2*x + 5/4", "-x^3 + x", "0", "7", "x", "-1/2*x^2 - 1"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert_eq!(p("2x^2-3x+1").to_string(), "2*x^2 - 3*x + 1");
        assert_eq!(p("(1/2)*x + x"), p("3/2*x"));
        assert!("x^".parse::<RatPoly>().is_err());
        assert!("x +".parse::<RatPoly>().is_err());
        assert!("y^2".parse::<RatPoly>().is_err());
    }

    #[test]
    fn division_and_degree() {
        let f = p("x^3 - 1");
        let g = p("x - 1");
        let (q, r) = f.div_rem(&g);
        assert_eq!(q, p("x^2 + x + 1"));
        assert!(r.is_zero());
        assert_eq!(RatPoly::zero().degree(), None);
        assert_eq!(p("5").degree(), Some(0));
    }

    #[test]
    fn shifts_and_compositions() {
        let f = p("x^2 - 2");
        assert_eq!(f.shift(&int(1)), p("x^2 + 2*x - 1"));
        assert_eq!(f.compose(&p("x + 1")), f.shift(&int(1)));
        assert_eq!(f.scale_var(&rat(1, 2)), p("1/4*x^2 - 2"));
        assert_eq!(p("x^2 + 2*x + 3").reverse(), p("3*x^2 + 2*x + 1"));
    }

    #[test]
    fn primitive_split() {
        let (c, q) = p("-3/2*x^2 + 3").primitive_int();
        assert_eq!(c, rat(-3, 2));
        assert_eq!(q, IntPoly::from_i64(&[-2, 0, 1]));
    }

    #[test]
    fn int_exact_division_and_prem() {
        let a = IntPoly::from_i64(&[-1, 0, 1]);
        let b = IntPoly::from_i64(&[1, 1]);
        assert_eq!(a.div_exact(&b), Some(IntPoly::from_i64(&[-1, 1])));
        assert_eq!(IntPoly::from_i64(&[1, 0, 1]).div_exact(&b), None);
        // lc(b)^2 * (x^2+1) mod (2x+1)
        let r = IntPoly::from_i64(&[1, 0, 1]).pseudo_rem(&IntPoly::from_i64(&[1, 2]));
        assert_eq!(r, IntPoly::from_i64(&[5]));
    }
}
