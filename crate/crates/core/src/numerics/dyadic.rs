//! Binary floating-point numbers `mant · 2^exp` with arbitrary mantissas and
//! explicit directed rounding.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exact::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Round {
    Down,
    Up,
    Nearest,
}

/// Exact dyadic rational. Normalized: the mantissa is odd, or zero with
/// exponent zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn new(mant: BigInt, exp: i64) -> Self {
        if mant.is_zero() {
            return Dyadic { mant, exp: 0 };
        }
        let tz = mant.trailing_zeros().unwrap_or(0);
        Dyadic { mant: mant >> tz, exp: exp + tz as i64 }
    }

    pub fn zero() -> Self {
        Dyadic::default()
    }

    pub fn one() -> Self {
        Dyadic { mant: BigInt::one(), exp: 0 }
    }

    pub fn from_i64(n: i64) -> Self {
        Dyadic::new(BigInt::from(n), 0)
    }

    pub fn pow2(e: i64) -> Self {
        Dyadic { mant: BigInt::one(), exp: e }
    }

    pub fn mant(&self) -> &BigInt {
        &self.mant
    }

    pub fn exp(&self) -> i64 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mant.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.mant.is_positive()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    pub fn neg(&self) -> Self {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }

    /// Position of the leading bit: `2^(mag-1) <= |x| < 2^mag`. Zero maps to
    /// `i64::MIN`.
    pub fn mag(&self) -> i64 {
        if self.is_zero() {
            i64::MIN
        } else {
            self.exp + self.mant.bits() as i64
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let e = self.exp.min(o.exp);
        let a = &self.mant << (self.exp - e) as usize;
        let b = &o.mant << (o.exp - e) as usize;
        Dyadic::new(a + b, e)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Dyadic::zero();
        }
        Dyadic { mant: &self.mant * &o.mant, exp: self.exp + o.exp }
    }

    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    /// Round to at most `prec` significant bits.
    pub fn round(&self, prec: u32, mode: Round) -> Self {
        let bits = self.mant.bits();
        if bits <= prec as u64 {
            return self.clone();
        }
        let shift = (bits - prec as u64) as usize;
        let unit = BigInt::one() << shift;
        let (q, r) = self.mant.div_mod_floor(&unit);
        let q = match mode {
            Round::Down => q,
            Round::Up => {
                if r.is_zero() {
                    q
                } else {
                    q + 1
                }
            }
            Round::Nearest => {
                if &r + &r >= unit {
                    q + 1
                } else {
                    q
                }
            }
        };
        Dyadic::new(q, self.exp + shift as i64)
    }

    /// Round to nearest and also return the size of the change.
    pub fn round_with_error(&self, prec: u32) -> (Self, Self) {
        let r = self.round(prec, Round::Nearest);
        let err = r.sub(self).abs();
        (r, err)
    }

    pub fn from_rational(q: &Rational, prec: u32, mode: Round) -> Self {
        if q.is_zero() {
            return Dyadic::zero();
        }
        let (n, d) = (q.numer(), q.denom());
        // choose k so the quotient carries about prec + 2 bits
        let k = prec as i64 + 2 - (n.bits() as i64 - d.bits() as i64);
        let (num, den) = if k >= 0 { (n << k as usize, d.clone()) } else { (n.clone(), d << (-k) as usize) };
        let (quot, rem) = num.div_mod_floor(&den);
        let exact = rem.is_zero();
        let m = match mode {
            Round::Down => quot,
            Round::Up => {
                if exact {
                    quot
                } else {
                    quot + 1
                }
            }
            Round::Nearest => {
                if &rem + &rem >= den {
                    quot + 1
                } else {
                    quot
                }
            }
        };
        // the two guard bits are cut in the same direction
        Dyadic::new(m, -k).round(prec, mode)
    }

    /// Exact conversion when the rational is dyadic.
    pub fn from_rational_exact(q: &Rational) -> Option<Self> {
        let d = q.denom();
        let tz = d.trailing_zeros().unwrap_or(0);
        (d >> tz).is_one().then(|| Dyadic::new(q.numer().clone(), -(tz as i64)))
    }

    pub fn to_rational(&self) -> Rational {
        if self.exp >= 0 {
            Rational::from_integer(&self.mant << self.exp as usize)
        } else {
            Rational::new(self.mant.clone(), BigInt::one() << (-self.exp) as usize)
        }
    }

    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let bits = self.mant.bits() as i64;
        let keep = bits.min(60);
        let m = (&self.mant >> (bits - keep) as usize).to_f64().unwrap_or(0.0);
        let e = self.exp + bits - keep;
        if e > 2000 {
            return m.signum() * f64::INFINITY;
        }
        if e < -2000 {
            return 0.0;
        }
        m * 2f64.powi(e as i32)
    }

    /// Exact conversion from a finite double.
    pub fn from_f64(x: f64) -> Self {
        assert!(x.is_finite(), "non-finite double");
        if x == 0.0 {
            return Dyadic::zero();
        }
        let bits = x.to_bits();
        let sign = if bits >> 63 == 1 { -1 } else { 1 };
        let exp = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if exp == 0 { (frac, -1074) } else { (frac | (1u64 << 52), exp - 1075) };
        Dyadic::new(BigInt::from(m) * sign, e)
    }

    /// Truncated quotient carrying about `prec` bits. Not directed; callers
    /// that need a bound measure the residual themselves.
    pub fn div_approx(&self, o: &Self, prec: u32) -> Self {
        assert!(!o.is_zero(), "division by zero");
        if self.is_zero() {
            return Dyadic::zero();
        }
        let s = (prec as i64 + 2 + o.mant.bits() as i64 - self.mant.bits() as i64).max(0);
        let q = (&self.mant << s as usize) / &o.mant;
        Dyadic::new(q, self.exp - o.exp - s)
    }

    /// Upper bound on `sqrt(self)` for `self >= 0`, about `prec` bits.
    pub fn sqrt_up(&self, prec: u32) -> Self {
        self.sqrt_dir(prec, true)
    }

    pub fn sqrt_down(&self, prec: u32) -> Self {
        self.sqrt_dir(prec, false)
    }

    fn sqrt_dir(&self, prec: u32, up: bool) -> Self {
        assert!(!self.is_negative(), "square root of a negative number");
        if self.is_zero() {
            return Dyadic::zero();
        }
        // scale mantissa to have 2·prec bits with an even exponent
        let mut shift = 2 * prec as i64 + 2 - self.mant.bits() as i64;
        if (self.exp - shift) % 2 != 0 {
            shift += 1;
        }
        let m = if shift >= 0 {
            &self.mant << shift as usize
        } else {
            let q = &self.mant >> (-shift) as usize;
            // truncation lowered m; compensate when rounding up
            if up {
                q + 1
            } else {
                q
            }
        };
        let mut s = m.sqrt();
        if up && &s * &s != m {
            s += 1;
        }
        Dyadic::new(s, (self.exp - shift) / 2)
    }

    pub fn min(a: &Self, b: &Self) -> Self {
        if a <= b {
            a.clone()
        } else {
            b.clone()
        }
    }

    pub fn max(a: &Self, b: &Self) -> Self {
        if a >= b {
            a.clone()
        } else {
            b.clone()
        }
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (sa, sb) = (self.signum(), other.signum());
        if sa != sb {
            return sa.cmp(&sb);
        }
        if sa == 0 {
            return Ordering::Equal;
        }
        // same sign: compare magnitudes cheaply first
        let (ma, mb) = (self.mag(), other.mag());
        if ma != mb {
            let by_mag = ma.cmp(&mb);
            return if sa > 0 { by_mag } else { by_mag.reverse() };
        }
        self.sub(other).signum().cmp(&0)
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·2^{}", self.mant, self.exp)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:e}", self.to_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    #[test]
    fn rounding_directions() {
        let third = rat(1, 3);
        let lo = Dyadic::from_rational(&third, 53, Round::Down);
        let hi = Dyadic::from_rational(&third, 53, Round::Up);
        assert!(lo.to_rational() < third && third < hi.to_rational());
        assert!(lo.mant().bits() <= 53 && hi.mant().bits() <= 53);
        let neg = Dyadic::from_rational(&-third.clone(), 20, Round::Up);
        assert!(neg.to_rational() > -third);
        assert_eq!(Dyadic::from_rational(&rat(3, 4), 10, Round::Down).to_rational(), rat(3, 4));
    }

    #[test]
    fn sqrt_brackets() {
        let two = Dyadic::from_i64(2);
        let lo = two.sqrt_down(100);
        let hi = two.sqrt_up(100);
        assert!(lo.mul(&lo) < two && hi.mul(&hi) > two);
        assert!(hi.sub(&lo) < Dyadic::pow2(-95));
        assert_eq!(Dyadic::from_i64(16).sqrt_up(10), Dyadic::from_i64(4));
        let tiny = Dyadic::pow2(-301);
        let r = tiny.sqrt_up(30);
        assert!(r.mul(&r) >= tiny);
    }

    #[test]
    fn ordering_and_doubles() {
        assert!(Dyadic::from_i64(-3) < Dyadic::from_i64(2));
        assert!(Dyadic::pow2(-10) < Dyadic::pow2(-9));
        assert!(Dyadic::from_i64(-1).mul_pow2(-10) > Dyadic::from_i64(-1));
        assert_eq!(Dyadic::from_f64(0.375).to_rational(), rat(3, 8));
        assert_eq!(Dyadic::from_f64(-1.5).to_f64(), -1.5);
    }
}
