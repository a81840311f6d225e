//! Helpers around `BigRational`, which already keeps numerator and
//! denominator coprime with a positive denominator.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn from_bigint(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

pub fn is_integer(q: &Rational) -> bool {
    q.denom().is_one()
}

/// Parse `7`, `-3/4` or a terminating decimal such as `1.25`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    let bad = || Error::Parse(format!("not a rational number: `{text}`"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{text}`")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let negative = whole.trim_start().starts_with('-');
        let whole = whole.trim().trim_start_matches(['-', '+']);
        if !whole.chars().all(|c| c.is_ascii_digit()) || !frac.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        if whole.is_empty() && frac.is_empty() {
            return Err(bad());
        }
        let digits = format!("{}{}", if whole.is_empty() { "0" } else { whole }, frac);
        let n: BigInt = digits.parse().map_err(|_| bad())?;
        let d = num_traits::pow(BigInt::from(10), frac.len());
        let q = Rational::new(n, d);
        return Ok(if negative { -q } else { q });
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Exact text form. Rationals whose denominator has only the prime factors
/// 2 and 5 print as terminating decimals; everything else prints as `n/d`.
pub fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        return q.numer().to_string();
    }
    let mut d = q.denom().clone();
    let (two, five) = (BigInt::from(2), BigInt::from(5));
    let mut twos = 0usize;
    let mut fives = 0usize;
    while d.is_even() {
        d /= &two;
        twos += 1;
    }
    while (&d % &five).is_zero() {
        d /= &five;
        fives += 1;
    }
    if !d.is_one() {
        return format!("{}/{}", q.numer(), q.denom());
    }
    let places = twos.max(fives);
    let scaled = q * Rational::from_integer(num_traits::pow(BigInt::from(10), places));
    debug_assert!(scaled.is_integer());
    let n = scaled.to_integer();
    let neg = n.is_negative();
    let mut digits = n.abs().to_string();
    if digits.len() <= places {
        digits = format!("{}{}", "0".repeat(places + 1 - digits.len()), digits);
    }
    let split = digits.len() - places;
    format!("{}{}.{}", if neg { "-" } else { "" }, &digits[..split], &digits[split..])
}

/// Round `q` to a rational with a power-of-ten denominator and `sig` significant
/// digits, downward (`up = false`) or upward (`up = true`).
pub fn round_decimal(q: &Rational, sig: u32, up: bool) -> Rational {
    if q.is_zero() {
        return q.clone();
    }
    let mag = decimal_exponent(&q.abs());
    let shift = sig as i64 - 1 - mag;
    let ten = BigInt::from(10);
    let scale = if shift >= 0 {
        Rational::from_integer(num_traits::pow(ten.clone(), shift as usize))
    } else {
        Rational::new(BigInt::one(), num_traits::pow(ten.clone(), (-shift) as usize))
    };
    let scaled = q * &scale;
    let n = if up { scaled.ceil() } else { scaled.floor() };
    n / scale
}

/// floor(log10 |q|) for nonzero q.
pub fn decimal_exponent(q: &Rational) -> i64 {
    debug_assert!(!q.is_zero());
    let a = q.abs();
    let ten = Rational::from_integer(BigInt::from(10));
    // bit-length estimate, then correct
    let bits = a.numer().bits() as i64 - a.denom().bits() as i64;
    let mut e = (bits as f64 * std::f64::consts::LOG10_2).floor() as i64;
    let pow = |k: i64| -> Rational {
        if k >= 0 {
            Rational::from_integer(num_traits::pow(BigInt::from(10), k as usize))
        } else {
            Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), (-k) as usize))
        }
    };
    while pow(e) > a {
        e -= 1;
    }
    while pow(e) * &ten <= a {
        e += 1;
    }
    e
}

pub fn pow_rational(q: &Rational, e: u64) -> Rational {
    num_traits::pow(q.clone(), e as usize)
}

pub fn lcm_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_formats() {
        assert_eq!(parse_rational("-3/6").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational("1.25").unwrap(), rat(5, 4));
        assert_eq!(parse_rational("-0.5").unwrap(), rat(-1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert_eq!(fmt_rational(&rat(5, 4)), "1.25");
        assert_eq!(fmt_rational(&rat(-1, 40)), "-0.025");
        assert_eq!(fmt_rational(&rat(1, 3)), "1/3");
        assert_eq!(fmt_rational(&int(-119)), "-119");
    }

    #[test]
    fn decimal_rounding_brackets() {
        let third = rat(1, 3);
        let lo = round_decimal(&third, 5, false);
        let hi = round_decimal(&third, 5, true);
        assert!(lo <= third && third <= hi);
        assert_eq!(fmt_rational(&lo), "0.33333");
        assert_eq!(fmt_rational(&hi), "0.33334");
        assert_eq!(decimal_exponent(&rat(1, 1000)), -3);
        assert_eq!(decimal_exponent(&int(999)), 2);
    }
}
