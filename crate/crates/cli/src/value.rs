//! Textual algebraic numbers: a rational (`3`, `-2/5`, `0.25`) or
//! `root:<poly>@<hint>` with a decimal complex hint such as `1.41`, `-i`,
//! `0.5-0.87i`.
//!
//! The hint selects the root within `10^-d` in each coordinate, `d` being the
//! number of decimals given (a whole-number hint allows `1/2`). Zero or
//! several roots in that box is an error, never a nearest-root guess.

use lwcert_core::exact::poly::RatPoly;
use lwcert_core::exact::rational::Rational;
use lwcert_core::qbar::AlgebraicNumber;
use lwcert_core::{Error, Result};
use num_bigint::BigInt;

pub fn parse_value(text: &str) -> Result<AlgebraicNumber> {
    let t = text.trim();
    let Some(rest) = t.strip_prefix("root:") else {
        return Ok(AlgebraicNumber::from_rational(parse_decimal(t)?.0));
    };
    let Some((poly, hint)) = rest.rsplit_once('@') else {
        return Err(Error::Parse(format!("`{t}` needs an `@<approx>` hint")));
    };
    let f: RatPoly = poly.parse()?;
    let (re, im, decimals) = parse_hint(hint)?;
    let tol = if decimals == 0 {
        Rational::new(1.into(), 2.into())
    } else {
        Rational::new(1.into(), BigInt::from(10).pow(decimals))
    };
    AlgebraicNumber::near(&f, &re, &im, &tol)
}

/// Comma-separated values.
pub fn parse_list(text: &str) -> Result<Vec<AlgebraicNumber>> {
    let items: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
    if items.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    items.into_iter().map(parse_value).collect()
}

pub fn parse_int_list(text: &str) -> Result<Vec<BigInt>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<BigInt>().map_err(|_| Error::Parse(format!("`{s}` is not an integer"))))
        .collect()
}

/// `(re, im, decimals)`.
fn parse_hint(hint: &str) -> Result<(Rational, Rational, u32)> {
    let h: String = hint.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    if h.is_empty() {
        return Err(Error::Parse("empty hint".into()));
    }
    let Some(body) = h.strip_suffix('i') else {
        let (re, d) = parse_decimal(&h)?;
        return Ok((re, Rational::from_integer(0.into()), d));
    };
    // split before the sign that starts the imaginary part
    let cut = body.char_indices().skip(1).filter(|&(_, c)| c == '+' || c == '-').map(|(i, _)| i).last();
    let (re_txt, im_txt) = match cut {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let (im, di) = match im_txt {
        "" | "+" => (Rational::from_integer(1.into()), 0),
        "-" => (Rational::from_integer((-1).into()), 0),
        s => parse_decimal(s)?,
    };
    let (re, dr) = if re_txt.is_empty() { (Rational::from_integer(0.into()), 0) } else { parse_decimal(re_txt)? };
    Ok((re, im, dr.max(di)))
}

/// An exact rational from `a`, `a/b` or a decimal `a.bcd`, with its number of
/// decimals.
fn parse_decimal(s: &str) -> Result<(Rational, u32)> {
    let bad = || Error::Parse(format!("`{s}` is not a number"));
    let s = s.strip_prefix('+').unwrap_or(s);
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d == BigInt::from(0) {
            return Err(Error::Parse(format!("`{s}` has a zero denominator")));
        }
        return Ok((Rational::new(n, d), 0));
    }
    let (neg, digits) = match s.strip_prefix('-') {
        Some(r) => (true, r),
        None => (false, s),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if (whole.is_empty() && frac.is_empty()) || !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let mant: BigInt = format!("{whole}{frac}").parse().map_err(|_| bad())?;
    let mant = if neg { -mant } else { mant };
    let d = frac.len() as u32;
    Ok((Rational::new(mant, BigInt::from(10).pow(d)), d))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn hints() {
        assert_eq!(parse_hint("1.41").unwrap(), (r(141, 100), r(0, 1), 2));
        assert_eq!(parse_hint("-i").unwrap(), (r(0, 1), r(-1, 1), 0));
        assert_eq!(parse_hint("i").unwrap(), (r(0, 1), r(1, 1), 0));
        assert_eq!(parse_hint("0.5-0.866i").unwrap(), (r(1, 2), r(-866, 1000), 3));
        assert_eq!(parse_hint("-2+3*i").unwrap(), (r(-2, 1), r(3, 1), 0));
        assert!(parse_hint("1.4.1").is_err());
        assert!(parse_hint("x").is_err());
    }

    #[test]
    fn values() {
        assert_eq!(parse_value("-2/6").unwrap().as_rational(), Some(r(-1, 3)));
        assert_eq!(parse_value("0.25").unwrap().as_rational(), Some(r(1, 4)));
        let s = parse_value("root:x^2-2@1.41").unwrap();
        assert!(s.approx().unwrap().0 > 1.4);
        let m = parse_value("root:x^2+1@-i").unwrap();
        assert!(m.approx().unwrap().1 < 0.0);
        assert!(matches!(parse_value("root:x^2-2"), Err(Error::Parse(_))));
        // a hint between the two roots selects neither
        assert!(parse_value("root:x^2-2@0").is_err());
    }
}
