use lwcert_core::exact::poly::RatPoly;
use lwcert_core::exact::rational::{fmt_rational, Rational};
use lwcert_core::fields::{
    apply_embedding, element_minpoly, field_generate, norm, norm_closed_form, symmetric_set_polynomial, NumberField,
};
use lwcert_core::hermite::{
    best, conjugate_expand_capped, qbar_reduce_capped, subset_sum_closure_capped, sweep_lw, sweep_pi, HermiteCertificate,
};
use lwcert_core::numerics::ComplexBall;
use lwcert_core::qbar::{
    conjugates, integer_multiplier, is_algebraic_integer, prime_divisor_set, qbar_arith, AlgebraicNumber, ArithOp,
};
use lwcert_core::{Error, Result};
use serde_json::{json, Value};

use crate::report::Report;
use crate::value::{parse_int_list, parse_list, parse_value};

/// Significant digits in printed approximations.
const DIGITS: u32 = 30;

#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub prec: u32,
    pub pmax: u64,
    pub cap: u128,
}

fn ball_json(b: &ComplexBall) -> Value {
    let (re, im, rad) = b.to_decimal(DIGITS);
    json!({"re": re, "im": im, "radius": rad})
}

/// `x` to `sig` significant digits, for tables.
fn sig_digits(x: f64, sig: i32) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-4..=15).contains(&mag) {
        return format!("{:.*e}", (sig - 1) as usize, x);
    }
    let t = format!("{:.*}", (sig - 1 - mag).max(0) as usize, x);
    let t = if t.contains('.') { t.trim_end_matches('0').trim_end_matches('.').to_string() } else { t };
    if t == "-0" { "0".into() } else { t }
}

fn ball_text(b: &ComplexBall) -> String {
    let (mut re, mut im) = b.to_c64();
    // a component whose ball contains 0 prints as 0
    let rad = b.rad().to_f64();
    if re.abs() <= rad {
        re = 0.0;
    }
    if im.abs() <= rad {
        im = 0.0;
    }
    let (re, im) = (sig_digits(re, 12), sig_digits(im, 12));
    let im = match im.as_str() {
        "1" => String::new(),
        "-1" => "-".into(),
        _ => im,
    };
    match (re.as_str(), im.as_str()) {
        (_, "0") => re,
        ("0", _) => format!("{im}i"),
        _ if im.starts_with('-') => format!("{re} - {}i", &im[1..]),
        _ => format!("{re} + {im}i"),
    }
}

fn value_json(a: &AlgebraicNumber, prec: u32) -> Result<Value> {
    Ok(json!({
        "minpoly": a.minpoly().to_string(),
        "degree": a.degree(),
        "box": a.isolating_box(),
        "approx": ball_json(&a.enclosure(prec)?),
    }))
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("kernel types serialize")
}

pub fn minpoly(value: &str, s: Settings) -> Result<Report> {
    let a = parse_value(value)?;
    let mut r = Report::new(value_json(&a, s.prec)?, &["minpoly", "degree", "approx"]);
    r.row(vec![a.minpoly().to_string(), a.degree().to_string(), ball_text(&a.enclosure(s.prec)?)]);
    Ok(r)
}

pub fn arith(op: ArithOp, a: &str, b: &str, s: Settings) -> Result<Report> {
    let (x, y) = (parse_value(a)?, parse_value(b)?);
    let z = qbar_arith(op, &x, &y)?;
    let name = format!("{op:?}").to_lowercase();
    let json = json!({
        "op": name,
        "a": value_json(&x, s.prec)?,
        "b": value_json(&y, s.prec)?,
        "result": value_json(&z, s.prec)?,
    });
    let mut r = Report::new(json, &["", "minpoly", "approx"]);
    for (label, v) in [("a", &x), ("b", &y), ("result", &z)] {
        r.row(vec![label.into(), v.minpoly().to_string(), ball_text(&v.enclosure(s.prec)?)]);
    }
    Ok(r)
}

pub fn conjugate_set(value: &str, s: Settings) -> Result<Report> {
    let a = parse_value(value)?;
    let cs = conjugates(&a)?;
    let list: Vec<Value> = cs.iter().map(|c| value_json(c, s.prec)).collect::<Result<_>>()?;
    let mut r = Report::new(json!({"minpoly": a.minpoly().to_string(), "conjugates": list}), &["#", "approx"]);
    for (i, c) in cs.iter().enumerate() {
        r.row(vec![i.to_string(), ball_text(&c.enclosure(s.prec)?)]);
    }
    Ok(r)
}

pub fn norm_of(gen: &str, elem: &str, s: Settings) -> Result<Report> {
    let k = NumberField::from_generator(parse_value(gen)?, vec![1])?;
    let rep: RatPoly = elem.parse()?;
    let a = k.element(rep);
    let n = norm(&a)?;
    let mut closed = norm_closed_form(&a)?;
    // test hook: corrupt one route so the cross-check below has something to catch
    if std::env::var("LWCERT_FAULT").as_deref() == Ok("consistency") {
        closed += Rational::from_integer(1.into());
    }
    let mut prod = ComplexBall::one();
    for e in k.embeddings() {
        prod = prod.mul(&apply_embedding(&e, &a, s.prec)?, s.prec);
    }
    if n != closed || !prod.contains_point(&n, &Rational::from_integer(0.into())) {
        return Err(Error::Consistency(format!(
            "norm routes disagree: resultant {n}, closed form {closed}, embedding product {}",
            ball_text(&prod)
        )));
    }
    let json = json!({
        "field": to_json(&k),
        "element": a.rep().to_string(),
        "minpoly": element_minpoly(&a)?.to_string(),
        "norm": fmt_rational(&n),
        "closed_form": fmt_rational(&closed),
        "embedding_product": ball_json(&prod),
    });
    let mut r = Report::new(json, &["route", "norm"]);
    r.row(vec!["resultant".into(), fmt_rational(&n)]);
    r.row(vec!["closed form".into(), fmt_rational(&closed)]);
    r.row(vec!["embedding product".into(), ball_text(&prod)]);
    Ok(r)
}

pub fn embeddings(gens: &str, s: Settings) -> Result<Report> {
    let gs = parse_list(gens)?;
    let (k, reps) = field_generate(&gs)?;
    let mut rows_json = Vec::new();
    let mut header = vec!["#".to_string(), "theta".to_string()];
    header.extend((1..=reps.len()).map(|i| format!("gen {i}")));
    let header: Vec<&str> = header.iter().map(String::as_str).collect();
    let mut r = Report::new(Value::Null, &header);
    for e in k.embeddings() {
        let theta = apply_embedding(&e, &k.gen(), s.prec)?;
        let images: Vec<ComplexBall> = reps.iter().map(|g| apply_embedding(&e, g, s.prec)).collect::<Result<_>>()?;
        let mut row = vec![e.index().to_string(), ball_text(&theta)];
        row.extend(images.iter().map(ball_text));
        r.row(row);
        rows_json.push(json!({
            "index": e.index(),
            "theta": ball_json(&theta),
            "generators": images.iter().map(ball_json).collect::<Vec<_>>(),
        }));
    }
    r.json = json!({
        "field": to_json(&k),
        "degree": k.degree(),
        "weights": k.weights(),
        "generators": reps.iter().map(|g| g.rep().to_string()).collect::<Vec<_>>(),
        "embeddings": rows_json,
    });
    Ok(r)
}

pub fn symcheck(set: &str, _s: Settings) -> Result<Report> {
    let xs = parse_list(set)?;
    let f = symmetric_set_polynomial(&xs)?;
    let mut r = Report::new(json!({"size": xs.len(), "polynomial": f.to_string()}), &["polynomial"]);
    r.row(vec![f.to_string()]);
    Ok(r)
}

pub fn denominator(value: &str, s: Settings) -> Result<Report> {
    let a = parse_value(value)?;
    let m = integer_multiplier(&a)?;
    let json = json!({
        "value": value_json(&a, s.prec)?,
        "algebraic_integer": is_algebraic_integer(&a),
        "d": m.d.to_string(),
        "scaled_minpoly": m.poly.to_string(),
    });
    let mut r = Report::new(json, &["d", "minpoly of d·α", "algebraic integer"]);
    r.row(vec![m.d.to_string(), m.poly.to_string(), is_algebraic_integer(&a).to_string()]);
    Ok(r)
}

pub fn primediv(value: &str, s: Settings) -> Result<Report> {
    let a = parse_value(value)?;
    let ps = prime_divisor_set(&a)?;
    let list: Vec<String> = ps.iter().map(|p| p.to_string()).collect();
    let mut r = Report::new(json!({"value": value_json(&a, s.prec)?, "primes": list}), &["prime"]);
    for p in list {
        r.row(vec![p]);
    }
    Ok(r)
}

fn sweep_report(certs: Vec<HermiteCertificate>) -> Report {
    let mut json = serde_json::Map::new();
    json.insert("certificates".into(), to_json(&certs));
    if let Some(b) = best(&certs) {
        json.insert("best".into(), to_json(b));
    }
    let mut r = Report::new(Value::Object(json), &["p", "C", "residue_ok", "B", "F0", "lower_bound"]);
    let short = |q: &Rational| {
        if q.is_integer() && fmt_rational(q).len() <= 24 {
            fmt_rational(q)
        } else {
            sig_digits(num_traits::ToPrimitive::to_f64(q).unwrap_or(f64::NAN), 7)
        }
    };
    for c in &certs {
        let crit = c.critical.to_string();
        let crit = if crit.len() > 24 { format!("{}… ({} digits)", &crit[..12], crit.trim_start_matches('-').len()) } else { crit };
        r.row(vec![
            c.p.to_string(),
            crit,
            c.residue_ok.to_string(),
            short(&c.tail),
            short(&c.f0),
            c.lower_bound.as_ref().map(short).unwrap_or_else(|| "-".into()),
        ]);
    }
    r
}

pub fn certify_pi(poly: &str, s: Settings) -> Result<Report> {
    let f: RatPoly = poly.parse()?;
    let m = subset_sum_closure_capped(&f, s.cap)?;
    Ok(sweep_report(sweep_pi(&m, s.pmax, s.prec)?))
}

pub fn certify_lw(alphas: &str, b: &str, s: Settings) -> Result<Report> {
    let xs = parse_list(alphas)?;
    let bs = parse_int_list(b)?;
    if bs.len() != xs.len() {
        return Err(Error::Parse(format!("{} exponents but {} coefficients", xs.len(), bs.len())));
    }
    let m = conjugate_expand_capped(&xs, &bs, s.cap)?;
    Ok(sweep_report(sweep_lw(&m, s.pmax, s.prec)?))
}

pub fn reduce_qbar(c: &str, alphas: &str, s: Settings) -> Result<Report> {
    let cs = parse_list(c)?;
    let xs = parse_list(alphas)?;
    if cs.len() != xs.len() {
        return Err(Error::Parse(format!("{} coefficients but {} exponents", cs.len(), xs.len())));
    }
    let red = qbar_reduce_capped(&cs, &xs, s.cap)?;
    let mut r = Report::new(to_json(&red), &["coefficient", "exponent minpoly", "exponent"]);
    for (q, g) in red.coefficients.iter().zip(&red.exponents) {
        r.row(vec![fmt_rational(q), g.minpoly().to_string(), ball_text(&g.enclosure(s.prec)?)]);
    }
    Ok(r)
}
