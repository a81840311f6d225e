//! From algebraic coefficients to rational ones: `V = ∏_s Σ_i σ_s(c_i) e^{α_i}`
//! over the embeddings of the field generated by the orbits of the `c_i`.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::galois::NormalClosure;
use super::pi::DEFAULT_CAP;
use crate::error::{consistency, domain, Error, Result};
use crate::exact::rational::Rational;
use crate::fields::{element_value, field_generate, norm, FieldElement, NumberField};
use crate::qbar::{integer_multiplier, lex_cmp, same_value, AlgebraicNumber};

#[derive(Clone, Debug)]
pub struct QbarReduction {
    /// Positive integer the `c_i` were multiplied by to make them integral.
    pub scale: BigInt,
    /// Degree `m` of the field generated by the orbits.
    pub degree: usize,
    /// Nonzero rational `c*_j`, paired with `exponents`.
    pub coefficients: Vec<Rational>,
    /// Distinct `γ_j`, in increasing lexicographic order.
    pub exponents: Vec<AlgebraicNumber>,
}

impl serde::Serialize for QbarReduction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QbarReduction", 4)?;
        st.serialize_field("scale", &self.scale.to_string())?;
        st.serialize_field("degree", &self.degree)?;
        let cs: Vec<String> = self.coefficients.iter().map(crate::exact::rational::fmt_rational).collect();
        st.serialize_field("coefficients", &cs)?;
        st.serialize_field("exponents", &self.exponents)?;
        st.end()
    }
}

pub fn qbar_reduce(c: &[AlgebraicNumber], alphas: &[AlgebraicNumber]) -> Result<QbarReduction> {
    qbar_reduce_capped(c, alphas, DEFAULT_CAP)
}

pub fn qbar_reduce_capped(c: &[AlgebraicNumber], alphas: &[AlgebraicNumber], cap: u128) -> Result<QbarReduction> {
    let n = c.len();
    if n == 0 || alphas.len() != n {
        return domain("need as many coefficients as exponents, at least one");
    }
    if c.iter().any(|x| x.is_zero()) {
        return domain("coefficients must be nonzero");
    }
    for i in 0..n {
        for j in 0..i {
            if same_value(&alphas[i], &alphas[j])? {
                return domain(format!("exponents {} and {} coincide", j + 1, i + 1));
            }
        }
    }
    let mut scale = BigInt::one();
    for x in c {
        scale = scale.lcm(&integer_multiplier(x)?.d);
    }
    let sq = Rational::from_integer(scale.clone());
    let c: Vec<AlgebraicNumber> = c.iter().map(|x| x.mul_rational(&sq)).collect();
    let closure = NormalClosure::new(&c)?;
    let m = closure.degree();
    let terms = (n as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if terms > cap {
        return Err(Error::Size { terms, cap });
    }
    let field = closure.field.clone();
    let mut img: Vec<Vec<FieldElement>> = Vec::with_capacity(m);
    for s in 0..m {
        img.push(c.iter().map(|x| closure.element_of(&closure.image_of_seed(s, x)?)).collect::<Result<_>>()?);
    }
    // tuples grouped by how often each α_i occurs; the exponent depends only on that
    let mut by_count: BTreeMap<Vec<u32>, FieldElement> = BTreeMap::new();
    by_count.insert(vec![0; n], field.one());
    for row in &img {
        let mut next: BTreeMap<Vec<u32>, FieldElement> = BTreeMap::new();
        for (cnt, v) in &by_count {
            for (i, ci) in row.iter().enumerate() {
                let mut cnt2 = cnt.clone();
                cnt2[i] += 1;
                let add = v.mul(ci)?;
                match next.get_mut(&cnt2) {
                    Some(acc) => *acc = acc.add(&add)?,
                    None => {
                        next.insert(cnt2, add);
                    }
                }
            }
        }
        by_count = next;
    }
    // exact exponents in the field of the α
    let (ka, reps) = if alphas.iter().all(|a| a.is_rational()) {
        let k = NumberField::rationals();
        let r = alphas.iter().map(|a| k.from_rational(a.as_rational().unwrap())).collect();
        (k, r)
    } else {
        field_generate(alphas)?
    };
    let mut grouped: BTreeMap<Vec<Rational>, (FieldElement, FieldElement)> = BTreeMap::new();
    for (cnt, v) in by_count {
        let mut g = ka.zero();
        for (i, k) in cnt.iter().enumerate() {
            g = g.add(&reps[i].scale(&Rational::from_integer(BigInt::from(*k))))?;
        }
        match grouped.get_mut(g.rep().coeffs()) {
            Some((_, acc)) => *acc = acc.add(&v)?,
            None => {
                grouped.insert(g.rep().coeffs().to_vec(), (g, v));
            }
        }
    }
    // the coefficient at m α_max is the norm of its c
    let mut top = 0;
    for i in 1..n {
        if lex_cmp(&alphas[i], &alphas[top])? == Ordering::Greater {
            top = i;
        }
    }
    let top_exp = reps[top].scale(&Rational::from_integer(BigInt::from(m)));
    let lead = match grouped.get(top_exp.rep().coeffs()) {
        Some((_, v)) => v.fixed_rational(),
        None => None,
    };
    let top_norm = norm(&closure.element_of(&c[top])?)?;
    if lead.as_ref() != Some(&top_norm) || top_norm.is_zero() {
        return consistency("the leading coefficient is not the norm of its c");
    }
    let mut out: Vec<(AlgebraicNumber, Rational)> = Vec::new();
    for (g, v) in grouped.into_values() {
        let Some(q) = v.fixed_rational() else {
            return consistency("a reduced coefficient is not rational");
        };
        if !q.is_zero() {
            out.push((element_value(&g)?, q));
        }
    }
    let mut err = None;
    out.sort_by(|x, y| {
        lex_cmp(&x.0, &y.0).unwrap_or_else(|e| {
            err = Some(e);
            Ordering::Equal
        })
    });
    if let Some(e) = err {
        return Err(e);
    }
    Ok(QbarReduction {
        scale,
        degree: m,
        coefficients: out.iter().map(|x| x.1.clone()).collect(),
        exponents: out.into_iter().map(|x| x.0).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn sqrt2() -> AlgebraicNumber {
        AlgebraicNumber::near(&"x^2 - 2".parse().unwrap(), &rat(141, 100), &int(0), &rat(1, 20)).unwrap()
    }

    #[test]
    fn examples() {
        let r = qbar_reduce(&[AlgebraicNumber::from_i64(2), AlgebraicNumber::from_i64(3)], &[AlgebraicNumber::zero(), AlgebraicNumber::one()]).unwrap();
        assert_eq!((r.degree, r.coefficients), (1, vec![int(2), int(3)]));
        let r = qbar_reduce(&[sqrt2()], &[AlgebraicNumber::zero()]).unwrap();
        assert_eq!(r.coefficients, vec![int(-2)]);
        assert!(r.exponents[0].is_zero());
        let r = qbar_reduce(&[sqrt2(), sqrt2().neg()], &[AlgebraicNumber::zero(), AlgebraicNumber::one()]).unwrap();
        assert_eq!(r.coefficients, vec![int(-2), int(4), int(-2)]);
        let ex: Vec<Rational> = r.exponents.iter().map(|e| e.as_rational().unwrap()).collect();
        assert_eq!(ex, vec![int(0), int(1), int(2)]);
        // a half is cleared first: (1/2) e^0 becomes 1
        let r = qbar_reduce(&[AlgebraicNumber::from_rational(rat(1, 2))], &[AlgebraicNumber::zero()]).unwrap();
        assert_eq!((r.scale, r.coefficients), (BigInt::from(2), vec![int(1)]));
    }
}
