//! From a finite multiset of algebraic numbers to the polynomial having
//! exactly those roots, when its coefficients are rational.

use super::{field_generate, fixed_rational};
use crate::error::{domain, Error, Result};
use crate::exact::poly::RatPoly;
use crate::qbar::AlgebraicNumber;

/// `Π (x - γ)` over `set`, expanded in a common number field. Fails with a
/// closure error naming the lowest non-rational coefficient.
pub fn symmetric_set_polynomial(set: &[AlgebraicNumber]) -> Result<RatPoly> {
    if set.is_empty() {
        return domain("the set must be nonempty");
    }
    let (field, reps) = field_generate(set)?;
    // coefficients low to high, as field elements
    let mut prod = vec![field.one()];
    for r in &reps {
        let mut next = vec![field.zero(); prod.len() + 1];
        for (i, c) in prod.iter().enumerate() {
            next[i + 1] = next[i + 1].add(c)?;
            next[i] = next[i].sub(&c.mul(r)?)?;
        }
        prod = next;
    }
    let mut out = Vec::with_capacity(prod.len());
    for (i, c) in prod.iter().enumerate() {
        match fixed_rational(c) {
            Some(q) => out.push(q),
            None => return Err(Error::Closure { index: i }),
        }
    }
    Ok(RatPoly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::qbar::conjugates;

    #[test]
    fn examples() {
        assert_eq!(symmetric_set_polynomial(&[AlgebraicNumber::zero()]).unwrap(), RatPoly::x());
        let i = AlgebraicNumber::i();
        assert_eq!(symmetric_set_polynomial(&[i.clone(), i.conj()]).unwrap(), RatPoly::from_i64(&[1, 0, 1]));
        let r2 = AlgebraicNumber::near(&RatPoly::from_i64(&[-2, 0, 1]), &rat(141, 100), &int(0), &rat(1, 10)).unwrap();
        assert_eq!(symmetric_set_polynomial(&[r2.clone()]), Err(Error::Closure { index: 0 }));
        let c = AlgebraicNumber::near(&RatPoly::from_i64(&[-2, 0, 0, 1]), &rat(126, 100), &int(0), &rat(1, 10)).unwrap();
        assert_eq!(&symmetric_set_polynomial(&conjugates(&c).unwrap()).unwrap(), c.minpoly());
        // a repeated root squares the polynomial
        assert_eq!(symmetric_set_polynomial(&[r2.clone(), r2.neg(), r2]), Err(Error::Closure { index: 0 }));
    }
}
