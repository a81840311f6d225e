//! The normal closure of a finite set of algebraic numbers, with each
//! embedding realized as an automorphism acting on field elements.
//!
//! The closure is generated by whole conjugate orbits, so every embedding
//! permutes the generators. The permutation is read off numerically (a value
//! ball meets exactly one conjugate's ball), and `σ(θ)` is then the same
//! integer combination of permuted generators that `θ` is of the originals.

use crate::error::{consistency, Error, Result};
use crate::exact::poly::RatPoly;
use crate::fields::{apply_embedding, field_generate, FieldElement, NumberField};
use crate::numerics::roots::PREC_CAP;
use crate::qbar::{conjugates, same_value, AlgebraicNumber};

#[derive(Clone, Debug)]
pub struct NormalClosure {
    pub field: NumberField,
    /// Union of the conjugate orbits of the irrational seeds.
    pub gens: Vec<AlgebraicNumber>,
    pub reps: Vec<FieldElement>,
    /// `images[s][g]`: index of `σ_s(gens[g])`.
    images: Vec<Vec<usize>>,
    /// `σ_s(θ)` in the power basis.
    theta_images: Vec<FieldElement>,
}

impl NormalClosure {
    pub fn new(seeds: &[AlgebraicNumber]) -> Result<Self> {
        let mut gens: Vec<AlgebraicNumber> = Vec::new();
        for a in seeds {
            if a.is_rational() || gens.iter().any(|g| g.minpoly() == a.minpoly()) {
                continue;
            }
            gens.extend(conjugates(a)?);
        }
        if gens.is_empty() {
            let field = NumberField::rationals();
            return Ok(NormalClosure {
                theta_images: vec![field.zero()],
                images: vec![Vec::new()],
                field,
                gens,
                reps: Vec::new(),
            });
        }
        let (field, reps) = field_generate(&gens)?;
        let embeddings = field.embeddings();
        let mut images = Vec::with_capacity(embeddings.len());
        for s in &embeddings {
            let mut row = Vec::with_capacity(gens.len());
            for (g, r) in reps.iter().enumerate() {
                let orbit: Vec<usize> = (0..gens.len()).filter(|&o| gens[o].minpoly() == gens[g].minpoly()).collect();
                row.push(identify(&gens, &orbit, |prec| apply_embedding(s, r, prec))?);
            }
            let mut seen = row.clone();
            seen.sort_unstable();
            seen.dedup();
            if seen.len() != row.len() {
                return consistency("an embedding does not permute the generators");
            }
            images.push(row);
        }
        let mut theta_images = Vec::with_capacity(images.len());
        for row in &images {
            let mut t = field.zero();
            for (g, w) in field.weights().iter().enumerate() {
                if *w != 0 {
                    t = t.add(&reps[row[g]].scale(&crate::exact::rational::int(*w)))?;
                }
            }
            if !eval_in(field.h(), &t)?.is_zero() {
                return consistency("the image of the primitive element is not a root of its polynomial");
            }
            theta_images.push(t);
        }
        if theta_images[0] != field.gen() {
            return consistency("the first embedding is not the identity");
        }
        Ok(NormalClosure { field, gens, reps, images, theta_images })
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// `a` as an element of the closure.
    pub fn element_of(&self, a: &AlgebraicNumber) -> Result<FieldElement> {
        if let Some(q) = a.as_rational() {
            return Ok(self.field.from_rational(q));
        }
        Ok(self.reps[self.index_of(a)?].clone())
    }

    fn index_of(&self, a: &AlgebraicNumber) -> Result<usize> {
        for (g, x) in self.gens.iter().enumerate() {
            if same_value(x, a)? {
                return Ok(g);
            }
        }
        Err(Error::Consistency("a seed is missing from the closure".into()))
    }

    /// `σ_s(a)` for a seed `a`, as an algebraic number.
    pub fn image_of_seed(&self, s: usize, a: &AlgebraicNumber) -> Result<AlgebraicNumber> {
        if a.is_rational() {
            return Ok(a.clone());
        }
        Ok(self.gens[self.images[s][self.index_of(a)?]].clone())
    }

    /// `σ_s(a)`, exactly.
    pub fn apply(&self, s: usize, a: &FieldElement) -> Result<FieldElement> {
        eval_in(a.rep(), &self.theta_images[s])
    }
}

/// `f(x)` for a rational polynomial and a field element.
pub(crate) fn eval_in(f: &RatPoly, x: &FieldElement) -> Result<FieldElement> {
    let field = x.field();
    let mut acc = field.zero();
    for c in f.coeffs().iter().rev() {
        acc = acc.mul(x)?.add(&field.from_rational(c.clone()))?;
    }
    Ok(acc)
}

/// The unique member of `orbit` whose enclosure meets `value`. A member whose
/// ball misses the value ball cannot be the value, so one survivor decides.
fn identify(
    gens: &[AlgebraicNumber],
    orbit: &[usize],
    mut value: impl FnMut(u32) -> Result<crate::numerics::ball::ComplexBall>,
) -> Result<usize> {
    let mut prec = 64u32;
    loop {
        let v = value(prec)?;
        let mut hits = Vec::new();
        for &o in orbit {
            if gens[o].enclosure(prec)?.overlaps(&v) {
                hits.push(o);
            }
        }
        match hits.len() {
            0 => return consistency("an embedded generator matches none of its conjugates"),
            1 => return Ok(hits[0]),
            _ if prec >= PREC_CAP => {
                return Err(Error::Precision { bits: prec, detail: "conjugates not separated".into() })
            }
            _ => prec *= 2,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn root(h: &str, re: i64, im: i64) -> AlgebraicNumber {
        AlgebraicNumber::near(&h.parse().unwrap(), &rat(re, 100), &rat(im, 100), &rat(1, 20)).unwrap()
    }

    #[test]
    fn automorphisms_of_cube_root_closure() {
        let c = root("x^3 - 2", 126, 0);
        let nc = NormalClosure::new(&[c.clone()]).unwrap();
        assert_eq!(nc.degree(), 6);
        let a = nc.element_of(&c).unwrap();
        for s in 0..6 {
            let img = nc.apply(s, &a).unwrap();
            // σ(α)^3 = 2 and σ(α) is the conjugate the table names
            assert_eq!(img.pow(3), nc.field.from_rational(int(2)));
            let named = nc.image_of_seed(s, &c).unwrap();
            assert_eq!(img, nc.element_of(&named).unwrap());
        }
    }

    #[test]
    fn rational_seeds() {
        let nc = NormalClosure::new(&[AlgebraicNumber::from_i64(3)]).unwrap();
        assert_eq!(nc.degree(), 1);
        assert_eq!(nc.element_of(&AlgebraicNumber::from_i64(3)).unwrap().fixed_rational(), Some(int(3)));
    }
}
