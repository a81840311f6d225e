//! Integer-matrix annihilators for sums and products of algebraic integers.
//!
//! On the basis `α^i β^j` (`i < deg f`, `j < deg g`) multiplication by `αβ`
//! and by `α + β` act through integer matrices built from the two companion
//! matrices, so `det(xI - A)` is a monic integer polynomial vanishing at the
//! combination. This is independent of the resultant route.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ArithOp;
use crate::error::{domain, Result};
use crate::exact::linalg::{determinant, Matrix};
use crate::exact::poly::IntPoly;
use crate::exact::rational::Rational;
use crate::exact::resultant::interpolate_at_naturals;

/// Companion matrix of monic `f`: column `j` holds `x · x^j mod f`.
pub fn companion(f: &IntPoly) -> Result<Vec<Vec<BigInt>>> {
    let n = f.deg();
    if n == 0 || !f.lc().is_one() {
        return domain("companion matrices need a monic nonconstant polynomial");
    }
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for j in 0..n {
        if j + 1 < n {
            m[j + 1][j] = BigInt::one();
        } else {
            for (i, row) in m.iter_mut().enumerate() {
                row[j] = -f.coeff(i);
            }
        }
    }
    Ok(m)
}

fn kron(a: &[Vec<BigInt>], b: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![BigInt::zero(); n * m]; n * m];
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = &a[i][j] * &b[k][l];
                }
            }
        }
    }
    out
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect()).collect()
}

/// The integer matrix of multiplication by `α + β` or `αβ`.
pub fn combination_matrix(op: ArithOp, f: &IntPoly, g: &IntPoly) -> Result<Vec<Vec<BigInt>>> {
    let (a, b) = (companion(f)?, companion(g)?);
    match op {
        ArithOp::Mul => Ok(kron(&a, &b)),
        ArithOp::Add => {
            let x = kron(&a, &identity(b.len()));
            let y = kron(&identity(a.len()), &b);
            Ok(x.iter().zip(&y).map(|(r, s)| r.iter().zip(s).map(|(u, v)| u + v).collect()).collect())
        }
        _ => domain("the matrix oracle covers sums and products"),
    }
}

/// `det(xI - A)` by evaluation at `0..=k` and interpolation.
pub fn char_poly(a: &[Vec<BigInt>]) -> IntPoly {
    let k = a.len();
    let mut values = Vec::with_capacity(k + 1);
    for x in 0..=k {
        let xq = Rational::from_integer(BigInt::from(x));
        let m: Matrix = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        let e = -Rational::from_integer(a[i][j].clone());
                        if i == j {
                            e + &xq
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        values.push(determinant(m));
    }
    interpolate_at_naturals(&values).to_int_poly().expect("integer matrix has an integer characteristic polynomial")
}

/// Monic integer annihilator of `α op β` for algebraic integers with minimal
/// polynomials `f` and `g`.
pub fn matrix_annihilator(op: ArithOp, f: &IntPoly, g: &IntPoly) -> Result<IntPoly> {
    Ok(char_poly(&combination_matrix(op, f, g)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sqrt_two_and_three() {
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let g = IntPoly::from_i64(&[-3, 0, 1]);
        // (x^2 - 6)^2
        assert_eq!(matrix_annihilator(ArithOp::Mul, &f, &g).unwrap(), IntPoly::from_i64(&[36, 0, -12, 0, 1]));
        assert_eq!(matrix_annihilator(ArithOp::Add, &f, &g).unwrap(), IntPoly::from_i64(&[1, 0, -10, 0, 1]));
        assert!(companion(&IntPoly::from_i64(&[1, 2])).is_err());
    }
}
