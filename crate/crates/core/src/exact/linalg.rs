//! Exact Gaussian elimination over Q for the small dense systems that show up
//! in primitive-element representations and resultant cross-checks.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::Rational;

pub type Matrix = Vec<Vec<Rational>>;

/// Rows scaled to integers; returns the product of the scales.
fn integer_rows(m: &Matrix) -> (Vec<Vec<BigInt>>, BigInt) {
    let mut scale = BigInt::one();
    let rows = m
        .iter()
        .map(|row| {
            let d = row.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            scale *= &d;
            row.iter().map(|q| q.numer() * (&d / q.denom())).collect()
        })
        .collect();
    (rows, scale)
}

/// Fraction-free elimination on the first `n` columns. Returns the sign of
/// the row permutation, or `None` when the leading block is singular.
fn bareiss(m: &mut [Vec<BigInt>], n: usize) -> Option<i32> {
    let width = m.first().map_or(0, |r| r.len());
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        if pivot != k {
            m.swap(pivot, k);
            sign = -sign;
        }
        for i in (k + 1)..n {
            for j in (k + 1)..width {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    Some(sign)
}

pub fn determinant(m: Matrix) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    let (mut rows, scale) = integer_rows(&m);
    match bareiss(&mut rows, n) {
        None => Rational::zero(),
        Some(sign) => Rational::new(&rows[n - 1][n - 1] * BigInt::from(sign), scale),
    }
}

/// Solve `a · x = b` for square nonsingular `a`; `None` if singular.
pub fn solve(a: &Matrix, b: &[Rational]) -> Option<Vec<Rational>> {
    let n = a.len();
    let aug: Matrix = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let (mut m, _) = integer_rows(&aug);
    bareiss(&mut m, n)?;
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(m[i][n].clone());
        for j in (i + 1)..n {
            acc -= Rational::from_integer(m[i][j].clone()) * &x[j];
        }
        x[i] = acc / Rational::from_integer(m[i][i].clone());
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    #[test]
    fn det_and_solve() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        assert_eq!(determinant(a.clone()), int(5));
        let x = solve(&a, &[int(1), int(2)]).unwrap();
        assert_eq!(x, vec![rat(1, 5), rat(3, 5)]);
        let singular = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(determinant(singular.clone()), int(0));
        assert!(solve(&singular, &[int(0), int(1)]).is_none());
    }
}
