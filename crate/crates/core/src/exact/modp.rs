//! Dense polynomials over F_p for a machine-word prime, and Berlekamp's
//! splitting algorithm. Only what integer factorization needs.

pub type Zp = Vec<u64>;

#[inline]
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub fn trim(mut a: Zp) -> Zp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn deg(a: &Zp) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn add(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| (a.get(i).copied().unwrap_or(0) + p - b.get(i).copied().unwrap_or(0)) % p).collect())
}

pub fn mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(x, y, p)) % p;
        }
    }
    trim(out)
}

pub fn scale(a: &Zp, k: u64, p: u64) -> Zp {
    trim(a.iter().map(|&c| mulm(c, k, p)).collect())
}

pub fn monic(a: &Zp, p: u64) -> Zp {
    match a.last() {
        None => Vec::new(),
        Some(&lc) => scale(a, inv_mod(lc, p), p),
    }
}

pub fn div_rem(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let db = deg(b).expect("division by zero polynomial mod p");
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let inv = inv_mod(b[db], p);
    let mut q = vec![0u64; r.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], inv, p);
        q[k] = c;
        if c == 0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            r[k + j] = (r[k + j] + p - mulm(c, bj, p)) % p;
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub fn rem(a: &Zp, b: &Zp, p: u64) -> Zp {
    div_rem(a, b, p).1
}

pub fn gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

/// `(g, s, t)` with `s·a + t·b = g`, `g` monic.
pub fn ext_gcd(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        let t2 = sub(&t0, &mul(&q, &t1, p), p);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    let inv = inv_mod(*r0.last().expect("nonzero gcd"), p);
    (scale(&r0, inv, p), scale(&s0, inv, p), scale(&t0, inv, p))
}

pub fn derivative(a: &Zp, p: u64) -> Zp {
    trim(a.iter().enumerate().skip(1).map(|(i, &c)| mulm(c, i as u64 % p, p)).collect())
}

pub fn pow_rem(base: &Zp, mut e: u64, modulus: &Zp, p: u64) -> Zp {
    let mut result = vec![1u64];
    let mut b = rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            result = rem(&mul(&result, &b, p), modulus, p);
        }
        b = rem(&mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    result
}

/// Nullspace basis of the square matrix `m` (row-major) over F_p, acting on
/// column vectors.
fn nullspace(mut m: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let n = m.len();
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    let mut is_pivot = vec![false; n];
    for col in 0..n {
        let Some(r) = (row..n).find(|&r| m[r][col] != 0) else { continue };
        m.swap(r, row);
        let inv = inv_mod(m[row][col], p);
        for c in 0..n {
            m[row][c] = mulm(m[row][c], inv, p);
        }
        for r2 in 0..n {
            if r2 != row && m[r2][col] != 0 {
                let f = m[r2][col];
                for c in 0..n {
                    m[r2][c] = (m[r2][c] + p - mulm(f, m[row][c], p)) % p;
                }
            }
        }
        is_pivot[col] = true;
        pivot_col_of_row.push(col);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = (p - m[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Berlekamp kernel for monic squarefree `f` of degree n: the vectors `v`
/// with `v(x)^p ≡ v(x) mod f`. Its dimension is the number of irreducible
/// factors.
pub fn berlekamp_kernel(f: &Zp, p: u64) -> Vec<Zp> {
    let n = deg(f).expect("nonzero");
    let xp = pow_rem(&vec![0, 1], p, f, p);
    // rows: x^{ip} mod f
    let mut q = vec![vec![0u64; n]; n];
    let mut cur = vec![1u64];
    for row in q.iter_mut() {
        for (j, &c) in cur.iter().enumerate() {
            row[j] = c;
        }
        cur = rem(&mul(&cur, &xp, p), f, p);
    }
    // (Q - I)^T v = 0
    let mut m = vec![vec![0u64; n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut val = q[j][i];
            if i == j {
                val = (val + p - 1) % p;
            }
            m[i][j] = val;
        }
    }
    nullspace(m, p).into_iter().map(trim).collect()
}

/// Complete factorization of a monic squarefree polynomial over F_p into
/// monic irreducibles, sorted by (degree, coefficients).
pub fn berlekamp_factor(f: &Zp, p: u64) -> Vec<Zp> {
    let kernel = berlekamp_kernel(f, p);
    let r = kernel.len();
    let mut factors = vec![monic(f, p)];
    if r > 1 {
        'outer: for v in kernel.iter().filter(|v| deg(v).is_some_and(|d| d > 0)) {
            let mut next = Vec::new();
            for u in std::mem::take(&mut factors) {
                if deg(&u) == Some(1) {
                    next.push(u);
                    continue;
                }
                let mut pending = vec![u];
                for s in 0..p {
                    let shifted = sub(v, &vec![s], p);
                    let mut still = Vec::new();
                    for w in pending {
                        let g = gcd(&w, &shifted, p);
                        let dg = deg(&g).unwrap_or(0);
                        if dg > 0 && dg < deg(&w).unwrap() {
                            let (q, _) = div_rem(&w, &g, p);
                            still.push(g);
                            still.push(monic(&q, p));
                        } else {
                            still.push(w);
                        }
                    }
                    pending = still;
                    if next.len() + pending.len() == r {
                        break;
                    }
                }
                next.extend(pending);
            }
            factors = next;
            if factors.len() == r {
                break 'outer;
            }
        }
    }
    factors.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    factors
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_over_small_fields() {
        // x^4 - 1 over F_5 splits completely
        let f = vec![4, 0, 0, 0, 1];
        let fs = berlekamp_factor(&f, 5);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1u64], |acc, g| mul(&acc, g, 5));
        assert_eq!(prod, f);
        // x^2 + 1 is irreducible over F_7
        assert_eq!(berlekamp_factor(&vec![1, 0, 1], 7), vec![vec![1, 0, 1]]);
        // x^4 + 1 splits into two quadratics over F_3
        let fs = berlekamp_factor(&vec![1, 0, 0, 0, 1], 3);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|g| g.len() == 3));
    }

    #[test]
    fn bezout_mod_p() {
        let a = vec![1, 0, 1];
        let b = vec![1, 1];
        let (g, s, t) = ext_gcd(&a, &b, 7);
        assert_eq!(g, vec![1]);
        assert_eq!(add(&mul(&s, &a, 7), &mul(&t, &b, 7), 7), vec![1]);
    }
}
