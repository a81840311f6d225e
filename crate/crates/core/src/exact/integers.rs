//! Integer primality and factorization at desk scale: trial division, then
//! Pollard-Brent rho with a fixed Miller-Rabin base set.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

const MR_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_prime_u64(n: u64) -> bool {
    is_probable_prime(&BigInt::from(n))
}

/// Deterministic for n < 3.3·10^24; a strong probable-prime test beyond.
pub fn is_probable_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    for &p in &MR_BASES {
        let bp = BigInt::from(p);
        if *n == bp {
            return true;
        }
        if (n % &bp).is_zero() {
            return false;
        }
    }
    let one = BigInt::one();
    let nm1 = n - &one;
    let s = nm1.trailing_zeros().unwrap_or(0);
    let d = &nm1 >> s;
    'outer: for &a in &MR_BASES {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == nm1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Vec<u64> {
    if limit < 2 {
        return Vec::new();
    }
    let n = limit as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (0..=n).filter(|&k| sieve[k]).map(|k| k as u64).collect()
}

/// Distinct prime divisors of `|n|`, ascending. Empty for 0 and ±1.
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut m = n.abs();
    if m.is_zero() {
        return out;
    }
    for p in primes_up_to(10_000) {
        let bp = BigInt::from(p);
        if &bp * &bp > m {
            break;
        }
        if (&m % &bp).is_zero() {
            out.push(bp.clone());
            while (&m % &bp).is_zero() {
                m /= &bp;
            }
        }
    }
    if m > BigInt::one() {
        let mut stack = vec![m];
        while let Some(k) = stack.pop() {
            if k.is_one() {
                continue;
            }
            if is_probable_prime(&k) {
                out.push(k);
                continue;
            }
            let d = pollard_brent(&k);
            let rest = &k / &d;
            stack.push(d);
            stack.push(rest);
        }
    }
    out.sort();
    out.dedup();
    out
}

/// p-adic valuation of a nonzero integer.
pub fn valuation(n: &BigInt, p: &BigInt) -> u32 {
    let mut v = 0;
    let mut m = n.abs();
    while !m.is_zero() && (&m % p).is_zero() {
        m /= p;
        v += 1;
    }
    v
}

fn pollard_brent(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    for c in 1u64.. {
        let c = BigInt::from(c);
        let f = |x: &BigInt| (x * x + &c) % n;
        let (mut x, mut y, mut d) = (BigInt::from(2), BigInt::from(2), one.clone());
        let mut steps = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
            steps += 1;
            if steps > 1_000_000 {
                break;
            }
        }
        if d != *n && !d.is_one() {
            return d;
        }
    }
    unreachable!()
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `n mod p` for a machine prime, in `0..p`.
pub fn mod_u64(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_divisors() {
        assert_eq!(primes_up_to(31), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]);
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(561));
        let n = BigInt::from(2u64 * 3 * 3 * 1_000_003);
        let ds: Vec<u64> = prime_divisors(&n).iter().map(|d| d.to_u64().unwrap()).collect();
        assert_eq!(ds, vec![2, 3, 1_000_003]);
        let big = BigInt::from(1_000_000_007u64) * BigInt::from(998_244_353u64);
        assert_eq!(prime_divisors(&big).len(), 2);
        assert!(prime_divisors(&BigInt::from(-1)).is_empty());
        assert_eq!(valuation(&BigInt::from(48), &BigInt::from(2)), 4);
        assert_eq!(factorial(5), BigInt::from(120));
    }
}
