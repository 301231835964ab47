//! Factorization of arbitrary-size integers. Pieces that fit in `u128` are
//! handed to the Montgomery code; larger ones use plain big-integer rho.

use alloc::vec::Vec;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::factor::{factorize_with_effort, is_prime};
use super::small_primes;

const BASES: [u32; 20] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71];

/// Miller–Rabin with fixed bases; exact below `3.3·10^24`.
pub fn is_prime_big(n: &BigUint) -> bool {
    if let Some(small) = n.to_u128() {
        return is_prime(small);
    }
    if n.is_even() {
        return false;
    }
    let one = BigUint::one();
    let n1 = n - &one;
    let s = n1.trailing_zeros().expect("n > 1");
    let d = &n1 >> s;
    'bases: for &a in &BASES {
        let mut x = BigUint::from(a).modpow(&d, n);
        if x == one || x == n1 {
            continue;
        }
        for _ in 1..s {
            x = &x * &x % n;
            if x == n1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

fn rho_big(n: &BigUint, budget: &mut Option<u64>) -> Option<BigUint> {
    const BATCH: u64 = 64;
    for c in 1u32.. {
        let c = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut x;
        let mut ys;
        let mut q = BigUint::one();
        let mut g;
        let mut r = 1u64;
        loop {
            x = y.clone();
            for _ in 0..r {
                y = f(&y);
            }
            let mut k = 0;
            loop {
                ys = y.clone();
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = q * diff % n;
                }
                if let Some(b) = budget {
                    if *b < steps {
                        return None;
                    }
                    *b -= steps;
                }
                g = q.gcd(n);
                k += steps;
                if k >= r || !g.is_one() {
                    break;
                }
            }
            r *= 2;
            if !g.is_one() {
                break;
            }
        }
        if &g == n {
            loop {
                ys = f(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if &g != n {
            return Some(g);
        }
    }
    unreachable!()
}

fn split(out: &mut Vec<BigUint>, n: BigUint, budget: &mut Option<u64>) -> bool {
    if n.is_one() {
        return true;
    }
    if let Some(small) = n.to_u128() {
        let Some(f) = factorize_with_effort(small, *budget) else {
            return false;
        };
        for (p, e) in f.0 {
            out.extend(core::iter::repeat_n(BigUint::from(p), e as usize));
        }
        return true;
    }
    if is_prime_big(&n) {
        out.push(n);
        return true;
    }
    let Some(d) = rho_big(&n, budget) else {
        return false;
    };
    let rest = &n / &d;
    split(out, d, budget) && split(out, rest, budget)
}

/// Factorization of `n >= 1` as sorted `(p, e)` pairs, or `None` if
/// `effort` rho iterations per split are not enough.
pub fn factorize_big(n: &BigUint, effort: Option<u64>) -> Option<Vec<(BigUint, u32)>> {
    assert!(!n.is_zero(), "factorize needs n >= 1");
    let mut n = n.clone();
    let mut primes = Vec::new();
    if n.to_u128().is_none() {
        for &p in small_primes() {
            let p = u32::from(p);
            while (&n % p).is_zero() {
                primes.push(BigUint::from(p));
                n /= p;
            }
        }
    }
    let mut budget = effort;
    if !split(&mut primes, n, &mut budget) {
        return None;
    }
    primes.sort();
    let mut out: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Some(out)
}

/// `f(n)` for arbitrary `n >= 1`, or `None` if factoring exceeds `effort`.
pub fn f_sign_big(n: &BigUint, effort: Option<u64>) -> Option<i8> {
    let f = factorize_big(n, effort)?;
    let mut sign = 1i8;
    for (p, e) in f {
        if (&p % 4u32) == BigUint::from(3u32) && (e / 2) % 2 == 1 {
            sign = -sign;
        }
    }
    Some(sign)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_primality() {
        let m127: BigUint = (BigUint::one() << 127) - 1u32;
        assert!(is_prime_big(&m127));
        let m521: BigUint = (BigUint::one() << 521) - 1u32;
        assert!(is_prime_big(&m521));
        assert!(!is_prime_big(&(&m127 * &m127)));
    }

    #[test]
    fn big_factorization() {
        let p = BigUint::from(1_000_000_007u64);
        let q: BigUint = (BigUint::one() << 127) - 1u32;
        let n = &p * &p * &q * 9u32;
        let f = factorize_big(&n, None).unwrap();
        assert_eq!(
            f,
            alloc::vec![(BigUint::from(3u32), 2), (p.clone(), 2), (q.clone(), 1)]
        );
        // 3² contributes -1, p ≡ 3 (mod 4) squared contributes -1.
        assert_eq!(f_sign_big(&n, None), Some(1));
        let r = BigUint::from(1_000_000_009u64) * BigUint::from(998_244_353u64) * &q;
        assert_eq!(factorize_big(&r, None).unwrap().len(), 3);
    }
}
