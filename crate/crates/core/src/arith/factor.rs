//! Primality and factorization for integers below `2^128`.
//!
//! Trial division by the primes below `2^16`, then Brent's variant of
//! Pollard's rho on the cofactor, with Miller–Rabin deciding primality.
//! Arithmetic modulo odd `n` is done in Montgomery form with `R = 2^128`.

use alloc::vec::Vec;

use num_integer::Integer;

use super::small_primes;

/// `a · b` as `(hi, lo)`.
#[inline]
fn mul_wide(a: u128, b: u128) -> (u128, u128) {
    let mask = u64::MAX as u128;
    let (a1, a0) = (a >> 64, a & mask);
    let (b1, b0) = (b >> 64, b & mask);
    let p00 = a0 * b0;
    let p01 = a0 * b1;
    let p10 = a1 * b0;
    let p11 = a1 * b1;
    let mid = (p00 >> 64) + (p01 & mask) + (p10 & mask);
    let lo = (p00 & mask) | (mid << 64);
    let hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    (hi, lo)
}

#[derive(Clone, Copy, Debug)]
pub(crate) struct Montgomery {
    n: u128,
    /// `-n⁻¹ mod 2^128`
    ninv: u128,
    /// `2^256 mod n`
    r2: u128,
    one: u128,
}

impl Montgomery {
    pub fn new(n: u128) -> Self {
        debug_assert!(n % 2 == 1 && n > 1);
        let mut inv = n;
        for _ in 0..7 {
            inv = inv.wrapping_mul(2u128.wrapping_sub(n.wrapping_mul(inv)));
        }
        let r = (u128::MAX % n + 1) % n;
        let mut r2 = r;
        for _ in 0..128 {
            r2 = add_mod(r2, r2, n);
        }
        Montgomery {
            n,
            ninv: inv.wrapping_neg(),
            r2,
            one: r,
        }
    }

    #[inline]
    fn redc(&self, hi: u128, lo: u128) -> u128 {
        let m = lo.wrapping_mul(self.ninv);
        let (mh, ml) = mul_wide(m, self.n);
        let (_, carry) = lo.overflowing_add(ml);
        let (t, o1) = hi.overflowing_add(mh);
        let (t, o2) = t.overflowing_add(u128::from(carry));
        if o1 || o2 || t >= self.n {
            t.wrapping_sub(self.n)
        } else {
            t
        }
    }

    #[inline]
    pub fn mul(&self, a: u128, b: u128) -> u128 {
        let (hi, lo) = mul_wide(a, b);
        self.redc(hi, lo)
    }

    pub fn enter(&self, a: u128) -> u128 {
        self.mul(a % self.n, self.r2)
    }

    #[cfg(test)]
    pub fn leave(&self, a: u128) -> u128 {
        self.redc(0, a)
    }

    pub fn add(&self, a: u128, b: u128) -> u128 {
        add_mod(a, b, self.n)
    }

    pub fn pow(&self, base: u128, mut e: u128) -> u128 {
        let mut acc = self.one;
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

#[inline]
fn add_mod(a: u128, b: u128, n: u128) -> u128 {
    let (s, o) = a.overflowing_add(b);
    if o || s >= n {
        s.wrapping_sub(n)
    } else {
        s
    }
}

/// Bases making Miller–Rabin deterministic below `3.3·10^24`.
const DETERMINISTIC_BASES: [u128; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const DETERMINISTIC_LIMIT: u128 = 3_317_044_064_679_887_385_961_981;
/// Above the deterministic range: fixed extra bases.
const EXTRA_BASES: [u128; 12] = [43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

pub fn is_prime(n: u128) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &DETERMINISTIC_BASES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mont = Montgomery::new(n);
    let d = (n - 1) >> (n - 1).trailing_zeros();
    let s = (n - 1).trailing_zeros();
    let minus_one = mont.enter(n - 1);
    let witness = |a: u128| -> bool {
        let mut x = mont.pow(mont.enter(a), d);
        if x == mont.one || x == minus_one {
            return false;
        }
        for _ in 1..s {
            x = mont.mul(x, x);
            if x == minus_one {
                return false;
            }
        }
        true
    };
    if DETERMINISTIC_BASES.iter().any(|&a| witness(a)) {
        return false;
    }
    if n >= DETERMINISTIC_LIMIT && EXTRA_BASES.iter().any(|&a| witness(a)) {
        return false;
    }
    true
}

/// A nontrivial factor of the odd composite `n`, or `None` when the work
/// budget (rho iterations over all attempts) runs out.
fn rho_factor(n: u128, budget: &mut Option<u64>) -> Option<u128> {
    let mont = Montgomery::new(n);
    for c in 1u128.. {
        let cm = mont.enter(c);
        let f = |x: u128| mont.add(mont.mul(x, x), cm);
        let mut y = mont.enter(2);
        let mut x;
        let mut q = mont.one;
        let mut g;
        let mut r = 1u64;
        let mut ys;
        const BATCH: u64 = 128;
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            loop {
                ys = y;
                let steps = BATCH.min(r - k);
                for _ in 0..steps {
                    y = f(y);
                    q = mont.mul(q, x.abs_diff(y));
                }
                if let Some(b) = budget {
                    if *b < steps {
                        return None;
                    }
                    *b -= steps;
                }
                g = q.gcd(&n);
                k += steps;
                if k >= r || g != 1 {
                    break;
                }
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            // Backtrack one step at a time from the last saved point.
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return Some(g);
        }
    }
    unreachable!()
}

/// Prime factorization `[(p, e)]`, sorted by prime.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Factorization(pub Vec<(u128, u32)>);

impl Factorization {
    pub fn product(&self) -> Option<u128> {
        self.0.iter().try_fold(1u128, |acc, &(p, e)| {
            (0..e).try_fold(acc, |a, _| a.checked_mul(p))
        })
    }

    pub fn exponent(&self, p: u128) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }
}

fn push(out: &mut Vec<u128>, n: u128, budget: &mut Option<u64>) -> bool {
    if n == 1 {
        return true;
    }
    if is_prime(n) {
        out.push(n);
        return true;
    }
    let Some(d) = rho_factor(n, budget) else {
        return false;
    };
    push(out, d, budget) && push(out, n / d, budget)
}

/// Factorization of `n >= 1`, or `None` if `effort` rho iterations do not
/// suffice. `effort = None` means unbounded.
pub fn factorize_with_effort(mut n: u128, effort: Option<u64>) -> Option<Factorization> {
    assert!(n >= 1, "factorize needs n >= 1");
    let mut primes: Vec<u128> = Vec::new();
    for &p in small_primes() {
        let p = u128::from(p);
        if p * p > n {
            break;
        }
        while n.is_multiple_of(p) {
            primes.push(p);
            n /= p;
        }
    }
    let mut budget = effort;
    if !push(&mut primes, n, &mut budget) {
        return None;
    }
    primes.sort_unstable();
    let mut out: Vec<(u128, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Some(Factorization(out))
}
