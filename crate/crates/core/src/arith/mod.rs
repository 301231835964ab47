//! Integer arithmetic: factorization, square parts `m(n)`, the sign `f(n)`,
//! Euler's totient, and sieved scans over ranges.

mod big;
mod factor;
mod sieve;

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

pub use big::{f_sign_big, factorize_big, is_prime_big};
pub use factor::{factorize_with_effort, is_prime, Factorization};
pub use sieve::{
    density_scan, density_scan_with, f_segment, m_segment, DensityScan, FSequence, SEGMENT,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("argument must be at least 1")]
    Zero,
}

const fn build_small_primes() -> [u16; 6542] {
    let mut composite = [false; 1 << 16];
    let mut out = [0u16; 6542];
    let mut n = 0;
    let mut i = 2usize;
    while i < 1 << 16 {
        if !composite[i] {
            out[n] = i as u16;
            n += 1;
            let mut j = i * i;
            while j < 1 << 16 {
                composite[j] = true;
                j += i;
            }
        }
        i += 1;
    }
    out
}

static SMALL_PRIMES: [u16; 6542] = build_small_primes();

/// The primes below `2^16`.
pub fn small_primes() -> &'static [u16] {
    &SMALL_PRIMES
}

/// Primes `<= n` by a plain sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = alloc::vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            out.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    out
}

pub fn factorize(n: u128) -> Result<Factorization, ArithError> {
    if n == 0 {
        return Err(ArithError::Zero);
    }
    Ok(factorize_with_effort(n, None).expect("unbounded effort always finishes"))
}

/// `∏ p^⌊e/2⌋`, optionally skipping the prime 2.
pub fn square_part(f: &Factorization, skip_two: bool) -> u128 {
    f.0.iter()
        .filter(|&&(p, _)| !(skip_two && p == 2))
        .map(|&(p, e)| p.pow(e / 2))
        .product()
}

/// Largest `m` with `m² | n`.
pub fn m_of_n(n: u128) -> Result<u128, ArithError> {
    Ok(square_part(&factorize(n)?, false))
}

pub fn nu2(n: u128) -> u32 {
    n.trailing_zeros()
}

pub fn odd_part(n: u128) -> u128 {
    n >> n.trailing_zeros()
}

#[inline]
fn sign_of_residue(m: u128) -> i8 {
    if m % 4 == 1 {
        1
    } else {
        -1
    }
}

/// `f(n)`: `m` of the odd part of `n`, read mod 4 as `±1`.
pub fn f_sign(n: u128) -> Result<i8, ArithError> {
    Ok(sign_of_residue(square_part(&factorize(n)?, true)))
}

/// `f(n)` if `n` factors within `effort` rho iterations.
pub fn f_sign_with_effort(n: u128, effort: u64) -> Option<i8> {
    assert!(n >= 1);
    factorize_with_effort(odd_part(n), Some(effort)).map(|f| sign_of_residue(square_part(&f, true)))
}

/// The odd part of `n` mod 4 as `±1`. Unrelated to [`f_sign`]; kept as a
/// contrast sequence for subword scans.
pub fn odd_part_residue_sign(n: u128) -> i8 {
    assert!(n >= 1);
    sign_of_residue(odd_part(n))
}

pub fn euler_phi(f: &Factorization) -> u128 {
    f.0.iter().map(|&(p, e)| (p - 1) * p.pow(e - 1)).product()
}

pub fn divisors(f: &Factorization) -> Vec<u128> {
    let mut out = alloc::vec![1u128];
    for &(p, e) in &f.0 {
        let len = out.len();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                out.push(out[i] * pk);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaussOutcome {
    Pass,
    Counterexample { m: u64, sum: u128 },
}

/// Checks `Σ_{d|m} φ(d) = m` for `1 <= m <= limit`.
pub fn gauss_identity_check(limit: u64) -> GaussOutcome {
    let phi: Vec<u128> = (1..=limit)
        .map(|d| euler_phi(&factorize(u128::from(d)).expect("d >= 1")))
        .collect();
    for m in 1..=limit {
        let f = factorize(u128::from(m)).expect("m >= 1");
        let sum: u128 = divisors(&f).iter().map(|&d| phi[d as usize - 1]).sum();
        if sum != u128::from(m) {
            return GaussOutcome::Counterexample { m, sum };
        }
    }
    GaussOutcome::Pass
}

#[derive(Debug, Clone, PartialEq)]
pub struct QfScan {
    pub limit: u64,
    /// Prime powers `q <= limit` with `f(q) = -1`, ascending.
    pub members: Vec<u64>,
    pub sum: BigRational,
}

impl QfScan {
    pub fn sum_f64(&self) -> f64 {
        self.sum.to_f64().unwrap_or(f64::NAN)
    }
}

/// Prime powers `p^k <= limit` with `f(p^k) = -1`, i.e. `p ≡ 3 (mod 4)`
/// and `⌊k/2⌋` odd, with the exact sum of their reciprocals.
pub fn qf_scan(limit: u64) -> QfScan {
    let root = sieve::isqrt(limit);
    let mut members = Vec::new();
    for p in primes_up_to(root) {
        if p % 4 != 3 {
            continue;
        }
        let mut q = p;
        let mut k = 1u32;
        while let Some(next) = q.checked_mul(p).filter(|&v| v <= limit) {
            q = next;
            k += 1;
            if (k / 2) % 2 == 1 {
                members.push(q);
            }
        }
    }
    members.sort_unstable();
    let mut sum = BigRational::zero();
    for &q in &members {
        sum += BigRational::new(BigInt::from(1), BigInt::from(q));
    }
    QfScan { limit, members, sum }
}
