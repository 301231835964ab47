//! Block (subword) complexity of `±1` sequences and explicit witnesses
//! `x` with `f(x + i) = u_i` for a prescribed block `u`.
//!
//! Blocks are packed into integers with `+1 → 0`, `-1 → 1` and `u₁` as the
//! most significant bit.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::arith::{f_segment, f_sign, f_sign_big, is_prime, primes_up_to, SEGMENT};
use crate::walk::{Executor, Serial};

pub const MAX_PROFILE_LEN: usize = 24;
pub const MAX_SCAN_LEN: usize = 20;
pub const MAX_WITNESS_LEN: usize = 10;
/// Largest prefix `f(1..X)` a saturation scan will sieve.
pub const MAX_SCAN_WINDOW: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SubwordError {
    #[error("block length {len} outside 1..={max}")]
    BadLength { len: usize, max: usize },
    #[error("sequence of length {len} is shorter than the block length {n}")]
    SequenceTooShort { len: usize, n: usize },
    #[error("block entries must be +1 or -1")]
    BadEntry,
    #[error("window {window} exceeds the scan budget {budget}")]
    BudgetExceeded { window: u64, budget: u64 },
    #[error("no witness among k < {max_k}")]
    WitnessBudgetExceeded { max_k: u64 },
}

/// Presence bits over the `2^n` blocks of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSet {
    n: usize,
    bits: Vec<u64>,
}

impl BlockSet {
    pub fn new(n: usize) -> Result<Self, SubwordError> {
        if n == 0 || n > MAX_PROFILE_LEN {
            return Err(SubwordError::BadLength {
                len: n,
                max: MAX_PROFILE_LEN,
            });
        }
        Ok(BlockSet {
            n,
            bits: vec![0; (1usize << n).div_ceil(64)],
        })
    }

    /// The block length `n`.
    pub fn block_len(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, code: u32) {
        self.bits[code as usize / 64] |= 1 << (code % 64);
    }

    pub fn contains(&self, code: u32) -> bool {
        self.bits[code as usize / 64] >> (code % 64) & 1 == 1
    }

    pub fn count(&self) -> u64 {
        self.bits.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    pub fn union_with(&mut self, other: &BlockSet) {
        for (a, b) in self.bits.iter_mut().zip(&other.bits) {
            *a |= b;
        }
    }

    pub fn missing(&self) -> Vec<u32> {
        (0..1u32 << self.n).filter(|&c| !self.contains(c)).collect()
    }
}

/// Packs a `±1` block.
pub fn encode(block: &[i8]) -> Result<u32, SubwordError> {
    if block.is_empty() || block.len() > 32 {
        return Err(SubwordError::BadLength {
            len: block.len(),
            max: 32,
        });
    }
    block.iter().try_fold(0u32, |acc, &u| match u {
        1 => Ok(acc << 1),
        -1 => Ok(acc << 1 | 1),
        _ => Err(SubwordError::BadEntry),
    })
}

pub fn decode(code: u32, n: usize) -> Vec<i8> {
    (0..n)
        .map(|i| if code >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
        .collect()
}

fn bit(u: i8) -> u32 {
    u32::from(u < 0)
}

fn windows_into(set: &mut BlockSet, seq: &[i8]) {
    let n = set.block_len();
    if seq.len() < n {
        return;
    }
    let mask = (1u32 << n) - 1;
    let mut code = seq[..n - 1].iter().fold(0u32, |acc, &u| acc << 1 | bit(u));
    for &u in &seq[n - 1..] {
        code = (code << 1 | bit(u)) & mask;
        set.insert(code);
    }
}

/// `p(1), …, p(n_max)` for a `±1` sequence (any negative entry reads `-1`).
pub fn complexity_profile(seq: &[i8], n_max: usize) -> Result<Vec<u64>, SubwordError> {
    if n_max == 0 || n_max > MAX_PROFILE_LEN {
        return Err(SubwordError::BadLength {
            len: n_max,
            max: MAX_PROFILE_LEN,
        });
    }
    if seq.len() < n_max {
        return Err(SubwordError::SequenceTooShort {
            len: seq.len(),
            n: n_max,
        });
    }
    (1..=n_max)
        .map(|n| {
            let mut set = BlockSet::new(n)?;
            windows_into(&mut set, seq);
            Ok(set.count())
        })
        .collect()
}

/// Maps bits `0/1` to `+1/-1`.
pub fn signs_from_bits(bits: &[bool]) -> Vec<i8> {
    bits.iter().map(|&b| if b { -1 } else { 1 }).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturationScan {
    pub n: usize,
    pub window: u64,
    pub seen: BlockSet,
}

impl SaturationScan {
    pub fn count(&self) -> u64 {
        self.seen.count()
    }

    pub fn missing(&self) -> Vec<u32> {
        self.seen.missing()
    }

    pub fn complete(&self) -> bool {
        self.count() == 1u64 << self.n
    }
}

fn check_scan_args(n: usize, window: u64) -> Result<(), SubwordError> {
    if n == 0 || n > MAX_SCAN_LEN {
        return Err(SubwordError::BadLength {
            len: n,
            max: MAX_SCAN_LEN,
        });
    }
    if window > MAX_SCAN_WINDOW {
        return Err(SubwordError::BudgetExceeded {
            window,
            budget: MAX_SCAN_WINDOW,
        });
    }
    Ok(())
}

/// Which length-`n` blocks occur in `f(1), …, f(window)`.
pub fn saturation_scan(n: usize, window: u64) -> Result<SaturationScan, SubwordError> {
    saturation_scan_with(n, window, &Serial)
}

/// Segments of starting positions are scanned independently and their
/// block sets merged by union.
pub fn saturation_scan_with(n: usize, window: u64, exec: &dyn Executor) -> Result<SaturationScan, SubwordError> {
    check_scan_args(n, window)?;
    let mut seen = BlockSet::new(n)?;
    if window >= n as u64 {
        let last_start = window - n as u64 + 1;
        let starts: Vec<u64> = (0..)
            .map(|i| 1 + i * SEGMENT)
            .take_while(|&s| s <= last_start)
            .collect();
        let mut parts: Vec<BlockSet> = vec![seen.clone(); starts.len()];
        let tasks: Vec<Box<dyn FnOnce() + Send + '_>> = starts
            .iter()
            .zip(parts.iter_mut())
            .map(|(&lo, part)| {
                let hi = (lo + SEGMENT).min(last_start + 1) + n as u64 - 1;
                Box::new(move || windows_into(part, &f_segment(lo, hi))) as Box<dyn FnOnce() + Send>
            })
            .collect();
        exec.execute(tasks);
        for p in &parts {
            seen.union_with(p);
        }
    }
    Ok(SaturationScan { n, window, seen })
}

/// First `x` in `0..=window - n` with `f(x + i) = u_i`, by scanning.
pub fn find_in_prefix(block: &[i8], window: u64) -> Result<Option<u64>, SubwordError> {
    let n = block.len();
    check_scan_args(n, window)?;
    let target = encode(block)?;
    let mask = (1u32 << n) - 1;
    let mut code = 0u32;
    let mut lo = 1u64;
    while lo <= window {
        let hi = (lo + SEGMENT).min(window + 1);
        for (off, &u) in f_segment(lo, hi).iter().enumerate() {
            let pos = lo + off as u64;
            code = (code << 1 | bit(u)) & mask;
            if pos >= n as u64 && code == target {
                return Ok(Some(pos - n as u64));
            }
        }
        lo = hi;
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrtTrace {
    /// Indices `i` (1-based) with `f(i) ≠ u_i`.
    pub failure_set: Vec<usize>,
    /// `(p, e)`: `x ≡ 0 (mod p^e)` for each prime `p <= n`.
    pub base_moduli: Vec<(u64, u32)>,
    /// `(i, p_i, m_i)`: `x ≡ p_i^{m_i} - i (mod p_i^{m_i + 1})`.
    pub prime_powers: Vec<(usize, u64, u32)>,
    pub modulus: BigUint,
    pub residue: BigUint,
    /// The accepted `k` in `x = kM + R`.
    pub k: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Construction {
    /// Found by scanning `f(1..window)`.
    Prescan { window: u64 },
    Crt(CrtTrace),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub block: Vec<i8>,
    pub x: BigUint,
    pub trace: Construction,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessOptions {
    /// Candidates `k = 0..max_k` are tried.
    pub max_k: u64,
    /// Rho iterations allowed per factorization; candidates that do not
    /// factor within it are skipped.
    pub effort: u64,
    /// Skip the scan of `f(1..prescan_window)` and go straight to the CRT.
    pub force_crt: bool,
    pub prescan_window: u64,
}

impl Default for WitnessOptions {
    fn default() -> Self {
        WitnessOptions {
            max_k: 10_000,
            effort: 1 << 18,
            force_crt: false,
            prescan_window: 1 << 20,
        }
    }
}

fn check_block(block: &[i8], max: usize) -> Result<(), SubwordError> {
    if block.is_empty() || block.len() > max {
        return Err(SubwordError::BadLength { len: block.len(), max });
    }
    if block.iter().any(|&u| u != 1 && u != -1) {
        return Err(SubwordError::BadEntry);
    }
    Ok(())
}

/// `x ≡ r (mod m)` combined with `x ≡ r2 (mod m2)`, moduli coprime.
fn crt_step(r: &BigInt, m: &BigInt, r2: &BigInt, m2: &BigInt) -> (BigInt, BigInt) {
    let e = m.extended_gcd(m2);
    debug_assert!(e.gcd.is_one());
    let t = ((r2 - r) * e.x).mod_floor(m2);
    let m_new = m * m2;
    ((r + m * t).mod_floor(&m_new), m_new)
}

/// The CRT system for `block`: returns the trace with `k` unset.
pub fn crt_system(block: &[i8]) -> Result<CrtTrace, SubwordError> {
    check_block(block, MAX_WITNESS_LEN)?;
    let n = block.len();
    let failure_set: Vec<usize> = (1..=n)
        .filter(|&i| f_sign(i as u128).expect("i >= 1") != block[i - 1])
        .collect();
    let mut base_moduli = Vec::new();
    for p in primes_up_to(n as u64) {
        let mut e = 0;
        let mut pe = 1u64;
        while pe * p <= n as u64 {
            pe *= p;
            e += 1;
        }
        base_moduli.push((p, e + 1));
    }
    let mut candidates = (n as u64 + 1..).filter(|&p| p % 4 == 3 && is_prime(u128::from(p)));
    let prime_powers: Vec<(usize, u64, u32)> = failure_set
        .iter()
        .map(|&i| (i, candidates.next().expect("infinitely many primes"), 2))
        .collect();

    let mut r = BigInt::zero();
    let mut m = BigInt::one();
    for &(p, e) in &base_moduli {
        let (r2, m2) = crt_step(&r, &m, &BigInt::zero(), &BigInt::from(p).pow(e));
        r = r2;
        m = m2;
    }
    for &(i, p, mi) in &prime_powers {
        let p = BigInt::from(p);
        let target = p.pow(mi) - BigInt::from(i);
        let (r2, m2) = crt_step(&r, &m, &target, &p.pow(mi + 1));
        r = r2;
        m = m2;
    }
    Ok(CrtTrace {
        failure_set,
        base_moduli,
        prime_powers,
        modulus: m.to_biguint().expect("positive"),
        residue: r.to_biguint().expect("reduced"),
        k: 0,
    })
}

fn matches(block: &[i8], x: &BigUint, effort: Option<u64>) -> Option<bool> {
    for (i, &u) in block.iter().enumerate() {
        let v = f_sign_big(&(x + BigUint::from(i as u64 + 1)), effort)?;
        if v != u {
            return Some(false);
        }
    }
    Some(true)
}

/// A verified `x` with `f(x + i) = u_i` for `i = 1..=n`.
pub fn crt_witness(block: &[i8], opts: &WitnessOptions) -> Result<WitnessCertificate, SubwordError> {
    check_block(block, MAX_WITNESS_LEN)?;
    if !opts.force_crt {
        if let Some(x) = find_in_prefix(block, opts.prescan_window.max(block.len() as u64))? {
            return Ok(WitnessCertificate {
                block: block.to_vec(),
                x: BigUint::from(x),
                trace: Construction::Prescan {
                    window: opts.prescan_window,
                },
            });
        }
    }
    let mut trace = crt_system(block)?;
    for k in 0..opts.max_k {
        let x = &trace.modulus * k + &trace.residue;
        if matches(block, &x, Some(opts.effort)) == Some(true) {
            trace.k = k;
            return Ok(WitnessCertificate {
                block: block.to_vec(),
                x,
                trace: Construction::Crt(trace),
            });
        }
    }
    Err(SubwordError::WitnessBudgetExceeded { max_k: opts.max_k })
}

/// Recomputes `f(x + i)` by full factorization; the trace is ignored.
pub fn verify_certificate(cert: &WitnessCertificate) -> Result<bool, SubwordError> {
    check_block(&cert.block, usize::MAX)?;
    Ok(matches(&cert.block, &cert.x, None).expect("unbounded effort"))
}

/// `x` as `u64` when it fits; convenience for small certificates.
pub fn witness_u64(cert: &WitnessCertificate) -> Option<u64> {
    cert.x.to_u64()
}
