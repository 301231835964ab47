//! Counting rings for walk enumeration.

use num_bigint::BigUint;
use num_traits::Zero;

/// Coefficient domain requested by a caller.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    /// Exact nonnegative integers.
    Exact,
    /// Residues modulo `2^k`, `1 <= k <= 32`.
    Mod2k(u32),
    /// Probabilities: each step is divided by the total generator weight.
    Real,
}

impl RingSpec {
    pub const DEFAULT_MOD: RingSpec = RingSpec::Mod2k(24);
}

impl core::fmt::Display for RingSpec {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            RingSpec::Exact => f.write_str("exact"),
            RingSpec::Mod2k(k) => write!(f, "mod2^{k}"),
            RingSpec::Real => f.write_str("real"),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Int(BigUint),
    Real(f64),
}

/// A commutative semiring that walk counts are accumulated in.
pub trait Ring: Sync {
    type Elem: Clone + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    /// `acc += x`
    fn add(&self, acc: &mut Self::Elem, x: &Self::Elem);
    /// `acc += weight · x`, where the ring may also rescale per step.
    fn add_step(&self, acc: &mut Self::Elem, x: &Self::Elem, weight: u32);
    fn value(&self, x: &Self::Elem) -> Value;
    /// Approximate storage cost of one element, for memory budgeting.
    fn elem_bytes(&self) -> usize;
}

/// Exact counting in `u128`. Only sound when every count stays below `2^128`,
/// which callers guarantee by checking `total_weight^max_len < 2^128`.
pub struct WideExact;

impl Ring for WideExact {
    type Elem = u128;

    fn zero(&self) -> u128 {
        0
    }
    fn one(&self) -> u128 {
        1
    }
    fn is_zero(&self, x: &u128) -> bool {
        *x == 0
    }
    fn add(&self, acc: &mut u128, x: &u128) {
        *acc += *x;
    }
    fn add_step(&self, acc: &mut u128, x: &u128, weight: u32) {
        *acc += *x * u128::from(weight);
    }
    fn value(&self, x: &u128) -> Value {
        Value::Int(BigUint::from(*x))
    }
    fn elem_bytes(&self) -> usize {
        16
    }
}

pub struct BigExact;

impl Ring for BigExact {
    type Elem = BigUint;

    fn zero(&self) -> BigUint {
        BigUint::zero()
    }
    fn one(&self) -> BigUint {
        BigUint::from(1u32)
    }
    fn is_zero(&self, x: &BigUint) -> bool {
        x.is_zero()
    }
    fn add(&self, acc: &mut BigUint, x: &BigUint) {
        *acc += x;
    }
    fn add_step(&self, acc: &mut BigUint, x: &BigUint, weight: u32) {
        *acc += x * weight;
    }
    fn value(&self, x: &BigUint) -> Value {
        Value::Int(x.clone())
    }
    fn elem_bytes(&self) -> usize {
        48
    }
}

/// Residues modulo `2^k` stored in a `u32`; wrapping arithmetic is exact
/// modulo `2^32`, so masking afterwards is exact modulo `2^k`.
pub struct Mod2k {
    mask: u32,
}

impl Mod2k {
    pub fn new(k: u32) -> Self {
        debug_assert!((1..=32).contains(&k));
        Mod2k {
            mask: if k == 32 { u32::MAX } else { (1u32 << k) - 1 },
        }
    }
}

impl Ring for Mod2k {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 & self.mask
    }
    fn is_zero(&self, x: &u32) -> bool {
        *x == 0
    }
    fn add(&self, acc: &mut u32, x: &u32) {
        *acc = acc.wrapping_add(*x) & self.mask;
    }
    fn add_step(&self, acc: &mut u32, x: &u32, weight: u32) {
        *acc = acc.wrapping_add(x.wrapping_mul(weight)) & self.mask;
    }
    fn value(&self, x: &u32) -> Value {
        Value::Int(BigUint::from(*x))
    }
    fn elem_bytes(&self) -> usize {
        4
    }
}

/// Probability lane: `add_step` multiplies by `weight / total_weight`.
pub struct Probability {
    inv_total: f64,
}

impl Probability {
    pub fn new(total_weight: u64) -> Self {
        Probability {
            inv_total: 1.0 / total_weight as f64,
        }
    }
}

impl Ring for Probability {
    type Elem = f64;

    fn zero(&self) -> f64 {
        0.0
    }
    fn one(&self) -> f64 {
        1.0
    }
    fn is_zero(&self, x: &f64) -> bool {
        *x == 0.0
    }
    fn add(&self, acc: &mut f64, x: &f64) {
        *acc += *x;
    }
    fn add_step(&self, acc: &mut f64, x: &f64, weight: u32) {
        *acc += *x * (f64::from(weight) * self.inv_total);
    }
    fn value(&self, x: &f64) -> Value {
        Value::Real(*x)
    }
    fn elem_bytes(&self) -> usize {
        8
    }
}
