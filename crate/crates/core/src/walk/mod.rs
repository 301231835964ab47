//! Weighted closed-walk enumeration on `vH` and `H3(Z)`.
//!
//! [`count_closed`] gives the cogrowth coefficients `c_ℓ`,
//! [`count_reduced_split`] the reduced counts `r(ℓ)` split into
//! `r1 + r2 + r3`, and [`brute_force_closed`] recomputes all of them by
//! exhaustive enumeration for small lengths.

mod brute;
mod engine;
pub mod model;
pub mod ring;

use alloc::boxed::Box;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::heis::Letter;

pub use brute::{brute_force_closed, BRUTE_FORCE_MAX_LEN};
pub use model::{Model, Move};
pub use ring::{RingSpec, Value};

use ring::{BigExact, Mod2k, Probability, Ring, WideExact};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    VH,
    H3,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("modulus 2^{0} is not supported (need 1 <= k <= 32)")]
    BadModulus(u32),
    #[error("capacity exceeded: need about {needed} bytes, budget is {budget}")]
    Capacity { needed: u64, budget: u64 },
    #[error("brute force is capped at length {cap}, got {requested}")]
    BruteForceTooLong { requested: usize, cap: usize },
    #[error("letter {0:?} is not a generator of this group")]
    BadLetter(Letter),
    #[error("generator weights must be at least 1")]
    ZeroWeight,
    #[error("letter {0:?} listed twice")]
    DuplicateLetter(Letter),
    #[error("{0}")]
    Unsupported(&'static str),
}

/// A generating multiset: each letter with its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    group: Group,
    letters: Vec<(Letter, u32)>,
}

impl GeneratorSet {
    pub fn new(group: Group, letters: Vec<(Letter, u32)>) -> Result<Self, WalkError> {
        for (i, &(l, w)) in letters.iter().enumerate() {
            if w == 0 {
                return Err(WalkError::ZeroWeight);
            }
            let ok = match group {
                Group::VH => l != Letter::E,
                Group::H3 => l != Letter::T,
            };
            if !ok {
                return Err(WalkError::BadLetter(l));
            }
            if letters[..i].iter().any(|&(m, _)| m == l) {
                return Err(WalkError::DuplicateLetter(l));
            }
        }
        Ok(GeneratorSet { group, letters })
    }

    /// `{x, x⁻¹, 8·t}` on `vH`.
    pub fn vh_standard() -> Self {
        Self::vh_with_t_weight(8)
    }

    pub fn vh_with_t_weight(w: u32) -> Self {
        GeneratorSet {
            group: Group::VH,
            letters: alloc::vec![(Letter::X, 1), (Letter::Xinv, 1), (Letter::T, w)],
        }
    }

    /// `{x^±, y^±, e}` on `H3(Z)`.
    pub fn h3_lazy() -> Self {
        GeneratorSet {
            group: Group::H3,
            letters: Letter::H3_LAZY_ALPHABET.iter().map(|&l| (l, 1)).collect(),
        }
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn letters(&self) -> &[(Letter, u32)] {
        &self.letters
    }

    pub fn weight(&self, l: Letter) -> Option<u32> {
        self.letters.iter().find(|&&(m, _)| m == l).map(|&(_, w)| w)
    }

    pub fn total_weight(&self) -> u64 {
        self.letters.iter().map(|&(_, w)| u64::from(w)).sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Storage {
    /// Dense tables when they fit the memory budget, sparse maps otherwise.
    Auto,
    Dense,
    Sparse,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WalkOptions {
    pub pruning: bool,
    pub storage: Storage,
    /// Bytes.
    pub memory_budget: u64,
}

impl Default for WalkOptions {
    fn default() -> Self {
        WalkOptions {
            pruning: true,
            storage: Storage::Auto,
            memory_budget: 4 << 30,
        }
    }
}

/// Runs batches of independent jobs. Implementations may run them
/// concurrently; results never depend on how.
pub trait Executor: Sync {
    fn workers(&self) -> usize;
    fn execute<'a>(&self, tasks: Vec<Box<dyn FnOnce() + Send + 'a>>);
}

/// Runs every job on the calling thread, in order.
#[derive(Clone, Copy, Debug, Default)]
pub struct Serial;

impl Executor for Serial {
    fn workers(&self) -> usize {
        1
    }
    fn execute<'a>(&self, tasks: Vec<Box<dyn FnOnce() + Send + 'a>>) {
        for t in tasks {
            t();
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Column {
    Int(Vec<BigUint>),
    Real(Vec<f64>),
}

impl Column {
    pub fn len(&self) -> usize {
        match self {
            Column::Int(v) => v.len(),
            Column::Real(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Per-length counts, entry `ℓ` of each column being the count at length `ℓ`.
#[derive(Clone, Debug, PartialEq)]
pub struct CountTable {
    pub ring: RingSpec,
    pub names: Vec<&'static str>,
    pub columns: Vec<Column>,
}

impl CountTable {
    pub fn max_len(&self) -> usize {
        self.columns.first().map_or(0, |c| c.len().saturating_sub(1))
    }

    pub fn column(&self, name: &str) -> Option<&Column> {
        let i = self.names.iter().position(|&n| n == name)?;
        self.columns.get(i)
    }

    pub fn int(&self, name: &str) -> Option<&[BigUint]> {
        match self.column(name)? {
            Column::Int(v) => Some(v),
            Column::Real(_) => None,
        }
    }

    pub fn real(&self, name: &str) -> Option<&[f64]> {
        match self.column(name)? {
            Column::Real(v) => Some(v),
            Column::Int(_) => None,
        }
    }

    /// Reduces every integer column modulo `2^k`.
    pub fn reduce_mod2k(&self, k: u32) -> CountTable {
        let modulus = BigUint::from(1u32) << k;
        CountTable {
            ring: RingSpec::Mod2k(k),
            names: self.names.clone(),
            columns: self
                .columns
                .iter()
                .map(|c| match c {
                    Column::Int(v) => Column::Int(v.iter().map(|x| x % &modulus).collect()),
                    Column::Real(v) => Column::Real(v.clone()),
                })
                .collect(),
        }
    }
}

fn to_column<R: Ring>(ring: &R, values: &[R::Elem]) -> Column {
    let vals: Vec<Value> = values.iter().map(|x| ring.value(x)).collect();
    if vals.iter().all(|v| matches!(v, Value::Real(_))) && !vals.is_empty() {
        Column::Real(
            vals.into_iter()
                .map(|v| match v {
                    Value::Real(r) => r,
                    Value::Int(_) => unreachable!(),
                })
                .collect(),
        )
    } else {
        Column::Int(
            vals.into_iter()
                .map(|v| match v {
                    Value::Int(i) => i,
                    Value::Real(_) => unreachable!(),
                })
                .collect(),
        )
    }
}

fn run_model(
    model: &Model,
    total_weight: u64,
    max_len: usize,
    ring: RingSpec,
    opts: &WalkOptions,
    exec: &dyn Executor,
) -> Result<Vec<Column>, WalkError> {
    fn go<R: Ring>(
        model: &Model,
        ring: &R,
        max_len: usize,
        opts: &WalkOptions,
        exec: &dyn Executor,
    ) -> Result<Vec<Column>, WalkError> {
        let closed = engine::run(model, ring, max_len, opts, exec)?;
        Ok(closed.iter().map(|c| to_column(ring, c)).collect())
    }
    match ring {
        RingSpec::Exact => {
            if fits_u128(total_weight, max_len) {
                go(model, &WideExact, max_len, opts, exec)
            } else {
                go(model, &BigExact, max_len, opts, exec)
            }
        }
        RingSpec::Mod2k(k) => {
            if !(1..=32).contains(&k) {
                return Err(WalkError::BadModulus(k));
            }
            go(model, &Mod2k::new(k), max_len, opts, exec)
        }
        RingSpec::Real => go(model, &Probability::new(total_weight), max_len, opts, exec),
    }
}

/// Every count at length `ℓ` is at most `total^ℓ`.
fn fits_u128(total: u64, len: usize) -> bool {
    let mut acc: u128 = 1;
    for _ in 0..len {
        match acc.checked_mul(u128::from(total)) {
            Some(v) => acc = v,
            None => return false,
        }
    }
    true
}

/// Weighted closed walks of every length `0..=max_len`; column `c`.
pub fn count_closed(
    gens: &GeneratorSet,
    max_len: usize,
    ring: RingSpec,
    opts: &WalkOptions,
    exec: &dyn Executor,
) -> Result<CountTable, WalkError> {
    let model = Model::plain(gens);
    let columns = run_model(&model, gens.total_weight(), max_len, ring, opts, exec)?;
    Ok(CountTable {
        ring,
        names: alloc::vec!["c"],
        columns,
    })
}

/// Reduced closed walks on `vH`, columns `r`, `r1`, `r2`, `r3`.
pub fn count_reduced_split(
    gens: &GeneratorSet,
    max_len: usize,
    ring: RingSpec,
    opts: &WalkOptions,
    exec: &dyn Executor,
) -> Result<CountTable, WalkError> {
    if gens.group() != Group::VH || gens.letters().iter().any(|&(l, _)| l == Letter::Y || l == Letter::Yinv) {
        return Err(WalkError::Unsupported(
            "the reduced split is defined for vH words over x, x⁻¹, t",
        ));
    }
    let model = Model::reduced_split(gens);
    let parts = run_model(&model, gens.total_weight(), max_len, ring, opts, exec)?;
    let total = sum_columns(ring, &parts);
    let mut columns = alloc::vec![total];
    columns.extend(parts);
    Ok(CountTable {
        ring,
        names: alloc::vec!["r", "r1", "r2", "r3"],
        columns,
    })
}

fn sum_columns(ring: RingSpec, parts: &[Column]) -> Column {
    match &parts[0] {
        Column::Int(first) => {
            let mut acc = first.clone();
            for p in &parts[1..] {
                if let Column::Int(v) = p {
                    for (a, x) in acc.iter_mut().zip(v) {
                        *a += x;
                    }
                }
            }
            if let RingSpec::Mod2k(k) = ring {
                let m = BigUint::from(1u32) << k;
                for a in &mut acc {
                    *a %= &m;
                }
            }
            Column::Int(acc)
        }
        Column::Real(first) => {
            let mut acc = first.clone();
            for p in &parts[1..] {
                if let Column::Real(v) = p {
                    for (a, x) in acc.iter_mut().zip(v) {
                        *a += x;
                    }
                }
            }
            Column::Real(acc)
        }
    }
}

/// `ℓ² · c_ℓ / 5^ℓ` for the lazy walk `{x^±, y^±, e}` on `H3(Z)`.
pub fn h3_lazy_ratio(ell: usize, exec: &dyn Executor) -> Result<f64, WalkError> {
    let ratios = h3_lazy_ratios(ell, &WalkOptions::default(), exec)?;
    Ok(ratios[ell])
}

/// The ratio for every length `0..=max_len` in one run.
pub fn h3_lazy_ratios(max_len: usize, opts: &WalkOptions, exec: &dyn Executor) -> Result<Vec<f64>, WalkError> {
    let table = count_closed(&GeneratorSet::h3_lazy(), max_len, RingSpec::Real, opts, exec)?;
    let probs = table.real("c").ok_or(WalkError::Unsupported("probability lane"))?;
    Ok(probs
        .iter()
        .enumerate()
        .map(|(l, p)| (l * l) as f64 * p)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(gens: &GeneratorSet, n: usize) -> CountTable {
        count_closed(gens, n, RingSpec::Exact, &WalkOptions::default(), &Serial).unwrap()
    }

    fn ints(v: &[u64]) -> Vec<BigUint> {
        v.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn small_cogrowth_values() {
        let t = exact(&GeneratorSet::vh_standard(), 4);
        assert_eq!(t.int("c").unwrap(), &ints(&[1, 0, 66, 0, 4614])[..]);
    }

    #[test]
    fn small_reduced_values() {
        let t = count_reduced_split(&GeneratorSet::vh_standard(), 8, RingSpec::Exact, &WalkOptions::default(), &Serial)
            .unwrap();
        let r = t.int("r").unwrap();
        assert_eq!(r[2], BigUint::from(64u32));
        assert_eq!(r[4], BigUint::from(4224u32));
        assert_eq!(t.int("r1").unwrap()[4], BigUint::from(4224u32));
        assert_eq!(t.int("r2").unwrap()[8], BigUint::from(0u32));
        assert_eq!(t.int("r3").unwrap()[8], BigUint::from(1u32 << 24));
    }

    #[test]
    fn h3_small_ratios() {
        let r = h3_lazy_ratios(2, &WalkOptions::default(), &Serial).unwrap();
        assert!((r[1] - 0.2).abs() < 1e-15);
        assert!((r[2] - 0.8).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_modulus() {
        let g = GeneratorSet::vh_standard();
        for k in [0, 33] {
            assert_eq!(
                count_closed(&g, 4, RingSpec::Mod2k(k), &WalkOptions::default(), &Serial),
                Err(WalkError::BadModulus(k))
            );
        }
    }

    #[test]
    fn dense_capacity_error() {
        let opts = WalkOptions {
            storage: Storage::Dense,
            memory_budget: 1024,
            ..WalkOptions::default()
        };
        let e = count_closed(&GeneratorSet::vh_standard(), 20, RingSpec::Exact, &opts, &Serial).unwrap_err();
        assert!(matches!(e, WalkError::Capacity { .. }));
        let opts = WalkOptions {
            storage: Storage::Sparse,
            ..opts
        };
        let e = count_closed(&GeneratorSet::vh_standard(), 20, RingSpec::Exact, &opts, &Serial).unwrap_err();
        assert!(matches!(e, WalkError::Capacity { .. }));
    }

    #[test]
    fn generator_validation() {
        assert_eq!(
            GeneratorSet::new(Group::H3, alloc::vec![(Letter::T, 1)]),
            Err(WalkError::BadLetter(Letter::T))
        );
        assert_eq!(
            GeneratorSet::new(Group::VH, alloc::vec![(Letter::X, 0)]),
            Err(WalkError::ZeroWeight)
        );
        assert_eq!(
            GeneratorSet::new(Group::VH, alloc::vec![(Letter::X, 1), (Letter::X, 2)]),
            Err(WalkError::DuplicateLetter(Letter::X))
        );
    }

    #[test]
    fn wide_bound() {
        assert!(fits_u128(10, 38));
        assert!(!fits_u128(10, 39));
    }
}
