//! The coefficients `s_j = (r(4j+8) - r₁(4j+8) - 2²¹·3·⌊j/2⌋) / 2²²` and the
//! congruence `s_j ≡ (m(2j+1) - 1)/2 (mod 2)`, row by row.

use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::m_of_n;
use crate::dioph::{r2_formula, R2Reading};
use crate::walk::{count_reduced_split, CountTable, Executor, GeneratorSet, RingSpec, WalkError, WalkOptions};

/// Residues are displayed and compared modulo `2^23`.
pub const DISPLAY_BITS: u32 = 23;
pub const DEFAULT_JMAX: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TheoremError {
    #[error("the modular lane needs at least 2^{DISPLAY_BITS}, got 2^{0}")]
    ModulusTooSmall(u32),
    #[error("the real lane cannot carry congruences")]
    RealLane,
    #[error("table covers lengths up to {have}, need {need}")]
    TableTooShort { have: usize, need: usize },
    #[error("table has no column {0}")]
    MissingColumn(&'static str),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

/// `s_j` with its parity, or `None` when `2²²` does not divide the numerator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCoefficient {
    /// The integer `s_j` in the exact lane, its residue mod `2^{K-22}` in
    /// the `2^K` lane.
    pub value: BigInt,
    pub parity: u8,
}

fn lane_bits(ring: RingSpec) -> Result<Option<u32>, TheoremError> {
    match ring {
        RingSpec::Exact => Ok(None),
        RingSpec::Mod2k(k) if k >= DISPLAY_BITS => Ok(Some(k)),
        RingSpec::Mod2k(k) => Err(TheoremError::ModulusTooSmall(k)),
        RingSpec::Real => Err(TheoremError::RealLane),
    }
}

/// `r` and `r1` are exact values or residues mod `2^K` per `ring`.
pub fn s_coefficient(j: usize, r: &BigUint, r1: &BigUint, ring: RingSpec) -> Result<Option<SCoefficient>, TheoremError> {
    let bits = lane_bits(ring)?;
    let shift = BigInt::from(3u32 << 21) * BigInt::from(j / 2);
    let mut diff = BigInt::from(r.clone()) - BigInt::from(r1.clone()) - shift;
    if let Some(k) = bits {
        diff = diff.mod_floor(&(BigInt::one() << k));
    }
    let unit = BigInt::one() << 22u32;
    let (q, rem) = diff.div_mod_floor(&unit);
    if !rem.is_zero() {
        return Ok(None);
    }
    let parity = if q.is_odd() { 1 } else { 0 };
    Ok(Some(SCoefficient { value: q, parity }))
}

/// `((m(2j+1) - 1) / 2) mod 2`
pub fn rhs(j: usize) -> (u64, u8) {
    let m = m_of_n(2 * j as u128 + 1).expect("odd argument") as u64;
    (m, (((m - 1) / 2) % 2) as u8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiracleRow {
    pub j: usize,
    pub length: usize,
    /// Lane values (exact, or residues mod `2^K`).
    pub r: BigUint,
    pub r1: BigUint,
    pub r2: BigUint,
    pub r3: BigUint,
    pub s: Option<SCoefficient>,
    pub m: u64,
    pub rhs: u8,
    pub matches: bool,
    /// Predictions for `r₂(4j+8)` under both readings of the shape formula.
    pub r2_expanded: BigUint,
    pub r2_representative: BigUint,
    pub expanded_agrees: bool,
    pub representative_agrees: bool,
    /// `r - r₁ = r₂ + r₃` in the lane.
    pub split_holds: bool,
    /// `r₃ ≡ 0 (mod 2^23)`.
    pub r3_divisible: bool,
}

impl MiracleRow {
    fn display(x: &BigUint) -> BigUint {
        x % (BigUint::one() << DISPLAY_BITS)
    }

    pub fn r_display(&self) -> BigUint {
        Self::display(&self.r)
    }
    pub fn r1_display(&self) -> BigUint {
        Self::display(&self.r1)
    }
    pub fn r2_display(&self) -> BigUint {
        Self::display(&self.r2)
    }
    pub fn r3_display(&self) -> BigUint {
        Self::display(&self.r3)
    }

    pub fn internal_ok(&self) -> bool {
        self.split_holds && self.r3_divisible
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiracleReport {
    pub ring: RingSpec,
    pub rows: Vec<MiracleRow>,
}

impl MiracleReport {
    /// The invariants that must hold regardless of the congruence verdicts.
    pub fn invariants_hold(&self) -> bool {
        self.rows.iter().all(MiracleRow::internal_ok)
    }
}

fn reduce(x: &BigUint, bits: Option<u32>) -> BigUint {
    match bits {
        Some(k) => x % (BigUint::one() << k),
        None => x.clone(),
    }
}

/// One row per `j = 0..=jmax`, from a single reduced-split run to length
/// `4·jmax + 8`.
pub fn miracle_report(
    jmax: usize,
    ring: RingSpec,
    opts: &WalkOptions,
    exec: &dyn Executor,
) -> Result<MiracleReport, TheoremError> {
    lane_bits(ring)?;
    let table = count_reduced_split(&GeneratorSet::vh_standard(), 4 * jmax + 8, ring, opts, exec)?;
    miracle_rows(jmax, &table)
}

/// The same report from an existing reduced-split table (for instance a
/// cached one) covering lengths up to at least `4·jmax + 8`.
pub fn miracle_rows(jmax: usize, table: &CountTable) -> Result<MiracleReport, TheoremError> {
    let ring = table.ring;
    let bits = lane_bits(ring)?;
    if table.max_len() < 4 * jmax + 8 {
        return Err(TheoremError::TableTooShort {
            have: table.max_len(),
            need: 4 * jmax + 8,
        });
    }
    let col = |name: &'static str| table.int(name).ok_or(TheoremError::MissingColumn(name));
    let (r, r1, r2, r3) = (col("r")?, col("r1")?, col("r2")?, col("r3")?);
    let display_mod = BigUint::one() << DISPLAY_BITS;
    let mut rows = Vec::with_capacity(jmax + 1);
    for j in 0..=jmax {
        let len = 4 * j + 8;
        let s = s_coefficient(j, &r[len], &r1[len], ring)?;
        let (m, rhs) = rhs(j);
        let matches = s.as_ref().is_some_and(|s| s.parity == rhs);
        let ell = 2 * j as u64 + 1;
        let r2_expanded = r2_formula(ell, R2Reading::Expanded);
        let r2_representative = r2_formula(ell, R2Reading::Representative);
        let lhs = BigInt::from(r[len].clone()) - BigInt::from(r1[len].clone());
        let rhs_split = BigInt::from(&r2[len] + &r3[len]);
        let split_holds = match bits {
            Some(k) => (lhs - rhs_split).mod_floor(&(BigInt::one() << k)).is_zero(),
            None => lhs == rhs_split,
        };
        rows.push(MiracleRow {
            j,
            length: len,
            r: r[len].clone(),
            r1: r1[len].clone(),
            r2: r2[len].clone(),
            r3: r3[len].clone(),
            s,
            m,
            rhs,
            matches,
            expanded_agrees: reduce(&r2_expanded, bits) == r2[len],
            representative_agrees: reduce(&r2_representative, bits) == r2[len],
            r2_expanded,
            r2_representative,
            split_holds,
            r3_divisible: (&r3[len] % &display_mod).is_zero(),
        });
    }
    Ok(MiracleReport { ring, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::walk::Serial;

    #[test]
    fn first_coefficient() {
        let r3 = BigUint::one() << 24u32;
        let s = s_coefficient(0, &r3, &BigUint::zero(), RingSpec::Exact).unwrap().unwrap();
        assert_eq!(s.value, BigInt::from(4));
        assert_eq!(s.parity, 0);
        let s = s_coefficient(0, &BigUint::zero(), &BigUint::zero(), RingSpec::Mod2k(24))
            .unwrap()
            .unwrap();
        assert_eq!(s.parity, 0);
        assert_eq!(rhs(0), (1, 0));
        assert_eq!(rhs(4), (3, 1));
    }

    #[test]
    fn indivisible_numerator_is_flagged() {
        let s = s_coefficient(0, &BigUint::from(5u32), &BigUint::zero(), RingSpec::Exact).unwrap();
        assert!(s.is_none());
        assert!(s_coefficient(0, &BigUint::zero(), &BigUint::zero(), RingSpec::Mod2k(20)).is_err());
    }

    #[test]
    fn first_rows_match_in_both_lanes() {
        let opts = WalkOptions::default();
        let exact = miracle_report(1, RingSpec::Exact, &opts, &Serial).unwrap();
        let modular = miracle_report(1, RingSpec::Mod2k(24), &opts, &Serial).unwrap();
        for rep in [&exact, &modular] {
            assert!(rep.invariants_hold());
            assert!(rep.rows[0].matches && rep.rows[1].matches);
        }
        assert_eq!(exact.rows[0].r3, BigUint::one() << 24u32);
        assert_eq!(exact.rows[1].r2, BigUint::zero());
        for (e, m) in exact.rows.iter().zip(&modular.rows) {
            assert_eq!(e.r_display(), m.r_display());
            assert_eq!(e.s.as_ref().map(|s| s.parity), m.s.as_ref().map(|s| s.parity));
        }
    }
}
