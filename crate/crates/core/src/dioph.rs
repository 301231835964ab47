//! Quadruples `(a, b, c, d)` of positive integers with `a + b + c + d = n`
//! and `ab = cd`, their orbits under the dihedral group generated by
//! `σ(a,b,c,d) = (a,b,d,c)` and `τ(a,b,c,d) = (c,d,a,b)`, and the counts
//! built from them.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arith::{euler_phi, factorize, m_of_n};

pub type Quad = [u64; 4];

pub fn sigma(q: Quad) -> Quad {
    [q[0], q[1], q[3], q[2]]
}

pub fn tau(q: Quad) -> Quad {
    [q[2], q[3], q[0], q[1]]
}

fn isqrt_exact(v: u64) -> Option<u64> {
    let r = num_integer::Roots::sqrt(&v);
    (r * r == v).then_some(r)
}

/// `S_n`, sorted lexicographically. Every solution factors as
/// `a = p(v-q)`, `b = q(u-p)`, `c = pq`, `d = (v-q)(u-p)` with `uv = n`
/// (take `p = gcd(a, c)`), so it is enough to run over divisor pairs.
pub fn enumerate_sn(n: u64) -> Vec<Quad> {
    let mut out = Vec::new();
    for u in (1..=n).filter(|u| n.is_multiple_of(*u)) {
        let v = n / u;
        for p in 1..u {
            for q in 1..v {
                out.push([p * (v - q), q * (u - p), p * q, (v - q) * (u - p)]);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Reference enumeration by scanning all `(a, b, c)`.
pub fn enumerate_sn_brute(n: u64) -> Vec<Quad> {
    let mut out = Vec::new();
    for a in 1..n {
        for b in 1..n - a {
            for c in 1..n - a - b {
                let d = n - a - b - c;
                if a * b == c * d {
                    out.push([a, b, c, d]);
                }
            }
        }
    }
    out
}

/// The orbit of `q`, sorted; its first element is the representative.
pub fn orbit(q: Quad) -> Vec<Quad> {
    let mut seen = BTreeSet::new();
    let mut todo = alloc::vec![q];
    while let Some(x) = todo.pop() {
        if seen.insert(x) {
            todo.push(sigma(x));
            todo.push(tau(x));
        }
    }
    seen.into_iter().collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrbitType {
    /// `(a, a, a, a)`
    Fixed,
    /// `(a, b, a, b)` with `a < b`
    Abab,
    /// `(a, b, c, c)` with `a < b`
    Abcc,
    /// Orbit of size 8.
    Free,
    /// Anything else; never produced for genuine members of `S_n`.
    Other,
}

impl OrbitType {
    pub fn name(self) -> &'static str {
        match self {
            OrbitType::Fixed => "fixed",
            OrbitType::Abab => "abab",
            OrbitType::Abcc => "abcc",
            OrbitType::Free => "free",
            OrbitType::Other => "other",
        }
    }
}

fn classify(members: &[Quad]) -> OrbitType {
    match members.len() {
        1 => OrbitType::Fixed,
        8 => OrbitType::Free,
        4 if members.iter().any(|q| q[2] == q[3]) => OrbitType::Abcc,
        4 if members.iter().any(|q| q[0] == q[2] && q[1] == q[3]) => OrbitType::Abab,
        _ => OrbitType::Other,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orbit {
    pub representative: Quad,
    pub kind: OrbitType,
    pub size: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OrbitStats {
    pub fixed: u64,
    pub abab: u64,
    pub abcc: u64,
    pub free: u64,
    pub other: u64,
    pub total: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitDecomposition {
    pub n: u64,
    pub orbits: Vec<Orbit>,
    pub stats: OrbitStats,
    /// `|S_n| = #fixed + 4·#abab + 4·#abcc + 8·#free`
    pub reconstructs: bool,
    /// `#fixed = 1_{4|n}`
    pub fixed_formula_holds: bool,
    /// `4·#abab = 4·1_{2|n}·⌊(n-1)/4⌋`
    pub abab_formula_holds: bool,
}

pub fn orbit_decompose(n: u64) -> OrbitDecomposition {
    let all = enumerate_sn(n);
    let mut remaining: BTreeSet<Quad> = all.iter().copied().collect();
    let mut orbits = Vec::new();
    let mut stats = OrbitStats {
        total: all.len() as u64,
        ..OrbitStats::default()
    };
    while let Some(&q) = remaining.iter().next() {
        let members = orbit(q);
        for m in &members {
            remaining.remove(m);
        }
        let kind = classify(&members);
        match kind {
            OrbitType::Fixed => stats.fixed += 1,
            OrbitType::Abab => stats.abab += 1,
            OrbitType::Abcc => stats.abcc += 1,
            OrbitType::Free => stats.free += 1,
            OrbitType::Other => stats.other += 1,
        }
        orbits.push(Orbit {
            representative: members[0],
            kind,
            size: members.len(),
        });
    }
    let sizes: u64 = orbits.iter().map(|o| o.size as u64).sum();
    let reconstructs = stats.other == 0
        && sizes == stats.total
        && stats.total == stats.fixed + 4 * stats.abab + 4 * stats.abcc + 8 * stats.free;
    let fixed_formula_holds = stats.fixed == u64::from(n.is_multiple_of(4));
    let abab_formula_holds = stats.abab == u64::from(n.is_multiple_of(2)) * ((n.max(1) - 1) / 4);
    OrbitDecomposition {
        n,
        orbits,
        stats,
        reconstructs,
        fixed_formula_holds,
        abab_formula_holds,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AbccMethod {
    Brute,
    Totient,
    ClosedForm,
}

/// Number of `(a, b, c)` with `a + b + 2c = n`, `ab = c²`, `a < b`.
pub fn count_abcc(n: u64, method: AbccMethod) -> u64 {
    assert!(n >= 1);
    match method {
        AbccMethod::Brute => {
            // a + b = n - 2c and ab = c² make a, b the roots of
            // t² - (n-2c)t + c², with discriminant n(n-4c).
            let mut count = 0;
            for c in 1..n.div_ceil(4) {
                if let Some(root) = isqrt_exact(n * (n - 4 * c)) {
                    let s = n - 2 * c;
                    let (a, b) = ((s - root) / 2, (s + root) / 2);
                    if (s + root).is_multiple_of(2) && a >= 1 && a < b && a * b == c * c {
                        count += 1;
                    }
                }
            }
            count
        }
        AbccMethod::Totient => {
            let mut twice = 0u128;
            let mut z = 3u64;
            while z * z <= n {
                if n.is_multiple_of(z * z) {
                    twice += euler_phi(&factorize(u128::from(z)).expect("z >= 3"));
                }
                z += 1;
            }
            assert!(twice.is_multiple_of(2), "totient sum is even for z >= 3");
            (twice / 2) as u64
        }
        AbccMethod::ClosedForm => {
            let m = m_of_n(u128::from(n)).expect("n >= 1") as u64;
            (m - 1 - u64::from(n.is_multiple_of(4))) / 2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R2Reading {
    /// Sum over every member of `S_ℓ`.
    Expanded,
    /// Sum over one member per orbit.
    Representative,
}

/// `8⁶·(Σ 4·(2(a+c)+3) + Σ_{k<ℓ} 24·|S_k|)`, the first sum taken over
/// `S_ℓ` according to `reading`.
pub fn r2_formula(ell: u64, reading: R2Reading) -> BigUint {
    assert!(ell >= 1);
    let terms: Vec<Quad> = match reading {
        R2Reading::Expanded => enumerate_sn(ell),
        R2Reading::Representative => orbit_decompose(ell)
            .orbits
            .iter()
            .map(|o| o.representative)
            .collect(),
    };
    let head: u64 = terms.iter().map(|q| 4 * (2 * (q[0] + q[2]) + 3)).sum();
    let tail: u64 = (1..ell).map(|k| 24 * enumerate_sn(k).len() as u64).sum();
    BigUint::from(8u32).pow(6) * BigUint::from(head + tail)
}
