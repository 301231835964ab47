//! Truncated power series with exact rational coefficients, polynomial
//! recurrences, and the tools built on them: recurrence checking, guessing,
//! even/odd extraction, and the reduced/full cogrowth identity.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeriesError {
    #[error("composition needs an inner series with zero constant term")]
    NonzeroConstantTerm,
    #[error("reciprocal of a series with zero constant term")]
    ZeroConstantTerm,
    #[error("sequence has {len} terms, recurrence of order {order} needs more")]
    SequenceTooShort { len: usize, order: usize },
    #[error("recurrence has a nonzero polynomial at odd shift {0}")]
    OddShift(usize),
    #[error("need at least {needed} terms for these bounds, got {got}")]
    InsufficientData { needed: usize, got: usize },
    #[error("leading polynomial p0 is zero")]
    ZeroLeading,
    #[error("stride must be positive")]
    ZeroStride,
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Prefix `a_0 + a_1 z + … + a_{N-1} z^{N-1}` of a power series; `N` is the order.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        TruncatedSeries { coeffs }
    }

    pub fn from_ints<T: Into<BigInt> + Clone>(v: &[T]) -> Self {
        TruncatedSeries {
            coeffs: v.iter().map(|x| BigRational::from_integer(x.clone().into())).collect(),
        }
    }

    /// `c_0 + c_1 z + …` truncated to `order` terms from a sparse list.
    pub fn monomials(order: usize, terms: &[(usize, i64)]) -> Self {
        let mut coeffs = vec![BigRational::zero(); order];
        for &(k, c) in terms {
            if k < order {
                coeffs[k] += q(c);
            }
        }
        TruncatedSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn truncate(&self, order: usize) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().take(order).cloned().collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `A(-z)`
    pub fn negate_variable(&self) -> Self {
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| if k % 2 == 1 { -a } else { a.clone() })
                .collect(),
        }
    }

    pub fn reciprocal(&self) -> Result<Self, SeriesError> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ZeroConstantTerm);
        }
        let inv0 = self.coeffs[0].recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for k in 1..n {
            let s = (1..=k).fold(BigRational::zero(), |s, i| s + &self.coeffs[i] * &out[k - i]);
            out.push(-s * &inv0);
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// `self(inner(z))`; `inner` must have zero constant term.
    pub fn compose(&self, inner: &TruncatedSeries) -> Result<Self, SeriesError> {
        let n = self.order().min(inner.order());
        if n > 0 && !inner.coeffs[0].is_zero() {
            return Err(SeriesError::NonzeroConstantTerm);
        }
        let inner = inner.truncate(n);
        let mut acc = TruncatedSeries::new(vec![BigRational::zero(); n]);
        for a in self.coeffs[..n].iter().rev() {
            acc = &acc * &inner;
            if n > 0 {
                acc.coeffs[0] += a;
            }
        }
        Ok(acc)
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        TruncatedSeries {
            coeffs: (0..n).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect(),
        }
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self + &(-rhs)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let n = self.order().min(rhs.order());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs[..n - i].iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Mul,
    Compose,
    Reciprocal,
}

/// Dispatcher over the truncated operations; `Reciprocal` ignores `b`.
pub fn ts_arith(op: SeriesOp, a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries, SeriesError> {
    match op {
        SeriesOp::Add => Ok(a + b),
        SeriesOp::Mul => Ok(a * b),
        SeriesOp::Compose => a.compose(b),
        SeriesOp::Reciprocal => a.reciprocal(),
    }
}

/// `a_0, a_2, a_4, …` as a series in `z`.
pub fn even_part(a: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a.coeffs.iter().step_by(2).cloned().collect(),
    }
}

/// `a_1, a_3, a_5, …` as a series in `z`.
pub fn odd_part(a: &TruncatedSeries) -> TruncatedSeries {
    TruncatedSeries {
        coeffs: a.coeffs.iter().skip(1).step_by(2).cloned().collect(),
    }
}

/// Integer polynomial in `n`, coefficients by increasing degree.
pub type Poly = Vec<BigInt>;

fn poly_eval(p: &[BigInt], n: &BigInt) -> BigInt {
    p.iter().rev().fold(BigInt::zero(), |acc, c| acc * n + c)
}

fn poly_is_zero(p: &[BigInt]) -> bool {
    p.iter().all(Zero::is_zero)
}

/// `p(α n + β)` for integers `α, β`.
fn poly_affine(p: &[BigInt], alpha: i64, beta: i64) -> Poly {
    let lin: Poly = vec![BigInt::from(beta), BigInt::from(alpha)];
    let mut acc: Poly = vec![BigInt::zero()];
    for c in p.iter().rev() {
        let mut next = vec![BigInt::zero(); acc.len() + 1];
        for (i, a) in acc.iter().enumerate() {
            for (j, l) in lin.iter().enumerate() {
                next[i + j] += a * l;
            }
        }
        next[0] += c;
        acc = next;
    }
    trim(acc)
}

fn trim(mut p: Poly) -> Poly {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigInt::zero());
    }
    p
}

/// `p_0(n) a_n + p_1(n) a_{n-1} + … + p_k(n) a_{n-k} = 0` for all `n >= k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Recurrence {
    polys: Vec<Poly>,
}

impl Recurrence {
    pub fn new(polys: Vec<Poly>) -> Result<Self, SeriesError> {
        let polys: Vec<Poly> = polys.into_iter().map(trim).collect();
        if polys.first().is_none_or(|p| poly_is_zero(p)) {
            return Err(SeriesError::ZeroLeading);
        }
        Ok(Recurrence { polys })
    }

    pub fn from_i64(polys: &[&[i64]]) -> Result<Self, SeriesError> {
        Self::new(polys.iter().map(|p| p.iter().map(|&c| BigInt::from(c)).collect()).collect())
    }

    pub fn order(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[Poly] {
        &self.polys
    }

    pub fn degree(&self) -> usize {
        self.polys.iter().map(|p| p.len() - 1).max().unwrap_or(0)
    }

    /// `Σ p_i(n) a_{n-i}` at index `n >= order`.
    pub fn residual(&self, seq: &[BigInt], n: usize) -> BigInt {
        let nn = BigInt::from(n);
        self.polys
            .iter()
            .enumerate()
            .fold(BigInt::zero(), |s, (i, p)| s + poly_eval(p, &nn) * &seq[n - i])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckOutcome {
    Pass,
    /// First index where the recurrence does not hold.
    FailsAt(usize),
}

pub fn check_recurrence(rec: &Recurrence, seq: &[BigInt]) -> Result<CheckOutcome, SeriesError> {
    let k = rec.order();
    if seq.len() <= k {
        return Err(SeriesError::SequenceTooShort { len: seq.len(), order: k });
    }
    Ok((k..seq.len())
        .find(|&n| !rec.residual(seq, n).is_zero())
        .map_or(CheckOutcome::Pass, CheckOutcome::FailsAt))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Recurrence for `b_n = a_{2n}` (or `a_{2n+1}`) from one for `a_n` that only
/// uses even shifts: `q_i(n) = p_{2i}(2n)` (or `p_{2i}(2n+1)`).
pub fn extract_even(rec: &Recurrence, parity: Parity) -> Result<Recurrence, SeriesError> {
    if let Some(j) = (1..rec.polys.len()).step_by(2).find(|&j| !poly_is_zero(&rec.polys[j])) {
        return Err(SeriesError::OddShift(j));
    }
    let beta = match parity {
        Parity::Even => 0,
        Parity::Odd => 1,
    };
    let mut polys: Vec<Poly> = rec.polys.iter().step_by(2).map(|p| poly_affine(p, 2, beta)).collect();
    while polys.len() > 1 && polys.last().is_some_and(|p| poly_is_zero(p)) {
        polys.pop();
    }
    Recurrence::new(polys)
}

/// Reduced row echelon form in place; returns pivot columns.
fn rref(m: &mut [Vec<BigRational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, y) in other.iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    pivots
}

/// Basis of the right nullspace of `m` (rows of length `cols`).
fn nullspace(mut m: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let pivots = rref(&mut m, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -m[r][f].clone();
            }
            v
        })
        .collect()
}

/// Clears denominators, divides by the content, and makes the leading
/// coefficient of `p_0` positive.
fn normalize(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

/// Searches for a recurrence with shifts `0, s, 2s, …, k·s` (`s = stride`),
/// order `k <= max_order` and polynomial degree `<= max_degree`, trying
/// `(k, d)` in lexicographic order. The returned recurrence holds on every
/// supplied term. Every candidate system is overdetermined by at least five
/// equations, otherwise the call is rejected.
pub fn guess_recurrence_strided(
    seq: &[BigInt],
    max_order: usize,
    max_degree: usize,
    stride: usize,
) -> Result<Option<Recurrence>, SeriesError> {
    if stride == 0 {
        return Err(SeriesError::ZeroStride);
    }
    let unknowns = (max_order + 1) * (max_degree + 1);
    let needed = max_order * stride + unknowns + 5;
    if seq.len() < needed {
        return Err(SeriesError::InsufficientData {
            needed,
            got: seq.len(),
        });
    }
    for k in 1..=max_order {
        for d in 0..=max_degree {
            let cols = (k + 1) * (d + 1);
            let rows: Vec<Vec<BigRational>> = (k * stride..seq.len())
                .map(|n| {
                    let mut row = Vec::with_capacity(cols);
                    for i in 0..=k {
                        let a = BigRational::from_integer(seq[n - i * stride].clone());
                        let mut pw = BigRational::one();
                        for _ in 0..=d {
                            row.push(&a * &pw);
                            pw *= q(n as i64);
                        }
                    }
                    row
                })
                .collect();
            let basis = nullspace(rows, cols);
            let Some(v) = basis.iter().find(|v| v[..=d].iter().any(|x| !x.is_zero())) else {
                continue;
            };
            let mut ints = normalize(v);
            let lead = ints[..=d].iter().rev().find(|x| !x.is_zero()).cloned().unwrap_or_else(BigInt::one);
            if lead.is_negative() {
                for x in &mut ints {
                    *x = -x.clone();
                }
            }
            let mut polys = vec![vec![BigInt::zero()]; k * stride + 1];
            for i in 0..=k {
                polys[i * stride] = ints[i * (d + 1)..(i + 1) * (d + 1)].to_vec();
            }
            let rec = Recurrence::new(polys)?;
            if check_recurrence(&rec, seq)? == CheckOutcome::Pass {
                return Ok(Some(rec));
            }
        }
    }
    Ok(None)
}

pub fn guess_recurrence(seq: &[BigInt], max_order: usize, max_degree: usize) -> Result<Option<Recurrence>, SeriesError> {
    guess_recurrence_strided(seq, max_order, max_degree, 1)
}

/// Both sides of `R(z)/(1-z²) = Γ(z/(1+z²))/(1+z²)` through `z^order`, and
/// the first index where they differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CogrowthReport {
    pub order: usize,
    pub lhs: Vec<BigRational>,
    pub rhs: Vec<BigRational>,
    pub first_mismatch: Option<usize>,
}

impl CogrowthReport {
    pub fn passed(&self) -> bool {
        self.first_mismatch.is_none()
    }
}

/// Evaluates the reduced/full cogrowth identity on prefixes of `R` and `Γ`
/// with removal degree 2, the case where only the bumps `x x⁻¹` and `x⁻¹ x`
/// are removed. This reports what the data says; it does not assume the
/// identity holds.
pub fn cogrowth_check(r: &[BigInt], gamma: &[BigInt], order: usize) -> Result<CogrowthReport, SeriesError> {
    cogrowth_check_degree(r, gamma, order, 2)
}

/// General form `R(z)/(1-z²) = Γ(z/(1+(d-1)z²)) / (1+(d-1)z²)`.
pub fn cogrowth_check_degree(
    r: &[BigInt],
    gamma: &[BigInt],
    order: usize,
    degree: i64,
) -> Result<CogrowthReport, SeriesError> {
    let n = order + 1;
    for len in [r.len(), gamma.len()] {
        if len < n {
            return Err(SeriesError::SequenceTooShort { len, order });
        }
    }
    let r_s = TruncatedSeries::from_ints(&r[..n]);
    let g_s = TruncatedSeries::from_ints(&gamma[..n]);
    let one_minus_z2 = TruncatedSeries::monomials(n, &[(0, 1), (2, -1)]);
    let one_plus_z2 = TruncatedSeries::monomials(n, &[(0, 1), (2, degree - 1)]);
    let z = TruncatedSeries::monomials(n, &[(1, 1)]);
    let inv_plus = one_plus_z2.reciprocal()?;
    let lhs = &r_s * &one_minus_z2.reciprocal()?;
    let inner = &z * &inv_plus;
    let rhs = &g_s.compose(&inner)? * &inv_plus;
    let first_mismatch = (0..n).find(|&k| lhs.coeffs[k] != rhs.coeffs[k]);
    Ok(CogrowthReport {
        order,
        lhs: lhs.coeffs,
        rhs: rhs.coeffs,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Catalan numbers from the convolution `C_{n+1} = Σ C_i C_{n-i}`.
    fn catalan(n: usize) -> Vec<BigInt> {
        let mut c = vec![BigInt::one()];
        for m in 0..n - 1 {
            let s = (0..=m).fold(BigInt::zero(), |s, i| s + &c[i] * &c[m - i]);
            c.push(s);
        }
        c
    }

    #[test]
    fn catalan_functional_equation() {
        let c = TruncatedSeries::from_ints(&catalan(20));
        let z = TruncatedSeries::monomials(20, &[(1, 1)]);
        let one = TruncatedSeries::monomials(20, &[(0, 1)]);
        assert_eq!(&one + &(&z * &(&c * &c)), c);
    }

    #[test]
    fn rational_composition() {
        // 1/(1-w) at w = z/(1+z²) equals (1+z²)/(1-z+z²).
        let n = 25;
        let geom = TruncatedSeries::from_ints(&vec![1i64; n]);
        let inner = &TruncatedSeries::monomials(n, &[(1, 1)])
            * &TruncatedSeries::monomials(n, &[(0, 1), (2, 1)]).reciprocal().unwrap();
        let got = geom.compose(&inner).unwrap();
        let want = &TruncatedSeries::monomials(n, &[(0, 1), (2, 1)])
            * &TruncatedSeries::monomials(n, &[(0, 1), (1, -1), (2, 1)]).reciprocal().unwrap();
        assert_eq!(got, want);
        // (1+z²)/(1-z+z²) = (1+z)(1+z²)/(1+z³): period 6 after the constant term.
        let pattern = [0, 1, 1, 0, -1, -1];
        for k in 1..n {
            assert_eq!(got.coeff(k), q(pattern[k % 6]));
        }
    }

    #[test]
    fn compose_needs_zero_constant() {
        let a = TruncatedSeries::from_ints(&[1, 2, 3]);
        let b = TruncatedSeries::from_ints(&[1, 1, 0]);
        assert_eq!(a.compose(&b), Err(SeriesError::NonzeroConstantTerm));
        assert_eq!(
            TruncatedSeries::from_ints(&[0, 1]).reciprocal(),
            Err(SeriesError::ZeroConstantTerm)
        );
    }

    #[test]
    fn recurrence_checks() {
        let cat = Recurrence::from_i64(&[&[1, 1], &[2, -4]]).unwrap();
        assert_eq!(check_recurrence(&cat, &catalan(30)), Ok(CheckOutcome::Pass));
        let ones = Recurrence::from_i64(&[&[1], &[-1]]).unwrap();
        assert_eq!(check_recurrence(&ones, &bi(&[1, 1, 1])), Ok(CheckOutcome::Pass));
        assert_eq!(check_recurrence(&ones, &bi(&[1, 2, 3])), Ok(CheckOutcome::FailsAt(1)));
        assert!(check_recurrence(&ones, &bi(&[1])).is_err());
        assert_eq!(Recurrence::from_i64(&[&[0], &[1]]), Err(SeriesError::ZeroLeading));
    }

    #[test]
    fn guesses_catalan_and_fibonacci() {
        let rec = guess_recurrence(&catalan(30), 1, 1).unwrap().unwrap();
        assert_eq!(rec, Recurrence::from_i64(&[&[1, 1], &[2, -4]]).unwrap());
        let mut fib = bi(&[0, 1]);
        for i in 2..30 {
            let next = &fib[i - 1] + &fib[i - 2];
            fib.push(next);
        }
        let rec = guess_recurrence(&fib, 2, 0).unwrap().unwrap();
        assert_eq!(rec, Recurrence::from_i64(&[&[1], &[-1], &[-1]]).unwrap());
    }

    #[test]
    fn guess_rejects_short_data() {
        assert!(matches!(
            guess_recurrence(&bi(&[1, 2, 3, 4]), 1, 1),
            Err(SeriesError::InsufficientData { .. })
        ));
    }

    #[test]
    fn geometric_extraction() {
        let rec = Recurrence::from_i64(&[&[1], &[0], &[-4]]).unwrap();
        let even = extract_even(&rec, Parity::Even).unwrap();
        assert_eq!(even, Recurrence::from_i64(&[&[1], &[-4]]).unwrap());
        let b: Vec<BigInt> = (0..20).map(|n| BigInt::from(4).pow(n)).collect();
        assert_eq!(check_recurrence(&even, &b), Ok(CheckOutcome::Pass));
        let bad = Recurrence::from_i64(&[&[1], &[1], &[-4]]).unwrap();
        assert_eq!(extract_even(&bad, Parity::Even), Err(SeriesError::OddShift(1)));
    }

    #[test]
    fn affine_substitution() {
        // p(n) = 3 + n², p(2n+1) = 4 + 4n + 4n²
        let p = bi(&[3, 0, 1]);
        assert_eq!(poly_affine(&p, 2, 1), bi(&[4, 4, 4]));
        assert_eq!(poly_affine(&p, 2, 0), bi(&[3, 0, 4]));
    }

    #[test]
    fn parts() {
        let a = TruncatedSeries::from_ints(&[1, 1, 1, 1]);
        assert_eq!(even_part(&a), TruncatedSeries::from_ints(&[1, 1]));
        assert_eq!(odd_part(&a), TruncatedSeries::from_ints(&[1, 1]));
    }

    #[test]
    fn cogrowth_order_two() {
        let rep = cogrowth_check(&bi(&[1, 0, 64]), &bi(&[1, 0, 66]), 2).unwrap();
        assert_eq!(rep.lhs[2], q(65));
        assert_eq!(rep.rhs[2], q(65));
        assert!(rep.passed());
        // Empty alphabet: degree 0.
        let one = bi(&[1, 0, 0, 0, 0, 0, 0, 0, 0]);
        assert!(cogrowth_check_degree(&one, &one, 8, 0).unwrap().passed());
    }

    #[test]
    fn cogrowth_free_cyclic_group() {
        // Z with {x, x⁻¹}: Γ counts central binomials, R = 1.
        let mut gamma = vec![BigInt::zero(); 21];
        let mut binom = BigInt::one();
        for m in 0..=10u32 {
            gamma[2 * m as usize] = binom.clone();
            binom = binom * BigInt::from(2 * (2 * m + 1)) / BigInt::from(m + 1);
        }
        let mut r = vec![BigInt::zero(); 21];
        r[0] = BigInt::one();
        assert!(cogrowth_check(&r, &gamma, 20).unwrap().passed());
        r[4] = BigInt::one();
        assert_eq!(cogrowth_check(&r, &gamma, 20).unwrap().first_mismatch, Some(4));
    }
}
