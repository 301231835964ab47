//! Arithmetic in the discrete Heisenberg group `H3(Z)` and in the semidirect
//! product `vH = H3(Z) ⋊ C2`, where the generator `t` swaps `x` and `y`.
//!
//! Elements of `H3(Z)` are stored as the coordinates `(a, b, c)` of the upper
//! unitriangular matrix
//!
//! ```text
//! | 1 a c |
//! | 0 1 b |
//! | 0 0 1 |
//! ```
//!
//! so `x = (1,0,0)`, `y = (0,1,0)` and appending `y` to a word adds the
//! current `a` to `c`.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct HeisElement {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
}

impl HeisElement {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        HeisElement {
            a: a.into(),
            b: b.into(),
            c: c.into(),
        }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn x() -> Self {
        Self::new(1, 0, 0)
    }

    pub fn y() -> Self {
        Self::new(0, 1, 0)
    }

    /// The central generator `[x, y] = x y x⁻¹ y⁻¹`.
    pub fn z() -> Self {
        Self::new(0, 0, 1)
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero()
    }

    pub fn mul(&self, rhs: &HeisElement) -> HeisElement {
        HeisElement {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c + &self.a * &rhs.b,
        }
    }

    pub fn inverse(&self) -> HeisElement {
        HeisElement {
            a: -&self.a,
            b: -&self.b,
            c: &self.a * &self.b - &self.c,
        }
    }

    /// Conjugation by `t`: the automorphism exchanging `x` and `y`.
    pub fn flip(&self) -> HeisElement {
        HeisElement {
            a: self.b.clone(),
            b: self.a.clone(),
            c: &self.a * &self.b - &self.c,
        }
    }

    fn flip_if(&self, eps: bool) -> HeisElement {
        if eps {
            self.flip()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for HeisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.c)
    }
}

pub fn heis_mul(h1: &HeisElement, h2: &HeisElement) -> HeisElement {
    h1.mul(h2)
}

pub fn flip(h: &HeisElement) -> HeisElement {
    h.flip()
}

/// An element `(h, ε)` of `vH`; `eps = true` means the `t`-coset.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct VHElement {
    pub h: HeisElement,
    pub eps: bool,
}

impl VHElement {
    pub fn new(h: HeisElement, eps: bool) -> Self {
        VHElement { h, eps }
    }

    pub fn identity() -> Self {
        Self::default()
    }

    pub fn t() -> Self {
        VHElement {
            h: HeisElement::identity(),
            eps: true,
        }
    }

    pub fn is_identity(&self) -> bool {
        !self.eps && self.h.is_identity()
    }

    pub fn mul(&self, rhs: &VHElement) -> VHElement {
        VHElement {
            h: self.h.mul(&rhs.h.flip_if(self.eps)),
            eps: self.eps ^ rhs.eps,
        }
    }

    pub fn inverse(&self) -> VHElement {
        // (h, 1)⁻¹ = (flip(h⁻¹), 1) since (h,1)(flip(h⁻¹),1) = (h·h⁻¹, 0).
        VHElement {
            h: self.h.inverse().flip_if(self.eps),
            eps: self.eps,
        }
    }
}

impl fmt::Display for VHElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.h, u8::from(self.eps))
    }
}

pub fn vh_mul(g1: &VHElement, g2: &VHElement) -> VHElement {
    g1.mul(g2)
}

/// Generators of both alphabets. `E` is the identity letter of the lazy walk.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Xinv,
    Y,
    Yinv,
    T,
    E,
}

impl Letter {
    pub const VH_ALPHABET: [Letter; 3] = [Letter::X, Letter::Xinv, Letter::T];
    pub const H3_LAZY_ALPHABET: [Letter; 5] =
        [Letter::X, Letter::Xinv, Letter::Y, Letter::Yinv, Letter::E];

    pub fn element(self) -> VHElement {
        let h = match self {
            Letter::X => HeisElement::new(1, 0, 0),
            Letter::Xinv => HeisElement::new(-1, 0, 0),
            Letter::Y => HeisElement::new(0, 1, 0),
            Letter::Yinv => HeisElement::new(0, -1, 0),
            Letter::T | Letter::E => HeisElement::identity(),
        };
        VHElement::new(h, self == Letter::T)
    }

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::Xinv,
            Letter::Xinv => Letter::X,
            Letter::Y => Letter::Yinv,
            Letter::Yinv => Letter::Y,
            Letter::T => Letter::T,
            Letter::E => Letter::E,
        }
    }

    /// Unit displacement of the letter in the plane, ignoring the flip mode.
    pub fn step(self) -> (i64, i64) {
        match self {
            Letter::X => (1, 0),
            Letter::Xinv => (-1, 0),
            Letter::Y => (0, 1),
            Letter::Yinv => (0, -1),
            Letter::T | Letter::E => (0, 0),
        }
    }

    fn symbol(self) -> (&'static str, i32) {
        match self {
            Letter::X => ("x", 1),
            Letter::Xinv => ("x", -1),
            Letter::Y => ("y", 1),
            Letter::Yinv => ("y", -1),
            Letter::T => ("t", 1),
            Letter::E => ("e", 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WordParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("malformed exponent at byte {0}")]
    BadExponent(usize),
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn is_vh_word(&self) -> bool {
        self.0.iter().all(|l| Letter::VH_ALPHABET.contains(l))
    }

    pub fn is_h3_word(&self) -> bool {
        self.0.iter().all(|l| Letter::H3_LAZY_ALPHABET.contains(l))
    }
}

/// Parses words such as `x^2 y^-1 t x` or `xXyY` (upper case is the inverse).
/// Whitespace and `*` or `.` separators are ignored; `1` is the empty word.
impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim() == "1" {
            return Ok(Word(Vec::new()));
        }
        let bytes = s.as_bytes();
        let mut out = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let ch = bytes[i] as char;
            i += 1;
            let (base, inv) = match ch {
                ' ' | '\t' | '\n' | '*' | '.' | ',' => continue,
                'x' => (Letter::X, Letter::Xinv),
                'X' => (Letter::Xinv, Letter::X),
                'y' => (Letter::Y, Letter::Yinv),
                'Y' => (Letter::Yinv, Letter::Y),
                't' | 'T' => (Letter::T, Letter::T),
                'e' | 'E' => (Letter::E, Letter::E),
                other => return Err(WordParseError::UnexpectedChar(other, i - 1)),
            };
            let mut power: i64 = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                let start = i;
                i += 1;
                let neg = i < bytes.len() && bytes[i] == b'-';
                if neg {
                    i += 1;
                }
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if digits_start == i {
                    return Err(WordParseError::BadExponent(start));
                }
                power = s[digits_start..i]
                    .parse::<i64>()
                    .map_err(|_| WordParseError::BadExponent(start))?;
                if neg {
                    power = -power;
                }
            }
            let letter = if power < 0 { inv } else { base };
            for _ in 0..power.unsigned_abs() {
                out.push(letter);
            }
        }
        Ok(Word(out))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let (sym, sign) = l.symbol();
            let run = (j - i) as i64 * i64::from(sign);
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            if run == 1 {
                f.write_str(sym)?;
            } else {
                write!(f, "{sym}^{run}")?;
            }
            i = j;
        }
        Ok(())
    }
}

pub fn eval_word(w: &Word) -> VHElement {
    w.0.iter()
        .fold(VHElement::identity(), |acc, l| acc.mul(&l.element()))
}

/// 3×3 integer matrix, row-major.
pub type Mat3 = [[BigInt; 3]; 3];

fn mat_from(rows: [[i64; 3]; 3]) -> Mat3 {
    rows.map(|r| r.map(BigInt::from))
}

pub fn mat_identity() -> Mat3 {
    mat_from([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
}

pub fn mat_mul(p: &Mat3, q: &Mat3) -> Mat3 {
    core::array::from_fn(|i| {
        core::array::from_fn(|j| (0..3).fold(BigInt::zero(), |s, k| s + &p[i][k] * &q[k][j]))
    })
}

fn mat_pow(m: &Mat3, inv: &Mat3, e: &BigInt) -> Mat3 {
    let (base, mut n) = if e.sign() == num_bigint::Sign::Minus {
        (inv.clone(), -e)
    } else {
        (m.clone(), e.clone())
    };
    let mut acc = mat_identity();
    let mut sq = base;
    let two = BigInt::from(2);
    while !n.is_zero() {
        if (&n % &two).is_one() {
            acc = mat_mul(&acc, &sq);
        }
        sq = mat_mul(&sq, &sq);
        n /= &two;
    }
    acc
}

/// Images of the generators in `SL3(Z)`.
pub fn sl3_image(l: Letter) -> Mat3 {
    match l {
        Letter::X => mat_from([[1, 1, 0], [0, 1, 1], [0, 0, 1]]),
        Letter::Xinv => mat_from([[1, -1, 1], [0, 1, -1], [0, 0, 1]]),
        Letter::Y => mat_from([[1, 1, 0], [0, 1, -1], [0, 0, 1]]),
        Letter::Yinv => mat_from([[1, -1, -1], [0, 1, 1], [0, 0, 1]]),
        Letter::T => mat_from([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
        Letter::E => mat_identity(),
    }
}

/// Matrix of an element through the normal form `x^a y^b [x,y]^(c-ab) t^ε`.
pub fn sl3_of_element(g: &VHElement) -> Mat3 {
    let x = sl3_image(Letter::X);
    let xi = sl3_image(Letter::Xinv);
    let y = sl3_image(Letter::Y);
    let yi = sl3_image(Letter::Yinv);
    let z = mat_mul(&mat_mul(&x, &y), &mat_mul(&xi, &yi));
    let zi = mat_mul(&mat_mul(&y, &x), &mat_mul(&yi, &xi));
    let k = &g.h.c - &g.h.a * &g.h.b;
    let mut m = mat_mul(&mat_pow(&x, &xi, &g.h.a), &mat_pow(&y, &yi, &g.h.b));
    m = mat_mul(&m, &mat_pow(&z, &zi, &k));
    if g.eps {
        m = mat_mul(&m, &sl3_image(Letter::T));
    }
    m
}

/// Evaluates `w` through the group law and through direct matrix products,
/// and reports whether both routes land on the same matrix.
pub fn sl3_check(w: &Word) -> bool {
    let direct = w
        .0
        .iter()
        .fold(mat_identity(), |acc, &l| mat_mul(&acc, &sl3_image(l)));
    direct == sl3_of_element(&eval_word(w))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const TEN_SEGMENT_WORD: &str = "x^2 y^4 x^4 y^-2 x^-2 y^6 x^-2 y^-3 x^6 y^4";

    #[test]
    fn unit_product() {
        assert_eq!(
            heis_mul(&HeisElement::x(), &HeisElement::y()),
            HeisElement::new(1, 1, 1)
        );
    }

    #[test]
    fn inverse_law() {
        let h = HeisElement::new(3, -7, 11);
        assert!(h.mul(&h.inverse()).is_identity());
        assert_eq!(h.inverse(), HeisElement::new(-3, 7, -21 - 11));
    }

    #[test]
    fn flip_values() {
        assert_eq!(flip(&HeisElement::x()), HeisElement::y());
        assert_eq!(flip(&HeisElement::z()), HeisElement::new(0, 0, -1));
    }

    #[test]
    fn commutator_is_z() {
        let w: Word = "x y X Y".parse().unwrap();
        assert_eq!(eval_word(&w), VHElement::new(HeisElement::z(), false));
    }

    #[test]
    fn presentation_relations() {
        let txt: Word = "t x t".parse().unwrap();
        assert_eq!(eval_word(&txt), VHElement::new(HeisElement::y(), false));
        let tt: Word = "t t".parse().unwrap();
        assert!(eval_word(&tt).is_identity());
        assert!(eval_word(&Word::default()).is_identity());
    }

    #[test]
    fn ten_segment_word() {
        let w: Word = TEN_SEGMENT_WORD.parse().unwrap();
        assert_eq!(w.len(), 35);
        assert_eq!(eval_word(&w), VHElement::new(HeisElement::new(8, 9, 46), false));
    }

    #[test]
    fn parse_and_display() {
        let w: Word = "x^3 X t y^-2 e".parse().unwrap();
        assert_eq!(
            w.0,
            vec![
                Letter::X,
                Letter::X,
                Letter::X,
                Letter::Xinv,
                Letter::T,
                Letter::Yinv,
                Letter::Yinv,
                Letter::E
            ]
        );
        assert_eq!(alloc::format!("{w}"), "x^3 x^-1 t y^-2 e");
        assert!("x^".parse::<Word>().is_err());
        assert!("q".parse::<Word>().is_err());
    }

    #[test]
    fn sl3_examples() {
        assert!(sl3_check(&"t x t".parse().unwrap()));
        assert!(sl3_check(&Word::default()));
        assert_eq!(
            mat_mul(&sl3_image(Letter::X), &sl3_image(Letter::Xinv)),
            mat_identity()
        );
        assert_eq!(
            mat_mul(&sl3_image(Letter::Y), &sl3_image(Letter::Yinv)),
            mat_identity()
        );
    }

    #[test]
    fn vh_inverse() {
        let w: Word = "x t x x t X t".parse().unwrap();
        let g = eval_word(&w);
        assert!(g.mul(&g.inverse()).is_identity());
        assert!(g.inverse().mul(&g).is_identity());
    }
}
