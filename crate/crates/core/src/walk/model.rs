//! Finite transition tables driving the enumeration: a walk state is a
//! Heisenberg position `(a, b, c)` plus a small "mode" that carries the flip
//! bit and whatever word statistics a count needs.

use alloc::vec;
use alloc::vec::Vec;

use crate::heis::Letter;

use super::{GeneratorSet, Group};

/// Effect of one letter on `(a, b, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Move {
    APlus,
    AMinus,
    /// `b += 1, c += a`
    BPlus,
    /// `b -= 1, c -= a`
    BMinus,
    Stay,
}

impl Move {
    #[inline]
    pub fn apply(self, a: i64, b: i64, c: i64) -> (i64, i64, i64) {
        match self {
            Move::APlus => (a + 1, b, c),
            Move::AMinus => (a - 1, b, c),
            Move::BPlus => (a, b + 1, c + a),
            Move::BMinus => (a, b - 1, c - a),
            Move::Stay => (a, b, c),
        }
    }

    /// Move of a letter read while the flip bit is `eps`.
    pub fn of_letter(l: Letter, eps: bool) -> Move {
        match (l, eps) {
            (Letter::X, false) | (Letter::Y, true) => Move::APlus,
            (Letter::Xinv, false) | (Letter::Yinv, true) => Move::AMinus,
            (Letter::Y, false) | (Letter::X, true) => Move::BPlus,
            (Letter::Yinv, false) | (Letter::Xinv, true) => Move::BMinus,
            (Letter::T, _) | (Letter::E, _) => Move::Stay,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Model {
    pub n_modes: usize,
    pub weights: Vec<u32>,
    /// Indexed by `mode * weights.len() + letter`; `None` forbids the letter.
    pub trans: Vec<Option<(u16, Move)>>,
    pub initial: u16,
    /// Output column a closed walk ending in this mode is counted in, if any.
    /// Only modes with flip bit 0 are ever classified.
    pub classify: Vec<Option<u8>>,
    pub columns: Vec<&'static str>,
}

impl Model {
    #[inline]
    pub fn transition(&self, mode: usize, letter: usize) -> Option<(u16, Move)> {
        self.trans[mode * self.weights.len() + letter]
    }

    /// All words over the generating multiset; one output column `c`.
    pub fn plain(gens: &GeneratorSet) -> Model {
        let n_modes = match gens.group() {
            Group::VH => 2,
            Group::H3 => 1,
        };
        let letters = gens.letters();
        let mut trans = Vec::with_capacity(n_modes * letters.len());
        for mode in 0..n_modes {
            let eps = mode == 1;
            for &(l, _) in letters {
                let next = if l == Letter::T { mode ^ 1 } else { mode };
                trans.push(Some((next as u16, Move::of_letter(l, eps))));
            }
        }
        let mut classify = vec![None; n_modes];
        classify[0] = Some(0);
        Model {
            n_modes,
            weights: letters.iter().map(|&(_, w)| w).collect(),
            trans,
            initial: 0,
            classify,
            columns: vec!["c"],
        }
    }

    /// Reduced words (no `x x⁻¹`, no `x⁻¹ x`) split by their `t` statistics
    /// into the columns `r1`, `r2`, `r3`.
    pub fn reduced_split(gens: &GeneratorSet) -> Model {
        let letters = gens.letters();
        let mut states: Vec<TStat> = vec![TStat::START];
        let mut trans = Vec::new();
        let mut i = 0;
        while i < states.len() {
            let s = states[i];
            for &(l, _) in letters {
                let entry = s.next(l).map(|n| {
                    let idx = match states.iter().position(|&t| t == n) {
                        Some(p) => p,
                        None => {
                            states.push(n);
                            states.len() - 1
                        }
                    };
                    (idx as u16, Move::of_letter(l, s.eps))
                });
                trans.push(entry);
            }
            i += 1;
        }
        let classify = states.iter().map(|s| s.class()).collect();
        Model {
            n_modes: states.len(),
            weights: letters.iter().map(|&(_, w)| w).collect(),
            trans,
            initial: 0,
            classify,
            columns: vec!["r1", "r2", "r3"],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Prev {
    None,
    X,
    Xinv,
    T,
}

/// Word statistics for the reduced split. `t_count` saturates at 8; once it
/// reaches 7 the `tt` flag can no longer influence the class and is dropped.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TStat {
    eps: bool,
    t_count: u8,
    has_tt: bool,
    prev: Prev,
}

impl TStat {
    const START: TStat = TStat {
        eps: false,
        t_count: 0,
        has_tt: false,
        prev: Prev::None,
    };

    fn next(self, l: Letter) -> Option<TStat> {
        let mut n = self;
        match l {
            Letter::X => {
                if self.prev == Prev::Xinv {
                    return None;
                }
                n.prev = Prev::X;
            }
            Letter::Xinv => {
                if self.prev == Prev::X {
                    return None;
                }
                n.prev = Prev::Xinv;
            }
            Letter::T => {
                n.eps = !self.eps;
                n.t_count = (self.t_count + 1).min(8);
                n.has_tt = self.has_tt || self.prev == Prev::T;
                n.prev = Prev::T;
            }
            _ => return None,
        }
        if n.t_count >= 7 {
            n.has_tt = false;
        }
        Some(n)
    }

    fn class(self) -> Option<u8> {
        if self.eps {
            return None;
        }
        match self.t_count {
            0 | 2 | 4 => Some(0),
            6 if self.has_tt => Some(0),
            6 => Some(1),
            8 => Some(2),
            _ => None,
        }
    }
}
