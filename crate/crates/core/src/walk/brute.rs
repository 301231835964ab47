//! Exhaustive enumeration over letter strings. Independent of the transition
//! tables: words are evaluated with the group law and classified by reading
//! the word itself.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::heis::{Letter, VHElement};

use super::{Column, CountTable, GeneratorSet, RingSpec, WalkError};

pub const BRUTE_FORCE_MAX_LEN: usize = 12;

/// Class of a trivial word: `Some(1|2|3)` for the reduced parts, `None` if
/// the word contains `x x⁻¹` or `x⁻¹ x`.
fn reduced_class(word: &[Letter]) -> Option<usize> {
    for w in word.windows(2) {
        if (w[0] == Letter::X && w[1] == Letter::Xinv) || (w[0] == Letter::Xinv && w[1] == Letter::X) {
            return None;
        }
    }
    let ts = word.iter().filter(|&&l| l == Letter::T).count();
    let tt = word.windows(2).any(|w| w[0] == Letter::T && w[1] == Letter::T);
    Some(match ts {
        0..=4 => 1,
        6 if tt => 1,
        6 => 2,
        _ => 3,
    })
}

/// Columns `c, r, r1, r2, r3` for every length `0..=max_len`, exact.
pub fn brute_force_closed(gens: &GeneratorSet, max_len: usize) -> Result<CountTable, WalkError> {
    if max_len > BRUTE_FORCE_MAX_LEN {
        return Err(WalkError::BruteForceTooLong {
            requested: max_len,
            cap: BRUTE_FORCE_MAX_LEN,
        });
    }
    let letters: Vec<(Letter, u32, VHElement)> = gens
        .letters()
        .iter()
        .map(|&(l, w)| (l, w, l.element()))
        .collect();
    // acc[col][len], columns c, r, r1, r2, r3
    let mut acc = vec![vec![0u128; max_len + 1]; 5];
    let mut word: Vec<Letter> = Vec::with_capacity(max_len);
    let mut stack: Vec<(VHElement, u128)> = vec![(VHElement::identity(), 1)];
    visit(&letters, max_len, &mut word, &mut stack, &mut acc);

    let columns = acc
        .into_iter()
        .map(|col| Column::Int(col.into_iter().map(BigUint::from).collect()))
        .collect();
    Ok(CountTable {
        ring: RingSpec::Exact,
        names: vec!["c", "r", "r1", "r2", "r3"],
        columns,
    })
}

fn visit(
    letters: &[(Letter, u32, VHElement)],
    max_len: usize,
    word: &mut Vec<Letter>,
    stack: &mut Vec<(VHElement, u128)>,
    acc: &mut [Vec<u128>],
) {
    let (g, weight) = stack.last().cloned().expect("stack holds the current prefix");
    let len = word.len();
    if g.is_identity() {
        acc[0][len] += weight;
        if let Some(class) = reduced_class(word) {
            acc[1][len] += weight;
            acc[1 + class][len] += weight;
        }
    }
    if len == max_len {
        return;
    }
    for (l, w, e) in letters {
        word.push(*l);
        stack.push((g.mul(e), weight * u128::from(*w)));
        visit(letters, max_len, word, stack, acc);
        stack.pop();
        word.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes() {
        use Letter::*;
        assert_eq!(reduced_class(&[X, Xinv]), None);
        assert_eq!(reduced_class(&[T, T]), Some(1));
        assert_eq!(reduced_class(&[T, X, T, X, T, X, T, X, T, X, T]), Some(2));
        assert_eq!(reduced_class(&[T, T, X, T, X, T, X, T, X, T]), Some(1));
        assert_eq!(reduced_class(&[T; 8]), Some(3));
    }

    #[test]
    fn tiny_lengths() {
        let t = brute_force_closed(&GeneratorSet::vh_standard(), 4).unwrap();
        let get = |n: &str, l: usize| t.int(n).unwrap()[l].clone();
        for (n, v) in [("c", 1u32), ("r", 1), ("r1", 1), ("r2", 0), ("r3", 0)] {
            assert_eq!(get(n, 0), BigUint::from(v));
            assert_eq!(get(n, 1), BigUint::from(0u32));
        }
        assert_eq!(get("c", 2), BigUint::from(66u32));
        assert_eq!(get("c", 4), BigUint::from(4614u32));
        assert_eq!(get("r", 4), BigUint::from(4224u32));
    }

    #[test]
    fn cap() {
        assert!(brute_force_closed(&GeneratorSet::vh_standard(), 13).is_err());
    }
}
