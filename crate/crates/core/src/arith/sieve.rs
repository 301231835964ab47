//! Square-divisor sieves over ranges of `n`.
//!
//! Walking `d` upward and stamping every multiple of `d²` leaves, at each
//! `n`, the last (largest) `d` with `d² | n`, which is `m(n)`. Restricting to
//! odd `d` gives `m` of the odd part instead. Ranges are cut into segments
//! of [`SEGMENT`] entries.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;

use crate::walk::Executor;

pub const SEGMENT: u64 = 1 << 24;

pub(crate) fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}

fn stamp<T: Copy>(lo: u64, hi: u64, odd_only: bool, init: T, of: impl Fn(u64) -> T) -> Vec<T> {
    assert!(lo >= 1 && lo <= hi);
    let mut out = vec![init; (hi - lo) as usize];
    if hi == lo {
        return out;
    }
    let (first, step) = if odd_only { (3, 2) } else { (2, 1) };
    let top = isqrt(hi - 1);
    let mut d = first;
    while d <= top {
        let sq = d * d;
        let v = of(d);
        let mut n = lo.div_ceil(sq) * sq;
        while n < hi {
            out[(n - lo) as usize] = v;
            n += sq;
        }
        d += step;
    }
    out
}

/// `m(n)` for `n` in `lo..hi`, `lo >= 1`.
pub fn m_segment(lo: u64, hi: u64) -> Vec<u32> {
    stamp(lo, hi, false, 1u32, |d| d as u32)
}

/// `f(n)` for `n` in `lo..hi`, `lo >= 1`.
pub fn f_segment(lo: u64, hi: u64) -> Vec<i8> {
    stamp(lo, hi, true, 1i8, |d| if d % 4 == 1 { 1 } else { -1 })
}

/// `f(1), f(2), …` produced one segment at a time.
#[derive(Debug, Clone)]
pub struct FSequence {
    next: u64,
    buf: Vec<i8>,
    pos: usize,
}

impl FSequence {
    pub fn new() -> Self {
        Self::starting_at(1)
    }

    pub fn starting_at(n: u64) -> Self {
        assert!(n >= 1);
        FSequence {
            next: n,
            buf: Vec::new(),
            pos: 0,
        }
    }
}

impl Default for FSequence {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for FSequence {
    type Item = i8;

    fn next(&mut self) -> Option<i8> {
        if self.pos == self.buf.len() {
            let hi = self.next.checked_add(SEGMENT)?;
            self.buf = f_segment(self.next, hi);
            self.next = hi;
            self.pos = 0;
        }
        self.pos += 1;
        Some(self.buf[self.pos - 1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityScan {
    pub x: u64,
    /// `#{n <= x : m(n) ≡ 1 (mod 4)}`
    pub count: u64,
    pub density: f64,
}

fn count_segment(lo: u64, hi: u64) -> u64 {
    stamp(lo, hi, false, 1u8, |d| (d % 4) as u8)
        .iter()
        .filter(|&&r| r == 1)
        .count() as u64
}

pub fn density_scan(x: u64) -> DensityScan {
    density_scan_with(x, &crate::walk::Serial)
}

/// Segments are counted independently and summed in order.
pub fn density_scan_with(x: u64, exec: &dyn Executor) -> DensityScan {
    assert!(x >= 1);
    let starts: Vec<u64> = (0..).map(|i| 1 + i * SEGMENT).take_while(|&lo| lo <= x).collect();
    let mut counts = vec![0u64; starts.len()];
    let tasks: Vec<Box<dyn FnOnce() + Send + '_>> = starts
        .iter()
        .zip(counts.iter_mut())
        .map(|(&lo, slot)| {
            let hi = (lo + SEGMENT).min(x + 1);
            Box::new(move || *slot = count_segment(lo, hi)) as Box<dyn FnOnce() + Send>
        })
        .collect();
    exec.execute(tasks);
    let count = counts.iter().sum();
    DensityScan {
        x,
        count,
        density: count as f64 / x as f64,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots() {
        for n in [0u64, 1, 3, 4, 15, 16, 17, u64::MAX] {
            let r = isqrt(n);
            assert!(r * r <= n);
            assert!((r + 1).checked_mul(r + 1).is_none_or(|s| s > n));
        }
    }

    #[test]
    fn segments_agree_with_direct_values() {
        let m = m_segment(1, 101);
        assert_eq!(m[71], 6);
        assert_eq!(m[8], 3);
        assert_eq!(m[99], 10);
        let f = f_segment(1, 37);
        assert_eq!(f[8], -1); // f(9)
        assert_eq!(f[17], -1); // f(18)
        assert_eq!(f[35], -1); // f(36)
        assert_eq!(f[24], 1); // f(25)
    }

    #[test]
    fn sequence_crosses_segment_boundary() {
        let seq: Vec<i8> = FSequence::starting_at(SEGMENT - 2).take(5).collect();
        assert_eq!(seq, f_segment(SEGMENT - 2, SEGMENT + 3));
    }

    #[test]
    fn tiny_densities() {
        assert_eq!(density_scan(1).count, 1);
        assert_eq!(density_scan(10).count, 7);
    }
}
