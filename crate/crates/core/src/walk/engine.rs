//! Level-by-level relaxation of walk counts.
//!
//! Level `k` holds, for every admissible state `(a, b, c, mode)`, the weighted
//! number of length-`k` words reaching it. When pruning is on, a state is
//! admissible only if it can still return to the identity within the
//! remaining `target - k` steps:
//!
//! * `|a| + |b| <= r`, since every step moves `a` or `b` by at most one;
//! * `|c| <= r·|a| + r²/2`, since only `b`-moves change `c`, each by the
//!   current `a`, and `|a|` grows by at most one per step.
//!
//! Both tests are monotone in `r`, so a run pruned for `target` still gives
//! exact counts for every shorter length.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::model::Model;
use super::ring::Ring;
use super::{Executor, Storage, WalkError, WalkOptions};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Bounds {
    pub target: i64,
    pub pruning: bool,
}

impl Bounds {
    #[inline]
    pub fn admissible(&self, k: i64, a: i64, b: i64, c: i64) -> bool {
        let ab = a.abs() + b.abs();
        if ab > k || c.abs() > k * k / 4 {
            return false;
        }
        if self.pruning {
            let r = self.target - k;
            if ab > r || c.abs() > r * a.abs() + r * r / 2 {
                return false;
            }
        }
        true
    }

    pub fn layout(&self, k: i64, n_modes: usize) -> Layout {
        let (a, c) = if self.pruning {
            let r = self.target - k;
            let a = k.min(r);
            (a, (k * k / 4).min(r * a + r * r / 2))
        } else {
            (k, k * k / 4)
        };
        Layout {
            a_max: a,
            c_max: c,
            nm: n_modes,
        }
    }
}

/// Dense box `[-a_max, a_max]² × [-c_max, c_max] × modes`, `a` outermost.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Layout {
    pub a_max: i64,
    pub c_max: i64,
    pub nm: usize,
}

impl Layout {
    fn nb(&self) -> usize {
        (2 * self.a_max + 1) as usize
    }
    fn nc(&self) -> usize {
        (2 * self.c_max + 1) as usize
    }
    pub fn row_len(&self) -> usize {
        self.nb() * self.nc() * self.nm
    }
    pub fn len(&self) -> usize {
        self.nb() * self.row_len()
    }
    #[inline]
    pub fn index(&self, a: i64, b: i64, c: i64, m: usize) -> usize {
        ((((a + self.a_max) as usize * self.nb() + (b + self.a_max) as usize) * self.nc())
            + (c + self.c_max) as usize)
            * self.nm
            + m
    }
}

/// Per-length sums of the identity states, one vector per model column.
pub(crate) type Closed<E> = Vec<Vec<E>>;

pub(crate) fn dense_bytes(model: &Model, bounds: Bounds, elem_bytes: usize) -> u128 {
    let mut worst = 0u128;
    for k in 0..bounds.target {
        let here = bounds.layout(k, model.n_modes).len() as u128;
        let next = bounds.layout(k + 1, model.n_modes).len() as u128;
        worst = worst.max((here + next) * elem_bytes as u128);
    }
    worst.max(elem_bytes as u128)
}

pub(crate) fn run<R: Ring>(
    model: &Model,
    ring: &R,
    max_len: usize,
    opts: &WalkOptions,
    exec: &dyn Executor,
) -> Result<Closed<R::Elem>, WalkError> {
    let bounds = Bounds {
        target: max_len as i64,
        pruning: opts.pruning,
    };
    let dense = dense_bytes(model, bounds, ring.elem_bytes());
    let use_dense = match opts.storage {
        Storage::Dense => {
            if dense > u128::from(opts.memory_budget) {
                return Err(WalkError::Capacity {
                    needed: dense.min(u128::from(u64::MAX)) as u64,
                    budget: opts.memory_budget,
                });
            }
            true
        }
        Storage::Sparse => false,
        Storage::Auto => dense <= u128::from(opts.memory_budget),
    };
    if use_dense {
        Ok(run_dense(model, ring, bounds, exec))
    } else {
        run_sparse(model, ring, bounds, opts.memory_budget)
    }
}

fn collect_closed<R: Ring>(
    model: &Model,
    ring: &R,
    out: &mut Closed<R::Elem>,
    mut lookup: impl FnMut(usize) -> Option<R::Elem>,
) {
    let mut sums = vec![ring.zero(); model.columns.len()];
    for m in 0..model.n_modes {
        if let Some(col) = model.classify[m] {
            if let Some(x) = lookup(m) {
                ring.add(&mut sums[col as usize], &x);
            }
        }
    }
    for (col, s) in out.iter_mut().zip(sums) {
        col.push(s);
    }
}

fn run_dense<R: Ring>(model: &Model, ring: &R, bounds: Bounds, exec: &dyn Executor) -> Closed<R::Elem> {
    let mut out: Closed<R::Elem> = vec![Vec::new(); model.columns.len()];
    let mut layout = bounds.layout(0, model.n_modes);
    let mut level = vec![ring.zero(); layout.len()];
    level[layout.index(0, 0, 0, model.initial as usize)] = ring.one();
    collect_closed(model, ring, &mut out, |m| Some(level[layout.index(0, 0, 0, m)].clone()));

    for k in 1..=bounds.target {
        let next_layout = bounds.layout(k, model.n_modes);
        let mut next = vec![ring.zero(); next_layout.len()];
        {
            let row = next_layout.row_len();
            let rows = next_layout.nb();
            let shards = exec.workers().max(1).min(rows);
            let per = rows.div_ceil(shards);
            let src = &level;
            let mut tasks: Vec<Box<dyn FnOnce() + Send + '_>> = Vec::with_capacity(shards);
            for (s, slab) in next.chunks_mut(per * row).enumerate() {
                let a_lo = -next_layout.a_max + (s * per) as i64;
                let a_hi = a_lo + (slab.len() / row) as i64 - 1;
                let lin = layout;
                tasks.push(Box::new(move || {
                    relax_slab(model, ring, bounds, k, lin, src, next_layout, a_lo, a_hi, slab)
                }));
            }
            exec.execute(tasks);
        }
        layout = next_layout;
        level = next;
        collect_closed(model, ring, &mut out, |m| Some(level[layout.index(0, 0, 0, m)].clone()));
    }
    out
}

/// Pushes level `k - 1` into the output rows `a_lo..=a_hi` of level `k`.
/// Inputs are visited in a fixed global order, so each output accumulates its
/// contributions in the same order however the rows are sharded.
#[allow(clippy::too_many_arguments)]
fn relax_slab<R: Ring>(
    model: &Model,
    ring: &R,
    bounds: Bounds,
    k: i64,
    lin: Layout,
    src: &[R::Elem],
    lout: Layout,
    a_lo: i64,
    a_hi: i64,
    slab: &mut [R::Elem],
) {
    let offset = lout.index(a_lo, -lout.a_max, -lout.c_max, 0);
    let nl = model.weights.len();
    let k_in = k - 1;
    for a in (a_lo - 1).max(-lin.a_max)..=(a_hi + 1).min(lin.a_max) {
        let b_span = lin.a_max.min(k_in - a.abs());
        for b in -b_span..=b_span {
            for c in -lin.c_max..=lin.c_max {
                let base = lin.index(a, b, c, 0);
                for m in 0..lin.nm {
                    let x = &src[base + m];
                    if ring.is_zero(x) {
                        continue;
                    }
                    for l in 0..nl {
                        let Some((m2, mv)) = model.trans[m * nl + l] else {
                            continue;
                        };
                        let (a2, b2, c2) = mv.apply(a, b, c);
                        if a2 < a_lo || a2 > a_hi || !bounds.admissible(k, a2, b2, c2) {
                            continue;
                        }
                        let idx = lout.index(a2, b2, c2, m2 as usize) - offset;
                        ring.add_step(&mut slab[idx], x, model.weights[l]);
                    }
                }
            }
        }
    }
}

type Key = (i64, i64, i64, u16);

fn run_sparse<R: Ring>(
    model: &Model,
    ring: &R,
    bounds: Bounds,
    budget: u64,
) -> Result<Closed<R::Elem>, WalkError> {
    // Node overhead of a B-tree entry is a rough guess; it only gates the cap.
    let entry_bytes = (core::mem::size_of::<Key>() + ring.elem_bytes() + 16) as u64;
    let cap = (budget / entry_bytes.max(1)) as usize;
    let mut out: Closed<R::Elem> = vec![Vec::new(); model.columns.len()];
    let mut level: BTreeMap<Key, R::Elem> = BTreeMap::new();
    level.insert((0, 0, 0, model.initial), ring.one());
    collect_closed(model, ring, &mut out, |m| level.get(&(0, 0, 0, m as u16)).cloned());
    let nl = model.weights.len();
    for k in 1..=bounds.target {
        let mut next: BTreeMap<Key, R::Elem> = BTreeMap::new();
        for (&(a, b, c, m), x) in &level {
            for l in 0..nl {
                let Some((m2, mv)) = model.trans[m as usize * nl + l] else {
                    continue;
                };
                let (a2, b2, c2) = mv.apply(a, b, c);
                if !bounds.admissible(k, a2, b2, c2) {
                    continue;
                }
                let slot = next.entry((a2, b2, c2, m2)).or_insert_with(|| ring.zero());
                ring.add_step(slot, x, model.weights[l]);
            }
            if next.len() + level.len() > cap {
                return Err(WalkError::Capacity {
                    needed: (next.len() + level.len()) as u64 * entry_bytes,
                    budget,
                });
            }
        }
        level = next;
        collect_closed(model, ring, &mut out, |m| level.get(&(0, 0, 0, m as u16)).cloned());
    }
    Ok(out)
}
