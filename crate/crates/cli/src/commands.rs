//! One function per subcommand, each returning an [`Output`].

use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use cogrowth_core::arith::{
    self, density_scan_with, f_segment, f_sign_big, factorize_big, gauss_identity_check, odd_part_residue_sign,
    qf_scan, GaussOutcome,
};
use cogrowth_core::dioph::{self, AbccMethod, OrbitType, R2Reading};
use cogrowth_core::heis::{eval_word, Word};
use cogrowth_core::path::{algebraic_area, winding_grid, word_to_path};
use cogrowth_core::series::{
    check_recurrence, cogrowth_check, extract_even, guess_recurrence_strided, CheckOutcome, Parity, Recurrence,
};
use cogrowth_core::subword::{
    complexity_profile, crt_witness, saturation_scan_with, signs_from_bits, verify_certificate, Construction,
    SubwordError, WitnessCertificate, WitnessOptions,
};
use cogrowth_core::theorem::miracle_rows;
use cogrowth_core::walk::{
    count_closed, count_reduced_split, CountTable, Executor, GeneratorSet, RingSpec, WalkError, WalkOptions,
};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::args::*;
use crate::cache::{count_table_to_table, load_or_compute, CacheKey};
use crate::pool::ThreadPool;
use crate::table::{Cell, Output, Table};

/// Everything a command needs besides its own arguments.
pub struct Ctx {
    pub pool: ThreadPool,
    pub walk: WalkOptions,
    pub cache_dir: Option<PathBuf>,
    pub seed: u64,
}

impl Ctx {
    fn capacity_check(&self, needed: u64) -> Result<()> {
        if needed > self.walk.memory_budget {
            return Err(WalkError::Capacity {
                needed,
                budget: self.walk.memory_budget,
            }
            .into());
        }
        Ok(())
    }
}

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Output> {
    match cmd {
        Command::Gamma(a) => gamma(a, ctx).map(Into::into),
        Command::ReducedSplit(a) => reduced_split(a, ctx).map(Into::into),
        Command::H3Diaconis { max_len } => h3_diaconis(*max_len, ctx).map(Into::into),
        Command::Path { cmd } => path(cmd).map(Into::into),
        Command::Dioph { cmd } => dioph_cmd(cmd).map(Into::into),
        Command::Arith { cmd } => arith_cmd(cmd, ctx).map(Into::into),
        Command::Complexity { cmd } => complexity(cmd, ctx),
        Command::Series { cmd } => series(cmd, ctx),
        Command::Theorem { cmd } => theorem(cmd, ctx),
    }
}

// ---- walks ----

/// The `c` column of vH with `{x, x⁻¹, w·t}`, cached.
pub fn gamma_table(max_len: usize, ring: RingSpec, t_weight: u32, ctx: &Ctx) -> Result<CountTable> {
    let key = CacheKey {
        engine: "gamma",
        max_len,
        ring,
        t_weight,
    };
    load_or_compute(ctx.cache_dir.as_deref(), &key, || {
        Ok(count_closed(&GeneratorSet::vh_with_t_weight(t_weight), max_len, ring, &ctx.walk, &ctx.pool)?)
    })
}

/// The `r, r1, r2, r3` columns, cached.
pub fn reduced_table(max_len: usize, ring: RingSpec, t_weight: u32, ctx: &Ctx) -> Result<CountTable> {
    let key = CacheKey {
        engine: "reduced-split",
        max_len,
        ring,
        t_weight,
    };
    load_or_compute(ctx.cache_dir.as_deref(), &key, || {
        Ok(count_reduced_split(
            &GeneratorSet::vh_with_t_weight(t_weight),
            max_len,
            ring,
            &ctx.walk,
            &ctx.pool,
        )?)
    })
}

fn walk_meta(t: Table, a: &WalkArgs) -> Table {
    t.meta("generators", format!("x,x^-1,{}*t", a.t_weight))
}

fn gamma(a: &WalkArgs, ctx: &Ctx) -> Result<Table> {
    let t = gamma_table(a.max_len, a.ring, a.t_weight, ctx)?;
    Ok(walk_meta(count_table_to_table(&t), a))
}

fn reduced_split(a: &WalkArgs, ctx: &Ctx) -> Result<Table> {
    if a.ring == RingSpec::Real {
        bail!("reduced-split counts are integers; use exact or a modular ring");
    }
    let t = reduced_table(a.max_len, a.ring, a.t_weight, ctx)?;
    Ok(walk_meta(count_table_to_table(&t), a))
}

fn h3_diaconis(max_len: usize, ctx: &Ctx) -> Result<Table> {
    let key = CacheKey {
        engine: "h3-lazy",
        max_len,
        ring: RingSpec::Real,
        t_weight: 0,
    };
    let t = load_or_compute(ctx.cache_dir.as_deref(), &key, || {
        Ok(count_closed(&GeneratorSet::h3_lazy(), max_len, RingSpec::Real, &ctx.walk, &ctx.pool)?)
    })?;
    let probs = t.real("c").context("probability column")?;
    let mut out = Table::new(&["ell", "p", "ratio"])
        .meta("ring", RingSpec::Real)
        .meta("generators", "x,x^-1,y,y^-1,e");
    for (ell, &p) in probs.iter().enumerate() {
        out.push(vec![
            Cell::Int(ell as i64),
            Cell::Float(p, None),
            Cell::Float((ell * ell) as f64 * p, None),
        ]);
    }
    Ok(out)
}

// ---- paths ----

fn parse_word(s: &str) -> Result<Word> {
    s.parse::<Word>().map_err(|e| anyhow!("bad word {s:?}: {e:?}"))
}

fn path(cmd: &PathCmd) -> Result<Table> {
    match cmd {
        PathCmd::Area { word } => {
            let w = parse_word(word)?;
            let p = word_to_path(&w);
            let (a, b) = p.endpoint();
            let g = eval_word(&w);
            let mut t = Table::new(&["a", "b", "c", "area", "winding_sum"]).meta("word", w.to_string());
            t.push(vec![
                Cell::Int(a),
                Cell::Int(b),
                Cell::big(&g.h.c),
                Cell::Int(algebraic_area(&p.closed())),
                Cell::Int(winding_grid(&p).sum()),
            ]);
            Ok(t)
        }
        PathCmd::Grid { word } => {
            let w = parse_word(word)?;
            let g = winding_grid(&word_to_path(&w));
            let mut cols = vec!["y".to_string()];
            cols.extend((0..g.width).map(|i| (g.x_min + i as i64).to_string()));
            let mut t = Table {
                columns: cols,
                ..Table::default()
            }
            .meta("word", w.to_string())
            .meta("sum", g.sum());
            for (i, row) in g.rows_top_down().enumerate() {
                let y = g.y_min + (g.height - 1 - i) as i64;
                let mut cells = vec![Cell::Int(y)];
                cells.extend(row.iter().map(|&v| Cell::Int(v)));
                t.push(cells);
            }
            Ok(t)
        }
    }
}

// ---- diophantine ----

fn quad_cells(q: &[u64; 4]) -> Vec<Cell> {
    q.iter().map(|&v| Cell::Int(v as i64)).collect()
}

fn dioph_cmd(cmd: &DiophCmd) -> Result<Table> {
    let ell = match cmd {
        DiophCmd::List { ell } | DiophCmd::Orbits { ell } | DiophCmd::Abcc { ell, .. } | DiophCmd::R2 { ell, .. } => *ell,
    };
    if ell == 0 {
        bail!("--ell must be at least 1");
    }
    match cmd {
        DiophCmd::List { .. } => {
            let all = dioph::enumerate_sn(ell);
            let mut t = Table::new(&["a", "b", "c", "d"]).meta("n", ell).meta("size", all.len());
            for q in &all {
                t.push(quad_cells(q));
            }
            Ok(t)
        }
        DiophCmd::Orbits { .. } => {
            let d = dioph::orbit_decompose(ell);
            let s = &d.stats;
            let mut t = Table::new(&["a", "b", "c", "d", "kind", "size"])
                .meta("n", ell)
                .meta("total", s.total)
                .meta("fixed", s.fixed)
                .meta("abab", s.abab)
                .meta("abcc", s.abcc)
                .meta("free", s.free)
                .meta("reconstructs", d.reconstructs)
                .meta("fixed_formula", d.fixed_formula_holds)
                .meta("abab_formula", d.abab_formula_holds);
            for o in &d.orbits {
                let mut row = quad_cells(&o.representative);
                row.push(Cell::text(o.kind.name()));
                row.push(Cell::Int(o.size as i64));
                t.push(row);
            }
            debug_assert!(d.orbits.iter().all(|o| o.kind != OrbitType::Other));
            Ok(t)
        }
        DiophCmd::Abcc { method, .. } => {
            let methods: &[(AbccMethod, &str)] = match method {
                AbccMethodArg::Brute => &[(AbccMethod::Brute, "brute")],
                AbccMethodArg::Totient => &[(AbccMethod::Totient, "totient")],
                AbccMethodArg::Closed => &[(AbccMethod::ClosedForm, "closed")],
                AbccMethodArg::All => &[
                    (AbccMethod::Brute, "brute"),
                    (AbccMethod::Totient, "totient"),
                    (AbccMethod::ClosedForm, "closed"),
                ],
            };
            let mut t = Table::new(&["method", "count"]).meta("n", ell);
            for &(m, name) in methods {
                t.push(vec![Cell::text(name), Cell::Int(dioph::count_abcc(ell, m) as i64)]);
            }
            Ok(t)
        }
        DiophCmd::R2 { reading, .. } => {
            let readings: &[(R2Reading, &str)] = match reading {
                ReadingArg::Expanded => &[(R2Reading::Expanded, "expanded")],
                ReadingArg::Representative => &[(R2Reading::Representative, "representative")],
                ReadingArg::Both => &[
                    (R2Reading::Expanded, "expanded"),
                    (R2Reading::Representative, "representative"),
                ],
            };
            let unit = BigUint::from(8u32).pow(6);
            let mut t = Table::new(&["reading", "value", "over_8^6"]).meta("ell", ell);
            for &(r, name) in readings {
                let v = dioph::r2_formula(ell, r);
                let units = &v / &unit;
                t.push(vec![Cell::text(name), Cell::big(&v), Cell::big(units)]);
            }
            Ok(t)
        }
    }
}

// ---- arithmetic ----

fn parse_positive(s: &str) -> Result<BigUint> {
    let n: BigUint = s.trim().parse().map_err(|_| anyhow!("not a nonnegative integer: {s:?}"))?;
    if n == BigUint::from(0u32) {
        bail!("argument must be at least 1");
    }
    Ok(n)
}

fn m_big(n: &BigUint) -> BigUint {
    match n.to_u128() {
        Some(v) => BigUint::from(arith::m_of_n(v).expect("n >= 1")),
        None => factorize_big(n, None)
            .expect("unbounded effort")
            .into_iter()
            .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e / 2)),
    }
}

fn f_big(n: &BigUint) -> i8 {
    match n.to_u128() {
        Some(v) => arith::f_sign(v).expect("n >= 1"),
        None => f_sign_big(n, None).expect("unbounded effort"),
    }
}

fn arith_cmd(cmd: &ArithCmd, ctx: &Ctx) -> Result<Table> {
    match cmd {
        ArithCmd::M { n } | ArithCmd::F { n } => {
            let is_m = matches!(cmd, ArithCmd::M { .. });
            let mut t = Table::new(&[if is_m { "m" } else { "f" }]);
            t.bare = true;
            for s in n {
                let v = parse_positive(s)?;
                t.push(vec![if is_m {
                    Cell::big(m_big(&v))
                } else {
                    Cell::Int(f_big(&v).into())
                }]);
            }
            Ok(t)
        }
        ArithCmd::Density { x } => {
            if *x == 0 {
                bail!("--x must be at least 1");
            }
            let d = density_scan_with(*x, &ctx.pool);
            let mut t = Table::new(&["x", "count", "density"]);
            t.push(vec![Cell::Int(d.x as i64), Cell::Int(d.count as i64), Cell::Float(d.density, Some(6))]);
            Ok(t)
        }
        ArithCmd::Gauss { limit } => {
            let mut t = Table::new(&["limit", "verdict", "m", "sum"]);
            t.push(match gauss_identity_check(*limit) {
                GaussOutcome::Pass => vec![
                    Cell::Int(*limit as i64),
                    Cell::text("pass"),
                    Cell::text("none"),
                    Cell::text("none"),
                ],
                GaussOutcome::Counterexample { m, sum } => vec![
                    Cell::Int(*limit as i64),
                    Cell::text("fail"),
                    Cell::Int(m as i64),
                    Cell::big(sum),
                ],
            });
            Ok(t)
        }
        ArithCmd::Qf { limit } => {
            let s = qf_scan(*limit);
            let mut t = Table::new(&["limit", "members", "sum", "sum_decimal"]);
            t.push(vec![
                Cell::Int(*limit as i64),
                Cell::Int(s.members.len() as i64),
                Cell::big(&s.sum),
                Cell::Float(s.sum_f64(), Some(6)),
            ]);
            Ok(t)
        }
    }
}

// ---- subword complexity ----

pub fn block_string(block: &[i8]) -> String {
    block.iter().map(|&u| if u == 1 { '+' } else { '-' }).collect()
}

pub fn parse_block(s: &str) -> Result<Vec<i8>> {
    s.chars()
        .map(|c| match c {
            '+' => Ok(1),
            '-' => Ok(-1),
            other => Err(anyhow!("block entries are + or -, got {other:?}")),
        })
        .collect()
}

fn sequence(seq: SeqArg, window: u64) -> Vec<i8> {
    match seq {
        SeqArg::F => f_segment(1, window + 1),
        SeqArg::Contrast => (1..=u128::from(window)).map(odd_part_residue_sign).collect(),
        SeqArg::Catalan => {
            let bits: Vec<bool> = (0..window).map(|n| (n + 1).is_power_of_two()).collect();
            signs_from_bits(&bits)
        }
    }
}

/// Certificates for `blocks`, each found and then re-verified on the pool.
/// Entries are in input order.
pub fn certify_blocks(
    blocks: &[Vec<i8>],
    opts: &WitnessOptions,
    exec: &dyn Executor,
) -> Vec<Result<(WitnessCertificate, bool), SubwordError>> {
    let mut results: Vec<Option<Result<(WitnessCertificate, bool), SubwordError>>> = vec![None; blocks.len()];
    let tasks: Vec<Box<dyn FnOnce() + Send + '_>> = blocks
        .iter()
        .zip(results.iter_mut())
        .map(|(b, slot)| {
            Box::new(move || {
                *slot = Some(crt_witness(b, opts).and_then(|c| {
                    let ok = verify_certificate(&c)?;
                    Ok((c, ok))
                }));
            }) as Box<dyn FnOnce() + Send>
        })
        .collect();
    exec.execute(tasks);
    results.into_iter().map(|r| r.expect("every task ran")).collect()
}

pub fn certificate_json(c: &WitnessCertificate) -> Value {
    let trace = match &c.trace {
        Construction::Prescan { window } => json!({ "kind": "prescan", "window": window }),
        Construction::Crt(t) => json!({
            "kind": "crt",
            "failure_set": t.failure_set,
            "base_moduli": t.base_moduli,
            "prime_powers": t.prime_powers,
            "modulus": t.modulus.to_string(),
            "residue": t.residue.to_string(),
            "k": t.k,
        }),
    };
    json!({ "block": c.block, "x": c.x.to_string(), "trace": trace })
}

fn complexity(cmd: &ComplexityCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        ComplexityCmd::Profile { n, window, seq } => {
            ctx.capacity_check(*window)?;
            let s = sequence(*seq, *window);
            let p = complexity_profile(&s, *n)?;
            let name = match seq {
                SeqArg::F => "f",
                SeqArg::Contrast => "contrast",
                SeqArg::Catalan => "catalan",
            };
            let mut t = Table::new(&["n", "p"]).meta("seq", name).meta("window", window);
            for (i, v) in p.iter().enumerate() {
                t.push(vec![Cell::Int(i as i64 + 1), Cell::Int(*v as i64)]);
            }
            Ok(t.into())
        }
        ComplexityCmd::Scan { n, window } => {
            let mut t = Table::new(&["n", "seen", "total", "complete", "missing"]).meta("window", window);
            for len in 1..=*n {
                let s = saturation_scan_with(len, *window, &ctx.pool)?;
                let missing: Vec<String> = s
                    .missing()
                    .iter()
                    .map(|&c| block_string(&cogrowth_core::subword::decode(c, len)))
                    .collect();
                t.push(vec![
                    Cell::Int(len as i64),
                    Cell::Int(s.count() as i64),
                    Cell::Int(1i64 << len),
                    Cell::Bool(s.complete()),
                    Cell::text(if missing.is_empty() { "none".to_string() } else { missing.join(",") }),
                ]);
            }
            Ok(t.into())
        }
        ComplexityCmd::Witness {
            n,
            block,
            count,
            force_crt,
            window,
            max_k,
            effort,
        } => {
            let blocks: Vec<Vec<i8>> = if block.is_empty() {
                let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
                (0..*count)
                    .map(|_| (0..*n).map(|_| if rng.gen::<bool>() { 1 } else { -1 }).collect())
                    .collect()
            } else {
                block.iter().map(|b| parse_block(b)).collect::<Result<_>>()?
            };
            let opts = WitnessOptions {
                max_k: *max_k,
                effort: *effort,
                force_crt: *force_crt,
                prescan_window: *window,
            };
            let mut t = Table::new(&["block", "x", "construction", "k", "verified"])
                .meta("seed", ctx.seed)
                .meta("force_crt", force_crt);
            let mut docs = Vec::new();
            let mut status = 0;
            for r in certify_blocks(&blocks, &opts, &ctx.pool) {
                let (c, ok) = r?;
                if !ok {
                    status = 1;
                }
                let (kind, k) = match &c.trace {
                    Construction::Prescan { .. } => ("prescan", Cell::text("none")),
                    Construction::Crt(tr) => ("crt", Cell::Int(tr.k as i64)),
                };
                t.push(vec![
                    Cell::text(block_string(&c.block)),
                    Cell::big(&c.x),
                    Cell::text(kind),
                    k,
                    Cell::Bool(ok),
                ]);
                docs.push(certificate_json(&c));
            }
            Ok(Output {
                table: t,
                json: Some(Value::Array(docs)),
                status,
            })
        }
    }
}

// ---- series ----

fn read_json(path: &Path) -> Result<Value> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    };
    serde_json::from_str(&text).with_context(|| format!("parsing JSON from {}", path.display()))
}

fn json_int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => Ok(n.to_string().parse()?),
        Value::String(s) => s.trim().parse().map_err(|_| anyhow!("not an integer: {s:?}")),
        other => bail!("expected an integer, got {other}"),
    }
}

fn json_ints(v: &Value) -> Result<Vec<BigInt>> {
    v.as_array().context("expected a JSON array")?.iter().map(json_int).collect()
}

pub fn recurrence_from_json(v: &Value) -> Result<Recurrence> {
    let polys = v
        .as_array()
        .context("a recurrence is an array of coefficient arrays")?
        .iter()
        .map(json_ints)
        .collect::<Result<Vec<_>>>()?;
    Ok(Recurrence::new(polys)?)
}

pub fn recurrence_to_json(r: &Recurrence) -> Value {
    Value::Array(
        r.polys()
            .iter()
            .map(|p| Value::Array(p.iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

fn recurrence_output(rec: Option<&Recurrence>) -> Output {
    let mut t = Table::new(&["shift", "coefficients"]).meta("found", rec.is_some());
    if let Some(r) = rec {
        t = t.meta("order", r.order()).meta("degree", r.degree());
        for (i, p) in r.polys().iter().enumerate() {
            let cs: Vec<String> = p.iter().map(ToString::to_string).collect();
            t.push(vec![Cell::Int(i as i64), Cell::text(cs.join(","))]);
        }
    }
    Output {
        table: t,
        json: Some(rec.map_or(Value::Null, recurrence_to_json)),
        status: 0,
    }
}

fn ints_of(t: &CountTable, name: &str) -> Result<Vec<BigInt>> {
    Ok(t.int(name)
        .with_context(|| format!("column {name}"))?
        .iter()
        .map(|v| BigInt::from(v.clone()))
        .collect())
}

fn series(cmd: &SeriesCmd, ctx: &Ctx) -> Result<Output> {
    match cmd {
        SeriesCmd::Guess {
            input,
            max_order,
            max_degree,
            stride,
        } => {
            let seq = json_ints(&read_json(input)?)?;
            let rec = guess_recurrence_strided(&seq, *max_order, *max_degree, *stride)?;
            Ok(recurrence_output(rec.as_ref()))
        }
        SeriesCmd::Check { rec, input } => {
            let r = recurrence_from_json(&read_json(rec)?)?;
            let seq = json_ints(&read_json(input)?)?;
            let mut t = Table::new(&["terms", "verdict", "fails_at"]);
            let (verdict, at) = match check_recurrence(&r, &seq)? {
                CheckOutcome::Pass => ("pass", Cell::text("none")),
                CheckOutcome::FailsAt(n) => ("fail", Cell::Int(n as i64)),
            };
            t.push(vec![Cell::Int(seq.len() as i64), Cell::text(verdict), at]);
            Ok(t.into())
        }
        SeriesCmd::ExtractEven { rec, parity } => {
            let r = recurrence_from_json(&read_json(rec)?)?;
            let p = match parity {
                ParityArg::Even => Parity::Even,
                ParityArg::Odd => Parity::Odd,
            };
            Ok(recurrence_output(Some(&extract_even(&r, p)?)))
        }
        SeriesCmd::CogrowthCheck { order, t_weight } => {
            let gamma = ints_of(&gamma_table(*order, RingSpec::Exact, *t_weight, ctx)?, "c")?;
            let r = ints_of(&reduced_table(*order, RingSpec::Exact, *t_weight, ctx)?, "r")?;
            let rep = cogrowth_check(&r, &gamma, *order)?;
            let mut t = Table::new(&["k", "lhs", "rhs", "agree"])
                .meta("order", order)
                .meta("verdict", if rep.passed() { "pass" } else { "fail" })
                .meta("first_mismatch", rep.first_mismatch.map_or("none".to_string(), |k| k.to_string()));
            for k in 0..=*order {
                t.push(vec![
                    Cell::Int(k as i64),
                    Cell::big(&rep.lhs[k]),
                    Cell::big(&rep.rhs[k]),
                    Cell::Bool(rep.lhs[k] == rep.rhs[k]),
                ]);
            }
            Ok(t.into())
        }
    }
}

// ---- theorem ----

fn theorem(cmd: &TheoremCmd, ctx: &Ctx) -> Result<Output> {
    let TheoremCmd::Verify { jmax, ring } = cmd;
    let table = reduced_table(4 * jmax + 8, *ring, 8, ctx)?;
    let rep = miracle_rows(*jmax, &table)?;
    let mut t = Table::new(&[
        "j",
        "length",
        "r",
        "r1",
        "r2",
        "r3",
        "s",
        "s_parity",
        "m",
        "rhs",
        "match",
        "r2_expanded",
        "r2_representative",
        "expanded_agrees",
        "representative_agrees",
        "split_holds",
        "r3_divisible",
    ])
    .meta("ring", ring)
    .meta("jmax", jmax)
    .meta("residues", "mod2^23")
    .meta("invariants", rep.invariants_hold());
    for row in &rep.rows {
        let (s, parity) = match &row.s {
            Some(s) => (Cell::big(&s.value), Cell::Int(s.parity.into())),
            None => (Cell::text("undefined"), Cell::text("undefined")),
        };
        t.push(vec![
            Cell::Int(row.j as i64),
            Cell::Int(row.length as i64),
            Cell::big(row.r_display()),
            Cell::big(row.r1_display()),
            Cell::big(row.r2_display()),
            Cell::big(row.r3_display()),
            s,
            parity,
            Cell::Int(row.m as i64),
            Cell::Int(row.rhs.into()),
            Cell::Bool(row.matches),
            Cell::big(&row.r2_expanded),
            Cell::big(&row.r2_representative),
            Cell::Bool(row.expanded_agrees),
            Cell::Bool(row.representative_agrees),
            Cell::Bool(row.split_holds),
            Cell::Bool(row.r3_divisible),
        ]);
    }
    let json = t.rows_json();
    Ok(Output {
        table: t,
        json: Some(json),
        status: if rep.invariants_hold() { 0 } else { 1 },
    })
}
