//! Command-line grammar.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cogrowth_core::walk::RingSpec;

use crate::table::Format;

#[derive(Parser, Debug, Clone)]
#[command(name = "cogrowth", version, about = "Cogrowth counts, arithmetic scans and witness certificates")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    #[arg(long, global = true, value_enum, default_value = "tsv")]
    pub format: Format,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
    /// Directory for cached walk tables.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,
    /// Worker threads; overrides COGROWTH_THREADS.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: Option<u64>,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Memory budget for walk tables, in bytes or with a K/M/G suffix.
    #[arg(long, global = true, value_parser = parse_bytes, default_value = "4G")]
    pub memory_budget: u64,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Cogrowth coefficients c_ℓ of vH with generators {x, x⁻¹, w·t}.
    Gamma(WalkArgs),
    /// Reduced closed words r(ℓ) and the split r1 + r2 + r3.
    ReducedSplit(WalkArgs),
    /// ℓ²·c_ℓ/5^ℓ for the lazy walk {x^±, y^±, e} on H3(Z).
    H3Diaconis {
        #[arg(long, default_value_t = 40)]
        max_len: usize,
    },
    /// Lattice paths of words in x, y.
    Path {
        #[command(subcommand)]
        cmd: PathCmd,
    },
    /// The quadruple sets S_n and their orbit counts.
    Dioph {
        #[command(subcommand)]
        cmd: DiophCmd,
    },
    /// Square parts, the sign f, density and prime-power scans.
    Arith {
        #[command(subcommand)]
        cmd: ArithCmd,
    },
    /// Subword complexity, saturation scans and CRT witnesses.
    Complexity {
        #[command(subcommand)]
        cmd: ComplexityCmd,
    },
    /// Recurrence guessing and checking, and the cogrowth identity.
    Series {
        #[command(subcommand)]
        cmd: SeriesCmd,
    },
    /// The s_j congruence table.
    Theorem {
        #[command(subcommand)]
        cmd: TheoremCmd,
    },
}

#[derive(Args, Debug, Clone)]
pub struct WalkArgs {
    #[arg(long)]
    pub max_len: usize,
    /// exact, real, mod24 (any modK with 1 <= K <= 32) or mod2^K.
    #[arg(long, value_parser = parse_ring, default_value = "exact")]
    pub ring: RingSpec,
    /// Multiplicity of the generator t.
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
    pub t_weight: u32,
}

#[derive(Subcommand, Debug, Clone)]
pub enum PathCmd {
    /// Endpoint, algebraic area and winding sum of the closed path.
    Area { word: String },
    /// Winding numbers of the closed path, top row first.
    Grid { word: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AbccMethodArg {
    Brute,
    Totient,
    Closed,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ReadingArg {
    Expanded,
    Representative,
    Both,
}

#[derive(Subcommand, Debug, Clone)]
pub enum DiophCmd {
    List {
        #[arg(long)]
        ell: u64,
    },
    Orbits {
        #[arg(long)]
        ell: u64,
    },
    Abcc {
        #[arg(long)]
        ell: u64,
        #[arg(long, value_enum, default_value = "all")]
        method: AbccMethodArg,
    },
    R2 {
        #[arg(long)]
        ell: u64,
        #[arg(long, value_enum, default_value = "both")]
        reading: ReadingArg,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum ArithCmd {
    /// Largest m with m² | n, one line per argument.
    M {
        #[arg(required = true)]
        n: Vec<String>,
    },
    /// f(n) as ±1, one line per argument.
    F {
        #[arg(required = true)]
        n: Vec<String>,
    },
    /// Fraction of n <= x with f(n) = 1.
    Density {
        #[arg(long)]
        x: u64,
    },
    /// Σ_{d|m} φ(d) = m for m <= limit.
    Gauss {
        #[arg(long)]
        limit: u64,
    },
    /// Prime powers q <= limit with f(q) = -1 and Σ 1/q.
    Qf {
        #[arg(long)]
        limit: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeqArg {
    /// f(1), f(2), ...
    F,
    /// The odd part of n mod 4, as ±1.
    Contrast,
    /// Catalan numbers mod 2, as ±1.
    Catalan,
}

#[derive(Subcommand, Debug, Clone)]
pub enum ComplexityCmd {
    /// p(1..=n) over the first `window` terms.
    Profile {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: u64,
        #[arg(long, value_enum, default_value = "f")]
        seq: SeqArg,
    },
    /// Which ±1 blocks of each length 1..=n occur in f(1..=window).
    Scan {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        window: u64,
    },
    /// Certified x with f(x+i) = u_i. Blocks come from --block or are drawn
    /// from --seed.
    Witness {
        #[arg(long, default_value_t = 6)]
        n: usize,
        /// Explicit block, e.g. "+-+-"; may be repeated.
        #[arg(long)]
        block: Vec<String>,
        /// Random blocks to draw when no --block is given.
        #[arg(long, default_value_t = 1)]
        count: usize,
        #[arg(long)]
        force_crt: bool,
        /// Prefix scanned before falling back to the CRT construction.
        #[arg(long, default_value_t = 1 << 20)]
        window: u64,
        #[arg(long, default_value_t = 10_000)]
        max_k: u64,
        #[arg(long, default_value_t = 1 << 18)]
        effort: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParityArg {
    Even,
    Odd,
}

#[derive(Subcommand, Debug, Clone)]
pub enum SeriesCmd {
    /// Find a recurrence for a JSON array of integers.
    Guess {
        /// JSON file, or - for stdin.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_order: usize,
        #[arg(long, default_value_t = 2)]
        max_degree: usize,
        #[arg(long, default_value_t = 1)]
        stride: usize,
    },
    /// Check a recurrence (JSON array of coefficient vectors) on a sequence.
    Check {
        #[arg(long)]
        rec: PathBuf,
        #[arg(long)]
        input: PathBuf,
    },
    /// Recurrence for the even- or odd-indexed subsequence.
    ExtractEven {
        #[arg(long)]
        rec: PathBuf,
        #[arg(long, value_enum, default_value = "even")]
        parity: ParityArg,
    },
    /// Compare R(z)/(1-z²) with Γ(z/(1+z²))/(1+z²) on computed counts.
    CogrowthCheck {
        #[arg(long, default_value_t = 12)]
        order: usize,
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..))]
        t_weight: u32,
    },
}

#[derive(Subcommand, Debug, Clone)]
pub enum TheoremCmd {
    Verify {
        #[arg(long, default_value_t = cogrowth_core::theorem::DEFAULT_JMAX)]
        jmax: usize,
        /// mod24 or exact.
        #[arg(long, value_parser = parse_ring, default_value = "mod24")]
        ring: RingSpec,
    },
}

pub fn parse_ring(s: &str) -> Result<RingSpec, String> {
    let s = s.trim().to_ascii_lowercase();
    match s.as_str() {
        "exact" => return Ok(RingSpec::Exact),
        "real" => return Ok(RingSpec::Real),
        _ => {}
    }
    let k = s
        .strip_prefix("mod2^")
        .or_else(|| s.strip_prefix("mod"))
        .and_then(|k| k.parse::<u32>().ok())
        .ok_or_else(|| format!("unknown ring {s:?}; use exact, real, mod24 or mod2^K"))?;
    if !(1..=32).contains(&k) {
        return Err(format!("modulus 2^{k} out of range 1..=32"));
    }
    Ok(RingSpec::Mod2k(k))
}

pub fn parse_bytes(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let (digits, mult) = match s.chars().last() {
        Some('k' | 'K') => (&s[..s.len() - 1], 1u64 << 10),
        Some('m' | 'M') => (&s[..s.len() - 1], 1 << 20),
        Some('g' | 'G') => (&s[..s.len() - 1], 1 << 30),
        _ => (s, 1),
    };
    digits
        .parse::<u64>()
        .ok()
        .and_then(|v| v.checked_mul(mult))
        .ok_or_else(|| format!("bad byte count {s:?}"))
}
