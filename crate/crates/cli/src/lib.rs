//! Command-line front end for `cogrowth-core`: argument grammar, a thread
//! pool, TSV/JSON rendering and a cache of walk tables.

pub mod args;
pub mod cache;
pub mod commands;
pub mod pool;
pub mod table;

use std::io::Write as _;

use anyhow::Result;
use cogrowth_core::theorem::TheoremError;
use cogrowth_core::walk::{WalkError, WalkOptions};

pub use args::Cli;
pub use commands::Ctx;
pub use pool::ThreadPool;
pub use table::{Format, Output};

pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAPACITY: i32 = 3;

pub fn context(cli: &Cli) -> Result<Ctx> {
    let g = &cli.global;
    Ok(Ctx {
        pool: ThreadPool::from_env(g.threads.map(|n| n as usize))?,
        walk: WalkOptions {
            memory_budget: g.memory_budget,
            ..WalkOptions::default()
        },
        cache_dir: g.cache_dir.clone(),
        seed: g.seed,
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    commands::dispatch(&cli.command, &context(cli)?)
}

fn capacity(err: &anyhow::Error) -> Option<(u64, u64)> {
    err.chain().find_map(|e| {
        let w = e
            .downcast_ref::<WalkError>()
            .or_else(|| match e.downcast_ref::<TheoremError>() {
                Some(TheoremError::Walk(w)) => Some(w),
                _ => None,
            })?;
        match w {
            WalkError::Capacity { needed, budget } => Some((*needed, *budget)),
            _ => None,
        }
    })
}

/// Runs a parsed command line, writes its output, and returns the exit code.
pub fn execute(cli: &Cli) -> i32 {
    match run(cli) {
        Ok(out) => {
            let text = out.render(cli.global.format);
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, text).map_err(anyhow::Error::from),
                None => std::io::stdout().lock().write_all(text.as_bytes()).map_err(Into::into),
            };
            match written {
                Ok(()) => out.status,
                Err(e) => {
                    eprintln!("error: {e:#}");
                    EXIT_FAILURE
                }
            }
        }
        Err(e) => {
            if let Some((needed, budget)) = capacity(&e) {
                eprintln!("capacity-exceeded\tneeded={needed}\tbudget={budget}");
                EXIT_CAPACITY
            } else {
                eprintln!("error: {e:#}");
                EXIT_FAILURE
            }
        }
    }
}
