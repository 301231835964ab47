//! On-disk cache of walk-count tables. A cache file is the TSV output of
//! the table preceded by one `# params ...` line naming the computation.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use cogrowth_core::walk::{Column, CountTable, RingSpec};
use num_bigint::BigUint;

use crate::table::{Cell, Table};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CacheKey {
    pub engine: &'static str,
    pub max_len: usize,
    pub ring: RingSpec,
    pub t_weight: u32,
}

impl CacheKey {
    fn params_line(&self) -> String {
        format!(
            "# params engine={} max_len={} ring={} t_weight={}",
            self.engine, self.max_len, self.ring, self.t_weight
        )
    }

    fn file_name(&self) -> String {
        let ring = self.ring.to_string().replace('^', "p");
        format!("{}-{}-w{}-L{}.tsv", self.engine, ring, self.t_weight, self.max_len)
    }
}

/// `ell` followed by one column per table column.
pub fn count_table_to_table(t: &CountTable) -> Table {
    let mut cols = vec!["ell"];
    cols.extend(t.names.iter().copied());
    let mut out = Table::new(&cols).meta("ring", t.ring);
    for ell in 0..=t.max_len() {
        let mut row = vec![Cell::Int(ell as i64)];
        for c in &t.columns {
            row.push(match c {
                Column::Int(v) => Cell::big(&v[ell]),
                Column::Real(v) => Cell::Float(v[ell], None),
            });
        }
        out.push(row);
    }
    out
}

fn static_name(name: &str) -> Result<&'static str> {
    Ok(match name {
        "c" => "c",
        "r" => "r",
        "r1" => "r1",
        "r2" => "r2",
        "r3" => "r3",
        other => bail!("unknown column {other:?} in cache file"),
    })
}

fn parse(text: &str, key: &CacheKey) -> Result<CountTable> {
    let mut lines = text.lines();
    if lines.next() != Some(key.params_line().as_str()) {
        bail!("params line does not match");
    }
    let mut lines = lines.filter(|l| !l.starts_with('#'));
    let header: Vec<&str> = lines.next().context("missing header")?.split('\t').collect();
    if header.first() != Some(&"ell") {
        bail!("header must start with ell");
    }
    let names = header[1..].iter().map(|n| static_name(n)).collect::<Result<Vec<_>>>()?;
    let real = key.ring == RingSpec::Real;
    let mut ints: Vec<Vec<BigUint>> = vec![Vec::new(); names.len()];
    let mut reals: Vec<Vec<f64>> = vec![Vec::new(); names.len()];
    for (ell, line) in lines.enumerate() {
        let cells: Vec<&str> = line.split('\t').collect();
        if cells.len() != header.len() || cells[0].parse::<usize>()? != ell {
            bail!("malformed row {ell}");
        }
        for (i, cell) in cells[1..].iter().enumerate() {
            if real {
                reals[i].push(cell.parse()?);
            } else {
                ints[i].push(cell.parse()?);
            }
        }
    }
    let columns: Vec<Column> = if real {
        reals.into_iter().map(Column::Real).collect()
    } else {
        ints.into_iter().map(Column::Int).collect()
    };
    if columns.iter().any(|c| c.len() != key.max_len + 1) {
        bail!("cache file has the wrong number of rows");
    }
    Ok(CountTable {
        ring: key.ring,
        names,
        columns,
    })
}

fn path_for(dir: &Path, key: &CacheKey) -> PathBuf {
    dir.join(key.file_name())
}

/// Returns the cached table for `key`, or computes and stores it. Unreadable
/// or mismatching cache files are recomputed and overwritten.
pub fn load_or_compute(
    dir: Option<&Path>,
    key: &CacheKey,
    compute: impl FnOnce() -> Result<CountTable>,
) -> Result<CountTable> {
    let Some(dir) = dir else {
        return compute();
    };
    let path = path_for(dir, key);
    if let Ok(text) = fs::read_to_string(&path) {
        if let Ok(t) = parse(&text, key) {
            return Ok(t);
        }
    }
    let table = compute()?;
    fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
    let body = format!("{}\n{}", key.params_line(), count_table_to_table(&table).to_tsv());
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, body).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, &path).with_context(|| format!("writing {}", path.display()))?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(ring: RingSpec) -> CountTable {
        let columns = match ring {
            RingSpec::Real => vec![Column::Real(vec![1.0, 0.1, 1.0 / 3.0])],
            _ => vec![Column::Int(vec![1u32.into(), 0u32.into(), BigUint::from(1u32) << 200u32])],
        };
        CountTable {
            ring,
            names: vec!["c"],
            columns,
        }
    }

    #[test]
    fn round_trip() {
        let dir = tempfile::tempdir().unwrap();
        for ring in [RingSpec::Exact, RingSpec::Mod2k(24), RingSpec::Real] {
            let key = CacheKey {
                engine: "gamma",
                max_len: 2,
                ring,
                t_weight: 8,
            };
            let cold = load_or_compute(Some(dir.path()), &key, || Ok(table(ring))).unwrap();
            let warm = load_or_compute(Some(dir.path()), &key, || bail!("should hit the cache")).unwrap();
            assert_eq!(cold, warm);
        }
    }

    #[test]
    fn mismatching_params_recompute() {
        let dir = tempfile::tempdir().unwrap();
        let key = CacheKey {
            engine: "gamma",
            max_len: 2,
            ring: RingSpec::Exact,
            t_weight: 8,
        };
        load_or_compute(Some(dir.path()), &key, || Ok(table(RingSpec::Exact))).unwrap();
        let path = path_for(dir.path(), &key);
        let text = fs::read_to_string(&path).unwrap().replace("t_weight=8", "t_weight=9");
        fs::write(&path, text).unwrap();
        let mut called = false;
        load_or_compute(Some(dir.path()), &key, || {
            called = true;
            Ok(table(RingSpec::Exact))
        })
        .unwrap();
        assert!(called);
    }
}
