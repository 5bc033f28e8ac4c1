//! Batch comparison of the greedy tree against the exhaustive oracle over
//! every feasible degree sequence up to a vertex budget.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::construct::construct_max_tree;
use crate::graph::{format, sombor_index, DegreeSequence, Tree, REL_TOL};
use crate::verify::{check_theorem1, is_local_max, oracle_max, OracleResult};

pub const CSV_HEADER: &str =
    "degrees,n,m,constructed_so,oracle_so,gap,optimal,capped,local_max,theorem1_violations,enumerated";

#[derive(Debug, Error)]
pub enum SweepError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("malformed report: {0}")]
    Csv(#[from] csv::Error),
    #[error("malformed report: {0}")]
    Format(String),
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> SweepError + '_ {
    move |source| SweepError::Io {
        path: path.to_path_buf(),
        source,
    }
}

/// Every non-increasing sequence of integers ≥ 2 realizable by a tree on
/// `3..=max_n` vertices, ordered by `n`, then `m`, then lexicographically
/// descending.
pub fn generate_degree_sequences(max_n: usize) -> Vec<DegreeSequence> {
    fn parts(total: usize, count: usize, cap: usize, prefix: &mut Vec<i64>, out: &mut Vec<DegreeSequence>) {
        if count == 0 {
            if total == 0 {
                out.push(DegreeSequence::validate(prefix).expect("generated sequences are valid"));
            }
            return;
        }
        // the remaining count − 1 entries need at least 2 each
        let Some(room) = total.checked_sub(2 * (count - 1)) else {
            return;
        };
        for d in (2..=cap.min(room)).rev() {
            prefix.push(d as i64);
            parts(total - d, count - 1, d, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for n in 3..=max_n {
        for m in 1..=n - 2 {
            parts(n + m - 2, m, n, &mut Vec::with_capacity(m), &mut out);
        }
    }
    out
}

/// Greedy tree versus exhaustive maximum for one sequence.
#[derive(Debug, Clone, Serialize)]
pub struct Comparison {
    pub degrees: DegreeSequence,
    pub constructed: Tree,
    pub constructed_so: f64,
    pub oracle: OracleResult,
    pub gap: f64,
    pub optimal: bool,
}

impl Comparison {
    /// True when an uncapped oracle beat the greedy tree.
    pub fn is_counterexample(&self) -> bool {
        !self.oracle.capped && !self.optimal
    }
}

pub fn compare(d: &DegreeSequence, cap: u64, workers: usize) -> Comparison {
    let constructed = construct_max_tree(d);
    let constructed_so = sombor_index(&constructed);
    let oracle = oracle_max(d, cap, workers);
    let gap = oracle.max_so - constructed_so;
    let optimal = gap <= REL_TOL * oracle.max_so;
    Comparison {
        degrees: d.clone(),
        constructed,
        constructed_so,
        oracle,
        gap,
        optimal,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub degrees: String,
    pub n: usize,
    pub m: usize,
    pub constructed_so: f64,
    pub oracle_so: f64,
    pub gap: f64,
    pub optimal: bool,
    pub capped: bool,
    pub local_max: bool,
    pub theorem1_violations: usize,
    pub enumerated: u64,
}

impl SweepRecord {
    /// Copy with every real rounded to 12 significant digits, as written to CSV.
    pub fn rounded(&self) -> SweepRecord {
        let r = |x: f64| fmt_sig12(x).parse().expect("formatted float parses");
        SweepRecord {
            constructed_so: r(self.constructed_so),
            oracle_so: r(self.oracle_so),
            gap: r(self.gap),
            ..self.clone()
        }
    }
}

/// Outcome of a sweep: records in input order plus witness files written.
#[derive(Debug, Clone)]
pub struct SweepOutcome {
    pub records: Vec<SweepRecord>,
    pub witness_files: Vec<PathBuf>,
}

fn sweep_row(d: &DegreeSequence, cap: u64) -> (SweepRecord, Comparison) {
    let cmp = compare(d, cap, 1);
    let local = is_local_max(&cmp.constructed, REL_TOL);
    let report = check_theorem1(&cmp.constructed);
    let record = SweepRecord {
        degrees: d.joined(),
        n: d.vertex_count(),
        m: d.internal_count(),
        constructed_so: cmp.constructed_so,
        oracle_so: cmp.oracle.max_so,
        gap: cmp.gap,
        optimal: cmp.optimal,
        capped: cmp.oracle.capped,
        local_max: local.local_max,
        theorem1_violations: report.summary.violations,
        enumerated: cmp.oracle.enumerated,
    };
    (record, cmp)
}

/// Runs every sequence up to `max_n`. Rows are computed on `workers`
/// threads; output order is the generation order. Witness trees of any
/// uncapped mismatch are written into `witness_dir` when given.
pub fn sweep(
    max_n: usize,
    cap: u64,
    workers: usize,
    witness_dir: Option<&Path>,
) -> Result<SweepOutcome, SweepError> {
    let sequences = generate_degree_sequences(max_n);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("worker pool");
    let rows: Vec<(SweepRecord, Comparison)> =
        pool.install(|| sequences.par_iter().map(|d| sweep_row(d, cap)).collect());

    let mut witness_files = Vec::new();
    if let Some(dir) = witness_dir {
        for (_, cmp) in rows.iter().filter(|(_, c)| c.is_counterexample()) {
            witness_files.extend(write_witnesses(dir, cmp)?);
        }
    }
    Ok(SweepOutcome {
        records: rows.into_iter().map(|(r, _)| r).collect(),
        witness_files,
    })
}

/// Writes `witness_<degrees>_constructed.json` and
/// `witness_<degrees>_oracle.json` (degrees joined by `-`).
pub fn write_witnesses(dir: &Path, cmp: &Comparison) -> Result<Vec<PathBuf>, SweepError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let stem = cmp.degrees.joined().replace(',', "-");
    let mut written = Vec::new();
    let oracle_tree = cmp.oracle.witnesses.first().map(|w| &w.tree);
    for (role, tree) in [("constructed", Some(&cmp.constructed)), ("oracle", oracle_tree)] {
        let Some(tree) = tree else { continue };
        let path = dir.join(format!("witness_{stem}_{role}.json"));
        fs::write(&path, format::to_json(tree) + "\n").map_err(io_err(&path))?;
        written.push(path);
    }
    Ok(written)
}

/// Formats a real at 12 significant digits, shortest form.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{}", if x == 0.0 { 0.0 } else { x });
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("exponent form parses");
    if rounded.abs() >= 1e-4 && rounded.abs() < 1e15 {
        format!("{rounded}")
    } else {
        format!("{rounded:e}")
    }
}

pub fn write_csv<W: Write>(records: &[SweepRecord], mut w: W) -> io::Result<()> {
    writeln!(w, "{CSV_HEADER}")?;
    for r in records {
        writeln!(
            w,
            "\"{}\",{},{},{},{},{},{},{},{},{},{}",
            r.degrees,
            r.n,
            r.m,
            fmt_sig12(r.constructed_so),
            fmt_sig12(r.oracle_so),
            fmt_sig12(r.gap),
            r.optimal,
            r.capped,
            r.local_max,
            r.theorem1_violations,
            r.enumerated
        )?;
    }
    Ok(())
}

pub fn write_csv_file(records: &[SweepRecord], path: &Path) -> Result<(), SweepError> {
    let mut buf = Vec::new();
    write_csv(records, &mut buf).map_err(io_err(path))?;
    fs::write(path, buf).map_err(io_err(path))
}

pub fn parse_csv<R: Read>(r: R) -> Result<Vec<SweepRecord>, SweepError> {
    let mut reader = csv::Reader::from_reader(r);
    let header: Vec<String> = reader.headers()?.iter().map(str::to_string).collect();
    if header.join(",") != CSV_HEADER {
        return Err(SweepError::Format(format!("unexpected header {header:?}")));
    }
    reader
        .deserialize()
        .map(|row| row.map_err(SweepError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn joined(max_n: usize) -> Vec<String> {
        generate_degree_sequences(max_n).iter().map(DegreeSequence::joined).collect()
    }

    #[test]
    fn small_vertex_budgets() {
        assert_eq!(joined(3), vec!["2"]);
        assert_eq!(joined(4)[1..], ["3", "2,2"]);
        assert_eq!(joined(5)[3..], ["4", "3,2", "2,2,2"]);
        assert_eq!(joined(6)[6..], ["5", "4,2", "3,3", "3,2,2", "2,2,2,2"]);
        assert_eq!(joined(6).len(), 11);
    }

    #[test]
    fn sig12_formatting() {
        assert_eq!(fmt_sig12(14.994662193172), "14.9946621932");
        assert_eq!(fmt_sig12(0.0), "0");
        assert_eq!(fmt_sig12(1.0), "1");
        assert_eq!(fmt_sig12(-1.7763568394002505e-15), "-1.7763568394e-15");
        assert_eq!(fmt_sig12(106.61257578712792), "106.612575787");
    }

    #[test]
    fn comparison_on_three_two_two() {
        let d = DegreeSequence::validate(&[3, 2, 2]).unwrap();
        let c = compare(&d, 1000, 1);
        assert!(c.optimal);
        assert!(!c.is_counterexample());
        assert!(c.gap.abs() < 1e-12);
    }
}
