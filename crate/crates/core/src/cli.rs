//! The `sombor` command line.
//!
//! Exit codes: 0 success or confirmed, 1 usage or input error, 2 inconclusive
//! (enumeration capped), 3 counterexample (something beat the greedy tree).

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::construct::construct_max_tree;
use crate::experiments::{self, compare, fmt_sig12, write_witnesses, Comparison};
use crate::graph::{format, sombor_index, DegreeSequence, Tree, TreeJson, REL_TOL};
use crate::verify::{anneal_search, check_theorem1, is_local_max, DEFAULT_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV: &str = "SOMBOR_CAP";

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CommandOutcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl CommandOutcome {
    fn ok(stdout: String) -> Self {
        CommandOutcome {
            exit_code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(msg: impl std::fmt::Display) -> Self {
        CommandOutcome {
            exit_code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "sombor", version, about = "Maximum-Sombor trees with a given degree sequence")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeFormat {
    Json,
    Dot,
    Edges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_degrees(s: &str) -> Result<DegreeSequence, String> {
    s.parse::<DegreeSequence>().map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build the greedy maximum-Sombor tree.
    Construct {
        /// Internal degrees, comma separated, any order.
        #[arg(long, value_parser = parse_degrees)]
        degrees: DegreeSequence,
        #[arg(long, value_enum, default_value_t = TreeFormat::Json)]
        format: TreeFormat,
        /// Write the tree here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Sombor index of a tree given as Tree JSON (`-` for stdin).
    Score {
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare the greedy tree against exhaustive enumeration.
    Verify {
        #[arg(long, value_parser = parse_degrees)]
        degrees: DegreeSequence,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Directory for witness trees when a counterexample is found.
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
    /// Path-degree report and 2-swap local-maximum check of the greedy tree.
    Check {
        #[arg(long, value_parser = parse_degrees)]
        degrees: DegreeSequence,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
    },
    /// Verify every degree sequence up to a vertex budget and write a CSV.
    Sweep {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Simulated annealing from the greedy tree.
    Search {
        #[arg(long, value_parser = parse_degrees)]
        degrees: DegreeSequence,
        #[arg(long)]
        budget: u64,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

fn resolve_cap(flag: Option<u64>) -> Result<u64, String> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_ENV}={v:?} is not a non-negative integer")),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn to_json_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("report types serialize") + "\n"
}

/// Parses `argv` (program name first) and runs one subcommand.
pub fn run<I, S>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    CommandOutcome::ok(rendered)
                }
                _ => {
                    let mut stderr = rendered;
                    if !stderr.contains("Usage:") {
                        let _ = write!(stderr, "\n{}\n", Cli::command().render_usage());
                    }
                    CommandOutcome {
                        exit_code: EXIT_USAGE,
                        stdout: String::new(),
                        stderr,
                    }
                }
            };
        }
    };
    match cli.command {
        Command::Construct {
            degrees,
            format,
            out,
        } => construct(&degrees, format, out.as_deref()),
        Command::Score { input } => score(&input),
        Command::Verify {
            degrees,
            cap,
            workers,
            format,
            witness_dir,
        } => match resolve_cap(cap) {
            Ok(cap) => verify(&degrees, cap, workers, format, witness_dir.as_deref()),
            Err(e) => CommandOutcome::error(e),
        },
        Command::Check { degrees, format } => check(&degrees, format),
        Command::Sweep {
            max_n,
            cap,
            workers,
            out,
        } => match resolve_cap(cap) {
            Ok(cap) => sweep(max_n, cap, workers, &out),
            Err(e) => CommandOutcome::error(e),
        },
        Command::Search {
            degrees,
            budget,
            seed,
            format,
        } => search(&degrees, budget, seed, format),
    }
}

/// Tree JSON plus the construction summary; readable back by `score`.
#[derive(Serialize)]
struct ConstructPayload<'a> {
    #[serde(flatten)]
    tree: TreeJson,
    degrees: &'a DegreeSequence,
    leaves: usize,
    sombor_index: f64,
}

fn construct(d: &DegreeSequence, fmt: TreeFormat, out: Option<&Path>) -> CommandOutcome {
    let tree = construct_max_tree(d);
    let so = sombor_index(&tree);
    let payload = match fmt {
        TreeFormat::Json => to_json_line(&ConstructPayload {
            tree: TreeJson::from(&tree),
            degrees: d,
            leaves: tree.leaves().len(),
            sombor_index: so,
        }),
        TreeFormat::Dot => format::to_dot(&tree),
        TreeFormat::Edges => format::to_edge_list(&tree),
    };
    match out {
        None => CommandOutcome::ok(payload),
        Some(path) => match fs::write(path, payload) {
            Ok(()) => CommandOutcome::ok(format!(
                "degrees={} n={} leaves={} so={}\n",
                d.joined(),
                tree.vertex_count(),
                tree.leaves().len(),
                fmt_sig12(so)
            )),
            Err(e) => CommandOutcome::error(format!("{}: {e}", path.display())),
        },
    }
}

fn score(input: &Path) -> CommandOutcome {
    let text = if input == Path::new("-") {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(input)
    };
    let text = match text {
        Ok(t) => t,
        Err(e) => return CommandOutcome::error(format!("{}: {e}", input.display())),
    };
    match serde_json::from_str::<Tree>(&text) {
        Ok(tree) => CommandOutcome::ok(format!("{}\n", fmt_sig12(sombor_index(&tree)))),
        Err(e) => CommandOutcome::error(format!("{}: {e}", input.display())),
    }
}

#[derive(Serialize)]
struct VerifyPayload<'a> {
    status: &'static str,
    #[serde(flatten)]
    comparison: &'a Comparison,
}

fn verify_status(c: &Comparison) -> (&'static str, i32) {
    if c.is_counterexample() {
        ("counterexample", EXIT_COUNTEREXAMPLE)
    } else if c.oracle.capped {
        ("inconclusive", EXIT_INCONCLUSIVE)
    } else {
        ("optimal", EXIT_OK)
    }
}

fn verify(
    d: &DegreeSequence,
    cap: u64,
    workers: usize,
    fmt: ReportFormat,
    witness_dir: Option<&Path>,
) -> CommandOutcome {
    let c = compare(d, cap, workers);
    let (status, exit_code) = verify_status(&c);
    let mut stderr = String::new();
    if c.is_counterexample() {
        if let Some(dir) = witness_dir {
            match write_witnesses(dir, &c) {
                Ok(files) => {
                    for f in files {
                        let _ = writeln!(stderr, "wrote {}", f.display());
                    }
                }
                Err(e) => return CommandOutcome::error(e),
            }
        }
    }
    let stdout = match fmt {
        ReportFormat::Json => to_json_line(&VerifyPayload {
            status,
            comparison: &c,
        }),
        ReportFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "degrees: {}", d.joined());
            let _ = writeln!(s, "n: {}", d.vertex_count());
            let _ = writeln!(s, "constructed_so: {}", fmt_sig12(c.constructed_so));
            let _ = writeln!(s, "oracle_so: {}", fmt_sig12(c.oracle.max_so));
            let _ = writeln!(s, "gap: {}", fmt_sig12(c.gap));
            let _ = writeln!(s, "enumerated: {}", c.oracle.enumerated);
            let _ = writeln!(s, "capped: {}", c.oracle.capped);
            let _ = writeln!(s, "witnesses: {}", c.oracle.witnesses.len());
            if c.is_counterexample() {
                let _ = writeln!(s, "constructed_tree: {}", format::to_json(&c.constructed));
                if let Some(w) = c.oracle.witnesses.first() {
                    let _ = writeln!(s, "oracle_tree: {}", format::to_json(&w.tree));
                }
            }
            let _ = writeln!(s, "status: {status}");
            s
        }
    };
    CommandOutcome {
        exit_code,
        stdout,
        stderr,
    }
}

fn check(d: &DegreeSequence, fmt: ReportFormat) -> CommandOutcome {
    let tree = construct_max_tree(d);
    let local = is_local_max(&tree, REL_TOL);
    let theorem1 = check_theorem1(&tree);
    let exit_code = if local.local_max {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    };
    let stdout = match fmt {
        ReportFormat::Json => to_json_line(&json!({
            "degrees": d,
            "tree": TreeJson::from(&tree),
            "local_max": local,
            "theorem1": theorem1,
        })),
        ReportFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "degrees: {}", d.joined());
            let _ = writeln!(s, "so: {}", fmt_sig12(local.so));
            let _ = writeln!(s, "local_max: {} ({} moves)", local.local_max, local.moves_checked);
            let _ = writeln!(s, "best_gain: {}", fmt_sig12(local.best_gain));
            let t1 = &theorem1.summary;
            let _ = writeln!(
                s,
                "theorem1: {} paths, {} records, {} violations",
                t1.paths, t1.records, t1.violations
            );
            for r in theorem1.violations() {
                let p = &theorem1.paths[r.path_index];
                let _ = writeln!(
                    s,
                    "  path {:?} degrees {:?} i={} {:?} d(v{})={} vs d(v{})={}",
                    p.vertices, p.degrees, r.i, r.parity, r.lhs_position, r.lhs_degree,
                    r.rhs_position, r.rhs_degree
                );
            }
            s
        }
    };
    CommandOutcome {
        exit_code,
        stdout,
        stderr: String::new(),
    }
}

fn sweep(max_n: usize, cap: u64, workers: usize, out: &Path) -> CommandOutcome {
    if max_n < 3 {
        return CommandOutcome::error("--max-n must be at least 3");
    }
    let witness_dir = out.parent().unwrap_or(Path::new("."));
    let outcome = match experiments::sweep(max_n, cap, workers, Some(witness_dir)) {
        Ok(o) => o,
        Err(e) => return CommandOutcome::error(e),
    };
    if let Err(e) = experiments::write_csv_file(&outcome.records, out) {
        return CommandOutcome::error(e);
    }
    let rows = outcome.records.len();
    let optimal = outcome.records.iter().filter(|r| r.optimal).count();
    let capped = outcome.records.iter().filter(|r| r.capped).count();
    let counter = outcome
        .records
        .iter()
        .filter(|r| !r.capped && !r.optimal)
        .count();
    let local = outcome.records.iter().filter(|r| r.local_max).count();
    let stdout = format!(
        "rows: {rows}\noptimal: {optimal}\ncapped: {capped}\ncounterexamples: {counter}\nlocal_max: {local}\nreport: {}\n",
        out.display()
    );
    let mut stderr = String::new();
    for f in &outcome.witness_files {
        let _ = writeln!(stderr, "wrote {}", f.display());
    }
    let exit_code = if counter > 0 {
        EXIT_COUNTEREXAMPLE
    } else if capped > 0 {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    };
    CommandOutcome {
        exit_code,
        stdout,
        stderr,
    }
}

fn search(d: &DegreeSequence, budget: u64, seed: u64, fmt: ReportFormat) -> CommandOutcome {
    let out = anneal_search(d, budget, seed);
    let improved = out.best_so > out.start_so * (1.0 + REL_TOL);
    let exit_code = if improved { EXIT_COUNTEREXAMPLE } else { EXIT_OK };
    let stdout = match fmt {
        ReportFormat::Json => to_json_line(&json!({
            "degrees": d,
            "budget": budget,
            "seed": seed,
            "improved": improved,
            "outcome": out,
        })),
        ReportFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "degrees: {}", d.joined());
            let _ = writeln!(s, "start_so: {}", fmt_sig12(out.start_so));
            let _ = writeln!(s, "best_so: {}", fmt_sig12(out.best_so));
            let _ = writeln!(s, "initial_temperature: {}", fmt_sig12(out.initial_temperature));
            let _ = writeln!(s, "proposed: {}", out.proposed);
            let _ = writeln!(s, "accepted: {}", out.accepted);
            if improved {
                let _ = writeln!(s, "best_tree: {}", format::to_json(&out.best));
            }
            let _ = writeln!(s, "improved: {improved}");
            s
        }
    };
    CommandOutcome {
        exit_code,
        stdout,
        stderr: String::new(),
    }
}
