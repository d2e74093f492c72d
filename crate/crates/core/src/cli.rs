//! Command-line front end. Exit codes: 0 success, 1 verification failure,
//! 2 usage or domain error.

use std::io::{self, Write};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::basefield::{make_basefield, BaseField};
use crate::corpus::{load_corpus, verify_corpus};
use crate::error::{Error, Result};
use crate::quarticfield::{make_quarticfield, reality_check, QuarticField};
use crate::rank::{classify_shapes, rank_closed_form, rank_generic, RankResult};

/// Values of `l` swept by `verify` when none is given.
pub const SWEEP_LS: [u64; 8] = [2, 17, 41, 73, 89, 97, 113, 137];

#[derive(Debug, Parser)]
#[command(name = "quartic-rank", version, about = "2-rank of the class group of Q(sqrt(n·ε₀·sqrt(l)))")]
pub struct Cli {
    /// Suppress summaries; only rows and diagnostics are printed.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rank of a single field.
    Rank {
        #[arg(long)]
        l: u64,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = PathArg::Both)]
        path: PathArg,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Rows for every admissible n up to a bound.
    Enumerate {
        #[arg(long)]
        l: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long)]
        rank: Option<u32>,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// Shapes of n giving a target rank.
    Classify {
        #[arg(long)]
        l: u64,
        #[arg(long, value_parser = clap::value_parser!(u8).range(0..=3))]
        rank: u8,
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Corpus check and dual-path sweep.
    Verify {
        #[arg(long, value_enum)]
        only: Option<VerifyPart>,
        #[arg(long)]
        l: Option<u64>,
        #[arg(long, default_value_t = 2000)]
        sweep_max: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PathArg {
    Generic,
    Closed,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ListFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyPart {
    Corpus,
    Sweep,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRow {
    pub n: u64,
    pub n_factors: String,
    pub l: u64,
    pub mu: usize,
    pub r_star: u8,
    pub rank: u32,
    pub case_id: String,
    pub conductor: u128,
}

impl OutputRow {
    pub fn new(field: &QuarticField, result: &RankResult) -> Result<Self> {
        let n_factors = if field.factors.is_empty() {
            "1".to_string()
        } else {
            field.factors.iter().map(u64::to_string).collect::<Vec<_>>().join("*")
        };
        let conductor = u128::try_from(&field.conductor).map_err(|_| Error::ConductorOverflow {
            n: field.n,
            l: field.l(),
        })?;
        Ok(OutputRow {
            n: field.n,
            n_factors,
            l: field.l(),
            mu: result.mu,
            r_star: result.r_star,
            rank: result.rank,
            case_id: result.case_id.clone(),
            conductor,
        })
    }
}

/// Writes rows as CSV with a header line.
pub fn write_csv<W: Write>(out: W, rows: &[OutputRow]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new().from_writer(out);
    if rows.is_empty() {
        w.write_record(["n", "n_factors", "l", "mu", "r_star", "rank", "case_id", "conductor"])?;
    }
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()
}

pub fn read_csv<R: io::Read>(input: R) -> std::result::Result<Vec<OutputRow>, csv::Error> {
    csv::Reader::from_reader(input).deserialize().collect()
}

fn write_rows<W: Write>(out: &mut W, rows: &[OutputRow], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => write_csv(out, rows),
        Format::Json => {
            for row in rows {
                serde_json::to_writer(&mut *out, row)?;
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

/// Admissible `n ≤ n_max` for `k`: squarefree, coprime to `l`, odd when `l = 2`.
pub fn admissible_n(k: &BaseField, n_max: u64) -> Vec<u64> {
    (1..=n_max)
        .filter(|&n| gcd(n, k.l) == 1 && crate::arith::is_squarefree(n))
        .collect()
}

pub fn enumerate_rows(k: &BaseField, n_max: u64, rank: Option<u32>) -> Result<Vec<OutputRow>> {
    let rows: Result<Vec<Option<OutputRow>>> = admissible_n(k, n_max)
        .into_par_iter()
        .map(|n| {
            let field = make_quarticfield(n, k)?;
            let result = rank_generic(&field)?;
            if rank.is_none_or(|r| r == result.rank) {
                Ok(Some(OutputRow::new(&field, &result)?))
            } else {
                Ok(None)
            }
        })
        .collect();
    Ok(rows?.into_iter().flatten().collect())
}

/// Problems found for one `(n, l)` in a sweep.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepIssue {
    pub n: u64,
    pub l: u64,
    pub message: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub checked: usize,
    pub issues: Vec<SweepIssue>,
}

/// Dual-path agreement, classification membership, conductor parity and
/// reality for every admissible `n ≤ n_max`.
pub fn verify_sweep(k: &BaseField, n_max: u64) -> Result<SweepReport> {
    let descriptors: Vec<_> = (0..=3).map(|r| classify_shapes(k, r)).collect();
    let ns = admissible_n(k, n_max);
    let issues: Vec<Vec<SweepIssue>> = ns
        .par_iter()
        .map(|&n| -> Result<Vec<SweepIssue>> {
            let field = make_quarticfield(n, k)?;
            let g = rank_generic(&field)?;
            let c = rank_closed_form(&field)?;
            let mut problems = Vec::new();
            if g.rank != c.rank {
                problems.push(format!("generic rank {} != closed-form rank {} ({})", g.rank, c.rank, c.case_id));
            }
            for (r, ds) in descriptors.iter().enumerate() {
                let mut matched = false;
                for d in ds {
                    matched |= d.matches(&field)?;
                }
                if matched != (g.rank == r as u32) {
                    problems.push(format!("rank {} but rank-{r} descriptor match = {matched}", g.rank));
                }
            }
            let eight = &field.conductor % 8u8 == 0u8.into();
            if eight != (field.shape.is_even() || k.is_two()) {
                problems.push(format!("conductor {} breaks the mod-8 rule", field.conductor));
            }
            if !reality_check(&field) {
                problems.push("reality check failed".into());
            }
            Ok(problems
                .into_iter()
                .map(|message| SweepIssue { n, l: k.l, message })
                .collect())
        })
        .collect::<Result<_>>()?;
    Ok(SweepReport {
        checked: ns.len(),
        issues: issues.into_iter().flatten().collect(),
    })
}

/// Runs a parsed command, writing to `out`/`err`; returns the exit code.
pub fn run<W: Write, E: Write>(cli: Cli, out: &mut W, err: &mut E) -> i32 {
    match dispatch(&cli, out, err) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(RunError::Domain(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(RunError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

enum RunError {
    Domain(Error),
    Io(io::Error),
}

impl From<Error> for RunError {
    fn from(e: Error) -> Self {
        RunError::Domain(e)
    }
}

impl From<io::Error> for RunError {
    fn from(e: io::Error) -> Self {
        RunError::Io(e)
    }
}

fn dispatch<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> std::result::Result<bool, RunError> {
    match cli.command {
        Command::Rank { l, n, path, format } => {
            let k = make_basefield(l)?;
            let field = make_quarticfield(n, &k)?;
            let result = match path {
                PathArg::Generic => rank_generic(&field)?,
                PathArg::Closed => rank_closed_form(&field)?,
                PathArg::Both => {
                    let g = rank_generic(&field)?;
                    let c = rank_closed_form(&field)?;
                    if g.rank != c.rank {
                        writeln!(err, "divergent ranks: generic {} vs closed form {} ({})", g.rank, c.rank, c.case_id)?;
                        return Ok(false);
                    }
                    g
                }
            };
            write_rows(out, &[OutputRow::new(&field, &result)?], format)?;
            Ok(true)
        }
        Command::Enumerate { l, n_max, rank, format } => {
            let k = make_basefield(l)?;
            write_rows(out, &enumerate_rows(&k, n_max, rank)?, format)?;
            Ok(true)
        }
        Command::Classify { l, rank, format } => {
            let k = make_basefield(l)?;
            let descriptors = classify_shapes(&k, rank);
            match format {
                ListFormat::Json => {
                    serde_json::to_writer_pretty(&mut *out, &descriptors).map_err(io::Error::from)?;
                    writeln!(out)?;
                }
                ListFormat::Text => {
                    for d in &descriptors {
                        writeln!(out, "{:<9} {}", d.id, d.description)?;
                    }
                }
            }
            Ok(true)
        }
        Command::Verify { only, l, sweep_max } => {
            if let Some(l) = l {
                make_basefield(l)?;
            }
            let mut ok = true;
            if only != Some(VerifyPart::Sweep) {
                let report = verify_corpus(&load_corpus(), l);
                for f in &report.failures {
                    writeln!(err, "corpus failure: {f:?}")?;
                }
                if !cli.quiet {
                    writeln!(out, "corpus: {} entries, {} failures", report.checked, report.failures.len())?;
                }
                ok &= report.passed();
            }
            if only != Some(VerifyPart::Corpus) && sweep_max > 0 {
                let ls: Vec<u64> = l.map_or(SWEEP_LS.to_vec(), |l| vec![l]);
                for l in ls {
                    let report = verify_sweep(&make_basefield(l)?, sweep_max)?;
                    for issue in &report.issues {
                        writeln!(err, "sweep failure: l = {}, n = {}: {}", issue.l, issue.n, issue.message)?;
                    }
                    if !cli.quiet {
                        writeln!(out, "sweep l = {l}: {} fields, {} issues", report.checked, report.issues.len())?;
                    }
                    ok &= report.issues.is_empty();
                }
            }
            Ok(ok)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let cli = Cli::try_parse_from(std::iter::once("quartic-rank").chain(args.iter().copied())).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(cli, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn rank_row() {
        let (code, out, _) = run_args(&["rank", "--l", "41", "--n", "89"]);
        assert_eq!(code, 0);
        let rows = read_csv(out.as_bytes()).unwrap();
        assert_eq!(rows[0].rank, 1);
        assert_eq!(rows[0].conductor, 89 * 41);
    }

    #[test]
    fn domain_errors_exit_2() {
        let (code, _, err) = run_args(&["rank", "--l", "21", "--n", "2"]);
        assert_eq!(code, 2);
        assert!(err.contains("l must be 2 or a prime ≡ 1 (mod 8)"));
        assert_eq!(run_args(&["rank", "--l", "17", "--n", "12"]).0, 2);
        assert_eq!(run_args(&["rank", "--l", "17", "--n", "34"]).0, 2);
        assert_eq!(run_args(&["rank", "--l", "13", "--n", "1"]).0, 2);
    }

    #[test]
    fn classify_rank_out_of_range_is_usage_error() {
        let e = Cli::try_parse_from(["quartic-rank", "classify", "--l", "17", "--rank", "4"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn enumerate_rank_zero_l2() {
        let k = make_basefield(2).unwrap();
        let ns: Vec<u64> = enumerate_rows(&k, 100, Some(0)).unwrap().iter().map(|r| r.n).collect();
        let expected: Vec<u64> = std::iter::once(1)
            .chain((3..=100).filter(|&q| q % 4 == 3 && crate::arith::is_prime(q)))
            .collect();
        assert_eq!(ns, expected);
    }

    #[test]
    fn csv_round_trip() {
        let k = make_basefield(17).unwrap();
        let rows = enumerate_rows(&k, 300, None).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("n,n_factors,l,mu,r_star,rank,case_id,conductor\n"));
        assert!(!text.contains('\r'));
        assert_eq!(read_csv(buf.as_slice()).unwrap(), rows);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = run_args(&["verify", "--sweep-max", "200"]);
        assert_eq!(code, 0, "{out}");
        let (code, out, _) = run_args(&["verify", "--only", "corpus", "--l", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("corpus: 36 entries, 0 failures"));
        assert!(!out.contains("sweep"));
    }
}
