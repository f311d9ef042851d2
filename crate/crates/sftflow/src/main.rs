//! `sftflow`: invariants and equivalence checks for topological Markov
//! shifts given by 0-1 transition matrices.
//!
//! Exit codes: 0 pass, 1 fail (negative verdict), 2 parse error,
//! 3 hypothesis or precondition violation.

use clap::{Parser, Subcommand, ValueEnum};
use sftflow::certificates::{flow_moves, verify_shift_equivalence};
use sftflow::dimension::{transports_distinguished, CertificateError};
use sftflow::files::{
    read_certificate_file, read_matrix_file, write_matrix_json, write_matrix_text, ParseError,
};
use sftflow::invariants::{
    bowen_franks, check_franks_hypothesis, compare_spectra, flow_equivalent,
    parry_sullivan_determinant,
};
use sftflow::markov::BinMatrix;
use sftflow::report::{
    CertificateReport, FlowEqReport, InvariantsReport, MoveReport, MovesReport, QuadCheckReport,
    SpectraCliReport, SuspendCheckReport, SuspendReport, WitnessReport,
};
use sftflow::suspension::{suspend, CeilingFunction};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

const EXIT_PASS: u8 = 0;
const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sftflow",
    version,
    about = "Flow- and shift-equivalence invariants of Markov shifts"
)]
struct Cli {
    /// Emit machine-readable JSON reports
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of one matrix
    Invariants { file: PathBuf },
    /// Decide flow equivalence by the determinant / Bowen-Franks pair
    Floweq { a: PathBuf, b: PathBuf },
    /// Write the discrete suspension by a ceiling function
    Suspend {
        file: PathBuf,
        /// Ceiling values, one per state, e.g. 2,1
        #[arg(long, value_delimiter = ',')]
        ceiling: Option<Vec<u32>>,
        /// Output format for the suspension matrix
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also verify that det(I - A) and the Bowen-Franks group survive
        #[arg(long)]
        check: bool,
    },
    /// Verify a shift-equivalence certificate (H, K, lag)
    VerifySe {
        a: PathBuf,
        b: PathBuf,
        cert: PathBuf,
    },
    /// Check that a certificate transports the distinguished element of the
    /// bilateral dimension group
    Quadcheck {
        a: PathBuf,
        b: PathBuf,
        cert: PathBuf,
    },
    /// List one-step flow-equivalent neighbours
    Moves { file: PathBuf },
    /// Compare spectra: Kronecker squares, nonzero spectra, determinants
    Spectra { a: PathBuf, b: PathBuf },
}

enum CliError {
    Parse(ParseError),
    Hypothesis(String),
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

impl From<sftflow::invariants::HypothesisError> for CliError {
    fn from(e: sftflow::invariants::HypothesisError) -> Self {
        CliError::Hypothesis(e.to_string())
    }
}

impl From<sftflow::suspension::SuspensionError> for CliError {
    fn from(e: sftflow::suspension::SuspensionError) -> Self {
        CliError::Hypothesis(e.to_string())
    }
}

impl From<CertificateError> for CliError {
    fn from(e: CertificateError) -> Self {
        CliError::Hypothesis(e.to_string())
    }
}

impl From<sftflow::certificates::MoveError> for CliError {
    fn from(e: sftflow::certificates::MoveError) -> Self {
        CliError::Hypothesis(e.to_string())
    }
}

fn load_matrix(path: &Path) -> Result<BinMatrix, CliError> {
    Ok(read_matrix_file(path)?.matrix)
}

fn load_checked(path: &Path) -> Result<BinMatrix, CliError> {
    let m = load_matrix(path)?;
    check_franks_hypothesis(&m, &path.display().to_string())?;
    Ok(m)
}

fn emit<T: serde::Serialize + std::fmt::Display>(json: bool, report: &T) {
    if json {
        println!("{}", serde_json::to_string(report).expect("serializable"));
    } else {
        println!("{report}");
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Invariants { file } => {
            let m = load_matrix(&file)?;
            let report = InvariantsReport::collect(&m);
            emit(cli.json, &report);
            Ok(EXIT_PASS)
        }
        Command::Floweq { a, b } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            check_franks_hypothesis(&ma, &a.display().to_string())?;
            check_franks_hypothesis(&mb, &b.display().to_string())?;
            let equivalent = flow_equivalent(&ma, &mb)?;
            let report = FlowEqReport::new(equivalent, &ma, &mb);
            emit(cli.json, &report);
            Ok(if equivalent { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Suspend {
            file,
            ceiling,
            format,
            check,
        } => {
            let doc = read_matrix_file(&file)?;
            let f = match ceiling {
                Some(values) => {
                    CeilingFunction::new(values).map_err(|e| CliError::Hypothesis(e.to_string()))?
                }
                None => doc.ceiling.clone().ok_or_else(|| {
                    CliError::Hypothesis(
                        "no ceiling given: pass --ceiling or embed one in the file".into(),
                    )
                })?,
            };
            let suspended = suspend(&doc.matrix, &f)?;
            let check_report = if check {
                let det_a = parry_sullivan_determinant(&doc.matrix);
                let det_s = parry_sullivan_determinant(&suspended);
                let bf_a = bowen_franks(&doc.matrix);
                let bf_s = bowen_franks(&suspended);
                Some(SuspendCheckReport {
                    determinant_preserved: det_a == det_s,
                    bowen_franks_preserved: bf_a == bf_s,
                    determinant: det_s.to_string(),
                    bowen_franks: bf_s.to_string(),
                })
            } else {
                None
            };
            if cli.json {
                let report = SuspendReport {
                    size: suspended.size(),
                    entries: suspended.entries_u8(),
                    labels: suspended.labels().map(|l| l.to_vec()),
                    check: check_report,
                };
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                match format {
                    Format::Text => print!("{}", write_matrix_text(&suspended)),
                    Format::Json => print!("{}", write_matrix_json(&suspended, None)),
                }
                if let Some(c) = check_report {
                    eprintln!(
                        "check: det preserved: {}, Bowen-Franks preserved: {}",
                        c.determinant_preserved, c.bowen_franks_preserved
                    );
                }
            }
            Ok(EXIT_PASS)
        }
        Command::VerifySe { a, b, cert } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            let cert = read_certificate_file(&cert)?;
            let verdict = verify_shift_equivalence(&ma.to_int_matrix(), &mb.to_int_matrix(), &cert)
                .map_err(|e| CliError::Hypothesis(e.to_string()))?;
            let report = CertificateReport::from(&verdict);
            emit(cli.json, &report);
            Ok(if report.pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Quadcheck { a, b, cert } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            let cert = read_certificate_file(&cert)?;
            let pass = transports_distinguished(&ma, &mb, &cert)?;
            let report = QuadCheckReport {
                pass,
                lag: cert.lag,
            };
            emit(cli.json, &report);
            Ok(if pass { EXIT_PASS } else { EXIT_FAIL })
        }
        Command::Moves { file } => {
            let m = load_checked(&file)?;
            let moves = flow_moves(&m)?;
            let report = MovesReport {
                count: moves.len(),
                moves: moves
                    .iter()
                    .map(|mv| MoveReport {
                        label: mv.label.clone(),
                        size: mv.matrix.size(),
                        entries: mv.matrix.entries_u8(),
                        labels: mv.matrix.labels().map(|l| l.to_vec()),
                        witness: mv.witness.as_ref().map(|w| WitnessReport {
                            r: (&w.r).into(),
                            s: (&w.s).into(),
                        }),
                    })
                    .collect(),
            };
            if cli.json {
                println!("{}", serde_json::to_string(&report).expect("serializable"));
            } else {
                println!("{} moves", report.count);
                for mv in &moves {
                    println!("-- {}", mv.label);
                    print!("{}", write_matrix_text(&mv.matrix));
                }
            }
            Ok(EXIT_PASS)
        }
        Command::Spectra { a, b } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            check_franks_hypothesis(&ma, &a.display().to_string())?;
            check_franks_hypothesis(&mb, &b.display().to_string())?;
            let r = compare_spectra(&ma, &mb)?;
            let report = SpectraCliReport::new(&r, &ma, &mb);
            emit(cli.json, &report);
            let all_equal = r.kronecker_equal && r.nonzero_spectrum_equal && r.determinant_equal;
            Ok(if all_equal { EXIT_PASS } else { EXIT_FAIL })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(CliError::Parse(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_PARSE)
        }
        Err(CliError::Hypothesis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_HYPOTHESIS)
        }
    }
}
