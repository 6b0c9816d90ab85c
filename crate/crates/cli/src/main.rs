//! `squeezed`: build and analyze squeezed complexes from the command line.
//!
//! Exit codes: 0 when everything checked passes, 1 when a checked property
//! fails, 2 on input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use squeezed::algebra::{self, StableOperator};
use squeezed::homology::{self, HochsterOptions};
use squeezed::io::{self, OrderIdealDoc};
use squeezed::lefschetz::{self, Mode};
use squeezed::monomial::{enumerate_shifted_order_ideals, EnumerationConfig};
use squeezed::par::{self, Exec};
use squeezed::report::{self, DEFAULT_VD_BUDGET};
use squeezed::verify::{self, Suite, TPolicy, VerifyConfig};
use squeezed::{squeeze, OrderIdeal, SimplicialComplex};
use thiserror::Error;

#[derive(Parser)]
#[command(name = "squeezed", version, about = "Squeezed simplicial complexes of shifted order ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Build Δ_t(U) and print its complex document.
    Build {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Report f/h-vectors, connectivity, decomposability and singularity index of a complex.
    Analyze {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Singularity index, pseudomanifold and ball/sphere verdicts for t = 0..=d_max(U).
    Profile {
        #[arg(long)]
        ideal: PathBuf,
    },
    /// Stanley-Reisner ideal of Δ_t(U), compared with φ_t(I(U)).
    SrIdeal {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Graded Betti table of I(U) by Eliahou-Kervaire, or of I_{Δ_t(U)} by Hochster with --oracle.
    Betti {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Hilbert-function and Betti-table consistency of gin(I_{Δ_t(U)}) = I(U).
    GinCheck {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value_t = 0)]
        t: usize,
    },
    /// Weak and strong Lefschetz verdicts.
    Lefschetz {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long, default_value = "criterion")]
        mode: Mode,
    },
    /// Recover (U, e) with Δ ≅ Δ_0(U) joined with an e-simplex.
    Decompose {
        #[arg(long)]
        complex: PathBuf,
    },
    /// List shifted order ideals of P(m) with 1 <= d_max <= d.
    Enumerate {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        d: usize,
        /// Keep only this degree histogram, e.g. 1,3,3.
        #[arg(long, value_delimiter = ',')]
        h: Option<Vec<usize>>,
        /// Fail once more than this many ideals would be emitted.
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 3)]
        m_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        /// Range of t per ideal: `d` (0..=d_max) or `d+1`.
        #[arg(long, default_value = "d")]
        t_policy: TPolicy,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cap on enumerated ideals per m.
        #[arg(long)]
        budget: Option<usize>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("cannot access {path}: {source}")]
    File { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Core(#[from] squeezed::Error),
}

impl CliError {
    fn input(e: impl ToString) -> Self {
        CliError::Input(e.to_string())
    }
}

/// Produced text and whether every checked property held.
struct Output {
    text: String,
    ok: bool,
}

impl Output {
    fn pass(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.common.jobs;
    let exec = if jobs == Some(1) { Exec::Sequential } else { Exec::Parallel };
    let result = par::with_jobs(jobs, || run(&cli.command, cli.common.format, exec));
    match result.and_then(|out| emit(cli.common.out.as_deref(), &out.text).map(|_| out.ok)) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::File { path: path.into(), source }),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::File { path: path.into(), source })
}

fn load_ideal(path: &Path) -> Result<OrderIdeal, CliError> {
    Ok(io::parse_order_ideal(&read(path)?).map_err(squeezed::Error::from)?)
}

fn load_shifted(path: &Path) -> Result<OrderIdeal, CliError> {
    let u = load_ideal(path)?;
    u.require_shifted().map_err(squeezed::Error::from)?;
    Ok(u)
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    Ok(io::parse_complex(&read(path)?).map_err(squeezed::Error::from)?)
}

/// Larger t only adds cone apexes, so the CLI stops at d_max(U) + 1.
fn check_t(u: &OrderIdeal, t: usize) -> Result<(), CliError> {
    let cap = u.d_max() + 1;
    if t > cap {
        return Err(CliError::Input(format!("--t {t} exceeds d_max(U) + 1 = {cap}")));
    }
    Ok(())
}

fn csv_unsupported(format: Option<Format>, verb: &str) -> Result<(), CliError> {
    if format == Some(Format::Csv) {
        return Err(CliError::Input(format!("{verb} has no CSV output")));
    }
    Ok(())
}

fn run(command: &Command, format: Option<Format>, exec: Exec) -> Result<Output, CliError> {
    let core = |e: squeezed::Error| CliError::Core(e);
    match command {
        Command::Build { ideal, t } => {
            csv_unsupported(format, "build")?;
            let u = load_shifted(ideal)?;
            check_t(&u, *t)?;
            let delta = squeeze::build(&u, *t).map_err(|e| core(e.into()))?;
            Ok(Output::pass(io::complex_json(&delta)))
        }
        Command::Analyze { complex } => {
            let delta = load_complex(complex)?;
            let r = report::analyze(&delta, DEFAULT_VD_BUDGET).map_err(|e| core(e.into()))?;
            let text = match format {
                Some(Format::Csv) => r.to_csv(),
                _ => io::to_json(&r),
            };
            Ok(Output::pass(text))
        }
        Command::Profile { ideal } => {
            let u = load_shifted(ideal)?;
            let rows = report::profile(&u, exec, DEFAULT_VD_BUDGET).map_err(|e| core(e.into()))?;
            let text = match format {
                Some(Format::Json) => io::to_json(&rows),
                _ => report::profile_csv(&rows),
            };
            Ok(Output::pass(text))
        }
        Command::SrIdeal { ideal, t } => {
            csv_unsupported(format, "sr-ideal")?;
            let u = load_shifted(ideal)?;
            check_t(&u, *t)?;
            let delta = squeeze::build(&u, *t).map_err(|e| core(e.into()))?;
            let sr = algebra::stanley_reisner_ideal(&delta);
            let phi = algebra::apply_operator_to_ideal(&StableOperator::Phi(*t), &u.ideal()).extended(delta.n());
            let matches = phi == sr;
            let value = json!({
                "t": t,
                "stanley_reisner": io::IdealDoc::from(&sr),
                "phi_t_of_ideal": io::IdealDoc::from(&phi),
                "equal": matches,
            });
            Ok(Output { text: io::to_json(&value), ok: matches })
        }
        Command::Betti { ideal, oracle, t } => {
            csv_unsupported(format, "betti")?;
            let u = load_shifted(ideal)?;
            let table = if *oracle {
                check_t(&u, *t)?;
                let delta = squeeze::build(&u, *t).map_err(|e| core(e.into()))?;
                homology::hochster_betti(&delta, HochsterOptions { exec, ..Default::default() })
                    .map_err(|e| core(e.into()))?
            } else {
                algebra::ek_betti(&u.ideal()).map_err(|e| core(e.into()))?
            };
            Ok(Output::pass(io::to_json(&table)))
        }
        Command::GinCheck { ideal, t } => {
            csv_unsupported(format, "gin-check")?;
            let u = load_shifted(ideal)?;
            check_t(&u, *t)?;
            let r = algebra::verify_gin_claim(&u, *t, HochsterOptions { exec, ..Default::default() })
                .map_err(|e| core(e.into()))?;
            let value = json!({
                "t": t,
                "n": r.n,
                "degrees": r.up_to,
                "hilbert": { "pass": r.hilbert_ok(), "squarefree": r.hilbert_squarefree, "extended": r.hilbert_extended },
                "betti": { "pass": r.betti_ok(), "eliahou_kervaire": r.ek, "hochster": r.hochster },
            });
            Ok(Output { text: io::to_json(&value), ok: r.passed() })
        }
        Command::Lefschetz { ideal, mode } => {
            csv_unsupported(format, "lefschetz")?;
            let u = load_shifted(ideal)?;
            let verdicts = lefschetz::has_wlp(&u, *mode).and_then(|w| Ok((w, lefschetz::has_slp(&u, *mode)?)));
            match verdicts {
                Ok((wlp, slp)) => Ok(Output::pass(io::to_json(&json!({ "wlp": wlp, "slp": slp })))),
                Err(e @ lefschetz::LefschetzError::ModeDisagreement { .. }) => {
                    Ok(Output { text: io::to_json(&json!({ "error": e.to_string() })), ok: false })
                }
                Err(e) => Err(core(e.into())),
            }
        }
        Command::Decompose { complex } => {
            csv_unsupported(format, "decompose")?;
            let delta = load_complex(complex)?;
            let found = squeeze::decompose_shifted(&delta).map_err(|e| core(e.into()))?;
            let value = json!({ "ideal": OrderIdealDoc::from(&found.ideal), "cone_dim": found.cone_dim });
            Ok(Output::pass(io::to_json(&value)))
        }
        Command::Enumerate { m, d, h, budget } => {
            csv_unsupported(format, "enumerate")?;
            if *m == 0 || *d == 0 {
                return Err(CliError::input("--m and --d must be at least 1"));
            }
            let mut config = EnumerationConfig::new(*m, *d);
            config.h_filter = h.clone();
            config.budget = *budget;
            let docs = enumerate_shifted_order_ideals(config)
                .map(|r| r.map(|u| OrderIdealDoc::from(&u)))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| core(e.into()))?;
            Ok(Output::pass(io::to_json(&docs)))
        }
        Command::Verify { suite, m_max, d_max, t_policy, seed, budget } => {
            csv_unsupported(format, "verify")?;
            let suite: Suite = suite.parse().map_err(|e: verify::VerifyError| core(e.into()))?;
            if *m_max == 0 || *d_max == 0 {
                return Err(CliError::input("--m-max and --d-max must be at least 1"));
            }
            let config = VerifyConfig {
                m_max: *m_max,
                d_max: *d_max,
                t_policy: *t_policy,
                seed: *seed,
                exec,
                enumeration_budget: *budget,
                ..Default::default()
            };
            let reports = verify::run_verify(suite, &config).map_err(|e| core(e.into()))?;
            for r in &reports {
                eprintln!("{}: {}/{} passed in {:.2?}", r.suite, r.passed, r.attempted, r.duration);
            }
            let ok = reports.iter().all(|r| r.all_passed());
            Ok(Output { text: io::to_json(&reports), ok })
        }
    }
}
