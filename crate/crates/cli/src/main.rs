//! `twodiv`: exact local-global divisibility diagnostics for ordinary
//! elliptic curves over rational function fields of characteristic 2.

use std::path::PathBuf;
use std::time::Instant;

use anyhow::Result;
use clap::{Parser, Subcommand};
use twodiv_cli::commands;
use twodiv_cli::report::Report;
use twodiv_cli::spec::{ConstantCurveFile, LoadedSpec};
use twodiv_cli::suite::BundledSpecs;

#[derive(Parser)]
#[command(
    name = "twodiv",
    version,
    about = "Local-global divisibility diagnostics for ordinary curves over F_q(t)",
    propagate_version = true
)]
struct Cli {
    /// Emit the report as canonical JSON (the default).
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,

    /// Emit a human-readable report instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Order of the group of everywhere-locally-trivial classes at level n.
    Sha1 {
        /// Curve description file.
        #[arg(long)]
        spec: PathBuf,

        /// Level: the coefficient module is Z/2^N with N = min(n, 3) capped
        /// by the 2-power content of the j-invariant.
        #[arg(long, default_value_t = 3)]
        n: u32,
    },

    /// Divisibility of a point by a power of 2 in every sampled completion.
    LocalDiv {
        /// Curve description file (must carry a point presentation).
        #[arg(long)]
        spec: PathBuf,

        /// Point expression over the presentation, e.g. "4*P" or "P + T".
        #[arg(long)]
        point: String,

        /// Divisor: a power of 2, at least 2.
        #[arg(long, short = 'm')]
        m: u64,

        /// Sweep every finite place of degree up to this bound, plus the
        /// place at infinity.
        #[arg(long, default_value_t = 3)]
        degree_bound: usize,

        /// Starting series precision; escalated automatically on demand.
        #[arg(long, default_value_t = twodiv_core::DEFAULT_PRECISION)]
        precision: i64,
    },

    /// Divisibility of a point inside the supplied group presentation.
    GlobalDiv {
        /// Curve description file (must carry a point presentation).
        #[arg(long)]
        spec: PathBuf,

        /// Point expression over the presentation, e.g. "4*P" or "P + T".
        #[arg(long)]
        point: String,

        /// Divisor, at least 2.
        #[arg(long, short = 'm')]
        m: u64,
    },

    /// Semantic checks on a curve file's point presentation.
    MwCheck {
        /// Curve description file (must carry a point presentation).
        #[arg(long)]
        spec: PathBuf,

        /// Degree bound for the reduction places used as witnesses.
        #[arg(long, default_value_t = 3)]
        degree_bound: usize,
    },

    /// Point counts and Frobenius data of constant curves.
    Count {
        /// Constant-curve list file.
        #[arg(long)]
        spec: PathBuf,
    },

    /// H^1 of a subgroup of the units mod 2^n acting on Z/2^n.
    Cohomology {
        /// Module exponent: coefficients in Z/2^n, 1 <= n <= 6.
        #[arg(long, default_value_t = 3)]
        n: u32,

        /// Comma-separated generators of the acting subgroup, e.g. "3,7".
        #[arg(long, conflicts_with = "table")]
        subgroup: Option<String>,

        /// Tabulate every subgroup at this exponent instead.
        #[arg(long)]
        table: bool,
    },

    /// Run the bundled verification suite end to end.
    VerifyPaper {
        /// Load the bundled curve files from this directory instead of the
        /// copies compiled into the binary.
        #[arg(long)]
        spec_dir: Option<PathBuf>,
    },
}

fn run(command: &Command) -> Result<Report> {
    match command {
        Command::Sha1 { spec, n } => {
            let loaded = LoadedSpec::from_path(spec)?;
            commands::cmd_sha1(&loaded, *n)
        }
        Command::LocalDiv { spec, point, m, degree_bound, precision } => {
            let loaded = LoadedSpec::from_path(spec)?;
            commands::cmd_local_div(&loaded, point, *m, *degree_bound, *precision)
        }
        Command::GlobalDiv { spec, point, m } => {
            let loaded = LoadedSpec::from_path(spec)?;
            commands::cmd_global_div(&loaded, point, *m)
        }
        Command::MwCheck { spec, degree_bound } => {
            let loaded = LoadedSpec::from_path(spec)?;
            commands::cmd_mw_check(&loaded, *degree_bound)
        }
        Command::Count { spec } => {
            let file = ConstantCurveFile::from_path(spec)?;
            let curves = file.load()?;
            commands::cmd_count(&file.label, &curves)
        }
        Command::Cohomology { n, subgroup, table } => {
            commands::cmd_cohomology(*n, subgroup.as_deref(), *table)
        }
        Command::VerifyPaper { spec_dir } => {
            let specs = match spec_dir {
                Some(dir) => BundledSpecs::from_dir(dir)?,
                None => BundledSpecs::embedded()?,
            };
            commands::cmd_verify_paper(&specs)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let start = Instant::now();
    match run(&cli.command) {
        Ok(mut report) => {
            report.elapsed_ms = start.elapsed().as_millis();
            if cli.pretty {
                print!("{}", report.render_pretty());
            } else {
                print!("{}", report.to_json());
            }
            std::process::exit(report.exit_code());
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}
