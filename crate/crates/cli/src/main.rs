//! `tvar`: command-line front-end for tvar-core.
//!
//! Exit codes: 0 accept/pass, 1 reject/fail, 2 input error.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "tvar", version, about = "Polyhedral divisors, Demazure roots and additive group actions on T-varieties")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
pub struct Common {
    /// Problem file (JSON).
    #[arg(long)]
    pub file: PathBuf,
    /// Emit a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Properness verdict, vertices of deg D and the quasifan.
    Props {
        #[command(flatten)]
        common: Common,
    },
    /// The Q-divisor D(m).
    Eval {
        #[command(flatten)]
        common: Common,
        /// Degree, e.g. "2,0".
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
    },
    /// A basis of the graded piece A_m.
    Piece {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<String>,
    },
    /// Demazure roots of the tail cone up to a sup-norm bound.
    Roots {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Admissible rays and vertical LFIHDs.
    Vertical {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Decides existence of a horizontal LFIHD of degree e with kernel weight cone omega.
    Horizontal {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        e: Option<String>,
        /// Generators separated by ';', e.g. "0,1;1,1".
        #[arg(long, allow_hyphen_values = true)]
        omega: Option<String>,
        /// Candidate values of s, e.g. "0,1,2".
        #[arg(long)]
        s_list: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
        /// Force s1 instead of searching the passing values.
        #[arg(long)]
        s1: Option<u32>,
        /// One lambda per admissible s; prints the resulting spec.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Vec<String>,
    },
    /// Applies the file's spec to a named element and prints the exponential.
    Apply {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        element: Option<String>,
        /// Name of the formal variable.
        #[arg(long)]
        alpha: Option<String>,
        /// Truncation order for infinite series.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Checks the LFIHD axioms for the file's spec on sample elements.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        max_i: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (common, result) = match cli.cmd {
        Cmd::Props { common } => (common.clone(), commands::props(&common)),
        Cmd::Eval { common, m } => (common.clone(), commands::eval(&common, m.as_deref())),
        Cmd::Piece { common, m } => (common.clone(), commands::piece(&common, m.as_deref())),
        Cmd::Roots { common, bound } => (common.clone(), commands::roots(&common, bound)),
        Cmd::Vertical { common, bound } => (common.clone(), commands::vertical(&common, bound)),
        Cmd::Horizontal { common, e, omega, s_list, bound, s1, lambda } => {
            let opts = commands::HorizontalOpts { e, omega, s_list, bound, s1, lambdas: lambda };
            (common.clone(), commands::horizontal(&common, &opts))
        }
        Cmd::Apply { common, element, alpha, order } => {
            (common.clone(), commands::apply(&common, element.as_deref(), alpha.as_deref(), order))
        }
        Cmd::Verify { common, samples, max_i } => (common.clone(), commands::verify(&common, samples, max_i)),
    };
    match result {
        Ok(report) => {
            if common.json {
                println!("{}", serde_json::to_string_pretty(&report.json).expect("serializable"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
