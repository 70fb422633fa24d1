//! `hochschild`: batch front end for Hochschild rings and free loop space
//! cohomology.
//!
//! Exit status is 0 on success, 2 when the input or flags are invalid and 3
//! when an internal consistency check fails.

mod commands;
mod input;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Outcome, Pipeline};

#[derive(Debug)]
pub enum Failure {
    Validation(String),
    Internal(String),
}

impl Failure {
    pub const VALIDATION: i32 = 2;
    pub const INTERNAL: i32 = 3;

    fn code(&self) -> i32 {
        match self {
            Failure::Validation(_) => Self::VALIDATION,
            Failure::Internal(_) => Self::INTERNAL,
        }
    }

    fn json(&self) -> String {
        let (kind, message) = match self {
            Failure::Validation(m) => ("validation", m),
            Failure::Internal(m) => ("internal", m),
        };
        let doc = serde_json::json!({ "error": { "kind": kind, "message": message }, "exit_code": self.code() });
        serde_json::to_string_pretty(&doc).expect("error documents serialize")
    }
}

#[derive(Parser)]
#[command(name = "hochschild", version, about = "Exact Hochschild cohomology rings and free loop space cohomology")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the JSON document here and print the text table instead.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Print the text table instead of JSON.
    #[arg(long, global = true)]
    text: bool,
}

#[derive(Args)]
struct Truncation {
    /// Z, Q, or F<p> for a prime p.
    #[arg(long)]
    ring: Option<String>,
    /// Highest degree computed.
    #[arg(long)]
    max_degree: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// HH^* of a free DGA with a Hopf diagonal, read from a JSON presentation.
    Hh {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        truncation: Truncation,
        #[arg(long, value_enum, default_value = "small")]
        pipeline: Pipeline,
        /// Run both pipelines and check that the rings agree.
        #[arg(long)]
        verify: bool,
    },
    /// Free loop space cohomology rings with their closed forms.
    Loop {
        #[command(subcommand)]
        space: Space,
    },
    /// The number of necklaces of a given length on a given alphabet.
    Necklace {
        #[arg(long)]
        alphabet: u64,
        #[arg(long)]
        length: u64,
    },
    /// The five retract identities on a seeded random free DGA, before and
    /// after perturbation.
    VerifySdr {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 2)]
        generators: usize,
        #[command(flatten)]
        truncation: Truncation,
    },
}

#[derive(Subcommand)]
enum Space {
    /// The sphere S^(d+1), the suspension of S^d.
    Sphere {
        #[arg(long)]
        d: i64,
        #[command(flatten)]
        truncation: Truncation,
        /// Also compute HH^* of T(v_d) and compare.
        #[arg(long)]
        verify: bool,
    },
    /// Complex projective space CP^n, or HP^n with --step 4.
    Cpn {
        #[arg(long)]
        n: i64,
        #[arg(long, default_value_t = 2)]
        step: i64,
        #[command(flatten)]
        truncation: Truncation,
        /// Also compute HH^* of the cobar construction and compare.
        #[arg(long)]
        verify: bool,
    },
    /// The suspension of a space X, given H^*(X) as a JSON presentation.
    Suspension {
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        truncation: Truncation,
        /// Also compare with the product transported through the cobar duality.
        #[arg(long)]
        verify: bool,
    },
}

fn run(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Hh { input, truncation: t, pipeline, verify } => {
            commands::hh(&input, t.ring.as_deref(), t.max_degree, pipeline, verify)
        }
        Command::Loop { space } => match space {
            Space::Sphere { d, truncation: t, verify } => {
                commands::loop_sphere(d, t.ring.as_deref(), t.max_degree, verify)
            }
            Space::Cpn { n, step, truncation: t, verify } => {
                commands::loop_projective(n, step, t.ring.as_deref(), t.max_degree, verify)
            }
            Space::Suspension { input, truncation: t, verify } => {
                commands::loop_suspension(&input, t.ring.as_deref(), t.max_degree, verify)
            }
        },
        Command::Necklace { alphabet, length } => commands::necklace(alphabet, length),
        Command::VerifySdr { seed, generators, truncation: t } => {
            commands::verify_sdr(seed, generators, t.ring.as_deref(), t.max_degree)
        }
    }
}

fn emit(cli_output: Option<&PathBuf>, text_mode: bool, json: &str, text: &str) -> Result<(), String> {
    let mut stdout = std::io::stdout().lock();
    let shown = match cli_output {
        Some(path) => {
            std::fs::write(path, format!("{json}\n")).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
            text
        }
        None if text_mode => text,
        None => json,
    };
    writeln!(stdout, "{}", shown.trim_end()).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (json, text, status) = match run(cli.command) {
        Ok(Outcome { json, text, status }) => (json, text, status),
        Err(f) => {
            let message = match &f {
                Failure::Validation(m) | Failure::Internal(m) => m.clone(),
            };
            eprintln!("error: {message}");
            (f.json(), format!("error: {message}\n"), f.code())
        }
    };
    if let Err(e) = emit(cli.output.as_ref(), cli.text, &json, &text) {
        eprintln!("error: {e}");
        return ExitCode::from(Failure::VALIDATION as u8);
    }
    ExitCode::from(status as u8)
}
