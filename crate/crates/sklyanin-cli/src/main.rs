//! Command-line front end for the S(1,1,1) point-scheme toolkit.
//!
//! Exit codes: 0 on success, 1 when `verify` finds a failing check, 2 for
//! configuration, argument, or I/O errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sklyanin_core::quiver::Quiver;
use sklyanin_core::relations::QuadraticRelationSet;
use sklyanin_core::report::{render_csv, render_json, render_table, run_dims, run_verify, RunConfig};
use sklyanin_core::scheme::{limit_scheme, truncated_scheme, SchemeUnion};

#[derive(Parser)]
#[command(
    name = "sklyanin",
    version,
    about = "Exact computations on the truncated point schemes of the degenerate Sklyanin algebra S(1,1,1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate graded dimensions, component counts, and ambient image ranks.
    Dims {
        /// Largest degree to compute (1..=10).
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        /// Confirm degrees above 6 (the eliminations grow exponentially).
        #[arg(long)]
        expensive: bool,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
        /// Write the report to a file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the components of a truncated scheme at one degree.
    Components {
        /// The degree.
        #[arg(long)]
        d: usize,
        /// Which scheme family to list.
        #[arg(long, value_enum, ignore_case = true, default_value_t = SchemeKind::V)]
        scheme: SchemeKind,
        /// Emit JSON instead of plain lines.
        #[arg(long)]
        json: bool,
    },
    /// Enumerate quiver paths by their vertex sequences.
    Paths {
        /// Which quiver to walk.
        #[arg(long, value_enum, ignore_case = true, default_value_t = QuiverKind::Q)]
        quiver: QuiverKind,
        /// Number of vertices per path.
        #[arg(long)]
        d: usize,
    },
    /// Print the determinant cubic and its factorization into special lines.
    DetCubic,
    /// Run every internal consistency check and print the certificate.
    Verify {
        /// Largest degree to verify (1..=10).
        #[arg(long, default_value_t = 5)]
        max_d: usize,
        /// Confirm degrees above 6.
        #[arg(long)]
        expensive: bool,
        /// Also write the certificate to a file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeKind {
    /// Full successor quiver.
    V,
    /// Limiting subquiver.
    W,
}

#[derive(Clone, Copy, ValueEnum)]
enum QuiverKind {
    /// Full successor quiver (12 edges).
    Q,
    /// Limiting subquiver (6 edges).
    Qprime,
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Dims {
            max_d,
            expensive,
            format,
            out,
        } => {
            let config = RunConfig::new(max_d, expensive).map_err(|e| e.to_string())?;
            let rows = run_dims(&config).map_err(|e| e.to_string())?;
            let rendered = match format {
                Format::Table => render_table(&rows),
                Format::Json => render_json(&rows),
                Format::Csv => render_csv(&rows),
            };
            emit(&rendered, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Components { d, scheme, json } => {
            let union = match scheme {
                SchemeKind::V => truncated_scheme(d),
                SchemeKind::W => limit_scheme(d),
            }
            .map_err(|e| e.to_string())?;
            print!("{}", render_components(&union, scheme, json));
            Ok(ExitCode::SUCCESS)
        }
        Command::Paths { quiver, d } => {
            let q = match quiver {
                QuiverKind::Q => Quiver::q(),
                QuiverKind::Qprime => Quiver::q_prime(),
            };
            let paths = q.enumerate_paths(d).map_err(|e| e.to_string())?;
            for p in &paths {
                println!("{p}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::DetCubic => {
            let rels = QuadraticRelationSet::standard();
            println!("determinant cubic: {}", rels.det_cubic());
            let (scale, lines) = rels
                .cubic_factor_check()
                .ok_or("determinant cubic does not factor into three lines")?;
            println!("scale: {scale}");
            for l in &lines {
                println!("factor: {l}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            max_d,
            expensive,
            out,
        } => {
            let config = RunConfig::new(max_d, expensive).map_err(|e| e.to_string())?;
            let outcome = run_verify(&config).map_err(|e| e.to_string())?;
            emit(&outcome.certificate, out.as_deref())?;
            if outcome.passed {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(1))
            }
        }
    }
}

/// Writes rendered output to stdout or, when requested, to a file.
fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), String> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
    }
}

/// Component listing, either as plain lines or as a JSON document.
fn render_components(union: &SchemeUnion, scheme: SchemeKind, json: bool) -> String {
    let names: Vec<String> = union.components().iter().map(|c| c.to_string()).collect();
    if json {
        let family = match scheme {
            SchemeKind::V => "V",
            SchemeKind::W => "W",
        };
        let doc = serde_json::json!({
            "scheme": family,
            "d": union.degree(),
            "count": names.len(),
            "components": names,
        });
        let mut text = serde_json::to_string_pretty(&doc).expect("component names serialize");
        text.push('\n');
        text
    } else {
        let mut text = String::new();
        for n in &names {
            text.push_str(n);
            text.push('\n');
        }
        text
    }
}
