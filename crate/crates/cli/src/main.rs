//! `oddzeta`: verify odd-zeta closed forms, compute special values, print tables.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use oddzeta::harness::{
    compute, euler_lines, run_verify, table, ComputeRequest, Mode, OutputFormat, Quantity, RunConfig, SRange,
};

#[derive(Parser)]
#[command(name = "oddzeta", version, about = "Verification workbench for odd zeta closed forms")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check identity families symbolically and/or numerically.
    Verify {
        /// Comma-separated identity ids, or `all`.
        #[arg(long, default_value = "all", value_delimiter = ',')]
        ids: Vec<String>,
        /// Inclusive range `a..b`.
        #[arg(long, default_value = "1..10", value_parser = parse_range)]
        s_range: SRange,
        /// Target decimal digits P; numeric rows use tolerance 1e-(P-5).
        #[arg(long, default_value_t = 100)]
        digits: u32,
        #[arg(long, default_value = "both", value_parser = ["symbolic", "numeric", "both"])]
        mode: String,
        #[arg(long, default_value = "text", value_parser = ["text", "json", "csv"])]
        format: String,
        /// Write the report here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Allow ζ(2s) to be rewritten through Bernoulli numbers.
        #[arg(long)]
        even_zeta: bool,
        /// Perturb one identity so it must fail (for testing exit codes).
        #[arg(long, hide = true)]
        falsify: Option<String>,
    },
    /// Print one value with its error bound.
    Compute {
        #[arg(long, value_parser = ["zeta", "beta", "polygamma", "euler-term", "lattice-plus", "lattice-minus"])]
        quantity: String,
        #[arg(long)]
        m: Option<u32>,
        #[arg(long)]
        n: Option<u32>,
        /// `1/4` or `3/4`.
        #[arg(long)]
        site: Option<String>,
        #[arg(long)]
        s: Option<u32>,
        #[arg(long, default_value_t = 30)]
        digits: u32,
    },
    /// Print the exact coefficient table for s in the range (within 1..12).
    Table {
        #[arg(long, default_value = "1..5", value_parser = parse_range)]
        s_range: SRange,
    },
    /// Print the identity catalog as JSON.
    Catalog,
    /// Print Euler numbers E_0..E_max.
    Euler {
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
}

fn parse_range(text: &str) -> Result<SRange, String> {
    text.parse().map_err(|e: oddzeta::Error| e.to_string())
}

fn usage_error(err: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { ids, s_range, digits, mode, format, out, even_zeta, falsify } => {
            let config = RunConfig {
                ids,
                s_range,
                digits,
                mode: mode.parse::<Mode>().expect("restricted by clap"),
                enable_even_zeta: even_zeta,
                output_format: format.parse::<OutputFormat>().expect("restricted by clap"),
                output_path: out.clone(),
                falsify,
            };
            let doc = match run_verify(&config) {
                Ok(doc) => doc,
                Err(e) => return usage_error(e),
            };
            let text = doc.render();
            match out {
                Some(path) => {
                    if let Err(e) = fs::write(&path, text) {
                        return usage_error(format!("cannot write {}: {e}", path.display()));
                    }
                }
                None => print!("{text}"),
            }
            ExitCode::from(doc.exit_code() as u8)
        }
        Command::Compute { quantity, m, n, site, s, digits } => {
            let request = ComputeRequest {
                quantity: quantity.parse::<Quantity>().expect("restricted by clap"),
                m,
                n,
                site,
                s,
                digits,
            };
            match compute(&request) {
                Ok(out) => {
                    println!("{out}");
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Table { s_range } => match table(s_range.start, s_range.end) {
            Ok(rows) => {
                println!("s\t|E_2s|\tb_s\tpi_coefficient\tzeta_coefficient");
                for r in rows {
                    println!("{}\t{}\t{}\t{}\t{}", r.s, r.euler_abs, r.b, r.pi_coefficient, r.zeta_coefficient);
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
        Command::Catalog => {
            println!("{}", oddzeta::symbolic::catalog_json());
            ExitCode::SUCCESS
        }
        Command::Euler { max } => match euler_lines(max) {
            Ok(lines) => {
                for line in lines {
                    println!("{line}");
                }
                ExitCode::SUCCESS
            }
            Err(e) => usage_error(e),
        },
    }
}
