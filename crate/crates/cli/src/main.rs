use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qhsing_cli::listing::{catalog_rows, instance_markdown, instantiate, rows_markdown};
use qhsing_cli::verify::run_suite;
use qhsing_cli::{analyze, emit_tables, parse_k_range, parse_rational, CliError, TableKind};

#[derive(Parser)]
#[command(name = "qhsing", version, about = "Analyzer for isolated quasihomogeneous hypersurface singularities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Simple,
    Parabolic,
    Weights,
}

#[derive(Subcommand)]
enum Command {
    /// Full analysis of a polynomial germ at the origin.
    Analyze {
        /// Polynomial, e.g. "z1^3+z2^4+z3^2".
        polynomial: String,
        /// Comma-separated variable names in order.
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Integrability exponent p (integer, fraction or decimal).
        #[arg(long, default_value = "2")]
        p: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Characteristic-polynomial or weight tables of the catalog families.
    Tables {
        #[arg(value_enum)]
        which: Table,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Range of k for the A and D rows, e.g. 1..8.
        #[arg(long)]
        k_range: Option<String>,
        /// Modulus a of the parabolic normal forms.
        #[arg(long, allow_hyphen_values = true)]
        modulus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// List the normal forms, or instantiate one type.
    Catalog {
        /// Type such as A3, D5, E7, P8.
        tag: Option<String>,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        modulus: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
    /// Run the numerical residue checks.
    Verify {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Markdown)]
        format: Format,
    },
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    match cli.command {
        Command::Analyze {
            polynomial,
            vars,
            p,
            format,
        } => {
            let report = analyze(&polynomial, &vars, &parse_rational(&p)?)?;
            Ok((
                match format {
                    Format::Json => report.to_json(),
                    Format::Markdown => report.to_markdown(),
                },
                true,
            ))
        }
        Command::Tables {
            which,
            n,
            k_range,
            modulus,
            format,
        } => {
            let kind = match which {
                Table::Simple => TableKind::Simple,
                Table::Parabolic => TableKind::Parabolic,
                Table::Weights => TableKind::Weights,
            };
            let k_range = k_range.as_deref().map(parse_k_range).transpose()?;
            let modulus = modulus.as_deref().map(parse_rational).transpose()?;
            let doc = emit_tables(kind, n, k_range, modulus.as_ref())?;
            Ok((
                match format {
                    Format::Json => doc.to_json(),
                    Format::Markdown => doc.to_markdown(),
                },
                true,
            ))
        }
        Command::Catalog {
            tag,
            n,
            modulus,
            format,
        } => {
            let modulus = modulus.as_deref().map(parse_rational).transpose()?;
            let out = match tag {
                Some(tag) => {
                    let inst = instantiate(&tag, n, modulus.as_ref())?;
                    match format {
                        Format::Json => to_json(&inst),
                        Format::Markdown => instance_markdown(&inst),
                    }
                }
                None => {
                    if modulus.is_some() {
                        return Err(CliError::Usage("--modulus needs a type".into()));
                    }
                    let rows = catalog_rows();
                    match format {
                        Format::Json => to_json(&rows),
                        Format::Markdown => rows_markdown(&rows),
                    }
                }
            };
            Ok((out, true))
        }
        Command::Verify { seed, format } => {
            let report = run_suite(seed);
            let out = match format {
                Format::Json => report.to_json(),
                Format::Markdown => report.to_markdown(),
            };
            Ok((out, report.all_passed))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
