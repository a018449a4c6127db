use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qf48::basis::MIN_PRECISION;
use qf48::error::Error;
use qf48::report::{self, error_exit_code, Outcome};
use qf48::tables::Table;
use qf48::theta::{QuadForm, Space};

#[derive(Parser)]
#[command(name = "qf48", version, about = "Representation numbers of quaternary forms via M_2(48, χ)")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Number of q-expansion coefficients.
    #[arg(long, global = true, default_value_t = 200, env = "QF48_PRECISION", value_parser = parse_precision)]
    prec: usize,

    /// Emit the JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Expand a form, Eisenstein series, phi(a,b), cusp form or eta quotient.
    Expand { spec: String },
    /// Print an ordered basis.
    Basis {
        #[arg(long)]
        space: Space,
    },
    /// Brute-force representation count.
    Count {
        #[arg(long)]
        form: QuadForm,
        #[arg(long)]
        n: u64,
    },
    /// Coefficients of a theta product in its basis.
    Decompose {
        #[arg(long)]
        form: QuadForm,
    },
    /// Evaluate a named formula.
    Formula {
        #[arg(long)]
        name: String,
        #[arg(long)]
        n: u64,
    },
    /// Compare decompositions against the printed tables.
    VerifyTables {
        #[arg(long, value_delimiter = ',', default_value = "2,3,C", value_parser = parse_table)]
        tables: Vec<Table>,
    },
    /// Check every formula against enumeration.
    VerifyFormulas {
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
    /// Everything, over the full catalogue.
    VerifyAll {
        #[arg(long, default_value_t = 300, value_parser = clap::value_parser!(u64).range(1..))]
        nmax: u64,
    },
}

fn parse_precision(s: &str) -> Result<usize, String> {
    let p: usize = s.parse().map_err(|e| format!("{e}"))?;
    if p < MIN_PRECISION {
        return Err(format!("precision must be at least {MIN_PRECISION}"));
    }
    Ok(p)
}

fn parse_table(s: &str) -> Result<Table, String> {
    Table::parse_label(s).ok_or_else(|| format!("unknown table `{s}` (expected 2, 3 or C)"))
}

fn run(cli: &Cli) -> Result<Outcome, Error> {
    let p = cli.common.prec;
    match &cli.command {
        Command::Expand { spec } => report::expand(spec, p),
        Command::Basis { space } => report::basis(*space, p),
        Command::Count { form, n } => Ok(report::count_command(form, *n)),
        Command::Decompose { form } => report::decompose_command(form, p),
        Command::Formula { name, n } => report::formula_command(name, *n, p),
        Command::VerifyTables { tables } => report::verify_tables(tables, p),
        Command::VerifyFormulas { nmax } => report::verify_formulas(*nmax, p),
        Command::VerifyAll { nmax } => report::verify_all(*nmax, p),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(error_exit_code(&e) as u8);
        }
    };
    let body = if cli.common.json {
        serde_json::to_string_pretty(&outcome.json).expect("report serializes")
    } else {
        outcome.text.clone()
    };
    match &cli.common.out {
        Some(path) => {
            if let Err(e) = fs::write(path, body + "\n") {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => {
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = writeln!(io::stdout().lock(), "{body}");
        }
    }
    ExitCode::from(outcome.status.exit_code() as u8)
}
