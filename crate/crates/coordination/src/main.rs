use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use coordination::sequences::{self, SequenceName};
use coordination::suites::{self, Options, Suite};
use coordination::table::{self, Family};
use coordination::Format;

#[derive(Parser)]
#[command(name = "coordination", version, about = "Coordination sequences of the cubic lattices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a table (S, C, D, L(m)) or triangle (s-tri, d-tri, c-tri, L(m)-tri).
    Table {
        family: Family,
        rows: usize,
        /// Columns; defaults to `rows`.
        cols: Option<usize>,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Print a sequence: D, S, C, r (central) or A, Z (production of the c-triangle).
    Series {
        name: SequenceName,
        #[arg(default_value_t = 10)]
        terms: usize,
        #[arg(long, value_enum, default_value = "pretty")]
        format: Format,
    },
    /// Run a verification suite; exits nonzero if any check fails.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Hankel depth.
        #[arg(long = "N")]
        n: Option<usize>,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        window: Option<usize>,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        smoke: bool,
        #[arg(long)]
        no_timing: bool,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes());
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Table {
            family,
            rows,
            cols,
            format,
        } => {
            let t = table::build(family, rows, cols.unwrap_or(rows));
            emit(&table::render(family, &t, format));
            ExitCode::SUCCESS
        }
        Command::Series { name, terms, format } => match sequences::terms(name, terms) {
            Ok(values) => {
                emit(&sequences::render(name, &values, format));
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::FAILURE
            }
        },
        Command::Verify {
            suite,
            n,
            max_n,
            window,
            max_order,
            smoke,
            no_timing,
            seed,
            format,
        } => {
            let options = Options {
                n,
                max_n,
                window,
                max_order,
                smoke,
                timing: !no_timing,
                seed,
            };
            let doc = suites::run(suite, &options);
            emit(&doc.render(format));
            if doc.all_passed() {
                ExitCode::SUCCESS
            } else {
                eprintln!("{} of {} checks failed", doc.failures(), doc.checks.len());
                ExitCode::FAILURE
            }
        }
    }
}
