//! `hd`: Heegaard diagram calculator.
//!
//! Subcommands parse `.hd` files, compute the first homology, enumerate
//! Floer generators, group them into Whitney-disk classes, and answer
//! disk and parity queries. Results go to standard output, diagnostics to
//! standard error, and the exit code encodes the answer:
//! 0 success, 2 parse or read failure, 3 query answered "no", 4 unknown
//! generator or fixture, 5 precondition failure.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use heegaard_core::{
    enumerate_generators, fixture, manifold_h1, maslov_parity, parse_diagram, partition_classes,
    serialize_diagram, validate, whitney_exists, DiagramError, FloerError, Generator,
    HeegaardDiagram,
};

#[derive(Parser)]
#[command(name = "hd", version, about = "Heegaard diagram calculator")]
struct Cli {
    /// Output format for report commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Print the first homology of the manifold.
    H1 { file: PathBuf },
    /// List the generators with coordinates and signs.
    Gens { file: PathBuf },
    /// Group the generators into Whitney-disk classes.
    Classes { file: PathBuf },
    /// Answer whether a Whitney disk connects two generators.
    Whitney { file: PathBuf, x: String, y: String },
    /// Print the Maslov parity of the disks connecting two generators.
    Parity { file: PathBuf, x: String, y: String },
    /// Print a built-in diagram, or write it with -o.
    Fixture {
        name: String,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Parse a diagram and report hygiene warnings.
    Validate { file: PathBuf },
}

struct Outcome {
    stdout: String,
    code: u8,
}

struct Failure {
    code: u8,
    message: String,
}

type CmdResult = Result<Outcome, Failure>;

fn done(stdout: String) -> CmdResult {
    Ok(Outcome { stdout, code: 0 })
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("{}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::H1 { file } => {
            let d = load(file)?;
            done(output::h1_line(&manifold_h1(&d)))
        }
        Command::Gens { file } => {
            let d = load(file)?;
            let report = partition_classes(&d);
            match cli.format {
                Format::Table => done(output::generators_table(&report)),
                Format::Json => done(output::json_document(d.genus(), &report)),
                Format::Dot => Err(fail(2, "--format dot applies only to `classes`")),
            }
        }
        Command::Classes { file } => {
            let d = load(file)?;
            let report = partition_classes(&d);
            match cli.format {
                Format::Table => done(output::classes_table(&report)),
                Format::Json => done(output::json_document(d.genus(), &report)),
                Format::Dot => done(output::classes_dot(&report)),
            }
        }
        Command::Whitney { file, x, y } => {
            let d = load(file)?;
            let gx = find_generator(&d, x)?;
            let gy = find_generator(&d, y)?;
            let connected = whitney_exists(&d, &gx, &gy)
                .expect("looked-up generators belong to the diagram");
            if connected {
                done("yes\n".to_string())
            } else {
                Ok(Outcome {
                    stdout: "no\n".to_string(),
                    code: 3,
                })
            }
        }
        Command::Parity { file, x, y } => {
            let d = load(file)?;
            let gx = find_generator(&d, x)?;
            let gy = find_generator(&d, y)?;
            match maslov_parity(&d, &gx, &gy) {
                Ok(parity) => done(format!("{parity}\n")),
                Err(e @ FloerError::NoWhitneyDisk { .. }) => Err(fail(5, e.to_string())),
                Err(e) => Err(fail(4, e.to_string())),
            }
        }
        Command::Fixture { name, output } => {
            let d = fixture(name).map_err(|e| match e {
                DiagramError::UnknownFixture { .. } => fail(4, e.to_string()),
                other => fail(2, other.to_string()),
            })?;
            let text = serialize_diagram(&d);
            match output {
                Some(path) => {
                    fs::write(path, text).map_err(|e| {
                        fail(2, format!("cannot write {}: {e}", path.display()))
                    })?;
                    done(String::new())
                }
                None => done(text),
            }
        }
        Command::Validate { file } => {
            let d = load(file)?;
            let warnings = validate(&d);
            if warnings.is_empty() {
                done("ok\n".to_string())
            } else {
                let mut text = String::new();
                for w in warnings {
                    text.push_str(&format!("warning: {w}\n"));
                }
                done(text)
            }
        }
    }
}

fn load(path: &Path) -> Result<HeegaardDiagram, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| fail(2, format!("cannot read {}: {e}", path.display())))?;
    parse_diagram(&text).map_err(|e| fail(2, format!("{}: {e}", path.display())))
}

/// Accepts `x0,y0` or `{x0,y0}` in any label order and resolves it against
/// the diagram's enumerated generators.
fn canonical_id(arg: &str) -> String {
    let inner = arg.trim().trim_start_matches('{').trim_end_matches('}');
    let mut labels: Vec<&str> = inner.split(',').map(str::trim).collect();
    labels.sort_unstable();
    format!("{{{}}}", labels.join(","))
}

fn find_generator(d: &HeegaardDiagram, arg: &str) -> Result<Generator, Failure> {
    let id = canonical_id(arg);
    enumerate_generators(d)
        .into_iter()
        .find(|g| g.id() == id)
        .ok_or_else(|| fail(4, format!("unknown generator `{arg}`")))
}
