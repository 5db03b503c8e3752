//! `frieze`: friezes over Z[√2] from dissections of polygons.

mod commands;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Friezes over Z[√2] from polygon dissections")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the frieze of a dissection: every weight and the frieze pattern.
    Frieze {
        #[command(flatten)]
        input: Input,
        /// Re-check the Ptolemy relation on every crossing pair.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Decide unitarity and tower decomposability of a dissection.
    Check {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        out: Output,
    },
    /// Scan every tri/quad dissection for each n in a range.
    Scan(ScanArgs),
    /// Draw a dissection as SVG.
    Render {
        #[command(flatten)]
        input: Input,
        /// Add the unit arcs of the frieze that are not in the dissection.
        #[arg(long)]
        overlay_units: bool,
        /// Write to this file instead of standard output.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print s_n, d_n, ℓ_n, the convergents a_n/b_n and the Pell numbers.
    Sequences {
        #[arg(long, default_value_t = 10)]
        max: usize,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Args)]
struct Input {
    /// Dissection as JSON, e.g. {"n": 5, "arcs": [[0, 3]]}; `-` reads stdin.
    file: PathBuf,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ScanArgs {
    /// A polygon size or an inclusive range such as `5..10`.
    #[arg(long, value_parser = parse_range)]
    n: (usize, usize),
    /// Keep dissections whose vertices meet at most this many faces.
    #[arg(long)]
    type_max: Option<usize>,
    /// Keep separated dissections only.
    #[arg(long)]
    separated_only: bool,
    /// Enumerate 4-angulations only (indices refer to that enumeration).
    #[arg(long = "four-angulations")]
    four_angulations: bool,
    /// Check the unit arcs next to tower arcs instead of the conjecture.
    #[arg(long)]
    lemma56: bool,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Start the first polygon size at this enumeration index.
    #[arg(long, default_value_t = 0)]
    from_index: usize,
    /// Also verify the Ptolemy relations of every frieze.
    #[arg(long)]
    verify: bool,
    /// Counterexamples or violations stored per polygon size.
    #[arg(long, default_value_t = 100)]
    max_reported: usize,
    #[command(flatten)]
    out: Output,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => (parse(s)?, parse(s)?),
    };
    if lo < 3 {
        return Err("polygons need at least 3 vertices".into());
    }
    if hi < lo {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}

/// Errors, each with its own exit code.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Parse(String),
    Invalid(String),
    HardInvariant(String),
    Io(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Parse(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::HardInvariant(_) => 4,
            CliError::Io(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Parse(m) => write!(f, "parse error: {m}"),
            CliError::Invalid(m) => write!(f, "invalid input: {m}"),
            CliError::HardInvariant(m) => write!(f, "hard invariant failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(CliError::Usage(String::new()).code());
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("frieze: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Frieze { input, verify, out } => {
            let d = commands::read_dissection(&input.file)?;
            commands::emit(&out, commands::frieze(&d, verify, out.format)?)
        }
        Command::Check { input, out } => {
            let d = commands::read_dissection(&input.file)?;
            commands::emit(&out, commands::check(&d, out.format)?)
        }
        Command::Scan(args) => {
            let text = commands::scan(&args)?;
            commands::emit(&args.out, text)
        }
        Command::Render { input, overlay_units, output } => {
            let d = commands::read_dissection(&input.file)?;
            let svg = commands::render(&d, overlay_units)?;
            commands::write_out(output.as_deref(), &svg)
        }
        Command::Sequences { max, out } => commands::emit(&out, commands::sequences(max, out.format)),
    }
}
