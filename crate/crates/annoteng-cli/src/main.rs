use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use annoteng::Dialect;
use annoteng_cli::{annotate, interpret, stats_report, validate, Options};
use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "annoteng", version, about = "Read, write and check Annotated English")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the pronunciation of every word of an annotated text
    Interpret(Common),
    /// Annotate plain text from a pronunciation lexicon
    Annotate(Common),
    /// Check the structure of an annotated text
    Validate(Common),
    /// Annotation density of an annotated text
    Stats(Common),
}

#[derive(Clone, Copy, ValueEnum)]
enum DialectArg {
    #[value(name = "GA", alias = "ga")]
    Ga,
    #[value(name = "RP", alias = "rp")]
    Rp,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum, default_value = "GA")]
    dialect: DialectArg,
    /// Unicode IPA instead of ASCII
    #[arg(long)]
    unicode: bool,
    /// Show every step of the interpretation
    #[arg(long)]
    trace: bool,
    /// Lexicon file (defaults to the bundled one)
    #[arg(long)]
    lexicon: Option<PathBuf>,
    /// Write the per-word JSON report here
    #[arg(long)]
    report: Option<PathBuf>,
    /// Fail when a word has no coding
    #[arg(long)]
    strict: bool,
    #[arg(long = "max-ann", default_value_t = 6)]
    max_ann: usize,
    /// Input file, `-` or nothing for stdin
    file: Option<PathBuf>,
}

fn read_input(file: &Option<PathBuf>) -> Result<String> {
    let mut s = String::new();
    match file {
        Some(p) if p.as_os_str() != "-" => {
            s = std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?;
        }
        _ => {
            std::io::stdin().read_to_string(&mut s)?;
        }
    }
    Ok(s)
}

fn run(cli: Cli) -> Result<i32> {
    let (Command::Interpret(c) | Command::Annotate(c) | Command::Validate(c) | Command::Stats(c)) = &cli.command;
    let opts = Options {
        dialect: match c.dialect {
            DialectArg::Ga => Dialect::GA,
            DialectArg::Rp => Dialect::RP,
        },
        unicode: c.unicode,
        trace: c.trace,
        lexicon: c.lexicon.clone(),
        report: c.report.clone(),
        strict: c.strict,
        max_annotations: c.max_ann,
    };
    let input = read_input(&c.file)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let code = match cli.command {
        Command::Interpret(_) => interpret(&input, &opts, &mut out)?,
        Command::Annotate(_) => annotate(&input, &opts, &mut out)?,
        Command::Validate(_) => validate(&input, &mut out)?,
        Command::Stats(_) => stats_report(&input, &mut out)?,
    };
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        // output closed early, e.g. piped into `head`
        Err(e) if e.downcast_ref::<std::io::Error>().is_some_and(|e| e.kind() == std::io::ErrorKind::BrokenPipe) => {
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
