use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hopfgc::cli::{self, Format, Reports, EXIT_INPUT, EXIT_PASS};
use hopfgc::{Error, Field};

#[derive(Parser)]
#[command(
    name = "hopfgc",
    version,
    about = "Exact checks for Hopf group-coalgebras and their modules"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = ReportFormat::Text, global = true)]
    report: ReportFormat,
    /// Field override, `q` or `gf:p`; only for integer-valued bundles.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<Field>,
    /// Output file (reports go to stdout when absent).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for independent checks.
    #[arg(long, default_value_t = 1, global = true)]
    workers: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the axioms of one entry, or of every entry.
    Verify {
        bundle: PathBuf,
        #[arg(long)]
        target: Option<String>,
    },
    /// Write the dual of a Hopf structure or a T/Z morphism.
    Dualize {
        bundle: PathBuf,
        #[arg(long)]
        target: String,
    },
    /// Coinvariants and the isomorphism M ≅ M^coH ⊗ H for a Hopf module.
    Fthm {
        bundle: PathBuf,
        #[arg(long)]
        target: String,
        /// Include the matrices of φ and φ⁻¹.
        #[arg(long)]
        matrices: bool,
    },
    /// YD axioms, center axioms over a registry, or a conjugacy-class lift.
    YdCheck {
        bundle: PathBuf,
        #[arg(long)]
        target: String,
        /// `standard`, `unit`, `none`, or comma-separated module ids.
        #[arg(long, default_value = "standard")]
        registry: String,
    },
    /// Set-level demonstrations on the built-in groups.
    SetDemo {
        #[arg(long)]
        group: Option<String>,
    },
    /// Write every corpus entry as a bundle file into a directory.
    ExportCorpus {
        #[arg(long)]
        dir: PathBuf,
    },
}

fn parse_field(s: &str) -> Result<Field, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), Error> {
    match out {
        Some(p) => {
            std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(args: &Args) -> Result<i32, Error> {
    let format = match args.report {
        ReportFormat::Text => Format::Text,
        ReportFormat::Json => Format::Json,
    };
    let reports: Reports = match &args.command {
        Command::Verify { bundle, target } => {
            let b = cli::load(bundle)?;
            cli::cmd_verify(&b, target.as_deref(), args.field, args.workers)?
        }
        Command::Dualize { bundle, target } => {
            let b = cli::load(bundle)?;
            let dual = cli::cmd_dualize(&b, target, args.field)?;
            emit(&dual.to_json(), args.out.as_ref())?;
            return Ok(EXIT_PASS);
        }
        Command::Fthm {
            bundle,
            target,
            matrices,
        } => {
            let b = cli::load(bundle)?;
            cli::cmd_fthm(&b, target, args.field, *matrices)?
        }
        Command::YdCheck {
            bundle,
            target,
            registry,
        } => {
            let b = cli::load(bundle)?;
            cli::cmd_yd(&b, target, args.field, registry)?
        }
        Command::SetDemo { group } => cli::cmd_set_demo(group.as_deref())?,
        Command::ExportCorpus { dir } => {
            let names = cli::cmd_export_corpus(dir, args.field.unwrap_or(Field::Rationals))?;
            emit(&(names.join("\n") + "\n"), args.out.as_ref())?;
            return Ok(EXIT_PASS);
        }
    };
    emit(&cli::render(&reports, format), args.out.as_ref())?;
    Ok(cli::exit_code(&reports))
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT as u8)
        }
    }
}
