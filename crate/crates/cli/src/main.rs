use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use knotprime::barred::{self, counts};
use knotprime::engine::{self, connected_sum, try_analyze};
use knotprime::factor::{self, known_knot_matches};
use knotprime::{Error, KnotInput, Status};

/// Certify knots prime from knot Floer data.
#[derive(Parser)]
#[command(name = "knotprime", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one knot file and print its verdict.
    Analyze {
        file: PathBuf,
        /// Print the proof trace and warnings.
        #[arg(long)]
        explain: bool,
        /// Print the verdict as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Analyze every *.json knot file in a directory.
    Batch {
        dir: PathBuf,
        /// Write the CSV summary here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write the connected sum of two knot files.
    Tensor {
        first: PathBuf,
        second: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Print the bar-complex of a knot file's complex.
    Reduce { file: PathBuf },
    /// Print the irreducible and symmetric factorizations of Ω.
    Factor { file: PathBuf },
    /// Run the bundled corpus and the exhaustive bar tensor check.
    Selftest,
}

enum Failure {
    Invalid(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Internal(e.to_string()),
            _ => Failure::Invalid(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Analyze {
            file,
            explain,
            json,
        } => analyze(file, explain, json),
        Command::Batch { dir, out } => batch(dir, out),
        Command::Tensor { first, second, out } => tensor(first, second, out),
        Command::Reduce { file } => reduce(file),
        Command::Factor { file } => factor_cmd(file),
        Command::Selftest => selftest(),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Invalid(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            ExitCode::from(1)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn analyze(file: PathBuf, explain: bool, json: bool) -> Outcome {
    let knot = KnotInput::load(&file)?;
    let verdict = try_analyze(&knot)?;
    if json {
        println!("{}", verdict.to_json());
    } else {
        println!("{}", verdict.summary_line());
        if explain {
            for line in &verdict.diagnostics.trace {
                println!("  {line}");
            }
            for w in &verdict.diagnostics.warnings {
                println!("  warning: {w}");
            }
            if !verdict.diagnostics.certificates.is_empty() {
                let names: Vec<&str> = verdict
                    .diagnostics
                    .certificates
                    .iter()
                    .map(|k| k.name())
                    .collect();
                println!("  certificates: {}", names.join(", "));
            }
        }
    }
    if verdict.status == Status::Invalid {
        return Err(Failure::Invalid(String::new()));
    }
    Ok(())
}

fn batch(dir: PathBuf, out: Option<PathBuf>) -> Outcome {
    let summary = engine::batch_dir(&dir)?;
    println!("{summary}");
    if let Some(path) = out {
        let file = File::create(&path).map_err(Error::from)?;
        summary.write_csv(file)?;
    }
    Ok(())
}

fn tensor(first: PathBuf, second: PathBuf, out: PathBuf) -> Outcome {
    let a = KnotInput::load(&first)?;
    let b = KnotInput::load(&second)?;
    let sum = connected_sum(&a, &b)?;
    sum.save(&out)?;
    let generators = sum.complex.as_ref().map_or(0, |c| c.len());
    println!(
        "wrote {} ({}, {} ranks, {} generators)",
        out.display(),
        sum.name,
        sum.ranks.len(),
        generators
    );
    Ok(())
}

fn reduce(file: PathBuf) -> Outcome {
    let knot = KnotInput::load(&file)?;
    let complex = knot
        .complex
        .ok_or_else(|| Failure::Invalid(format!("{} has no complex", file.display())))?;
    let bars = barred::reduce(&complex)?;
    println!("τ={}", bars.tau);
    println!("bars: {}", bars.bars.len());
    for bar in &bars.bars {
        println!("  {bar}");
    }
    println!("{}", counts(&bars));
    Ok(())
}

fn factor_cmd(file: PathBuf) -> Outcome {
    let knot = KnotInput::load(&file)?;
    let omega = knot.omega();
    println!("Ω = {omega}");
    println!("irreducible: {}", factor::factor(&omega)?);
    let factorizations = factor::maximal_symmetric_factorizations(&omega)?;
    if factorizations.is_empty() {
        println!("symmetric factorizations: none");
    } else {
        println!("symmetric factorizations: {}", factorizations.len());
    }
    for f in &factorizations {
        println!("  {f}");
        for (part, knots) in known_knot_matches(f) {
            let names: Vec<&str> = knots.iter().map(|k| k.name()).collect();
            println!("    part {part} is in the class of {}", names.join(", "));
        }
    }
    Ok(())
}

fn selftest() -> Outcome {
    let report = engine::selftest();
    println!("{report}");
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Internal("selftest failed".into()))
    }
}
