use std::io::{ErrorKind, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use isotypic::cli::{build_example, emit_spec, exit_code_for_error, load_spec, run_command, Command, ExampleParams};
use isotypic::presentation::Example;
use isotypic::Error;

/// Exact isotypic analysis of finite-dimensional Hopf algebras.
///
/// Exit status: 0 when every check passes, 1 when a check fails, 2 on
/// malformed input or usage errors.
#[derive(Parser)]
#[command(name = "isotypic", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Sub,
}

#[derive(Args)]
struct SpecArg {
    /// Algebra spec file, or `-` for stdin.
    spec: String,
}

#[derive(Subcommand)]
enum Sub {
    /// Check the Hopf axioms and any declared characters.
    Verify(SpecArg),
    /// Jacobson radical via the trace form.
    Radical(SpecArg),
    /// Whether the radical is a Hopf ideal.
    Chevalley(SpecArg),
    /// Regular idempotent of the dual and one projector per character.
    Idempotents {
        #[command(flatten)]
        spec: SpecArg,
        /// Also certify orthogonality, completeness and isotypy.
        #[arg(long)]
        certify: bool,
    },
    /// Hecke algebra of the dual at its canonical idempotent.
    Hecke(SpecArg),
    /// Compare "projectors sum to 1" with "Hecke algebra has one simple module".
    #[command(name = "theorem310", alias = "sum-criterion")]
    SumCriterion(SpecArg),
    /// Print a built-in example as a spec file.
    Example {
        /// One of sweedler4, double-cover, double-cover-dual, fk3, fk3-star, kc2, ks3.
        name: String,
        /// Parameter μ of the double cover (default 0; 2 for its dual).
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        /// FK3 parameters λa,λb,λc (default 0,23,11).
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        /// Keep the FK3 parameters as polynomial variables.
        #[arg(long)]
        symbolic: bool,
    },
}

fn read_spec(path: &str) -> Result<Example, Error> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::Input(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{path}: {e}")))?
    };
    load_spec(&text)
}

/// Writes to stdout; a reader that closed the pipe early is not an error.
fn emit(text: &str) -> Result<(), Error> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(Error::Input(format!("stdout: {e}"))),
        _ => Ok(()),
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let (cmd, path) = match cli.command {
        Sub::Example { name, mu, lambda, symbolic } => {
            let ex = build_example(&name, &ExampleParams { mu, lambda, symbolic })?;
            emit(&format!("{}\n", emit_spec(&ex)))?;
            return Ok(0);
        }
        Sub::Verify(s) => (Command::Verify, s.spec),
        Sub::Radical(s) => (Command::Radical, s.spec),
        Sub::Chevalley(s) => (Command::Chevalley, s.spec),
        Sub::Idempotents { spec, certify } => (Command::Idempotents { certify }, spec.spec),
        Sub::Hecke(s) => (Command::Hecke, s.spec),
        Sub::SumCriterion(s) => (Command::SumCriterion, s.spec),
    };
    let ex = read_spec(&path)?;
    let report = run_command(&ex, cmd, &argv)?;
    if cli.json {
        emit(&format!("{}\n", report.to_json()))?;
    } else {
        emit(&report.to_text())?;
    }
    Ok(report.exit_code())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let json = cli.json;
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let code = exit_code_for_error(&e);
            if json {
                let _ = emit(&format!("{}\n", serde_json::json!({ "error": e.to_string(), "exit_code": code })));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(code as u8)
        }
    }
}
