use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use hilbert_quasi::cli::{
    exit_code, parse_weights, run, split_generators, Format, ProblemSpec, RunOptions, EXIT_PARSE,
};
use hilbert_quasi::{Error, TableMethod};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MethodArg {
    Recursion,
    Convolution,
}

/// Hilbert quasi-polynomial of a weighted polynomial ring or a monomial quotient.
#[derive(Parser, Debug)]
#[command(name = "hilbert-quasi", version)]
struct Args {
    /// Weights, e.g. "1 2 3 4 6" or "1,2,3,4,6".
    #[arg(long, required_unless_present = "spec")]
    weights: Option<String>,
    /// Comma-separated monomial generators, e.g. "x1^3, x2*x3".
    #[arg(long)]
    ideal: Option<String>,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Check the result against brute-force enumeration.
    #[arg(long)]
    verify: bool,
    /// Evaluate the quasi-polynomial at n (repeatable).
    #[arg(long = "eval", value_name = "N")]
    eval: Vec<u64>,
    /// Print H(0..=N).
    #[arg(long, value_name = "N")]
    table: Option<usize>,
    /// Largest Hilbert table the solver may build.
    #[arg(long, value_name = "N")]
    max_n: Option<usize>,
    /// Report coefficient periods and the fixed part.
    #[arg(long)]
    structure: bool,
    #[arg(long, value_enum, default_value = "recursion")]
    method: MethodArg,
    /// JSON problem file; command-line flags override its fields.
    #[arg(long, value_name = "PATH")]
    spec: Option<PathBuf>,
    #[arg(long, short, value_name = "PATH")]
    output: Option<PathBuf>,
}

fn build_spec(args: &Args) -> Result<ProblemSpec, Error> {
    let mut spec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text)
                .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?
        }
        None => ProblemSpec::default(),
    };
    if let Some(w) = &args.weights {
        spec.weights = parse_weights(w)?;
    }
    if let Some(i) = &args.ideal {
        spec.ideal = split_generators(i);
    }
    if let Some(f) = args.format {
        spec.format = match f {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
            FormatArg::Latex => Format::Latex,
        };
    }
    spec.verify |= args.verify;
    spec.structure |= args.structure;
    spec.eval.extend(&args.eval);
    if args.table.is_some() {
        spec.table = args.table;
    }
    Ok(spec)
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_PARSE as u8)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let mut opts = RunOptions {
        method: match args.method {
            MethodArg::Recursion => TableMethod::Recursion,
            MethodArg::Convolution => TableMethod::Convolution,
        },
        ..RunOptions::default()
    };
    if let Some(n) = args.max_n {
        opts.max_n = n;
    }
    let result = build_spec(&args).and_then(|spec| run(&spec, &opts));
    match result {
        Ok(text) => {
            let written = match &args.output {
                Some(path) => std::fs::write(path, &text),
                None => {
                    print!("{text}");
                    Ok(())
                }
            };
            match written {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::FAILURE
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
