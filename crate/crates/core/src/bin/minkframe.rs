use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use minkframe::emit::{emit_all, emit_tables, EmitError};
use minkframe::input::{parse_spec, resolve_spec, CurveSpec, Generator, InputError, ResolvedSpec};
use minkframe::pipeline::{run_pipeline, PipelineError};
use minkframe::report::render_text;

/// Frenet frames, Bertrand mates, and pseudosphere indicatrices of
/// timelike curves in Minkowski 3-space.
#[derive(Parser)]
#[command(name = "minkframe", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the analysis described by a spec file
    Analyze {
        /// TOML curve spec
        spec: PathBuf,
        /// Directory for summary, resolved spec, and tables
        /// (overrides the spec's [output] dir)
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Analyze the built-in worked example
    Example {
        #[arg(long)]
        out: Option<PathBuf>,
        /// Offset along the principal normal (default 4/3)
        #[arg(long)]
        lambda: Option<f64>,
        #[command(flatten)]
        overrides: Overrides,
    },
    /// Write only the sampled CSV tables for a spec
    Tables {
        spec: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        overrides: Overrides,
    },
}

#[derive(Args)]
struct Overrides {
    /// Grid size for every sampled quantity (at least 9)
    #[arg(long)]
    samples: Option<usize>,
    /// Base finite-difference step
    #[arg(long)]
    step: Option<f64>,
    /// Geodesic-residual tolerance
    #[arg(long)]
    tol: Option<f64>,
}

struct Failure {
    code: u8,
    message: String,
}

impl From<InputError> for Failure {
    fn from(e: InputError) -> Self {
        Failure { code: 2, message: e.to_string() }
    }
}

impl From<PipelineError> for Failure {
    fn from(e: PipelineError) -> Self {
        Failure { code: 3, message: e.to_string() }
    }
}

impl From<EmitError> for Failure {
    fn from(e: EmitError) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.cmd {
        Cmd::Analyze { spec, out, overrides } => {
            let resolved = load_spec(&spec, &overrides)?;
            let result = run_pipeline(&resolved)?;
            print!("{}", render_text(&result.report));
            if let Some(dir) = out.or_else(|| resolved.out_dir.clone()) {
                let written = emit_all(&dir, &resolved, &result)?;
                eprintln!("wrote {} files to {}", written.len(), dir.display());
            }
            Ok(())
        }
        Cmd::Example { out, lambda, overrides } => {
            let spec = CurveSpec {
                curve: minkframe::input::CurveSection {
                    generator: Generator::Example,
                    kappa: None,
                    tau: None,
                    samples: None,
                },
                analysis: Default::default(),
                output: Default::default(),
            };
            let mut resolved = resolve_spec(&spec)?;
            apply_overrides(&mut resolved, &overrides)?;
            if let Some(l) = lambda {
                if !l.is_finite() {
                    return Err(InputError::Validation("lambda must be finite".into()).into());
                }
                resolved.lambda = l;
            }
            let result = run_pipeline(&resolved)?;
            print!("{}", render_text(&result.report));
            if let Some(dir) = out {
                let written = emit_all(&dir, &resolved, &result)?;
                eprintln!("wrote {} files to {}", written.len(), dir.display());
            }
            Ok(())
        }
        Cmd::Tables { spec, out, overrides } => {
            let resolved = load_spec(&spec, &overrides)?;
            let result = run_pipeline(&resolved)?;
            let written = emit_tables(&out, &result)?;
            eprintln!("wrote {} files to {}", written.len(), out.display());
            Ok(())
        }
    }
}

fn load_spec(path: &PathBuf, overrides: &Overrides) -> Result<ResolvedSpec, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure {
        code: 2,
        message: format!("reading {}: {e}", path.display()),
    })?;
    let mut resolved = resolve_spec(&parse_spec(&text)?)?;
    apply_overrides(&mut resolved, overrides)?;
    Ok(resolved)
}

fn apply_overrides(spec: &mut ResolvedSpec, overrides: &Overrides) -> Result<(), Failure> {
    if let Some(n) = overrides.samples {
        if n < 9 {
            return Err(InputError::Validation("n_samples must be at least 9".into()).into());
        }
        spec.n_samples = n;
    }
    if let Some(h) = overrides.step {
        if !(h > 0.0) {
            return Err(InputError::Validation("step must be positive".into()).into());
        }
        spec.opts.step = h;
    }
    if let Some(t) = overrides.tol {
        if !(t > 0.0) {
            return Err(InputError::Validation("tol must be positive".into()).into());
        }
        spec.tol_geodesic = t;
    }
    Ok(())
}
