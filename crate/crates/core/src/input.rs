//! Curve specification files: TOML schema, validation, and resolution
//! into concrete analysis settings.
//!
//! A spec names exactly one curve source (a constant-curvature generator
//! with its pair, the built-in worked example, or an inline CSV table),
//! the Bertrand offset, and optional numerical settings; everything left
//! out resolves to documented defaults. `emit_resolved` writes settings
//! back out as a spec that parses to the same resolution.

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::curve::MIN_TABLE_ROWS;
use crate::frenet::FrenetOptions;
use crate::lorentz::LorentzVec;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("spec parse error: {0}")]
    Parse(String),

    #[error("spec validation error: {0}")]
    Validation(String),
}

fn invalid(msg: impl Into<String>) -> InputError {
    InputError::Validation(msg.into())
}

/// Curve sources a spec may name.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Generator {
    /// |tau| > kappa > 0, axis timelike.
    CircularHelix,
    /// 0 < |tau| < kappa, axis spacelike.
    HyperbolicHelix,
    /// The built-in kappa = 1, tau = 2 helix with offset 4/3.
    Example,
    /// Inline CSV sample table.
    Table,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSpec {
    pub curve: CurveSection,
    #[serde(default)]
    pub analysis: AnalysisSection,
    #[serde(default)]
    pub output: OutputSection,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CurveSection {
    pub generator: Generator,
    pub kappa: Option<f64>,
    pub tau: Option<f64>,
    /// CSV rows `s,x1,x2,x3`, one per line; a header line is allowed.
    pub samples: Option<String>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AnalysisSection {
    pub lambda: Option<f64>,
    pub n_samples: Option<usize>,
    pub step: Option<f64>,
    pub field_step: Option<f64>,
    pub window: Option<[f64; 2]>,
    pub tol_geodesic: Option<f64>,
    pub tol_membership: Option<f64>,
    pub tol_class: Option<f64>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSection {
    pub dir: Option<PathBuf>,
}

/// Fully resolved source: generators carry their pair, tables their rows.
#[derive(Debug, Clone)]
pub enum ResolvedSource {
    CircularHelix { kappa: f64, tau: f64 },
    HyperbolicHelix { kappa: f64, tau: f64 },
    Example,
    Table(Vec<(f64, LorentzVec)>),
}

impl ResolvedSource {
    pub fn describe(&self) -> String {
        match self {
            ResolvedSource::CircularHelix { kappa, tau } => {
                format!("circular_helix(kappa={kappa}, tau={tau})")
            }
            ResolvedSource::HyperbolicHelix { kappa, tau } => {
                format!("hyperbolic_helix(kappa={kappa}, tau={tau})")
            }
            ResolvedSource::Example => "example".into(),
            ResolvedSource::Table(rows) => format!("table({} rows)", rows.len()),
        }
    }
}

/// Everything the pipeline needs, with all defaults applied.
#[derive(Debug, Clone)]
pub struct ResolvedSpec {
    pub source: ResolvedSource,
    pub lambda: f64,
    pub n_samples: usize,
    pub window: Option<(f64, f64)>,
    pub opts: FrenetOptions,
    pub tol_geodesic: f64,
    pub tol_membership: f64,
    pub tol_class: f64,
    pub out_dir: Option<PathBuf>,
}

pub const DEFAULT_N_SAMPLES: usize = 50;
pub const DEFAULT_TOL_GEODESIC: f64 = 1e-6;
pub const DEFAULT_TOL_GEODESIC_TABLE: f64 = 1e-4;
pub const DEFAULT_TOL_MEMBERSHIP: f64 = 1e-6;
pub const DEFAULT_LAMBDA_EXAMPLE: f64 = 4.0 / 3.0;

pub fn parse_spec(text: &str) -> Result<CurveSpec, InputError> {
    toml::from_str(text).map_err(|e| InputError::Parse(e.to_string()))
}

/// Validate a parsed spec and fill in defaults.
pub fn resolve_spec(spec: &CurveSpec) -> Result<ResolvedSpec, InputError> {
    let c = &spec.curve;
    let needs_pair = matches!(c.generator, Generator::CircularHelix | Generator::HyperbolicHelix);
    if needs_pair {
        if c.samples.is_some() {
            return Err(invalid("generator curves take no samples table"));
        }
        let kappa = c.kappa.ok_or_else(|| invalid("generator requires kappa"))?;
        let tau = c.tau.ok_or_else(|| invalid("generator requires tau"))?;
        if !kappa.is_finite() || !tau.is_finite() || kappa <= 0.0 {
            return Err(invalid("kappa must be finite and positive, tau finite"));
        }
        match c.generator {
            Generator::CircularHelix if tau.abs() <= kappa => {
                return Err(invalid("circular_helix requires |tau| > kappa"));
            }
            Generator::HyperbolicHelix if tau.abs() >= kappa || tau == 0.0 => {
                return Err(invalid("hyperbolic_helix requires 0 < |tau| < kappa"));
            }
            _ => {}
        }
    } else {
        if c.kappa.is_some() || c.tau.is_some() {
            return Err(invalid("kappa/tau apply only to generator curves"));
        }
        match (c.generator, c.samples.is_some()) {
            (Generator::Table, false) => return Err(invalid("table source requires samples")),
            (Generator::Example, true) => {
                return Err(invalid("example takes no samples table"));
            }
            _ => {}
        }
    }

    let source = match c.generator {
        Generator::CircularHelix => {
            ResolvedSource::CircularHelix { kappa: c.kappa.unwrap(), tau: c.tau.unwrap() }
        }
        Generator::HyperbolicHelix => {
            ResolvedSource::HyperbolicHelix { kappa: c.kappa.unwrap(), tau: c.tau.unwrap() }
        }
        Generator::Example => ResolvedSource::Example,
        Generator::Table => ResolvedSource::Table(parse_samples(c.samples.as_deref().unwrap())?),
    };

    let a = &spec.analysis;
    let lambda = match (a.lambda, &source) {
        (Some(l), _) => {
            if !l.is_finite() {
                return Err(invalid("lambda must be finite"));
            }
            l
        }
        (None, ResolvedSource::Example) => DEFAULT_LAMBDA_EXAMPLE,
        (None, _) => return Err(invalid("analysis.lambda is required for this source")),
    };

    let n_samples = a.n_samples.unwrap_or(DEFAULT_N_SAMPLES);
    if n_samples < 9 {
        return Err(invalid("n_samples must be at least 9"));
    }

    let defaults = FrenetOptions::default();
    let step = a.step.unwrap_or(defaults.step);
    let field_step = a.field_step.unwrap_or(defaults.field_step);
    if !(step > 0.0) || !(field_step > 0.0) {
        return Err(invalid("step and field_step must be positive"));
    }

    let window = match a.window {
        Some([lo, hi]) => {
            if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
                return Err(invalid("window must be a finite increasing pair"));
            }
            Some((lo, hi))
        }
        None => None,
    };

    let is_table = matches!(source, ResolvedSource::Table(_));
    let tol_geodesic = a.tol_geodesic.unwrap_or(if is_table {
        DEFAULT_TOL_GEODESIC_TABLE
    } else {
        DEFAULT_TOL_GEODESIC
    });
    let tol_membership = a.tol_membership.unwrap_or(DEFAULT_TOL_MEMBERSHIP);
    let tol_class = a.tol_class.unwrap_or(defaults.tol);
    for (name, t) in [
        ("tol_geodesic", tol_geodesic),
        ("tol_membership", tol_membership),
        ("tol_class", tol_class),
    ] {
        if !(t > 0.0) {
            return Err(invalid(format!("{name} must be positive")));
        }
    }

    Ok(ResolvedSpec {
        source,
        lambda,
        n_samples,
        window,
        opts: FrenetOptions { step, field_step, tol: tol_class },
        tol_geodesic,
        tol_membership,
        tol_class,
        out_dir: spec.output.dir.clone(),
    })
}

fn parse_samples(text: &str) -> Result<Vec<(f64, LorentzVec)>, InputError> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 4 {
            return Err(invalid(format!(
                "samples line {}: expected 4 comma-separated fields, got {}",
                lineno + 1,
                fields.len()
            )));
        }
        if rows.is_empty() && fields[0].parse::<f64>().is_err() {
            // header line
            continue;
        }
        let mut vals = [0.0_f64; 4];
        for (v, f) in vals.iter_mut().zip(&fields) {
            *v = f.parse::<f64>().map_err(|e| {
                invalid(format!("samples line {}: {e}: {f:?}", lineno + 1))
            })?;
            if !v.is_finite() {
                return Err(invalid(format!("samples line {}: non-finite value", lineno + 1)));
            }
        }
        rows.push((vals[0], LorentzVec::new(vals[1], vals[2], vals[3])));
    }
    if rows.len() < MIN_TABLE_ROWS {
        return Err(invalid(format!(
            "samples table needs at least {MIN_TABLE_ROWS} rows, got {}",
            rows.len()
        )));
    }
    Ok(rows)
}

/// Serializable mirror of a resolved spec; parsing its TOML resolves to
/// the same settings.
#[derive(Debug, Serialize)]
pub struct ResolvedSpecDoc<'a> {
    curve: ResolvedCurveDoc<'a>,
    analysis: ResolvedAnalysisDoc,
    #[serde(skip_serializing_if = "Option::is_none")]
    output: Option<ResolvedOutputDoc<'a>>,
}

#[derive(Debug, Serialize)]
struct ResolvedCurveDoc<'a> {
    generator: Generator,
    #[serde(skip_serializing_if = "Option::is_none")]
    kappa: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    samples: Option<String>,
    #[serde(skip)]
    _marker: std::marker::PhantomData<&'a ()>,
}

#[derive(Debug, Serialize)]
struct ResolvedAnalysisDoc {
    lambda: f64,
    n_samples: usize,
    step: f64,
    field_step: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    window: Option<[f64; 2]>,
    tol_geodesic: f64,
    tol_membership: f64,
    tol_class: f64,
}

#[derive(Debug, Serialize)]
struct ResolvedOutputDoc<'a> {
    dir: &'a std::path::Path,
}

/// Render the resolved settings as a spec document.
pub fn emit_resolved(spec: &ResolvedSpec) -> String {
    let (generator, kappa, tau, samples) = match &spec.source {
        ResolvedSource::CircularHelix { kappa, tau } => {
            (Generator::CircularHelix, Some(*kappa), Some(*tau), None)
        }
        ResolvedSource::HyperbolicHelix { kappa, tau } => {
            (Generator::HyperbolicHelix, Some(*kappa), Some(*tau), None)
        }
        ResolvedSource::Example => (Generator::Example, None, None, None),
        ResolvedSource::Table(rows) => {
            let mut csv = String::from("s,x1,x2,x3\n");
            for (s, p) in rows {
                csv.push_str(&format!("{:.16e},{:.16e},{:.16e},{:.16e}\n", s, p.x1, p.x2, p.x3));
            }
            (Generator::Table, None, None, Some(csv))
        }
    };
    let doc = ResolvedSpecDoc {
        curve: ResolvedCurveDoc {
            generator,
            kappa,
            tau,
            samples,
            _marker: std::marker::PhantomData,
        },
        analysis: ResolvedAnalysisDoc {
            lambda: spec.lambda,
            n_samples: spec.n_samples,
            step: spec.opts.step,
            field_step: spec.opts.field_step,
            window: spec.window.map(|(lo, hi)| [lo, hi]),
            tol_geodesic: spec.tol_geodesic,
            tol_membership: spec.tol_membership,
            tol_class: spec.tol_class,
        },
        output: spec.out_dir.as_deref().map(|dir| ResolvedOutputDoc { dir }),
    };
    toml::to_string(&doc).expect("resolved spec serializes")
}
