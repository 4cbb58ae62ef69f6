//! Output files for an analysis run: sampled CSV tables, the JSON
//! summary, and the resolved spec.
//!
//! Every writer formats floats as `{:.16e}` and terminates lines with
//! `\n`, so a rerun over the same inputs is byte-identical.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use crate::curve::Curve;
use crate::indicatrix::IndicatrixKind;
use crate::input::{emit_resolved, ResolvedSpec};
use crate::lift::LiftedCurve;
use crate::pipeline::PipelineOutput;
use crate::report;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum EmitError {
    #[error("writing {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: io::Error,
    },
    #[error("sampling curve for {path}: {message}")]
    Sample { path: PathBuf, message: String },
}

fn write_file(dir: &Path, name: &str, contents: &str) -> Result<PathBuf, EmitError> {
    let path = dir.join(name);
    fs::write(&path, contents).map_err(|source| EmitError::Io { path: path.clone(), source })?;
    Ok(path)
}

/// `s,x1,x2,x3` rows of a curve over the grid.
pub fn curve_table(curve: &Curve, grid: &[f64], path_hint: &Path) -> Result<String, EmitError> {
    let mut out = String::from("s,x1,x2,x3\n");
    for &s in grid {
        let p = curve.point(s).map_err(|e| EmitError::Sample {
            path: path_hint.to_path_buf(),
            message: e.to_string(),
        })?;
        out.push_str(&format!("{:.16e},{:.16e},{:.16e},{:.16e}\n", s, p.x1, p.x2, p.x3));
    }
    Ok(out)
}

/// `s,x1,x2,x3,v1,v2,v3` rows of a lifted curve.
pub fn lift_table(lift: &LiftedCurve) -> String {
    let mut out = String::from("s,x1,x2,x3,v1,v2,v3\n");
    for sample in &lift.samples {
        let (p, v) = (sample.point, sample.velocity);
        out.push_str(&format!(
            "{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e}\n",
            sample.s, p.x1, p.x2, p.x3, v.x1, v.x2, v.x3
        ));
    }
    out
}

fn table_name(kind: IndicatrixKind) -> &'static str {
    match kind {
        IndicatrixKind::Tangent => "tangent_indicatrix.csv",
        IndicatrixKind::PrincipalNormal => "principal_normal_indicatrix.csv",
        IndicatrixKind::Binormal => "binormal_indicatrix.csv",
    }
}

/// Write the five sampled CSV tables (both members and the three lifted
/// indicatrices) into `dir`, creating it if needed.
pub fn emit_tables(dir: &Path, out: &PipelineOutput) -> Result<Vec<PathBuf>, EmitError> {
    fs::create_dir_all(dir)
        .map_err(|source| EmitError::Io { path: dir.to_path_buf(), source })?;

    let mut written = Vec::new();
    let base = curve_table(&out.base, &out.grid, &dir.join("base.csv"))?;
    written.push(write_file(dir, "base.csv", &base)?);
    let mate = curve_table(&out.mate, &out.grid, &dir.join("mate.csv"))?;
    written.push(write_file(dir, "mate.csv", &mate)?);

    for (kind, lift) in &out.lifts {
        written.push(write_file(dir, table_name(*kind), &lift_table(lift))?);
    }
    Ok(written)
}

/// Write every output for a finished run into `dir`, creating it if
/// needed. Returns the written paths in a fixed order.
pub fn emit_all(
    dir: &Path,
    spec: &ResolvedSpec,
    out: &PipelineOutput,
) -> Result<Vec<PathBuf>, EmitError> {
    fs::create_dir_all(dir)
        .map_err(|source| EmitError::Io { path: dir.to_path_buf(), source })?;

    let mut written = Vec::new();
    written.push(write_file(dir, "summary.json", &report::to_json(&out.report))?);
    written.push(write_file(dir, "resolved_spec.toml", &emit_resolved(spec))?);
    written.extend(emit_tables(dir, out)?);
    Ok(written)
}
