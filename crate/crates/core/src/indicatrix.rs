//! Spherical indicatrices: frame-vector fields traced on the unit
//! pseudospheres of Minkowski 3-space.
//!
//! A spacelike unit field lives on the de Sitter sphere g(p, p) = +1, a
//! timelike one on the hyperbolic sphere g(p, p) = -1. For a timelike base
//! curve T lands on the hyperbolic sphere while N and B land on the de
//! Sitter sphere; for a spacelike Bertrand mate the binormal is the
//! timelike leg instead.

use crate::curve::{effective_step, linspace, Curve, CurveError};
use crate::diff;
use crate::frenet::{frame_tnb, FrenetError, FrenetOptions};
use crate::lorentz::{metric_sq, LorentzVec};
use thiserror::Error;

/// Default bound on |g(p,p) - eps| for points claimed to lie on a sphere.
pub const MEMBERSHIP_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone)]
pub enum IndicatrixError {
    #[error(transparent)]
    Frenet(#[from] FrenetError),

    #[error(transparent)]
    Curve(#[from] CurveError),

    #[error("point at s = {s:.6} misses the {surface} sphere by {defect:.3e} (tol {tol:.1e})")]
    MembershipViolation { s: f64, surface: Pseudosphere, defect: f64, tol: f64 },

    #[error("indicatrix is stationary at s = {s:.6}; no tangent direction")]
    StationaryPoint { s: f64 },
}

/// Which frame vector is traced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndicatrixKind {
    Tangent,
    PrincipalNormal,
    Binormal,
}

impl IndicatrixKind {
    pub fn as_str(self) -> &'static str {
        match self {
            IndicatrixKind::Tangent => "tangent",
            IndicatrixKind::PrincipalNormal => "principal_normal",
            IndicatrixKind::Binormal => "binormal",
        }
    }
}

/// The two unit pseudospheres: g(p,p) = +1 (de Sitter) and -1 (hyperbolic).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pseudosphere {
    DeSitter,
    Hyperbolic,
}

impl Pseudosphere {
    /// Sign of g(p, p) on the sphere.
    pub fn epsilon(self) -> f64 {
        match self {
            Pseudosphere::DeSitter => 1.0,
            Pseudosphere::Hyperbolic => -1.0,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Pseudosphere::DeSitter => "de_sitter",
            Pseudosphere::Hyperbolic => "hyperbolic",
        }
    }
}

impl std::fmt::Display for Pseudosphere {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How far a point strays from a sphere: |g(p,p) - eps|.
pub fn membership_defect(surface: Pseudosphere, p: LorentzVec) -> f64 {
    (metric_sq(p) - surface.epsilon()).abs()
}

/// A curve constrained to one of the unit pseudospheres, with a grid of
/// verified sample points and an exact pointwise evaluator.
#[derive(Debug, Clone)]
pub struct CurveOnPseudosphere {
    pub surface: Pseudosphere,
    /// What the curve traces, when it is a frame-vector image.
    pub kind: Option<IndicatrixKind>,
    pub grid: Vec<f64>,
    pub points: Vec<LorentzVec>,
    /// Largest membership defect seen on the grid.
    pub max_defect: f64,
    curve: Curve,
}

impl CurveOnPseudosphere {
    /// Validate an arbitrary curve against `surface` on a sample grid.
    pub fn from_curve(
        curve: &Curve,
        surface: Pseudosphere,
        window: (f64, f64),
        n_samples: usize,
        tol: f64,
    ) -> Result<Self, IndicatrixError> {
        let grid = linspace(window.0, window.1, n_samples.max(2));
        let mut points = Vec::with_capacity(grid.len());
        let mut max_defect = 0.0_f64;
        for &s in &grid {
            let p = curve.point(s)?;
            let defect = membership_defect(surface, p);
            if defect > tol {
                return Err(IndicatrixError::MembershipViolation { s, surface, defect, tol });
            }
            max_defect = max_defect.max(defect);
            points.push(p);
        }
        Ok(CurveOnPseudosphere {
            surface,
            kind: None,
            grid,
            points,
            max_defect,
            curve: curve.clone(),
        })
    }

    /// The underlying evaluable curve (parametrized by the base parameter).
    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn point_at(&self, s: f64) -> Result<LorentzVec, IndicatrixError> {
        Ok(self.curve.point(s)?)
    }

    /// d/ds of the sphere curve at `s`, taken at the field step since the
    /// evaluator may itself contain derivative stencils.
    pub fn velocity_at(&self, s: f64, opts: &FrenetOptions) -> Result<LorentzVec, IndicatrixError> {
        let mut f = |u: f64| self.curve.point(u);
        let v = diff::deriv1(&mut f, s, opts.field_step)?;
        if v.max_abs() <= opts.tol {
            return Err(IndicatrixError::StationaryPoint { s });
        }
        Ok(v)
    }
}

/// Trace one frame vector of `base` over `window` and verify it stays on
/// its pseudosphere. The sphere is dictated by the vector's causal class:
/// timelike legs go to the hyperbolic sphere, spacelike ones to de Sitter.
pub fn spherical_indicatrix(
    base: &Curve,
    kind: IndicatrixKind,
    window: (f64, f64),
    n_samples: usize,
    opts: &FrenetOptions,
    tol: f64,
) -> Result<CurveOnPseudosphere, IndicatrixError> {
    let field_base = base.clone();
    let field_opts = *opts;
    let field = move |s: f64| -> Result<LorentzVec, CurveError> {
        let fr = frame_tnb(&field_base, s, &field_opts)
            .map_err(|e| CurveError::EvalFailed { s, reason: e.to_string() })?;
        Ok(match kind {
            IndicatrixKind::Tangent => fr.t,
            IndicatrixKind::PrincipalNormal => fr.n,
            IndicatrixKind::Binormal => fr.b,
        })
    };

    let (lo, hi) = base.domain();
    let margin = 3.0 * effective_step(opts.step, lo.abs().max(hi.abs()));
    let curve = Curve::parametric(field, (lo + margin, hi - margin));

    let grid = linspace(window.0, window.1, n_samples.max(2));
    let mut points = Vec::with_capacity(grid.len());
    for &s in &grid {
        points.push(curve.point(s)?);
    }

    // first sample picks the sphere; all samples must stay on it
    let q0 = metric_sq(points[0]);
    let surface = if q0 < 0.0 { Pseudosphere::Hyperbolic } else { Pseudosphere::DeSitter };
    let mut max_defect = 0.0_f64;
    for (&s, &p) in grid.iter().zip(&points) {
        let defect = membership_defect(surface, p);
        if defect > tol {
            return Err(IndicatrixError::MembershipViolation { s, surface, defect, tol });
        }
        max_defect = max_defect.max(defect);
    }

    Ok(CurveOnPseudosphere { surface, kind: Some(kind), grid, points, max_defect, curve })
}
