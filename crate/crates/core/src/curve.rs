//! Curve sources and the numerical differentiation oracle.
//!
//! A [`Curve`] is an evaluable map s -> R^3_1 over a closed domain. Analytic
//! sources evaluate in closed form anywhere in their domain; sampled tables
//! evaluate through local quintic interpolation. All Frenet-level quantities
//! downstream are built from [`Curve::derivatives`], so this module is the
//! accuracy floor for everything else.

use std::sync::Arc;

use thiserror::Error;

use crate::diff;
use crate::lorentz::LorentzVec;

/// Minimum number of rows a sampled table must carry: six feed the quintic
/// interpolation window and at least one more gives the windows room to slide.
pub const MIN_TABLE_ROWS: usize = 7;

#[derive(Debug, Error, Clone)]
pub enum CurveError {
    #[error("parameter {s:.6} outside curve domain [{lo:.6}, {hi:.6}] (stencil or query out of range)")]
    DomainExceeded { s: f64, lo: f64, hi: f64 },

    #[error("sampled curve needs at least {need} rows, got {got}")]
    InsufficientSamples { got: usize, need: usize },

    #[error("sample parameters must be strictly increasing (row {index})")]
    NonMonotonicSamples { index: usize },

    #[error("non-finite sample or evaluation at s = {s:.6}")]
    NonFinite { s: f64 },

    #[error("derivative order {order} unsupported (expected 1..=3)")]
    UnsupportedOrder { order: usize },

    #[error("curve evaluation failed at s = {s:.6}: {reason}")]
    EvalFailed { s: f64, reason: String },
}

/// Sampled curve data: strictly increasing parameters with their points.
#[derive(Debug, Clone)]
pub struct SampleTable {
    s: Vec<f64>,
    p: Vec<LorentzVec>,
}

impl SampleTable {
    pub fn new(rows: Vec<(f64, LorentzVec)>) -> Result<Self, CurveError> {
        if rows.len() < MIN_TABLE_ROWS {
            return Err(CurveError::InsufficientSamples { got: rows.len(), need: MIN_TABLE_ROWS });
        }
        for (i, (s, p)) in rows.iter().enumerate() {
            if !s.is_finite() || !p.is_finite() {
                return Err(CurveError::NonFinite { s: *s });
            }
            if i > 0 && rows[i - 1].0 >= *s {
                return Err(CurveError::NonMonotonicSamples { index: i });
            }
        }
        let (s, p) = rows.into_iter().unzip();
        Ok(SampleTable { s, p })
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    pub fn s_range(&self) -> (f64, f64) {
        (self.s[0], *self.s.last().unwrap())
    }

    /// Local quintic Lagrange interpolation through the six rows nearest `s`.
    fn eval(&self, s: f64) -> LorentzVec {
        let n = self.s.len();
        // first row index with parameter > s, shifted to center a 6-row window
        let idx = self.s.partition_point(|&x| x <= s);
        let start = idx.saturating_sub(3).min(n - 6);
        let xs = &self.s[start..start + 6];
        let ps = &self.p[start..start + 6];

        let mut acc = LorentzVec::ZERO;
        for i in 0..6 {
            let mut w = 1.0;
            for j in 0..6 {
                if i != j {
                    w *= (s - xs[j]) / (xs[i] - xs[j]);
                }
            }
            acc = acc + ps[i] * w;
        }
        acc
    }
}

type ParametricFn = dyn Fn(f64) -> Result<LorentzVec, CurveError> + Send + Sync;

/// How a curve produces points.
#[derive(Clone)]
pub enum CurveSource {
    /// s -> (axial*s, radius*cos(omega*s), radius*sin(omega*s)).
    /// Covers timelike circular helices and their normal offsets.
    AxialTrig { axial: f64, radius: f64, omega: f64 },
    /// s -> (radius*sinh(omega*s), axial*s, radius*cosh(omega*s)).
    /// Covers timelike hyperbolic helices, orthogonal hyperbolas and offsets.
    AxialHyperbolic { axial: f64, radius: f64, omega: f64 },
    /// Interpolated sample table.
    Table(Arc<SampleTable>),
    /// Arbitrary closed-form evaluator (composed curves, test curves).
    Parametric(Arc<ParametricFn>),
}

impl std::fmt::Debug for CurveSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveSource::AxialTrig { axial, radius, omega } => f
                .debug_struct("AxialTrig")
                .field("axial", axial)
                .field("radius", radius)
                .field("omega", omega)
                .finish(),
            CurveSource::AxialHyperbolic { axial, radius, omega } => f
                .debug_struct("AxialHyperbolic")
                .field("axial", axial)
                .field("radius", radius)
                .field("omega", omega)
                .finish(),
            CurveSource::Table(t) => write!(f, "Table({} rows)", t.len()),
            CurveSource::Parametric(_) => write!(f, "Parametric"),
        }
    }
}

/// An evaluable curve over a closed parameter interval.
#[derive(Debug, Clone)]
pub struct Curve {
    source: CurveSource,
    domain: (f64, f64),
}

impl Curve {
    pub fn new(source: CurveSource, domain: (f64, f64)) -> Self {
        Curve { source, domain }
    }

    pub fn axial_trig(axial: f64, radius: f64, omega: f64, domain: (f64, f64)) -> Self {
        Curve::new(CurveSource::AxialTrig { axial, radius, omega }, domain)
    }

    pub fn axial_hyperbolic(axial: f64, radius: f64, omega: f64, domain: (f64, f64)) -> Self {
        Curve::new(CurveSource::AxialHyperbolic { axial, radius, omega }, domain)
    }

    pub fn from_samples(rows: Vec<(f64, LorentzVec)>) -> Result<Self, CurveError> {
        let table = SampleTable::new(rows)?;
        let domain = table.s_range();
        Ok(Curve::new(CurveSource::Table(Arc::new(table)), domain))
    }

    pub fn parametric<F>(f: F, domain: (f64, f64)) -> Self
    where
        F: Fn(f64) -> Result<LorentzVec, CurveError> + Send + Sync + 'static,
    {
        Curve::new(CurveSource::Parametric(Arc::new(f)), domain)
    }

    pub fn domain(&self) -> (f64, f64) {
        self.domain
    }

    pub fn source(&self) -> &CurveSource {
        &self.source
    }

    /// Widen or narrow the evaluable interval. Analytic sources extend
    /// naturally; table-backed curves stay clamped to their data range.
    pub fn with_domain(&self, lo: f64, hi: f64) -> Self {
        let domain = match &self.source {
            CurveSource::Table(t) => {
                let (tlo, thi) = t.s_range();
                (lo.max(tlo), hi.min(thi))
            }
            _ => (lo, hi),
        };
        Curve { source: self.source.clone(), domain }
    }

    fn check_domain(&self, s: f64) -> Result<(), CurveError> {
        let (lo, hi) = self.domain;
        let slack = 1e-9 * (1.0 + lo.abs().max(hi.abs()));
        if s < lo - slack || s > hi + slack {
            return Err(CurveError::DomainExceeded { s, lo, hi });
        }
        Ok(())
    }

    /// Evaluate the curve point at `s`.
    pub fn point(&self, s: f64) -> Result<LorentzVec, CurveError> {
        self.check_domain(s)?;
        let p = match &self.source {
            CurveSource::AxialTrig { axial, radius, omega } => {
                let a = omega * s;
                LorentzVec::new(axial * s, radius * a.cos(), radius * a.sin())
            }
            CurveSource::AxialHyperbolic { axial, radius, omega } => {
                let a = omega * s;
                LorentzVec::new(radius * a.sinh(), axial * s, radius * a.cosh())
            }
            CurveSource::Table(t) => t.eval(s),
            CurveSource::Parametric(f) => f(s)?,
        };
        if !p.is_finite() {
            return Err(CurveError::NonFinite { s });
        }
        Ok(p)
    }

    /// Central-difference derivatives of orders 1..=max_order at `s`.
    ///
    /// Five-point stencils with one Richardson pass for orders 1 and 2;
    /// order 3 is the plain stencil. The step used is h * max(1, |s|).
    /// Fails with `DomainExceeded` when the stencil leaves the domain.
    pub fn derivatives(
        &self,
        s: f64,
        max_order: usize,
        h: f64,
    ) -> Result<Vec<LorentzVec>, CurveError> {
        if max_order == 0 || max_order > 3 {
            return Err(CurveError::UnsupportedOrder { order: max_order });
        }
        let h_eff = effective_step(h, s);
        let mut f = |u: f64| self.point(u);
        let mut out = Vec::with_capacity(max_order);
        out.push(diff::deriv1(&mut f, s, h_eff)?);
        if max_order >= 2 {
            out.push(diff::deriv2(&mut f, s, h_eff)?);
        }
        if max_order >= 3 {
            out.push(diff::deriv3(&mut f, s, h_eff)?);
        }
        Ok(out)
    }
}

/// Step scaling: absolute near the origin, relative at large parameters.
pub fn effective_step(h: f64, s: f64) -> f64 {
    h * s.abs().max(1.0)
}

/// n evenly spaced values over [lo, hi], endpoints included.
pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2, "linspace needs at least two points");
    let step = (hi - lo) / (n - 1) as f64;
    (0..n).map(|i| lo + step * i as f64).collect()
}
