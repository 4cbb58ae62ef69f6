//! Frenet apparatus of nondegenerate curves in Minkowski 3-space.
//!
//! Supported frame signatures:
//! * timelike curve: g(T,T) = -1, g(N,N) = g(B,B) = +1, with
//!   T' = kappa N, N' = kappa T - tau B, B' = tau N (arc-length derivatives);
//! * spacelike curve with spacelike normal: g(T,T) = g(N,N) = +1,
//!   g(B,B) = -1 (the Bertrand-mate case).
//!
//! In both cases B = -(T x N) under the Lorentzian cross product, which
//! lands the binormal in the correct causal class automatically, and
//! tau = g(dB/ds, N). The torsion is never taken from a raw third
//! derivative: B is differentiated as a field of frames, with a wider
//! step than the curve-level stencils, which keeps its noise near 1e-8.

use crate::curve::{linspace, Curve, CurveError};
use crate::diff;
use crate::lorentz::{lorentz_cross, metric, metric_sq, CausalCharacter, LorentzVec};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum FrenetError {
    #[error(transparent)]
    Curve(#[from] CurveError),

    #[error("tangent is null at s = {s:.6}; no Frenet frame exists there")]
    NullTangent { s: f64 },

    #[error("curvature below {tol:.1e} at s = {s:.6}; frame degenerates")]
    DegenerateCurvature { s: f64, tol: f64 },

    #[error("principal normal is not spacelike at s = {s:.6}; frame signature unsupported")]
    NonSpacelikeNormal { s: f64 },

    #[error("operation requires a frame along a timelike curve (frame at s = {s:.6} is {character})")]
    NotTimelikeFrame { s: f64, character: CausalCharacter },

    #[error("Darboux axis is lightlike: |kappa| = |tau| = {kappa:.6}")]
    LightlikeDarboux { kappa: f64, tau: f64 },

    #[error("curvature pair (kappa = {kappa:.6}, tau = {tau:.6}) does not generate {wanted}: {reason}")]
    ClassMismatch { kappa: f64, tau: f64, wanted: &'static str, reason: &'static str },
}

/// Step sizes and tolerances for the frame pipeline.
#[derive(Debug, Clone, Copy)]
pub struct FrenetOptions {
    /// Base step for curve-level stencils, scaled by max(1, |s|).
    pub step: f64,
    /// Step for differentiating fields of frames (torsion, indicatrix
    /// tangents). Wider than `step` because field values carry the noise
    /// of second-derivative stencils.
    pub field_step: f64,
    /// Degeneracy tolerance for speeds and curvatures.
    pub tol: f64,
}

impl Default for FrenetOptions {
    fn default() -> Self {
        FrenetOptions { step: 5e-3, field_step: 0.1, tol: 1e-9 }
    }
}

/// Orthonormal frame and curvatures at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct FrenetFrame {
    pub s: f64,
    pub t: LorentzVec,
    pub n: LorentzVec,
    pub b: LorentzVec,
    pub kappa: f64,
    pub tau: f64,
    /// ||gamma'(s)|| in the curve's own parameter.
    pub speed: f64,
    /// Causal character of the tangent.
    pub character: CausalCharacter,
}

/// Frame without torsion. Cheap enough to use as a field value.
#[derive(Debug, Clone, Copy)]
pub(crate) struct TnbFrame {
    pub t: LorentzVec,
    pub n: LorentzVec,
    pub b: LorentzVec,
    pub kappa: f64,
    pub speed: f64,
    pub character: CausalCharacter,
}

pub(crate) fn frame_tnb(curve: &Curve, s: f64, opts: &FrenetOptions) -> Result<TnbFrame, FrenetError> {
    let d = curve.derivatives(s, 2, opts.step)?;
    let (d1, d2) = (d[0], d[1]);

    let q = metric_sq(d1);
    if q.abs() <= opts.tol {
        return Err(FrenetError::NullTangent { s });
    }
    let eps_t = q.signum();
    let speed = q.abs().sqrt();
    let t = d1 * (1.0 / speed);

    // arc-length derivative of T by the chain rule through ||gamma'||:
    // dT/ds_arc = gamma'' / v^2 - gamma' * (dv/dt) / v^3
    let v_dot = eps_t * metric(d1, d2) / speed;
    let dt_ds = d2 * (1.0 / (speed * speed)) - d1 * (v_dot / (speed * speed * speed));

    let k2 = metric_sq(dt_ds);
    let kappa = k2.abs().sqrt();
    if kappa <= opts.tol {
        return Err(FrenetError::DegenerateCurvature { s, tol: opts.tol });
    }
    if k2 < 0.0 {
        return Err(FrenetError::NonSpacelikeNormal { s });
    }
    let n = dt_ds * (1.0 / kappa);
    let b = -lorentz_cross(t, n);

    let character = if eps_t < 0.0 { CausalCharacter::Timelike } else { CausalCharacter::Spacelike };
    Ok(TnbFrame { t, n, b, kappa, speed, character })
}

/// Full Frenet data at `s`: frame vectors, curvature and torsion.
///
/// Works for timelike curves and for spacelike curves whose principal
/// normal is spacelike. Torsion comes from differentiating the binormal
/// field at `field_step` and projecting onto N.
pub fn frenet_apparatus(curve: &Curve, s: f64, opts: &FrenetOptions) -> Result<FrenetFrame, FrenetError> {
    let frame = frame_tnb(curve, s, opts)?;

    let mut b_field = |u: f64| frame_tnb(curve, u, opts).map(|fr| fr.b);
    let db_dt = diff::deriv1(&mut b_field, s, opts.field_step)?;
    let db_ds = db_dt * (1.0 / frame.speed);
    let tau = metric(db_ds, frame.n);

    Ok(FrenetFrame {
        s,
        t: frame.t,
        n: frame.n,
        b: frame.b,
        kappa: frame.kappa,
        tau,
        speed: frame.speed,
        character: frame.character,
    })
}

// ---------------------------------------------------------------------------
// Darboux decomposition
// ---------------------------------------------------------------------------

/// Causal character of the Darboux axis w = tau T - kappa B.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DarbouxCase {
    /// |kappa| > |tau|: w spacelike, kappa = ||w|| cosh phi, |tau| = ||w|| sinh phi.
    SpacelikeAxis,
    /// |kappa| < |tau|: w timelike, kappa = ||w|| sinh phi, |tau| = ||w|| cosh phi.
    TimelikeAxis,
}

impl DarbouxCase {
    pub fn as_str(self) -> &'static str {
        match self {
            DarbouxCase::SpacelikeAxis => "spacelike_axis",
            DarbouxCase::TimelikeAxis => "timelike_axis",
        }
    }
}

/// Rotation vector of a timelike Frenet frame and its hyperbolic split.
#[derive(Debug, Clone, Copy)]
pub struct DarbouxData {
    pub w: LorentzVec,
    pub norm_w: f64,
    pub case: DarbouxCase,
    /// Hyperbolic angle splitting (kappa, |tau|) over ||w||.
    pub phi: f64,
    /// w / ||w||; spacelike in the first case, timelike in the second.
    pub axis: LorentzVec,
}

/// Decompose the frame rotation w = tau T - kappa B hyperbolically.
///
/// Requires a timelike frame and |kappa| != |tau|; on the lightlike
/// boundary the decomposition does not exist.
pub fn darboux_decomposition(frame: &FrenetFrame, tol: f64) -> Result<DarbouxData, FrenetError> {
    if frame.character != CausalCharacter::Timelike {
        return Err(FrenetError::NotTimelikeFrame { s: frame.s, character: frame.character });
    }
    let kappa = frame.kappa;
    let tau_abs = frame.tau.abs();
    let scale = kappa.max(tau_abs).max(1.0);
    if (kappa - tau_abs).abs() <= tol * scale {
        return Err(FrenetError::LightlikeDarboux { kappa, tau: frame.tau });
    }

    let w = frame.t * frame.tau - frame.b * kappa;
    let norm_w = metric_sq(w).abs().sqrt();
    let (case, phi) = if kappa > tau_abs {
        (DarbouxCase::SpacelikeAxis, (tau_abs / norm_w).asinh())
    } else {
        (DarbouxCase::TimelikeAxis, (kappa / norm_w).asinh())
    };
    let axis = w * (1.0 / norm_w);
    Ok(DarbouxData { w, norm_w, case, phi, axis })
}

// ---------------------------------------------------------------------------
// General helices and W-curves
// ---------------------------------------------------------------------------

/// Outcome of the constant-ratio helix test.
#[derive(Debug, Clone)]
pub struct HelixVerdict {
    pub is_helix: bool,
    /// Largest |tau/kappa - mean| over the sample grid.
    pub deviation: f64,
    pub mean_ratio: f64,
}

/// A curve is a general helix iff tau/kappa is constant. Samples the ratio
/// on an even grid over `window` and compares its spread against `tol`.
pub fn is_general_helix(
    curve: &Curve,
    window: (f64, f64),
    n_samples: usize,
    opts: &FrenetOptions,
    tol: f64,
) -> Result<HelixVerdict, FrenetError> {
    let grid = linspace(window.0, window.1, n_samples.max(2));
    let mut ratios = Vec::with_capacity(grid.len());
    for &s in &grid {
        let fr = frenet_apparatus(curve, s, opts)?;
        ratios.push(fr.tau / fr.kappa);
    }
    let mean: f64 = ratios.iter().sum::<f64>() / ratios.len() as f64;
    let deviation = ratios.iter().map(|r| (r - mean).abs()).fold(0.0, f64::max);
    Ok(HelixVerdict { is_helix: deviation <= tol, deviation, mean_ratio: mean })
}

/// Classes of timelike curves with constant curvatures.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WCurveKind {
    /// kappa = tau = 0: a timelike straight line.
    PlanarTimelike,
    /// tau = 0, kappa > 0: hyperbola in a timelike plane.
    OrthogonalHyperbola,
    /// |tau| > kappa > 0: helix around a timelike axis.
    TimelikeCircularHelix,
    /// 0 < |tau| < kappa: helix around a spacelike axis.
    TimelikeHyperbolicHelix,
}

impl WCurveKind {
    pub fn as_str(self) -> &'static str {
        match self {
            WCurveKind::PlanarTimelike => "planar_timelike",
            WCurveKind::OrthogonalHyperbola => "orthogonal_hyperbola",
            WCurveKind::TimelikeCircularHelix => "timelike_circular_helix",
            WCurveKind::TimelikeHyperbolicHelix => "timelike_hyperbolic_helix",
        }
    }
}

/// Classification of a constant-curvature pair, with K = |tau^2 - kappa^2|.
#[derive(Debug, Clone, Copy)]
pub struct WCurveClass {
    pub kind: WCurveKind,
    pub k: f64,
}

/// Classify constant (kappa, tau). Fails on the lightlike boundary
/// |tau| = kappa > 0 where no such curve exists.
pub fn classify_w_curve(kappa: f64, tau: f64, tol: f64) -> Result<WCurveClass, FrenetError> {
    let tau_abs = tau.abs();
    let k = (tau * tau - kappa * kappa).abs();
    if kappa <= tol {
        if tau_abs <= tol {
            return Ok(WCurveClass { kind: WCurveKind::PlanarTimelike, k });
        }
        return Err(FrenetError::ClassMismatch {
            kappa,
            tau,
            wanted: "any W-curve class",
            reason: "nonzero torsion with vanishing curvature",
        });
    }
    if tau_abs <= tol {
        return Ok(WCurveClass { kind: WCurveKind::OrthogonalHyperbola, k });
    }
    let scale = kappa.max(tau_abs).max(1.0);
    if (kappa - tau_abs).abs() <= tol * scale {
        return Err(FrenetError::LightlikeDarboux { kappa, tau });
    }
    let kind = if tau_abs > kappa {
        WCurveKind::TimelikeCircularHelix
    } else {
        WCurveKind::TimelikeHyperbolicHelix
    };
    Ok(WCurveClass { kind, k })
}

/// Build the unit-speed timelike W-curve with the requested constant
/// curvatures over `domain`. The pair must match the requested kind.
pub fn generate_w_curve(
    kind: WCurveKind,
    kappa: f64,
    tau: f64,
    domain: (f64, f64),
) -> Result<Curve, FrenetError> {
    let tol = 1e-12;
    let classified = classify_w_curve(kappa, tau, tol)?;
    if classified.kind != kind {
        return Err(FrenetError::ClassMismatch {
            kappa,
            tau,
            wanted: kind.as_str(),
            reason: "curvature pair classifies differently",
        });
    }
    let k = classified.k;
    Ok(match kind {
        WCurveKind::PlanarTimelike => Curve::axial_trig(1.0, 0.0, 1.0, domain),
        WCurveKind::OrthogonalHyperbola => Curve::axial_hyperbolic(0.0, 1.0 / kappa, kappa, domain),
        WCurveKind::TimelikeCircularHelix => {
            // (1/K) (sqrt(tau^2 K) s, kappa cos(omega s), kappa sin(omega s));
            // the sign of tau rides on omega: mirror chirality, same curvature
            Curve::axial_trig(tau.abs() / k.sqrt(), kappa / k, tau.signum() * k.sqrt(), domain)
        }
        WCurveKind::TimelikeHyperbolicHelix => {
            // (1/K) (kappa sinh(omega s), sqrt(tau^2 K) s, kappa cosh(omega s))
            Curve::axial_hyperbolic(
                tau.abs() / k.sqrt(),
                kappa / k,
                tau.signum() * k.sqrt(),
                domain,
            )
        }
    })
}

/// One period for trigonometric sources, a moderate hyperbolic-argument
/// range otherwise. Used as the default analysis window.
pub fn natural_window(curve: &Curve) -> (f64, f64) {
    use crate::curve::CurveSource;
    match curve.source() {
        CurveSource::AxialTrig { omega, .. } if *omega != 0.0 => {
            (0.0, 2.0 * std::f64::consts::PI / omega.abs())
        }
        CurveSource::AxialHyperbolic { omega, .. } if *omega != 0.0 => (0.0, 2.0 / omega.abs()),
        _ => curve.domain(),
    }
}
