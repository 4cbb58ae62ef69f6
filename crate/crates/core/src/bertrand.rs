//! Bertrand mates of timelike curves.
//!
//! The mate of a timelike curve alpha at offset lambda is beta = alpha +
//! lambda N. For a valid couple beta is spacelike with the same principal
//! normal line as alpha, and the tangents keep a constant hyperbolic angle:
//! with sinh theta = -g(T, T*) one has T* = sinh(theta) T + sigma_B
//! cosh(theta) B, where sigma_B = sign g(T*, B).
//!
//! Offsets of the constant-curvature families stay in the family: the mate
//! of an axial trigonometric curve just shrinks the radius by lambda, the
//! hyperbolic one grows it. Those closed forms are used whenever the base
//! curve is analytic, so mate frames never stack numerical stencils; table
//! curves fall back to a pointwise alpha + lambda N evaluator.

use crate::curve::{effective_step, linspace, Curve, CurveSource};
use crate::frenet::{frame_tnb, frenet_apparatus, FrenetError, FrenetFrame, FrenetOptions};
use crate::lorentz::{causal_character, metric, CausalCharacter, LorentzVec};
use thiserror::Error;

/// Largest allowed spread of the normal-collinearity defect |1 - |g(N, N*)||
/// before a pair is rejected as not a Bertrand couple.
pub const COLLINEARITY_TOL: f64 = 1e-6;

/// Largest allowed spread of sinh(theta) across the grid.
pub const ANGLE_DEV_TOL: f64 = 1e-6;

#[derive(Debug, Error, Clone)]
pub enum BertrandError {
    #[error(transparent)]
    Frenet(#[from] FrenetError),

    #[error("mate at lambda = {lambda:.6} degenerates (vanishing velocity or curvature)")]
    DegenerateMate { lambda: f64 },

    #[error("mate velocity at lambda = {lambda:.6} is {character}, not spacelike")]
    NotSpacelikeMate { lambda: f64, character: CausalCharacter },

    #[error("principal normals fail to share a line (defect {deviation:.3e} at s = {s:.6})")]
    NotBertrand { s: f64, deviation: f64 },

    #[error("tangent angle drifts by {deviation:.3e} across the window (tol {tol:.1e})")]
    NonConstantAngle { deviation: f64, tol: f64 },
}

/// Offset curve beta = alpha + lambda N with its observed velocity class.
#[derive(Debug, Clone)]
pub struct Mate {
    pub curve: Curve,
    pub lambda: f64,
    /// Causal character of beta' sampled at probe points.
    pub velocity_character: CausalCharacter,
}

/// Build the offset curve and probe it for degeneracy and causal class.
///
/// Degenerate offsets (zero velocity, or curvature collapsing to zero as
/// with lambda = 1/kappa on a circular helix) are errors; a non-spacelike
/// velocity is not, it is recorded for couple-level validation.
pub fn bertrand_mate(alpha: &Curve, lambda: f64, opts: &FrenetOptions) -> Result<Mate, BertrandError> {
    let curve = offset_curve(alpha, lambda, opts);
    let domain = curve.domain();
    probe_mate(curve, lambda, domain, opts)
}

fn probe_mate(
    curve: Curve,
    lambda: f64,
    (lo, hi): (f64, f64),
    opts: &FrenetOptions,
) -> Result<Mate, BertrandError> {
    let mut character = CausalCharacter::Spacelike;
    for f in [0.15, 0.35, 0.5, 0.65, 0.85] {
        let s = lo + f * (hi - lo);
        let d1 = curve.derivatives(s, 1, opts.step).map_err(FrenetError::from)?[0];
        if d1.max_abs() <= opts.tol {
            return Err(BertrandError::DegenerateMate { lambda });
        }
        let ch = causal_character(d1, opts.tol);
        if ch != CausalCharacter::Null {
            match frame_tnb(&curve, s, opts) {
                Err(FrenetError::DegenerateCurvature { .. }) => {
                    return Err(BertrandError::DegenerateMate { lambda });
                }
                Err(e) => return Err(e.into()),
                Ok(_) => {}
            }
        }
        if ch != CausalCharacter::Spacelike && character == CausalCharacter::Spacelike {
            character = ch;
        }
    }
    Ok(Mate { curve, lambda, velocity_character: character })
}

fn offset_curve(alpha: &Curve, lambda: f64, opts: &FrenetOptions) -> Curve {
    let domain = alpha.domain();
    match alpha.source() {
        // alpha + lambda N keeps axis and frequency, moves the radius
        // against the inward normal: N = -sign(rho) (0, cos, sin).
        CurveSource::AxialTrig { axial, radius, omega } if *radius != 0.0 => {
            Curve::axial_trig(*axial, radius - lambda * radius.signum(), *omega, domain)
        }
        CurveSource::AxialHyperbolic { axial, radius, omega } if *radius != 0.0 => {
            Curve::axial_hyperbolic(*axial, radius + lambda * radius.signum(), *omega, domain)
        }
        _ => {
            let base = alpha.clone();
            let frame_opts = *opts;
            // frame stencils need room on both sides of every eval point
            let margin = 3.0 * effective_step(opts.step, domain.0.abs().max(domain.1.abs()));
            Curve::parametric(
                move |s| {
                    let fr = frame_tnb(&base, s, &frame_opts).map_err(|e| {
                        crate::curve::CurveError::EvalFailed { s, reason: e.to_string() }
                    })?;
                    Ok(base.point(s)? + fr.n * lambda)
                },
                (domain.0 + margin, domain.1 - margin),
            )
        }
    }
}

/// Constant hyperbolic angle between the tangents of a couple.
#[derive(Debug, Clone, Copy)]
pub struct AngleData {
    /// Mean of -g(T, T*) over the grid.
    pub sinh_theta: f64,
    pub cosh_theta: f64,
    pub theta: f64,
    /// Largest |sample - mean| of sinh(theta) over the grid.
    pub deviation: f64,
}

/// Coefficients of the mate frame over the base frame, averaged over the
/// grid, with constancy and reconstruction diagnostics.
#[derive(Debug, Clone, Copy)]
pub struct FrameRelation {
    /// Rows expand (T*, N*, B*) in the ordered basis (T, N, B).
    pub matrix: [[f64; 3]; 3],
    /// Largest |entry - mean entry| over the grid.
    pub max_deviation: f64,
    /// Largest componentwise error of mapping the base frame through the
    /// mean matrix against the actual mate frame.
    pub max_residual: f64,
    /// -a^2 + b^2 + c^2 per row; (+1, +1, -1) for a spacelike mate frame.
    pub row_pseudo_norms: [f64; 3],
}

/// A validated Bertrand couple with frames of both members on a shared grid.
#[derive(Debug, Clone)]
pub struct BertrandCouple {
    pub base: Curve,
    pub mate: Curve,
    pub lambda: f64,
    pub window: (f64, f64),
    pub grid: Vec<f64>,
    pub base_frames: Vec<FrenetFrame>,
    pub mate_frames: Vec<FrenetFrame>,
    pub angle: AngleData,
    /// sign g(T*, B): which branch of the cosh the mate tangent sits on.
    pub sigma_b: f64,
    /// sign g(N, N*): whether the shared normal flips orientation.
    pub sigma_n: f64,
}

impl BertrandCouple {
    /// Build the mate at `lambda` and validate the couple over `window`:
    /// the mate must be spacelike, the principal normals collinear at every
    /// grid point, and the tangent angle constant.
    pub fn new(
        alpha: &Curve,
        lambda: f64,
        window: (f64, f64),
        n_samples: usize,
        opts: &FrenetOptions,
    ) -> Result<Self, BertrandError> {
        // probe degeneracy over the analysis window, not the full domain:
        // the couple is only claimed where it is examined
        let mate = probe_mate(offset_curve(alpha, lambda, opts), lambda, window, opts)?;
        if mate.velocity_character != CausalCharacter::Spacelike {
            return Err(BertrandError::NotSpacelikeMate {
                lambda,
                character: mate.velocity_character,
            });
        }

        let grid = linspace(window.0, window.1, n_samples.max(2));
        let mut base_frames = Vec::with_capacity(grid.len());
        let mut mate_frames = Vec::with_capacity(grid.len());
        for &s in &grid {
            base_frames.push(frenet_apparatus(alpha, s, opts)?);
            let mf = frenet_apparatus(&mate.curve, s, opts)?;
            if mf.character != CausalCharacter::Spacelike {
                return Err(BertrandError::NotSpacelikeMate { lambda, character: mf.character });
            }
            mate_frames.push(mf);
        }

        // shared normal line: |g(N, N*)| = 1 since both are unit spacelike
        let mut worst = (0.0_f64, grid[0]);
        for ((&s, bf), mf) in grid.iter().zip(&base_frames).zip(&mate_frames) {
            let defect = (1.0 - metric(bf.n, mf.n).abs()).abs();
            if defect > worst.0 {
                worst = (defect, s);
            }
        }
        if worst.0 > COLLINEARITY_TOL {
            return Err(BertrandError::NotBertrand { s: worst.1, deviation: worst.0 });
        }

        let sinhs: Vec<f64> = base_frames
            .iter()
            .zip(&mate_frames)
            .map(|(bf, mf)| -metric(bf.t, mf.t))
            .collect();
        let mean = sinhs.iter().sum::<f64>() / sinhs.len() as f64;
        let deviation = sinhs.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        if deviation > ANGLE_DEV_TOL {
            return Err(BertrandError::NonConstantAngle { deviation, tol: ANGLE_DEV_TOL });
        }
        let angle = AngleData {
            sinh_theta: mean,
            cosh_theta: mean.asinh().cosh(),
            theta: mean.asinh(),
            deviation,
        };

        let sigma_b = metric(mate_frames[0].t, base_frames[0].b).signum();
        let sigma_n = metric(base_frames[0].n, mate_frames[0].n).signum();

        Ok(BertrandCouple {
            base: alpha.clone(),
            mate: mate.curve,
            lambda,
            window,
            grid,
            base_frames,
            mate_frames,
            angle,
            sigma_b,
            sigma_n,
        })
    }

    pub fn angle(&self) -> AngleData {
        self.angle
    }

    /// Expand the mate frame in the base frame at every grid point.
    ///
    /// Coefficients come from signature-weighted projections: for
    /// V = a T + b N + c B one has a = -g(V, T), b = g(V, N), c = g(V, B).
    pub fn frame_relation(&self) -> FrameRelation {
        let coefs = |v: LorentzVec, bf: &FrenetFrame| {
            [-metric(v, bf.t), metric(v, bf.n), metric(v, bf.b)]
        };
        let per_point: Vec<[[f64; 3]; 3]> = self
            .base_frames
            .iter()
            .zip(&self.mate_frames)
            .map(|(bf, mf)| [coefs(mf.t, bf), coefs(mf.n, bf), coefs(mf.b, bf)])
            .collect();

        let mut matrix = [[0.0; 3]; 3];
        for m in &per_point {
            for r in 0..3 {
                for c in 0..3 {
                    matrix[r][c] += m[r][c];
                }
            }
        }
        let count = per_point.len() as f64;
        for row in &mut matrix {
            for entry in row {
                *entry /= count;
            }
        }

        let mut max_deviation = 0.0_f64;
        for m in &per_point {
            for r in 0..3 {
                for c in 0..3 {
                    max_deviation = max_deviation.max((m[r][c] - matrix[r][c]).abs());
                }
            }
        }

        let mut max_residual = 0.0_f64;
        for (bf, mf) in self.base_frames.iter().zip(&self.mate_frames) {
            for (row, target) in matrix.iter().zip([mf.t, mf.n, mf.b]) {
                let rec = bf.t * row[0] + bf.n * row[1] + bf.b * row[2];
                max_residual = max_residual.max((rec - target).max_abs());
            }
        }

        let row_pseudo_norms = matrix
            .map(|[a, b, c]| -a * a + b * b + c * c);

        FrameRelation { matrix, max_deviation, max_residual, row_pseudo_norms }
    }
}
