//! End-to-end analysis: resolved spec in, report plus sampled tables out.
//!
//! The pipeline is couple-centric. It builds the base curve, forms the
//! Bertrand couple over the analysis window, reads both members' Frenet
//! statistics off the couple's shared grid, then runs the three mate
//! indicatrices through membership, geodesic-residual, closed-form
//! condition, and spray-integral checks.

use thiserror::Error;

use crate::bertrand::BertrandCouple;
use crate::curve::{effective_step, Curve};
use crate::frenet::{
    classify_w_curve, darboux_decomposition, frenet_apparatus, is_general_helix, natural_window,
    FrenetFrame, FrenetOptions, WCurveKind,
};
use crate::indicatrix::{spherical_indicatrix, CurveOnPseudosphere, IndicatrixKind};
use crate::input::{ResolvedSource, ResolvedSpec};
use crate::lift::{
    darboux_angle_rate, geodesic_condition_algebraic, geodesic_residual, is_integral_curve_of_spray,
    natural_lift, unit_speed_lift, ConditionInputs, LiftedCurve,
};
use crate::lorentz::{metric_sq, CausalCharacter};
use crate::report::{
    AnalysisReport, Checked, ClassBlock, ConditionBlock, CoupleBlock, CurveBlock, DarbouxBlock,
    GeodesicBlock, HelixBlock, IndicatrixBlock, MeanDev, SprayBlock,
};

/// Analytic base curves extend this far past the analysis window so every
/// derivative stencil, including the Darboux angle rate at its widest
/// probe, stays in domain.
const ANALYTIC_PAD: f64 = 1.0;

/// Grid-derivative agreement threshold for the spray-integral check.
const SPRAY_TOL: f64 = 1e-4;

/// Constancy of the frame-relation matrix over the grid.
const MATRIX_DEV_TOL: f64 = 1e-6;

/// Componentwise error of pushing the base frame through the mean matrix.
const MATRIX_RESIDUAL_TOL: f64 = 1e-5;

/// Allowed spread of tau/kappa for the general-helix verdict.
const HELIX_RATIO_TOL: f64 = 1e-6;

/// Curvature spread (relative) below which classification is attempted.
const CLASS_GATE: f64 = 1e-3;

const EXAMPLE_KAPPA: f64 = 1.0;
const EXAMPLE_TAU: f64 = 2.0;
const EXAMPLE_WINDOW: (f64, f64) = (0.0, 3.6);

#[derive(Debug, Error)]
#[error("{stage}: {message}")]
pub struct PipelineError {
    pub stage: &'static str,
    pub message: String,
}

fn at_stage<E: std::fmt::Display>(stage: &'static str) -> impl Fn(E) -> PipelineError {
    move |e| PipelineError { stage, message: e.to_string() }
}

/// Everything an output directory is filled from.
#[derive(Debug)]
pub struct PipelineOutput {
    pub report: AnalysisReport,
    pub base: Curve,
    pub mate: Curve,
    pub grid: Vec<f64>,
    /// Natural lifts of the three mate indicatrices, in T, N, B order.
    pub lifts: Vec<(IndicatrixKind, LiftedCurve)>,
}

pub fn run_pipeline(spec: &ResolvedSpec) -> Result<PipelineOutput, PipelineError> {
    let opts = &spec.opts;
    let (base, window) = build_base(spec)?;

    let couple = BertrandCouple::new(&base, spec.lambda, window, spec.n_samples, opts)
        .map_err(at_stage("couple"))?;

    if couple.base_frames[0].character != CausalCharacter::Timelike {
        return Err(PipelineError {
            stage: "base",
            message: format!(
                "base curve is {} on the window, need timelike",
                couple.base_frames[0].character
            ),
        });
    }

    let base_block = curve_block(&couple.base, &couple.base_frames, window, spec, true)?;
    let mate_block = curve_block(&couple.mate, &couple.mate_frames, window, spec, false)?;

    let relation = couple.frame_relation();
    let couple_block = CoupleBlock {
        sinh_theta: couple.angle.sinh_theta,
        cosh_theta: couple.angle.cosh_theta,
        theta: couple.angle.theta,
        angle_deviation: Checked::bound(couple.angle.deviation, crate::bertrand::ANGLE_DEV_TOL),
        sigma_b: couple.sigma_b,
        sigma_n: couple.sigma_n,
        matrix: relation.matrix,
        matrix_deviation: Checked::bound(relation.max_deviation, MATRIX_DEV_TOL),
        reconstruction_residual: Checked::bound(relation.max_residual, MATRIX_RESIDUAL_TOL),
        row_pseudo_norms: relation.row_pseudo_norms,
    };

    let inputs = ConditionInputs {
        kappa: base_block.kappa.mean,
        tau: base_block.tau.mean,
        sinh_theta: couple.angle.sinh_theta,
        cosh_theta: couple.angle.cosh_theta,
        phi_rate: base_block.darboux.as_ref().map_or(f64::NAN, |d| d.angle_rate),
    };

    let mut indicatrices = Vec::with_capacity(3);
    let mut lifts = Vec::with_capacity(3);
    for kind in [IndicatrixKind::Tangent, IndicatrixKind::PrincipalNormal, IndicatrixKind::Binormal]
    {
        let (block, lift) = indicatrix_block(&couple.mate, kind, window, spec, &inputs)?;
        indicatrices.push(block);
        lifts.push((kind, lift));
    }

    let report = AnalysisReport {
        source: spec.source.describe(),
        lambda: spec.lambda,
        window: [window.0, window.1],
        n_samples: spec.n_samples,
        base: base_block,
        mate: mate_block,
        couple: couple_block,
        indicatrices,
    };

    Ok(PipelineOutput { report, base: couple.base, mate: couple.mate, grid: couple.grid, lifts })
}

/// Construct the base curve and settle the analysis window.
///
/// Analytic sources get a domain padded around the window; tables cannot
/// be extended, so the default window is inset from the data instead and
/// a requested window must leave stencil margin on both sides.
fn build_base(spec: &ResolvedSpec) -> Result<(Curve, (f64, f64)), PipelineError> {
    match &spec.source {
        ResolvedSource::CircularHelix { kappa, tau } => {
            analytic_base(WCurveKind::TimelikeCircularHelix, *kappa, *tau, spec)
                .map_err(at_stage("base"))
        }
        ResolvedSource::HyperbolicHelix { kappa, tau } => {
            analytic_base(WCurveKind::TimelikeHyperbolicHelix, *kappa, *tau, spec)
                .map_err(at_stage("base"))
        }
        ResolvedSource::Example => {
            let window = spec.window.unwrap_or(EXAMPLE_WINDOW);
            let domain = (window.0 - ANALYTIC_PAD, window.1 + ANALYTIC_PAD);
            let curve = crate::frenet::generate_w_curve(
                WCurveKind::TimelikeCircularHelix,
                EXAMPLE_KAPPA,
                EXAMPLE_TAU,
                domain,
            )
            .map_err(at_stage("base"))?;
            Ok((curve, window))
        }
        ResolvedSource::Table(rows) => {
            let curve = Curve::from_samples(rows.clone()).map_err(at_stage("base"))?;
            let (lo, hi) = curve.domain();
            let edge = lo.abs().max(hi.abs());
            let margin = 2.0 * spec.opts.field_step + 10.0 * effective_step(spec.opts.step, edge);
            let window = match spec.window {
                Some(w) => {
                    if w.0 - margin < lo || w.1 + margin > hi {
                        return Err(PipelineError {
                            stage: "base",
                            message: format!(
                                "window [{}, {}] leaves less than {margin:.3} of stencil margin \
                                 inside the table domain [{lo}, {hi}]",
                                w.0, w.1
                            ),
                        });
                    }
                    w
                }
                None => {
                    let inset = margin + 0.05;
                    if hi - lo <= 2.0 * inset {
                        return Err(PipelineError {
                            stage: "base",
                            message: format!(
                                "table domain [{lo}, {hi}] too short for stencil margin {inset:.3}"
                            ),
                        });
                    }
                    (lo + inset, hi - inset)
                }
            };
            Ok((curve, window))
        }
    }
}

fn analytic_base(
    kind: WCurveKind,
    kappa: f64,
    tau: f64,
    spec: &ResolvedSpec,
) -> Result<(Curve, (f64, f64)), crate::frenet::FrenetError> {
    let probe = crate::frenet::generate_w_curve(kind, kappa, tau, (0.0, 1.0))?;
    let window = spec.window.unwrap_or_else(|| natural_window(&probe));
    let domain = (window.0 - ANALYTIC_PAD, window.1 + ANALYTIC_PAD);
    Ok((crate::frenet::generate_w_curve(kind, kappa, tau, domain)?, window))
}

/// Frenet statistics of one couple member from its precomputed frames.
/// Classification and the Darboux split only apply to the timelike base.
fn curve_block(
    curve: &Curve,
    frames: &[FrenetFrame],
    window: (f64, f64),
    spec: &ResolvedSpec,
    is_base: bool,
) -> Result<CurveBlock, PipelineError> {
    let kappa = MeanDev::of(&frames.iter().map(|f| f.kappa).collect::<Vec<_>>());
    let tau = MeanDev::of(&frames.iter().map(|f| f.tau).collect::<Vec<_>>());
    let speed = MeanDev::of(&frames.iter().map(|f| f.speed).collect::<Vec<_>>());

    let stage: &'static str = if is_base { "base" } else { "mate" };
    let verdict = is_general_helix(curve, window, spec.n_samples, &spec.opts, HELIX_RATIO_TOL)
        .map_err(at_stage(stage))?;
    let helix = HelixBlock {
        is_helix: verdict.is_helix,
        mean_ratio: verdict.mean_ratio,
        deviation: verdict.deviation,
    };

    let mut class = None;
    let mut darboux = None;
    if is_base {
        let steady = |m: &MeanDev| m.max_deviation <= CLASS_GATE * m.mean.abs().max(1.0);
        if verdict.is_helix && steady(&kappa) && steady(&tau) {
            if let Ok(c) = classify_w_curve(kappa.mean, tau.mean, spec.tol_class) {
                class = Some(ClassBlock { kind: c.kind.as_str().into(), k: c.k });
            }
        }

        let mid = 0.5 * (window.0 + window.1);
        let mid_frame = frenet_apparatus(curve, mid, &spec.opts).map_err(at_stage("darboux"))?;
        if let Ok(d) = darboux_decomposition(&mid_frame, spec.tol_class) {
            let rate = angle_rate_at(curve, mid, &spec.opts).map_err(at_stage("darboux"))?;
            darboux = Some(DarbouxBlock {
                case: d.case.as_str().into(),
                norm: d.norm_w,
                phi: d.phi,
                angle_rate: rate,
            });
        }
    }

    Ok(CurveBlock {
        character: frames[0].character.as_str().into(),
        kappa,
        tau,
        speed,
        helix,
        class,
        darboux,
    })
}

/// Widest Darboux-angle probe that keeps its stencils in domain.
fn angle_rate_at(
    curve: &Curve,
    mid: f64,
    opts: &FrenetOptions,
) -> Result<f64, crate::frenet::FrenetError> {
    let (lo, hi) = curve.domain();
    let edge = lo.abs().max(hi.abs());
    let frame_margin = 2.0 * opts.field_step + 5.0 * effective_step(opts.step, edge);
    let room = (mid - lo).min(hi - mid) - frame_margin;
    let delta = [0.5, 0.25, 0.1, 3.0 * opts.field_step]
        .into_iter()
        .find(|d| *d < room)
        .unwrap_or(0.5 * room.max(opts.field_step));
    darboux_angle_rate(curve, mid, delta, opts)
}

fn indicatrix_block(
    mate: &Curve,
    kind: IndicatrixKind,
    window: (f64, f64),
    spec: &ResolvedSpec,
    inputs: &ConditionInputs,
) -> Result<(IndicatrixBlock, LiftedCurve), PipelineError> {
    let stage: &'static str = match kind {
        IndicatrixKind::Tangent => "indicatrix.tangent",
        IndicatrixKind::PrincipalNormal => "indicatrix.principal_normal",
        IndicatrixKind::Binormal => "indicatrix.binormal",
    };
    let on: CurveOnPseudosphere =
        spherical_indicatrix(mate, kind, window, spec.n_samples, &spec.opts, spec.tol_membership)
            .map_err(at_stage(stage))?;
    let lift = natural_lift(&on, &spec.opts).map_err(at_stage(stage))?;
    let speeds: Vec<f64> =
        lift.samples.iter().map(|s| metric_sq(s.velocity).abs().sqrt()).collect();

    let geo = geodesic_residual(&on, &spec.opts, spec.tol_geodesic).map_err(at_stage(stage))?;
    let condition_value = geodesic_condition_algebraic(kind, inputs, spec.tol_geodesic);
    let algebraic = if condition_value.value.is_nan() {
        // no angle-rate measurement to test against; mirror the numeric verdict
        geo.is_geodesic
    } else {
        condition_value.satisfied
    };

    let unit = unit_speed_lift(&on, spec.n_samples, &spec.opts).map_err(at_stage(stage))?;
    let arc_length = unit.samples.last().map_or(0.0, |s| s.s);
    let spray = is_integral_curve_of_spray(&unit, SPRAY_TOL).map_err(at_stage(stage))?;

    let block = IndicatrixBlock {
        kind: kind.as_str().into(),
        surface: on.surface.as_str().into(),
        membership_defect: Checked::bound(on.max_defect, spec.tol_membership),
        speed: MeanDev::of(&speeds),
        geodesic: GeodesicBlock {
            max_residual: Checked::bound(geo.max_residual, spec.tol_geodesic),
            mean_residual: geo.mean_residual,
            is_geodesic: geo.is_geodesic,
        },
        condition: ConditionBlock {
            value: condition_value.value,
            algebraic,
            numeric: geo.is_geodesic,
            agree: algebraic == geo.is_geodesic,
        },
        spray: SprayBlock {
            arc_length,
            max_deviation: spray.max_deviation,
            tol: spray.tol,
            is_integral: spray.is_integral,
        },
    };
    Ok((block, lift))
}
