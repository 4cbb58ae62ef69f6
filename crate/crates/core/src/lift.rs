//! Natural lifts of pseudospherical curves and the geodesic-spray test.
//!
//! The natural lift of a curve c on a pseudosphere is u -> (c(u), c'(u)).
//! c is a geodesic iff its unit-speed acceleration has no tangential part,
//! iff the lift is an integral curve of the geodesic spray, whose vertical
//! part over (p, v) is X(p, v) = -eps g(v, v) p with eps = g(p, p) on the
//! sphere. Both characterizations are implemented on numerically distinct
//! routes (chain-rule reparametrization vs grid differencing of lift
//! samples), so their agreement is a genuine cross-check.

use crate::curve::{linspace, Curve, CurveError};
use crate::diff;
use crate::frenet::{frenet_apparatus, darboux_decomposition, FrenetError, FrenetOptions};
use crate::indicatrix::{membership_defect, CurveOnPseudosphere, IndicatrixError, IndicatrixKind, Pseudosphere};
use crate::lorentz::{metric, metric_sq, LorentzVec};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum LiftError {
    #[error(transparent)]
    Indicatrix(#[from] IndicatrixError),

    #[error(transparent)]
    Curve(#[from] CurveError),

    #[error(transparent)]
    Frenet(#[from] FrenetError),

    #[error("point at s = {s:.6} is off the {surface} sphere by {defect:.3e} (tol {tol:.1e})")]
    OffSurface { s: f64, surface: Pseudosphere, defect: f64, tol: f64 },

    #[error("velocity at s = {s:.6} is not tangent: g(p, v) = {defect:.3e} (tol {tol:.1e})")]
    NonTangentVelocity { s: f64, defect: f64, tol: f64 },

    #[error("speed vanishes at s = {s:.6}; cannot reparametrize by arc length")]
    DegenerateSpeed { s: f64 },

    #[error("spray comparison requires a unit-speed lift; build one with unit_speed_lift")]
    NotUnitSpeed,
}

/// One state of a lift: base point on the sphere and velocity at it.
#[derive(Debug, Clone, Copy)]
pub struct LiftSample {
    /// Parameter of the lift: the base parameter for a natural lift,
    /// accumulated pseudo-arc-length for a unit-speed lift.
    pub s: f64,
    pub point: LorentzVec,
    pub velocity: LorentzVec,
}

/// Sampled lift of a sphere curve. Samples are evenly spaced in `s`.
#[derive(Debug, Clone)]
pub struct LiftedCurve {
    pub surface: Pseudosphere,
    pub samples: Vec<LiftSample>,
    /// True when every sampled velocity is unit within 1e-9.
    pub unit_speed: bool,
}

/// Lift a sphere curve in its given parametrization: velocities are d/ds
/// of the evaluator at the grid of the underlying curve.
pub fn natural_lift(on: &CurveOnPseudosphere, opts: &FrenetOptions) -> Result<LiftedCurve, LiftError> {
    let mut samples = Vec::with_capacity(on.grid.len());
    let mut unit = true;
    for (&s, &point) in on.grid.iter().zip(&on.points) {
        let velocity = on.velocity_at(s, opts)?;
        let tangency = metric(point, velocity).abs();
        // sanity gate, not a measurement: a wrongly constructed lift is off
        // by O(1), while evaluators stacked on sampled data carry nested
        // difference noise that reaches ~1e-4 in g(p, v)
        let tol = 5e-4 * (1.0 + metric_sq(velocity).abs());
        if tangency > tol {
            return Err(LiftError::NonTangentVelocity { s, defect: tangency, tol });
        }
        unit &= (metric_sq(velocity).abs() - 1.0).abs() <= 1e-9;
        samples.push(LiftSample { s, point, velocity });
    }
    Ok(LiftedCurve { surface: on.surface, samples, unit_speed: unit })
}

/// Lift with the curve reparametrized by pseudo-arc-length.
///
/// The cumulative length integral is a composite Simpson rule over a dense
/// grid; each output sample solves arclen(s) = u_j by Newton from a linear
/// interpolation seed, then takes velocity c'(s) / sigma(s).
pub fn unit_speed_lift(
    on: &CurveOnPseudosphere,
    n_samples: usize,
    opts: &FrenetOptions,
) -> Result<LiftedCurve, LiftError> {
    let window = (on.grid[0], *on.grid.last().unwrap());
    let n_out = n_samples.max(2);

    let speed_at = |s: f64, on: &CurveOnPseudosphere| -> Result<f64, LiftError> {
        let mut f = |u: f64| on.curve().point(u);
        let v = diff::deriv1(&mut f, s, opts.field_step)?;
        let sigma = metric_sq(v).abs().sqrt();
        if sigma <= 1e-9 {
            return Err(LiftError::DegenerateSpeed { s });
        }
        Ok(sigma)
    };

    // composite Simpson on an even number of dense panels
    let quad_n = (8 * n_out).max(240) / 2 * 2;
    let nodes = linspace(window.0, window.1, quad_n + 1);
    let h = (window.1 - window.0) / quad_n as f64;
    let mut sigmas = Vec::with_capacity(nodes.len());
    for &s in &nodes {
        sigmas.push(speed_at(s, on)?);
    }
    let mut cum = vec![0.0; nodes.len()];
    for i in (2..=quad_n).step_by(2) {
        cum[i] = cum[i - 2] + h / 3.0 * (sigmas[i - 2] + 4.0 * sigmas[i - 1] + sigmas[i]);
        // odd node: Simpson over the half panel with the midpoint rule pair
        cum[i - 1] = cum[i - 2] + h / 12.0 * (5.0 * sigmas[i - 2] + 8.0 * sigmas[i - 1] - sigmas[i]);
    }
    let total = cum[quad_n];

    // arclen(s) for Newton: nearest node below plus a local Simpson patch
    let arclen = |s: f64, on: &CurveOnPseudosphere| -> Result<f64, LiftError> {
        let idx = (((s - window.0) / h).floor() as usize).min(quad_n);
        let s0 = nodes[idx];
        let mut acc = cum[idx];
        if s > s0 {
            let m = 0.5 * (s0 + s);
            acc += (s - s0) / 6.0
                * (sigmas[idx] + 4.0 * speed_at(m, on)? + speed_at(s, on)?);
        }
        Ok(acc)
    };

    let targets = linspace(0.0, total, n_out);
    let mut samples = Vec::with_capacity(n_out);
    for (j, &u) in targets.iter().enumerate() {
        let mut s = if j == 0 {
            window.0
        } else if j == n_out - 1 {
            window.1
        } else {
            // linear interpolation seed on the cumulative table
            let k = cum.partition_point(|&c| c < u).clamp(1, quad_n);
            let frac = (u - cum[k - 1]) / (cum[k] - cum[k - 1]).max(f64::MIN_POSITIVE);
            (nodes[k - 1] + frac * h).clamp(window.0, window.1)
        };
        for _ in 0..8 {
            let err = arclen(s, on)? - u;
            if err.abs() <= 1e-12 * total.max(1.0) {
                break;
            }
            s = (s - err / speed_at(s, on)?).clamp(window.0, window.1);
        }

        let point = on.point_at(s)?;
        let mut f = |x: f64| on.curve().point(x);
        let v = diff::deriv1(&mut f, s, opts.field_step)?;
        let sigma = metric_sq(v).abs().sqrt();
        if sigma <= 1e-9 {
            return Err(LiftError::DegenerateSpeed { s });
        }
        samples.push(LiftSample { s: u, point, velocity: v * (1.0 / sigma) });
    }
    Ok(LiftedCurve { surface: on.surface, samples, unit_speed: true })
}

/// Vertical part of the geodesic spray at state (p, v): -eps g(v, v) p.
/// Validates that p sits on the sphere and v is tangent to it at p.
pub fn geodesic_spray(
    surface: Pseudosphere,
    p: LorentzVec,
    v: LorentzVec,
    tol: f64,
) -> Result<LorentzVec, LiftError> {
    let defect = membership_defect(surface, p);
    if defect > tol {
        return Err(LiftError::OffSurface { s: f64::NAN, surface, defect, tol });
    }
    let tangency = metric(p, v).abs();
    let scale = tol * (1.0 + metric_sq(v).abs());
    if tangency > scale {
        return Err(LiftError::NonTangentVelocity { s: f64::NAN, defect: tangency, tol: scale });
    }
    Ok(p * (-surface.epsilon() * metric_sq(v)))
}

/// Unit-speed acceleration of a sphere curve split into tangential and
/// normal parts at one parameter value.
#[derive(Debug, Clone, Copy)]
pub struct TangentialSplit {
    /// d^2 c / du^2 in the arc-length parameter u.
    pub accel: LorentzVec,
    pub tangential: LorentzVec,
    /// Coefficient of the position vector in the normal direction.
    pub normal_coeff: f64,
    /// Pseudo-norm |g(tangential, tangential)|^(1/2).
    pub residual: f64,
}

/// Split the unit-speed acceleration at `s` against the sphere normal.
///
/// Derivatives are taken in the curve's own parameter and converted by the
/// chain rule: accel = (c'' - c' sigma'/sigma) / sigma^2 with sigma = ||c'||.
pub fn tangential_acceleration(
    on: &CurveOnPseudosphere,
    s: f64,
    opts: &FrenetOptions,
) -> Result<TangentialSplit, LiftError> {
    let mut f = |u: f64| on.curve().point(u);
    let d1 = diff::deriv1(&mut f, s, opts.field_step)?;
    let d2 = diff::deriv2(&mut f, s, opts.field_step)?;

    let q = metric_sq(d1);
    if q.abs() <= 1e-12 {
        return Err(LiftError::DegenerateSpeed { s });
    }
    let sigma = q.abs().sqrt();
    let sigma_dot = q.signum() * metric(d1, d2) / sigma;
    let accel = (d2 - d1 * (sigma_dot / sigma)) * (1.0 / (sigma * sigma));

    let xi = on.point_at(s)?;
    let eps = on.surface.epsilon();
    let normal_coeff = eps * metric(accel, xi);
    let tangential = accel - xi * normal_coeff;
    let residual = metric_sq(tangential).abs().sqrt();
    Ok(TangentialSplit { accel, tangential, normal_coeff, residual })
}

/// Geodesic verdict for a sphere curve over its sample grid.
#[derive(Debug, Clone)]
pub struct GeodesicReport {
    pub surface: Pseudosphere,
    pub max_residual: f64,
    pub mean_residual: f64,
    pub is_geodesic: bool,
    pub tol: f64,
}

/// Evaluate the tangential residual at every grid point of `on`.
pub fn geodesic_residual(
    on: &CurveOnPseudosphere,
    opts: &FrenetOptions,
    tol: f64,
) -> Result<GeodesicReport, LiftError> {
    let mut max_residual = 0.0_f64;
    let mut sum = 0.0_f64;
    for &s in &on.grid {
        let split = tangential_acceleration(on, s, opts)?;
        max_residual = max_residual.max(split.residual);
        sum += split.residual;
    }
    let mean_residual = sum / on.grid.len() as f64;
    Ok(GeodesicReport {
        surface: on.surface,
        max_residual,
        mean_residual,
        is_geodesic: max_residual <= tol,
        tol,
    })
}

/// Verdict of comparing lift-sample differencing against the spray field.
#[derive(Debug, Clone)]
pub struct SprayReport {
    pub max_deviation: f64,
    pub is_integral: bool,
    pub tol: f64,
    pub samples_checked: usize,
}

/// Check whether a unit-speed lift is an integral curve of the geodesic
/// spray: the grid derivative of the velocity samples must match
/// -eps g(v, v) p at every interior sample.
///
/// The acceleration here comes from differencing the stored samples, not
/// from the curve evaluator, so agreement with `geodesic_residual` is an
/// independent confirmation.
pub fn is_integral_curve_of_spray(lift: &LiftedCurve, tol: f64) -> Result<SprayReport, LiftError> {
    if !lift.unit_speed {
        return Err(LiftError::NotUnitSpeed);
    }
    let n = lift.samples.len();
    if n < 5 {
        return Err(LiftError::NotUnitSpeed);
    }
    let du = lift.samples[1].s - lift.samples[0].s;

    let mut max_deviation = 0.0_f64;
    let mut checked = 0;
    for j in 2..n - 2 {
        let v = |k: usize| lift.samples[k].velocity;
        let accel =
            (v(j - 2) - v(j + 2) + (v(j + 1) - v(j - 1)) * 8.0) * (1.0 / (12.0 * du));
        // the field eval's surface/tangency gates cannot be tighter than
        // the agreement we are asking for
        let expected = geodesic_spray(
            lift.surface,
            lift.samples[j].point,
            lift.samples[j].velocity,
            tol.max(1e-6),
        )?;
        max_deviation = max_deviation.max((accel - expected).max_abs());
        checked += 1;
    }
    Ok(SprayReport { max_deviation, is_integral: max_deviation <= tol, tol, samples_checked: checked })
}

/// Closed-form geodesic conditions for the indicatrices of a Bertrand
/// couple, in terms of the base curvatures, the couple angle, and the
/// rotation rate of the Darboux angle.
#[derive(Debug, Clone, Copy)]
pub struct ConditionValue {
    pub value: f64,
    pub satisfied: bool,
}

/// Inputs for `geodesic_condition_algebraic`, all taken from the base
/// member of a couple except the angle, which belongs to the couple.
#[derive(Debug, Clone, Copy)]
pub struct ConditionInputs {
    pub kappa: f64,
    pub tau: f64,
    pub sinh_theta: f64,
    pub cosh_theta: f64,
    /// d phi / ds of the Darboux angle; only the normal indicatrix uses it.
    pub phi_rate: f64,
}

/// The indicatrix of `kind` for the mate is a geodesic iff the returned
/// value vanishes: kappa cosh + tau sinh for the tangent image, the
/// Darboux angle rate for the normal image, kappa sinh + tau cosh for the
/// binormal image.
pub fn geodesic_condition_algebraic(
    kind: IndicatrixKind,
    inputs: &ConditionInputs,
    tol: f64,
) -> ConditionValue {
    let value = match kind {
        IndicatrixKind::Tangent => {
            inputs.kappa * inputs.cosh_theta + inputs.tau * inputs.sinh_theta
        }
        IndicatrixKind::PrincipalNormal => inputs.phi_rate,
        IndicatrixKind::Binormal => {
            inputs.kappa * inputs.sinh_theta + inputs.tau * inputs.cosh_theta
        }
    };
    ConditionValue { value, satisfied: value.abs() <= tol }
}

/// d phi / ds of the Darboux angle by a plain central difference at
/// half-width `delta`, wide enough to suppress torsion-level noise.
pub fn darboux_angle_rate(
    curve: &Curve,
    s: f64,
    delta: f64,
    opts: &FrenetOptions,
) -> Result<f64, FrenetError> {
    let phi = |x: f64| -> Result<f64, FrenetError> {
        let fr = frenet_apparatus(curve, x, opts)?;
        Ok(darboux_decomposition(&fr, opts.tol)?.phi)
    };
    Ok((phi(s + delta)? - phi(s - delta)?) / (2.0 * delta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::Curve;
    use crate::frenet::{generate_w_curve, WCurveKind};
    use crate::indicatrix::spherical_indicatrix;

    const OPTS: FrenetOptions = FrenetOptions { step: 5e-3, field_step: 0.1, tol: 1e-9 };

    fn mate12() -> Curve {
        let r3 = 3.0_f64.sqrt();
        Curve::axial_trig(2.0 * r3 / 3.0, -1.0, r3, (-1.0, 5.0))
    }

    fn mate_indicatrix(kind: IndicatrixKind) -> CurveOnPseudosphere {
        spherical_indicatrix(&mate12(), kind, (0.0, 3.6), 25, &OPTS, 1e-6).unwrap()
    }

    #[test]
    fn spray_values_and_guards() {
        let p = LorentzVec::new(0.0, 1.0, 0.0);
        let v = LorentzVec::new(0.0, 0.0, 2.0);
        let x = geodesic_spray(Pseudosphere::DeSitter, p, v, 1e-9).unwrap();
        assert!((x - LorentzVec::new(0.0, -4.0, 0.0)).max_abs() < 1e-12);

        let p = LorentzVec::new(1.0, 0.0, 0.0);
        let v = LorentzVec::new(0.0, 2.0, 0.0);
        let x = geodesic_spray(Pseudosphere::Hyperbolic, p, v, 1e-9).unwrap();
        assert!((x - LorentzVec::new(4.0, 0.0, 0.0)).max_abs() < 1e-12);

        assert!(matches!(
            geodesic_spray(Pseudosphere::DeSitter, LorentzVec::new(1.0, 0.0, 0.0), v, 1e-9),
            Err(LiftError::OffSurface { .. })
        ));
        assert!(matches!(
            geodesic_spray(
                Pseudosphere::DeSitter,
                LorentzVec::new(0.0, 1.0, 0.0),
                LorentzVec::new(0.0, 1.0, 1.0),
                1e-9
            ),
            Err(LiftError::NonTangentVelocity { .. })
        ));
    }

    #[test]
    fn normal_indicatrix_is_a_geodesic() {
        let on = mate_indicatrix(IndicatrixKind::PrincipalNormal);
        let report = geodesic_residual(&on, &OPTS, 1e-6).unwrap();
        assert!(report.is_geodesic, "max residual {:.3e}", report.max_residual);
    }

    #[test]
    fn tangent_indicatrix_residual_value() {
        let on = mate_indicatrix(IndicatrixKind::Tangent);
        let report = geodesic_residual(&on, &OPTS, 1e-6).unwrap();
        assert!(!report.is_geodesic);
        assert!(
            (report.max_residual - 2.0 / 3.0).abs() < 1e-3,
            "residual {}",
            report.max_residual
        );
        assert!((report.mean_residual - 2.0 / 3.0).abs() < 1e-3);

        // tangential part at s = 0 is timelike: (2/sqrt5, 0, -4/(3 sqrt 5))
        let split = tangential_acceleration(&on, 0.0, &OPTS).unwrap();
        let r5 = 5.0_f64.sqrt();
        assert!(
            (split.tangential - LorentzVec::new(2.0 / r5, 0.0, -4.0 / (3.0 * r5))).max_abs() < 1e-6,
            "tangential {:?}",
            split.tangential
        );
        assert!(metric_sq(split.tangential) < 0.0);
    }

    #[test]
    fn binormal_indicatrix_residual_value() {
        let on = mate_indicatrix(IndicatrixKind::Binormal);
        let report = geodesic_residual(&on, &OPTS, 1e-6).unwrap();
        assert!(!report.is_geodesic);
        assert!(
            (report.max_residual - 3.0 / 2.0).abs() < 1e-3,
            "residual {}",
            report.max_residual
        );
    }

    #[test]
    fn latitude_circle_is_not_a_geodesic() {
        let r2 = 2.0_f64.sqrt();
        let c = Curve::parametric(
            move |u| Ok(LorentzVec::new(1.0, r2 * u.cos(), r2 * u.sin())),
            (-7.0, 7.0),
        );
        let on = CurveOnPseudosphere::from_curve(&c, Pseudosphere::DeSitter, (0.0, 6.0), 25, 1e-6)
            .unwrap();
        let report = geodesic_residual(&on, &OPTS, 1e-6).unwrap();
        assert!(!report.is_geodesic);
        let want = 1.0 / r2;
        assert!(
            (report.max_residual - want).abs() < 1e-6,
            "residual {} want {}",
            report.max_residual,
            want
        );
    }

    #[test]
    fn great_hyperbola_is_a_geodesic() {
        let c = Curve::parametric(move |u| Ok(LorentzVec::new(u.cosh(), u.sinh(), 0.0)), (-3.0, 3.0));
        let on = CurveOnPseudosphere::from_curve(&c, Pseudosphere::Hyperbolic, (-1.5, 1.5), 25, 1e-6)
            .unwrap();
        let report = geodesic_residual(&on, &OPTS, 1e-8).unwrap();
        assert!(report.is_geodesic, "max residual {:.3e}", report.max_residual);
    }

    #[test]
    fn natural_lift_velocities_and_flag() {
        let on = mate_indicatrix(IndicatrixKind::PrincipalNormal);
        let lift = natural_lift(&on, &OPTS).unwrap();
        assert!(!lift.unit_speed, "speed is sqrt(3), not 1");
        let r3 = 3.0_f64.sqrt();
        assert!((lift.samples[0].velocity - LorentzVec::new(0.0, 0.0, r3)).max_abs() < 1e-7);

        // arc-parametrized circle on the de Sitter sphere lifts unit-speed
        let circle =
            Curve::parametric(move |u| Ok(LorentzVec::new(0.0, u.cos(), u.sin())), (-7.0, 7.0));
        let on = CurveOnPseudosphere::from_curve(&circle, Pseudosphere::DeSitter, (0.0, 6.0), 201, 1e-6)
            .unwrap();
        let lift = natural_lift(&on, &OPTS).unwrap();
        assert!(lift.unit_speed);
        let spray = is_integral_curve_of_spray(&lift, 1e-6).unwrap();
        assert!(spray.is_integral, "deviation {:.3e}", spray.max_deviation);
    }

    #[test]
    fn unit_lift_reparametrizes_the_normal_indicatrix() {
        // N* traces (0, cos(sqrt3 s), sin(sqrt3 s)); in arc length u it is
        // exactly (0, cos u, sin u)
        let on = mate_indicatrix(IndicatrixKind::PrincipalNormal);
        let lift = unit_speed_lift(&on, 61, &OPTS).unwrap();
        assert!(lift.unit_speed);
        let r3 = 3.0_f64.sqrt();
        let total = lift.samples.last().unwrap().s;
        assert!((total - 3.6 * r3).abs() < 1e-6, "arc length {total}");
        for j in [0, 17, 30, 60] {
            let u = lift.samples[j].s;
            let want = LorentzVec::new(0.0, u.cos(), u.sin());
            assert!(
                (lift.samples[j].point - want).max_abs() < 1e-6,
                "sample {j}: {:?} vs {:?}",
                lift.samples[j].point,
                want
            );
            let vwant = LorentzVec::new(0.0, -u.sin(), u.cos());
            assert!((lift.samples[j].velocity - vwant).max_abs() < 1e-6);
        }
        let spray = is_integral_curve_of_spray(&lift, 1e-4).unwrap();
        assert!(spray.is_integral, "deviation {:.3e}", spray.max_deviation);
    }

    #[test]
    fn non_unit_lift_is_rejected_by_the_spray_test() {
        let on = mate_indicatrix(IndicatrixKind::PrincipalNormal);
        let lift = natural_lift(&on, &OPTS).unwrap();
        assert!(matches!(is_integral_curve_of_spray(&lift, 1e-4), Err(LiftError::NotUnitSpeed)));
    }

    #[test]
    fn latitude_circle_fails_the_spray_test() {
        let r2 = 2.0_f64.sqrt();
        let c = Curve::parametric(
            move |u| Ok(LorentzVec::new(1.0, r2 * u.cos(), r2 * u.sin())),
            (-8.0, 8.0),
        );
        let on = CurveOnPseudosphere::from_curve(&c, Pseudosphere::DeSitter, (0.0, 6.0), 25, 1e-6)
            .unwrap();
        let lift = unit_speed_lift(&on, 101, &OPTS).unwrap();
        let spray = is_integral_curve_of_spray(&lift, 1e-4).unwrap();
        assert!(!spray.is_integral);
        assert!(spray.max_deviation > 0.5, "deviation {:.3e}", spray.max_deviation);
    }

    #[test]
    fn algebraic_condition_values() {
        let r15 = 15.0_f64.sqrt();
        let inputs = ConditionInputs {
            kappa: 1.0,
            tau: 2.0,
            sinh_theta: 7.0 / r15,
            cosh_theta: 8.0 / r15,
            phi_rate: 0.0,
        };
        let t = geodesic_condition_algebraic(IndicatrixKind::Tangent, &inputs, 1e-6);
        assert!((t.value - 22.0 / r15).abs() < 1e-12);
        assert!(!t.satisfied);

        let n = geodesic_condition_algebraic(IndicatrixKind::PrincipalNormal, &inputs, 1e-6);
        assert!(n.satisfied);

        let b = geodesic_condition_algebraic(IndicatrixKind::Binormal, &inputs, 1e-6);
        assert!((b.value - 23.0 / r15).abs() < 1e-12);
        assert!(!b.satisfied);
    }

    #[test]
    fn exactly_vanishing_conditions() {
        // cosh/sinh pairs representable exactly: (5/4, 3/4) and (17/8, 15/8)
        let tang = ConditionInputs {
            kappa: 3.0,
            tau: -5.0,
            sinh_theta: 0.75,
            cosh_theta: 1.25,
            phi_rate: f64::NAN,
        };
        let t = geodesic_condition_algebraic(IndicatrixKind::Tangent, &tang, 1e-12);
        assert_eq!(t.value, 0.0);
        assert!(t.satisfied);

        let bin = ConditionInputs {
            kappa: 17.0,
            tau: -15.0,
            sinh_theta: 15.0 / 8.0,
            cosh_theta: 17.0 / 8.0,
            phi_rate: f64::NAN,
        };
        let b = geodesic_condition_algebraic(IndicatrixKind::Binormal, &bin, 1e-12);
        assert_eq!(b.value, 0.0);
        assert!(b.satisfied);
    }

    #[test]
    fn darboux_angle_rate_vanishes_for_w_curves() {
        let c = generate_w_curve(WCurveKind::TimelikeCircularHelix, 1.0, 2.0, (-2.0, 6.0)).unwrap();
        let rate = darboux_angle_rate(&c, 1.8, 0.5, &OPTS).unwrap();
        assert!(rate.abs() < 1e-8, "rate {:.3e}", rate);
    }
}
