//! Analysis report model: plain serializable structs assembled by the
//! pipeline and written out as JSON or rendered as text.
//!
//! Field order is fixed by the struct definitions, so serializing the
//! same report twice gives byte-identical output.

use serde::Serialize;

/// A magnitude measured against a tolerance.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Checked {
    pub value: f64,
    pub tol: f64,
    pub ok: bool,
}

impl Checked {
    /// `value` is a defect or deviation; ok means it stays under `tol`.
    pub fn bound(value: f64, tol: f64) -> Self {
        Checked { value, tol, ok: value.abs() <= tol }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct MeanDev {
    pub mean: f64,
    pub max_deviation: f64,
}

impl MeanDev {
    pub fn of(values: &[f64]) -> Self {
        let mean = values.iter().sum::<f64>() / values.len() as f64;
        let max_deviation = values.iter().map(|v| (v - mean).abs()).fold(0.0, f64::max);
        MeanDev { mean, max_deviation }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub source: String,
    pub lambda: f64,
    pub window: [f64; 2],
    pub n_samples: usize,
    pub base: CurveBlock,
    pub mate: CurveBlock,
    pub couple: CoupleBlock,
    pub indicatrices: Vec<IndicatrixBlock>,
}

/// Frenet statistics of one member of the couple over the grid.
#[derive(Debug, Clone, Serialize)]
pub struct CurveBlock {
    pub character: String,
    pub kappa: MeanDev,
    pub tau: MeanDev,
    pub speed: MeanDev,
    pub helix: HelixBlock,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<ClassBlock>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub darboux: Option<DarbouxBlock>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct HelixBlock {
    pub is_helix: bool,
    pub mean_ratio: f64,
    pub deviation: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassBlock {
    pub kind: String,
    pub k: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct DarbouxBlock {
    pub case: String,
    pub norm: f64,
    pub phi: f64,
    /// Central-difference d phi / ds at the window midpoint.
    pub angle_rate: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoupleBlock {
    pub sinh_theta: f64,
    pub cosh_theta: f64,
    pub theta: f64,
    pub angle_deviation: Checked,
    pub sigma_b: f64,
    pub sigma_n: f64,
    /// Rows expand (T*, N*, B*) over (T, N, B).
    pub matrix: [[f64; 3]; 3],
    pub matrix_deviation: Checked,
    pub reconstruction_residual: Checked,
    pub row_pseudo_norms: [f64; 3],
}

#[derive(Debug, Clone, Serialize)]
pub struct IndicatrixBlock {
    pub kind: String,
    pub surface: String,
    pub membership_defect: Checked,
    pub speed: MeanDev,
    pub geodesic: GeodesicBlock,
    pub condition: ConditionBlock,
    pub spray: SprayBlock,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GeodesicBlock {
    pub max_residual: Checked,
    pub mean_residual: f64,
    pub is_geodesic: bool,
}

/// Closed-form geodesic test against the numerical verdict.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConditionBlock {
    pub value: f64,
    pub algebraic: bool,
    pub numeric: bool,
    pub agree: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SprayBlock {
    pub arc_length: f64,
    pub max_deviation: f64,
    pub tol: f64,
    pub is_integral: bool,
}

pub fn to_json(report: &AnalysisReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

fn tick(ok: bool) -> &'static str {
    if ok { "ok" } else { "FAIL" }
}

/// Human-readable summary, one keyed line per quantity.
pub fn render_text(r: &AnalysisReport) -> String {
    use std::fmt::Write;
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "source: {}", r.source).unwrap();
    writeln!(w, "lambda: {:.9}", r.lambda).unwrap();
    writeln!(w, "window: [{:.9}, {:.9}]  n_samples: {}", r.window[0], r.window[1], r.n_samples)
        .unwrap();
    for (name, c) in [("base", &r.base), ("mate", &r.mate)] {
        writeln!(
            w,
            "{name}: {} kappa {:.9} (dev {:.3e}) tau {:.9} (dev {:.3e}) speed {:.9}",
            c.character, c.kappa.mean, c.kappa.max_deviation, c.tau.mean, c.tau.max_deviation,
            c.speed.mean
        )
        .unwrap();
        if let Some(cl) = &c.class {
            writeln!(w, "{name}.class: {} (K = {:.9})", cl.kind, cl.k).unwrap();
        }
        if let Some(d) = &c.darboux {
            writeln!(
                w,
                "{name}.darboux: {} norm {:.9} phi {:.9} rate {:.3e}",
                d.case, d.norm, d.phi, d.angle_rate
            )
            .unwrap();
        }
    }
    let cp = &r.couple;
    writeln!(
        w,
        "couple: sinh {:.9} cosh {:.9} dev {:.3e} [{}] sigma_b {:+.0} sigma_n {:+.0}",
        cp.sinh_theta,
        cp.cosh_theta,
        cp.angle_deviation.value,
        tick(cp.angle_deviation.ok),
        cp.sigma_b,
        cp.sigma_n
    )
    .unwrap();
    for row in &cp.matrix {
        writeln!(w, "couple.matrix: [{:+.9}, {:+.9}, {:+.9}]", row[0], row[1], row[2]).unwrap();
    }
    writeln!(
        w,
        "couple.matrix_checks: dev {:.3e} [{}] residual {:.3e} [{}] rows [{:+.6}, {:+.6}, {:+.6}]",
        cp.matrix_deviation.value,
        tick(cp.matrix_deviation.ok),
        cp.reconstruction_residual.value,
        tick(cp.reconstruction_residual.ok),
        cp.row_pseudo_norms[0],
        cp.row_pseudo_norms[1],
        cp.row_pseudo_norms[2]
    )
    .unwrap();
    for ind in &r.indicatrices {
        writeln!(
            w,
            "indicatrix.{}: on {} defect {:.3e} [{}] speed {:.9}",
            ind.kind,
            ind.surface,
            ind.membership_defect.value,
            tick(ind.membership_defect.ok),
            ind.speed.mean
        )
        .unwrap();
        writeln!(
            w,
            "indicatrix.{}.geodesic: residual {:.3e} -> {} | condition {:.9} -> {} [{}]",
            ind.kind,
            ind.geodesic.max_residual.value,
            if ind.geodesic.is_geodesic { "geodesic" } else { "not geodesic" },
            ind.condition.value,
            if ind.condition.algebraic { "geodesic" } else { "not geodesic" },
            if ind.condition.agree { "agree" } else { "DISAGREE" }
        )
        .unwrap();
        writeln!(
            w,
            "indicatrix.{}.spray: arc {:.9} deviation {:.3e} integral {}",
            ind.kind, ind.spray.arc_length, ind.spray.max_deviation, ind.spray.is_integral
        )
        .unwrap();
    }
    out
}
