//! Vectors and metric algebra in Minkowski 3-space.
//!
//! The ambient space is R^3 with the Lorentzian metric
//! g(u, v) = -u1*v1 + u2*v2 + u3*v3, signature (-, +, +).
//! The first coordinate is the timelike axis.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Default tolerance for causal classification and degeneracy checks.
pub const CLASSIFY_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LorentzError {
    /// Pseudo-norm below tolerance; the vector has no unit rescaling.
    #[error("cannot normalize: pseudo-norm {norm:.3e} is below tolerance {tol:.3e}")]
    NullVector { norm: f64, tol: f64 },
}

/// Causal character of a vector under the (-,+,+) metric.
///
/// The zero vector counts as spacelike; `Null` is reserved for nonzero
/// vectors on the light cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CausalCharacter {
    Timelike,
    Spacelike,
    Null,
}

impl CausalCharacter {
    pub fn as_str(self) -> &'static str {
        match self {
            CausalCharacter::Timelike => "timelike",
            CausalCharacter::Spacelike => "spacelike",
            CausalCharacter::Null => "null",
        }
    }
}

impl std::fmt::Display for CausalCharacter {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A vector (or point) in Minkowski 3-space. `x1` is the timelike component.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(into = "[f64; 3]", from = "[f64; 3]")]
pub struct LorentzVec {
    pub x1: f64,
    pub x2: f64,
    pub x3: f64,
}

impl LorentzVec {
    pub const ZERO: LorentzVec = LorentzVec { x1: 0.0, x2: 0.0, x3: 0.0 };

    pub fn new(x1: f64, x2: f64, x3: f64) -> Self {
        LorentzVec { x1, x2, x3 }
    }

    /// Largest component magnitude (Euclidean, for zero checks only).
    pub fn max_abs(self) -> f64 {
        self.x1.abs().max(self.x2.abs()).max(self.x3.abs())
    }

    pub fn is_finite(self) -> bool {
        self.x1.is_finite() && self.x2.is_finite() && self.x3.is_finite()
    }

    pub fn scale(self, c: f64) -> Self {
        LorentzVec::new(c * self.x1, c * self.x2, c * self.x3)
    }
}

impl From<[f64; 3]> for LorentzVec {
    fn from(a: [f64; 3]) -> Self {
        LorentzVec::new(a[0], a[1], a[2])
    }
}

impl From<LorentzVec> for [f64; 3] {
    fn from(v: LorentzVec) -> Self {
        [v.x1, v.x2, v.x3]
    }
}

impl std::ops::Add for LorentzVec {
    type Output = LorentzVec;
    fn add(self, o: LorentzVec) -> LorentzVec {
        LorentzVec::new(self.x1 + o.x1, self.x2 + o.x2, self.x3 + o.x3)
    }
}

impl std::ops::Sub for LorentzVec {
    type Output = LorentzVec;
    fn sub(self, o: LorentzVec) -> LorentzVec {
        LorentzVec::new(self.x1 - o.x1, self.x2 - o.x2, self.x3 - o.x3)
    }
}

impl std::ops::Neg for LorentzVec {
    type Output = LorentzVec;
    fn neg(self) -> LorentzVec {
        LorentzVec::new(-self.x1, -self.x2, -self.x3)
    }
}

impl std::ops::Mul<f64> for LorentzVec {
    type Output = LorentzVec;
    fn mul(self, c: f64) -> LorentzVec {
        self.scale(c)
    }
}

/// The Lorentzian inner product g(u, v) = -u1*v1 + u2*v2 + u3*v3.
pub fn metric(u: LorentzVec, v: LorentzVec) -> f64 {
    -u.x1 * v.x1 + u.x2 * v.x2 + u.x3 * v.x3
}

/// g(v, v), the squared pseudo-length with sign.
pub fn metric_sq(v: LorentzVec) -> f64 {
    metric(v, v)
}

/// Pseudo-norm sqrt(|g(v, v)|).
pub fn pseudo_norm(v: LorentzVec) -> f64 {
    metric_sq(v).abs().sqrt()
}

/// Classify a vector as timelike (g < 0), spacelike (g > 0 or v = 0) or null.
pub fn causal_character(v: LorentzVec, tol: f64) -> CausalCharacter {
    if v.max_abs() <= tol {
        return CausalCharacter::Spacelike;
    }
    let q = metric_sq(v);
    if q.abs() <= tol {
        CausalCharacter::Null
    } else if q < 0.0 {
        CausalCharacter::Timelike
    } else {
        CausalCharacter::Spacelike
    }
}

/// Lorentzian cross product, the bilinear map satisfying
/// g(u x v, w) = det(u, v, w) in this signature:
///
/// u x v = (u3*v2 - u2*v3, u3*v1 - u1*v3, u1*v2 - u2*v1)
///
/// For a timelike orthonormal frame it obeys t x n = -b, n x b = t, b x t = -n.
pub fn lorentz_cross(u: LorentzVec, v: LorentzVec) -> LorentzVec {
    LorentzVec::new(
        u.x3 * v.x2 - u.x2 * v.x3,
        u.x3 * v.x1 - u.x1 * v.x3,
        u.x1 * v.x2 - u.x2 * v.x1,
    )
}

/// v / ||v|| with the pseudo-norm. Fails on null or zero vectors.
pub fn normalize(v: LorentzVec, tol: f64) -> Result<LorentzVec, LorentzError> {
    let norm = pseudo_norm(v);
    if norm <= tol {
        return Err(LorentzError::NullVector { norm, tol });
    }
    Ok(v.scale(1.0 / norm))
}

/// Recover a hyperbolic angle from its sinh: returns (theta, cosh theta)
/// with theta = asinh(s) and cosh theta = sqrt(1 + s^2) >= 1.
pub fn solve_hyperbolic_angle(sinh_value: f64) -> (f64, f64) {
    (sinh_value.asinh(), (1.0 + sinh_value * sinh_value).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn metric_signature_values() {
        let e1 = LorentzVec::new(1.0, 0.0, 0.0);
        assert_eq!(metric(e1, e1), -1.0);
        let n = LorentzVec::new(1.0, 1.0, 0.0);
        assert_eq!(metric(n, n), 0.0);
        let v = LorentzVec::new(0.0, 2.0, 3.0);
        assert_eq!(metric(v, v), 13.0);
    }

    #[test]
    fn causal_classification() {
        let tol = CLASSIFY_TOL;
        assert_eq!(
            causal_character(LorentzVec::new(2.0, 1.0, 0.0), tol),
            CausalCharacter::Timelike
        );
        assert_eq!(
            causal_character(LorentzVec::new(1.0, 1.0, 0.0), tol),
            CausalCharacter::Null
        );
        assert_eq!(
            causal_character(LorentzVec::new(0.0, 1.0, 1.0), tol),
            CausalCharacter::Spacelike
        );
        // zero vector counts as spacelike, not null
        assert_eq!(causal_character(LorentzVec::ZERO, tol), CausalCharacter::Spacelike);
    }

    #[test]
    fn cross_of_spacelike_axes_gives_timelike_axis() {
        let u = LorentzVec::new(1.0, 0.0, 0.0);
        let v = LorentzVec::new(0.0, 1.0, 0.0);
        assert_eq!(lorentz_cross(u, v), LorentzVec::new(0.0, 0.0, 1.0));

        let a = LorentzVec::new(0.0, 1.0, 0.0);
        let b = LorentzVec::new(0.0, 0.0, 1.0);
        // unit timelike output: the plane span{a, b} is spacelike
        assert_eq!(lorentz_cross(a, b), LorentzVec::new(-1.0, 0.0, 0.0));
        assert_eq!(metric_sq(lorentz_cross(a, b)), -1.0);
    }

    #[test]
    fn cross_matches_frame_identities_on_helix_frame() {
        // frame of the unit-speed timelike circular helix with kappa=1, tau=2 at s=0
        let r3 = 3.0_f64.sqrt();
        let t = LorentzVec::new(2.0 * r3 / 3.0, 0.0, r3 / 3.0);
        let n = LorentzVec::new(0.0, -1.0, 0.0);
        let b = LorentzVec::new(r3 / 3.0, 0.0, 2.0 * r3 / 3.0);

        let tn = lorentz_cross(t, n);
        let nb = lorentz_cross(n, b);
        let bt = lorentz_cross(b, t);
        for (got, want) in [(tn, -b), (nb, t), (bt, -n)] {
            assert!(
                (got - want).max_abs() < 1e-15,
                "cross identity violated: got {got:?}, want {want:?}"
            );
        }
    }

    #[test]
    fn cross_is_antisymmetric_and_orthogonal() {
        let u = LorentzVec::new(0.3, -1.2, 2.5);
        let v = LorentzVec::new(-0.7, 0.4, 1.1);
        let w = lorentz_cross(u, v);
        assert_eq!(w + lorentz_cross(v, u), LorentzVec::ZERO);
        assert!(metric(w, u).abs() < 1e-14);
        assert!(metric(w, v).abs() < 1e-14);
    }

    #[test]
    fn normalize_timelike_and_spacelike() {
        let (t, tol) = (LorentzVec::new(2.0, 0.0, 0.0), CLASSIFY_TOL);
        assert_eq!(normalize(t, tol).unwrap(), LorentzVec::new(1.0, 0.0, 0.0));

        let s = LorentzVec::new(0.0, 3.0, 4.0);
        let u = normalize(s, tol).unwrap();
        assert!((u - LorentzVec::new(0.0, 0.6, 0.8)).max_abs() < 1e-15);
        assert!(close(metric_sq(u), 1.0, 1e-15));
    }

    #[test]
    fn normalize_rejects_null() {
        let n = LorentzVec::new(1.0, 1.0, 0.0);
        assert!(matches!(
            normalize(n, CLASSIFY_TOL),
            Err(LorentzError::NullVector { .. })
        ));
    }

    #[test]
    fn hyperbolic_angle_recovery() {
        let (theta, cosh) = solve_hyperbolic_angle(0.0);
        assert_eq!((theta, cosh), (0.0, 1.0));

        // sinh from the kappa=1, tau=2 Bertrand couple at offset 4/3
        let r15 = 15.0_f64.sqrt();
        let (theta, cosh) = solve_hyperbolic_angle(7.0 / r15);
        assert!(close(cosh, 8.0 / r15, 1e-12));
        assert!(close(theta.sinh(), 7.0 / r15, 1e-12));

        let (theta, cosh) = solve_hyperbolic_angle(-1.0);
        assert!(close(theta, -(1.0 + 2.0_f64.sqrt()).ln(), 1e-12));
        assert!(close(cosh, 2.0_f64.sqrt(), 1e-12));
    }
}
