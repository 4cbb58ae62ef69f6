//! Central-difference differentiation with Richardson extrapolation.
//!
//! Five-point stencils throughout. Orders 1 and 2 get one Richardson pass
//! (combining steps h and h/2), which raises them from O(h^4) to O(h^6)
//! truncation; order 3 is the plain O(h^2) stencil.
//!
//! Evaluation closures are fallible so that domain violations surface from
//! the innermost call rather than being masked by the stencil.

/// Values a stencil can combine: closed under addition and scaling.
pub trait Linear: Copy {
    fn add(self, other: Self) -> Self;
    fn scale(self, c: f64) -> Self;
}

impl Linear for f64 {
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, c: f64) -> Self {
        self * c
    }
}

impl Linear for crate::lorentz::LorentzVec {
    fn add(self, other: Self) -> Self {
        self + other
    }
    fn scale(self, c: f64) -> Self {
        crate::lorentz::LorentzVec::scale(self, c)
    }
}

fn d1_5pt<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    let fm2 = f(s - 2.0 * h)?;
    let fm1 = f(s - h)?;
    let fp1 = f(s + h)?;
    let fp2 = f(s + 2.0 * h)?;
    Ok(fm2
        .add(fm1.scale(-8.0))
        .add(fp1.scale(8.0))
        .add(fp2.scale(-1.0))
        .scale(1.0 / (12.0 * h)))
}

fn d2_5pt<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    let fm2 = f(s - 2.0 * h)?;
    let fm1 = f(s - h)?;
    let f0 = f(s)?;
    let fp1 = f(s + h)?;
    let fp2 = f(s + 2.0 * h)?;
    Ok(fm2
        .scale(-1.0)
        .add(fm1.scale(16.0))
        .add(f0.scale(-30.0))
        .add(fp1.scale(16.0))
        .add(fp2.scale(-1.0))
        .scale(1.0 / (12.0 * h * h)))
}

fn d3_5pt<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    let fm2 = f(s - 2.0 * h)?;
    let fm1 = f(s - h)?;
    let fp1 = f(s + h)?;
    let fp2 = f(s + 2.0 * h)?;
    Ok(fm2
        .scale(-1.0)
        .add(fm1.scale(2.0))
        .add(fp1.scale(-2.0))
        .add(fp2)
        .scale(1.0 / (2.0 * h * h * h)))
}

/// (16 D(h/2) - D(h)) / 15, cancelling the O(h^4) stencil error.
fn richardson<T: Linear>(coarse: T, fine: T) -> T {
    fine.scale(16.0 / 15.0).add(coarse.scale(-1.0 / 15.0))
}

/// First derivative, 5-point stencil with one Richardson pass.
/// The outermost evaluations sit at s +/- 2h.
pub fn deriv1<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    let coarse = d1_5pt(f, s, h)?;
    let fine = d1_5pt(f, s, h / 2.0)?;
    Ok(richardson(coarse, fine))
}

/// Second derivative, 5-point stencil with one Richardson pass.
pub fn deriv2<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    let coarse = d2_5pt(f, s, h)?;
    let fine = d2_5pt(f, s, h / 2.0)?;
    Ok(richardson(coarse, fine))
}

/// Third derivative, plain 5-point stencil (no Richardson pass).
pub fn deriv3<T, E>(f: &mut impl FnMut(f64) -> Result<T, E>, s: f64, h: f64) -> Result<T, E>
where
    T: Linear,
{
    d3_5pt(f, s, h)
}

#[cfg(test)]
mod tests {
    use super::*;

    type NoErr<T> = Result<T, std::convert::Infallible>;

    #[test]
    fn derivatives_of_sin_at_various_steps() {
        let mut f = |s: f64| -> NoErr<f64> { Ok(s.sin()) };
        let s = 0.7;
        let d1 = deriv1(&mut f, s, 5e-3).unwrap();
        let d2 = deriv2(&mut f, s, 5e-3).unwrap();
        let d3 = deriv3(&mut f, s, 1e-2).unwrap();
        assert!((d1 - s.cos()).abs() < 1e-12, "d1 err {:.3e}", (d1 - s.cos()).abs());
        assert!((d2 + s.sin()).abs() < 1e-9, "d2 err {:.3e}", (d2 + s.sin()).abs());
        assert!((d3 + s.cos()).abs() < 1e-4, "d3 err {:.3e}", (d3 + s.cos()).abs());
    }

    #[test]
    fn richardson_beats_plain_stencil_on_coarse_steps() {
        let mut f = |s: f64| -> NoErr<f64> { Ok((3.0 * s).cos()) };
        let s: f64 = 0.4;
        let exact = -3.0 * (3.0 * s).sin();
        let plain = d1_5pt(&mut f, s, 0.05).unwrap();
        let refined = deriv1(&mut f, s, 0.05).unwrap();
        assert!((refined - exact).abs() < (plain - exact).abs() / 10.0);
    }

    #[test]
    fn errors_from_the_evaluator_propagate() {
        let mut f = |s: f64| -> Result<f64, &'static str> {
            if s < 0.0 {
                Err("below domain")
            } else {
                Ok(s * s)
            }
        };
        assert!(deriv1(&mut f, 0.05, 0.1).is_err());
        assert!(deriv1(&mut f, 1.0, 0.1).is_ok());
    }
}
