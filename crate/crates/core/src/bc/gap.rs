use serde::Serialize;

use super::boundary::eta_pm;
use super::params::BoundaryParams;
use crate::error::{Error, Result};
use crate::scalar::{wrap_angle, Real};

/// `B_η = min(|cos η / (1 − sin η)|, |(1 − sin η) / cos η|)`.
pub fn b_function<T: Real>(eta: T) -> Result<T> {
    let (s, c) = eta.sin_cos();
    if !(c.abs() > T::lit(T::IDENTITY_TOL)) {
        return Err(Error::ExcludedParameter(eta.to_f64_lossy()));
    }
    let ratio = (c / (T::one() - s)).abs();
    Ok(ratio.min(ratio.recip()))
}

/// `√(2π/|Ω|) · min(B_{η+}, B_{η−})`, a lower bound on `|λ|`.
pub fn gap_lower_bound<T: Real>(params: &BoundaryParams<T>, area: T) -> Result<T> {
    if !(area > T::zero()) {
        return Err(Error::NonPositiveArea(area.to_f64_lossy()));
    }
    let etas = eta_pm(params);
    let b = b_function(etas.plus)?.min(b_function(etas.minus)?);
    Ok((T::TAU() / area).sqrt() * b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegularityClass {
    /// `cos η ≠ 0`: the domain lies in H¹.
    SobolevH1,
    /// `η = π/2`.
    ZigzagPlus,
    /// `η = 3π/2`.
    ZigzagMinus,
}

impl RegularityClass {
    pub fn of_eta<T: Real>(eta: T) -> Self {
        let tol = T::lit(T::IDENTITY_TOL);
        let eta = wrap_angle(eta);
        if (eta - T::FRAC_PI_2()).abs() <= tol {
            Self::ZigzagPlus
        } else if (eta - T::lit(1.5) * T::PI()).abs() <= tol {
            Self::ZigzagMinus
        } else {
            Self::SobolevH1
        }
    }
}

/// Classes of the `(η₊, η₋)` blocks.
pub fn regularity_class<T: Real>(params: &BoundaryParams<T>) -> (RegularityClass, RegularityClass) {
    let etas = eta_pm(params);
    (
        RegularityClass::of_eta(etas.plus),
        RegularityClass::of_eta(etas.minus),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    #[test]
    fn b_examples() {
        assert!((b_function(0.0_f64).unwrap() - 1.0).abs() < 1e-15);
        assert!((b_function(PI).unwrap() - 1.0).abs() < 1e-15);
        assert!((b_function(0.75 * PI).unwrap() - (2.0_f64.sqrt() - 1.0)).abs() < 1e-14);
        assert!(matches!(b_function(FRAC_PI_2), Err(Error::ExcludedParameter(_))));
        assert!(b_function(1.5 * PI).is_err());
    }

    #[test]
    fn b_is_even() {
        for k in 0..64 {
            let eta = 0.1 + k as f64 * 0.097;
            if let (Ok(a), Ok(b)) = (b_function(eta), b_function(wrap_angle(-eta))) {
                assert!((a - b).abs() < 1e-12);
                assert!(a > 0.0 && a <= 1.0);
            }
        }
    }

    #[test]
    fn bound_examples() {
        let ac = BoundaryParams::armchair(0.3);
        assert!((gap_lower_bound(&ac, PI).unwrap() - 2.0_f64.sqrt()).abs() < 1e-14);
        let area = 1.5 * 3.0_f64.sqrt() * 225.0;
        let want = (4.0 * PI / (3.0 * 3.0_f64.sqrt() * 225.0)).sqrt();
        assert!((gap_lower_bound(&ac, area).unwrap() - want).abs() < 1e-15);
        let g = BoundaryParams::new(FRAC_PI_4, 1.5 * PI, 0.0, 0.0);
        let want = (2.0 * PI).sqrt() * (2.0_f64.sqrt() - 1.0);
        assert!((gap_lower_bound(&g, 1.0).unwrap() - want).abs() < 1e-14);
        assert!(gap_lower_bound(&BoundaryParams::zigzag(), 1.0).is_err());
        assert!(gap_lower_bound(&ac, 0.0).is_err());
    }

    #[test]
    fn regularity_examples() {
        use RegularityClass::*;
        assert_eq!(
            regularity_class(&BoundaryParams::<f64>::zigzag()),
            (ZigzagPlus, ZigzagMinus)
        );
        assert_eq!(
            regularity_class(&BoundaryParams::<f64>::armchair(1.0)),
            (SobolevH1, SobolevH1)
        );
        let p = BoundaryParams::new(FRAC_PI_4, FRAC_PI_4, 0.0, 0.0);
        assert_eq!(regularity_class(&p), (SobolevH1, ZigzagMinus));
    }
}
