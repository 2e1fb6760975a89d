//! First positive zeros of Bessel functions of the first kind.
//!
//! Kept deliberately independent of the shooting machinery in [`crate::eig`]:
//! nothing here integrates an ODE. `J_nu` is evaluated by its power series
//! and the zero is pinned down by bisection on a scanned sign change. The
//! first Dirichlet eigenvalue of a Euclidean ball of radius `R` in dimension
//! `kappa` is `(j / R)^2` with `j = bessel_first_zero(kappa/2 - 1)`, which
//! makes this module a cross-check oracle for the solver.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BesselError {
    #[error("order nu = {0} is out of range: need nu >= -0.5")]
    OrderOutOfRange(f64),
    #[error("first zero of J_{0} lies beyond x = 12, outside the series scan range")]
    ZeroBeyondScanRange(f64),
}

/// Upper end of the sign-change scan. The alternating series is still
/// well conditioned here (worst-case cancellation costs ~4 digits).
const SCAN_LIMIT: f64 = 12.0;
const SCAN_STEP: f64 = 0.1;

/// `J_nu(x)` stripped of the positive prefactor `(x/2)^nu / Gamma(nu+1)`.
///
/// For `x > 0` the prefactor never vanishes, so sign changes of this sum
/// are exactly the sign changes of `J_nu`.
fn bessel_series_core(nu: f64, x: f64) -> f64 {
    let q = -0.25 * x * x;
    let mut term = 1.0_f64;
    let mut sum = 1.0_f64;
    for k in 1..=200 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() < 1e-25 * (1.0 + sum.abs()) {
            break;
        }
    }
    sum
}

/// First positive zero of `J_nu` for `nu >= -1/2`.
///
/// Scans outward in steps of 0.1 until the series changes sign, then
/// bisects. Absolute error is below 1e-12, comfortably inside the 1e-10
/// the callers rely on. Orders whose first zero exceeds the scan limit
/// (roughly `nu > 7.6`) are rejected rather than extrapolated.
pub fn bessel_first_zero(nu: f64) -> Result<f64, BesselError> {
    if !nu.is_finite() || nu < -0.5 {
        return Err(BesselError::OrderOutOfRange(nu));
    }
    let mut prev_x = 0.0;
    let mut prev_s = 1.0; // series value at x = 0
    let mut bracket = None;
    let mut k = 1;
    while (k as f64) * SCAN_STEP <= SCAN_LIMIT + 1e-9 {
        let x = (k as f64) * SCAN_STEP;
        let s = bessel_series_core(nu, x);
        if prev_s > 0.0 && s <= 0.0 {
            bracket = Some((prev_x, x));
            break;
        }
        prev_x = x;
        prev_s = s;
        k += 1;
    }
    let (mut a, mut b) = bracket.ok_or(BesselError::ZeroBeyondScanRange(nu))?;
    for _ in 0..80 {
        let mid = 0.5 * (a + b);
        if bessel_series_core(nu, mid) > 0.0 {
            a = mid;
        } else {
            b = mid;
        }
        if b - a <= 1e-13 {
            break;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn half_integer_orders_hit_closed_forms() {
        // J_{-1/2} is proportional to cos(x)/sqrt(x), J_{1/2} to sin(x)/sqrt(x).
        let j_m = bessel_first_zero(-0.5).unwrap();
        let j_p = bessel_first_zero(0.5).unwrap();
        assert!((j_m - PI / 2.0).abs() <= 1e-10, "got {j_m}");
        assert!((j_p - PI).abs() <= 1e-10, "got {j_p}");
    }

    #[test]
    fn order_zero_matches_reference() {
        let j0 = bessel_first_zero(0.0).unwrap();
        assert!((j0 - 2.404_825_557_695_773).abs() <= 1e-10, "got {j0}");
    }

    #[test]
    fn first_zero_increases_with_order() {
        let orders = [-0.5, 0.0, 0.5, 1.0, 1.5, 2.0];
        let zeros: Vec<f64> = orders
            .iter()
            .map(|&nu| bessel_first_zero(nu).unwrap())
            .collect();
        for w in zeros.windows(2) {
            assert!(w[0] < w[1], "zeros not increasing: {zeros:?}");
        }
    }

    #[test]
    fn rejects_out_of_range_orders() {
        assert!(matches!(
            bessel_first_zero(-0.6),
            Err(BesselError::OrderOutOfRange(_))
        ));
        assert!(matches!(
            bessel_first_zero(f64::NAN),
            Err(BesselError::OrderOutOfRange(_))
        ));
        // j_{20,1} is near 25, far beyond the scan window.
        assert!(matches!(
            bessel_first_zero(20.0),
            Err(BesselError::ZeroBeyondScanRange(_))
        ));
    }
}
