//! First Dirichlet eigenvalues of centered geodesic balls by shooting.
//!
//! On a model with coefficient `g` the radial eigenfunction of a ball of
//! radius `R` in the `kappa`-dimensional model solves
//!
//! ```text
//! v'' + (kappa - 1)(g'/g) v' + lambda v = 0,   v(0) = 1, v'(0) = 0,
//! ```
//!
//! and `lambda_1(B(R))` is the unique `lambda` whose solution first
//! vanishes exactly at `R`. The solver brackets that `lambda` by doubling
//! and then bisects on "does `v` vanish on `(0, R]`", which is monotone
//! because the first zero moves inward as `lambda` grows.
//!
//! `kappa = 1` degenerates to `v'' + lambda v = 0` with
//! `lambda_1 = (pi / 2R)^2` independent of `g`, a useful exact check.

use crate::model::ModelProfile;
use thiserror::Error;

/// Target number of eigenfunction grid steps when the model allows it.
pub const DEFAULT_GRID_POINTS: usize = 10_000;
/// Default relative tolerance for the eigenvalue bisection.
pub const DEFAULT_REL_TOL: f64 = 1e-8;
/// Bracket doubling gives up past this.
const LAMBDA_CAP: f64 = 1e12;
/// The returned eigenfunction satisfies `|v(R)| <=` this (stricter than
/// the documented 1e-8 so downstream residuals stay small).
const V_END_TOL: f64 = 1e-9;

#[derive(Debug, Error)]
pub enum EigError {
    #[error("kappa must be >= 1, got {0}")]
    BadKappa(f64),
    #[error("lambda must be nonnegative and finite, got {0}")]
    BadLambda(f64),
    #[error("ball radius must satisfy 0 < R <= solved range {r_max}, got {r}")]
    RadiusOutOfRange { r: f64, r_max: f64 },
    #[error("ball radius {r} reaches the first zero of g at {r0}: the radial coefficient is singular")]
    CoefficientSingular { r: f64, r0: f64 },
    #[error("model grid (step {model_step}) is too coarse to carry an eigenfunction grid on [0, {r}]")]
    ModelTooCoarse { model_step: f64, r: f64 },
    #[error("eigenfunction grid cannot resolve the oscillation: {zeros} sign changes over {points} points")]
    GridTooCoarse { zeros: usize, points: usize },
    #[error("no zero of v in (0, R] with lambda up to {0:e}")]
    BracketNotFound(f64),
    #[error("rel_tol must lie in (1e-14, 1e-2), got {0:e}")]
    BadRelTol(f64),
    #[error("g' vanishes at {rmono}, inside the ball of radius {r}: the barrier argument needs g' > 0")]
    GprimeNotPositive { rmono: f64, r: f64 },
    #[error("eigenfunction was solved on radius {r}, expected twice the inner radius {r_inner}")]
    InnerRadiusMismatch { r: f64, r_inner: f64 },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

/// Terminal data of one shot.
#[derive(Debug, Clone, Copy)]
pub struct Shot {
    pub v_end: f64,
    pub vprime_end: f64,
    /// Sign changes of `v` on `(0, R]`.
    pub zero_count: usize,
}

/// Radial first eigenfunction of a centered ball, sampled on a uniform
/// grid over `[0, R]` with `v(0) = 1`.
///
/// Invariants (validated on construction): `v > 0` before `R`,
/// `|v(R)| <= 1e-8`, and `v' < 0` on `(0, R]`.
#[derive(Debug, Clone)]
pub struct EigenSolution {
    lambda1: f64,
    kappa: f64,
    radius: f64,
    grid: Vec<f64>,
    v: Vec<f64>,
    vprime: Vec<f64>,
}

impl EigenSolution {
    pub fn lambda1(&self) -> f64 {
        self.lambda1
    }
    pub fn kappa(&self) -> f64 {
        self.kappa
    }
    pub fn radius(&self) -> f64 {
        self.radius
    }
    pub fn grid(&self) -> &[f64] {
        &self.grid
    }
    pub fn v(&self) -> &[f64] {
        &self.v
    }
    pub fn vprime(&self) -> &[f64] {
        &self.vprime
    }

    /// Writes the eigenfunction as CSV (`t,v,vprime`, 17 significant
    /// digits per value).
    pub fn write_csv<W: std::io::Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(w, "t,v,vprime")?;
        for i in 0..self.grid.len() {
            writeln!(
                w,
                "{:.16e},{:.16e},{:.16e}",
                self.grid[i], self.v[i], self.vprime[i]
            )?;
        }
        Ok(())
    }
}

struct Sampled {
    grid: Vec<f64>,
    v: Vec<f64>,
    w: Vec<f64>,
    zero_count: usize,
}

fn validate_shot_inputs(
    model: &ModelProfile,
    kappa: f64,
    lambda: f64,
    r: f64,
) -> Result<(), EigError> {
    if !(kappa.is_finite() && kappa >= 1.0) {
        return Err(EigError::BadKappa(kappa));
    }
    if !(lambda.is_finite() && lambda >= 0.0) {
        return Err(EigError::BadLambda(lambda));
    }
    let r_max = model.r_max();
    if !(r > 0.0 && r <= r_max * (1.0 + 1e-12)) {
        return Err(EigError::RadiusOutOfRange { r, r_max });
    }
    if let Some(r0) = model.r0() {
        if r >= r0 {
            return Err(EigError::CoefficientSingular { r, r0 });
        }
    }
    Ok(())
}

/// Number of eigenfunction grid steps: as close to the default as the
/// model allows, keeping the model grid at least 4x finer.
fn grid_steps(model: &ModelProfile, r: f64) -> Result<usize, EigError> {
    let max_by_model = (r / (4.0 * model.step())).floor() as usize;
    if max_by_model < 16 {
        return Err(EigError::ModelTooCoarse {
            model_step: model.step(),
            r,
        });
    }
    Ok(max_by_model.min(DEFAULT_GRID_POINTS))
}

fn shoot_sampled(
    model: &ModelProfile,
    kappa: f64,
    lambda: f64,
    r: f64,
) -> Result<Sampled, EigError> {
    validate_shot_inputs(model, kappa, lambda, r)?;
    let n = grid_steps(model, r)?;
    let h = r / n as f64;

    let mut grid = Vec::with_capacity(n + 1);
    let mut v = Vec::with_capacity(n + 1);
    let mut w = Vec::with_capacity(n + 1);
    grid.push(0.0);
    v.push(1.0);
    w.push(0.0);
    // series start across the singular origin
    grid.push(h);
    v.push(1.0 - lambda * h * h / (2.0 * kappa));
    w.push(-lambda * h / kappa);

    // v' = w,  w' = -(kappa - 1)(g'/g) w - lambda v
    let flat = kappa == 1.0; // the coefficient term drops out entirely
    let deriv = |t: f64, y: [f64; 2]| -> [f64; 2] {
        let drag = if flat {
            0.0
        } else {
            -(kappa - 1.0) * model.log_derivative(t) * y[1]
        };
        [y[1], drag - lambda * y[0]]
    };
    let mut y = [v[1], w[1]];
    for i in 1..n {
        let t = h * i as f64;
        let k1 = deriv(t, y);
        let k2 = deriv(t + 0.5 * h, [y[0] + 0.5 * h * k1[0], y[1] + 0.5 * h * k1[1]]);
        let k3 = deriv(t + 0.5 * h, [y[0] + 0.5 * h * k2[0], y[1] + 0.5 * h * k2[1]]);
        let k4 = deriv(t + h, [y[0] + h * k3[0], y[1] + h * k3[1]]);
        y = [
            y[0] + h / 6.0 * (k1[0] + 2.0 * k2[0] + 2.0 * k3[0] + k4[0]),
            y[1] + h / 6.0 * (k1[1] + 2.0 * k2[1] + 2.0 * k3[1] + k4[1]),
        ];
        grid.push(h * (i + 1) as f64);
        v.push(y[0]);
        w.push(y[1]);
    }

    let mut zero_count = 0;
    let mut blew_up = false;
    for i in 0..v.len() - 1 {
        if !v[i + 1].is_finite() {
            // the march went unstable, which only happens when the grid
            // cannot track the oscillation at this lambda
            blew_up = true;
            break;
        }
        if (v[i] > 0.0 && v[i + 1] <= 0.0) || (v[i] < 0.0 && v[i + 1] >= 0.0) {
            zero_count += 1;
        }
    }
    if blew_up || zero_count * 10 > n {
        return Err(EigError::GridTooCoarse {
            zeros: zero_count,
            points: n + 1,
        });
    }
    Ok(Sampled {
        grid,
        v,
        w,
        zero_count,
    })
}

/// Integrates one shot at a fixed `lambda` and reports the terminal values
/// and the number of sign changes of `v` on `(0, R]`.
pub fn shoot(model: &ModelProfile, kappa: f64, lambda: f64, r: f64) -> Result<Shot, EigError> {
    let s = shoot_sampled(model, kappa, lambda, r)?;
    Ok(Shot {
        v_end: *s.v.last().unwrap(),
        vprime_end: *s.w.last().unwrap(),
        zero_count: s.zero_count,
    })
}

/// First Dirichlet eigenvalue of the centered ball of radius `r`, with the
/// eigenfunction sampled along the way.
///
/// `rel_tol` controls the eigenvalue bracket width (default
/// [`DEFAULT_REL_TOL`]); independent of it, the bisection continues until
/// the returned eigenfunction satisfies `|v(R)| <= 1e-9`.
pub fn first_eigenvalue(
    model: &ModelProfile,
    kappa: f64,
    r: f64,
    rel_tol: f64,
) -> Result<EigenSolution, EigError> {
    if !(rel_tol > 1e-14 && rel_tol < 1e-2) {
        return Err(EigError::BadRelTol(rel_tol));
    }
    let has_zero = |lambda: f64| -> Result<bool, EigError> {
        Ok(shoot_sampled(model, kappa, lambda, r)?.zero_count >= 1)
    };

    // bracket: lo shoots past R without vanishing, hi vanishes inside
    let mut lo;
    let mut hi = 1.0;
    if has_zero(1.0)? {
        lo = 0.5;
        while has_zero(lo)? {
            hi = lo;
            lo *= 0.5;
            if lo < 1e-300 {
                return Err(EigError::Invariant(
                    "v vanishes inside (0, R] for every lambda > 0".into(),
                ));
            }
        }
    } else {
        while !has_zero(hi)? {
            hi *= 2.0;
            if hi > LAMBDA_CAP {
                return Err(EigError::BracketNotFound(LAMBDA_CAP));
            }
        }
        lo = hi / 2.0;
    }

    // bisection; a quarter of rel_tol so the one-sided report stays well
    // inside the promised tolerance
    let mut guard = 0;
    while hi - lo > 0.25 * rel_tol * lo {
        let mid = 0.5 * (lo + hi);
        if has_zero(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
        guard += 1;
        if guard > 600 {
            return Err(EigError::Invariant("eigenvalue bisection stalled".into()));
        }
    }

    // keep narrowing until the terminal value is small enough; lo marches
    // up towards lambda_1, so v(R; lo) -> 0
    let mut sampled = shoot_sampled(model, kappa, lo, r)?;
    while sampled.v.last().unwrap().abs() > V_END_TOL {
        if hi - lo <= 4.0 * f64::EPSILON * hi {
            return Err(EigError::Invariant(format!(
                "terminal value {:+e} will not settle below {V_END_TOL:e}",
                sampled.v.last().unwrap()
            )));
        }
        let mid = 0.5 * (lo + hi);
        if has_zero(mid)? {
            hi = mid;
        } else {
            lo = mid;
            sampled = shoot_sampled(model, kappa, lo, r)?;
        }
    }

    // positivity before R and strict decay on (0, R]
    for i in 0..sampled.v.len() {
        if sampled.v[i] <= 0.0 {
            return Err(EigError::Invariant(format!(
                "v({}) = {} is not positive",
                sampled.grid[i], sampled.v[i]
            )));
        }
        if i > 0 && sampled.w[i] >= 0.0 {
            return Err(EigError::Invariant(format!(
                "v'({}) = {} is not negative",
                sampled.grid[i], sampled.w[i]
            )));
        }
    }

    Ok(EigenSolution {
        lambda1: lo,
        kappa,
        radius: r,
        grid: sampled.grid,
        v: sampled.v,
        vprime: sampled.w,
    })
}

/// Largest value of `kappa (g'/g) v' + lambda_1 v` over the grid points in
/// `(0, R]`.
///
/// For the comparison argument the eigenfunction is a valid radial barrier
/// when this margin is nonpositive, which holds whenever `g' > 0` on
/// `[0, R)` and `lambda_1 >= kappa * sup G_-` on the ball. A margin at or
/// below ~1e-6 * lambda_1 certifies the inequality numerically.
pub fn barrier_margin(sol: &EigenSolution, model: &ModelProfile) -> Result<f64, EigError> {
    if let Some(rmono) = model.rmono() {
        if rmono < sol.radius * (1.0 - 1e-9) {
            return Err(EigError::GprimeNotPositive {
                rmono,
                r: sol.radius,
            });
        }
    }
    let mut margin = f64::NEG_INFINITY;
    for i in 1..sol.grid.len() {
        let t = sol.grid[i];
        let m = sol.kappa * model.log_derivative(t) * sol.vprime[i] + sol.lambda1 * sol.v[i];
        margin = margin.max(m);
    }
    Ok(margin)
}

/// The constant `1 + max_{[0, R_inner]} |v'| / v` for an eigenfunction
/// solved on the double ball `[0, 2 R_inner]`.
///
/// This bounds the gradient of the positive extension used when a ball of
/// radius `R_inner` is compared through the double ball.
pub fn gradient_bound_constant(sol: &EigenSolution, r_inner: f64) -> Result<f64, EigError> {
    if !(r_inner > 0.0) || (sol.radius - 2.0 * r_inner).abs() > 1e-12 * sol.radius {
        return Err(EigError::InnerRadiusMismatch {
            r: sol.radius,
            r_inner,
        });
    }
    let mut best = 0.0_f64;
    for i in 0..sol.grid.len() {
        if sol.grid[i] > r_inner * (1.0 + 1e-12) {
            break;
        }
        best = best.max(sol.vprime[i].abs() / sol.v[i]);
    }
    Ok(1.0 + best)
}
