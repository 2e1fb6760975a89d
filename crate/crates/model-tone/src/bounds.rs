//! Fundamental-tone lower bounds for minimal submanifolds of warped
//! products, with hypothesis verification.
//!
//! The main estimate certifies, for a minimal `m`-submanifold inside a
//! warped product over a one-dimensional base with warping `f` and fiber
//! ball radius `R`,
//!
//! ```text
//! lambda^* >= inf over the base of (lambda_1 - m f'(y)^2) / f(y)^2,
//! ```
//!
//! where `lambda_1` is the first eigenvalue of the radius-`R` ball in the
//! comparison model of dimension `m - n`. It holds under three
//! hypotheses, each checked here and reported as a flag:
//!
//! * the radius is admissible: `2R sqrt(sup G_-) <= pi` on `[0, R]`;
//! * the warping condition `f f'' - (f')^2 <= 0` on the base interval;
//! * `g' > 0` up to `R` for the model coefficient.
//!
//! A report with any flag false is still produced (the number is a valid
//! statement of arithmetic, it just is not a certified tone bound) but marked not
//! certified. Nonpositive bounds are additionally flagged vacuous.

use crate::eig::{first_eigenvalue, EigError};
use crate::expr::{ExprError, ScalarExpr};
use crate::model::{
    solve_coefficient, sup_g_minus, CurvatureProfile, ModelError, ModelProfile,
};
use crate::numeric::golden_max;
use serde::Serialize;
use std::f64::consts::PI;
use thiserror::Error;

/// Width used to truncate an infinite base interval for sampling.
pub const DEFAULT_WINDOW: f64 = 20.0;
/// `check_warping_condition` refuses coarser sample grids.
pub const MIN_WARPING_SAMPLES: usize = 1000;

#[derive(Debug, Error)]
pub enum BoundError {
    #[error("need m > n >= 1 and m >= 2, got m = {m}, n = {n}")]
    BadDimensions { m: u32, n: u32 },
    #[error("fiber dimension q must be >= 1")]
    BadFiberDimension,
    #[error("fiber ball radius must be positive and finite, got {0}")]
    BadRadius(f64),
    #[error("base interval must satisfy alpha < beta, got ({0}, {1})")]
    BadInterval(f64, f64),
    #[error("truncation window must be positive and finite, got {0}")]
    BadWindow(f64),
    #[error("need at least {MIN_WARPING_SAMPLES} warping samples, got {0}")]
    TooFewSamples(usize),
    #[error("warping function must be positive, got f({y}) = {value}")]
    NonpositiveWarping { y: f64, value: f64 },
    #[error("warping summary needs c1 > 0 and c2 >= 0, got c1 = {c1}, c2 = {c2}")]
    BadSummary { c1: f64, c2: f64 },
    #[error("lambda1 must be nonnegative and finite, got {0}")]
    BadLambda1(f64),
    #[error("parameter {name} must be {requirement}, got {value}")]
    BadParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Eig(#[from] EigError),
}

/// Warping data for the base of the product.
#[derive(Debug, Clone)]
pub enum Warping {
    /// `f = 1`: the product is Riemannian, the bound is `lambda_1` itself.
    ConstantOne,
    /// `f` given pointwise as an expression in the base variable.
    Expr(ScalarExpr),
    /// Base known only through `c1 >= sup f` and `c2 >= sup |f'|`
    /// (equivalently `inf f >= some c1 > 0` after rescaling); produces the
    /// conservative scalar bound `(lambda_1 - m c2^2) / c1^2`.
    Summary { c1: f64, c2: f64 },
}

/// A minimal submanifold scenario: dimensions, warping, fiber curvature
/// profile, and fiber ball radius.
#[derive(Debug, Clone)]
pub struct WarpedScenario {
    pub m: u32,
    pub n: u32,
    pub q: u32,
    pub warping: Warping,
    pub curvature: CurvatureProfile,
    pub radius: f64,
    /// Base interval; either end may be infinite.
    pub base_interval: (f64, f64),
    /// Truncation distance for sampling infinite ends.
    pub window: f64,
}

impl WarpedScenario {
    pub fn new(
        m: u32,
        n: u32,
        q: u32,
        warping: Warping,
        curvature: CurvatureProfile,
        radius: f64,
        base_interval: (f64, f64),
    ) -> Result<Self, BoundError> {
        if m < 2 || n < 1 || m <= n {
            return Err(BoundError::BadDimensions { m, n });
        }
        if q < 1 {
            return Err(BoundError::BadFiberDimension);
        }
        if !(radius > 0.0 && radius.is_finite()) {
            return Err(BoundError::BadRadius(radius));
        }
        let (a, b) = base_interval;
        if !(a < b) || a.is_nan() || b.is_nan() {
            return Err(BoundError::BadInterval(a, b));
        }
        if let Warping::Summary { c1, c2 } = warping {
            if !(c1 > 0.0 && c1.is_finite() && c2 >= 0.0 && c2.is_finite()) {
                return Err(BoundError::BadSummary { c1, c2 });
            }
        }
        Ok(WarpedScenario {
            m,
            n,
            q,
            warping,
            curvature,
            radius,
            base_interval,
            window: DEFAULT_WINDOW,
        })
    }

    pub fn with_window(mut self, window: f64) -> Result<Self, BoundError> {
        if !(window > 0.0 && window.is_finite()) {
            return Err(BoundError::BadWindow(window));
        }
        self.window = window;
        Ok(self)
    }

    /// Comparison model dimension for the fiber ball.
    pub fn kappa(&self) -> f64 {
        (self.m - self.n) as f64
    }
}

/// Hypothesis flags for one bound evaluation.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Hypotheses {
    pub radius_admissible: bool,
    pub warping_ok: bool,
    pub gprime_positive: bool,
}

impl Hypotheses {
    pub fn all(&self) -> bool {
        self.radius_admissible && self.warping_ok && self.gprime_positive
    }
}

/// How the base was handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundMode {
    /// Pointwise infimum of `(lambda_1 - m f'^2)/f^2` over the base.
    Pointwise,
    /// Scalar summary `(lambda_1 - m c2^2)/c1^2`; valid only when the
    /// numerator is nonnegative, otherwise vacuous.
    ScalarSummary,
}

/// Outcome of a bound evaluation. `bound` is always reported; `certified`
/// is the conjunction of the hypothesis flags, and `vacuous` marks a
/// nonpositive value (true but useless).
#[derive(Debug, Clone, Serialize)]
pub struct BoundReport {
    pub bound: f64,
    pub lambda1: f64,
    pub mode: BoundMode,
    pub vacuous: bool,
    pub hypotheses: Hypotheses,
    pub certified: bool,
}

impl BoundReport {
    fn assemble(bound: f64, lambda1: f64, mode: BoundMode, hypotheses: Hypotheses) -> Self {
        BoundReport {
            bound,
            lambda1,
            mode,
            vacuous: bound <= 0.0,
            hypotheses,
            certified: hypotheses.all(),
        }
    }
}

/// Result of sampling `f f'' - (f')^2` over the base interval.
#[derive(Debug, Clone, Copy)]
pub struct WarpingCheck {
    pub holds: bool,
    pub max_violation: f64,
    pub argmax: f64,
}

fn truncate_interval(interval: (f64, f64), window: f64) -> (f64, f64) {
    let (a, b) = interval;
    match (a.is_finite(), b.is_finite()) {
        (true, true) => (a, b),
        (true, false) => (a, a + window),
        (false, true) => (b - window, b),
        (false, false) => (-window, window),
    }
}

/// Samples `f f'' - (f')^2` on `samples` interior points of the interval
/// (infinite ends truncated to `window`) and reports whether the warping
/// condition holds, i.e. the largest sampled value stays below
/// `1e-12 * max f^2`.
pub fn check_warping_condition_windowed(
    f: &ScalarExpr,
    interval: (f64, f64),
    samples: usize,
    window: f64,
) -> Result<WarpingCheck, BoundError> {
    if samples < MIN_WARPING_SAMPLES {
        return Err(BoundError::TooFewSamples(samples));
    }
    if !(window > 0.0 && window.is_finite()) {
        return Err(BoundError::BadWindow(window));
    }
    let (a, b) = interval;
    if !(a < b) || a.is_nan() || b.is_nan() {
        return Err(BoundError::BadInterval(a, b));
    }
    let (a, b) = truncate_interval(interval, window);
    let fp = f.differentiate();
    let fpp = fp.differentiate();
    let mut max_violation = f64::NEG_INFINITY;
    let mut argmax = a;
    let mut scale = 0.0_f64;
    for i in 1..=samples {
        let y = a + (b - a) * i as f64 / (samples + 1) as f64;
        let fy = f.evaluate(y)?;
        if fy <= 0.0 {
            return Err(BoundError::NonpositiveWarping { y, value: fy });
        }
        let fpy = fp.evaluate(y)?;
        let fppy = fpp.evaluate(y)?;
        let phi = fy * fppy - fpy * fpy;
        scale = scale.max(fy * fy);
        if phi > max_violation {
            max_violation = phi;
            argmax = y;
        }
    }
    Ok(WarpingCheck {
        holds: max_violation <= 1e-12 * scale,
        max_violation,
        argmax,
    })
}

/// [`check_warping_condition_windowed`] with the default window.
pub fn check_warping_condition(
    f: &ScalarExpr,
    interval: (f64, f64),
    samples: usize,
) -> Result<WarpingCheck, BoundError> {
    check_warping_condition_windowed(f, interval, samples, DEFAULT_WINDOW)
}

/// Whether `2R sqrt(sup G_-)` stays within `pi` on `[0, R]`.
fn radius_flag(profile: &CurvatureProfile, r: f64) -> Result<bool, BoundError> {
    let sup = sup_g_minus(profile, r)?;
    Ok(2.0 * r * sup.sqrt() <= PI * (1.0 + 1e-12))
}

fn gprime_flag(model: &ModelProfile, r: f64) -> bool {
    // g' staying positive on [0, R); a zero at R itself is allowed
    model.rmono().map_or(true, |rm| rm >= r * (1.0 - 1e-9))
}

/// Solves the coefficient just to learn where g' first vanishes.
fn gprime_flag_from_profile(profile: &CurvatureProfile, r: f64) -> Result<bool, BoundError> {
    let model = solve_coefficient(profile, r, r / 20_000.0)?;
    Ok(gprime_flag(&model, r))
}

/// The integrand whose infimum is the bound.
fn h_value(
    f: &ScalarExpr,
    fp: &ScalarExpr,
    m: f64,
    lambda1: f64,
    y: f64,
) -> Result<f64, BoundError> {
    let fy = f.evaluate(y)?;
    if fy <= 0.0 {
        return Err(BoundError::NonpositiveWarping { y, value: fy });
    }
    let fpy = fp.evaluate(y)?;
    Ok((lambda1 - m * fpy * fpy) / (fy * fy))
}

/// Folds sampled values into `best`, with golden-section refinement at
/// interior local minima.
fn fold_samples(
    ys: &[f64],
    hs: &[f64],
    h: impl Fn(f64) -> Result<f64, BoundError>,
    best: &mut f64,
) -> Result<(), BoundError> {
    for i in 0..ys.len() {
        *best = best.min(hs[i]);
        if i > 0 && i + 1 < ys.len() && hs[i] < hs[i - 1] && hs[i] < hs[i + 1] {
            let tol = (ys[i + 1] - ys[i - 1]).abs() * 1e-8;
            let (_, neg_min) = golden_max(|y| h(y).map(|v| -v), ys[i - 1], ys[i + 1], tol)?;
            *best = best.min(-neg_min);
        }
    }
    Ok(())
}

/// Walks fixed-width windows toward an infinite end until the trend shows
/// the infimum is not out there (three consecutive windows monotone with
/// the minimum at the inner edge), the window minima plateau, or a cap is
/// reached. Returns the smallest refined value seen.
fn walk_infinite_end(
    h: impl Fn(f64) -> Result<f64, BoundError> + Copy,
    edge: f64,
    direction: f64,
    best: &mut f64,
) -> Result<(), BoundError> {
    const WIDTH: f64 = 10.0;
    const PER_WINDOW: usize = 256;
    const CAP: usize = 50;
    let mut inward_streak = 0;
    let mut plateau_streak = 0;
    let mut prev_min = f64::INFINITY;
    for k in 0..CAP {
        let near = edge + direction * WIDTH * k as f64;
        let far = edge + direction * WIDTH * (k + 1) as f64;
        let (lo, hi) = if direction < 0.0 { (far, near) } else { (near, far) };
        let mut ys = Vec::with_capacity(PER_WINDOW + 1);
        let mut hs = Vec::with_capacity(PER_WINDOW + 1);
        for i in 0..=PER_WINDOW {
            let y = lo + (hi - lo) * i as f64 / PER_WINDOW as f64;
            ys.push(y);
            hs.push(h(y)?);
        }
        let win_min = hs.iter().cloned().fold(f64::INFINITY, f64::min);
        fold_samples(&ys, &hs, h, best)?;

        // monotone across the window with the minimum at the inner edge
        // means the infimum lies back toward the interior
        let inward = if direction < 0.0 {
            hs.windows(2).all(|w| w[1] <= w[0])
        } else {
            hs.windows(2).all(|w| w[1] >= w[0])
        };
        inward_streak = if inward { inward_streak + 1 } else { 0 };
        if inward_streak >= 3 {
            break;
        }
        let plateau = (win_min - prev_min).abs() <= 1e-12 * (1.0 + win_min.abs());
        plateau_streak = if plateau { plateau_streak + 1 } else { 0 };
        if plateau_streak >= 3 {
            break;
        }
        prev_min = win_min;
    }
    Ok(())
}

fn infimum_of_h(
    f: &ScalarExpr,
    interval: (f64, f64),
    window: f64,
    m: f64,
    lambda1: f64,
) -> Result<f64, BoundError> {
    let fp = f.differentiate();
    let h = |y: f64| h_value(f, &fp, m, lambda1, y);
    let (a, b) = interval;
    let (ca, cb) = truncate_interval(interval, window);

    const CORE: usize = 4096;
    let mut ys = Vec::with_capacity(CORE + 1);
    let mut hs = Vec::with_capacity(CORE + 1);
    for i in 1..CORE {
        let y = ca + (cb - ca) * i as f64 / CORE as f64;
        ys.push(y);
        hs.push(h(y)?);
    }
    let mut best = f64::INFINITY;
    fold_samples(&ys, &hs, h, &mut best)?;

    // closure endpoints count when f extends continuously and positively;
    // the infimum over the open interval includes their limits
    for end in [a, b] {
        if end.is_finite() {
            if let Ok(v) = h(end) {
                best = best.min(v);
            }
        }
    }
    if a.is_infinite() {
        walk_infinite_end(&h, ca, -1.0, &mut best)?;
    }
    if b.is_infinite() {
        walk_infinite_end(&h, cb, 1.0, &mut best)?;
    }
    Ok(best)
}

/// Lower bound for the fundamental tone of a minimal submanifold in a
/// warped product, from a caller-supplied fiber ball eigenvalue.
///
/// `lambda1` must be the first eigenvalue of the radius-`R` ball in the
/// scenario's comparison model at dimension `kappa = m - n`; it is taken
/// as given so eigenvalue solving stays decoupled.
///
/// Pointwise warpings give `inf (lambda1 - m f'^2)/f^2` over the base,
/// including finite-endpoint limits, with infinite ends walked until
/// their trend is established. Summary warpings give the scalar bound
/// `(lambda1 - m c2^2)/c1^2`, which is marked vacuous whenever
/// `lambda1 < m c2^2` since the substitution certifies nothing there; the
/// summary route asserts (not checks) the warping condition, and the two
/// routes are distinguished by `mode` in the report.
pub fn tone_bound_general(
    scenario: &WarpedScenario,
    lambda1: f64,
) -> Result<BoundReport, BoundError> {
    if !(lambda1.is_finite() && lambda1 >= 0.0) {
        return Err(BoundError::BadLambda1(lambda1));
    }
    let m = scenario.m as f64;
    let radius_admissible = radius_flag(&scenario.curvature, scenario.radius)?;
    let gprime_positive = gprime_flag_from_profile(&scenario.curvature, scenario.radius)?;

    let (bound, warping_ok, mode) = match &scenario.warping {
        Warping::ConstantOne => (lambda1, true, BoundMode::Pointwise),
        Warping::Expr(f) => {
            let check = check_warping_condition_windowed(
                f,
                scenario.base_interval,
                4096,
                scenario.window,
            )?;
            let bound = infimum_of_h(
                f,
                scenario.base_interval,
                scenario.window,
                m,
                lambda1,
            )?;
            (bound, check.holds, BoundMode::Pointwise)
        }
        Warping::Summary { c1, c2 } => (
            (lambda1 - m * c2 * c2) / (c1 * c1),
            true,
            BoundMode::ScalarSummary,
        ),
    };
    Ok(BoundReport::assemble(
        bound,
        lambda1,
        mode,
        Hypotheses {
            radius_admissible,
            warping_ok,
            gprime_positive,
        },
    ))
}

/// Product-with-constant-warping case: the bound is the fiber ball
/// eigenvalue itself, at comparison dimension `m - 1`.
pub fn tone_bound_cylinder(
    m: u32,
    model: &ModelProfile,
    r: f64,
    rel_tol: f64,
) -> Result<BoundReport, BoundError> {
    if m < 2 {
        return Err(BoundError::BadDimensions { m, n: 1 });
    }
    let sol = first_eigenvalue(model, (m - 1) as f64, r, rel_tol)?;
    let hypotheses = Hypotheses {
        radius_admissible: radius_flag(model.curvature(), r)?,
        warping_ok: true, // f = 1: the condition is 0 <= 0
        gprime_positive: gprime_flag(model, r),
    };
    Ok(BoundReport::assemble(
        sol.lambda1(),
        sol.lambda1(),
        BoundMode::Pointwise,
        hypotheses,
    ))
}

/// Cylinder bound over a flat fiber: `(c_{m-1} / R)^2` with `c` the first
/// zero of the matching Bessel function.
pub fn tone_bound_euclidean(m: u32, r: f64, rel_tol: f64) -> Result<BoundReport, BoundError> {
    if !(r > 0.0 && r.is_finite()) {
        return Err(BoundError::BadRadius(r));
    }
    let profile = CurvatureProfile::parse("0")?;
    let model = solve_coefficient(&profile, r, r / 40_000.0)?;
    tone_bound_cylinder(m, &model, r, rel_tol)
}

/// Bound for a minimal submanifold of a pseudo-hyperbolic space with
/// exponential warping `e^{b y}` over a base ending at `beta`:
/// `lambda1 e^{-2 b beta} - m b^2`.
///
/// The exponential warping satisfies the warping condition identically
/// and the flags reflect that; the fiber-model hypotheses travel with the
/// caller-supplied `lambda1` and should be checked where the model is
/// solved (the CLI does).
pub fn tone_bound_pseudo_hyperbolic(
    m: u32,
    b: f64,
    beta: f64,
    lambda1: f64,
) -> Result<BoundReport, BoundError> {
    if m < 2 {
        return Err(BoundError::BadDimensions { m, n: 1 });
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(BoundError::BadParameter {
            name: "b",
            requirement: "positive and finite",
            value: b,
        });
    }
    if !beta.is_finite() {
        return Err(BoundError::BadParameter {
            name: "beta",
            requirement: "finite",
            value: beta,
        });
    }
    if !(lambda1.is_finite() && lambda1 >= 0.0) {
        return Err(BoundError::BadLambda1(lambda1));
    }
    let mf = m as f64;
    let bound = lambda1 * (-2.0 * b * beta).exp() - mf * b * b;
    Ok(BoundReport::assemble(
        bound,
        lambda1,
        BoundMode::Pointwise,
        Hypotheses {
            radius_admissible: true,
            warping_ok: true,
            gprime_positive: true,
        },
    ))
}

/// Hyperbolic-space specialization: exponential warping with `b = 1`.
pub fn tone_bound_hyperbolic(m: u32, beta: f64, lambda1: f64) -> Result<BoundReport, BoundError> {
    tone_bound_pseudo_hyperbolic(m, 1.0, beta, lambda1)
}

/// Cone bound with linear warping over `(0, a)`: `(lambda1 - m) / a^2`.
///
/// Linear warping satisfies the warping condition (`f f'' - f'^2 = -1`);
/// fiber-model hypotheses travel with `lambda1` as in the
/// pseudo-hyperbolic case.
pub fn tone_bound_cone(m: u32, a: f64, lambda1: f64) -> Result<BoundReport, BoundError> {
    if m < 2 {
        return Err(BoundError::BadDimensions { m, n: 1 });
    }
    if !(a > 0.0 && a.is_finite()) {
        return Err(BoundError::BadParameter {
            name: "a",
            requirement: "positive and finite",
            value: a,
        });
    }
    if !(lambda1.is_finite() && lambda1 >= 0.0) {
        return Err(BoundError::BadLambda1(lambda1));
    }
    let bound = (lambda1 - m as f64) / (a * a);
    Ok(BoundReport::assemble(
        bound,
        lambda1,
        BoundMode::Pointwise,
        Hypotheses {
            radius_admissible: true,
            warping_ok: true,
            gprime_positive: true,
        },
    ))
}

/// Bound for minimal submanifolds of a round sphere, with the fiber ball
/// a spherical cap of radius `theta` and the submanifold confined to
/// distance `r` from the axis: `(lambda1 - m)/sin^2 r` for `r <= pi/2`,
/// and `lambda1 - m` past the equator. The two branches agree at
/// `r = pi/2`.
pub fn tone_bound_sphere(
    m: u32,
    r: f64,
    theta: f64,
    rel_tol: f64,
) -> Result<BoundReport, BoundError> {
    if m < 2 {
        return Err(BoundError::BadDimensions { m, n: 1 });
    }
    if !(theta > 0.0 && theta < PI / 2.0) {
        return Err(BoundError::BadParameter {
            name: "theta",
            requirement: "inside (0, pi/2)",
            value: theta,
        });
    }
    if !(r > 0.0 && r < PI) {
        return Err(BoundError::BadParameter {
            name: "r",
            requirement: "inside (0, pi)",
            value: r,
        });
    }
    let profile = CurvatureProfile::parse("-1")?;
    let model = solve_coefficient(&profile, theta, theta / 40_000.0)?;
    let sol = first_eigenvalue(&model, (m - 1) as f64, theta, rel_tol)?;
    let lambda1 = sol.lambda1();
    let mf = m as f64;
    let bound = if r <= PI / 2.0 {
        let s = r.sin();
        (lambda1 - mf) / (s * s)
    } else {
        lambda1 - mf
    };
    let hypotheses = Hypotheses {
        radius_admissible: radius_flag(model.curvature(), theta)?,
        warping_ok: true, // sin warping: f f'' - f'^2 = -1
        gprime_positive: gprime_flag(&model, theta),
    };
    Ok(BoundReport::assemble(
        bound,
        lambda1,
        BoundMode::Pointwise,
        hypotheses,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bessel::bessel_first_zero;
    use crate::eig::DEFAULT_REL_TOL;
    use crate::expr::parse;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    fn model_for(src: &str, r_max: f64) -> ModelProfile {
        let p = CurvatureProfile::parse(src).unwrap();
        solve_coefficient(&p, r_max, r_max / 40_000.0).unwrap()
    }

    #[test]
    fn warping_condition_exponential_holds_exactly() {
        let f = parse("exp(2*y)").unwrap();
        let check = check_warping_condition(&f, (-1.0, 1.0), 2000).unwrap();
        assert!(check.holds);
        // f f'' and (f')^2 round to the same float, so the difference is
        // exactly zero at every sample
        assert_eq!(check.max_violation, 0.0);
    }

    #[test]
    fn warping_condition_cosh_fails_with_unit_violation() {
        let f = parse("cosh(y)").unwrap();
        let check = check_warping_condition(&f, (-1.0, 1.0), 2000).unwrap();
        assert!(!check.holds);
        assert!((check.max_violation - 1.0).abs() <= 1e-10);
    }

    #[test]
    fn warping_condition_linear_holds() {
        let f = parse("y").unwrap();
        let check = check_warping_condition(&f, (0.0, 5.0), 2000).unwrap();
        assert!(check.holds);
        assert!((check.max_violation + 1.0).abs() <= 1e-12);
    }

    #[test]
    fn warping_condition_rejects_bad_inputs() {
        let f = parse("y").unwrap();
        assert!(matches!(
            check_warping_condition(&f, (-1.0, 1.0), 2000),
            Err(BoundError::NonpositiveWarping { .. })
        ));
        assert!(matches!(
            check_warping_condition(&f, (0.0, 5.0), 100),
            Err(BoundError::TooFewSamples(100))
        ));
        assert!(matches!(
            check_warping_condition(&f, (5.0, 0.0), 2000),
            Err(BoundError::BadInterval(..))
        ));
    }

    #[test]
    fn warping_condition_truncates_infinite_intervals() {
        let f = parse("exp(y)").unwrap();
        let check =
            check_warping_condition(&f, (f64::NEG_INFINITY, 0.0), 2000).unwrap();
        assert!(check.holds);
        assert_eq!(check.max_violation, 0.0);
    }

    fn scenario(m: u32, warping: Warping, g: &str, r: f64, interval: (f64, f64)) -> WarpedScenario {
        WarpedScenario::new(
            m,
            1,
            1,
            warping,
            CurvatureProfile::parse(g).unwrap(),
            r,
            interval,
        )
        .unwrap()
    }

    #[test]
    fn constant_warping_returns_lambda1_itself() {
        let sc = scenario(3, Warping::ConstantOne, "0", 1.0, (0.0, 1.0));
        let report = tone_bound_general(&sc, 5.0).unwrap();
        assert_eq!(report.bound, 5.0);
        assert!(report.certified);
        assert!(!report.vacuous);
        assert_eq!(report.mode, BoundMode::Pointwise);
    }

    #[test]
    fn exponential_warping_attains_the_bound_at_the_finite_end() {
        // h(y) = (5 - 2 e^{2y}) / e^{2y} = 5 e^{-2y} - 2 decreases in y,
        // so the infimum over y < 0 is h(0) = 3
        let f = parse("exp(y)").unwrap();
        let sc = scenario(2, Warping::Expr(f), "0", 1.0, (f64::NEG_INFINITY, 0.0));
        let report = tone_bound_general(&sc, 5.0).unwrap();
        assert!((report.bound - 3.0).abs() <= 1e-12, "bound = {}", report.bound);
        assert!(report.certified);
    }

    #[test]
    fn linear_warping_attains_the_bound_at_the_right_end() {
        // h(y) = (6 - 2) / y^2, infimum 1 at y -> 2
        let f = parse("y").unwrap();
        let sc = scenario(2, Warping::Expr(f), "0", 1.0, (0.0, 2.0));
        let report = tone_bound_general(&sc, 6.0).unwrap();
        assert!((report.bound - 1.0).abs() <= 1e-12, "bound = {}", report.bound);
    }

    #[test]
    fn summary_warping_reports_the_scalar_bound_and_flags_vacuity() {
        let sc = scenario(3, Warping::Summary { c1: 2.0, c2: 1.0 }, "0", 1.0, (0.0, 1.0));
        let ok = tone_bound_general(&sc, 5.0).unwrap();
        assert_eq!(ok.bound, 0.5);
        assert_eq!(ok.mode, BoundMode::ScalarSummary);
        assert!(!ok.vacuous);

        // lambda1 under m c2^2: the substitution certifies nothing
        let bad = tone_bound_general(&sc, 2.0).unwrap();
        assert_eq!(bad.bound, -0.25);
        assert!(bad.vacuous);
    }

    #[test]
    fn general_matches_cylinder_for_constant_warping() {
        let r = 1.0;
        let model = model_for("1", r);
        let cyl = tone_bound_cylinder(3, &model, r, DEFAULT_REL_TOL).unwrap();
        let sc = scenario(3, Warping::ConstantOne, "1", r, (0.0, 1.0));
        let gen = tone_bound_general(&sc, cyl.lambda1).unwrap();
        assert!(rel(gen.bound, cyl.bound) <= 1e-10);
    }

    #[test]
    fn general_matches_pseudo_hyperbolic_for_exponential_warping() {
        let (b, beta, lambda1, m) = (0.7, 0.3, 5.0, 2);
        let f = parse("exp(0.7*y)").unwrap();
        let sc = scenario(m, Warping::Expr(f), "0", 1.0, (f64::NEG_INFINITY, beta));
        let gen = tone_bound_general(&sc, lambda1).unwrap();
        let cor = tone_bound_pseudo_hyperbolic(m, b, beta, lambda1).unwrap();
        assert!(
            rel(gen.bound, cor.bound) <= 1e-8,
            "{} vs {}",
            gen.bound,
            cor.bound
        );
    }

    #[test]
    fn general_matches_cone_for_linear_warping() {
        let (a, lambda1, m) = (2.0, 6.0, 2);
        let f = parse("y").unwrap();
        let sc = scenario(m, Warping::Expr(f), "0", 1.0, (0.0, a));
        let gen = tone_bound_general(&sc, lambda1).unwrap();
        let cor = tone_bound_cone(m, a, lambda1).unwrap();
        assert!(rel(gen.bound, cor.bound) <= 1e-8);
    }

    #[test]
    fn cylinder_examples() {
        // kappa = 1 interval law: bound = (pi / 2R)^2 = 1 at R = pi/2
        let m = model_for("1", PI / 2.0);
        let rep = tone_bound_cylinder(2, &m, PI / 2.0, DEFAULT_REL_TOL).unwrap();
        assert!(rel(rep.bound, 1.0) <= 1e-8);

        // hemisphere at kappa = 3
        let m = model_for("-1", PI / 2.0);
        let rep = tone_bound_cylinder(4, &m, PI / 2.0, DEFAULT_REL_TOL).unwrap();
        assert!(rel(rep.bound, 3.0) <= 1e-6);
        assert!(rep.certified);

        // flat fiber ball against the Bessel oracle
        let rep = tone_bound_euclidean(3, 1.0, DEFAULT_REL_TOL).unwrap();
        let j = bessel_first_zero(0.0).unwrap();
        assert!(rel(rep.bound, j * j) <= 1e-6);
    }

    #[test]
    fn cylinder_flags_failed_hypotheses_without_erroring() {
        // G = -4: admissibility needs 2R * 2 <= pi, fails at R = 1;
        // g = sin(2r)/2 has g' < 0 past pi/4 as well
        let m = model_for("-4", 1.0);
        let rep = tone_bound_cylinder(2, &m, 1.0, DEFAULT_REL_TOL).unwrap();
        assert!(!rep.hypotheses.radius_admissible);
        assert!(!rep.hypotheses.gprime_positive);
        assert!(!rep.certified);
        assert!(rep.bound > 0.0);
    }

    #[test]
    fn cylinder_bound_decreases_with_radius() {
        let m = model_for("1", 2.0);
        let small = tone_bound_cylinder(3, &m, 1.0, DEFAULT_REL_TOL).unwrap();
        let large = tone_bound_cylinder(3, &m, 2.0, DEFAULT_REL_TOL).unwrap();
        assert!(large.bound < small.bound);
    }

    #[test]
    fn pseudo_hyperbolic_examples() {
        // vacuous at the hemisphere eigenvalue
        let rep = tone_bound_pseudo_hyperbolic(2, 1.0, 0.0, 1.0).unwrap();
        assert_eq!(rep.bound, -1.0);
        assert!(rep.vacuous);

        // interval eigenvalue at R = 1
        let lambda1 = (PI / 2.0) * (PI / 2.0);
        let rep = tone_bound_pseudo_hyperbolic(2, 1.0, 0.0, lambda1).unwrap();
        assert!((rep.bound - (lambda1 - 2.0)).abs() <= 1e-12);
        assert!(!rep.vacuous);

        // flat 2-dimensional fiber, base shifted to beta = -1
        let j = bessel_first_zero(0.0).unwrap();
        let rep = tone_bound_pseudo_hyperbolic(3, 1.0, -1.0, j * j).unwrap();
        let expected = j * j * (2.0_f64).exp() - 3.0;
        assert!(rel(rep.bound, expected) <= 1e-12);
        assert!((rep.bound - 39.73).abs() < 0.01);
    }

    #[test]
    fn hyperbolic_is_the_unit_exponent_case() {
        let a = tone_bound_hyperbolic(2, 0.5, 3.0).unwrap();
        let b = tone_bound_pseudo_hyperbolic(2, 1.0, 0.5, 3.0).unwrap();
        assert_eq!(a.bound, b.bound);
    }

    #[test]
    fn cone_examples() {
        // theta = pi/4 over a circle: lambda1 = (pi / (2 theta))^2 = 4
        let rep = tone_bound_cone(2, 1.0, 4.0).unwrap();
        assert_eq!(rep.bound, 2.0);
        let rep = tone_bound_cone(2, 2.0, 4.0).unwrap();
        assert_eq!(rep.bound, 0.5);

        // hemisphere cap at kappa = 2 gives lambda1 = 2, under m = 3 the
        // bound is vacuous
        let m = model_for("-1", PI / 2.0);
        let sol = first_eigenvalue(&m, 2.0, PI / 2.0, DEFAULT_REL_TOL).unwrap();
        let rep = tone_bound_cone(3, 1.0, sol.lambda1()).unwrap();
        assert!((rep.bound + 1.0).abs() <= 1e-6, "bound = {}", rep.bound);
        assert!(rep.vacuous);
    }

    #[test]
    fn sphere_examples_and_branch_continuity() {
        let theta = PI / 4.0;
        // lambda1 = (pi / (2 theta))^2 = 4; equator: sin = 1
        let rep = tone_bound_sphere(2, PI / 2.0, theta, DEFAULT_REL_TOL).unwrap();
        assert!(rel(rep.bound, 2.0) <= 1e-8);
        assert!(rep.certified);

        // past the equator the sin factor is dropped
        let rep_far = tone_bound_sphere(2, 3.0 * PI / 4.0, theta, DEFAULT_REL_TOL).unwrap();
        assert!(rel(rep_far.bound, 2.0) <= 1e-8);

        // both branches are the same expression at the equator
        assert_eq!(rep.bound, rep.lambda1 - 2.0);

        let rep_near = tone_bound_sphere(2, PI / 6.0, theta, DEFAULT_REL_TOL).unwrap();
        assert!(rel(rep_near.bound, 8.0) <= 1e-8, "bound = {}", rep_near.bound);
    }

    #[test]
    fn sphere_rejects_out_of_range_angles() {
        assert!(matches!(
            tone_bound_sphere(2, 1.0, 1.6, DEFAULT_REL_TOL),
            Err(BoundError::BadParameter { name: "theta", .. })
        ));
        assert!(matches!(
            tone_bound_sphere(2, 3.2, 0.5, DEFAULT_REL_TOL),
            Err(BoundError::BadParameter { name: "r", .. })
        ));
    }

    #[test]
    fn scenario_validation() {
        let g = CurvatureProfile::parse("0").unwrap();
        assert!(matches!(
            WarpedScenario::new(2, 2, 1, Warping::ConstantOne, g.clone(), 1.0, (0.0, 1.0)),
            Err(BoundError::BadDimensions { .. })
        ));
        assert!(matches!(
            WarpedScenario::new(3, 1, 0, Warping::ConstantOne, g.clone(), 1.0, (0.0, 1.0)),
            Err(BoundError::BadFiberDimension)
        ));
        assert!(matches!(
            WarpedScenario::new(3, 1, 1, Warping::ConstantOne, g.clone(), -1.0, (0.0, 1.0)),
            Err(BoundError::BadRadius(_))
        ));
        assert!(matches!(
            WarpedScenario::new(
                3,
                1,
                1,
                Warping::Summary { c1: 0.0, c2: 1.0 },
                g.clone(),
                1.0,
                (0.0, 1.0)
            ),
            Err(BoundError::BadSummary { .. })
        ));
        assert!(matches!(
            WarpedScenario::new(3, 1, 1, Warping::ConstantOne, g, 1.0, (2.0, 1.0)),
            Err(BoundError::BadInterval(..))
        ));
    }

    #[test]
    fn general_flags_a_failed_warping_condition() {
        let f = parse("cosh(y)").unwrap();
        let sc = scenario(2, Warping::Expr(f), "0", 1.0, (-1.0, 1.0));
        let report = tone_bound_general(&sc, 5.0).unwrap();
        assert!(!report.hypotheses.warping_ok);
        assert!(!report.certified);
        // the number is still there: inf of (5 - 2 sinh^2)/cosh^2
        assert!(report.bound.is_finite());
    }
}
