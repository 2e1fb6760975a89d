//! Fundamental-tone lower bounds for minimal submanifolds of warped
//! products N x_f Q, from the general scenario form down to each named
//! specialization. A bound only means something when the report's
//! hypothesis flags are all true; the library computes them rather than
//! trusting the caller.

use model_tone::bounds::{
    tone_bound_cone, tone_bound_cylinder, tone_bound_euclidean, tone_bound_general,
    tone_bound_hyperbolic, tone_bound_pseudo_hyperbolic, tone_bound_sphere, BoundReport,
    Warping, WarpedScenario,
};
use model_tone::eig::{first_eigenvalue, DEFAULT_REL_TOL};
use model_tone::expr;
use model_tone::model::{solve_coefficient, CurvatureProfile};
use std::f64::consts::PI;

fn show(name: &str, rep: &BoundReport) {
    println!(
        "{name:18} bound = {:>12.6}  lambda1 = {:>10.6}  mode = {:?}  certified = {}{}",
        rep.bound,
        rep.lambda1,
        rep.mode,
        rep.certified,
        if rep.vacuous { "  (vacuous)" } else { "" }
    );
}

fn main() {
    // a 4-dimensional minimal submanifold of R x_{e^y} Q, fiber balls
    // of radius 0.9 in a flat 3-dimensional model
    let profile = CurvatureProfile::parse("0").unwrap();
    let model = solve_coefficient(&profile, 0.9, 0.9 / 40_000.0).unwrap();
    let lambda1 = first_eigenvalue(&model, 3.0, 0.9, DEFAULT_REL_TOL)
        .unwrap()
        .lambda1();

    let scenario = WarpedScenario::new(
        4,
        1,
        3,
        Warping::Expr(expr::parse("exp(y)").unwrap()),
        profile.clone(),
        0.9,
        (f64::NEG_INFINITY, 0.5),
    )
    .unwrap();
    show("general exp(y)", &tone_bound_general(&scenario, lambda1).unwrap());

    // the same scenario summarized by sup f <= c1 = e, sup |f'| <= c2 = e
    let scenario = WarpedScenario::new(
        4,
        1,
        3,
        Warping::Summary { c1: 0.5f64.exp(), c2: 0.5f64.exp() },
        profile,
        0.9,
        (f64::NEG_INFINITY, 0.5),
    )
    .unwrap();
    show("general summary", &tone_bound_general(&scenario, lambda1).unwrap());

    // named corollaries
    let sphere_profile = CurvatureProfile::parse("-1").unwrap();
    let sphere_model = solve_coefficient(&sphere_profile, 1.2, 1.2 / 40_000.0).unwrap();
    show("cylinder", &tone_bound_cylinder(4, &sphere_model, 1.2, DEFAULT_REL_TOL).unwrap());
    show("euclidean", &tone_bound_euclidean(4, 1.2, DEFAULT_REL_TOL).unwrap());

    let cap_lambda1 = {
        let m = solve_coefficient(&sphere_profile, 0.8, 0.8 / 40_000.0).unwrap();
        first_eigenvalue(&m, 3.0, 0.8, DEFAULT_REL_TOL).unwrap().lambda1()
    };
    show("pseudo-hyperbolic", &tone_bound_pseudo_hyperbolic(4, 0.5, 1.0, cap_lambda1).unwrap());
    show("hyperbolic", &tone_bound_hyperbolic(4, 0.2, cap_lambda1).unwrap());
    show("cone", &tone_bound_cone(4, 2.0, cap_lambda1).unwrap());
    show("sphere r<pi/2", &tone_bound_sphere(2, 0.9, PI / 4.0, DEFAULT_REL_TOL).unwrap());
    show("sphere r>pi/2", &tone_bound_sphere(2, 2.3561945, PI / 4.0, DEFAULT_REL_TOL).unwrap());

    // a scenario whose hypotheses fail: ball past the monotonicity
    // radius of the round sphere. The bound still computes; the report
    // just refuses to certify it.
    let big = solve_coefficient(&sphere_profile, 2.0, 2.0 / 40_000.0).unwrap();
    show("uncertified", &tone_bound_cylinder(4, &big, 2.0, DEFAULT_REL_TOL).unwrap());
}
