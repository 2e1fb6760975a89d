//! First Dirichlet eigenvalues of centered geodesic balls, with the
//! classical checks: Bessel zeros in flat space, kappa*B^2 for the
//! hemisphere, the McKean floor in hyperbolic space.

use model_tone::bessel::bessel_first_zero;
use model_tone::eig::{first_eigenvalue, DEFAULT_REL_TOL};
use model_tone::model::{solve_coefficient, CurvatureProfile};
use std::f64::consts::PI;

fn lambda1(g_src: &str, kappa: f64, r: f64) -> f64 {
    let profile = CurvatureProfile::parse(g_src).unwrap();
    let model = solve_coefficient(&profile, r, r / 40_000.0).unwrap();
    first_eigenvalue(&model, kappa, r, DEFAULT_REL_TOL)
        .unwrap()
        .lambda1()
}

fn main() {
    // flat space against the Bessel oracle
    println!("flat balls, radius 1:");
    for kappa in 2..=5u32 {
        let l = lambda1("0", kappa as f64, 1.0);
        let j = bessel_first_zero(kappa as f64 / 2.0 - 1.0).unwrap();
        println!(
            "  kappa = {kappa}: lambda1 = {l:.10}  (j^2 = {:.10}, diff {:+.1e})",
            j * j,
            l - j * j
        );
    }

    // hemispheres of curvature B^2 give exactly kappa B^2
    println!("hemispheres:");
    for b in [0.5, 1.0, 2.0] {
        let l = lambda1(&format!("{}", -b * b), 3.0, PI / (2.0 * b));
        println!("  B = {b}: lambda1 = {l:.10}  (exact {})", 3.0 * b * b);
    }

    // hyperbolic balls approach (kappa-1)^2/4 from above as R grows
    println!("hyperbolic balls, kappa = 3 (floor = 1):");
    for r in [2.0, 5.0, 10.0, 20.0] {
        println!("  R = {r:4}: lambda1 = {:.8}", lambda1("1", 3.0, r));
    }

    // the eigenfunction itself: positive, decreasing, zero at R
    let profile = CurvatureProfile::parse("-1").unwrap();
    let model = solve_coefficient(&profile, 1.0, 1.0 / 40_000.0).unwrap();
    let sol = first_eigenvalue(&model, 2.0, 1.0, DEFAULT_REL_TOL).unwrap();
    let v = sol.v();
    println!(
        "cap eigenfunction: v(0) = {}, v(R/2) = {:.6}, v(R) = {:.2e}",
        v[0],
        v[v.len() / 2],
        v[v.len() - 1]
    );
}
