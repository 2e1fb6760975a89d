//! Essential-spectrum discreteness evidence: exhaustion-indexed lower
//! bound sequences whose divergence (under fixed, documented criteria)
//! yields a DISCRETE verdict, plus the limiting bottom-of-spectrum
//! estimate.

use model_tone::expr;
use model_tone::model::CurvatureProfile;
use model_tone::spectrum::{
    dyadic_z_seq, graph_discreteness, nonproper_discreteness, persson_limit,
};

fn main() {
    // graphs over shrinking dyadic heights: mean curvature decaying
    // like z^2 Hz(z) -> 0 keeps the estimate alive, and the bounds grow
    // geometrically
    let hz = expr::parse("1/(1+z)").unwrap();
    let graph = graph_discreteness(2, 1.0, &hz, &dyadic_z_seq(16)).unwrap();
    println!(
        "graph: verdict {:?}, decay hypothesis ok = {:?}",
        graph.verdict, graph.decay_hypothesis_ok
    );
    for (j, b) in graph.indices.iter().zip(&graph.lower_bounds).take(6) {
        println!("  j = {j:2}  lower bound = {b:.6}");
    }
    println!("  ... j = {}  lower bound = {:.3e}", graph.indices.len(), graph.lower_bounds.last().unwrap());

    // a strongly non-proper immersion: balls B(2/j) around the limit
    // point, lambda1 ~ (pi/4)^2 j^2, minus curvature penalties growing
    // linearly in j. With H_sup = 0 the sequence diverges.
    let profile = CurvatureProfile::parse("0").unwrap();
    for h_sup in [0.0, 1.0] {
        let rep = nonproper_discreteness(2, 1, 1.0, 0.0, h_sup, 10.0, &profile, 96).unwrap();
        println!(
            "nonproper H_sup = {h_sup}: verdict {:?}, fit constant = {:.6}, last negative index = {:?}",
            rep.verdict,
            rep.fit_constant.unwrap(),
            rep.last_negative_index
        );
    }

    // the Persson-style limit: diverging bounds mean empty essential
    // spectrum (estimate infinite); converged bounded sequences estimate
    // its bottom
    let diverging = graph.lower_bounds.clone();
    let est = persson_limit(&diverging).unwrap();
    println!("persson on the graph sequence: {:?}", est);

    let plateau: Vec<f64> = (1..=32).map(|j| 2.5 - 0.25f64.powi(j)).collect();
    let est = persson_limit(&plateau).unwrap();
    println!("persson on a plateau sequence: {:?}", est);
}
