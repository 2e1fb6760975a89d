//! Two hypothesis helpers. The admissible radius is the largest R with
//! 2R*sqrt(sup G_-) <= pi, inside which the barrier lemma applies. The
//! tail criterion sup_t t*int_t^s0 G_- <= 1/4 certifies that a
//! compactly supported profile stays nonnegative (g' > 0 everywhere),
//! which is what the essential-spectrum results need.

use model_tone::model::{admissible_radius, sup_g_minus, tail_criterion, CurvatureProfile};

fn main() {
    for src in ["-1", "-4", "0", "1", "-1 + 0.5*r", "-4*exp(-r)"] {
        let profile = CurvatureProfile::parse(src).unwrap();
        let sup = sup_g_minus(&profile, 3.0).unwrap();
        let adm = admissible_radius(&profile, 3.0).unwrap();
        println!("G = {src:12}  sup G_- on [0,3] = {sup:.4}  admissible R = {adm:.6}");
    }

    println!();

    // a profile supported in [0, 2]: G = -c * (2 - r)_+ written with
    // the positive part as abs
    for c in [0.05, 0.125, 0.5] {
        let src = format!("{} * (abs(2 - r) + (2 - r))", -c / 2.0);
        let profile = CurvatureProfile::parse(&src)
            .unwrap()
            .with_compact_support(2.0);
        let t = tail_criterion(&profile).unwrap();
        println!(
            "c = {c}: tail sup = {:.4} at t = {:.3} -> {}",
            t.sup,
            t.witness,
            if t.holds { "holds (g' stays positive)" } else { "fails" }
        );
    }
}
