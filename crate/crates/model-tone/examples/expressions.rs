//! The one-variable expression DSL used for curvature profiles and
//! warping functions: parse, evaluate, differentiate, print.

use model_tone::expr;

fn main() {
    let f = expr::parse("exp(2*y) + sin(pi*y)/2").unwrap();
    println!("f(y)  = {f}");
    println!("f(0.3) = {}", f.evaluate(0.3).unwrap());

    let fp = f.differentiate();
    println!("f'(y) = {fp}");
    println!("f'(0.3) = {}", fp.evaluate(0.3).unwrap());

    // printing round-trips through the parser
    let reparsed = expr::parse(&fp.to_string()).unwrap();
    assert_eq!(
        fp.evaluate(1.7).unwrap(),
        reparsed.evaluate(1.7).unwrap(),
        "printed form evaluates identically"
    );

    // domain issues surface as errors, not NaN
    let g = expr::parse("sqrt(y - 1)").unwrap();
    println!("sqrt(y-1) at 0.5: {:?}", g.evaluate(0.5));

    // second derivatives are how the warping condition f f'' - f'^2 <= 0
    // gets checked symbolically
    let warp = expr::parse("cosh(y)").unwrap();
    let second = warp.differentiate().differentiate();
    let y = 0.8f64;
    let phi = warp.evaluate(y).unwrap() * second.evaluate(y).unwrap()
        - warp.differentiate().evaluate(y).unwrap().powi(2);
    println!("cosh f*f'' - f'^2 at {y}: {phi} (the identity says 1)");
}
