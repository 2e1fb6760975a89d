// First positive zeros of Bessel J across orders. These anchor the flat
// ball eigenvalue: lambda_1(B_R in R^k) = (j_{k/2-1,1} / R)^2.

use model_tone::bessel::bessel_first_zero;
use std::f64::consts::PI;

fn main() {
    println!("order nu    first zero j_nu,1");
    for half in -1..=7 {
        let nu = half as f64 / 2.0;
        let z = bessel_first_zero(nu).unwrap();
        println!("{nu:7.1}     {z:.12}");
    }

    // half-integer orders have closed forms: j_{-1/2,1} = pi/2 from
    // cos, j_{1/2,1} = pi from sin(x)/x
    let lo = bessel_first_zero(-0.5).unwrap();
    let hi = bessel_first_zero(0.5).unwrap();
    println!("\nj_-1/2,1 - pi/2 = {:+.2e}", lo - PI / 2.0);
    println!("j_+1/2,1 - pi   = {:+.2e}", hi - PI);
}
