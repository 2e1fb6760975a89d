//! Small shared numeric routines: golden-section search and Simpson
//! quadrature, both generic over a fallible integrand so expression
//! domain errors propagate out of refinement loops.

const INV_PHI: f64 = 0.618_033_988_749_894_8; // (sqrt(5) - 1) / 2

/// Golden-section maximization of `f` on `[a, b]`.
///
/// Assumes `f` is unimodal on the bracket; returns `(x, f(x))` with the
/// bracket narrowed to width `tol` (absolute, floored at a few ulps).
pub fn golden_max<E>(
    f: impl Fn(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<(f64, f64), E> {
    let mut lo = a;
    let mut hi = b;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    let floor = 4.0 * f64::EPSILON * (a.abs() + b.abs() + 1.0);
    let width = tol.max(floor);
    for _ in 0..200 {
        if hi - lo <= width {
            break;
        }
        if f1 >= f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1)?;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2)?;
        }
    }
    let x = 0.5 * (lo + hi);
    Ok((x, f(x)?))
}

/// Composite Simpson integral of `f` over `[a, b]` with `n` subintervals
/// (`n` is rounded up to an even count of at least 2).
pub fn simpson<E>(
    f: impl Fn(f64) -> Result<f64, E>,
    a: f64,
    b: f64,
    n: usize,
) -> Result<f64, E> {
    if a == b {
        return Ok(0.0);
    }
    let n = n.max(2).next_multiple_of(2);
    let h = (b - a) / n as f64;
    let mut acc = f(a)? + f(b)?;
    for i in 1..n {
        let x = a + h * i as f64;
        acc += f(x)? * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    Ok(acc * h / 3.0)
}
