//! First Dirichlet eigenvalues of geodesic balls in rotationally symmetric
//! model manifolds, and fundamental-tone lower bounds for minimal
//! submanifolds of warped products.
//!
//! A model manifold is described by a radial curvature profile `G` (the
//! radial sectional curvature is `-G`). The warping coefficient `g` solves
//! `g'' = G g` with `g(0) = 0`, `g'(0) = 1`, and the first eigenvalue of a
//! centered ball of radius `R` is found by shooting on the radial equation
//! `v'' + (kappa - 1)(g'/g) v' + lambda v = 0`.
//!
//! The crate is organized around runnable examples, one per capability:
//!
//! ```text
//! cargo run --example expressions        # the curvature/warping DSL
//! cargo run --example model_profile      # solving g'' = G g, R0 and Rmono
//! cargo run --example bessel_zeros       # the independent Bessel oracle
//! cargo run --example ball_eigenvalue    # lambda_1 of geodesic balls
//! cargo run --example admissible_radius  # hypothesis helper computations
//! cargo run --example warped_bounds      # all tone bound specializations
//! cargo run --example discreteness       # essential-spectrum sequences
//! cargo run --example json_report        # the config -> report pipeline
//! ```
//!
//! A thin `model-tone` binary exposes the same operations as `model`,
//! `eig`, `bound` and `spectrum` subcommands emitting JSON reports that
//! validate against `schemas/report.schema.json`.

pub mod bessel;
pub mod bounds;
pub mod cli;
pub mod eig;
pub mod expr;
pub mod model;
pub mod numeric;
pub mod spectrum;
