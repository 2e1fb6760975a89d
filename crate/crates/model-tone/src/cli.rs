//! Command line front end: JSON config in, JSON report out.
//!
//! Four subcommands cover the library surface: `model` (coefficient
//! profile), `eig` (ball eigenvalue), `bound` (warped-product tone
//! bounds, seven kinds), and `spectrum` (discreteness sequences, two
//! kinds). Parameters come from `--config file.json`, command line
//! flags, or both; flags win. Every run emits one JSON object with the
//! shape
//!
//! ```text
//! {"command", "inputs", "result", "hypotheses", "certified", "diagnostics"}
//! ```
//!
//! and exits 0 on success, 2 when a hypothesis check failed (the report
//! still carries the numbers, with `certified: false`), and 1 on input
//! errors. Floats are serialized with 17 significant digits so doubles
//! round-trip; infinite or undetected values appear as `null`.

use crate::bounds::{
    tone_bound_cone, tone_bound_cylinder, tone_bound_euclidean, tone_bound_general,
    tone_bound_pseudo_hyperbolic, tone_bound_sphere, BoundReport, Warping, WarpedScenario,
};
use crate::eig::{first_eigenvalue, EigenSolution, DEFAULT_REL_TOL};
use crate::expr::ScalarExpr;
use crate::model::{
    solve_coefficient_capped, sup_g_minus, CurvatureProfile, ModelProfile,
    DEFAULT_MAX_GRID_POINTS,
};
use crate::spectrum::{dyadic_z_seq, graph_discreteness, nonproper_discreteness};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::time::Instant;

/// Everything a run can be told, all optional so that a config file and
/// command line flags can be merged field by field. Unknown keys in a
/// config file are rejected.
#[derive(Debug, Default, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: Option<String>,
    pub kind: Option<String>,
    pub m: Option<u32>,
    pub n: Option<u32>,
    pub q: Option<u32>,
    /// Ball radius in the fiber model.
    #[serde(rename = "R")]
    pub r_ball: Option<f64>,
    /// Ambient distance for the sphere bound.
    #[serde(rename = "r")]
    pub r_ambient: Option<f64>,
    pub a: Option<f64>,
    pub b: Option<f64>,
    pub alpha: Option<f64>,
    pub beta: Option<f64>,
    pub theta: Option<f64>,
    pub kappa: Option<f64>,
    pub r_max: Option<f64>,
    pub step: Option<f64>,
    pub rel_tol: Option<f64>,
    pub j_max: Option<u32>,
    pub z_count: Option<u32>,
    pub window: Option<f64>,
    #[serde(rename = "G")]
    pub curvature: Option<String>,
    pub f: Option<String>,
    #[serde(rename = "Hz")]
    pub hz: Option<String>,
    pub c1: Option<f64>,
    pub c2: Option<f64>,
    #[serde(rename = "H_sup")]
    pub h_sup: Option<f64>,
    #[serde(rename = "C_grad")]
    pub c_grad: Option<f64>,
    /// User assertion that the ambient cut locus does not interfere.
    pub cut_locus_ok: Option<bool>,
    pub csv_out: Option<String>,
}

/// Reads and validates a JSON config file.
pub fn load_config(path: &Path) -> Result<RunConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("config {}: {e}", path.display()))
}

fn merge(file: RunConfig, cli: RunConfig) -> RunConfig {
    RunConfig {
        command: cli.command.or(file.command),
        kind: cli.kind.or(file.kind),
        m: cli.m.or(file.m),
        n: cli.n.or(file.n),
        q: cli.q.or(file.q),
        r_ball: cli.r_ball.or(file.r_ball),
        r_ambient: cli.r_ambient.or(file.r_ambient),
        a: cli.a.or(file.a),
        b: cli.b.or(file.b),
        alpha: cli.alpha.or(file.alpha),
        beta: cli.beta.or(file.beta),
        theta: cli.theta.or(file.theta),
        kappa: cli.kappa.or(file.kappa),
        r_max: cli.r_max.or(file.r_max),
        step: cli.step.or(file.step),
        rel_tol: cli.rel_tol.or(file.rel_tol),
        j_max: cli.j_max.or(file.j_max),
        z_count: cli.z_count.or(file.z_count),
        window: cli.window.or(file.window),
        curvature: cli.curvature.or(file.curvature),
        f: cli.f.or(file.f),
        hz: cli.hz.or(file.hz),
        c1: cli.c1.or(file.c1),
        c2: cli.c2.or(file.c2),
        h_sup: cli.h_sup.or(file.h_sup),
        c_grad: cli.c_grad.or(file.c_grad),
        cut_locus_ok: cli.cut_locus_ok.or(file.cut_locus_ok),
        csv_out: cli.csv_out.or(file.csv_out),
    }
}

#[derive(Parser)]
#[command(
    name = "model-tone",
    about = "First Dirichlet eigenvalues of model geodesic balls and fundamental-tone bounds for minimal submanifolds of warped products"
)]
struct Cli {
    /// JSON config file; explicit flags override its values
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the coefficient equation g'' = G g and report the profile
    Model(CommonArgs),
    /// First Dirichlet eigenvalue of a centered ball in the model
    Eig(CommonArgs),
    /// Fundamental-tone lower bound for a warped-product scenario
    Bound(CommonArgs),
    /// Exhaustion-indexed discreteness sequence
    Spectrum(CommonArgs),
}

#[derive(Args, Default, Clone)]
struct CommonArgs {
    /// bound: general|cylinder|euclidean|pseudo_hyperbolic|hyperbolic|cone|sphere; spectrum: graph|nonproper
    #[arg(long)]
    kind: Option<String>,
    /// Submanifold dimension
    #[arg(long)]
    m: Option<u32>,
    /// Base dimension (general bound)
    #[arg(long)]
    n: Option<u32>,
    /// Fiber dimension
    #[arg(long)]
    q: Option<u32>,
    /// Ball radius in the fiber model
    #[arg(long = "R")]
    r_ball: Option<f64>,
    /// Ambient distance from the axis (sphere bound)
    #[arg(long = "r")]
    r_ambient: Option<f64>,
    /// Cone aperture scale
    #[arg(long)]
    a: Option<f64>,
    /// Exponential warping rate
    #[arg(long)]
    b: Option<f64>,
    /// Left end of the base interval (omit for -infinity)
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<f64>,
    /// Right end of the base interval, or its endpoint for exponential warpings
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<f64>,
    /// Spherical cap radius
    #[arg(long)]
    theta: Option<f64>,
    /// Model dimension for eig
    #[arg(long)]
    kappa: Option<f64>,
    /// Model solve range (defaults to R)
    #[arg(long = "r_max")]
    r_max: Option<f64>,
    /// Model integration step (defaults to r_max / 40000)
    #[arg(long)]
    step: Option<f64>,
    /// Eigenvalue bisection relative tolerance
    #[arg(long = "rel_tol")]
    rel_tol: Option<f64>,
    /// Number of exhaustion indices (nonproper spectrum)
    #[arg(long = "j_max")]
    j_max: Option<u32>,
    /// Number of dyadic heights z_j = 2^-j (graph spectrum)
    #[arg(long = "z_count")]
    z_count: Option<u32>,
    /// Truncation window for infinite base intervals
    #[arg(long)]
    window: Option<f64>,
    /// Curvature profile G as an expression in r
    #[arg(long = "G", allow_hyphen_values = true)]
    curvature: Option<String>,
    /// Warping function as an expression in the base variable
    #[arg(long, allow_hyphen_values = true)]
    f: Option<String>,
    /// Mean curvature decay profile as an expression in z
    #[arg(long = "Hz", allow_hyphen_values = true)]
    hz: Option<String>,
    /// Warping summary: upper bound for f
    #[arg(long)]
    c1: Option<f64>,
    /// Warping summary: upper bound for |f'|
    #[arg(long)]
    c2: Option<f64>,
    /// Mean curvature supremum (nonproper spectrum)
    #[arg(long = "H_sup")]
    h_sup: Option<f64>,
    /// Gradient-estimate constant (nonproper spectrum)
    #[arg(long = "C_grad")]
    c_grad: Option<f64>,
    /// Assert that the ambient cut locus does not interfere
    #[arg(long = "cut_locus_ok")]
    cut_locus_ok: Option<bool>,
    /// Write the run's CSV artifact (model profile, eigenfunction, or sequence) here
    #[arg(long = "csv_out")]
    csv_out: Option<String>,
}

impl CommonArgs {
    fn into_config(self, command: &str) -> RunConfig {
        RunConfig {
            command: Some(command.to_string()),
            kind: self.kind,
            m: self.m,
            n: self.n,
            q: self.q,
            r_ball: self.r_ball,
            r_ambient: self.r_ambient,
            a: self.a,
            b: self.b,
            alpha: self.alpha,
            beta: self.beta,
            theta: self.theta,
            kappa: self.kappa,
            r_max: self.r_max,
            step: self.step,
            rel_tol: self.rel_tol,
            j_max: self.j_max,
            z_count: self.z_count,
            window: self.window,
            curvature: self.curvature,
            f: self.f,
            hz: self.hz,
            c1: self.c1,
            c2: self.c2,
            h_sup: self.h_sup,
            c_grad: self.c_grad,
            cut_locus_ok: self.cut_locus_ok,
            csv_out: self.csv_out,
        }
    }
}

#[derive(Serialize)]
struct EnvelopeFlags {
    radius_admissible: bool,
    warping_ok: bool,
    gprime_positive: bool,
    cut_locus_ok: bool,
}

#[derive(Serialize)]
struct Diagnostics {
    step: Option<f64>,
    rel_tol: Option<f64>,
    runtime_ms: u64,
}

#[derive(Serialize)]
struct Report {
    command: String,
    inputs: Value,
    result: Value,
    hypotheses: EnvelopeFlags,
    certified: bool,
    diagnostics: Diagnostics,
}

/// serde_json formatter printing every float with 17 significant digits.
struct Sci17;

impl serde_json::ser::Formatter for Sci17 {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> std::io::Result<()>
    where
        W: ?Sized + std::io::Write,
    {
        write!(writer, "{value:.16e}")
    }
}

/// Report JSON with lossless float formatting.
pub fn to_report_json<T: Serialize>(value: &T) -> String {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, Sci17);
    value
        .serialize(&mut ser)
        .expect("report serialization cannot fail");
    String::from_utf8(out).expect("report JSON is utf-8")
}

fn need<T: Copy>(v: Option<T>, name: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("missing required parameter {name}"))
}

fn need_positive(v: Option<f64>, name: &str) -> Result<f64, String> {
    let x = need(v, name)?;
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(format!("{name} must be positive"))
    }
}

fn parse_expr(src: &str, what: &str) -> Result<ScalarExpr, String> {
    crate::expr::parse(src).map_err(|e| format!("{what}: {e}"))
}

fn grid_cap() -> Result<usize, String> {
    match std::env::var("MODEL_TONE_MAX_GRID") {
        Ok(s) => match s.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(n),
            _ => Err(format!(
                "MODEL_TONE_MAX_GRID must be a positive integer, got {s:?}"
            )),
        },
        Err(_) => Ok(DEFAULT_MAX_GRID_POINTS),
    }
}

fn solve_model(g_src: &str, r_max: f64, step: f64) -> Result<(CurvatureProfile, ModelProfile), String> {
    let profile = CurvatureProfile::parse(g_src).map_err(|e| e.to_string())?;
    let model = solve_coefficient_capped(&profile, r_max, step, grid_cap()?)
        .map_err(|e| e.to_string())?;
    Ok((profile, model))
}

/// The two model-side hypothesis flags at ball radius `r`.
fn model_flags(model: &ModelProfile, r: f64) -> Result<(bool, bool), String> {
    let sup = sup_g_minus(model.curvature(), r).map_err(|e| e.to_string())?;
    let admissible = 2.0 * r * sup.sqrt() <= PI * (1.0 + 1e-12);
    let monotone = model.rmono().map_or(true, |rm| rm >= r * (1.0 - 1e-9));
    Ok((admissible, monotone))
}

fn write_csv_file<F>(path: &str, write: F) -> Result<(), String>
where
    F: FnOnce(&mut std::fs::File) -> std::io::Result<()>,
{
    let mut file =
        std::fs::File::create(path).map_err(|e| format!("cannot create {path}: {e}"))?;
    write(&mut file).map_err(|e| format!("cannot write {path}: {e}"))
}

struct Outcome {
    inputs: Value,
    result: Value,
    flags: EnvelopeFlags,
    step: Option<f64>,
    rel_tol: Option<f64>,
}

fn run_model(cfg: &RunConfig) -> Result<Outcome, String> {
    let g_src = need(cfg.curvature.as_deref(), "G")?;
    let r_max = need_positive(cfg.r_max, "r_max")?;
    let step = match cfg.step {
        Some(s) => s,
        None => r_max / 10_000.0,
    };
    let (_, model) = solve_model(g_src, r_max, step)?;
    let (admissible, monotone) = model_flags(&model, r_max)?;
    if let Some(path) = &cfg.csv_out {
        write_csv_file(path, |f| model.write_csv(f))?;
    }
    Ok(Outcome {
        inputs: json!({"G": g_src, "r_max": r_max, "step": step}),
        result: json!({
            "r_max": model.r_max(),
            "step": model.step(),
            "grid_points": model.grid().len(),
            "R0": model.r0(),
            "Rmono": model.rmono(),
            "tol": model.tol(),
        }),
        flags: EnvelopeFlags {
            radius_admissible: admissible,
            warping_ok: true,
            gprime_positive: monotone,
            cut_locus_ok: cfg.cut_locus_ok.unwrap_or(true),
        },
        step: Some(model.step()),
        rel_tol: None,
    })
}

/// Solves the fiber model and the ball eigenvalue with CLI defaults.
fn eigen_from_config(
    cfg: &RunConfig,
    kappa: f64,
) -> Result<(ModelProfile, EigenSolution, f64, f64), String> {
    let g_src = need(cfg.curvature.as_deref(), "G")?;
    let r = need_positive(cfg.r_ball, "R")?;
    let r_max = match cfg.r_max {
        Some(v) if v > 0.0 => v,
        Some(_) => return Err("r_max must be positive".into()),
        None => r,
    };
    if r > r_max {
        return Err("R must not exceed r_max".into());
    }
    let step = match cfg.step {
        Some(s) => s,
        None => r_max / 40_000.0,
    };
    let rel_tol = cfg.rel_tol.unwrap_or(DEFAULT_REL_TOL);
    let (_, model) = solve_model(g_src, r_max, step)?;
    let sol = first_eigenvalue(&model, kappa, r, rel_tol).map_err(|e| e.to_string())?;
    Ok((model, sol, r, rel_tol))
}

fn run_eig(cfg: &RunConfig) -> Result<Outcome, String> {
    let kappa = need(cfg.kappa, "kappa")?;
    let (model, sol, r, rel_tol) = eigen_from_config(cfg, kappa)?;
    let (admissible, monotone) = model_flags(&model, r)?;
    if let Some(path) = &cfg.csv_out {
        write_csv_file(path, |f| sol.write_csv(f))?;
    }
    Ok(Outcome {
        inputs: json!({
            "kappa": kappa,
            "G": cfg.curvature.as_deref().unwrap(),
            "R": r,
            "r_max": model.r_max(),
            "step": model.step(),
            "rel_tol": rel_tol,
        }),
        result: json!({
            "lambda1": sol.lambda1(),
            "kappa": sol.kappa(),
            "R": sol.radius(),
            "grid_points": sol.grid().len(),
        }),
        flags: EnvelopeFlags {
            radius_admissible: admissible,
            warping_ok: true,
            gprime_positive: monotone,
            cut_locus_ok: cfg.cut_locus_ok.unwrap_or(true),
        },
        step: Some(model.step()),
        rel_tol: Some(rel_tol),
    })
}

fn bound_result(kind: &str, report: &BoundReport, extra: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("kind".into(), json!(kind));
    map.insert("bound".into(), json!(report.bound));
    map.insert("lambda1".into(), json!(report.lambda1));
    map.insert("mode".into(), serde_json::to_value(report.mode).unwrap());
    map.insert("vacuous".into(), json!(report.vacuous));
    if let Value::Object(m) = extra {
        map.extend(m);
    }
    Value::Object(map)
}

fn run_bound(cfg: &RunConfig) -> Result<Outcome, String> {
    let kind = need(cfg.kind.as_deref(), "kind")?;
    let m = need(cfg.m, "m")?;
    let cut = cfg.cut_locus_ok.unwrap_or(true);
    let rel_tol = cfg.rel_tol.unwrap_or(DEFAULT_REL_TOL);

    // every kind but sphere solves a fiber model at radius R; sphere
    // carries its own model internally
    let envelope = |h: &crate::bounds::Hypotheses| EnvelopeFlags {
        radius_admissible: h.radius_admissible,
        warping_ok: h.warping_ok,
        gprime_positive: h.gprime_positive,
        cut_locus_ok: cut,
    };

    match kind {
        "cylinder" => {
            let g_src = need(cfg.curvature.as_deref(), "G")?;
            let r = need_positive(cfg.r_ball, "R")?;
            let step = cfg.step.unwrap_or(r / 40_000.0);
            let (_, model) = solve_model(g_src, r, step)?;
            let report = tone_bound_cylinder(m, &model, r, rel_tol).map_err(|e| e.to_string())?;
            Ok(Outcome {
                inputs: json!({"kind": kind, "m": m, "G": g_src, "R": r, "rel_tol": rel_tol}),
                result: bound_result(kind, &report, json!({})),
                flags: envelope(&report.hypotheses),
                step: Some(model.step()),
                rel_tol: Some(rel_tol),
            })
        }
        "euclidean" => {
            let r = need_positive(cfg.r_ball, "R")?;
            let report = tone_bound_euclidean(m, r, rel_tol).map_err(|e| e.to_string())?;
            Ok(Outcome {
                inputs: json!({"kind": kind, "m": m, "R": r, "rel_tol": rel_tol}),
                result: bound_result(kind, &report, json!({})),
                flags: envelope(&report.hypotheses),
                step: Some(r / 40_000.0),
                rel_tol: Some(rel_tol),
            })
        }
        "pseudo_hyperbolic" | "hyperbolic" => {
            let b = if kind == "hyperbolic" {
                1.0
            } else {
                need_positive(cfg.b, "b")?
            };
            let beta = need(cfg.beta, "beta")?;
            let g_default = if kind == "hyperbolic" { Some("0") } else { None };
            let g_src = cfg
                .curvature
                .as_deref()
                .or(g_default)
                .ok_or("missing required parameter G")?;
            let mut probe = cfg.clone();
            probe.curvature = Some(g_src.to_string());
            let (model, sol, r, rel_tol) = eigen_from_config(&probe, (m - 1).max(1) as f64)?;
            let mut report = tone_bound_pseudo_hyperbolic(m, b, beta, sol.lambda1())
                .map_err(|e| e.to_string())?;
            let (admissible, monotone) = model_flags(&model, r)?;
            report.hypotheses.radius_admissible = admissible;
            report.hypotheses.gprime_positive = monotone;
            report.certified = report.hypotheses.all();
            Ok(Outcome {
                inputs: json!({
                    "kind": kind, "m": m, "b": b, "beta": beta,
                    "G": g_src, "R": r, "rel_tol": rel_tol,
                }),
                result: bound_result(kind, &report, json!({})),
                flags: envelope(&report.hypotheses),
                step: Some(model.step()),
                rel_tol: Some(rel_tol),
            })
        }
        "cone" => {
            let a = need_positive(cfg.a, "a")?;
            let (model, sol, r, rel_tol) =
                eigen_from_config(cfg, (m - 1).max(1) as f64)?;
            let mut report =
                tone_bound_cone(m, a, sol.lambda1()).map_err(|e| e.to_string())?;
            let (admissible, monotone) = model_flags(&model, r)?;
            report.hypotheses.radius_admissible = admissible;
            report.hypotheses.gprime_positive = monotone;
            report.certified = report.hypotheses.all();
            Ok(Outcome {
                inputs: json!({
                    "kind": kind, "m": m, "a": a,
                    "G": cfg.curvature.as_deref().unwrap(), "R": r, "rel_tol": rel_tol,
                }),
                result: bound_result(kind, &report, json!({})),
                flags: envelope(&report.hypotheses),
                step: Some(model.step()),
                rel_tol: Some(rel_tol),
            })
        }
        "sphere" => {
            let theta = need_positive(cfg.theta, "theta")?;
            let r = need_positive(cfg.r_ambient, "r")?;
            let report =
                tone_bound_sphere(m, r, theta, rel_tol).map_err(|e| e.to_string())?;
            let branch = if r < PI / 2.0 { "r < pi/2" } else { "r >= pi/2" };
            Ok(Outcome {
                inputs: json!({"kind": kind, "m": m, "theta": theta, "r": r, "rel_tol": rel_tol}),
                result: bound_result(kind, &report, json!({"branch": branch})),
                flags: envelope(&report.hypotheses),
                step: Some(theta / 40_000.0),
                rel_tol: Some(rel_tol),
            })
        }
        "general" => {
            let n = cfg.n.unwrap_or(1);
            let q = cfg.q.unwrap_or(1);
            let alpha = cfg.alpha.unwrap_or(f64::NEG_INFINITY);
            let beta = cfg.beta.unwrap_or(f64::INFINITY);
            let warping = match (&cfg.f, cfg.c1, cfg.c2) {
                (Some(_), Some(_), _) | (Some(_), _, Some(_)) => {
                    return Err("give either f or the summary pair c1/c2, not both".into())
                }
                (Some(src), None, None) => Warping::Expr(parse_expr(src, "f")?),
                (None, Some(c1), Some(c2)) => Warping::Summary { c1, c2 },
                (None, None, None) => Warping::ConstantOne,
                _ => return Err("summary warping needs both c1 and c2".into()),
            };
            if m <= n {
                return Err(format!("need m > n, got m = {m}, n = {n}"));
            }
            let (model, sol, r, rel_tol) = eigen_from_config(cfg, (m - n) as f64)?;
            let profile = model.curvature().clone();
            let mut scenario = WarpedScenario::new(
                m,
                n,
                q,
                warping,
                profile,
                r,
                (alpha, beta),
            )
            .map_err(|e| e.to_string())?;
            if let Some(w) = cfg.window {
                scenario = scenario.with_window(w).map_err(|e| e.to_string())?;
            }
            let report =
                tone_bound_general(&scenario, sol.lambda1()).map_err(|e| e.to_string())?;
            let mut inputs = json!({
                "kind": kind, "m": m, "n": n, "q": q,
                "G": cfg.curvature.as_deref().unwrap(), "R": r,
                "alpha": alpha, "beta": beta, "rel_tol": rel_tol,
            });
            let obj = inputs.as_object_mut().unwrap();
            match &scenario.warping {
                Warping::Expr(_) => {
                    obj.insert("f".into(), json!(cfg.f.as_deref().unwrap()));
                }
                Warping::Summary { c1, c2 } => {
                    obj.insert("c1".into(), json!(c1));
                    obj.insert("c2".into(), json!(c2));
                }
                Warping::ConstantOne => {
                    obj.insert("f".into(), json!("1"));
                }
            }
            Ok(Outcome {
                inputs,
                result: bound_result(kind, &report, json!({})),
                flags: envelope(&report.hypotheses),
                step: Some(model.step()),
                rel_tol: Some(rel_tol),
            })
        }
        other => Err(format!(
            "unknown bound kind {other:?}; expected one of general, cylinder, euclidean, pseudo_hyperbolic, hyperbolic, cone, sphere"
        )),
    }
}

fn run_spectrum(cfg: &RunConfig) -> Result<Outcome, String> {
    let kind = need(cfg.kind.as_deref(), "kind")?;
    let cut = cfg.cut_locus_ok.unwrap_or(true);
    match kind {
        "graph" => {
            let q = need(cfg.q, "q")?;
            let r = need_positive(cfg.r_ball, "R")?;
            let hz_src = need(cfg.hz.as_deref(), "Hz")?;
            let hz = parse_expr(hz_src, "Hz")?;
            let z_count = cfg.z_count.unwrap_or(20);
            if z_count == 0 {
                return Err("z_count must be at least 1".into());
            }
            let z = dyadic_z_seq(z_count as usize);
            let report = graph_discreteness(q, r, &hz, &z).map_err(|e| e.to_string())?;
            if let Some(path) = &cfg.csv_out {
                write_csv_file(path, |f| report.write_csv(f))?;
            }
            let decay_ok = report.decay_hypothesis_ok.unwrap_or(true);
            Ok(Outcome {
                inputs: json!({"kind": kind, "q": q, "R": r, "Hz": hz_src, "z_count": z_count}),
                result: serde_json::to_value(&report).unwrap(),
                flags: EnvelopeFlags {
                    radius_admissible: true,
                    // the decay hypothesis plays the warping condition's
                    // role for graphs: it is what makes the estimate apply
                    warping_ok: decay_ok,
                    gprime_positive: true,
                    cut_locus_ok: cut,
                },
                step: Some(2.0 * r / 40_000.0),
                rel_tol: Some(1e-12),
            })
        }
        "nonproper" => {
            let m = need(cfg.m, "m")?;
            let n = cfg.n.unwrap_or(1);
            let c1 = cfg.c1.unwrap_or(1.0);
            let c2 = cfg.c2.unwrap_or(0.0);
            let h_sup = cfg.h_sup.unwrap_or(0.0);
            let c_grad = cfg.c_grad.unwrap_or(1.0);
            let g_src = need(cfg.curvature.as_deref(), "G")?;
            let profile = CurvatureProfile::parse(g_src).map_err(|e| e.to_string())?;
            let j_max = cfg.j_max.unwrap_or(32);
            let report =
                nonproper_discreteness(m, n, c1, c2, h_sup, c_grad, &profile, j_max)
                    .map_err(|e| e.to_string())?;
            if let Some(path) = &cfg.csv_out {
                write_csv_file(path, |f| report.write_csv(f))?;
            }
            Ok(Outcome {
                inputs: json!({
                    "kind": kind, "m": m, "n": n, "c1": c1, "c2": c2,
                    "H_sup": h_sup, "C_grad": c_grad, "G": g_src, "j_max": j_max,
                }),
                result: serde_json::to_value(&report).unwrap(),
                flags: EnvelopeFlags {
                    radius_admissible: true,
                    warping_ok: true,
                    gprime_positive: true,
                    cut_locus_ok: cut,
                },
                step: Some(2.0 / j_max as f64 / 10_000.0),
                rel_tol: Some(1e-10),
            })
        }
        other => Err(format!(
            "unknown spectrum kind {other:?}; expected graph or nonproper"
        )),
    }
}

/// Runs a merged config to a finished report plus exit code.
pub fn execute(cfg: &RunConfig) -> Result<(String, i32), String> {
    let t0 = Instant::now();
    let command = need(cfg.command.as_deref(), "command")?.to_string();
    let outcome = match command.as_str() {
        "model" => run_model(cfg)?,
        "eig" => run_eig(cfg)?,
        "bound" => run_bound(cfg)?,
        "spectrum" => run_spectrum(cfg)?,
        other => {
            return Err(format!(
                "unknown command {other:?}; expected model, eig, bound, or spectrum"
            ))
        }
    };
    let certified = outcome.flags.radius_admissible
        && outcome.flags.warping_ok
        && outcome.flags.gprime_positive
        && outcome.flags.cut_locus_ok;
    let report = Report {
        command,
        inputs: outcome.inputs,
        result: outcome.result,
        hypotheses: outcome.flags,
        certified,
        diagnostics: Diagnostics {
            step: outcome.step,
            rel_tol: outcome.rel_tol,
            runtime_ms: t0.elapsed().as_millis() as u64,
        },
    };
    Ok((to_report_json(&report), if certified { 0 } else { 2 }))
}

/// Full command line entry point; returns the process exit code.
pub fn run_main() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let file_cfg = match &cli.config {
        Some(path) => match load_config(path) {
            Ok(c) => c,
            Err(msg) => {
                eprintln!("error: {msg}");
                return 1;
            }
        },
        None => RunConfig::default(),
    };
    let cli_cfg = match cli.command {
        Some(Command::Model(a)) => a.into_config("model"),
        Some(Command::Eig(a)) => a.into_config("eig"),
        Some(Command::Bound(a)) => a.into_config("bound"),
        Some(Command::Spectrum(a)) => a.into_config("spectrum"),
        None => RunConfig::default(),
    };
    let merged = merge(file_cfg, cli_cfg);
    match execute(&merged) {
        Ok((json, code)) => {
            println!("{json}");
            code
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            1
        }
    }
}
