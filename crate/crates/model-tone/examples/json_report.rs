// The report pipeline without the binary: fill a RunConfig, execute,
// get the JSON envelope and an exit-code-style status back. Useful when
// embedding the tool in a larger harness.

use model_tone::cli::{execute, RunConfig};

fn main() {
    let mut cfg = RunConfig::default();
    cfg.command = Some("bound".into());
    cfg.kind = Some("cylinder".into());
    cfg.m = Some(4);
    cfg.curvature = Some("-1".into());
    cfg.r_ball = Some(1.5707963);

    let (report, status) = execute(&cfg).unwrap();
    println!("{report}");
    println!("status {status} (0 = certified, 2 = hypotheses failed)");

    // same scenario pushed past the admissible radius: the report
    // carries the numbers but flips certified off
    cfg.r_ball = Some(2.5);
    let (report, status) = execute(&cfg).unwrap();
    let doc: serde_json::Value = serde_json::from_str(&report).unwrap();
    println!(
        "R = 2.5: certified = {}, radius_admissible = {}, status {status}",
        doc["certified"], doc["hypotheses"]["radius_admissible"]
    );

    // input errors come back as messages, not reports
    cfg.r_ball = Some(-1.0);
    println!("R = -1: {:?}", execute(&cfg).unwrap_err());
}
