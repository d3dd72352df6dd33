use psbetti::harness::{
    boundary_points, cmd_verify, parse_checks, parse_ideal_spec, render_report, Format, Status,
    SweepConfig,
};
use psbetti::Error;

fn grid(l: (u32, u32), k: (u32, u32), checks: &str) -> SweepConfig {
    SweepConfig {
        l_range: l,
        k_range: k,
        checks: parse_checks(checks).unwrap(),
        timings: false,
        ..Default::default()
    }
}

#[test]
fn full_sweep_on_a_small_grid() {
    let report = cmd_verify(&grid((1, 2), (1, 2), "all")).unwrap();
    assert_eq!(report.points.len(), 4);
    assert!(report.passed, "{:?}", report.failures());
    assert!(report
        .points
        .iter()
        .all(|p| p.records.iter().all(|r| r.status == Status::Pass)));
}

#[test]
fn known_deviation_does_not_fail_the_sweep() {
    let report = cmd_verify(&grid((1, 1), (3, 3), "syzygies")).unwrap();
    assert!(report.passed);
    let r = report.points[0]
        .records
        .iter()
        .find(|r| r.check == "conclusion.hf_sum_formula")
        .unwrap();
    assert_eq!(
        (r.status, r.value.as_str(), r.expected.as_str()),
        (Status::Deviation, "0", "-1")
    );
}

#[test]
fn identical_configs_give_identical_reports() {
    let mut cfg = grid((1, 2), (1, 1), "hilbert,betti,fatpoints,surface");
    cfg.format = Format::Csv;
    let a = render_report(&cmd_verify(&cfg).unwrap()).unwrap();
    let b = render_report(&cmd_verify(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
    cfg.format = Format::Json;
    let a = render_report(&cmd_verify(&cfg).unwrap()).unwrap();
    let b = render_report(&cmd_verify(&cfg).unwrap()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn config_files() {
    let cfg =
        SweepConfig::from_json(r#"{"l_range": [1, 2], "checks": ["hilbert"], "boundary": true}"#)
            .unwrap();
    assert_eq!(cfg.k_range, (1, 3));
    // (1,1), (1,2) and (2,3) are already in the grid.
    assert_eq!(cfg.points().len(), 6 + boundary_points(5).len() - 3);
    assert!(SweepConfig::from_json(r#"{"grid": 3}"#).is_err());
}

#[test]
fn invalid_sweeps() {
    assert!(matches!(
        cmd_verify(&grid((0, 1), (1, 1), "all")),
        Err(Error::InvalidParams(_))
    ));
    let mut four = grid((1, 1), (1, 1), "betti");
    four.n = 4;
    assert!(cmd_verify(&four).is_err());
    four.checks = parse_checks("conjecture").unwrap();
    let report = cmd_verify(&four).unwrap();
    assert!(report.points[0].exploratory);
    assert!(report.points[0]
        .records
        .iter()
        .all(|r| r.status == Status::Info));
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn ideal_specs() {
    let i = parse_ideal_spec(
        r#"[{"form": [1, 1, 0], "power": 2}, {"monomial": [0, 3, 0]}, "z^2 - x*y"]"#,
    )
    .unwrap();
    assert_eq!(i.degrees(), [2, 3, 2]);
    let two = parse_ideal_spec(r#"{"nvars": 2, "generators": ["x^2", "y^2"]}"#).unwrap();
    assert_eq!(two.hilbert_function(1), 2);
    assert!(parse_ideal_spec(r#"["x^2 + y"]"#).is_err());
    assert!(parse_ideal_spec(r#"{"nvars": 2, "generators": [{"monomial": [1, 1, 1]}]}"#).is_err());
}
