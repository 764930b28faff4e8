//! End-to-end tests of the `logstrain` binary: exit codes, diagnostics,
//! output determinism, and the CSV contract.

use std::path::Path;
use std::process::{Command, Output};

use logstrain_cli::{NumberFormat, Table};

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_logstrain"))
}

fn run(args: &[&str]) -> Output {
    binary().args(args).output().expect("binary runs")
}

fn write_request(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

const SHEAR_AND_STRETCH: &str = r#"{
  "family": "hencky",
  "entries": [
    {"id": "rest",    "F": [[1,0,0],[0,1,0],[0,0,1]]},
    {"id": "shear",   "F": [[1,1,0],[0,1,0],[0,0,1]]},
    {"id": "uniaxial","F": [[2,0,0],[0,0.7071067811865476,0],[0,0,0.7071067811865476]]}
  ]
}"#;

#[test]
fn strain_fixture_rows() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    let out = run(&["strain", "--input", &input]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));

    let text = String::from_utf8(out.stdout).unwrap();
    let table = Table::parse(&text).unwrap();
    assert_eq!(table.header[0], "id");
    assert_eq!(table.rows.len(), 3);

    let zeta_col = table.header.iter().position(|h| h == "zeta").unwrap();
    let class_col = table.header.iter().position(|h| h == "class").unwrap();
    let v_col = table.header.iter().position(|h| h == "v").unwrap();

    // identity: v = 1, no zeta, pure dilatation
    assert_eq!(table.rows[0][v_col], logstrain_cli::Cell::Num(1.0));
    assert_eq!(table.rows[0][zeta_col], logstrain_cli::Cell::Empty);
    assert_eq!(
        table.rows[0][class_col],
        logstrain_cli::Cell::Text("PureDilatation".into())
    );

    // simple shear: zeta below 1e-9
    match table.rows[1][zeta_col] {
        logstrain_cli::Cell::Num(zeta) => assert!(zeta.abs() <= 1e-9, "zeta = {zeta}"),
        ref other => panic!("unexpected zeta cell {other:?}"),
    }
    assert_eq!(
        table.rows[1][class_col],
        logstrain_cli::Cell::Text("SimpleShearLike".into())
    );

    // volume-preserving uniaxial stretch: zeta at 1/6
    match table.rows[2][zeta_col] {
        logstrain_cli::Cell::Num(zeta) => {
            assert!((zeta - 1.0 / 6.0).abs() <= 1e-9, "zeta = {zeta}")
        }
        ref other => panic!("unexpected zeta cell {other:?}"),
    }
    assert_eq!(
        table.rows[2][class_col],
        logstrain_cli::Cell::Text("UniaxialLike".into())
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    let first = run(&["strain", "--input", &input, "--family", "almansi"]);
    let second = run(&["strain", "--input", &input, "--family", "almansi"]);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn parallel_flag_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let entries: Vec<String> = (0..25)
        .map(|i| {
            format!(
                r#"{{"id": "n{i}", "F": [[{},0.1,0],[0.05,1,0.2],[0,0.1,1.1]]}}"#,
                1.0 + i as f64 * 0.05
            )
        })
        .collect();
    let text = format!(
        r#"{{"family": "bazant", "energy": {{"lambda": 1, "mu": 1}}, "entries": [{}]}}"#,
        entries.join(",")
    );
    let input = write_request(dir.path(), "req.json", &text);
    let serial = run(&["stress", "--input", &input]);
    let parallel = run(&["stress", "--input", &input, "--parallel"]);
    assert!(serial.status.success());
    assert_eq!(serial.stdout, parallel.stdout);
}

#[test]
fn malformed_json_exits_2_with_position() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "bad.json", "{\"entries\": [,]}");
    let out = run(&["strain", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line"), "{stderr}");
}

#[test]
fn non_positive_determinant_exits_2_naming_the_entry() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(
        dir.path(),
        "bad.json",
        r#"{"entries": [{"id": "flat", "F": [[1,0,0],[0,1,0],[0,0,0]]}]}"#,
    );
    let out = run(&["strain", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("flat"), "{stderr}");
}

#[test]
fn row_level_failure_exits_3_and_keeps_good_rows() {
    let dir = tempfile::tempdir().unwrap();
    // the mirrored chart flips the recovered Cartesian gradient's sign
    let input = write_request(
        dir.path(),
        "rows.json",
        r#"{"entries": [
            {"id": "fine", "F": [[2,0,0],[0,1,0],[0,0,1]]},
            {"id": "mirror", "F": [[1,0,0],[0,1,0],[0,0,1]],
             "chart": {"J": [[-1,0,0],[0,1,0],[0,0,1]], "J_hat": [[1,0,0],[0,1,0],[0,0,1]]}}
        ]}"#,
    );
    let out = run(&["strain", "--input", &input]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].starts_with("fine,2"));
    assert!(lines[2].starts_with("mirror,") && lines[2].contains("orientation"));
}

#[test]
fn unknown_family_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    let out = run(&["strain", "--input", &input, "--family", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn stress_without_energy_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    let out = run(&["stress", "--input", &input]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8(out.stderr).unwrap().contains("energy"));
}

#[test]
fn stress_fixture_values() {
    let dir = tempfile::tempdir().unwrap();
    // W = k (lambda = 0, mu = 1), F = diag(e,1,1): tau = diag(2,0,0)
    let input = write_request(
        dir.path(),
        "stress.json",
        r#"{
            "energy": {"lambda": 0, "mu": 1},
            "entries": [
                {"id": "log-stretch", "F": [[2.718281828459045,0,0],[0,1,0],[0,0,1]]},
                {"id": "scaled-chart", "F": [[2.718281828459045,0,0],[0,1,0],[0,0,1]],
                 "chart": {"J": [[2,0,0],[0,2,0],[0,0,2]], "J_hat": [[2,0,0],[0,2,0],[0,0,2]]},
                 "variance": "beta"},
                {"id": "spin", "F": [[0,-1,0],[1,0,0],[0,0,1]]}
            ]
        }"#,
    );
    let out = run(&["stress", "--input", &input]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8(out.stdout).unwrap();
    let table = Table::parse(&text).unwrap();

    let col = |name: &str| table.header.iter().position(|h| h == name).unwrap();
    let num = |row: usize, name: &str| -> f64 {
        match table.rows[row][col(name)] {
            logstrain_cli::Cell::Num(x) => x,
            ref other => panic!("{name}: unexpected cell {other:?}"),
        }
    };

    assert!((num(0, "tau11") - 2.0).abs() <= 1e-12);
    assert!(num(0, "tau22").abs() <= 1e-12);
    assert!((num(0, "sigma11") - 2.0 / std::f64::consts::E).abs() <= 1e-12);
    assert!((num(0, "mean") - 2.0 / (3.0 * std::f64::consts::E)).abs() <= 1e-12);

    // scalar chart with matching J and J_hat leaves F0 = F, and the beta
    // transform cancels the scalar factors: st == sigma
    assert!((num(1, "st11") - num(1, "sigma11")).abs() <= 1e-12);
    assert!((num(1, "st22") - num(1, "sigma22")).abs() <= 1e-12);

    // a pure rotation row carries no stress at all
    for column in ["tau11", "tau12", "sigma11", "sigma33", "mean"] {
        assert!(num(2, column).abs() <= 1e-12, "{column}");
    }
    assert_eq!(
        table.rows[2][col("class")],
        logstrain_cli::Cell::Text("PureDilatation".into())
    );
}

#[test]
fn curve_defaults_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("curve.csv");
    let out = run(&[
        "curve",
        "--family",
        "almansi",
        "--samples",
        "12",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("x,f_tilde\n"));
    assert_eq!(text.lines().count(), 13);
}

#[test]
fn curve_unknown_family_exits_2() {
    let out = run(&["curve", "--family", "unknown"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn curve_seth_hill_exponent_flag() {
    let out = run(&["curve", "--family", "seth-hill:0.5", "--range", "0:1", "--samples", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    // m = 1/2 gives f_tilde(x) = e^x - 1, so f_tilde(1) = e - 1
    let last = text.lines().last().unwrap();
    let value: f64 = last.split(',').nth(1).unwrap().parse().unwrap();
    assert!((value - (std::f64::consts::E - 1.0)).abs() < 1e-12);
}

#[test]
fn check_command_passes_and_reproduces() {
    let first = run(&["check", "--seed", "42", "--trials", "20"]);
    assert!(first.status.success(), "{}", String::from_utf8_lossy(&first.stdout));
    let second = run(&["check", "--seed", "42", "--trials", "20"]);
    assert_eq!(first.stdout, second.stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    assert!(text.contains("PASS superposition"));
    assert!(text.lines().last().unwrap().starts_with("result: PASS"));
}

#[test]
fn check_rejects_zero_trials() {
    let out = run(&["check", "--trials", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn digits_flag_fixes_the_precision() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    let out = run(&["strain", "--input", &input, "--digits", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let second = text.lines().nth(1).unwrap();
    assert!(second.contains("1.000"), "{second}");
}

#[test]
fn csv_round_trip_is_bit_identical_in_both_modes() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_request(dir.path(), "req.json", SHEAR_AND_STRETCH);
    for digits in [None, Some("9")] {
        let mut args = vec!["strain", "--input", input.as_str(), "--family", "green"];
        if let Some(d) = digits {
            args.extend(["--digits", d]);
        }
        let out = run(&args);
        let first = String::from_utf8(out.stdout).unwrap();
        let format = match digits {
            None => NumberFormat::Shortest,
            Some(d) => NumberFormat::Fixed(d.parse().unwrap()),
        };
        let second = Table::parse(&first).unwrap().render(format);
        assert_eq!(first, second, "digits = {digits:?}");
    }
}

#[test]
fn frame_flag_switches_to_lagrangian() {
    let dir = tempfile::tempdir().unwrap();
    // F = V R with a quarter turn: Eulerian and Lagrangian strains differ
    let input = write_request(
        dir.path(),
        "frames.json",
        r#"{"entries": [{"id": "vr", "F": [[0,-2,0],[1.5,0,0],[0,0,1]]}]}"#,
    );
    let eulerian = run(&["strain", "--input", &input, "--frame", "eulerian"]);
    let lagrangian = run(&["strain", "--input", &input, "--frame", "lagrangian"]);
    assert!(eulerian.status.success() && lagrangian.status.success());
    assert_ne!(eulerian.stdout, lagrangian.stdout);

    let text_e = String::from_utf8(eulerian.stdout).unwrap();
    let text_l = String::from_utf8(lagrangian.stdout).unwrap();
    let e11 = |text: &str| -> f64 {
        text.lines().nth(1).unwrap().split(',').nth(8).unwrap().parse().unwrap()
    };
    // V = diag(2, 1.5, 1), U = diag(1.5, 2, 1): the axes swap
    assert!((e11(&text_e) - 2.0_f64.ln()).abs() < 1e-12);
    assert!((e11(&text_l) - 1.5_f64.ln()).abs() < 1e-12);
}
