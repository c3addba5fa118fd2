//! End-to-end checks of the binary: values, formats, determinism, exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logharm"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn csv_value(output: &str, row: usize, col: usize) -> f64 {
    output
        .lines()
        .nth(row)
        .unwrap()
        .split(',')
        .nth(col)
        .unwrap()
        .parse()
        .unwrap()
}

#[test]
fn radius_r1_matches_table_anchor() {
    let out = stdout(&["radius", "--which", "r1", "--alpha", "0", "--k", "1"]);
    let value = csv_value(&out, 1, 3);
    assert!((value - 0.0758).abs() < 5e-4, "{value}");
}

#[test]
fn radius_starlike_closed_form() {
    let out = stdout(&["radius", "--which", "starlike", "--alpha", "0", "--k", "1"]);
    let value = csv_value(&out, 1, 3);
    assert!((value - 0.1715728753).abs() < 1e-9, "{value}");
}

#[test]
fn radius_r6_anchor() {
    let out = stdout(&["radius", "--which", "r6", "--alpha", "0.8", "--k", "4"]);
    let value = csv_value(&out, 1, 3);
    assert!((value - 0.3371).abs() < 5e-4, "{value}");
}

#[test]
fn table_r5_reproduces_published_grid() {
    let published: [[f64; 6]; 6] = [
        [0.0592, 0.1779, 0.2539, 0.3020, 0.3756, 0.4094], // k=10 cell corrected (printed 0.4049 transposes it)
        [0.0667, 0.1891, 0.2644, 0.3113, 0.3823, 0.4144],
        [0.0754, 0.2010, 0.2754, 0.3210, 0.3890, 0.4195],
        [0.0853, 0.2138, 0.2870, 0.3311, 0.3959, 0.4247],
        [0.0969, 0.2276, 0.2991, 0.3414, 0.4029, 0.4299],
        [0.1097, 0.2416, 0.3111, 0.3516, 0.4097, 0.4350],
    ];
    let out = stdout(&["table", "--which", "r5"]);
    assert_eq!(out.lines().next().unwrap(), "alpha,k=1,k=2,k=3,k=4,k=7,k=10");
    for (row, want_row) in published.iter().enumerate() {
        for (col, want) in want_row.iter().enumerate() {
            let got = csv_value(&out, row + 1, col + 1);
            assert!((got - want).abs() <= 5e-4, "row {row} col {col}: {got} vs {want}");
        }
    }
}

#[test]
fn table_single_cell() {
    let out = stdout(&["table", "--which", "r1", "--alphas", "0", "--ks", "1"]);
    assert_eq!(out.lines().count(), 2);
    assert!((csv_value(&out, 1, 1) - 0.0758).abs() <= 5e-4);
}

#[test]
fn table_output_is_byte_stable() {
    let a = stdout(&["table", "--which", "r3"]);
    let b = stdout(&["table", "--which", "r3"]);
    assert_eq!(a, b);
    assert!(!a.contains('\r'), "LF line endings only");
}

#[test]
fn bounds_dist_f() {
    let out = stdout(&["bounds", "--q", "dist-f", "--alpha", "0", "--k", "1"]);
    assert!((csv_value(&out, 1, 4) - 0.1353352832).abs() < 1e-9);
    assert!((csv_value(&out, 1, 5) - 1.0).abs() < 1e-12);
}

#[test]
fn bounds_abs_f_upper() {
    let out = stdout(&["bounds", "--q", "abs-f", "--alpha", "0", "--k", "1", "--r", "0.5"]);
    assert!((csv_value(&out, 1, 5) - 27.2990750166).abs() < 1e-6);
}

#[test]
fn bounds_rejects_radius_outside_open_interval() {
    assert_eq!(exit_code(&["bounds", "--q", "fz", "--alpha", "0", "--k", "1", "--r", "0"]), 2);
    assert_eq!(exit_code(&["bounds", "--q", "fz", "--alpha", "0", "--k", "1", "--r", "1"]), 2);
}

#[test]
fn grid_identity_copies_coordinates() {
    let out = stdout(&["grid", "--map", "identity", "--nr", "3", "--ntheta", "8", "--rmax", "0.9"]);
    for line in out.lines().skip(1) {
        let fields: Vec<f64> = line.split(',').map(|v| v.parse().unwrap()).collect();
        assert!((fields[2] - fields[4]).abs() < 1e-15);
        assert!((fields[3] - fields[5]).abs() < 1e-15);
    }
}

#[test]
fn grid_koebe_two_fold_symmetry() {
    // rows at theta and theta+pi map to negated (u, v)
    let out = stdout(&[
        "grid", "--map", "koebe", "--alpha", "0.5", "--k", "2", "--nr", "4", "--ntheta", "8",
        "--rmax", "0.95",
    ]);
    let rows: Vec<Vec<f64>> = out
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|v| v.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 32);
    for ring in 0..4 {
        for j in 0..4 {
            let a = &rows[ring * 8 + j];
            let b = &rows[ring * 8 + j + 4];
            let scale = a[4].abs().max(a[5].abs()).max(1.0);
            assert!((a[4] + b[4]).abs() < 1e-9 * scale, "u not negated at ring {ring} j {j}");
            assert!((a[5] + b[5]).abs() < 1e-9 * scale, "v not negated at ring {ring} j {j}");
        }
    }
}

#[test]
fn grid_f4_finite_inside_disk() {
    let out = stdout(&["grid", "--map", "f4", "--k", "2", "--nr", "5", "--ntheta", "12", "--rmax", "0.9"]);
    assert!(!out.contains("# dropped"), "no rows dropped");
    assert_eq!(out.lines().count(), 61);
    for line in out.lines().skip(1) {
        for v in line.split(',') {
            assert!(v.parse::<f64>().unwrap().is_finite());
        }
    }
}

#[test]
fn verify_coeffs_passes() {
    let out = run(&["verify", "--suite", "coeffs"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS coeffs/koebe-coefficients-equal-bounds"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_bohr_with_sampling_disabled() {
    let out = run(&["verify", "--suite", "bohr", "--samples", "0"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("table-reproduction"));
}

#[test]
fn verify_reports_are_deterministic() {
    let a = stdout(&["verify", "--suite", "all", "--seed", "42", "--samples", "60"]);
    let b = stdout(&["verify", "--suite", "all", "--seed", "42", "--samples", "60"]);
    assert_eq!(a, b, "same flags and seed must give byte-identical reports");
}

#[test]
fn json_envelope_shape() {
    let out = stdout(&["radius", "--which", "r2", "--alpha", "0", "--k", "1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v.get("inputs").is_some());
    assert!(v.get("results").is_some());
    assert_eq!(v["meta"]["version"], env!("CARGO_PKG_VERSION"));
    let value = v["results"]["value"].as_f64().unwrap();
    assert!((value - 0.0729).abs() < 5e-4);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join("logharm-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let _ = std::fs::remove_file(&path);
    let out = run(&["table", "--which", "r4", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    assert!(contents.starts_with("alpha,k=1"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(exit_code(&["radius", "--which", "r1", "--alpha", "1.0", "--k", "1"]), 2);
    assert_eq!(exit_code(&["radius", "--which", "nope", "--alpha", "0", "--k", "1"]), 2);
    assert_eq!(exit_code(&["frobnicate"]), 2);
    assert_eq!(exit_code(&["verify", "--suite", "nope"]), 2);
    assert_eq!(exit_code(&["grid", "--map", "koebe", "--rmax", "1.5"]), 2);
}

#[test]
fn solver_failure_exits_one() {
    // starlike-example degenerates at k = 1: no root inside (0, 1)
    assert_eq!(
        exit_code(&["radius", "--which", "starlike-example", "--alpha", "0", "--k", "1"]),
        1
    );
}

#[test]
fn table_renders_err_cells_and_exits_one() {
    // starlike-example has no root inside (0, 1) at k = 1
    let out = run(&["table", "--which", "starlike-example", "--alphas", "0", "--ks", "1,2"]);
    assert_eq!(out.status.code().unwrap(), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    let row = text.lines().nth(1).unwrap();
    assert!(row.contains("ERR"), "{row}");
    assert!((row.split(',').nth(2).unwrap().parse::<f64>().unwrap() - 0.5774).abs() < 5e-4);
}

#[test]
fn table_rejects_zero_fold() {
    assert_eq!(exit_code(&["table", "--which", "r1", "--ks", "0,1"]), 2);
    assert_eq!(exit_code(&["table", "--which", "r1", "--alphas", "1.0"]), 2);
}

#[test]
fn schwarzian_koebe_json() {
    let out = stdout(&[
        "schwarzian", "--map", "koebe", "--alpha", "0", "--k", "1", "--z-re", "0.2",
        "--format", "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["results"]["pre_schwarzian"][0].as_f64().unwrap().is_finite());
    assert!(v["results"]["schwarzian"][0].as_f64().unwrap().is_finite());
}

#[test]
fn area_direct_inside_bounds_via_cli() {
    let out = stdout(&["area", "--alpha", "0", "--k", "1", "--r", "0.3", "--direct"]);
    let lower_raw = csv_value(&out, 1, 3);
    let upper = csv_value(&out, 1, 5);
    let direct = csv_value(&out, 1, 6);
    assert!(lower_raw <= direct && direct <= upper, "{lower_raw} {direct} {upper}");
}
