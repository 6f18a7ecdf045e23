use std::path::Path;
use std::process::{Command, Output};

fn curvedcomb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_curvedcomb"))
        .args(args)
        .env("CURVEDCOMB_NO_COLOR", "1")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Value printed on the `C` line of `capacitance`.
fn printed_capacitance(o: &Output) -> f64 {
    let text = stdout(o);
    let line = text.lines().find(|l| l.starts_with("C ")).expect("C line");
    line.split_whitespace().nth(1).unwrap().parse().unwrap()
}

fn write_config(dir: &Path, json: &str) -> String {
    let path = dir.join("run.json");
    std::fs::write(&path, json).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn convex_capacitance() {
    let o = curvedcomb(&[
        "capacitance",
        "--kind",
        "convex",
        "--r-um",
        "100",
        "--phi",
        "0.2",
        "--h-um",
        "2",
        "--gap-um",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let c = printed_capacitance(&o);
    assert!(((c - 1.642107826060091e-16) / c).abs() < 1e-12, "{c}");
}

#[test]
fn flat_capacitance() {
    let o = curvedcomb(&[
        "capacitance",
        "--kind",
        "flat",
        "--b-um",
        "20",
        "--h-um",
        "2",
        "--gap-um",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!((printed_capacitance(&o) / 1.7708e-16 - 1.0).abs() < 1e-14);
}

#[test]
fn verified_capacitance() {
    let o = curvedcomb(&["capacitance", "--kind", "concave", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS"));
}

#[test]
fn concave_contact_is_a_domain_error() {
    // sagitta of R = 100 µm, φ = 0.2 is about 0.5 µm
    let o = curvedcomb(&["capacitance", "--kind", "concave", "--gap-um", "0.4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("edge contact"), "{}", stderr(&o));
}

#[test]
fn usage_errors_exit_1() {
    assert_eq!(curvedcomb(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(curvedcomb(&["capacitance"]).status.code(), Some(1));
    assert_eq!(
        curvedcomb(&["capacitance", "--kind", "convex", "--gap-um", "two"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(curvedcomb(&["--help"]).status.code(), Some(0));
}

#[test]
fn help_states_units() {
    let o = curvedcomb(&["--help"]);
    assert!(stdout(&o).contains("1 µm = 1e-6 m"));
}

#[test]
fn validate_default_passes() {
    let o = curvedcomb(&["validate"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS").count(), 4);
}

#[test]
fn validate_json_summary() {
    let o = curvedcomb(&["validate", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let quad = &v["suites"][0];
    assert_eq!(quad["name"], "quadrature");
    assert!(quad["max_rel_error"].as_f64().unwrap() < 1e-9);
}

#[test]
fn validate_detects_injected_fault() {
    let o = curvedcomb(&["validate", "--inject-fault"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn validate_rejects_contact_geometry_before_running() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"gap_um": 0.4}"#);
    let o = curvedcomb(&["validate", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(stderr(&o).contains("edge contact"));
}

#[test]
fn gain_curve_csv_columns_and_planar_slope() {
    let o = curvedcomb(&[
        "gain-curve",
        "--variants",
        "planar,biconvex",
        "--accel-min-g",
        "-5",
        "--accel-max-g",
        "5",
        "--accel-points",
        "11",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("variant,accel_g,displacement_m,c1_f,c2_f,gain,v_out_v")
    );
    let planar: Vec<(f64, f64)> = lines
        .filter(|l| l.starts_with("planar,"))
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[1].parse().unwrap(), f[6].parse().unwrap())
        })
        .collect();
    assert_eq!(planar.len(), 11);
    let expected = 2.6e-10 * 9.80665 / 2e-6;
    for (a, v) in planar {
        if a != 0.0 {
            assert!((v / a / expected - 1.0).abs() < 1e-12);
        } else {
            assert_eq!(v, 0.0);
        }
    }
}

#[test]
fn sweep_verify_adds_fd_column() {
    let o = curvedcomb(&[
        "sensitivity-sweep",
        "--verify",
        "--variants",
        "biconvex,plano-concave",
        "--arc-points",
        "5",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let text = stdout(&o);
    assert_eq!(
        text.lines().next(),
        Some("variant,arc_length_m,radius_m,phi_rad,s_mv_per_g,s_net_mv_per_g,fd_s_mv_per_g")
    );
    for line in text.lines().skip(1) {
        let f: Vec<f64> = line
            .split(',')
            .skip(1)
            .map(|x| x.parse().unwrap())
            .collect();
        assert!((f[3] / f[5] - 1.0).abs() < 1e-6);
        assert!((f[4] / f[3] - 21.0).abs() < 1e-12);
    }
}

#[test]
fn skipped_points_are_reported() {
    let o = curvedcomb(&["sensitivity-sweep", "--variants", "biconcave"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stderr(&o).contains("skipped biconcave"));
    let rows = stdout(&o).lines().count() - 1;
    assert!(rows > 0 && rows < 20);
}

#[test]
fn plan_closing_the_gap_is_rejected() {
    let o = curvedcomb(&[
        "gain-curve",
        "--accel-min-g",
        "-1000",
        "--accel-max-g",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("closing"));
}

#[test]
fn flags_override_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"gap_um": 4, "geometry": {"h_um": 3}}"#);
    let flat = |extra: &[&str]| {
        let mut args = vec![
            "capacitance",
            "--kind",
            "flat",
            "--b-um",
            "10",
            "--config",
            &cfg,
        ];
        args.extend_from_slice(extra);
        printed_capacitance(&curvedcomb(&args))
    };
    let eps = 8.854e-12;
    assert!((flat(&[]) / (eps * 3e-6 * 10e-6 / 4e-6) - 1.0).abs() < 1e-14);
    assert!((flat(&["--gap-um", "2"]) / (eps * 3e-6 * 10e-6 / 2e-6) - 1.0).abs() < 1e-14);
}

#[test]
fn config_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write_config(dir.path(), r#"{"mech": {"mass": 1e-9}}"#);
    let o = curvedcomb(&["compare", "--config", &cfg]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("mech"), "{}", stderr(&o));
    assert!(stderr(&o).contains("mass"), "{}", stderr(&o));
}

#[test]
fn print_config_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let o = curvedcomb(&["print-config"]);
    let cfg = write_config(dir.path(), &stdout(&o));
    assert_eq!(
        curvedcomb(&["validate", "--config", &cfg]).status.code(),
        Some(0)
    );
}

#[test]
fn shipped_template_parses() {
    let template = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/default.json");
    let o = curvedcomb(&["compare", "--config", template]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
}

#[test]
fn files_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("s.csv");
    let svg = dir.path().join("s.svg");
    let o = curvedcomb(&[
        "sensitivity-sweep",
        "--out",
        csv.to_str().unwrap(),
        "--svg",
        svg.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let bytes = std::fs::read(&csv).unwrap();
    assert!(!bytes.contains(&b'\r'));
    let svg = std::fs::read_to_string(&svg).unwrap();
    assert!(svg.contains(r#"width="800" height="600""#));
    for name in ["planar", "biconvex", "plano-concave"] {
        assert!(svg.contains(&format!(">{name}</text>")));
    }
}

#[test]
fn compare_ranks_every_variant() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let o = curvedcomb(&["compare", "--out", csv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let table = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(
        table.lines().next(),
        Some("rank,variant,s_mv_per_g,s_net_mv_per_g,lsq_slope_mv_per_g")
    );
    assert_eq!(table.lines().count(), 8);
    let s: Vec<f64> = table
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(2).unwrap().parse().unwrap())
        .collect();
    assert!(s.windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn optimize_reports_each_variant() {
    let o = curvedcomb(&["optimize", "--variants", "biconvex,plano-convex"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("biconvex") && text.contains("plano-convex"));
    assert!(text.contains("lower"));
}

#[test]
fn no_color_env_disables_escapes() {
    let o = curvedcomb(&["validate"]);
    assert!(!o.stdout.contains(&0x1b));
}
