use std::fs;
use std::process::{Command, Output};

fn minkframe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_minkframe"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

const BUNDLE: [&str; 7] = [
    "summary.json",
    "resolved_spec.toml",
    "base.csv",
    "mate.csv",
    "tangent_indicatrix.csv",
    "principal_normal_indicatrix.csv",
    "binormal_indicatrix.csv",
];

const HELIX_SPEC: &str = "\
[curve]
generator = \"circular_helix\"
kappa = 1.0
tau = 2.0

[analysis]
lambda = 1.3333333333333333
";

#[test]
fn example_report_prints_the_worked_values() {
    let out = minkframe(&["example"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);

    for needle in [
        "source: example",
        "lambda: 1.333333333",
        "base: timelike kappa 1.000000000",
        "base.class: timelike_circular_helix",
        "mate: spacelike kappa 1.800000000",
        "couple: sinh 1.807392228 cosh 2.065591118",
        "indicatrix.tangent: on de_sitter",
        "indicatrix.binormal: on hyperbolic",
    ] {
        assert!(text.contains(needle), "missing {needle:?} in:\n{text}");
    }

    // only the principal normal image is a geodesic, and the spray agrees
    let normal_line = text
        .lines()
        .find(|l| l.starts_with("indicatrix.principal_normal.geodesic"))
        .expect("normal geodesic line");
    assert!(normal_line.matches("-> geodesic").count() == 2, "{normal_line}");
    assert_eq!(text.matches("-> not geodesic").count(), 4);
    assert_eq!(text.matches("integral true").count(), 1);
    assert_eq!(text.matches("integral false").count(), 2);

    let again = minkframe(&["example"]);
    assert_eq!(out.stdout, again.stdout, "report output is deterministic");
}

#[test]
fn example_emits_the_bundle_and_the_summary_holds_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("run");
    let out = minkframe(&["example", "--out", out_dir.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("wrote 7 files"), "{}", stderr(&out));
    for name in BUNDLE {
        assert!(out_dir.join(name).is_file(), "missing {name}");
    }

    let summary: serde_json::Value =
        serde_json::from_str(&fs::read_to_string(out_dir.join("summary.json")).unwrap()).unwrap();
    assert_eq!(summary["source"], "example");
    assert_eq!(summary["n_samples"], 50);
    let sinh = summary["couple"]["sinh_theta"].as_f64().unwrap();
    assert!((sinh - 7.0 / 15.0_f64.sqrt()).abs() < 1e-9);
    let kinds: Vec<_> = summary["indicatrices"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| {
            (
                b["kind"].as_str().unwrap().to_owned(),
                b["geodesic"]["is_geodesic"].as_bool().unwrap(),
                b["spray"]["is_integral"].as_bool().unwrap(),
            )
        })
        .collect();
    assert_eq!(
        kinds,
        [
            ("tangent".to_owned(), false, false),
            ("principal_normal".to_owned(), true, true),
            ("binormal".to_owned(), false, false),
        ]
    );
}

#[test]
fn emitted_bundles_are_byte_identical_across_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for d in [&a, &b] {
        let out = minkframe(&["example", "--out", d.to_str().unwrap()]);
        assert!(out.status.success(), "stderr: {}", stderr(&out));
    }
    for name in BUNDLE {
        let left = fs::read(a.join(name)).unwrap();
        let right = fs::read(b.join(name)).unwrap();
        assert_eq!(left, right, "{name} differs between reruns");
    }
}

#[test]
fn analyze_round_trips_through_the_resolved_spec() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("helix.toml");
    fs::write(&spec, HELIX_SPEC).unwrap();

    let first = dir.path().join("first");
    let out = minkframe(&["analyze", spec.to_str().unwrap(), "--out", first.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let report = stdout(&out);
    assert!(report.contains("source: circular_helix(kappa=1, tau=2)"), "{report}");

    let second = dir.path().join("second");
    let resolved = first.join("resolved_spec.toml");
    let rerun =
        minkframe(&["analyze", resolved.to_str().unwrap(), "--out", second.to_str().unwrap()]);
    assert!(rerun.status.success(), "stderr: {}", stderr(&rerun));

    assert_eq!(out.stdout, rerun.stdout, "resolved spec reproduces the report");
    assert_eq!(
        fs::read(first.join("summary.json")).unwrap(),
        fs::read(second.join("summary.json")).unwrap(),
        "resolved spec reproduces the summary"
    );
}

#[test]
fn tables_writes_only_the_sampled_curves() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("helix.toml");
    fs::write(&spec, HELIX_SPEC).unwrap();
    let out_dir = dir.path().join("tables");

    let out = minkframe(&[
        "tables",
        spec.to_str().unwrap(),
        "--out",
        out_dir.to_str().unwrap(),
        "--samples",
        "12",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).is_empty(), "tables prints no report");
    assert!(stderr(&out).contains("wrote 5 files"), "{}", stderr(&out));

    let mut names: Vec<_> = fs::read_dir(&out_dir)
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    names.sort();
    let mut expected: Vec<_> = BUNDLE[2..].iter().map(|s| s.to_string()).collect();
    expected.sort();
    assert_eq!(names, expected);

    let base = fs::read_to_string(out_dir.join("base.csv")).unwrap();
    assert!(base.starts_with("s,x1,x2,x3\n"));
    assert_eq!(base.lines().count(), 13, "header plus one row per sample");
    let lift = fs::read_to_string(out_dir.join("tangent_indicatrix.csv")).unwrap();
    assert!(lift.starts_with("s,x1,x2,x3,v1,v2,v3\n"));
}

fn expect_failure(args: &[&str], code: i32, needle: &str) {
    let out = minkframe(args);
    assert_eq!(out.status.code(), Some(code), "args {args:?}, stderr: {}", stderr(&out));
    let err = stderr(&out);
    assert!(err.contains(needle), "args {args:?}: missing {needle:?} in {err:?}");
}

#[test]
fn bad_input_exits_with_code_two() {
    expect_failure(&["analyze", "/no/such/spec.toml"], 2, "reading");

    let dir = tempfile::tempdir().unwrap();
    let write = |name: &str, body: &str| {
        let p = dir.path().join(name);
        fs::write(&p, body).unwrap();
        p
    };

    let garbled = write("garbled.toml", "[curve\ngenerator=");
    expect_failure(&["analyze", garbled.to_str().unwrap()], 2, "error:");

    let unknown = write(
        "unknown.toml",
        "[curve]\ngenerator = \"circular_helix\"\nkappa = 1.0\ntau = 2.0\nchirality = 1\n\n[analysis]\nlambda = 1.0\n",
    );
    expect_failure(&["analyze", unknown.to_str().unwrap()], 2, "unknown field");

    let slow = write(
        "slow.toml",
        "[curve]\ngenerator = \"circular_helix\"\nkappa = 2.0\ntau = 1.0\n\n[analysis]\nlambda = 1.0\n",
    );
    expect_failure(&["analyze", slow.to_str().unwrap()], 2, "|tau|");

    expect_failure(&["example", "--samples", "5"], 2, "at least 9");
    expect_failure(&["example", "--lambda", "inf"], 2, "finite");
}

#[test]
fn usage_errors_exit_with_code_two() {
    let out = minkframe(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("helix.toml");
    fs::write(&spec, HELIX_SPEC).unwrap();
    let out = minkframe(&["tables", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2), "tables requires --out");
}

#[test]
fn pipeline_failures_exit_with_code_three() {
    // offset lambda = 1/kappa collapses the mate onto the axis
    let out = minkframe(&["example", "--lambda", "0.3333333333333333"]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("couple"), "{}", stderr(&out));
}

#[test]
fn emit_failures_exit_with_code_one() {
    let dir = tempfile::tempdir().unwrap();
    let blocker = dir.path().join("blocker");
    fs::write(&blocker, "not a directory").unwrap();
    let spec = dir.path().join("helix.toml");
    fs::write(&spec, HELIX_SPEC).unwrap();

    let target = blocker.join("tables");
    let out = minkframe(&["tables", spec.to_str().unwrap(), "--out", target.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1), "stderr: {}", stderr(&out));
}

#[test]
fn overrides_reach_the_analysis() {
    let out = minkframe(&["example", "--samples", "11"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("n_samples: 11"), "{}", stdout(&out));
}

#[test]
fn table_spec_round_trips_and_reports_margins() {
    // sample the worked example densely, then analyze the samples alone
    let dir = tempfile::tempdir().unwrap();
    let rows: String = {
        let r3 = 3.0_f64.sqrt();
        let a = 2.0 * r3 / 3.0;
        let mut s = String::from("s,x1,x2,x3\n");
        for i in 0..=1400 {
            let t = -1.0 + 5.6 * i as f64 / 1400.0;
            s.push_str(&format!(
                "{:.16e},{:.16e},{:.16e},{:.16e}\n",
                t,
                a * t,
                (r3 * t).cos() / 3.0,
                (r3 * t).sin() / 3.0
            ));
        }
        s
    };
    let spec = dir.path().join("table.toml");
    fs::write(
        &spec,
        format!(
            "[curve]\ngenerator = \"table\"\nsamples = '''\n{rows}'''\n\n[analysis]\nlambda = 1.3333333333333333\nwindow = [0.0, 3.6]\nn_samples = 24\n",
        ),
    )
    .unwrap();

    let out = minkframe(&["analyze", spec.to_str().unwrap()]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("source: table(1401 rows)"), "{text}");
    assert!(text.contains("base: timelike kappa 1.000000"), "{text}");

    // a window flush with the samples leaves no room for the stencils
    let tight = dir.path().join("tight.toml");
    fs::write(
        &tight,
        format!(
            "[curve]\ngenerator = \"table\"\nsamples = '''\n{rows}'''\n\n[analysis]\nlambda = 1.3333333333333333\nwindow = [-1.0, 4.6]\n",
        ),
    )
    .unwrap();
    let out = minkframe(&["analyze", tight.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "stderr: {}", stderr(&out));
    assert!(stderr(&out).contains("margin"), "{}", stderr(&out));
}
