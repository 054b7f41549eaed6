//! The `sesh` binary end to end: outputs, certificates and exit codes.

use std::path::Path;
use std::process::{Command, Output};

fn sesh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sesh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name).display().to_string()
}

fn compute(dir: &Path, name: &str, extra: &[&str]) -> (Output, String) {
    let path = dir.join(name).display().to_string();
    let mut args = vec!["p2", "compute", "--out", &path];
    args.extend_from_slice(extra);
    (sesh(&args), path)
}

fn without_toolchain(s: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
    v.as_object_mut().unwrap().remove("toolchain");
    v
}

#[test]
fn sqrt_two_point_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let (o, path) = compute(dir.path(), "c.json", &["--minpoly", "t^2-2", "--point", "th,1,0", "--gamma", "3/5"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("result: exact 1/2"));
    let cert: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(cert["result"]["kind"], "exact");
    assert_eq!(cert["result"]["value"], "1/2");
    assert_eq!(cert["witness"]["form"], "x2");
    assert_eq!(cert["degree_bound_d"], 5);
    assert_eq!(sesh(&["verify", &path]).status.code(), Some(0));
    assert_eq!(sesh(&["verify", "--deep", &path]).status.code(), Some(0));
}

#[test]
fn rational_point_interval() {
    let o = sesh(&["p2", "compute", "--point", "0,0,1", "--gamma", "9/10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("result: interval [9/10, 1], epsilon^2 <= 1"));
}

#[test]
fn input_errors_exit_two() {
    let o = sesh(&["p2", "compute", "--minpoly", "t^2-1", "--point", "th,1,0", "--gamma", "3/5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("reducible"));
    for args in [
        &["p2", "compute", "--point", "0,0,1", "--gamma", "1"][..],
        &["p2", "compute", "--minpoly", "t^2-2", "--point", "th,1,0", "--gamma", "3/4"],
        &["p2", "compute", "--point", "th,1,0", "--gamma", "1/2"],
        &["p2", "compute", "--point", "0,0,0", "--gamma", "1/2"],
        &["p2", "compute", "--point", "0,1", "--gamma", "1/2"],
        &["p2", "compute", "--point", "0,0,1", "--gamma", "x"],
        &["p2", "compute", "--minpoly", "t^4+1", "--point", "th,1,0", "--gamma", "1/3"],
        &["bounds", "--alpha", "2"],
        &["lattice", "--file", "/nonexistent.json", "chi", "--D", "1"],
        &["p2", "compute"],
    ] {
        assert_eq!(sesh(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_sesh"))
        .args(["bounds", "--alpha", "1", "--selfint", "1"])
        .env("SESH_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (_, path) = compute(dir.path(), "c.json", &["--minpoly", "t^2-2", "--point", "th,1,0", "--gamma", "3/5"]);
    let text = std::fs::read_to_string(&path).unwrap();
    let write = |name: &str, s: &str| {
        let p = dir.path().join(name);
        std::fs::write(&p, s).unwrap();
        p.display().to_string()
    };

    let tampered = [
        write("coef.json", &text.replace("\"form\": \"x2\"", "\"form\": \"x2+1/7*x0\"")),
        write("order.json", &text.replace("\"order\": 1", "\"order\": 2")),
        write("value.json", &text.replace("\"value\": \"1/2\"", "\"value\": \"1/3\"")),
        write("bound.json", &text.replace("\"degree_bound_d\": 5", "\"degree_bound_d\": 10")),
        write("alpha.json", &text.replace("\"alpha\": 2", "\"alpha\": 1")),
    ];
    for p in &tampered {
        let o = sesh(&["verify", p]);
        assert_eq!(o.status.code(), Some(4), "{p}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("verification failed"));
    }

    let malformed = [
        write("trunc.json", &text[..text.len() / 2]),
        write("schema.json", &text.replace("\"schema_version\": 1", "\"schema_version\": 2")),
        write("rat.json", &text.replace("\"gamma\": \"3/5\"", "\"gamma\": \"3/0\"")),
        write("extra.json", &text.replacen('{', "{\"surprise\": 1,", 1)),
        dir.path().join("missing.json").display().to_string(),
    ];
    for p in &malformed {
        assert_eq!(sesh(&["verify", p]).status.code(), Some(3), "{p}");
    }
}

#[test]
fn certificates_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--minpoly", "t^3-2", "--point", "th,1,0", "--gamma", "2/5"];
    let (_, a) = compute(dir.path(), "a.json", &args);
    let (_, b) = compute(dir.path(), "b.json", &args);
    let a = std::fs::read_to_string(a).unwrap();
    let b = std::fs::read_to_string(b).unwrap();
    assert_eq!(a, b);
    for threads in ["1", "3"] {
        let path = dir.path().join(format!("t{threads}.json"));
        let o = Command::new(env!("CARGO_BIN_EXE_sesh"))
            .args(["p2", "compute", "--out", &path.display().to_string()])
            .args(args)
            .env("SESH_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        assert_eq!(without_toolchain(&std::fs::read_to_string(path).unwrap()), without_toolchain(&a));
    }
}

#[test]
fn schema_example_verifies() {
    let p = Path::new(env!("CARGO_MANIFEST_DIR")).join("schema/example-sqrt2.json");
    assert_eq!(sesh(&["verify", "--deep", &p.display().to_string()]).status.code(), Some(0));
}

#[test]
fn bounds_reports() {
    assert_eq!(stdout(&sesh(&["bounds", "--alpha", "3", "--selfint", "1"])), "epsilon^2 <= 1/3\n");
    assert_eq!(stdout(&sesh(&["bounds", "--top", "8", "--degs", "2,2", "--dim", "3"])), "epsilon^3 <= 2\n");
}

#[test]
fn lattice_reports() {
    let o = sesh(&["lattice", "--file", &data("p2.json"), "seshadri", "--point", "0", "--L", "3", "--complete"]);
    assert_eq!(stdout(&o).lines().next(), Some("3"));
    assert!(stdout(&o).contains("status: exact"));
    let o = sesh(&["lattice", "--file", &data("abelian.json"), "seshadri", "--point", "0", "--L", "1"]);
    assert!(stdout(&o).starts_with("2\nstatus: upper bound"));
    assert!(stdout(&o).contains("epsilon^2 <= 2"));
    let o = sesh(&["lattice", "--file", &data("p2-two-points.json"), "seshadri", "--point", "0,1", "--L", "1"]);
    assert_eq!(stdout(&o).lines().next(), Some("1/2"));
    assert_eq!(stdout(&sesh(&["lattice", "--file", &data("p2.json"), "chi", "--D", "3"])), "10\n");
    assert_eq!(stdout(&sesh(&["lattice", "--file", &data("p2.json"), "nef", "--class", "1,-2"])), "not nef\n");
    let o = sesh(&["lattice", "--file", &data("abelian.json"), "scaling", "--point", "0", "--L", "1"]);
    assert!(o.status.success() && stdout(&o).matches("pass").count() == 4);
    let o = sesh(&[
        "lattice", "--file", &data("quadric.json"), "cover", "--y", &data("quadric-double-cover.json"), "--phi", "1,0;0,1",
        "--L", "1,1",
    ]);
    assert!(stdout(&o).contains("equality: yes"));
    let o = sesh(&["lattice", "--file", &data("p2.json"), "seshadri", "--point", "1", "--L", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn base_change_reports() {
    let o = sesh(&["base-change", "--minpoly", "t^2-2", "--point", "th,1,0", "--ext", "self", "--gamma", "3/5"]);
    assert_eq!(stdout(&o).lines().next(), Some("eps_Q = 1/2, eps_K in [9/10,1], inequality holds (strict)"));
    let o = sesh(&["base-change", "--point", "0,0,1", "--ext", "t^2+1", "--gamma", "9/10"]);
    assert!(stdout(&o).contains("equality holds") && stdout(&o).contains("tables identical: yes"));
    let o = sesh(&["base-change", "--minpoly", "t^2-2", "--point", "th,1,0", "--ext", "t^2-3", "--gamma", "3/5"]);
    assert_eq!(o.status.code(), Some(2));
}
