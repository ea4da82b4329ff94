use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use axial_core::matsuo::{build_matsuo, catalog_load};
use axial_core::{AxialAlgebra, PrimeField, Ring};
use serde_json::Value;
use tempfile::TempDir;

fn axialctl(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_axialctl"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn report(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}); stderr: {}",
            String::from_utf8_lossy(&out.stderr)
        )
    });
    v["report"].clone()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

/// Builds a catalog Matsuo algebra into `name` and returns its path.
fn matsuo(dir: &Path, field: &str, group: &str, name: &str) -> PathBuf {
    let out = axialctl(
        dir,
        &[
            "--field",
            field,
            "matsuo",
            "--catalog",
            group,
            "--out",
            name,
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    dir.join(name)
}

#[test]
fn matsuo_dimensions() {
    let dir = TempDir::new().unwrap();
    let out = axialctl(
        dir.path(),
        &[
            "--field",
            "Fp:5",
            "matsuo",
            "--catalog",
            "S3",
            "--out",
            "s3.json",
        ],
    );
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["dim"], 3);
    let out = axialctl(
        dir.path(),
        &["matsuo", "--catalog", "S4", "--out", "s4.json"],
    );
    assert_eq!(report(&out)["dim"], 6);
    let file: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("s4.json")).unwrap()).unwrap();
    assert_eq!(file["axes"].as_array().unwrap().len(), 6);
    assert_eq!(file["field"]["kind"], "Q");
}

#[test]
fn group_file_with_a_non_involution_is_rejected() {
    let dir = TempDir::new().unwrap();
    let group = r#"{"name": "bad", "degree": 3, "generators": [[1, 2, 0]], "seeds": [[1, 2, 0]]}"#;
    fs::write(dir.path().join("g.json"), group).unwrap();
    let out = axialctl(
        dir.path(),
        &["matsuo", "--group", "g.json", "--out", "m.json"],
    );
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("involution"), "{}", stderr(&out));
    assert!(!dir.path().join("m.json").exists());
}

#[test]
fn group_file_checksum_is_checked() {
    let dir = TempDir::new().unwrap();
    let group = r#"{"name": "S3", "degree": 3, "generators": [[1, 0, 2], [0, 2, 1]], "seeds": [[1, 0, 2]], "sha256": "00"}"#;
    fs::write(dir.path().join("g.json"), group).unwrap();
    let out = axialctl(
        dir.path(),
        &["matsuo", "--group", "g.json", "--out", "m.json"],
    );
    assert_eq!(code(&out), 2);
    let group = group.replace(r#", "sha256": "00""#, "");
    fs::write(dir.path().join("g.json"), group).unwrap();
    let out = axialctl(
        dir.path(),
        &["matsuo", "--group", "g.json", "--out", "m.json"],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(report(&out)["dim"] == 3);
}

#[test]
fn verify_passes_on_s4() {
    let dir = TempDir::new().unwrap();
    let path = matsuo(dir.path(), "Fp:5", "S4", "s4.json");
    let out = axialctl(dir.path(), &["verify", "--algebra", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let r = report(&out);
    assert_eq!(r["passed"], true);
    assert_eq!(r["frobenius"], "ok");
    for axis in r["axes"].as_array().unwrap() {
        assert_eq!(axis["dims"], serde_json::json!([1, 3, 2]));
    }
}

#[test]
fn mutated_structure_constant_fails_verification() {
    let dir = TempDir::new().unwrap();
    let path = matsuo(dir.path(), "Fp:5", "S3", "s3.json");
    let mut file: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let c = (file["table"][0][1][2].as_u64().unwrap() + 1) % 5;
    file["table"][0][1][2] = c.into();
    file["table"][1][0][2] = c.into();
    fs::write(dir.path().join("bad.json"), file.to_string()).unwrap();
    let out = axialctl(dir.path(), &["verify", "--algebra", "bad.json"]);
    assert_eq!(code(&out), 1);
    let r = report(&out);
    assert_eq!(r["passed"], false);
    assert!(r.to_string().contains("FusionViolation"), "{r}");
}

#[test]
fn non_commutative_table_is_an_input_error() {
    let dir = TempDir::new().unwrap();
    let path = matsuo(dir.path(), "Fp:5", "S3", "s3.json");
    let mut file: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    let c = (file["table"][0][1][2].as_u64().unwrap() + 1) % 5;
    file["table"][0][1][2] = c.into();
    fs::write(dir.path().join("nc.json"), file.to_string()).unwrap();
    let out = axialctl(dir.path(), &["verify", "--algebra", "nc.json"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("commutative"));
}

#[test]
fn field_and_eta_must_match_the_file() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Fp:5", "S3", "s3.json");
    let out = axialctl(
        dir.path(),
        &["--field", "Fp:7", "verify", "--algebra", "s3.json"],
    );
    assert_eq!(code(&out), 2);
    let out = axialctl(
        dir.path(),
        &[
            "--field",
            "Fp:5",
            "--eta",
            "1/3",
            "verify",
            "--algebra",
            "s3.json",
        ],
    );
    assert_eq!(code(&out), 2);
    let out = axialctl(
        dir.path(),
        &[
            "--field",
            "Fp:5",
            "--eta",
            "1/2",
            "verify",
            "--algebra",
            "s3.json",
        ],
    );
    assert_eq!(code(&out), 0);
    let out = axialctl(dir.path(), &["verify", "--algebra", "missing.json"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn jordan_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Fp:3", "W(D4)", "wd4.json");
    let out = axialctl(dir.path(), &["jordan", "--algebra", "wd4.json"]);
    assert_eq!(code(&out), 3);
    let r = report(&out);
    assert_eq!(r["verdict"], "NotJordan");
    assert_eq!(r["almost_jordan"], false);

    matsuo(dir.path(), "Q", "S3", "s3.json");
    let out = axialctl(dir.path(), &["jordan", "--algebra", "s3.json"]);
    assert_eq!(code(&out), 0);
    assert_eq!(report(&out)["verdict"], "Jordan");
}

#[test]
fn large_jordan_algebra_in_characteristic_three_is_inconclusive() {
    let f = PrimeField::new(3).unwrap();
    let build =
        |name: &str| build_matsuo(&catalog_load(name).unwrap(), f.clone(), f.half()).unwrap();
    let (s5, s3) = (build("S5"), build("S3"));
    let algebra = s5.algebra.direct_sum(&s3.algebra);
    let n = algebra.dim();
    let pad = |v: &Vec<_>, at: usize| {
        let mut w = vec![f.zero(); n];
        w[at..at + v.len()].clone_from_slice(v);
        w
    };
    let axes = s5
        .axes
        .iter()
        .map(|a| pad(a, 0))
        .chain(s3.axes.iter().map(|a| pad(a, 10)))
        .collect();
    let sum = AxialAlgebra::new(algebra, axes, f.half());
    let dir = TempDir::new().unwrap();
    fs::write(
        dir.path().join("sum.json"),
        serde_json::to_string(&sum.to_file()).unwrap(),
    )
    .unwrap();
    let out = axialctl(
        dir.path(),
        &["jordan", "--algebra", "sum.json", "--trials", "50"],
    );
    assert_eq!(code(&out), 4, "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r["verdict"], "Inconclusive");
    assert_eq!(r["jordan_sample"]["exhaustive"], false);
}

#[test]
fn baric_line_orbit_over_f5() {
    let dir = TempDir::new().unwrap();
    let out = axialctl(
        dir.path(),
        &[
            "--field",
            "Fp:5",
            "line-algebra",
            "--kind",
            "baric",
            "--out",
            "baric.json",
        ],
    );
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let out = axialctl(dir.path(), &["orbit", "--algebra", "baric.json"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let r = report(&out);
    assert_eq!(r.to_string().matches("\"orbit_size\":5").count(), 1, "{r}");
}

#[test]
fn sampled_solidity_is_mixed_and_deterministic() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Q", "3^3:S4", "g.json");
    let args = [
        "--seed",
        "7",
        "solidity",
        "--algebra",
        "g.json",
        "--sample",
        "30",
    ];
    let first = axialctl(dir.path(), &args);
    assert_eq!(code(&first), 0, "{}", stderr(&first));
    let r = report(&first);
    assert_eq!(r["pairs"], 30);
    assert!(r["solid"].as_u64().unwrap() > 0 && r["non_solid"].as_u64().unwrap() > 0);
    let v: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(v["manifest"]["seed"], 7);

    let mut threaded = vec!["--threads", "1"];
    threaded.extend_from_slice(&args);
    let second = axialctl(dir.path(), &threaded);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Fp:5", "S4", "a.json");
    matsuo(dir.path(), "Fp:5", "S4", "b.json");
    assert_eq!(
        fs::read(dir.path().join("a.json")).unwrap(),
        fs::read(dir.path().join("b.json")).unwrap()
    );
    for cmd in [
        ["lines", "--algebra", "a.json"],
        ["jordan", "--algebra", "a.json"],
    ] {
        let x = axialctl(dir.path(), &cmd);
        let y = axialctl(dir.path(), &cmd);
        assert_eq!(code(&x), 0);
        assert_eq!(x.stdout, y.stdout);
    }
}

#[test]
fn timing_is_opt_in() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Fp:5", "S3", "s3.json");
    let plain: Value =
        serde_json::from_slice(&axialctl(dir.path(), &["verify", "--algebra", "s3.json"]).stdout)
            .unwrap();
    assert!(plain["manifest"].get("elapsed_ms").is_none());
    let timed: Value = serde_json::from_slice(
        &axialctl(dir.path(), &["--timing", "verify", "--algebra", "s3.json"]).stdout,
    )
    .unwrap();
    assert!(timed["manifest"]["elapsed_ms"].is_u64());
}

#[test]
fn json_out_and_algebra_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = matsuo(dir.path(), "Q", "S4", "s4.json");
    let text = fs::read_to_string(&path).unwrap();
    let alg = axial_core::AnyAlgebra::from_json_str(&text).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&alg.to_file()).unwrap() + "\n",
        text
    );

    let out = axialctl(
        dir.path(),
        &["--json-out", "r.json", "lines", "--algebra", "s4.json"],
    );
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let saved: Value =
        serde_json::from_str(&fs::read_to_string(dir.path().join("r.json")).unwrap()).unwrap();
    assert_eq!(saved["manifest"]["command"], "lines");
    assert_eq!(saved["report"]["rows"].as_array().unwrap().len(), 15);
}

#[test]
fn lines_report_toric_extension_over_f5() {
    let dir = TempDir::new().unwrap();
    matsuo(dir.path(), "Fp:5", "S4", "s4.json");
    let out = axialctl(
        dir.path(),
        &["lines", "--algebra", "s4.json", "--pairs", "0,1;1,0"],
    );
    assert_eq!(code(&out), 0);
    let rows = report(&out)["rows"].as_array().unwrap().clone();
    assert_eq!(rows.len(), 1);
    let out = axialctl(
        dir.path(),
        &["lines", "--algebra", "s4.json", "--pairs", "0,9"],
    );
    assert_eq!(code(&out), 2);
}
