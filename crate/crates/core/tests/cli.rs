//! End-to-end tests of the `exh` binary: stdout formats, file effects and
//! exit codes.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use exhausters::{read_family, write_family, Family, FamilyKind, Polytope};
use tempfile::TempDir;

fn exh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_exh"))
        .args(args)
        .env_remove("EXH_SEED")
        .env_remove("EXH_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).to_string()
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

fn example1() -> Family {
    let c1 = Polytope::new(vec![vec![-1.0, 1.0, 1.0, 1.0], vec![1.0, 1.0, 1.0, 1.0]]).unwrap();
    let c2 = Polytope::new(vec![
        vec![1.0, -1.0, -1.0, -1.0],
        vec![-1.0, -1.0, -1.0, -1.0],
    ])
    .unwrap();
    Family::new(FamilyKind::LowerExhauster, 4, vec![c1, c2]).unwrap()
}

fn example2() -> Family {
    let mut simplex = Vec::new();
    for i in 0..3 {
        let mut v = vec![0.0; 5];
        v[0] = 1.0;
        v[i + 1] = 1.0;
        simplex.push(v);
    }
    let c1 = Polytope::new(simplex).unwrap();
    let c2 = Polytope::new(vec![vec![0.0; 5]]).unwrap();
    Family::new(FamilyKind::UpperCoexhauster, 4, vec![c1, c2]).unwrap()
}

fn write(dir: &TempDir, name: &str, family: &Family) -> PathBuf {
    let path = dir.path().join(name);
    write_family(&path, family).unwrap();
    path
}

#[test]
fn eval_prints_the_value() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    let out = exh(&["eval", f1.to_str().unwrap(), "-d", "1,0,0,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-1\n");

    let f2 = write(&dir, "example2.json", &example2());
    let out = exh(&["eval", f2.to_str().unwrap(), "-d", "0,0,0,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n");

    // affine values: min(1 + max(-2,-3,-3), 0) = -1
    let out = exh(&["eval", f2.to_str().unwrap(), "-d", "-2,-3,-3,0"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "-1\n");

    // exhausters vanish at the origin; whitespace around commas is fine
    let out = exh(&["eval", f1.to_str().unwrap(), "-d", " 0, 0 ,0,0 "]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "0\n");
}

#[test]
fn eval_rejects_bad_input() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    // wrong direction length
    let out = exh(&["eval", f1.to_str().unwrap(), "-d", "1,0"]);
    assert_eq!(code(&out), 2);
    // unparsable coordinate
    let out = exh(&["eval", f1.to_str().unwrap(), "-d", "1,zero,0,0"]);
    assert_eq!(code(&out), 2);
    // missing file
    let out = exh(&["eval", "nope.json", "-d", "1,0,0,0"]);
    assert_eq!(code(&out), 2);
    // invalid json
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{").unwrap();
    let out = exh(&["eval", bad.to_str().unwrap(), "-d", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn convert_writes_the_dual_family() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    let converted = dir.path().join("example1_converted.json");
    let out = exh(&[
        "convert",
        f1.to_str().unwrap(),
        "-o",
        converted.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "p = 4\nsets_written = 4\n");
    let family = read_family(&converted).unwrap();
    assert_eq!(family.kind(), FamilyKind::UpperExhauster);
    assert_eq!(family.sets().len(), 4);

    let f2 = write(&dir, "example2.json", &example2());
    let converted2 = dir.path().join("example2_converted.json");
    let out = exh(&[
        "convert",
        f2.to_str().unwrap(),
        "-o",
        converted2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "p = 3\nsets_written = 3\n");
    let family = read_family(&converted2).unwrap();
    assert_eq!(family.kind(), FamilyKind::LowerCoexhauster);
    assert_eq!(family.sets().len(), 3);
}

#[test]
fn convert_of_a_singleton_is_the_singleton() {
    let dir = TempDir::new().unwrap();
    let point = Polytope::new(vec![vec![0.5, -1.5]]).unwrap();
    let family = Family::new(FamilyKind::UpperExhauster, 2, vec![point.clone()]).unwrap();
    let input = write(&dir, "point.json", &family);
    let output = dir.path().join("point_converted.json");
    let out = exh(&[
        "convert",
        input.to_str().unwrap(),
        "-o",
        output.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let converted = read_family(&output).unwrap();
    assert_eq!(converted.kind(), FamilyKind::LowerExhauster);
    assert_eq!(converted.sets(), &[point]);
}

#[test]
fn convert_cap_exit_code() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    let out_path = dir.path().join("never.json");
    let out = exh(&[
        "convert",
        f1.to_str().unwrap(),
        "-o",
        out_path.to_str().unwrap(),
        "--cap",
        "3",
    ]);
    assert_eq!(code(&out), 3);
    assert!(!out_path.exists());
    let err = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(err.contains('4') && err.contains('3'), "stderr: {err}");
}

#[test]
fn verify_reports_and_exits_by_verdict() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    let converted = dir.path().join("example1_converted.json");
    exh(&[
        "convert",
        f1.to_str().unwrap(),
        "-o",
        converted.to_str().unwrap(),
    ]);

    let out = exh(&[
        "verify",
        f1.to_str().unwrap(),
        converted.to_str().unwrap(),
        "--dirs",
        "1000",
        "--seed",
        "42",
        "--tol",
        "1e-9",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("max_abs_deviation = 0"), "stdout: {text}");
    assert!(text.contains("directions_tested = 1010"));
    assert!(text.contains("passed = true"));

    // self-comparison passes with zero deviation
    let out = exh(&["verify", f1.to_str().unwrap(), f1.to_str().unwrap()]);
    assert_eq!(code(&out), 0);

    // one vertex shifted by 0.1 fails along a probe axis
    let mut sets = example1().sets().to_vec();
    let mut moved = sets[0].vertices().to_vec();
    moved[0][0] += 0.1;
    sets[0] = Polytope::new(moved).unwrap();
    let perturbed = Family::new(FamilyKind::LowerExhauster, 4, sets).unwrap();
    let p = write(&dir, "perturbed.json", &perturbed);
    let out = exh(&["verify", f1.to_str().unwrap(), p.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("passed = false"));

    // dimension mismatch is an input error
    let square = Family::new(
        FamilyKind::LowerExhauster,
        2,
        vec![Polytope::new(vec![vec![1.0, 1.0]]).unwrap()],
    )
    .unwrap();
    let s = write(&dir, "square.json", &square);
    let out = exh(&["verify", f1.to_str().unwrap(), s.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
}

#[test]
fn demyanov_output_verifies_against_input() {
    let dir = TempDir::new().unwrap();
    let square = Family::new(
        FamilyKind::LowerExhauster,
        2,
        vec![Polytope::new(vec![
            vec![-1.0, -1.0],
            vec![-1.0, 1.0],
            vec![1.0, -1.0],
            vec![1.0, 1.0],
        ])
        .unwrap()],
    )
    .unwrap();
    let input = write(&dir, "square2d.json", &square);
    let output = dir.path().join("square2d_demyanov.json");
    let out = exh(&[
        "demyanov",
        input.to_str().unwrap(),
        "-o",
        output.to_str().unwrap(),
        "--dirs",
        "360",
    ]);
    assert_eq!(code(&out), 0);
    let converted = read_family(&output).unwrap();
    assert_eq!(converted.kind(), FamilyKind::UpperExhauster);

    let out = exh(&[
        "verify",
        input.to_str().unwrap(),
        output.to_str().unwrap(),
        "--tol",
        "1e-9",
    ]);
    assert_eq!(code(&out), 0);

    // coexhausters go through the half-sphere sampler one dimension up
    let f2 = write(&dir, "example2.json", &example2());
    let out2 = dir.path().join("example2_demyanov.json");
    let out = exh(&[
        "demyanov",
        f2.to_str().unwrap(),
        "-o",
        out2.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        read_family(&out2).unwrap().kind(),
        FamilyKind::LowerCoexhauster
    );
    let out = exh(&["verify", f2.to_str().unwrap(), out2.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn reduce_merges_duplicates_and_verifies() {
    let dir = TempDir::new().unwrap();
    let base = example1();
    let mut doubled = base.sets().to_vec();
    doubled.extend_from_slice(base.sets());
    let duplicated = Family::new(base.kind(), base.space_dim(), doubled).unwrap();
    let input = write(&dir, "duplicated.json", &duplicated);
    let output = dir.path().join("reduced.json");
    let out = exh(&[
        "reduce",
        input.to_str().unwrap(),
        "-o",
        output.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("sets_in = 4"), "stdout: {text}");
    let reduced = read_family(&output).unwrap();
    assert!(reduced.sets().len() < duplicated.sets().len());

    let out = exh(&["verify", input.to_str().unwrap(), output.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
}

#[test]
fn gen_is_deterministic_and_loadable() {
    let dir = TempDir::new().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = exh(&[
            "gen",
            "--n",
            "3",
            "--k",
            "2",
            "--max-vertices",
            "4",
            "--kind",
            "lower_exhauster",
            "--seed",
            "7",
            "-o",
            path.to_str().unwrap(),
        ]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(
        std::fs::read(&a).unwrap(),
        std::fs::read(&b).unwrap(),
        "same seed, same bytes"
    );
    let family = read_family(Path::new(&a)).unwrap();
    assert_eq!(family.kind(), FamilyKind::LowerExhauster);
    assert_eq!(family.sets().len(), 2);

    // unknown kind is an input error
    let out = exh(&[
        "gen",
        "--n",
        "1",
        "--k",
        "1",
        "--max-vertices",
        "1",
        "--kind",
        "diagonal",
        "-o",
        a.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn env_overrides_pick_up_seed_and_tol() {
    let dir = TempDir::new().unwrap();
    let f1 = write(&dir, "example1.json", &example1());
    let out = Command::new(env!("CARGO_BIN_EXE_exh"))
        .args(["verify", f1.to_str().unwrap(), f1.to_str().unwrap()])
        .env("EXH_SEED", "99")
        .env("EXH_TOL", "1e-3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("tolerance = 0.001"));
}
