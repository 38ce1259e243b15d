//! Binary-level tests: subcommands, exit codes, output formats, and the
//! shipped fixture files.

use std::path::PathBuf;
use std::process::{Command, Output};

use latticework::fixtures;
use latticework::io;

fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .parent()
        .and_then(|p| p.parent())
        .expect("workspace root")
        .to_path_buf()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latticework"))
        .current_dir(repo_root())
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latticework"))
        .current_dir(repo_root())
        .env(key, value)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn check_reports_the_diamond() {
    let out = run(&["lattice", "check", "fixtures/m3.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("modular: true"));
    assert!(text.contains("distributive: false"));
    assert!(text.contains("multiplicity_free: false"));
}

#[test]
fn check_reports_the_pentagon_without_classes() {
    let out = run(&["lattice", "check", "fixtures/n5.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("modular: false"));
    assert!(text.contains("multiplicity_free: n/a"));
}

#[test]
fn check_json_output_is_versioned() {
    let out = run(&["lattice", "check", "fixtures/b2.json", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v["format"], 1);
    assert_eq!(v["distributive"], true);
}

#[test]
fn factors_prints_classes() {
    let out = run(&["lattice", "factors", "fixtures/b2.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("class 0: [0,a] [b,1]"));
    assert!(text.contains("class 1: [0,b] [a,1]"));
}

#[test]
fn factors_on_the_pentagon_exits_2() {
    let out = run(&["lattice", "factors", "fixtures/n5.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn factors_dot_colors_edges() {
    let out = run(&["lattice", "factors", "fixtures/b2.json", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("color="));
}

#[test]
fn birkhoff_prints_the_witness() {
    let out = run(&["lattice", "birkhoff", "fixtures/b2.json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("join irreducibles: a b"));
    assert!(text.contains("1 -> {a,b}"));
}

#[test]
fn downsets_emits_reparseable_lattice_json() {
    let out = run(&["lattice", "downsets", "fixtures/antichain3.json"]);
    assert_eq!(out.status.code(), Some(0));
    let lat = io::lattice_from_json(&stdout(&out)).expect("valid lattice JSON");
    assert_eq!(lat.n(), 8);
}

#[test]
fn ext_prints_edges() {
    let out = run(&["lattice", "ext", "fixtures/chain3.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("1 -> a"));
}

#[test]
fn ext_dot_output() {
    let out = run(&["lattice", "ext", "fixtures/d2.json", "--dot"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches(" -> ").count(), 4);
}

#[test]
fn reconstruct_chain_exits_0() {
    let out = run(&["lattice", "reconstruct", "fixtures/chain3.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verdict: holds_with_iso"));
}

#[test]
fn reconstruct_d2_reports_hypothesis_failure() {
    // The underlying Ext graph of this lattice is a 4-cycle, so the
    // acyclicity hypothesis fails; the isomorphism is reported to hold
    // anyway and the exit code distinguishes the case.
    let out = run(&["lattice", "reconstruct", "fixtures/d2.json"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout(&out);
    assert!(text.contains("verdict: hypothesis_fails"));
    assert!(text.contains("canonical_is_iso: true"));
}

#[test]
fn decompose_b2_into_two_chains() {
    let out = run(&["lattice", "decompose", "fixtures/b2.json"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("factors: 2"));
}

#[test]
fn quiver_submodules_json() {
    let out = run(&[
        "quiver",
        "submodules",
        "fixtures/a2.quiver",
        "fixtures/a2_nonzero.rep",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lat = io::lattice_from_json(&stdout(&out)).expect("valid lattice JSON");
    assert_eq!(lat.n(), 3);
}

#[test]
fn quiver_verify_exit_codes() {
    let equal = run(&[
        "quiver",
        "verify",
        "fixtures/a2.quiver",
        "fixtures/a2_nonzero.rep",
    ]);
    assert_eq!(equal.status.code(), Some(0));
    assert!(stdout(&equal).contains("equal: true"));

    // A decomposable representation fails the hypothesis.
    let decomposable = run(&[
        "quiver",
        "verify",
        "fixtures/a2.quiver",
        "fixtures/a2_zero.rep",
    ]);
    assert_eq!(decomposable.status.code(), Some(2));

    // Parallel arrows make the support graph a non-tree: flagged, exit 2.
    let non_tree = run(&[
        "quiver",
        "verify",
        "fixtures/kronecker.quiver",
        "fixtures/kronecker_full.rep",
    ]);
    assert_eq!(non_tree.status.code(), Some(2));
    assert!(stdout(&non_tree).contains("support_is_tree: false"));
}

#[test]
fn dedekind_count_prints_the_number() {
    let out = run(&["dedekind", "count", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "6");
}

#[test]
fn dedekind_count_rejects_large_n() {
    let out = run(&["dedekind", "count", "9"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn dedekind_lattice_json() {
    let out = run(&["dedekind", "lattice", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let lat = io::lattice_from_json(&stdout(&out)).expect("valid lattice JSON");
    assert_eq!(lat.n(), 6);
}

#[test]
fn dedekind_verify_passes() {
    let out = run(&["dedekind", "verify", "2", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).expect("valid JSON");
    assert_eq!(v["passed"], true);
}

#[test]
fn fixtures_run_exits_0() {
    let out = run(&["fixtures", "run"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("0 failures"));
}

#[test]
fn missing_file_exits_1() {
    let out = run(&["lattice", "check", "fixtures/no_such_file.json"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn malformed_json_exits_1() {
    let dir = std::env::temp_dir().join("latticework-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("broken.json");
    std::fs::write(&path, "{").unwrap();
    let out = run(&["lattice", "check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn env_var_overrides_the_enumeration_cap() {
    // 2^7 = 128 down-sets of a 7-antichain exceed a cap of 100.
    let dir = std::env::temp_dir().join("latticework-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("antichain7.json");
    std::fs::write(
        &path,
        r#"{"elements": ["1","2","3","4","5","6","7"], "covers": []}"#,
    )
    .unwrap();
    let capped = run_env(
        &["lattice", "downsets", path.to_str().unwrap()],
        "LATTICE_MAX_ELEMENTS",
        "100",
    );
    assert_eq!(capped.status.code(), Some(1));
    let free = run(&["lattice", "downsets", path.to_str().unwrap()]);
    assert_eq!(free.status.code(), Some(0));
}

#[test]
fn shipped_files_match_the_embedded_corpus() {
    let root = repo_root();
    let read = |name: &str| std::fs::read_to_string(root.join("fixtures").join(name)).unwrap();
    let cases: Vec<(&str, latticework::lattice::Lattice)> = vec![
        ("m3.json", fixtures::m3()),
        ("n5.json", fixtures::n5()),
        ("b2.json", fixtures::b2()),
        ("chain3.json", fixtures::chain3()),
        ("d2.json", fixtures::d2()),
        ("d3.json", fixtures::d3()),
        ("b3.json", fixtures::boolean_lattice(3)),
        ("s3_char3.json", fixtures::s3_char3_radical().lattice),
    ];
    for (name, expected) in cases {
        let parsed = io::lattice_from_json(&read(name)).expect(name);
        assert_eq!(parsed, expected, "{name} drifted from the embedded fixture");
    }
    for (qname, rname) in [
        ("a2.quiver", "a2_nonzero.rep"),
        ("a3.quiver", "a3_full.rep"),
        ("kronecker.quiver", "kronecker_full.rep"),
        ("star3.quiver", "star3_full.rep"),
    ] {
        let q = latticework::quiver::Quiver::parse(&read(qname)).expect(qname);
        let (_m, warnings) =
            latticework::quiver::ThinRep::parse(&read(rname), &q).expect(rname);
        assert!(warnings.is_empty(), "{rname} should need no repairs");
    }
}
