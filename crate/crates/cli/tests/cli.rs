use std::path::PathBuf;
use std::process::Command;

use wajsberg::format::{parse_algebra, parse_code, parse_raw_algebras};
use wajsberg::*;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn wajsberg(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_wajsberg")).args(args).output().unwrap();
    Run {
        code: out.status.code().unwrap(),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn with_fixture(cmd: &str, name: &str, rest: &[&str]) -> Run {
    let path = fixture(name);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    wajsberg(&args)
}

const ALGEBRAS: [&str; 11] = [
    "example2_7_bck.alg",
    "example2_7_mv.alg",
    "example2_7_wajsberg.alg",
    "example4_11.alg",
    "table4_4.alg",
    "table4_5.alg",
    "table4_6.alg",
    "table4_7.alg",
    "table4_8a.alg",
    "table4_8b.alg",
    "table4_9.alg",
];

const TABLE_CODES: [(&str, &str); 7] = [
    ("table4_4.alg", "v1.code"),
    ("table4_5.alg", "v2.code"),
    ("table4_6.alg", "v3.code"),
    ("table4_7.alg", "v4.code"),
    ("table4_8a.alg", "v7.code"),
    ("table4_8b.alg", "v8.code"),
    ("table4_9.alg", "v9.code"),
];

fn read_code(name: &str) -> BlockCode {
    parse_code(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap()
}

#[test]
fn every_algebra_fixture_verifies() {
    for name in ALGEBRAS {
        let r = with_fixture("verify", name, &[]);
        assert_eq!(r.code, 0, "{name}: {}", r.stderr);
        assert!(r.stdout.starts_with("valid: "), "{name}");
    }
    let r = with_fixture("verify", "example2_7_bck.alg", &[]);
    assert_eq!(r.stdout, "valid: bounded commutative BCK\n");
    assert_eq!(with_fixture("verify", "example2_7_mv.alg", &[]).stdout, "valid: MV algebra\n");
    assert_eq!(with_fixture("verify", "table4_4.alg", &[]).stdout, "valid: Wajsberg algebra\n");
}

#[test]
fn invalid_algebra_exits_two_with_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.alg");
    std::fs::write(&path, "kind: bck\norder: 2\nzero: 0 one: 1\n0 0\n1 1\n").unwrap();
    let r = wajsberg(&["verify", path.to_str().unwrap()]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.starts_with("invalid: "), "{}", r.stdout);
    assert!(r.stdout.contains(" at ("), "{}", r.stdout);
    // the other commands refuse it as well
    assert_eq!(wajsberg(&["code", path.to_str().unwrap()]).code, 2);
}

#[test]
fn malformed_input_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.alg");
    std::fs::write(&path, "kind: wajsberg\norder: 2\none: 1\nunary: 1 0\n1 1\n").unwrap();
    let r = wajsberg(&["verify", path.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.starts_with("error: "));
    assert!(r.stdout.is_empty());

    let code = dir.path().join("broken.code");
    std::fs::write(&code, "101\n10x\n").unwrap();
    let r = wajsberg(&["mindist", code.to_str().unwrap()]);
    assert_eq!(r.code, 1);
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);

    assert_eq!(wajsberg(&["code", dir.path().join("missing.alg").to_str().unwrap()]).code, 1);
    assert_eq!(with_fixture("distance", "table4_4.alg", &["0", "6"]).code, 1);
}

#[test]
fn usage_errors_exit_64() {
    for args in [&["bogus"][..], &[], &["convert", "x.alg"], &["convert", "x.alg", "--to", "lattice"]] {
        let r = wajsberg(args);
        assert_eq!(r.code, 64, "{args:?}");
        assert!(r.stdout.is_empty());
    }
    let help = wajsberg(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("attach"));
}

#[test]
fn conversions_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let original = parse_algebra(&std::fs::read_to_string(fixture("example2_7_bck.alg")).unwrap()).unwrap();
    let mv = with_fixture("convert", "example2_7_bck.alg", &["--to", "mv"]);
    assert_eq!(mv.code, 0);
    assert_eq!(
        parse_algebra(&mv.stdout).unwrap(),
        parse_algebra(&std::fs::read_to_string(fixture("example2_7_mv.alg")).unwrap()).unwrap()
    );
    let path = dir.path().join("mv.alg");
    std::fs::write(&path, &mv.stdout).unwrap();
    let w = wajsberg(&["convert", path.to_str().unwrap(), "--to", "wajsberg"]);
    assert_eq!(
        parse_algebra(&w.stdout).unwrap(),
        parse_algebra(&std::fs::read_to_string(fixture("example2_7_wajsberg.alg")).unwrap()).unwrap()
    );
    std::fs::write(&path, &w.stdout).unwrap();
    let back = wajsberg(&["convert", path.to_str().unwrap(), "--to", "bck"]);
    assert_eq!(parse_algebra(&back.stdout).unwrap(), original);
}

#[test]
fn codes_of_tables_match_code_fixtures() {
    for (table, v) in TABLE_CODES {
        let r = with_fixture("code", table, &[]);
        assert_eq!(r.code, 0);
        assert_eq!(parse_code(&r.stdout).unwrap(), read_code(v), "{table}");
    }
}

#[test]
fn distances_and_minimum_distance() {
    assert_eq!(with_fixture("distance", "example2_7_bck.alg", &["1", "2"]).stdout, "3\n");
    assert_eq!(with_fixture("distance", "example2_7_bck.alg", &["1", "0"]).stdout, "2\n");
    assert_eq!(with_fixture("distance", "example2_7_bck.alg", &["4", "4"]).stdout, "0\n");
    for v in ["v1.code", "v2.code", "v5.code", "v9.code", "v10.code"] {
        let r = with_fixture("mindist", v, &[]);
        assert_eq!(r.code, 0);
        assert_eq!(r.stdout, format!("{}\n", min_hamming_distance(&read_code(v)).unwrap()));
    }
}

#[test]
fn skeletons() {
    let r = with_fixture("skeleton", "table4_6.alg", &[]);
    assert_eq!(r.stdout, "######\n.#...#\n.##.##\n.#.#.#\n....##\n.....#\n");
    let r = with_fixture("skeleton", "table4_6.alg", &["--indicator"]);
    assert_eq!(r.stdout, ".....#\n.##.##\n.#...#\n....##\n.#.#.#\n######\n");
}

#[test]
fn enumerate_to_stdout() {
    let r = wajsberg(&["enumerate", "6"]);
    assert_eq!(r.code, 0);
    let (head, body) = r.stdout.split_once('\n').unwrap();
    assert_eq!(head, "n=6 pi=1 total=2");
    let raws = parse_raw_algebras(body).unwrap();
    assert_eq!(raws.len(), 2);
    // output is deterministic
    assert_eq!(wajsberg(&["enumerate", "6"]).stdout, r.stdout);
    assert_eq!(wajsberg(&["enumerate", "8"]).stdout.lines().next(), Some("n=8 pi=2 total=3"));
}

#[test]
fn enumerate_to_a_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("twelve");
    let r = wajsberg(&["enumerate", "12", "--output", out.to_str().unwrap()]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let lines: Vec<&str> = r.stdout.lines().collect();
    assert_eq!(lines[0], "n=12 pi=3 total=4");
    assert_eq!(lines[1..], ["n12_0_12.alg", "n12_1_2x2x3.alg", "n12_2_2x6.alg", "n12_3_3x4.alg"]);
    for name in &lines[1..] {
        let v = wajsberg(&["verify", out.join(name).to_str().unwrap()]);
        assert_eq!(v.stdout, "valid: Wajsberg algebra\n");
    }
}

#[test]
fn enumerate_limits() {
    assert_eq!(wajsberg(&["enumerate", "30"]).code, 1);
    assert_eq!(wajsberg(&["enumerate", "30", "--limit", "30"]).stdout.lines().next(), Some("n=30 pi=4 total=5"));
    assert_eq!(wajsberg(&["enumerate", "0"]).code, 1);
}

#[test]
fn attach_square_fixtures() {
    for (table, v) in TABLE_CODES.into_iter().chain([("example2_7_wajsberg.alg", "v2.code")]) {
        let r = with_fixture("attach", v, &[]);
        assert_eq!(r.code, 0, "{v}: {}", r.stderr);
        let attached = parse_algebra(&r.stdout).unwrap();
        assert_eq!(code_from_algebra(&attached).unwrap(), read_code(v), "{v}");
        let Algebra::Wajsberg(a) = attached else { panic!("{v}") };
        let expected = parse_algebra(&std::fs::read_to_string(fixture(table)).unwrap()).unwrap();
        let Algebra::Wajsberg(expected) = expected else { panic!("{table}") };
        assert!(wajsberg_isomorphic(&a, &expected).unwrap().is_some(), "{v}");
    }
    let r = with_fixture("attach", "v2.code", &["--to", "bck"]);
    assert_eq!(
        parse_algebra(&r.stdout).unwrap(),
        parse_algebra(&std::fs::read_to_string(fixture("example2_7_bck.alg")).unwrap()).unwrap()
    );
}

#[test]
fn attach_all_lists_every_relabeling() {
    let r = with_fixture("attach", "v9.code", &["--all"]);
    assert_eq!(r.code, 0);
    assert_eq!(parse_raw_algebras(&r.stdout).unwrap().len(), 6);
    assert_eq!(r.stdout.matches("# factors: {2,2,2}").count(), 6);
}

#[test]
fn rejection_reports_a_witness() {
    let r = with_fixture("attach", "v6.code", &[]);
    assert_eq!(r.code, 2);
    assert_eq!(
        r.stdout,
        "rejected: transitivity failure: rows 1 <= 3 <= 4 but not 1 <= 4 (011101 <= 000111 <= 000011)\n"
    );
    for v in ["v5.code", "v10.code"] {
        let r = with_fixture("attach", v, &[]);
        assert_eq!(r.code, 2);
        assert!(r.stderr.contains("not square"), "{}", r.stderr);
    }
}

#[test]
fn embeddings() {
    let r = with_fixture("embed", "v5.code", &[]);
    assert_eq!(r.code, 0);
    let mut lines = r.stdout.lines();
    assert!(lines.next().unwrap().starts_with("q=6 factors={2,3} columns="));
    assert_eq!(lines.next(), Some("# restriction: 111 101 011 010 001 000"));
    // everything after the report line is an algebra file
    let host = parse_algebra(r.stdout.split_once('\n').unwrap().1).unwrap();
    let Algebra::Wajsberg(host) = host else { panic!() };
    let t45 = parse_algebra(&std::fs::read_to_string(fixture("table4_5.alg")).unwrap()).unwrap();
    let Algebra::Wajsberg(t45) = t45 else { panic!() };
    assert!(wajsberg_isomorphic(&host, &t45).unwrap().is_some());

    let r = with_fixture("embed", "v10.code", &["--all", "--max-order", "8"]);
    let heads: Vec<&str> = r.stdout.lines().filter(|l| l.starts_with("q=")).map(|l| l.split(" columns").next().unwrap()).collect();
    assert_eq!(heads, ["q=4 factors={2,2}", "q=6 factors={2,3}", "q=8 factors={2,2,2}", "q=8 factors={2,4}"]);

    let r = with_fixture("embed", "v10.code", &["--max-order", "3"]);
    assert_eq!(r.code, 2);
    assert_eq!(with_fixture("embed", "v10.code", &["--max-order", "99"]).code, 1);
}
