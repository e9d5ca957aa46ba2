use std::fs;
use std::path::PathBuf;

use assert_cmd::Command;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn lawvere() -> Command {
    Command::cargo_bin("lawvere").unwrap()
}

fn stdout_of(args: &[&str]) -> (i32, String) {
    let out = lawvere().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn compose_of_nat_fixtures() {
    let (g, h) = (fixture("g.mat"), fixture("h.mat"));
    lawvere()
        .args(["matmul", "--op", "compose", "-A"])
        .arg(&g)
        .arg("-B")
        .arg(&h)
        .assert()
        .code(0)
        .stdout("semiring nat 2 1\n11\n4\n");
}

#[test]
fn tensor_of_nat_fixtures() {
    let (g, h) = (fixture("g.mat"), fixture("h.mat"));
    lawvere()
        .args(["matmul", "--op", "tensor", "-A"])
        .arg(&g)
        .arg("-B")
        .arg(&h)
        .assert()
        .code(0)
        .stdout("semiring nat 4 2\n3 6\n4 8\n0 3\n0 4\n");
}

#[test]
fn dagger_is_the_conjugate_transpose() {
    lawvere()
        .args(["matmul", "--op", "dagger", "-A"])
        .arg(fixture("z.mat"))
        .assert()
        .code(0)
        .stdout("semiring gaussian 2 2\n1-2i 0\n3 i\n");
}

#[test]
fn dagger_without_an_involution_is_a_usage_error() {
    lawvere().args(["matmul", "--op", "dagger", "-A"]).arg(fixture("g.mat")).assert().code(2);
}

#[test]
fn mismatched_dimensions_exit_two() {
    let out = lawvere()
        .args(["matmul", "--op", "compose", "-A"])
        .arg(fixture("h.mat"))
        .arg("-B")
        .arg(fixture("h.mat"))
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("dimension mismatch"));
}

#[test]
fn malformed_matrix_files_exit_two_with_a_position() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.mat");
    fs::write(&bad, "semiring nat 1 2\n1 x\n").unwrap();
    let out = lawvere().args(["matmul", "--op", "dagger", "-A"]).arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2, column 3"));
}

#[test]
fn missing_second_operand_exits_two() {
    lawvere().args(["matmul", "--op", "compose", "-A"]).arg(fixture("g.mat")).assert().code(2);
}

#[test]
fn golden_shortest_paths() {
    for (graph, hops, expected) in [("three_cycle.graph", "2", "three_cycle.k2.mat"), ("five_nodes.graph", "3", "five_nodes.k3.mat")] {
        let want = fs::read_to_string(fixture(expected)).unwrap();
        lawvere()
            .args(["shortest-path", "--graph"])
            .arg(fixture(graph))
            .args(["--max-hops", hops])
            .assert()
            .code(0)
            .stdout(want);
    }
}

#[test]
fn zero_hops_gives_the_tropical_identity() {
    let (code, out) = stdout_of(&["shortest-path", "--graph", fixture("three_cycle.graph").to_str().unwrap(), "--max-hops", "0"]);
    assert_eq!(code, 0);
    assert_eq!(out, "semiring tropical 3 3\n0 inf inf\ninf 0 inf\ninf inf 0\n");
}

#[test]
fn bad_graphs_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("bad.graph");
    fs::write(&g, "2\n0 7 1\n").unwrap();
    lawvere().args(["shortest-path", "--graph"]).arg(&g).args(["--max-hops", "1"]).assert().code(2);
    lawvere().args(["shortest-path", "--graph", "/nonexistent", "--max-hops", "1"]).assert().code(2);
}

#[test]
fn laws_examples() {
    let (code, out) = stdout_of(&["laws", "--suite", "monad-laws", "--semiring", "nat", "--seed", "42", "--cases", "200"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.starts_with("suite monad-laws on M_nat (seed 42, 200 cases)\n"));
    let (code, out) = stdout_of(&["laws", "--suite", "commutativity", "--monoid", "free-words", "--seed", "1", "--cases", "50"]);
    assert_eq!(code, 0);
    assert!(out.contains("counterexample: u = "), "{out}");
    lawvere().args(["laws", "--suite", "nope"]).assert().code(2);
    lawvere().args(["laws", "--suite", "monad-laws", "--semiring", "reals"]).assert().code(2);
    lawvere().args(["laws", "--suite", "monad-laws", "--monoid", "groups"]).assert().code(2);
    lawvere().args(["laws", "--suite", "dagger", "--semiring", "bool"]).assert().code(2);
}

#[test]
fn law_violations_exit_one() {
    lawvere().args(["laws", "--suite", "additivity", "--monoid", "free-words", "--cases", "5"]).assert().code(1);
}

#[test]
fn output_is_deterministic() {
    let args = ["laws", "--suite", "kleisli-iso", "--semiring", "tropical", "--seed", "9", "--cases", "20"];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn roundtrip_examples() {
    lawvere().args(["roundtrip", "--adjunction", "mat-h", "--semiring", "gaussian", "--involutive"]).assert().code(0);
    lawvere().args(["roundtrip", "--adjunction", "srng-e", "--semiring", "tropical"]).assert().code(0);
    lawvere().args(["roundtrip", "--adjunction", "mon-e", "--semiring", "rational", "--cases", "20"]).assert().code(0);
    lawvere().args(["roundtrip", "--adjunction", "nope"]).assert().code(2);
    lawvere().args(["roundtrip", "--adjunction", "srng-e", "--semiring", "nat", "--involutive"]).assert().code(2);
}

#[test]
fn help_exits_zero_and_unknown_commands_exit_two() {
    lawvere().arg("--help").assert().code(0);
    lawvere().arg("frobnicate").assert().code(2);
    lawvere().assert().code(2);
}
