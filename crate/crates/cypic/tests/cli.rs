//! End-to-end tests of the `cypic` binary: output formats, determinism,
//! round-trip consistency between the two renderings, and exit codes.

use std::process::{Command, Output};

use cypic::output::parse_machine;

fn cypic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cypic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn pic_b_match_output() {
    let out = cypic(&["pic-b", "2", "1", "2"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("d = 1"));
    assert!(text.contains("Z/2 x Z/6"));
    assert!(text.contains("verdict: match"));

    let out = cypic(&["pic-b", "1", "1", "2"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("Z/4"));
}

#[test]
fn pic_b_empty_moduli_message() {
    let out = cypic(&["pic-b", "3", "0", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("empty moduli (d = 10/6 not integral)"));
}

#[test]
fn pic_b_unsupported_torsor_case() {
    let out = cypic(&["pic-b", "1", "1", "3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("unsupported"));
}

#[test]
fn machine_and_human_renderings_carry_the_same_numbers() {
    let machine = stdout(&cypic(&["pic-b", "2", "1", "2", "--format", "machine"]));
    let human = stdout(&cypic(&["pic-b", "2", "1", "2"]));
    let doc = parse_machine(&machine).expect("machine output parses");

    assert_eq!(doc.schema_version, "1");
    let d = doc.get("d").unwrap();
    assert!(human.contains(&format!("branch degree d = {}", d)));

    let factors = doc.get("invariant_factors").unwrap(); // "2 6"
    let human_factors = factors.replace(' ', ", ");
    assert!(human.contains(&format!("invariant factors [{}]", human_factors)));

    let structure = doc.get("structure").unwrap();
    assert!(human.contains(&format!("structure: {}", structure)));

    for i in 0..doc.get("relation_count").unwrap().parse::<usize>().unwrap() {
        let row = doc.get(&format!("relation_{}", i)).unwrap();
        assert!(
            human.contains(&format!("({})", row.replace(' ', ", "))),
            "relation row {} missing from the human rendering",
            row
        );
    }

    assert_eq!(doc.get("verdict"), Some("match"));
    assert!(human.contains("verdict: match"));
}

#[test]
fn machine_output_is_byte_identical_across_runs() {
    for args in [
        vec!["pic-b", "9", "2", "3", "--format", "machine"],
        vec!["disc-algebra", "4", "h", "--format", "machine"],
        vec!["class", "1", "3", "2", "-1", "--format", "machine"],
    ] {
        let a = cypic(&args);
        let b = cypic(&args);
        assert_eq!(a.stdout, b.stdout, "args: {:?}", args);
    }
}

#[test]
fn sweep_is_deterministic_across_parallelism() {
    let one = cypic(&[
        "sweep", "--g", "0..3", "--n", "2..6", "--d", "1..4", "--jobs", "1", "--format", "machine",
    ]);
    let four = cypic(&[
        "sweep", "--g", "0..3", "--n", "2..6", "--d", "1..4", "--jobs", "4", "--format", "machine",
    ]);
    assert!(one.status.success());
    // The invocation echo differs (--jobs 1 vs 4); the payload must not.
    let payload = |o: &Output| {
        stdout(o)
            .lines()
            .skip(2)
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(payload(&one), payload(&four));
}

#[test]
fn sweep_exit_codes() {
    // Matches plus not-covered tuples: success by default.
    let out = cypic(&["sweep", "--g", "2", "--n", "2", "--d", "1..3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("not covered: 2"));

    // Strict mode turns not-covered into failure.
    let out = cypic(&["sweep", "--g", "2", "--n", "2", "--d", "1..3", "--strict"]);
    assert_eq!(out.status.code(), Some(1));

    // All-match sweep stays green under --strict.
    let out = cypic(&["sweep", "--g", "1", "--n", "2", "--d", "1..1", "--strict"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 tuples"));
    assert!(text.contains("match:       1"));

    // Empty range: zero tuples, success.
    let out = cypic(&["sweep", "--g", "1", "--n", "2", "--d", "5..3"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("0 tuples"));
}

#[test]
fn sweep_machine_payload_counts() {
    let out = cypic(&[
        "sweep", "--g", "0..5", "--n", "2..12", "--d", "1..12", "--format", "machine",
    ]);
    assert!(out.status.success());
    let doc = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(doc.get("tuples"), Some("792"));
    assert_eq!(doc.get("mismatches"), Some("0"));
    assert_eq!(doc.get("matches"), Some("763"));
    assert_eq!(doc.get("not_covered"), Some("29"));
}

#[test]
fn class_commands() {
    let out = cypic(&["class", "1", "2", "1", "0", "--format", "machine"]);
    assert!(out.status.success());
    let doc = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(doc.get("exponents"), Some("1 0"));
    assert_eq!(doc.get("class"), Some("Lambda"));

    let out = cypic(&["disc-class", "1", "1", "2", "--format", "machine"]);
    let doc = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(doc.get("exponents"), Some("8 -2"));

    // Outside the stated formula range: failure with a diagnostic.
    let out = cypic(&["class", "2", "1", "0", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stderr).unwrap().contains("not stated"));
}

#[test]
fn disc_algebra_output() {
    let out = cypic(&["disc-algebra", "3", "h", "--format", "machine"]);
    assert!(out.status.success());
    let doc = parse_machine(&stdout(&out)).unwrap();
    assert_eq!(doc.get("discriminant"), Some("-27*h^2"));
    assert_eq!(doc.get("trace_matrix.row_0"), Some("3, 0, 0"));

    let out = cypic(&["disc-algebra", "2", "x1*x2 - 1"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("4*x1*x2 - 4"));
}

#[test]
fn usage_errors_exit_2() {
    // Malformed integer.
    let out = cypic(&["pic-b", "2", "one", "2"]);
    assert_eq!(out.status.code(), Some(2));

    // Cover degree below 2.
    let out = cypic(&["pic-b", "2", "1", "1"]);
    assert_eq!(out.status.code(), Some(2));

    // Unparseable polynomial.
    let out = cypic(&["disc-algebra", "2", "h +"]);
    assert_eq!(out.status.code(), Some(2));

    // d = 0 has no Jacobian regime.
    let out = cypic(&["pic-jac", "1", "0"]);
    assert_eq!(out.status.code(), Some(2));

    // Zero parallelism is rejected.
    let out = cypic(&[
        "sweep", "--g", "1", "--n", "2", "--d", "1", "--jobs", "0",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pic_jac_structures() {
    let expectations = [
        (("0", "2"), "structure: Z"),
        (("1", "5"), "structure: Z/12 x Z"),
        (("2", "1"), "structure: Z/10 x Z^2"),
        (("4", "1"), "structure: Z^3"),
    ];
    for ((g, d), needle) in expectations {
        let out = cypic(&["pic-jac", g, d]);
        assert!(out.status.success());
        assert!(stdout(&out).contains(needle), "g={} d={}", g, d);
    }
}
