use combhopf::cli::registry::{MODULES, REGISTRY};
use combhopf::cli::{execute, Outcome, EXIT_PASS, EXIT_RESOURCE, EXIT_USAGE};
use std::collections::BTreeSet;
use std::process::Command;

fn run(args: &[&str]) -> Outcome {
    execute(std::iter::once("combhopf").chain(args.iter().copied()))
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.code, EXIT_PASS, "{args:?} failed: {}", out.stderr);
    out.stdout
}

#[test]
fn every_registered_op_is_reachable() {
    let mut seen = BTreeSet::new();
    for entry in REGISTRY {
        assert!(MODULES.contains(&entry.module), "unknown module {}", entry.module);
        assert!(seen.insert((entry.module, entry.op)), "duplicate entry {}::{}", entry.module, entry.op);
        let out = run(entry.args);
        assert_eq!(out.code, EXIT_PASS, "{}::{} via {:?}: {}", entry.module, entry.op, entry.args, out.stderr);
        assert!(!out.stdout.trim().is_empty(), "{}::{} printed nothing", entry.module, entry.op);
    }
    for m in MODULES {
        assert!(REGISTRY.iter().any(|e| e.module == m), "module {m} has no registered op");
    }
    assert_eq!(seen.len(), 61);
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "F[12]*F[1]"]), "F[123] + F[132] + F[312]\n");
    assert_eq!(stdout(&["eval", "pair(F[312], G[312])"]), "1\n");
    assert_eq!(
        stdout(&["eval", "MS[[2,1],[1,0]] * MS[[3,1]]"]),
        "MS[[0,0,3,1],[2,1,0,0],[1,0,0,0]] + MS[[2,1,0,0],[0,0,3,1],[1,0,0,0]] + MS[[2,1,0,0],[1,0,0,0],[0,0,3,1]] \
         + MS[[2,1,0,0],[1,0,3,1]] + MS[[2,1,3,1],[1,0,0,0]]\n"
    );
    assert_eq!(stdout(&["eval", "specialize(gshuffle(G[1], G[1]), q=1)"]), "2*G[12] + 2*G[21]\n");
    assert_eq!(stdout(&["eval", "embed(R(2,1))"]), "G[132] + G[231]\n");
}

#[test]
fn bracket_and_digit_permutations_agree() {
    assert_eq!(stdout(&["eval", "F[3,1,2] - F[312]"]), "0\n");
}

#[test]
fn report_examples() {
    assert_eq!(stdout(&["report", "hilbert", "mqsym", "5"]), "1,1,5,33,281,2961\n");
    assert_eq!(
        stdout(&["report", "charpoly", "T4"]),
        "(x - 2)^6 (x - 6)^4 (x - 14)^3 (x - 18)^3 (x - 42)^3 (x - 70) (x^2 - 28*x + 84)^2\n"
    );
    let cartan = stdout(&["report", "cartan", "4", "--q"]);
    assert!(cartan.lines().any(|l| l.starts_with("(1,2,1)") && l.contains("1 + q^2")));
    assert_eq!(cartan.lines().count(), 9);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["bogus"][..],
        &["eval", "F[12"],
        &["eval", "F[1] * MS[[1]]"],
        &["report", "cartan", "x"],
        &["--format", "dot", "eval", "F[1]"],
        &["report", "row-merge", "[[1,0],[0,1]]", "(3)"],
    ] {
        let out = run(args);
        assert_eq!(out.code, EXIT_USAGE, "{args:?}: {}", out.stderr);
        assert!(out.stdout.is_empty());
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn parse_errors_carry_a_position_and_type_errors_name_both_algebras() {
    let out = run(&["eval", "F[12] + G[1"]);
    assert!(out.stderr.contains("position"), "{}", out.stderr);
    let out = run(&["eval", "F[1] * MS[[1]]"]);
    assert!(out.stderr.contains("FQSym") && out.stderr.contains("MQSym"), "{}", out.stderr);
}

#[test]
fn resource_bounds_exit_3() {
    for args in [
        &["report", "hilbert", "mqsym", "9"][..],
        &["report", "charpoly", "T7"],
        &["verify", "hopf-axioms", "--max-degree", "6"],
        &["report", "convolution-check", "9"],
    ] {
        let out = run(args);
        assert_eq!(out.code, EXIT_RESOURCE, "{args:?}: {}", out.stderr);
        assert!(out.stderr.contains("bound"), "{}", out.stderr);
    }
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.code, EXIT_PASS);
    assert!(out.stdout.contains("eval") && out.stdout.contains("verify"));
}

#[test]
fn formats() {
    let json: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "eval", "F[12]*F[1]"])).unwrap();
    assert_eq!(json["algebra"], "FQSym");
    assert_eq!(json["terms"].as_array().unwrap().len(), 3);

    assert_eq!(stdout(&["--format", "tsv", "eval", "2*F[21] - F[12]"]), "F[12]\t-1\nF[21]\t2\n");

    let dot = stdout(&["--format", "dot", "report", "quiver", "3"]);
    assert!(dot.starts_with("digraph"), "{dot}");
    assert_eq!(dot.matches("->").count(), 2);

    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["--format", "json", "verify", "hopf-axioms", "--max-degree", "3"])).unwrap();
    assert!(json["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true));
}

#[test]
fn conjectures_are_informational() {
    let out = run(&["verify", "conjectures", "--max-degree", "4"]);
    assert_eq!(out.code, EXIT_PASS);
    for which in ["H1", "H2", "H3"] {
        for d in 0..=4 {
            assert!(out.stdout.contains(&format!("{which} inverse identity, degree {d}")), "{which} degree {d} missing");
        }
    }
}

#[test]
fn output_is_byte_deterministic() {
    for args in [
        &["--format", "json", "report", "resolve", "S(3,1)", "5"][..],
        &["--format", "dot", "report", "quiver", "5"],
        &["--format", "tsv", "verify", "paper-examples"],
        &["eval", "coproduct(F[2413])"],
    ] {
        assert_eq!(run(args), run(args), "{args:?}");
    }
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_combhopf");
    let status = |args: &[&str]| Command::new(bin).args(args).output().expect("binary runs");
    let ok = status(&["eval", "F[1]*F[1]"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "F[12] + F[21]\n");
    assert_eq!(status(&["eval", "F["]).status.code(), Some(2));
    assert_eq!(status(&["report", "hilbert", "mqsym", "12"]).status.code(), Some(3));
    let a = status(&["--format", "json", "verify", "paper-examples"]);
    let b = status(&["--format", "json", "verify", "paper-examples"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
