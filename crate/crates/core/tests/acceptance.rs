//! One line per acceptance criterion. Criteria 1-13 gate the exit status;
//! criterion 14 is reported but never fails the run.

use combhopf::cli::verify::{run, Outcome, Suite};
use std::collections::BTreeMap;
use std::process::ExitCode;

const TITLES: [&str; 14] = [
    "connected permutation counts c1..c9, enumeration and series",
    "primitive basis V_alpha expansions in degrees 3 and 4",
    "enveloping algebra series and d(t)",
    "LR product of the (2,1) tableau and commutative images",
    "characteristic polynomials of T4 and T3(q)",
    "commutative images of T1..T4 on the Schur basis",
    "q-Cartan matrix of H4(0), inverse and radical",
    "minimal resolutions of S(3,1) and V22(0)",
    "Ext Poincare series against the inverse q-Cartan matrix",
    "quiver of H_n(0): theorem rule, Ext^1, arrow and block counts",
    "MQSym dimensions, product, coproduct and free generation",
    "convolution operators f_A and the homomorphism identity",
    "Hopf axioms and representation-theoretic property suites",
    "conjecture reports (informational)",
];

fn main() -> ExitCode {
    let mut by_criterion: BTreeMap<u8, Vec<Outcome>> = BTreeMap::new();
    for suite in [Suite::PaperExamples, Suite::HopfAxioms, Suite::Conjectures] {
        match run(suite, None, None) {
            Ok(report) => {
                for o in report.outcomes {
                    by_criterion.entry(o.criterion).or_default().push(o);
                }
            }
            Err(e) => eprintln!("suite {} did not run: {e}", suite.name()),
        }
    }

    let mut blocking_failure = false;
    for (i, title) in TITLES.iter().enumerate() {
        let criterion = (i + 1) as u8;
        let outcomes = by_criterion.get(&criterion).map(Vec::as_slice).unwrap_or(&[]);
        let failed: Vec<&str> = outcomes.iter().filter(|o| !o.passed).map(|o| o.name.as_str()).collect();
        let passed = !outcomes.is_empty() && failed.is_empty();
        let informational = criterion == 14;
        if !passed && !informational {
            blocking_failure = true;
        }
        let mut line = format!("{} criterion {criterion:>2}: {title} ({} checks", if passed { "PASS" } else { "FAIL" }, outcomes.len());
        if !failed.is_empty() {
            line.push_str(&format!("; failing: {}", failed.join("; ")));
        }
        line.push(')');
        if informational {
            line.push_str(" [non-blocking]");
        }
        println!("{line}");
    }

    if blocking_failure {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
