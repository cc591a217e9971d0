use std::process::ExitCode;
use std::time::Instant;

use vassiliev_core::brauer::parse;
use vassiliev_core::families::omega;
use vassiliev_core::lab::{verify, Check};
use vassiliev_core::{evaluate, Evaluator, Suite, WeightFlavor};

struct Outcome {
    checks: Vec<Check>,
}

impl Outcome {
    fn suite(suite: Suite, ev: &Evaluator, keep: impl Fn(&Check) -> bool) -> Self {
        let checks = verify(suite, ev)
            .checks
            .into_iter()
            .filter(|c| keep(c))
            .collect();
        Outcome { checks }
    }

    fn with(mut self, more: Vec<Check>) -> Self {
        self.checks.extend(more);
        self
    }

    fn passed(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

fn check(name: String, computed: impl ToString, expected: impl ToString) -> Check {
    let (computed, expected) = (computed.to_string(), expected.to_string());
    Check {
        passed: computed == expected,
        name,
        computed,
        expected,
    }
}

/// Traces in `Br_3` against the evaluator run on the wheels directly.
fn wheel_traces() -> Vec<Check> {
    let mut out = Vec::new();
    for k in 2..=5usize {
        let d = omega(k).expect("wheel");
        for (flavor, expr) in [
            (WeightFlavor::Gl, "d - h"),
            (WeightFlavor::So, "u+ - u- + x+ - x-"),
        ] {
            let tr = parse(3, &format!("({expr})^{k}")).expect("literal").trace();
            let w = evaluate(&d, flavor, true).map_or_else(|e| e.to_string(), |p| p.to_string());
            out.push(check(
                format!("tr(({expr})^{k}) vs {flavor:?} omega:{k}"),
                tr,
                w,
            ));
        }
    }
    out
}

fn is_wheel_trace(c: &Check) -> bool {
    c.name.contains("value of omega")
}

fn main() -> ExitCode {
    let ev = Evaluator::new();
    type Run<'a> = Box<dyn Fn() -> Outcome + 'a>;
    let criteria: Vec<(&str, Run)> = vec![
        (
            "family closed forms",
            Box::new(|| Outcome::suite(Suite::LemmaFamilies, &ev, |_| true)),
        ),
        (
            "psi values",
            Box::new(|| Outcome::suite(Suite::Psi, &ev, |_| true)),
        ),
        (
            "brauer identities",
            Box::new(|| Outcome::suite(Suite::Brauer, &ev, |c| !is_wheel_trace(c))),
        ),
        (
            "wheel traces",
            Box::new(|| Outcome::suite(Suite::Brauer, &ev, is_wheel_trace).with(wheel_traces())),
        ),
        (
            "dimension table",
            Box::new(|| Outcome::suite(Suite::Table1, &ev, |_| true)),
        ),
        (
            "sigma ranks",
            Box::new(|| Outcome::suite(Suite::Sigma, &ev, |_| true)),
        ),
        (
            "degree one coefficients",
            Box::new(|| Outcome::suite(Suite::Coefficients, &ev, |_| true)),
        ),
        (
            "M properties and rank",
            Box::new(|| Outcome::suite(Suite::Mprops, &ev, |_| true)),
        ),
        (
            "w functional",
            Box::new(|| Outcome::suite(Suite::WRelation, &ev, |_| true)),
        ),
        (
            "property suites",
            Box::new(|| Outcome::suite(Suite::Axioms, &ev, |_| true)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let tag = if outcome.passed() { "PASS" } else { "FAIL" };
        println!("[{tag}] {} {name}", i + 1);
        if !outcome.passed() {
            failed += 1;
            for c in outcome.checks.iter().filter(|c| !c.passed) {
                println!(
                    "    {}: computed {} expected {}",
                    c.name, c.computed, c.expected
                );
            }
        }
        eprintln!(
            "    {} checks in {:.1?}",
            outcome.checks.len(),
            start.elapsed()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
