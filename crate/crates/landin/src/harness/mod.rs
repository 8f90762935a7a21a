//! The engine registry, the corpus, cross-engine comparison, lockstep
//! checking, random testing, and the traced Fibonacci functions.

pub mod compare;
pub mod corpus;
pub mod fib;
pub mod random;
pub mod registry;

use std::fmt;

pub use compare::{compare, judge, lockstep_check, Camp, CompareReport, LockstepError, LockstepReport, Ratio, Row};
pub use corpus::{corpus, Entry, Subset};
pub use fib::{fib_cps_trace, fib_def_trace, FibTrace};
pub use random::{random_closed_term, shrink, JPolicy};
pub use registry::{engine, registry, Engine, Family};

use crate::outcome::Observation;
use crate::rs::inherited::InheritedCalc;
use crate::rs::marked::MarkedCalc;
use crate::rs::two_layer::TwoLayer;
use crate::rs::{check_refocusing, check_round_trip, reachable, Calculus, LawFailure};
use crate::syntax::Program;

pub const DEFAULT_FUEL: u64 = 1_000_000;

/// Fuzzed programs are small, so a divergent one is recognized early.
pub const FUZZ_FUEL: u64 = 10_000;
pub const FUZZ_MAX_SIZE: usize = 24;

/// A program on which some family disagreed internally, with a shrunk
/// version that still disagrees.
#[derive(Clone, Debug)]
pub struct Counterexample {
    pub original: Program,
    pub minimized: Program,
    pub report: CompareReport,
}

#[derive(Clone, Debug)]
pub struct FuzzReport {
    pub policy: JPolicy,
    pub cases: usize,
    /// How many programs every family evaluated to a known observation.
    pub terminating: usize,
    pub counterexamples: Vec<Counterexample>,
}

fn case_seed(seed: u64, policy: JPolicy, i: usize) -> u64 {
    let tag = JPolicy::ALL.iter().position(|&p| p == policy).unwrap() as u64;
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add(tag << 40)
        .wrapping_add(i as u64)
}

/// Generates `cases` programs under `policy` and compares every engine on
/// each, shrinking any program on which they dissent.
pub fn fuzz(seed: u64, cases: usize, policy: JPolicy, fuel: u64) -> FuzzReport {
    let engines = registry();
    let run_all = |p: &Program| {
        let class = Subset::of(p.term());
        let rows = engines
            .iter()
            .filter(|e| e.accepts(class))
            .map(|e| {
                let r = e.run(p, fuel);
                Row {
                    engine: e.id.clone(),
                    family: e.family,
                    observation: r.observe(),
                    outcome: r.outcome,
                    steps: r.steps,
                }
            })
            .collect();
        judge(&p.to_string(), class, rows)
    };
    let mut report = FuzzReport {
        policy,
        cases,
        terminating: 0,
        counterexamples: Vec::new(),
    };
    for i in 0..cases {
        let s = case_seed(seed, policy, i);
        let size = 1 + (s % FUZZ_MAX_SIZE as u64) as usize;
        let p = random_closed_term(s, size, policy);
        let r = run_all(&p);
        if r.camps.iter().all(|c| c.observation.is_some()) {
            report.terminating += 1;
        }
        if !r.agree {
            let minimized = shrink(&p, policy, 500, |q| !run_all(q).agree);
            report.counterexamples.push(Counterexample {
                report: run_all(&minimized),
                original: p,
                minimized,
            });
        }
    }
    report
}

/// The outcome of one named check.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for CheckResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "FAIL" };
        write!(f, "{verdict}\t{}\t{}", self.name, self.detail)
    }
}

fn result(name: &str, failures: &[String], ok_detail: String) -> CheckResult {
    CheckResult {
        name: name.to_string(),
        passed: failures.is_empty(),
        detail: if failures.is_empty() {
            ok_detail
        } else {
            failures.join("; ")
        },
    }
}

/// Refocusing and round-trip failures on the states reachable from the
/// corpus, and the number of states sampled.
pub fn law_samples<C: Calculus>(calc: &C, per_program: usize) -> (usize, Vec<LawFailure>) {
    let mut n = 0;
    let mut failures = Vec::new();
    for e in corpus() {
        for (c, x) in reachable(calc, &e.program, 10_000, per_program) {
            n += 1;
            failures.extend(check_refocusing(calc, &c, &x).err());
            failures.extend(check_round_trip(calc, &c, &x).err());
        }
    }
    (n, failures)
}

/// The invariant suite: corpus agreement, lockstep, the correspondence
/// between derived and hand-written machines, the reduction-semantics laws,
/// the Fibonacci traces, and fuzzing under each J policy.
pub fn check(seed: u64, cases: usize) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let corpus = corpus();

    let mut failures = Vec::new();
    for e in &corpus {
        let r = compare(e.id, &e.program, DEFAULT_FUEL, None);
        if !r.agree {
            failures.push(format!("{}: {}", e.id, r.dissent.join(" ")));
        }
    }
    out.push(result("corpus-agreement", &failures, format!("{} programs", corpus.len())));

    let mut failures = Vec::new();
    let mut checked = 0;
    for (m1, m2, ratio) in [
        ("secd-felleisen", "secd-disentangled", Ratio::new(2, 1)),
        ("secd-modern", "rs-lrhoj-compressed", Ratio::ONE),
        ("marked-context", "rs-marked-compressed", Ratio::ONE),
        ("cek-j", "rs-inherited-compressed", Ratio::ONE),
    ] {
        for e in &corpus {
            let r = lockstep_check(m1, m2, &e.program, DEFAULT_FUEL, ratio).expect("registered engines");
            // Stuck runs are excluded: a stuck configuration is detected
            // one transitory hop late by the disentangled machine.
            if !matches!(r.observations.0, Observation::Num(_) | Observation::Procedure) {
                continue;
            }
            checked += 1;
            if !r.pass {
                failures.push(format!("{m1}/{m2} on {}: {:?}", e.id, r.steps));
            }
        }
    }
    out.push(result("lockstep", &failures, format!("{checked} runs reaching a value")));

    let mut failures = Vec::new();
    let mut samples = 0;
    let (n, f) = law_samples(&TwoLayer, 200);
    samples += n;
    failures.extend(f.iter().map(|l| format!("{}: {l:?}", TwoLayer.id())));
    let (n, f) = law_samples(&MarkedCalc::DELIMITED, 200);
    samples += n;
    failures.extend(f.iter().map(|l| format!("{}: {l:?}", MarkedCalc::DELIMITED.id())));
    let (n, f) = law_samples(&InheritedCalc::WITH_TOP_LEVEL_J, 200);
    samples += n;
    failures.extend(f.iter().map(|l| format!("{}: {l:?}", InheritedCalc::WITH_TOP_LEVEL_J.id())));
    out.push(result("reduction-laws", &failures, format!("{samples} reachable states")));

    let failures: Vec<String> = (0..=15)
        .filter(|&n| fib_cps_trace(n) != fib_def_trace(n))
        .map(|n| format!("n={n}"))
        .collect();
    out.push(result("fib-traces", &failures, "n=0..15".to_string()));

    for policy in JPolicy::ALL {
        let r = fuzz(seed, cases, policy, FUZZ_FUEL);
        let failures: Vec<String> = r
            .counterexamples
            .iter()
            .map(|c| format!("{} (from {}): {}", c.minimized, c.original, c.report.dissent.join(" ")))
            .collect();
        out.push(result(
            &format!("fuzz-{policy}"),
            &failures,
            format!("{} programs, {} terminating", r.cases, r.terminating),
        ));
    }
    out
}

/// The family camps of a report, rendered for display.
pub fn describe_camps(r: &CompareReport) -> String {
    r.camps
        .iter()
        .map(|c| {
            let o = c.observation.map_or("unknown".to_string(), |o: Observation| o.to_string());
            format!("{}={o}", c.family)
        })
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fuzzing_a_few_programs_finds_no_dissent() {
        for policy in JPolicy::ALL {
            let r = fuzz(7, 40, policy, FUZZ_FUEL);
            assert!(r.counterexamples.is_empty(), "{policy}: {:?}", r.counterexamples);
        }
    }

    #[test]
    fn case_seeds_differ_across_policies() {
        assert_ne!(case_seed(1, JPolicy::None, 0), case_seed(1, JPolicy::Anywhere, 0));
        assert_ne!(case_seed(1, JPolicy::None, 0), case_seed(1, JPolicy::None, 1));
    }
}
