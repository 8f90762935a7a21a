//! First-order transition systems and the generic driver loop.

use std::fmt;

use crate::outcome::{Outcome, StuckReason};
use crate::syntax::Program;

pub enum Step<C, V> {
    Next(C),
    Done(V),
    Stuck(StuckReason),
}

/// One line of a serialized trace.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceLine {
    pub tag: &'static str,
    pub focus: String,
    pub ctx_depth: usize,
    pub dump_depth: usize,
}

impl fmt::Display for TraceLine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} | {} | {} | {}",
            self.tag, self.focus, self.ctx_depth, self.dump_depth
        )
    }
}

pub trait Machine {
    type Config: Clone;
    type Value;

    fn inject(&self, p: &Program) -> Self::Config;
    fn step(&self, c: &Self::Config) -> Step<Self::Config, Self::Value>;
    fn describe(&self, c: &Self::Config) -> TraceLine;
}

/// What a completed run left behind.
pub struct Trace<C, V> {
    pub configs: Vec<C>,
    pub outcome: Outcome<V>,
    pub steps: u64,
}

/// Iterates `step` at most `fuel` times. A `Done` transition counts as a
/// step; becoming stuck does not.
pub fn run<M: Machine>(m: &M, p: &Program, fuel: u64) -> crate::outcome::Run<M::Value> {
    run_from(m, m.inject(p), fuel)
}

pub fn run_from<M: Machine>(m: &M, mut c: M::Config, fuel: u64) -> crate::outcome::Run<M::Value> {
    for steps in 0..fuel {
        match m.step(&c) {
            Step::Next(n) => c = n,
            Step::Done(v) => {
                return crate::outcome::Run {
                    outcome: Outcome::Final(v),
                    steps: steps + 1,
                }
            }
            Step::Stuck(r) => {
                return crate::outcome::Run {
                    outcome: Outcome::Stuck(r),
                    steps,
                }
            }
        }
    }
    crate::outcome::Run {
        outcome: Outcome::OutOfFuel(fuel),
        steps: fuel,
    }
}

/// Like [`run`], keeping every configuration visited.
pub fn trace<M: Machine>(m: &M, p: &Program, fuel: u64) -> Trace<M::Config, M::Value> {
    let mut c = m.inject(p);
    let mut configs = Vec::new();
    for steps in 0..fuel {
        configs.push(c.clone());
        match m.step(&c) {
            Step::Next(n) => c = n,
            Step::Done(v) => {
                return Trace {
                    configs,
                    outcome: Outcome::Final(v),
                    steps: steps + 1,
                }
            }
            Step::Stuck(r) => {
                return Trace {
                    configs,
                    outcome: Outcome::Stuck(r),
                    steps,
                }
            }
        }
    }
    Trace {
        configs,
        outcome: Outcome::OutOfFuel(fuel),
        steps: fuel,
    }
}

/// The serialized trace: one line per configuration.
pub fn trace_lines<M: Machine>(m: &M, p: &Program, fuel: u64) -> (Vec<TraceLine>, Outcome<M::Value>) {
    let t = trace(m, p, fuel);
    (t.configs.iter().map(|c| m.describe(c)).collect(), t.outcome)
}
