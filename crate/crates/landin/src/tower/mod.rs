//! Higher-order evaluators, from continuation-passing style with a data
//! stack down to compositional evaluators in direct style.

pub mod cps;
pub mod direct;
mod value;

pub use value::{initial_env, Applicable, Computation, Dump, HoValue, Returned};

use crate::control::comp;
use crate::outcome::Run;
use crate::syntax::Program;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Evaluator {
    /// Two layered continuations, a data stack, callee-save environments.
    Cps2Stack,
    /// Two layered continuations, no data stack, caller-save environments.
    Cps2,
    /// Direct style over the dump.
    DsDump,
    /// Direct style over both continuations.
    DsFull,
    /// [`Evaluator::DsFull`] with functions as host functions.
    Compositional,
    /// A caller-save dump of the same type as the control continuation.
    Cps2Alt,
    /// Direct style over the control continuation of [`Evaluator::Cps2Alt`].
    DsAlt,
    /// [`Evaluator::DsAlt`] with functions as host functions.
    CompositionalAlt,
    /// Tagged results sent to the dump, with J restricted to function
    /// bodies.
    Cps2Burge,
}

impl Evaluator {
    pub const ALL: [Evaluator; 9] = [
        Evaluator::Cps2Stack,
        Evaluator::Cps2,
        Evaluator::DsDump,
        Evaluator::DsFull,
        Evaluator::Compositional,
        Evaluator::Cps2Alt,
        Evaluator::DsAlt,
        Evaluator::CompositionalAlt,
        Evaluator::Cps2Burge,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Evaluator::Cps2Stack => "cps2-stack",
            Evaluator::Cps2 => "cps2",
            Evaluator::DsDump => "ds-dump",
            Evaluator::DsFull => "ds-full",
            Evaluator::Compositional => "compositional",
            Evaluator::Cps2Alt => "cps2-alt",
            Evaluator::DsAlt => "ds-alt",
            Evaluator::CompositionalAlt => "compositional-alt",
            Evaluator::Cps2Burge => "cps2-burge",
        }
    }

    pub fn from_id(id: &str) -> Option<Evaluator> {
        Evaluator::ALL.into_iter().find(|e| e.id() == id)
    }

    /// The computation denoted by the program.
    pub fn denote(self, p: &Program) -> Computation {
        match self {
            Evaluator::Cps2Stack => cps::stack::evaluate(p),
            Evaluator::Cps2 => cps::two_layer::evaluate(p),
            Evaluator::DsDump => direct::implicit_dump::evaluate(p),
            Evaluator::DsFull => direct::two_level::evaluate(p),
            Evaluator::Compositional => direct::compositional::evaluate(p),
            Evaluator::Cps2Alt => cps::same_type::evaluate(p),
            Evaluator::DsAlt => direct::caller_save_dump::evaluate(p),
            Evaluator::CompositionalAlt => direct::compositional_caller_save::evaluate(p),
            Evaluator::Cps2Burge => cps::stack::evaluate_burge(p),
        }
    }

    pub fn run(self, p: &Program, fuel: u64) -> Run<HoValue> {
        comp::run(self.denote(p), fuel)
    }
}
