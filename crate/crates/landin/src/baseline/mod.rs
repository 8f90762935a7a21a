//! Baseline evaluators and machines for the λ-calculus without J,
//! extended with literals and succ. All of them evaluate operators before
//! operands, unlike every other engine in the crate.

pub mod evaluators;
pub mod machines;
pub mod rho;

use crate::machine::run;
use crate::outcome::{Reported, Run};
use crate::rs::{Rb, Refocused};
use crate::syntax::Program;

pub use machines::callee_save::CekCalleeSave;
pub use machines::cek::Cek;
pub use machines::stack::CekStack;
pub use rho::Rho;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Baseline {
    EvalCallerSave,
    Cek,
    EvalCalleeSave,
    CekCalleeSave,
    EvalStack,
    CekStack,
    RsRho,
    RsRhoRefocused,
    RsRhoCompressed,
}

impl Baseline {
    pub const ALL: [Baseline; 9] = [
        Baseline::EvalCallerSave,
        Baseline::Cek,
        Baseline::EvalCalleeSave,
        Baseline::CekCalleeSave,
        Baseline::EvalStack,
        Baseline::CekStack,
        Baseline::RsRho,
        Baseline::RsRhoRefocused,
        Baseline::RsRhoCompressed,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Baseline::EvalCallerSave => "eval-caller-save",
            Baseline::Cek => "cek",
            Baseline::EvalCalleeSave => "eval-callee-save",
            Baseline::CekCalleeSave => "cek-callee-save",
            Baseline::EvalStack => "eval-stack",
            Baseline::CekStack => "cek-stack",
            Baseline::RsRho => "rs-rho",
            Baseline::RsRhoRefocused => "rs-rho-refocused",
            Baseline::RsRhoCompressed => "rs-rho-compressed",
        }
    }

    pub fn from_id(id: &str) -> Option<Baseline> {
        Baseline::ALL.into_iter().find(|b| b.id() == id)
    }

    pub fn run(self, p: &Program, fuel: u64) -> Run<Reported> {
        match self {
            Baseline::EvalCallerSave => evaluators::caller_save::evaluate(p, fuel).report(),
            Baseline::Cek => run(&Cek, p, fuel).report(),
            Baseline::EvalCalleeSave => evaluators::callee_save::evaluate(p, fuel).report(),
            Baseline::CekCalleeSave => run(&CekCalleeSave, p, fuel).report(),
            Baseline::EvalStack => evaluators::stack::evaluate(p, fuel).report(),
            Baseline::CekStack => run(&CekStack, p, fuel).report(),
            Baseline::RsRho => run(&Rb(Rho), p, fuel).report(),
            Baseline::RsRhoRefocused => run(&Refocused(Rho), p, fuel).report(),
            Baseline::RsRhoCompressed => run(&rho::Compressed, p, fuel).report(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{trace, Step};
    use crate::machine::Machine;
    use crate::outcome::{Observation, Outcome};
    use crate::rs::{check_refocusing, check_round_trip, reachable, Calculus, Decomposition, Redex, Value};
    use crate::syntax::parse_program;

    const PURE: &[&str] = &[
        "42",
        "((lam x x) 42)",
        "(succ (succ 3))",
        "(((lam x (lam y x)) 1) 2)",
        "((lam f (f (f 1))) (lam n (succ n)))",
        "((lam x (lam y y)) 0)",
        "((lam f ((lam g (g 3)) (lam y (f y)))) succ)",
        "((lam x (x x)) (lam y 7))",
        "(1 2)",
        "(succ (lam x x))",
        "(((lam a (lam b (lam c ((a b) c)))) (lam u (lam v (succ u)))) 10)",
    ];

    fn p(src: &str) -> Program {
        parse_program(src).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(Baseline::Cek.run(&p("((lam x x) 42)"), 100).outcome, Outcome::Final(Reported::Int(42)));
        assert_eq!(Baseline::EvalStack.run(&p("(succ (succ 3))"), 100).outcome, Outcome::Final(Reported::Int(5)));
        let omega = p("((lam x (x x)) (lam x (x x)))");
        assert_eq!(Baseline::RsRhoCompressed.run(&omega, 500).outcome, Outcome::OutOfFuel(500));
    }

    #[test]
    fn nine_way_agreement() {
        for src in PURE {
            let obs: Vec<Observation> = Baseline::ALL.iter().map(|b| b.run(&p(src), 100_000).observe()).collect();
            assert!(obs.windows(2).all(|w| w[0] == w[1]), "{src}: {obs:?}");
        }
    }

    #[test]
    fn compressed_rho_coincides_with_cek() {
        for src in PURE {
            let a = Baseline::RsRhoCompressed.run(&p(src), 100_000);
            let b = Baseline::Cek.run(&p(src), 100_000);
            assert_eq!(a, b, "{src}");
        }
    }

    /// Closure applications, counted as the β-contractions of the
    /// reduction-based evaluator.
    fn betas(src: &str) -> u64 {
        let m = Rb(Rho);
        let t = trace(&m, &p(src), 100_000);
        t.configs
            .iter()
            .filter(|c| {
                matches!(
                    crate::rs::decompose(&Rho, (*c).clone()),
                    Decomposition::Dec(Redex::App(Value::Lam(..), _), _)
                )
            })
            .count() as u64
    }

    #[test]
    fn callee_save_takes_one_extra_transition_per_application() {
        assert_eq!(Baseline::Cek.run(&p("((lam x x) 42)"), 100).steps, 7);
        assert_eq!(Baseline::CekCalleeSave.run(&p("((lam x x) 42)"), 100).steps, 8);
        for src in PURE {
            let cek = Baseline::Cek.run(&p(src), 100_000);
            if !matches!(cek.outcome, Outcome::Final(_)) {
                continue;
            }
            let callee = Baseline::CekCalleeSave.run(&p(src), 100_000).steps;
            assert_eq!(callee, cek.steps + betas(src), "{src}");
        }
    }

    #[test]
    fn rho_laws_on_reachable_states() {
        let mut n = 0;
        for src in PURE {
            for (c, x) in reachable(&Rho, &p(src), 10_000, 100) {
                check_refocusing(&Rho, &c, &x).unwrap();
                check_round_trip(&Rho, &c, &x).unwrap();
                n += 1;
            }
        }
        assert!(n > 100);
        assert_eq!(Rho.id(), "rs-rho");
    }

    #[test]
    fn stack_machine_restores_the_caller_stack() {
        let m = CekStack;
        let mut c = m.inject(&p("(succ ((lam x x) 1))"));
        let mut rets = 0;
        loop {
            if let machines::stack::Config::Cont(k, _) = &c {
                if matches!(k.head(), Some(machines::stack::Frame::Ret(_))) {
                    rets += 1;
                }
            }
            match m.step(&c) {
                Step::Next(n) => c = n,
                Step::Done(v) => {
                    assert_eq!(v.to_string(), "2");
                    break;
                }
                Step::Stuck(r) => panic!("{r}"),
            }
        }
        assert_eq!(rets, 1);
    }
}
