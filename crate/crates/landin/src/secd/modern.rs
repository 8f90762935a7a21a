//! The SECD machine in eval/apply/cont/dump form, with the data stack
//! folded into a control context and the dump a stack of control contexts.

use std::rc::Rc;

use super::value::{initial_env, succ, Value};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

pub type Val = Value<Dump>;

#[derive(Clone, Debug)]
pub enum Frame {
    /// The operand is being evaluated; the operator term waits with its
    /// environment.
    OperandHole(Rc<Term>, Env<Val>),
    /// The operator is being evaluated; the operand value waits.
    OperatorHole(Val),
}

pub type Ctx = List<Frame>;

/// A stack of control contexts.
#[derive(Clone, Debug, Default)]
pub struct Dump(pub List<Ctx>);

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Env<Val>, Ctx, Dump),
    Apply(Val, Val, Ctx, Dump),
    Cont(Ctx, Val, Dump),
    Dump(Dump, Val),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Modern;

impl Machine for Modern {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config::Eval(p.term().clone(), initial_env(), List::nil(), Dump::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, c1, c2) => {
                let cont = |v| Config::Cont(c1.clone(), v, c2.clone());
                match &**t {
                    Term::Lit(n) => cont(Value::Int(*n)),
                    Term::Var(x) => match s.lookup(x) {
                        Ok(v) => cont(v.clone()),
                        Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                    },
                    Term::Lam(x, b) => cont(Value::closure(s, x, b)),
                    Term::App(t0, t1) => Config::Eval(
                        t1.clone(),
                        s.clone(),
                        c1.push(Frame::OperandHole(t0.clone(), s.clone())),
                        c2.clone(),
                    ),
                    Term::J => cont(Value::StateAppender(c2.clone())),
                }
            }
            Config::Cont(c1, v, c2) => match c1.uncons() {
                None => Config::Dump(c2.clone(), v.clone()),
                Some((Frame::OperandHole(t, s), c1)) => Config::Eval(
                    t.clone(),
                    s.clone(),
                    c1.push(Frame::OperatorHole(v.clone())),
                    c2.clone(),
                ),
                Some((Frame::OperatorHole(v1), c1)) => {
                    Config::Apply(v.clone(), v1.clone(), c1, c2.clone())
                }
            },
            Config::Dump(c2, v) => match c2.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((c1, c2)) => Config::Cont(c1.clone(), v.clone(), Dump(c2)),
            },
            Config::Apply(v0, v1, c1, c2) => match v0 {
                Value::Succ => match succ(v1) {
                    Ok(v) => Config::Cont(c1.clone(), v, c2.clone()),
                    Err(r) => return Step::Stuck(r),
                },
                Value::FunClo(s, x, t) => Config::Eval(
                    t.clone(),
                    s.extend(x.clone(), v1.clone()),
                    List::nil(),
                    Dump(c2.0.push(c1.clone())),
                ),
                Value::StateAppender(d) => Config::Cont(
                    c1.clone(),
                    Value::PgmClo(Rc::new(v1.clone()), d.clone()),
                    c2.clone(),
                ),
                Value::PgmClo(v, d) => Config::Apply((**v).clone(), v1.clone(), List::nil(), d.clone()),
                Value::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        match cfg {
            Config::Eval(t, _, c1, c2) => TraceLine {
                tag: "eval",
                focus: t.to_string(),
                ctx_depth: c1.len(),
                dump_depth: c2.0.len(),
            },
            Config::Apply(v0, _, c1, c2) => TraceLine {
                tag: "apply",
                focus: v0.to_string(),
                ctx_depth: c1.len(),
                dump_depth: c2.0.len(),
            },
            Config::Cont(c1, v, c2) => TraceLine {
                tag: "cont",
                focus: v.to_string(),
                ctx_depth: c1.len(),
                dump_depth: c2.0.len(),
            },
            Config::Dump(c2, v) => TraceLine {
                tag: "dump",
                focus: v.to_string(),
                ctx_depth: 0,
                dump_depth: c2.0.len(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{run, trace_lines};
    use crate::outcome::Outcome;
    use crate::syntax::parse_program;

    #[test]
    fn literal_trace_has_three_configurations() {
        let (lines, out) = trace_lines(&Modern, &parse_program("4").unwrap(), 100);
        let tags: Vec<_> = lines.iter().map(|l| l.tag).collect();
        assert_eq!(tags, ["eval", "cont", "dump"]);
        assert_eq!(lines[0].to_string(), "eval | 4 | 0 | 0");
        assert!(matches!(out, Outcome::Final(Value::Int(4))));
    }

    #[test]
    fn omega_exhausts_fuel() {
        let p = parse_program("((lam x (x x)) (lam x (x x)))").unwrap();
        let r = run(&Modern, &p, 1000);
        assert!(matches!(r.outcome, Outcome::OutOfFuel(1000)));
    }
}
