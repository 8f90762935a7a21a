//! The machine with a caller-save dump register: the dump is a snapshot of
//! the caller's control context, kept alongside it rather than threaded
//! through returns.

use std::rc::Rc;

use super::value::{initial_env, succ, Value};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

pub type Val = Value<Ctx>;

#[derive(Clone, Debug)]
pub enum Frame {
    /// Waiting for the operand; the operator term, its environment and the
    /// dump in force are saved.
    Operand(Rc<Term>, Env<Val>, Ctx),
    Operator(Val),
}

#[derive(Clone, Debug, Default)]
pub struct Ctx(pub List<Frame>);

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Env<Val>, Ctx, Ctx),
    Apply(Val, Val, Ctx),
    Cont(Ctx, Val),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct CallerSave;

impl Machine for CallerSave {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config::Eval(p.term().clone(), initial_env(), Ctx::default(), Ctx::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, e, c, d) => match &**t {
                Term::Lit(n) => Config::Cont(c.clone(), Value::Int(*n)),
                Term::Var(x) => match e.lookup(x) {
                    Ok(v) => Config::Cont(c.clone(), v.clone()),
                    Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(x, b) => Config::Cont(c.clone(), Value::closure(e, x, b)),
                Term::App(t0, t1) => Config::Eval(
                    t1.clone(),
                    e.clone(),
                    Ctx(c.0.push(Frame::Operand(t0.clone(), e.clone(), d.clone()))),
                    d.clone(),
                ),
                Term::J => Config::Cont(c.clone(), Value::StateAppender(d.clone())),
            },
            Config::Cont(c, v) => match c.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((Frame::Operand(t0, e, d), c)) => Config::Eval(
                    t0.clone(),
                    e.clone(),
                    Ctx(c.push(Frame::Operator(v.clone()))),
                    d.clone(),
                ),
                Some((Frame::Operator(v1), c)) => Config::Apply(v.clone(), v1.clone(), Ctx(c)),
            },
            Config::Apply(v0, v1, c) => match v0 {
                Value::Succ => match succ(v1) {
                    Ok(v) => Config::Cont(c.clone(), v),
                    Err(r) => return Step::Stuck(r),
                },
                Value::FunClo(e, x, t) => {
                    Config::Eval(t.clone(), e.extend(x.clone(), v1.clone()), c.clone(), c.clone())
                }
                Value::StateAppender(d) => {
                    Config::Cont(c.clone(), Value::PgmClo(Rc::new(v1.clone()), d.clone()))
                }
                Value::PgmClo(v, d) => Config::Apply((**v).clone(), v1.clone(), d.clone()),
                Value::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        match cfg {
            Config::Eval(t, _, c, d) => TraceLine {
                tag: "eval",
                focus: t.to_string(),
                ctx_depth: c.0.len(),
                dump_depth: d.0.len(),
            },
            Config::Apply(v, _, c) => TraceLine {
                tag: "apply",
                focus: v.to_string(),
                ctx_depth: c.0.len(),
                dump_depth: 0,
            },
            Config::Cont(c, v) => TraceLine {
                tag: "cont",
                focus: v.to_string(),
                ctx_depth: c.0.len(),
                dump_depth: 0,
            },
        }
    }
}
