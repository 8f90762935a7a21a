//! The calculus with a single context in which every function call leaves
//! a delimiter. J captures the context up to the most recent one.

use std::rc::Rc;

use super::{
    contract_common, initial_subst, plug_frames, shape, Calculus, Closure, DecStep, Decomposition,
    Frame, Frames, Redex, Shape, Subst, Value,
};
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Program, Term};

#[derive(Clone, PartialEq, Default)]
pub struct Ctx(pub Frames<Ctx>);

impl std::fmt::Debug for Ctx {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

impl Ctx {
    fn push(&self, f: Frame<Ctx>) -> Ctx {
        Ctx(self.0.push(f))
    }

    /// The context outside the innermost delimiter.
    pub fn previous(&self) -> Option<Ctx> {
        let mut rest = self.0.clone();
        while let Some((f, tail)) = rest.uncons() {
            if matches!(f, Frame::Delim) {
                return Some(Ctx(tail));
            }
            rest = tail;
        }
        None
    }

    fn delimiters(&self) -> usize {
        self.0.iter().filter(|f| matches!(f, Frame::Delim)).count()
    }
}

pub type Val = Value<Ctx>;
pub type Clo = Closure<Ctx>;

#[derive(Clone)]
pub enum State {
    Clos(Clo, Ctx),
    Cont(Ctx, Val),
}

#[derive(Clone, Copy, Debug)]
pub struct MarkedCalc {
    /// Start with the program under one boundary, so that a top-level J
    /// captures the empty context.
    pub delimited_start: bool,
}

impl MarkedCalc {
    pub const DELIMITED: MarkedCalc = MarkedCalc {
        delimited_start: true,
    };
    pub const UNDELIMITED: MarkedCalc = MarkedCalc {
        delimited_start: false,
    };
}

impl Calculus for MarkedCalc {
    type K = Ctx;
    type Ctxs = Ctx;
    type State = State;

    fn id(&self) -> &'static str {
        "rs-marked"
    }

    fn empty(&self) -> Ctx {
        Ctx::default()
    }

    fn initial(&self, p: &Program) -> Clo {
        let c = Closure::Sub(p.term().clone(), initial_subst());
        if self.delimited_start {
            Closure::boundary(c)
        } else {
            c
        }
    }

    fn plug(&self, c: Clo, e: &Ctx) -> Clo {
        plug_frames(c, &e.0)
    }

    fn contract(&self, r: &Redex<Ctx>, e: &Ctx) -> Result<(Clo, Ctx), StuckReason> {
        contract_common(
            r,
            e,
            |_, body, s| (Closure::boundary(Closure::Sub(body.clone(), s)), e.clone()),
            |e| e.clone(),
            |_| {
                e.previous()
                    .map(Closure::Ctx)
                    .ok_or(StuckReason::NoDelimiter)
            },
        )
    }

    fn start(&self, c: Clo, e: Ctx) -> State {
        State::Clos(c, e)
    }

    fn dec_step(&self, s: State) -> DecStep<State, Ctx, Ctx> {
        DecStep::Next(match s {
            State::Clos(c, e) => match shape(c) {
                Shape::Value(v) => State::Cont(e, v),
                Shape::Redex(r) => return DecStep::Done(Decomposition::Dec(r, e)),
                Shape::Comp(c0, c1) => State::Clos(c1, e.push(Frame::Operand(c0))),
                Shape::Boundary(c) => State::Clos(c, e.push(Frame::Delim)),
            },
            State::Cont(e, v) => match e.0.uncons() {
                None => return DecStep::Done(Decomposition::Val(v)),
                Some((Frame::Operand(c0), rest)) => {
                    State::Clos(c0.clone(), Ctx(rest.push(Frame::Operator(v))))
                }
                Some((Frame::Operator(v1), rest)) => {
                    return DecStep::Done(Decomposition::Dec(Redex::App(v, v1.clone()), Ctx(rest)))
                }
                Some((Frame::Delim, rest)) => State::Cont(Ctx(rest), v),
            },
        })
    }

    fn describe_state(&self, s: &State) -> TraceLine {
        let (tag, focus, e) = match s {
            State::Clos(c, e) => ("eval", c.to_string(), e),
            State::Cont(e, v) => ("cont", v.to_string(), e),
        };
        line(tag, focus, e)
    }

    fn depths(&self, e: &Ctx) -> (usize, usize) {
        (e.0.len(), e.delimiters())
    }

    fn focus(&self, s: &State) -> Option<(Clo, Ctx)> {
        match s {
            State::Clos(c, e) => Some((c.clone(), e.clone())),
            State::Cont(..) => None,
        }
    }
}

fn line(tag: &'static str, focus: String, e: &Ctx) -> TraceLine {
    TraceLine {
        tag,
        focus,
        ctx_depth: e.0.len(),
        dump_depth: e.delimiters(),
    }
}

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Subst<Ctx>, Ctx),
    Apply(Val, Val, Ctx),
    Cont(Ctx, Val),
}

/// The compressed machine with opened closures.
#[derive(Clone, Copy, Debug)]
pub struct Compressed {
    pub delimited_start: bool,
}

impl Machine for Compressed {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        let e = if self.delimited_start {
            Ctx::default().push(Frame::Delim)
        } else {
            Ctx::default()
        };
        Config::Eval(p.term().clone(), initial_subst(), e)
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, e) => match &**t {
                Term::Lit(n) => Config::Cont(e.clone(), Value::Lit(*n)),
                Term::Var(y) => match s.lookup(y) {
                    Ok(v) => Config::Cont(e.clone(), v.clone()),
                    Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(..) => Config::Cont(e.clone(), Value::Lam(t.clone(), s.clone())),
                Term::App(t0, t1) => Config::Eval(
                    t1.clone(),
                    s.clone(),
                    e.push(Frame::Operand(Closure::Sub(t0.clone(), s.clone()))),
                ),
                Term::J => match e.previous() {
                    Some(p) => Config::Cont(e.clone(), Value::Ctx(p)),
                    None => return Step::Stuck(StuckReason::NoDelimiter),
                },
            },
            Config::Apply(v0, v1, e) => match v0 {
                Value::Succ => match v1 {
                    Value::Lit(n) => Config::Cont(e.clone(), Value::Lit(n.wrapping_add(1))),
                    _ => return Step::Stuck(StuckReason::SuccNonInteger),
                },
                Value::Lam(t, s) => match &**t {
                    Term::Lam(y, body) => Config::Eval(
                        body.clone(),
                        s.extend(y.clone(), v1.clone()),
                        e.push(Frame::Delim),
                    ),
                    _ => return Step::Stuck(StuckReason::Malformed),
                },
                Value::Ctx(p) => Config::Cont(e.clone(), Value::Sa(p.clone(), Rc::new(v1.clone()))),
                Value::Sa(p, v) => Config::Apply((**v).clone(), v1.clone(), p.clone()),
                Value::Lit(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
            Config::Cont(e, v) => match e.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((Frame::Operand(Closure::Sub(t, s)), rest)) => Config::Eval(
                    t.clone(),
                    s.clone(),
                    Ctx(rest.push(Frame::Operator(v.clone()))),
                ),
                Some((Frame::Operator(v1), rest)) => Config::Apply(v.clone(), v1.clone(), Ctx(rest)),
                Some((Frame::Delim, rest)) => Config::Cont(Ctx(rest), v.clone()),
                Some(_) => return Step::Stuck(StuckReason::Malformed),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        match cfg {
            Config::Eval(t, _, e) => line("eval", t.to_string(), e),
            Config::Apply(v, _, e) => line("apply", v.to_string(), e),
            Config::Cont(e, v) => line("cont", v.to_string(), e),
        }
    }
}
