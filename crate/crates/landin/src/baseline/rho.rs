//! The λρ̂ calculus with literals and succ, reduced left to right, and the
//! machine obtained from it by refocusing, fusion and compression.

use std::fmt;
use std::rc::Rc;

use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::rs::{
    contract_common, initial_subst, shape, Calculus, Closure, DecStep, Decomposition, Redex, Shape,
    Subst, Value,
};
use crate::syntax::{Program, Term};

pub type Clo = Closure<()>;
pub type Val = Value<()>;

#[derive(Clone, PartialEq)]
pub enum Frame {
    /// `C[[ ] c1]`: the operator is in the hole.
    Arg(Clo),
    /// `C[v0 [ ]]`: the operand is in the hole.
    Fun(Val),
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Frame::Arg(c) => write!(f, "(_ {c})"),
            Frame::Fun(v) => write!(f, "({v} _)"),
        }
    }
}

#[derive(Clone, PartialEq, Default)]
pub struct Ctx(pub List<Frame>);

impl fmt::Debug for Ctx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

#[derive(Clone)]
pub enum State {
    Clos(Clo, Ctx),
    Cont(Ctx, Val),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct Rho;

impl Calculus for Rho {
    type K = ();
    type Ctxs = Ctx;
    type State = State;

    fn id(&self) -> &'static str {
        "rs-rho"
    }

    fn empty(&self) -> Ctx {
        Ctx::default()
    }

    fn initial(&self, p: &Program) -> Clo {
        Closure::Sub(p.term().clone(), initial_subst())
    }

    fn plug(&self, mut c: Clo, x: &Ctx) -> Clo {
        for f in x.0.iter() {
            c = match f {
                Frame::Arg(c1) => Closure::comp(c, c1.clone()),
                Frame::Fun(v0) => Closure::comp(v0.up(), c),
            };
        }
        c
    }

    fn contract(&self, r: &Redex<()>, x: &Ctx) -> Result<(Clo, Ctx), StuckReason> {
        contract_common(
            r,
            x,
            |_, body, s| (Closure::Sub(body.clone(), s), x.clone()),
            |_| x.clone(),
            |_| Err(StuckReason::Malformed),
        )
    }

    fn start(&self, c: Clo, x: Ctx) -> State {
        State::Clos(c, x)
    }

    fn dec_step(&self, s: State) -> DecStep<State, (), Ctx> {
        DecStep::Next(match s {
            State::Clos(c, x) => match shape(c) {
                Shape::Value(v) => State::Cont(x, v),
                Shape::Redex(r) => return DecStep::Done(Decomposition::Dec(r, x)),
                Shape::Comp(c0, c1) => State::Clos(c0, Ctx(x.0.push(Frame::Arg(c1)))),
                Shape::Boundary(c) => State::Clos(c, x),
            },
            State::Cont(x, v) => match x.0.uncons() {
                None => return DecStep::Done(Decomposition::Val(v)),
                Some((Frame::Arg(c1), rest)) => State::Clos(c1.clone(), Ctx(rest.push(Frame::Fun(v)))),
                Some((Frame::Fun(v0), rest)) => {
                    return DecStep::Done(Decomposition::Dec(Redex::App(v0.clone(), v), Ctx(rest)))
                }
            },
        })
    }

    fn describe_state(&self, s: &State) -> TraceLine {
        match s {
            State::Clos(c, x) => line("eval", c.to_string(), x),
            State::Cont(x, v) => line("cont", v.to_string(), x),
        }
    }

    fn depths(&self, x: &Ctx) -> (usize, usize) {
        (x.0.len(), 0)
    }

    fn focus(&self, s: &State) -> Option<(Clo, Ctx)> {
        match s {
            State::Clos(c, x) => Some((c.clone(), x.clone())),
            State::Cont(..) => None,
        }
    }
}

fn line(tag: &'static str, focus: String, x: &Ctx) -> TraceLine {
    TraceLine {
        tag,
        focus,
        ctx_depth: x.0.len(),
        dump_depth: 0,
    }
}

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Subst<()>, Ctx),
    Cont(Ctx, Val),
}

/// The fused machine after compressing corridor transitions and opening
/// closures.
#[derive(Clone, Copy, Debug, Default)]
pub struct Compressed;

impl Machine for Compressed {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config::Eval(p.term().clone(), initial_subst(), Ctx::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, x) => match &**t {
                Term::Lit(n) => Config::Cont(x.clone(), Value::Lit(*n)),
                Term::Var(y) => match s.lookup(y) {
                    Ok(v) => Config::Cont(x.clone(), v.clone()),
                    Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(..) => Config::Cont(x.clone(), Value::Lam(t.clone(), s.clone())),
                Term::App(t0, t1) => Config::Eval(
                    t0.clone(),
                    s.clone(),
                    Ctx(x.0.push(Frame::Arg(Closure::Sub(t1.clone(), s.clone())))),
                ),
                Term::J => return Step::Stuck(StuckReason::Malformed),
            },
            Config::Cont(x, v) => match x.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((Frame::Arg(Closure::Sub(t, s)), rest)) => {
                    Config::Eval(t.clone(), s.clone(), Ctx(rest.push(Frame::Fun(v.clone()))))
                }
                Some((Frame::Arg(_), _)) => return Step::Stuck(StuckReason::Malformed),
                Some((Frame::Fun(f), rest)) => match f {
                    Value::Lam(t, s) => match &**t {
                        Term::Lam(y, body) => Config::Eval(body.clone(), s.extend(y.clone(), v.clone()), Ctx(rest)),
                        _ => return Step::Stuck(StuckReason::Malformed),
                    },
                    Value::Succ => match v {
                        Value::Lit(n) => Config::Cont(Ctx(rest), Value::Lit(n.wrapping_add(1))),
                        _ => return Step::Stuck(StuckReason::SuccNonInteger),
                    },
                    _ => return Step::Stuck(StuckReason::ApplyNonFunction),
                },
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        match cfg {
            Config::Eval(t, _, x) => line("eval", t.to_string(), x),
            Config::Cont(x, v) => line("cont", v.to_string(), x),
        }
    }
}
