//! The calculus with a control context and a dump. A function call resets
//! the control context and pushes the old one on the dump; J captures the
//! dump.

use std::rc::Rc;

use super::{
    contract_common, initial_subst, plug_frames, shape, Calculus, Closure, DecStep, Decomposition,
    Frame, Frames, Redex, Shape, Subst, Value,
};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Program, Term};

/// A stack of control contexts.
#[derive(Clone, PartialEq, Default)]
pub struct Dump(pub List<Frames<Dump>>);

impl std::fmt::Debug for Dump {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

pub type Val = Value<Dump>;
pub type Clo = Closure<Dump>;

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Ctxs {
    pub c1: Frames<Dump>,
    pub c2: Dump,
}

#[derive(Clone)]
pub enum State {
    Clos(Clo, Ctxs),
    Cont(Ctxs, Val),
    Dump(Dump, Val),
}

#[derive(Clone, Copy, Debug, Default)]
pub struct TwoLayer;

impl Calculus for TwoLayer {
    type K = Dump;
    type Ctxs = Ctxs;
    type State = State;

    fn id(&self) -> &'static str {
        "rs-lrhoj"
    }

    fn empty(&self) -> Ctxs {
        Ctxs::default()
    }

    fn initial(&self, p: &Program) -> Clo {
        Closure::Sub(p.term().clone(), initial_subst())
    }

    fn plug(&self, c: Clo, x: &Ctxs) -> Clo {
        let mut c = plug_frames(c, &x.c1);
        for c1 in x.c2.0.iter() {
            c = plug_frames(Closure::boundary(c), c1);
        }
        c
    }

    fn contract(&self, r: &Redex<Dump>, x: &Ctxs) -> Result<(Clo, Ctxs), StuckReason> {
        contract_common(
            r,
            x,
            |_, body, s| {
                let callee = Ctxs {
                    c1: List::nil(),
                    c2: Dump(x.c2.0.push(x.c1.clone())),
                };
                (Closure::Sub(body.clone(), s), callee)
            },
            |d| Ctxs {
                c1: List::nil(),
                c2: d.clone(),
            },
            |_| Ok(Closure::Ctx(x.c2.clone())),
        )
    }

    fn start(&self, c: Clo, x: Ctxs) -> State {
        State::Clos(c, x)
    }

    fn dec_step(&self, s: State) -> DecStep<State, Dump, Ctxs> {
        DecStep::Next(match s {
            State::Clos(c, x) => match shape(c) {
                Shape::Value(v) => State::Cont(x, v),
                Shape::Redex(r) => return DecStep::Done(Decomposition::Dec(r, x)),
                Shape::Comp(c0, c1) => State::Clos(
                    c1,
                    Ctxs {
                        c1: x.c1.push(Frame::Operand(c0)),
                        c2: x.c2,
                    },
                ),
                Shape::Boundary(c) => State::Clos(
                    c,
                    Ctxs {
                        c1: List::nil(),
                        c2: Dump(x.c2.0.push(x.c1)),
                    },
                ),
            },
            State::Cont(x, v) => match x.c1.uncons() {
                None => State::Dump(x.c2, v),
                Some((Frame::Operand(c0), c1)) => State::Clos(
                    c0.clone(),
                    Ctxs {
                        c1: c1.push(Frame::Operator(v)),
                        c2: x.c2,
                    },
                ),
                Some((Frame::Operator(v1), c1)) => {
                    return DecStep::Done(Decomposition::Dec(
                        Redex::App(v, v1.clone()),
                        Ctxs { c1, c2: x.c2 },
                    ))
                }
                Some((Frame::Delim, c1)) => State::Cont(Ctxs { c1, c2: x.c2 }, v),
            },
            State::Dump(d, v) => match d.0.uncons() {
                None => return DecStep::Done(Decomposition::Val(v)),
                Some((c1, c2)) => State::Cont(
                    Ctxs {
                        c1: c1.clone(),
                        c2: Dump(c2),
                    },
                    v,
                ),
            },
        })
    }

    fn describe_state(&self, s: &State) -> TraceLine {
        let (tag, focus, c1, c2) = match s {
            State::Clos(c, x) => ("eval", c.to_string(), x.c1.len(), x.c2.0.len()),
            State::Cont(x, v) => ("cont", v.to_string(), x.c1.len(), x.c2.0.len()),
            State::Dump(d, v) => ("dump", v.to_string(), 0, d.0.len()),
        };
        TraceLine {
            tag,
            focus,
            ctx_depth: c1,
            dump_depth: c2,
        }
    }

    fn depths(&self, x: &Ctxs) -> (usize, usize) {
        (x.c1.len(), x.c2.0.len())
    }

    fn focus(&self, s: &State) -> Option<(Clo, Ctxs)> {
        match s {
            State::Clos(c, x) => Some((c.clone(), x.clone())),
            _ => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Subst<Dump>, Ctxs),
    Apply(Val, Val, Ctxs),
    Cont(Ctxs, Val),
    Dump(Dump, Val),
}

/// The fused machine after compressing corridor transitions and opening
/// closures.
#[derive(Clone, Copy, Debug, Default)]
pub struct Compressed;

impl Machine for Compressed {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config::Eval(p.term().clone(), initial_subst(), Ctxs::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, x) => {
                let cont = |v| Config::Cont(x.clone(), v);
                match &**t {
                    Term::Lit(n) => cont(Value::Lit(*n)),
                    Term::Var(y) => match s.lookup(y) {
                        Ok(v) => cont(v.clone()),
                        Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                    },
                    Term::Lam(..) => cont(Value::Lam(t.clone(), s.clone())),
                    Term::App(t0, t1) => Config::Eval(
                        t1.clone(),
                        s.clone(),
                        Ctxs {
                            c1: x.c1.push(Frame::Operand(Closure::Sub(t0.clone(), s.clone()))),
                            c2: x.c2.clone(),
                        },
                    ),
                    Term::J => cont(Value::Ctx(x.c2.clone())),
                }
            }
            Config::Apply(v0, v1, x) => match v0 {
                Value::Succ => match v1 {
                    Value::Lit(n) => Config::Cont(x.clone(), Value::Lit(n.wrapping_add(1))),
                    _ => return Step::Stuck(StuckReason::SuccNonInteger),
                },
                Value::Lam(t, s) => match &**t {
                    Term::Lam(y, body) => Config::Eval(
                        body.clone(),
                        s.extend(y.clone(), v1.clone()),
                        Ctxs {
                            c1: List::nil(),
                            c2: Dump(x.c2.0.push(x.c1.clone())),
                        },
                    ),
                    _ => return Step::Stuck(StuckReason::Malformed),
                },
                Value::Ctx(d) => Config::Cont(x.clone(), Value::Sa(d.clone(), Rc::new(v1.clone()))),
                Value::Sa(d, v) => Config::Apply(
                    (**v).clone(),
                    v1.clone(),
                    Ctxs {
                        c1: List::nil(),
                        c2: d.clone(),
                    },
                ),
                Value::Lit(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
            Config::Cont(x, v) => match x.c1.uncons() {
                None => Config::Dump(x.c2.clone(), v.clone()),
                Some((Frame::Operand(Closure::Sub(t, s)), c1)) => Config::Eval(
                    t.clone(),
                    s.clone(),
                    Ctxs {
                        c1: c1.push(Frame::Operator(v.clone())),
                        c2: x.c2.clone(),
                    },
                ),
                Some((Frame::Operator(v1), c1)) => Config::Apply(
                    v.clone(),
                    v1.clone(),
                    Ctxs {
                        c1,
                        c2: x.c2.clone(),
                    },
                ),
                Some(_) => return Step::Stuck(StuckReason::Malformed),
            },
            Config::Dump(d, v) => match d.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((c1, c2)) => Config::Cont(
                    Ctxs {
                        c1: c1.clone(),
                        c2: Dump(c2),
                    },
                    v.clone(),
                ),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        let (tag, focus, c1, c2) = match cfg {
            Config::Eval(t, _, x) => ("eval", t.to_string(), x.c1.len(), x.c2.0.len()),
            Config::Apply(v, _, x) => ("apply", v.to_string(), x.c1.len(), x.c2.0.len()),
            Config::Cont(x, v) => ("cont", v.to_string(), x.c1.len(), x.c2.0.len()),
            Config::Dump(d, v) => ("dump", v.to_string(), 0, d.0.len()),
        };
        TraceLine {
            tag,
            focus,
            ctx_depth: c1,
            dump_depth: c2,
        }
    }
}
