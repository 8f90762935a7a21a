//! The calculus without delimiters, in which applying a function closure
//! binds J in the body's environment to the context of the call.

use std::rc::Rc;

use super::{
    contract_common, initial_subst, plug_frames, shape, Calculus, Closure, DecStep, Decomposition,
    Frame, Frames, Redex, Shape, Subst, Value,
};
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{name, Program, Term};

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
}

pub type Val = Value<Ctx>;
pub type Clo = Closure<Ctx>;

#[derive(Clone)]
pub enum State {
    Clos(Clo, Ctx),
    Cont(Ctx, Val),
}

fn start_subst(top_level_j: bool) -> Subst<Ctx> {
    let s = initial_subst();
    if top_level_j {
        s.extend(name("J"), Value::Ctx(Ctx::default()))
    } else {
        s
    }
}

fn lookup_j(s: &Subst<Ctx>) -> Result<Val, StuckReason> {
    s.lookup("J").cloned().map_err(|_| StuckReason::JOutsideLambda)
}

#[derive(Clone, Copy, Debug)]
pub struct InheritedCalc {
    /// Bind J to the empty context in the initial substitution.
    pub top_level_j: bool,
}

impl InheritedCalc {
    pub const WITH_TOP_LEVEL_J: InheritedCalc = InheritedCalc { top_level_j: true };
    pub const WITHOUT_TOP_LEVEL_J: InheritedCalc = InheritedCalc { top_level_j: false };
}

impl Calculus for InheritedCalc {
    type K = Ctx;
    type Ctxs = Ctx;
    type State = State;

    fn id(&self) -> &'static str {
        "rs-inherited"
    }

    fn empty(&self) -> Ctx {
        Ctx::default()
    }

    fn initial(&self, p: &Program) -> Clo {
        Closure::Sub(p.term().clone(), start_subst(self.top_level_j))
    }

    fn plug(&self, c: Clo, e: &Ctx) -> Clo {
        plug_frames(c, &e.0)
    }

    fn contract(&self, r: &Redex<Ctx>, e: &Ctx) -> Result<(Clo, Ctx), StuckReason> {
        contract_common(
            r,
            e,
            |_, body, s| {
                let s = s.extend(name("J"), Value::Ctx(e.clone()));
                (Closure::Sub(body.clone(), s), e.clone())
            },
            |e| e.clone(),
            |s| Ok(lookup_j(s)?.up()),
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
                // Never built by this calculus.
                Shape::Boundary(c) => State::Clos(c, e),
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
        (e.0.len(), 0)
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
        dump_depth: 0,
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
    pub top_level_j: bool,
}

impl Machine for Compressed {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config::Eval(p.term().clone(), start_subst(self.top_level_j), Ctx::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, e) => match &**t {
                Term::Lit(n) => Config::Cont(e.clone(), Value::Lit(*n)),
                Term::Var(y) => match s.lookup(y) {
                    Ok(v) => Config::Cont(e.clone(), v.clone()),
                    Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::J => match lookup_j(s) {
                    Ok(v) => Config::Cont(e.clone(), v),
                    Err(r) => return Step::Stuck(r),
                },
                Term::Lam(..) => Config::Cont(e.clone(), Value::Lam(t.clone(), s.clone())),
                Term::App(t0, t1) => Config::Eval(
                    t1.clone(),
                    s.clone(),
                    e.push(Frame::Operand(Closure::Sub(t0.clone(), s.clone()))),
                ),
            },
            Config::Apply(v0, v1, e) => match v0 {
                Value::Succ => match v1 {
                    Value::Lit(n) => Config::Cont(e.clone(), Value::Lit(n.wrapping_add(1))),
                    _ => return Step::Stuck(StuckReason::SuccNonInteger),
                },
                Value::Lam(t, s) => match &**t {
                    Term::Lam(y, body) => Config::Eval(
                        body.clone(),
                        s.extend(y.clone(), v1.clone())
                            .extend(name("J"), Value::Ctx(e.clone())),
                        e.clone(),
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
