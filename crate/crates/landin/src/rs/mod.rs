//! Reduction semantics for applicative expressions with J, and the
//! machines obtained from them by refocusing, fusion and compression.
//!
//! Three calculi share the syntax of closures and differ in their contexts:
//!
//! * [`two_layer`]: a control context and a dump of control contexts,
//!   separated by boundaries `<c>`;
//! * [`marked`]: a single context with delimiters, scanned by J;
//! * [`inherited`]: a single context, with J bound in the environment of
//!   every function body.
//!
//! Each calculus supplies a [`Calculus`] instance: its contexts, plugging,
//! contraction and the decomposition transitions. The generic machines
//! [`Rb`], [`Refocused`] and [`Fused`] are built on top of that; the
//! compressed machines are written out per calculus.

use std::fmt;
use std::rc::Rc;

use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::{Observable, StuckReason};
use crate::syntax::{name, Env, Name, Program, Term};

pub mod inherited;
pub mod marked;
pub mod two_layer;

pub type Subst<K> = Env<Value<K>>;

/// Closures, parameterized by the representation `K` of captured contexts.
#[derive(Clone, PartialEq)]
pub enum Closure<K> {
    Lit(i64),
    Succ,
    Sub(Rc<Term>, Subst<K>),
    Comp(Rc<Closure<K>>, Rc<Closure<K>>),
    Ctx(K),
    Sa(K, Rc<Value<K>>),
    Boundary(Rc<Closure<K>>),
}

#[derive(Clone, PartialEq)]
pub enum Value<K> {
    Lit(i64),
    Succ,
    /// `(lam x t)[s]`; the term is always a `Term::Lam`.
    Lam(Rc<Term>, Subst<K>),
    Ctx(K),
    Sa(K, Rc<Value<K>>),
}

impl<K: Clone> Value<K> {
    /// The coercion of a value into a closure.
    pub fn up(&self) -> Closure<K> {
        match self {
            Value::Lit(n) => Closure::Lit(*n),
            Value::Succ => Closure::Succ,
            Value::Lam(t, s) => Closure::Sub(t.clone(), s.clone()),
            Value::Ctx(k) => Closure::Ctx(k.clone()),
            Value::Sa(k, v) => Closure::Sa(k.clone(), v.clone()),
        }
    }
}

impl<K: Clone> Closure<K> {
    pub fn comp(c0: Closure<K>, c1: Closure<K>) -> Self {
        Closure::Comp(Rc::new(c0), Rc::new(c1))
    }

    pub fn boundary(c: Closure<K>) -> Self {
        Closure::Boundary(Rc::new(c))
    }

    /// The value this closure denotes syntactically, if it is one.
    pub fn as_value(&self) -> Option<Value<K>> {
        match self {
            Closure::Lit(n) => Some(Value::Lit(*n)),
            Closure::Succ => Some(Value::Succ),
            Closure::Sub(t, s) if matches!(**t, Term::Lam(..)) => {
                Some(Value::Lam(t.clone(), s.clone()))
            }
            Closure::Ctx(k) => Some(Value::Ctx(k.clone())),
            Closure::Sa(k, v) => Some(Value::Sa(k.clone(), v.clone())),
            _ => None,
        }
    }

    /// Erases what decomposition does not preserve: a literal under a
    /// substitution becomes the literal, and a boundary around something
    /// that normalizes to a value disappears.
    pub fn normalize(&self) -> Closure<K> {
        match self {
            Closure::Sub(t, _) => match **t {
                Term::Lit(n) => Closure::Lit(n),
                _ => self.clone(),
            },
            Closure::Comp(c0, c1) => Closure::comp(c0.normalize(), c1.normalize()),
            Closure::Boundary(c) => {
                let c = c.normalize();
                if c.as_value().is_some() {
                    c
                } else {
                    Closure::boundary(c)
                }
            }
            _ => self.clone(),
        }
    }
}

/// Potential redexes. The term-shaped ones keep their substitution so that
/// they can be plugged back.
#[derive(Clone, PartialEq)]
pub enum Redex<K> {
    Var(Rc<Term>, Subst<K>),
    Prop(Rc<Term>, Subst<K>),
    J(Rc<Term>, Subst<K>),
    App(Value<K>, Value<K>),
}

impl<K: Clone> Redex<K> {
    pub fn closure(&self) -> Closure<K> {
        match self {
            Redex::Var(t, s) | Redex::Prop(t, s) | Redex::J(t, s) => Closure::Sub(t.clone(), s.clone()),
            Redex::App(v0, v1) => Closure::comp(v0.up(), v1.up()),
        }
    }
}

/// Context frames. Only the marked calculus builds `Delim`.
#[derive(Clone, PartialEq)]
pub enum Frame<K> {
    /// `C[c0 [ ]]`: the operand is in the hole.
    Operand(Closure<K>),
    /// `C[[ ] v1]`: the operator is in the hole.
    Operator(Value<K>),
    Delim,
}

pub type Frames<K> = List<Frame<K>>;

/// Fills a list of frames from the innermost outward. A delimiter becomes
/// a boundary.
pub fn plug_frames<K: Clone>(mut c: Closure<K>, frames: &Frames<K>) -> Closure<K> {
    for f in frames.iter() {
        c = match f {
            Frame::Operand(c0) => Closure::comp(c0.clone(), c),
            Frame::Operator(v1) => Closure::comp(c, v1.up()),
            Frame::Delim => Closure::boundary(c),
        };
    }
    c
}

#[derive(Clone, PartialEq)]
pub enum Decomposition<K, X> {
    Val(Value<K>),
    Dec(Redex<K>, X),
}

/// One transition of a decomposition machine.
pub enum DecStep<S, K, X> {
    Next(S),
    Done(Decomposition<K, X>),
}

pub trait Calculus: Copy {
    /// Captured contexts.
    type K: Clone + PartialEq + fmt::Debug;
    /// The context bundle a redex is found in.
    type Ctxs: Clone + PartialEq + fmt::Debug;
    /// Intermediate states of decomposition.
    type State: Clone;

    fn id(&self) -> &'static str;
    fn empty(&self) -> Self::Ctxs;
    fn initial(&self, p: &Program) -> Closure<Self::K>;
    fn plug(&self, c: Closure<Self::K>, x: &Self::Ctxs) -> Closure<Self::K>;
    fn contract(
        &self,
        r: &Redex<Self::K>,
        x: &Self::Ctxs,
    ) -> Result<(Closure<Self::K>, Self::Ctxs), StuckReason>;
    /// The state decomposing `c` in `x`.
    fn start(&self, c: Closure<Self::K>, x: Self::Ctxs) -> Self::State;
    fn dec_step(&self, s: Self::State) -> DecStep<Self::State, Self::K, Self::Ctxs>;
    fn describe_state(&self, s: &Self::State) -> TraceLine;
    /// Context and dump depth, for traces.
    fn depths(&self, x: &Self::Ctxs) -> (usize, usize);
    /// A state, if it decomposes a closure in a context.
    fn focus(&self, s: &Self::State) -> Option<(Closure<Self::K>, Self::Ctxs)>;
}

type Dec<C> = Decomposition<<C as Calculus>::K, <C as Calculus>::Ctxs>;

/// Continues decomposing `c` in `x`.
pub fn refocus<C: Calculus>(calc: &C, c: Closure<C::K>, x: C::Ctxs) -> Dec<C> {
    let mut s = calc.start(c, x);
    loop {
        match calc.dec_step(s) {
            DecStep::Next(n) => s = n,
            DecStep::Done(d) => return d,
        }
    }
}

pub fn decompose<C: Calculus>(calc: &C, c: Closure<C::K>) -> Dec<C> {
    refocus(calc, c, calc.empty())
}

/// One step of reduction; a value reduces to itself.
pub fn reduce_once<C: Calculus>(calc: &C, c: Closure<C::K>) -> Result<Closure<C::K>, StuckReason> {
    match decompose(calc, c) {
        Decomposition::Val(v) => Ok(v.up()),
        Decomposition::Dec(r, x) => {
            let (c, x) = calc.contract(&r, &x)?;
            Ok(calc.plug(c, &x))
        }
    }
}

/// Reduction-based evaluation: decompose, contract, plug. Each step is one
/// contraction; recognizing a value is the final step.
#[derive(Clone, Copy, Debug)]
pub struct Rb<C>(pub C);

impl<C: Calculus> Machine for Rb<C> {
    type Config = Closure<C::K>;
    type Value = Value<C::K>;

    fn inject(&self, p: &Program) -> Self::Config {
        self.0.initial(p)
    }

    fn step(&self, c: &Self::Config) -> Step<Self::Config, Self::Value> {
        match decompose(&self.0, c.clone()) {
            Decomposition::Val(v) => Step::Done(v),
            Decomposition::Dec(r, x) => match self.0.contract(&r, &x) {
                Ok((c, x)) => Step::Next(self.0.plug(c, &x)),
                Err(e) => Step::Stuck(e),
            },
        }
    }

    fn describe(&self, c: &Self::Config) -> TraceLine {
        let (ctx_depth, dump_depth) = match decompose(&self.0, c.clone()) {
            Decomposition::Val(_) => (0, 0),
            Decomposition::Dec(_, x) => self.0.depths(&x),
        };
        TraceLine {
            tag: "reduce",
            focus: c.to_string(),
            ctx_depth,
            dump_depth,
        }
    }
}

/// Reduction-free evaluation: after a contraction, decomposition resumes
/// in the current context instead of plugging and starting over.
#[derive(Clone, Copy, Debug)]
pub struct Refocused<C>(pub C);

impl<C: Calculus> Machine for Refocused<C> {
    type Config = Dec<C>;
    type Value = Value<C::K>;

    fn inject(&self, p: &Program) -> Self::Config {
        decompose(&self.0, self.0.initial(p))
    }

    fn step(&self, d: &Self::Config) -> Step<Self::Config, Self::Value> {
        match d {
            Decomposition::Val(v) => Step::Done(v.clone()),
            Decomposition::Dec(r, x) => match self.0.contract(r, x) {
                Ok((c, x)) => Step::Next(refocus(&self.0, c, x)),
                Err(e) => Step::Stuck(e),
            },
        }
    }

    fn describe(&self, d: &Self::Config) -> TraceLine {
        match d {
            Decomposition::Val(v) => TraceLine {
                tag: "value",
                focus: v.to_string(),
                ctx_depth: 0,
                dump_depth: 0,
            },
            Decomposition::Dec(r, x) => {
                let (ctx_depth, dump_depth) = self.0.depths(x);
                TraceLine {
                    tag: "dec",
                    focus: r.closure().to_string(),
                    ctx_depth,
                    dump_depth,
                }
            }
        }
    }
}

#[derive(Clone)]
pub enum FusedConfig<C: Calculus> {
    Dec(C::State),
    Iter(Redex<C::K>, C::Ctxs),
}

/// The refocused evaluator with contraction fused into the decomposition
/// machine: every decomposition transition and every contraction is one
/// machine transition.
#[derive(Clone, Copy, Debug)]
pub struct Fused<C>(pub C);

impl<C: Calculus> Machine for Fused<C> {
    type Config = FusedConfig<C>;
    type Value = Value<C::K>;

    fn inject(&self, p: &Program) -> Self::Config {
        FusedConfig::Dec(self.0.start(self.0.initial(p), self.0.empty()))
    }

    fn step(&self, cfg: &Self::Config) -> Step<Self::Config, Self::Value> {
        match cfg {
            FusedConfig::Dec(s) => match self.0.dec_step(s.clone()) {
                DecStep::Next(s) => Step::Next(FusedConfig::Dec(s)),
                DecStep::Done(Decomposition::Val(v)) => Step::Done(v),
                DecStep::Done(Decomposition::Dec(r, x)) => Step::Next(FusedConfig::Iter(r, x)),
            },
            FusedConfig::Iter(r, x) => match self.0.contract(r, x) {
                Ok((c, x)) => Step::Next(FusedConfig::Dec(self.0.start(c, x))),
                Err(e) => Step::Stuck(e),
            },
        }
    }

    fn describe(&self, cfg: &Self::Config) -> TraceLine {
        match cfg {
            FusedConfig::Dec(s) => self.0.describe_state(s),
            FusedConfig::Iter(r, x) => {
                let (ctx_depth, dump_depth) = self.0.depths(x);
                TraceLine {
                    tag: "iter",
                    focus: r.closure().to_string(),
                    ctx_depth,
                    dump_depth,
                }
            }
        }
    }
}

/// Contracts the redexes every calculus shares. `beta` handles function
/// closures, `reinstate` program closures and `j` the J redex.
pub(crate) fn contract_common<K: Clone, X: Clone>(
    r: &Redex<K>,
    x: &X,
    beta: impl FnOnce(&Name, &Rc<Term>, Subst<K>) -> (Closure<K>, X),
    reinstate: impl FnOnce(&K) -> X,
    j: impl FnOnce(&Subst<K>) -> Result<Closure<K>, StuckReason>,
) -> Result<(Closure<K>, X), StuckReason> {
    match r {
        Redex::Var(t, s) => match &**t {
            Term::Var(y) => match s.lookup(y) {
                Ok(v) => Ok((v.up(), x.clone())),
                Err(_) => Err(StuckReason::UnboundVariable),
            },
            _ => Err(StuckReason::Malformed),
        },
        Redex::Prop(t, s) => match &**t {
            Term::App(t0, t1) => Ok((
                Closure::comp(Closure::Sub(t0.clone(), s.clone()), Closure::Sub(t1.clone(), s.clone())),
                x.clone(),
            )),
            _ => Err(StuckReason::Malformed),
        },
        Redex::J(_, s) => Ok((j(s)?, x.clone())),
        Redex::App(v0, v1) => match v0 {
            Value::Succ => match v1 {
                Value::Lit(n) => Ok((Closure::Lit(n.wrapping_add(1)), x.clone())),
                _ => Err(StuckReason::SuccNonInteger),
            },
            Value::Lam(t, s) => match &**t {
                Term::Lam(y, body) => Ok(beta(y, body, s.extend(y.clone(), v1.clone()))),
                _ => Err(StuckReason::Malformed),
            },
            Value::Ctx(k) => Ok((Closure::Sa(k.clone(), Rc::new(v1.clone())), x.clone())),
            Value::Sa(k, v) => Ok((Closure::comp(v.up(), v1.up()), reinstate(k))),
            Value::Lit(_) => Err(StuckReason::ApplyNonFunction),
        },
    }
}

/// The closure-level decomposition clauses every calculus shares: the
/// value a closure is, or the redex it is, or the two halves of a
/// composition.
pub(crate) enum Shape<K> {
    Value(Value<K>),
    Redex(Redex<K>),
    Comp(Closure<K>, Closure<K>),
    Boundary(Closure<K>),
}

pub(crate) fn shape<K: Clone>(c: Closure<K>) -> Shape<K> {
    match c {
        Closure::Lit(n) => Shape::Value(Value::Lit(n)),
        Closure::Succ => Shape::Value(Value::Succ),
        Closure::Sub(t, s) => match &*t {
            Term::Lit(n) => Shape::Value(Value::Lit(*n)),
            Term::Lam(..) => Shape::Value(Value::Lam(t, s)),
            Term::Var(_) => Shape::Redex(Redex::Var(t, s)),
            Term::App(..) => Shape::Redex(Redex::Prop(t, s)),
            Term::J => Shape::Redex(Redex::J(t, s)),
        },
        Closure::Comp(c0, c1) => Shape::Comp((*c0).clone(), (*c1).clone()),
        Closure::Ctx(k) => Shape::Value(Value::Ctx(k)),
        Closure::Sa(k, v) => Shape::Value(Value::Sa(k, v)),
        Closure::Boundary(c) => Shape::Boundary((*c).clone()),
    }
}

pub(crate) fn initial_subst<K>() -> Subst<K> {
    Env::empty().extend(name("succ"), Value::Succ)
}

impl<K> Observable for Value<K> {
    fn as_int(&self) -> Option<i64> {
        match self {
            Value::Lit(n) => Some(*n),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl<K> fmt::Display for Value<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Lit(n) => write!(f, "{n}"),
            Value::Succ => f.write_str("succ"),
            Value::Lam(t, _) => match &**t {
                Term::Lam(x, b) => write!(f, "#closure(lam {x} {b})"),
                t => write!(f, "#closure({t})"),
            },
            Value::Ctx(_) => f.write_str("#state-appender"),
            Value::Sa(_, v) => write!(f, "#program-closure({v})"),
        }
    }
}

impl<K> fmt::Debug for Value<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K> fmt::Display for Closure<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Closure::Lit(n) => write!(f, "{n}"),
            Closure::Succ => f.write_str("succ"),
            Closure::Sub(t, s) => write!(f, "{t}[s{}]", s.len()),
            Closure::Comp(c0, c1) => write!(f, "comp({c0}, {c1})"),
            Closure::Ctx(_) => f.write_str("#state-appender"),
            Closure::Sa(_, v) => write!(f, "#program-closure({v})"),
            Closure::Boundary(c) => write!(f, "<{c}>"),
        }
    }
}

impl<K> fmt::Debug for Closure<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<K> fmt::Debug for Redex<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Redex::Var(t, _) | Redex::Prop(t, _) | Redex::J(t, _) => write!(f, "{t}[s]"),
            Redex::App(v0, v1) => write!(f, "comp({v0:?}, {v1:?})"),
        }
    }
}

impl<K> fmt::Debug for Frame<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Frame::Operand(c) => write!(f, "([{c}] _)"),
            Frame::Operator(v) => write!(f, "(_ {v})"),
            Frame::Delim => f.write_str("<>"),
        }
    }
}

impl<K, X: fmt::Debug> fmt::Debug for Decomposition<K, X> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Decomposition::Val(v) => write!(f, "VAL({v})"),
            Decomposition::Dec(r, x) => write!(f, "DEC({r:?}, {x:?})"),
        }
    }
}

/// The closures in decomposition states visited by the fused machine on
/// `p`, each with its context, at most `limit` of them.
pub fn reachable<C: Calculus>(calc: &C, p: &Program, fuel: u64, limit: usize) -> Vec<(Closure<C::K>, C::Ctxs)> {
    let m = Fused(*calc);
    let mut out = Vec::new();
    let mut cfg = m.inject(p);
    for _ in 0..fuel {
        if out.len() >= limit {
            break;
        }
        if let FusedConfig::Dec(s) = &cfg {
            if let Some(focus) = calc.focus(s) {
                out.push(focus);
            }
        }
        match m.step(&cfg) {
            Step::Next(n) => cfg = n,
            _ => break,
        }
    }
    out
}

/// A failed law, with the closure and context it failed on.
#[derive(Debug)]
pub struct LawFailure {
    pub law: &'static str,
    pub sample: String,
}

/// `decompose(plug(c, x)) = refocus(c, x)`.
pub fn check_refocusing<C: Calculus>(calc: &C, c: &Closure<C::K>, x: &C::Ctxs) -> Result<(), LawFailure> {
    let whole = calc.plug(c.clone(), x);
    if decompose(calc, whole) == refocus(calc, c.clone(), x.clone()) {
        Ok(())
    } else {
        Err(LawFailure {
            law: "refocusing",
            sample: format!("{c} in {x:?}"),
        })
    }
}

/// Decomposing the plugged closure and plugging the result back yields the
/// same closure, up to [`Closure::normalize`]; and decomposition yields a
/// value exactly on closures that normalize to values.
pub fn check_round_trip<C: Calculus>(calc: &C, c: &Closure<C::K>, x: &C::Ctxs) -> Result<(), LawFailure> {
    let whole = calc.plug(c.clone(), x);
    let ok = match decompose(calc, whole.clone()) {
        Decomposition::Val(v) => whole.normalize() == v.up(),
        Decomposition::Dec(r, y) => {
            whole.normalize().as_value().is_none()
                && calc.plug(r.closure(), &y).normalize() == whole.normalize()
        }
    };
    if ok {
        Ok(())
    } else {
        Err(LawFailure {
            law: "round trip",
            sample: format!("{whole}"),
        })
    }
}

#[cfg(test)]
mod tests;
