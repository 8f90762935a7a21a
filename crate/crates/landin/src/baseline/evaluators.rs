//! Higher-order evaluators for the λ-calculus with literals and succ,
//! evaluating operators before operands. They run on [`Comp`] so that
//! deep object-level recursion does not consume host stack; every call to
//! `eval` costs one step.

use std::fmt;
use std::rc::Rc;

use crate::control::comp::{pure, run, step, stuck, Comp};
use crate::list::List;
use crate::outcome::{Observable, Outcome, Run, StuckReason};
use crate::syntax::{name, Env, Program, Term};

/// Values whose functions are host closures of type `A -> Comp<A>`, for an
/// answer type `A` chosen per evaluator.
pub enum Fun<A> {
    Int(i64),
    Fun(Rc<dyn Fn(A) -> Comp<A>>),
}

impl<A> Clone for Fun<A> {
    fn clone(&self) -> Self {
        match self {
            Fun::Int(n) => Fun::Int(*n),
            Fun::Fun(f) => Fun::Fun(f.clone()),
        }
    }
}

impl<A> Observable for Fun<A> {
    fn as_int(&self) -> Option<i64> {
        match self {
            Fun::Int(n) => Some(*n),
            Fun::Fun(_) => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl<A> fmt::Display for Fun<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Fun::Int(n) => write!(f, "{n}"),
            Fun::Fun(_) => f.write_str("#function"),
        }
    }
}

fn unbound<A>(t: &Term) -> Comp<A> {
    stuck(if *t == Term::J {
        StuckReason::Malformed
    } else {
        StuckReason::UnboundVariable
    })
}

/// The environment is saved implicitly, by the context of the operator's
/// evaluation.
pub mod caller_save {
    use super::*;

    pub type V = Fun<Val>;

    /// The answer type is the value type itself.
    #[derive(Clone)]
    pub struct Val(pub V);

    fn eval(t: Rc<Term>, e: Env<V>) -> Comp<Val> {
        step(move || match &*t {
            Term::Lit(n) => pure(Val(Fun::Int(*n))),
            Term::Var(x) => match e.lookup(x) {
                Ok(v) => pure(Val(v.clone())),
                Err(_) => stuck(StuckReason::UnboundVariable),
            },
            Term::Lam(x, b) => {
                let (x, b) = (x.clone(), b.clone());
                pure(Val(Fun::Fun(Rc::new(move |Val(v)| eval(b.clone(), e.extend(x.clone(), v))))))
            }
            Term::App(t0, t1) => {
                let t1 = t1.clone();
                eval(t0.clone(), e.clone()).bind(move |Val(f)| match f {
                    Fun::Fun(f) => eval(t1.clone(), e.clone()).bind(move |v| f(v)),
                    Fun::Int(_) => stuck(StuckReason::ApplyNonFunction),
                })
            }
            Term::J => unbound(&t),
        })
    }

    fn succ() -> V {
        Fun::Fun(Rc::new(|Val(v)| match v {
            Fun::Int(n) => pure(Val(Fun::Int(n.wrapping_add(1)))),
            Fun::Fun(_) => stuck(StuckReason::SuccNonInteger),
        }))
    }

    pub fn evaluate(p: &Program, fuel: u64) -> Run<V> {
        let e = Env::empty().extend(name("succ"), succ());
        let r = run(eval(p.term().clone(), e), fuel);
        Run {
            outcome: r.outcome.map(|Val(v)| v),
            steps: r.steps,
        }
    }
}

/// Every evaluation returns its environment along with its value; a
/// function restores its caller's environment when it returns.
pub mod callee_save {
    use super::*;

    pub type V = Fun<Answer>;

    #[derive(Clone)]
    pub struct Answer(pub V, pub Env<V>);

    fn eval(t: Rc<Term>, e: Env<V>) -> Comp<Answer> {
        step(move || match &*t {
            Term::Lit(n) => pure(Answer(Fun::Int(*n), e)),
            Term::Var(x) => match e.lookup(x) {
                Ok(v) => pure(Answer(v.clone(), e.clone())),
                Err(_) => stuck(StuckReason::UnboundVariable),
            },
            Term::Lam(x, b) => {
                let (x, b, lexical) = (x.clone(), b.clone(), e.clone());
                let f = Fun::Fun(Rc::new(move |Answer(v0, e0)| {
                    eval(b.clone(), lexical.extend(x.clone(), v0))
                        .bind(move |Answer(v1, _)| pure(Answer(v1, e0.clone())))
                }));
                pure(Answer(f, e))
            }
            Term::App(t0, t1) => {
                let t1 = t1.clone();
                eval(t0.clone(), e).bind(move |Answer(f, e0)| match f {
                    Fun::Fun(f) => eval(t1.clone(), e0).bind(move |a| f(a)),
                    Fun::Int(_) => stuck(StuckReason::ApplyNonFunction),
                })
            }
            Term::J => unbound(&t),
        })
    }

    fn succ() -> V {
        Fun::Fun(Rc::new(|Answer(v, e)| match v {
            Fun::Int(n) => pure(Answer(Fun::Int(n.wrapping_add(1)), e)),
            Fun::Fun(_) => stuck(StuckReason::SuccNonInteger),
        }))
    }

    pub fn evaluate(p: &Program, fuel: u64) -> Run<V> {
        let e = Env::empty().extend(name("succ"), succ());
        let r = run(eval(p.term().clone(), e), fuel);
        Run {
            outcome: r.outcome.map(|Answer(v, _)| v),
            steps: r.steps,
        }
    }
}

/// Intermediate results live on a local data stack; a function finds its
/// argument on top of its caller's stack and leaves its result there.
pub mod stack {
    use super::*;

    pub type V = Fun<Stack>;

    #[derive(Clone)]
    pub struct Stack(pub List<V>);

    impl Stack {
        fn push(&self, v: V) -> Stack {
            Stack(self.0.push(v))
        }
    }

    fn eval(t: Rc<Term>, s: Stack, e: Env<V>) -> Comp<Stack> {
        step(move || match &*t {
            Term::Lit(n) => pure(s.push(Fun::Int(*n))),
            Term::Var(x) => match e.lookup(x) {
                Ok(v) => pure(s.push(v.clone())),
                Err(_) => stuck(StuckReason::UnboundVariable),
            },
            Term::Lam(x, b) => {
                let (x, b, lexical) = (x.clone(), b.clone(), e.clone());
                let f = Fun::Fun(Rc::new(move |Stack(st): Stack| match st.uncons() {
                    Some((v0, s0)) => {
                        let s0 = Stack(s0);
                        eval(b.clone(), Stack(List::nil()), lexical.extend(x.clone(), v0.clone()))
                            .bind(move |Stack(r)| match r.head() {
                                Some(v1) => pure(s0.push(v1.clone())),
                                None => stuck(StuckReason::Malformed),
                            })
                    }
                    None => stuck(StuckReason::Malformed),
                }));
                pure(s.push(f))
            }
            Term::App(t0, t1) => {
                let t1 = t1.clone();
                let e1 = e.clone();
                eval(t0.clone(), s, e).bind(move |s0| {
                    eval(t1.clone(), s0, e1.clone()).bind(|Stack(st)| {
                        let mut items = st.iter();
                        match (items.next(), items.next()) {
                            (Some(v), Some(Fun::Fun(f))) => {
                                let rest = st.tail().tail();
                                f(Stack(rest.push(v.clone())))
                            }
                            (Some(_), Some(Fun::Int(_))) => stuck(StuckReason::ApplyNonFunction),
                            _ => stuck(StuckReason::Malformed),
                        }
                    })
                })
            }
            Term::J => unbound(&t),
        })
    }

    fn succ() -> V {
        Fun::Fun(Rc::new(|Stack(st): Stack| match st.uncons() {
            Some((Fun::Int(n), s)) => pure(Stack(s.push(Fun::Int(n.wrapping_add(1))))),
            Some(_) => stuck(StuckReason::SuccNonInteger),
            None => stuck(StuckReason::Malformed),
        }))
    }

    pub fn evaluate(p: &Program, fuel: u64) -> Run<V> {
        let e = Env::empty().extend(name("succ"), succ());
        let r = run(eval(p.term().clone(), Stack(List::nil()), e), fuel);
        Run {
            outcome: match r.outcome {
                Outcome::Final(Stack(st)) => match st.head() {
                    Some(v) => Outcome::Final(v.clone()),
                    None => Outcome::Stuck(StuckReason::Malformed),
                },
                Outcome::Stuck(r) => Outcome::Stuck(r),
                Outcome::OutOfFuel(n) => Outcome::OutOfFuel(n),
            },
            steps: r.steps,
        }
    }
}
