//! The direct-style evaluators. The dump, and in the fully direct-style
//! engines the control continuation too, are implicit: J captures them
//! with delimited-control operators.

use std::rc::Rc;

use super::value::{initial_env, succ, Applicable, Computation as C, Dump, HoValue as V};
use crate::control::comp::{callcc, pure, reset1, reset2, resume, shift1, shift2, step, stuck};
use crate::list::List;
use crate::control::Cont;
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

type E = Env<V>;

fn lookup(e: &E, x: &str) -> C {
    match e.lookup(x) {
        Ok(v) => pure(v.clone()),
        Err(_) => stuck(StuckReason::UnboundVariable),
    }
}

fn throw(d: &Dump, v: V) -> C {
    match d {
        Dump::Captured(k) => resume(k.clone(), v),
        _ => stuck(StuckReason::Malformed),
    }
}

fn captured(k: &Cont<V>) -> Dump {
    Dump::Captured(k.clone())
}

/// Direct style with respect to the dump, which the evaluator delimits;
/// the control continuation is still explicit.
pub mod implicit_dump {
    use super::*;

    fn eval(t: Rc<Term>, e: E, c: Applicable) -> C {
        step(move || match &*t {
            Term::Lit(n) => c(V::Int(*n)),
            Term::Var(x) => lookup(&e, x).bind(move |v| c(v)),
            Term::Lam(x, b) => c(V::FunClo(e.clone(), x.clone(), b.clone())),
            Term::App(t0, t1) => {
                let (t0, e0) = (t0.clone(), e.clone());
                let k: Applicable = Rc::new(move |v1| {
                    let c = c.clone();
                    eval(t0.clone(), e0.clone(), Rc::new(move |v0| apply(v0, v1.clone(), c.clone())))
                });
                eval(t1.clone(), e, k)
            }
            Term::J => shift1(move |d| {
                let d2 = d.clone();
                c(V::StateAppender(captured(&d))).bind(move |v| resume(d2.clone(), v))
            }),
        })
    }

    fn apply(v0: V, v1: V, c: Applicable) -> C {
        match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => c(v),
                Err(r) => stuck(r),
            },
            V::FunClo(e, x, t) => eval(t, e.extend(x, v1), Rc::new(pure)).bind(move |v| c(v)),
            V::StateAppender(d) => c(V::PgmClo(Rc::new(v1), d)),
            V::PgmClo(v, d) => shift1(move |_| {
                apply((*v).clone(), v1, Rc::new(pure)).bind(move |r| throw(&d, r))
            }),
            _ => stuck(StuckReason::ApplyNonFunction),
        }
    }

    pub fn evaluate(p: &Program) -> C {
        reset1(eval(p.term().clone(), initial_env(), Rc::new(pure)))
    }
}

/// Direct style with respect to both continuations: the control
/// continuation is delimited by `reset1` and the dump by `reset2`.
pub mod two_level {
    use super::*;

    fn eval(t: Rc<Term>, e: E) -> C {
        step(move || match &*t {
            Term::Lit(n) => pure(V::Int(*n)),
            Term::Var(x) => lookup(&e, x),
            Term::Lam(x, b) => pure(V::FunClo(e.clone(), x.clone(), b.clone())),
            Term::App(t0, t1) => {
                let t0 = t0.clone();
                eval(t1.clone(), e.clone()).bind(move |v1| {
                    eval(t0.clone(), e.clone()).bind(move |v0| apply(v0, v1.clone()))
                })
            }
            Term::J => shift1(|c| {
                shift2(move |d| {
                    let d2 = d.clone();
                    resume(c, V::StateAppender(captured(&d))).bind(move |v| resume(d2.clone(), v))
                })
            }),
        })
    }

    fn apply(v0: V, v1: V) -> C {
        match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => pure(v),
                Err(r) => stuck(r),
            },
            V::FunClo(e, x, t) => reset1(eval(t, e.extend(x, v1))),
            V::StateAppender(d) => pure(V::PgmClo(Rc::new(v1), d)),
            V::PgmClo(v, d) => shift1(move |_| {
                shift2(move |_| reset1(apply((*v).clone(), v1)).bind(move |r| throw(&d, r)))
            }),
            _ => stuck(StuckReason::ApplyNonFunction),
        }
    }

    pub fn evaluate(p: &Program) -> C {
        reset2(reset1(eval(p.term().clone(), initial_env())))
    }
}

fn apply_fun(v0: V, v1: V) -> C {
    match v0 {
        V::Fun(f) => f(v1),
        _ => stuck(StuckReason::ApplyNonFunction),
    }
}

fn succ_fun() -> V {
    V::fun(|v| match succ(&v) {
        Ok(v) => pure(v),
        Err(r) => stuck(r),
    })
}

/// A program closure, built when a state appender is applied to `v`. It is
/// built even when `v` is not a function, and fails only when applied,
/// so that it is observed as a procedure like its first-order counterpart.
fn program_closure(v: V, jump: impl Fn(C) -> C + 'static) -> V {
    V::fun(move |v1| jump(apply_fun(v.clone(), v1)))
}

/// Compositional version of [`two_level`]: values are integers and
/// functions.
pub mod compositional {
    use super::*;

    fn eval(t: Rc<Term>, e: E) -> C {
        step(move || match &*t {
            Term::Lit(n) => pure(V::Int(*n)),
            Term::Var(x) => lookup(&e, x),
            Term::Lam(x, b) => {
                let (x, b) = (x.clone(), b.clone());
                pure(V::fun(move |v| reset1(eval(b.clone(), e.extend(x.clone(), v)))))
            }
            Term::App(t0, t1) => {
                let t0 = t0.clone();
                eval(t1.clone(), e.clone()).bind(move |v1| {
                    eval(t0.clone(), e.clone()).bind(move |v0| apply_fun(v0, v1.clone()))
                })
            }
            Term::J => shift1(|c| {
                shift2(move |d| {
                    let (d1, d2) = (d.clone(), d);
                    let sa = V::fun(move |v| {
                        let d = d1.clone();
                        pure(program_closure(v, move |m| {
                            let d = d.clone();
                            shift1(move |_| {
                                shift2(move |_| reset1(m).bind(move |r| resume(d.clone(), r)))
                            })
                        }))
                    });
                    resume(c, sa).bind(move |v| resume(d2.clone(), v))
                })
            }),
        })
    }

    pub fn evaluate(p: &Program) -> C {
        let e = Env::empty().extend(crate::syntax::name("succ"), succ_fun());
        reset2(reset1(eval(p.term().clone(), e)))
    }
}

/// Direct style with respect to the control continuation of the
/// caller-save-dump evaluator: a function body records the current
/// continuation as its dump, and a program closure jumps to it.
pub mod caller_save_dump {
    use super::*;

    fn eval(t: Rc<Term>, e: E, d: Cont<V>) -> C {
        step(move || match &*t {
            Term::Lit(n) => pure(V::Int(*n)),
            Term::Var(x) => lookup(&e, x),
            Term::Lam(x, b) => pure(V::FunClo(e.clone(), x.clone(), b.clone())),
            Term::App(t0, t1) => {
                let t0 = t0.clone();
                let d0 = d.clone();
                eval(t1.clone(), e.clone(), d).bind(move |v1| {
                    eval(t0.clone(), e.clone(), d0.clone()).bind(move |v0| apply(v0, v1.clone()))
                })
            }
            Term::J => pure(V::StateAppender(Dump::Captured(d))),
        })
    }

    fn apply(v0: V, v1: V) -> C {
        match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => pure(v),
                Err(r) => stuck(r),
            },
            V::FunClo(e, x, t) => callcc(move |k| eval(t, e.extend(x, v1), k)),
            V::StateAppender(d) => pure(V::PgmClo(Rc::new(v1), d)),
            V::PgmClo(v, d) => apply((*v).clone(), v1).bind(move |r| throw(&d, r)),
            _ => stuck(StuckReason::ApplyNonFunction),
        }
    }

    pub fn evaluate(p: &Program) -> C {
        reset1(eval(p.term().clone(), initial_env(), Cont::Jumpy1(List::nil())))
    }
}

/// Compositional version of [`caller_save_dump`].
pub mod compositional_caller_save {
    use super::*;

    fn eval(t: Rc<Term>, e: E, d: Cont<V>) -> C {
        step(move || match &*t {
            Term::Lit(n) => pure(V::Int(*n)),
            Term::Var(x) => lookup(&e, x),
            Term::Lam(x, b) => {
                let (x, b) = (x.clone(), b.clone());
                pure(V::fun(move |v| {
                    let (b, e) = (b.clone(), e.extend(x.clone(), v));
                    callcc(move |k| eval(b, e, k))
                }))
            }
            Term::App(t0, t1) => {
                let t0 = t0.clone();
                let d0 = d.clone();
                eval(t1.clone(), e.clone(), d).bind(move |v1| {
                    eval(t0.clone(), e.clone(), d0.clone()).bind(move |v0| apply_fun(v0, v1.clone()))
                })
            }
            Term::J => pure(V::fun(move |v| {
                let d = d.clone();
                pure(program_closure(v, move |m| {
                    let d = d.clone();
                    m.bind(move |r| resume(d.clone(), r))
                }))
            })),
        })
    }

    pub fn evaluate(p: &Program) -> C {
        let e = Env::empty().extend(crate::syntax::name("succ"), succ_fun());
        reset1(eval(p.term().clone(), e, Cont::Jumpy1(List::nil())))
    }
}
