//! The evaluators in continuation-passing style. Each call to eval or
//! apply and each application of a continuation costs one step, which
//! makes step counts line up with the defunctionalized machines.

use std::rc::Rc;

use super::value::{initial_env, succ, Applicable, Computation as C, Dump, HoValue as V, Returned};
use crate::control::comp::{pure, step, stuck};
use crate::list::List;
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

type E = Env<V>;

fn lookup(e: &E, x: &str) -> Result<V, StuckReason> {
    e.lookup(x).cloned().map_err(|_| StuckReason::UnboundVariable)
}

fn closure(e: &E, x: &crate::syntax::Name, b: &Rc<Term>) -> V {
    V::FunClo(e.clone(), x.clone(), b.clone())
}

fn throw(d: &Dump, v: V) -> C {
    match d {
        Dump::Host(f) => {
            let f = f.clone();
            step(move || f(v))
        }
        _ => stuck(StuckReason::Malformed),
    }
}

fn throw_tagged(d: &Dump, r: Returned) -> C {
    match d {
        Dump::Tagged(f) => {
            let f = f.clone();
            step(move || f(r))
        }
        _ => stuck(StuckReason::Malformed),
    }
}

/// Caller-save environments, no data stack; the control continuation
/// receives the dump.
pub mod two_layer {
    use super::*;

    type K = Rc<dyn Fn(V, Dump) -> C>;

    fn ret(c: &K, v: V, d: Dump) -> C {
        let c = c.clone();
        step(move || c(v, d))
    }

    fn to_dump() -> K {
        Rc::new(|v, d| throw(&d, v))
    }

    fn eval(t: Rc<Term>, e: E, c: K, d: Dump) -> C {
        step(move || match &*t {
            Term::Lit(n) => ret(&c, V::Int(*n), d),
            Term::Var(x) => match lookup(&e, x) {
                Ok(v) => ret(&c, v, d),
                Err(r) => stuck(r),
            },
            Term::Lam(x, b) => ret(&c, closure(&e, x, b), d),
            Term::App(t0, t1) => {
                let (t0, e0) = (t0.clone(), e.clone());
                let k: K = Rc::new(move |v1, d| {
                    let c = c.clone();
                    let k: K = Rc::new(move |v0, d| apply(v0, v1.clone(), c.clone(), d));
                    eval(t0.clone(), e0.clone(), k, d)
                });
                eval(t1.clone(), e, k, d)
            }
            Term::J => ret(&c, V::StateAppender(d.clone()), d),
        })
    }

    fn apply(v0: V, v1: V, c: K, d: Dump) -> C {
        step(move || match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => ret(&c, v, d),
                Err(r) => stuck(r),
            },
            V::FunClo(e, x, t) => {
                let d: Dump = Dump::Host(Rc::new(move |v| ret(&c, v, d.clone())));
                eval(t, e.extend(x, v1), to_dump(), d)
            }
            V::StateAppender(d1) => ret(&c, V::PgmClo(Rc::new(v1), d1), d),
            V::PgmClo(v, d1) => apply((*v).clone(), v1, to_dump(), d1),
            _ => stuck(StuckReason::ApplyNonFunction),
        })
    }

    pub fn evaluate(p: &Program) -> C {
        eval(p.term().clone(), initial_env(), to_dump(), Dump::Host(Rc::new(pure)))
    }
}

/// Caller-save dumps: control and dump continuations have the same type.
pub mod same_type {
    use super::*;

    fn ret(c: &Applicable, v: V) -> C {
        let c = c.clone();
        step(move || c(v))
    }

    fn eval(t: Rc<Term>, e: E, c: Applicable, d: Applicable) -> C {
        step(move || match &*t {
            Term::Lit(n) => ret(&c, V::Int(*n)),
            Term::Var(x) => match lookup(&e, x) {
                Ok(v) => ret(&c, v),
                Err(r) => stuck(r),
            },
            Term::Lam(x, b) => ret(&c, closure(&e, x, b)),
            Term::App(t0, t1) => {
                let (t0, e0, d0) = (t0.clone(), e.clone(), d.clone());
                let k: Applicable = Rc::new(move |v1| {
                    let c = c.clone();
                    let k: Applicable = Rc::new(move |v0| apply(v0, v1.clone(), c.clone()));
                    eval(t0.clone(), e0.clone(), k, d0.clone())
                });
                eval(t1.clone(), e, k, d)
            }
            Term::J => ret(&c, V::StateAppender(Dump::Host(d))),
        })
    }

    fn apply(v0: V, v1: V, c: Applicable) -> C {
        step(move || match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => ret(&c, v),
                Err(r) => stuck(r),
            },
            V::FunClo(e, x, t) => eval(t, e.extend(x, v1), c.clone(), c),
            V::StateAppender(d) => ret(&c, V::PgmClo(Rc::new(v1), d)),
            V::PgmClo(v, Dump::Host(d)) => apply((*v).clone(), v1, d),
            V::PgmClo(..) => stuck(StuckReason::Malformed),
            _ => stuck(StuckReason::ApplyNonFunction),
        })
    }

    pub fn evaluate(p: &Program) -> C {
        eval(p.term().clone(), initial_env(), Rc::new(pure), Rc::new(pure))
    }
}

/// Callee-save environments and a data stack. The `burge` flavor tags what
/// it sends to dumps, so that a program closure unwinds to the caller of
/// the function that captured the dump instead of jumping into it.
pub mod stack {
    use super::*;

    type S = List<V>;
    type K = Rc<dyn Fn(S, E, Dump) -> C>;

    #[derive(Clone, Copy)]
    struct Flavor {
        burge: bool,
    }

    fn ret(c: &K, s: S, e: E, d: Dump) -> C {
        let c = c.clone();
        step(move || c(s, e, d))
    }

    fn to_dump() -> K {
        Rc::new(|s: S, _, d| match s.head() {
            Some(v) => throw(&d, v.clone()),
            None => stuck(StuckReason::Malformed),
        })
    }

    fn yield_to_dump() -> K {
        Rc::new(|s: S, _, d| match s.uncons() {
            Some((v, rest)) if rest.is_empty() => throw_tagged(&d, Returned::Yield(v.clone())),
            _ => stuck(StuckReason::Malformed),
        })
    }

    fn run_t(fl: Flavor, t: Rc<Term>, s: S, e: E, c: K, d: Dump) -> C {
        step(move || match &*t {
            Term::Lit(n) => ret(&c, s.push(V::Int(*n)), e, d),
            Term::Var(x) => match lookup(&e, x) {
                Ok(v) => ret(&c, s.push(v), e, d),
                Err(r) => stuck(r),
            },
            Term::Lam(x, b) => {
                let v = closure(&e, x, b);
                ret(&c, s.push(v), e, d)
            }
            Term::App(t0, t1) => {
                let t0 = t0.clone();
                let k: K = Rc::new(move |s, e, d| {
                    let c = c.clone();
                    let k: K = Rc::new(move |s: S, e, d| match s.uncons() {
                        Some((v0, s)) => match s.uncons() {
                            Some((v1, s)) => run_a(fl, v0.clone(), v1.clone(), s, e, c.clone(), d),
                            None => stuck(StuckReason::Malformed),
                        },
                        None => stuck(StuckReason::Malformed),
                    });
                    run_t(fl, t0.clone(), s, e, k, d)
                });
                run_t(fl, t1.clone(), s, e, k, d)
            }
            Term::J => ret(&c, s.push(V::StateAppender(d.clone())), e, d),
        })
    }

    fn run_a(fl: Flavor, v0: V, v1: V, s: S, e: E, c: K, d: Dump) -> C {
        step(move || match v0 {
            V::Succ => match succ(&v1) {
                Ok(v) => ret(&c, s.push(v), e, d),
                Err(r) => stuck(r),
            },
            V::FunClo(e1, x, t) => {
                let e1 = e1.extend(x, v1);
                if fl.burge {
                    let d: Dump = Dump::Tagged(Rc::new(move |r| match r {
                        Returned::Yield(v) => ret(&c, s.push(v), e.clone(), d.clone()),
                        Returned::Throw(f, v) => {
                            run_a(fl, f, v, s.clone(), e.clone(), c.clone(), d.clone())
                        }
                    }));
                    run_t(fl, t, List::nil(), e1, yield_to_dump(), d)
                } else {
                    let d: Dump = Dump::Host(Rc::new(move |v| {
                        ret(&c, s.push(v), e.clone(), d.clone())
                    }));
                    run_t(fl, t, List::nil(), e1, to_dump(), d)
                }
            }
            V::StateAppender(d1) => ret(&c, s.push(V::PgmClo(Rc::new(v1), d1)), e, d),
            V::PgmClo(v, d1) => {
                if fl.burge {
                    throw_tagged(&d1, Returned::Throw((*v).clone(), v1))
                } else {
                    run_a(fl, (*v).clone(), v1, List::nil(), initial_env(), to_dump(), d1)
                }
            }
            _ => stuck(StuckReason::ApplyNonFunction),
        })
    }

    pub fn evaluate(p: &Program) -> C {
        let fl = Flavor { burge: false };
        let d = Dump::Host(Rc::new(pure));
        run_t(fl, p.term().clone(), List::nil(), initial_env(), to_dump(), d)
    }

    pub fn evaluate_burge(p: &Program) -> C {
        let fl = Flavor { burge: true };
        let d = Dump::Tagged(Rc::new(|r| match r {
            Returned::Yield(v) => pure(v),
            Returned::Throw(..) => stuck(StuckReason::JOutsideLambda),
        }));
        run_t(fl, p.term().clone(), List::nil(), initial_env(), yield_to_dump(), d)
    }
}
