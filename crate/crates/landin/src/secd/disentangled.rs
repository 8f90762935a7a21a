//! The SECD machine split into four mutually recursive transition
//! functions, one per kind of configuration.

use std::rc::Rc;

use super::felleisen::{directive_focus, Directive, Dump, Val};
use super::value::{initial_env, succ, Value};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

/// What a function hands back to its caller in Burge's machine: either a
/// normal return or a value thrown to a program closure.
#[derive(Clone, Debug)]
pub enum Returned {
    Yield(Val),
    Throw(Val, Val),
}

#[derive(Clone, Debug)]
pub enum Config {
    Control {
        s: List<Val>,
        e: Env<Val>,
        c: List<Directive>,
        d: Dump,
    },
    Term {
        t: Rc<Term>,
        s: List<Val>,
        e: Env<Val>,
        c: List<Directive>,
        d: Dump,
    },
    Apply {
        v0: Val,
        v1: Val,
        s: List<Val>,
        e: Env<Val>,
        c: List<Directive>,
        d: Dump,
    },
    Dump {
        r: Returned,
        d: Dump,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Every hop through the control dispatcher is kept, so each transition
    /// of the original machine becomes exactly two.
    Faithful,
    /// Hops whose target is statically known go there directly.
    ShortCircuited,
    /// Burge's machine, with tagged returned values.
    Burge,
}

#[derive(Clone, Copy, Debug)]
pub struct Disentangled {
    pub flavor: Flavor,
}

impl Disentangled {
    pub const FAITHFUL: Disentangled = Disentangled {
        flavor: Flavor::Faithful,
    };
    pub const SHORT: Disentangled = Disentangled {
        flavor: Flavor::ShortCircuited,
    };
    pub const BURGE: Disentangled = Disentangled {
        flavor: Flavor::Burge,
    };

    fn short(&self) -> bool {
        self.flavor == Flavor::ShortCircuited
    }
}

fn control(s: List<Val>, e: &Env<Val>, c: &List<Directive>, d: &Dump) -> Step<Config, Val> {
    Step::Next(Config::Control {
        s,
        e: e.clone(),
        c: c.clone(),
        d: d.clone(),
    })
}

impl Machine for Disentangled {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        if self.short() {
            Config::Term {
                t: p.term().clone(),
                s: List::nil(),
                e: initial_env(),
                c: List::nil(),
                d: Dump::default(),
            }
        } else {
            Config::Control {
                s: List::nil(),
                e: initial_env(),
                c: List::cons(Directive::Term(p.term().clone()), List::nil()),
                d: Dump::default(),
            }
        }
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        match cfg {
            Config::Control { s, e, c, d } => match c.uncons() {
                None => match s.head() {
                    Some(v) => Step::Next(Config::Dump {
                        r: Returned::Yield(v.clone()),
                        d: d.clone(),
                    }),
                    None => Step::Stuck(StuckReason::Malformed),
                },
                Some((Directive::Term(t), c)) => Step::Next(Config::Term {
                    t: t.clone(),
                    s: s.clone(),
                    e: e.clone(),
                    c,
                    d: d.clone(),
                }),
                Some((Directive::Apply, c)) => {
                    let mut it = s.iter();
                    match (it.next(), it.next()) {
                        (Some(v0), Some(v1)) => Step::Next(Config::Apply {
                            v0: v0.clone(),
                            v1: v1.clone(),
                            s: s.tail().tail(),
                            e: e.clone(),
                            c,
                            d: d.clone(),
                        }),
                        _ => Step::Stuck(StuckReason::Malformed),
                    }
                }
            },
            Config::Dump { r, d } => match (r, d.0.uncons()) {
                (Returned::Yield(v), None) => Step::Done(v.clone()),
                (Returned::Yield(v), Some((f, d))) => control(f.s.push(v.clone()), &f.e, &f.c, &Dump(d)),
                (Returned::Throw(v, v1), Some((f, d))) => Step::Next(Config::Apply {
                    v0: v.clone(),
                    v1: v1.clone(),
                    s: f.s.clone(),
                    e: f.e.clone(),
                    c: f.c.clone(),
                    d: Dump(d),
                }),
                (Returned::Throw(..), None) => Step::Stuck(StuckReason::JOutsideLambda),
            },
            Config::Term { t, s, e, c, d } => match &**t {
                Term::Lit(n) => control(s.push(Value::Int(*n)), e, c, d),
                Term::Var(x) => match e.lookup(x) {
                    Ok(v) => control(s.push(v.clone()), e, c, d),
                    Err(_) => Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(x, b) => control(s.push(Value::closure(e, x, b)), e, c, d),
                Term::J => control(s.push(Value::StateAppender(d.clone())), e, c, d),
                Term::App(t0, t1) => {
                    let c = c.push(Directive::Apply).push(Directive::Term(t0.clone()));
                    if self.short() {
                        Step::Next(Config::Term {
                            t: t1.clone(),
                            s: s.clone(),
                            e: e.clone(),
                            c,
                            d: d.clone(),
                        })
                    } else {
                        control(s.clone(), e, &c.push(Directive::Term(t1.clone())), d)
                    }
                }
            },
            Config::Apply { v0, v1, s, e, c, d } => match v0 {
                Value::Succ => match succ(v1) {
                    Ok(v) => control(s.push(v), e, c, d),
                    Err(r) => Step::Stuck(r),
                },
                Value::FunClo(e1, x, t) => {
                    let e1 = e1.extend(x.clone(), v1.clone());
                    let d = d.push(s.clone(), e.clone(), c.clone());
                    if self.short() {
                        Step::Next(Config::Term {
                            t: t.clone(),
                            s: List::nil(),
                            e: e1,
                            c: List::nil(),
                            d,
                        })
                    } else {
                        control(
                            List::nil(),
                            &e1,
                            &List::cons(Directive::Term(t.clone()), List::nil()),
                            &d,
                        )
                    }
                }
                Value::StateAppender(d1) => {
                    control(s.push(Value::PgmClo(Rc::new(v1.clone()), d1.clone())), e, c, d)
                }
                Value::PgmClo(v, d1) => match self.flavor {
                    Flavor::Burge => Step::Next(Config::Dump {
                        r: Returned::Throw((**v).clone(), v1.clone()),
                        d: d1.clone(),
                    }),
                    Flavor::ShortCircuited => Step::Next(Config::Apply {
                        v0: (**v).clone(),
                        v1: v1.clone(),
                        s: List::nil(),
                        e: initial_env(),
                        c: List::nil(),
                        d: d1.clone(),
                    }),
                    Flavor::Faithful => control(
                        List::from_items([(**v).clone(), v1.clone()]),
                        &initial_env(),
                        &List::cons(Directive::Apply, List::nil()),
                        d1,
                    ),
                },
                Value::Int(_) => Step::Stuck(StuckReason::ApplyNonFunction),
            },
        }
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        match cfg {
            Config::Control { s, c, d, .. } => TraceLine {
                tag: "run_c",
                focus: directive_focus(c),
                ctx_depth: s.len(),
                dump_depth: d.0.len(),
            },
            Config::Term { t, s, d, .. } => TraceLine {
                tag: "run_t",
                focus: t.to_string(),
                ctx_depth: s.len(),
                dump_depth: d.0.len(),
            },
            Config::Apply { v0, s, d, .. } => TraceLine {
                tag: "run_a",
                focus: v0.to_string(),
                ctx_depth: s.len(),
                dump_depth: d.0.len(),
            },
            Config::Dump { r, d } => TraceLine {
                tag: "run_d",
                focus: match r {
                    Returned::Yield(v) => format!("yield {v}"),
                    Returned::Throw(v, w) => format!("throw {v} {w}"),
                },
                ctx_depth: 0,
                dump_depth: d.0.len(),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::felleisen::Secd;
    use super::*;
    use crate::machine::run;
    use crate::outcome::Observable;
    use crate::syntax::parse_program;

    const PROGRAMS: &[&str] = &[
        "(succ 4)",
        "((lam x2 (succ (((J (lam k k)) 0) 100))) 10)",
        "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)",
        "((J (lam k k)) 0)",
        "((lam f (succ (f 1))) (lam y ((J succ) y)))",
    ];

    #[test]
    fn faithful_takes_twice_the_steps() {
        for src in PROGRAMS {
            let p = parse_program(src).unwrap();
            let a = run(&Secd::FELLEISEN, &p, 10_000);
            let b = run(&Disentangled::FAITHFUL, &p, 10_000);
            assert_eq!(b.steps, 2 * a.steps, "{src}");
            assert_eq!(
                a.outcome.map(|v| v.as_int()),
                b.outcome.map(|v| v.as_int())
            );
        }
    }

    #[test]
    fn short_circuit_agrees_in_fewer_steps() {
        for src in PROGRAMS {
            let p = parse_program(src).unwrap();
            let a = run(&Disentangled::FAITHFUL, &p, 10_000);
            let b = run(&Disentangled::SHORT, &p, 10_000);
            assert!(b.steps < a.steps);
            assert_eq!(
                a.outcome.map(|v| v.as_int()),
                b.outcome.map(|v| v.as_int())
            );
        }
    }

    #[test]
    fn burge_agrees_with_burge() {
        for src in PROGRAMS {
            let p = parse_program(src).unwrap();
            let a = run(&Secd::BURGE, &p, 10_000);
            let b = run(&Disentangled::BURGE, &p, 10_000);
            assert_eq!(
                a.outcome.map(|v| v.as_int()),
                b.outcome.map(|v| v.as_int()),
                "{src}"
            );
        }
    }
}
