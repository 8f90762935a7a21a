//! The SECD machine with J, in Felleisen's and in Burge's formulation.
//!
//! The two differ in a single clause: what happens when a program closure
//! is applied. Felleisen's machine reinstates the captured dump and
//! re-applies in a fresh frame; Burge's machine resumes the topmost
//! captured frame directly, and so needs that frame to exist.

use std::rc::Rc;

use super::value::{initial_env, succ, Value};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{Env, Program, Term};

pub type Val = Value<Dump>;

#[derive(Clone, Debug, PartialEq)]
pub enum Directive {
    Term(Rc<Term>),
    Apply,
}

#[derive(Clone, Debug)]
pub struct Frame {
    pub s: List<Val>,
    pub e: Env<Val>,
    pub c: List<Directive>,
}

#[derive(Clone, Debug, Default)]
pub struct Dump(pub List<Frame>);

impl Dump {
    pub fn push(&self, s: List<Val>, e: Env<Val>, c: List<Directive>) -> Dump {
        Dump(self.0.push(Frame { s, e, c }))
    }
}

#[derive(Clone, Debug)]
pub struct Config {
    pub s: List<Val>,
    pub e: Env<Val>,
    pub c: List<Directive>,
    pub d: Dump,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Felleisen,
    Burge,
}

#[derive(Clone, Copy, Debug)]
pub struct Secd {
    pub flavor: Flavor,
}

impl Secd {
    pub const FELLEISEN: Secd = Secd {
        flavor: Flavor::Felleisen,
    };
    pub const BURGE: Secd = Secd {
        flavor: Flavor::Burge,
    };
}

pub(crate) fn directive_focus(c: &List<Directive>) -> String {
    match c.head() {
        Some(Directive::Term(t)) => t.to_string(),
        Some(Directive::Apply) => "apply".to_string(),
        None => "return".to_string(),
    }
}

impl Machine for Secd {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        Config {
            s: List::nil(),
            e: initial_env(),
            c: List::cons(Directive::Term(p.term().clone()), List::nil()),
            d: Dump::default(),
        }
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        let Config { s, e, c, d } = cfg;
        let Some((dir, c)) = c.uncons() else {
            let Some((v, rest)) = s.uncons() else {
                return Step::Stuck(StuckReason::Malformed);
            };
            return match d.0.uncons() {
                None => {
                    if self.flavor == Flavor::Burge && !rest.is_empty() {
                        Step::Stuck(StuckReason::Malformed)
                    } else {
                        Step::Done(v.clone())
                    }
                }
                Some((f, d)) => Step::Next(Config {
                    s: f.s.push(v.clone()),
                    e: f.e.clone(),
                    c: f.c.clone(),
                    d: Dump(d),
                }),
            };
        };
        let next = |s: List<Val>| {
            Step::Next(Config {
                s,
                e: e.clone(),
                c: c.clone(),
                d: d.clone(),
            })
        };
        match dir {
            Directive::Term(t) => match &**t {
                Term::Lit(n) => next(s.push(Value::Int(*n))),
                Term::Var(x) => match e.lookup(x) {
                    Ok(v) => next(s.push(v.clone())),
                    Err(_) => Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(x, b) => next(s.push(Value::closure(e, x, b))),
                Term::J => next(s.push(Value::StateAppender(d.clone()))),
                Term::App(t0, t1) => Step::Next(Config {
                    s: s.clone(),
                    e: e.clone(),
                    c: c
                        .push(Directive::Apply)
                        .push(Directive::Term(t0.clone()))
                        .push(Directive::Term(t1.clone())),
                    d: d.clone(),
                }),
            },
            Directive::Apply => {
                let Some((v0, s)) = s.uncons() else {
                    return Step::Stuck(StuckReason::Malformed);
                };
                let Some((v1, s)) = s.uncons() else {
                    return Step::Stuck(StuckReason::Malformed);
                };
                match v0 {
                    Value::Succ => match succ(v1) {
                        Ok(v) => next(s.push(v)),
                        Err(r) => Step::Stuck(r),
                    },
                    Value::FunClo(e1, x, t) => Step::Next(Config {
                        s: List::nil(),
                        e: e1.extend(x.clone(), v1.clone()),
                        c: List::cons(Directive::Term(t.clone()), List::nil()),
                        d: d.push(s, e.clone(), c),
                    }),
                    Value::StateAppender(d1) => {
                        next(s.push(Value::PgmClo(Rc::new(v1.clone()), d1.clone())))
                    }
                    Value::PgmClo(v, d1) => match self.flavor {
                        Flavor::Felleisen => Step::Next(Config {
                            s: List::from_items([(**v).clone(), v1.clone()]),
                            e: initial_env(),
                            c: List::cons(Directive::Apply, List::nil()),
                            d: d1.clone(),
                        }),
                        Flavor::Burge => match d1.0.uncons() {
                            None => Step::Stuck(StuckReason::JOutsideLambda),
                            Some((f, d2)) => Step::Next(Config {
                                s: f.s.push(v1.clone()).push((**v).clone()),
                                e: f.e.clone(),
                                c: f.c.push(Directive::Apply),
                                d: Dump(d2),
                            }),
                        },
                    },
                    Value::Int(_) => Step::Stuck(StuckReason::ApplyNonFunction),
                }
            }
        }
    }

    fn describe(&self, c: &Config) -> TraceLine {
        TraceLine {
            tag: "secd",
            focus: directive_focus(&c.c),
            ctx_depth: c.s.len(),
            dump_depth: c.d.0.len(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::{run, trace};
    use crate::outcome::{Observable, Outcome};
    use crate::syntax::parse_program;

    fn eval(m: Secd, src: &str) -> Outcome<Option<i64>> {
        run(&m, &parse_program(src).unwrap(), 10_000)
            .outcome
            .map(|v| v.as_int())
    }

    #[test]
    fn succ_four() {
        assert_eq!(eval(Secd::FELLEISEN, "(succ 4)"), Outcome::Final(Some(5)));
        let t = trace(&Secd::FELLEISEN, &parse_program("(succ 4)").unwrap(), 100);
        // app, 4, succ, apply, final
        assert_eq!(t.steps, 5);
    }

    #[test]
    fn nested_j_pair() {
        let p3 = "((lam x2 (succ (((J (lam k k)) 0) 100))) 10)";
        let p4 = "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)";
        assert_eq!(eval(Secd::FELLEISEN, p3), Outcome::Final(Some(0)));
        assert_eq!(eval(Secd::FELLEISEN, p4), Outcome::Final(Some(1)));
        assert_eq!(eval(Secd::BURGE, p3), Outcome::Final(Some(0)));
        assert_eq!(eval(Secd::BURGE, p4), Outcome::Final(Some(1)));
    }

    #[test]
    fn top_level_j_discriminates() {
        let p5 = "((J (lam k k)) 0)";
        assert_eq!(eval(Secd::FELLEISEN, p5), Outcome::Final(Some(0)));
        assert_eq!(
            eval(Secd::BURGE, p5),
            Outcome::Stuck(StuckReason::JOutsideLambda)
        );
    }

    #[test]
    fn stuck_reasons() {
        assert_eq!(
            eval(Secd::FELLEISEN, "(1 2)"),
            Outcome::Stuck(StuckReason::ApplyNonFunction)
        );
        assert_eq!(
            eval(Secd::FELLEISEN, "(succ (lam x x))"),
            Outcome::Stuck(StuckReason::SuccNonInteger)
        );
    }

    #[test]
    fn operand_before_operator() {
        let p7 = "((lam d ((0 0) (((J (lam k k)) 0) 99))) 5)";
        assert_eq!(eval(Secd::FELLEISEN, p7), Outcome::Final(Some(0)));
    }
}
