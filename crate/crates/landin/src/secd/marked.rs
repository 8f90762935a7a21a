//! The machine over a single context in which function calls leave a
//! delimiter; J captures the context up to the most recent delimiter.

use std::rc::Rc;

use super::value::{initial_env, succ, Value};
use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::StuckReason;
use crate::syntax::{name, Env, Program, Term};

pub type Val = Value<Ctx>;

#[derive(Clone, Debug)]
pub enum Frame {
    Operand(Rc<Term>, Env<Val>),
    Operator(Val),
    Delim,
}

#[derive(Clone, Debug, Default)]
pub struct Ctx(pub List<Frame>);

impl Ctx {
    /// The context below the innermost delimiter, if there is one.
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

    pub fn push(&self, f: Frame) -> Ctx {
        Ctx(self.0.push(f))
    }

    pub fn delimiters(&self) -> usize {
        self.0.iter().filter(|f| matches!(f, Frame::Delim)).count()
    }
}

#[derive(Clone, Debug)]
pub enum Config {
    Eval(Rc<Term>, Env<Val>, Ctx),
    Apply(Val, Val, Ctx),
    Cont(Ctx, Val),
}

#[derive(Clone, Copy, Debug)]
pub struct Marked {
    /// Start inside one delimiter, so that a top-level J denotes the empty
    /// context.
    pub delimited_start: bool,
}

impl Marked {
    pub const DELIMITED: Marked = Marked {
        delimited_start: true,
    };
    pub const UNDELIMITED: Marked = Marked {
        delimited_start: false,
    };
}

impl Machine for Marked {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        let e = if self.delimited_start {
            Ctx::default().push(Frame::Delim)
        } else {
            Ctx::default()
        };
        Config::Eval(p.term().clone(), initial_env(), e)
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, e) => match &**t {
                Term::Lit(n) => Config::Cont(e.clone(), Value::Int(*n)),
                Term::Var(x) => match s.lookup(x) {
                    Ok(v) => Config::Cont(e.clone(), v.clone()),
                    Err(_) => return Step::Stuck(StuckReason::UnboundVariable),
                },
                Term::Lam(x, b) => Config::Cont(e.clone(), Value::closure(s, x, b)),
                Term::App(t0, t1) => Config::Eval(
                    t1.clone(),
                    s.clone(),
                    e.push(Frame::Operand(t0.clone(), s.clone())),
                ),
                Term::J => match e.previous() {
                    Some(p) => Config::Cont(e.clone(), Value::StateAppender(p)),
                    None => return Step::Stuck(StuckReason::NoDelimiter),
                },
            },
            Config::Apply(v0, v1, e) => match v0 {
                Value::Succ => match succ(v1) {
                    Ok(v) => Config::Cont(e.clone(), v),
                    Err(r) => return Step::Stuck(r),
                },
                Value::FunClo(s, x, t) => Config::Eval(
                    t.clone(),
                    s.extend(x.clone(), v1.clone()),
                    e.push(Frame::Delim),
                ),
                Value::StateAppender(p) => {
                    Config::Cont(e.clone(), Value::PgmClo(Rc::new(v1.clone()), p.clone()))
                }
                Value::PgmClo(v, p) => Config::Apply((**v).clone(), v1.clone(), p.clone()),
                Value::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
            Config::Cont(e, v) => match e.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((Frame::Operand(t, s), e)) => Config::Eval(
                    t.clone(),
                    s.clone(),
                    Ctx(e.push(Frame::Operator(v.clone()))),
                ),
                Some((Frame::Operator(v1), e)) => Config::Apply(v.clone(), v1.clone(), Ctx(e)),
                Some((Frame::Delim, e)) => Config::Cont(Ctx(e), v.clone()),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        describe(cfg)
    }
}

pub(crate) fn describe(cfg: &Config) -> TraceLine {
    let (tag, focus, e) = match cfg {
        Config::Eval(t, _, e) => ("eval", t.to_string(), e),
        Config::Apply(v, _, e) => ("apply", v.to_string(), e),
        Config::Cont(e, v) => ("cont", v.to_string(), e),
    };
    TraceLine {
        tag,
        focus,
        ctx_depth: e.0.len(),
        dump_depth: e.delimiters(),
    }
}

/// The machine in which every function body sees J bound, through its
/// environment, to the context of its caller.
#[derive(Clone, Copy, Debug)]
pub struct CekJ {
    /// Bind J to the empty context at top level.
    pub top_level_j: bool,
}

impl CekJ {
    pub const WITH_TOP_LEVEL_J: CekJ = CekJ { top_level_j: true };
    pub const WITHOUT_TOP_LEVEL_J: CekJ = CekJ { top_level_j: false };
}

impl Machine for CekJ {
    type Config = Config;
    type Value = Val;

    fn inject(&self, p: &Program) -> Config {
        let mut s = initial_env();
        if self.top_level_j {
            s = s.extend(name("J"), Value::StateAppender(Ctx::default()));
        }
        Config::Eval(p.term().clone(), s, Ctx::default())
    }

    fn step(&self, cfg: &Config) -> Step<Config, Val> {
        Step::Next(match cfg {
            Config::Eval(t, s, e) => {
                let var = |x: &str| match s.lookup(x) {
                    Ok(v) => Ok(Config::Cont(e.clone(), v.clone())),
                    Err(_) => Err(StuckReason::UnboundVariable),
                };
                match &**t {
                    Term::Lit(n) => Config::Cont(e.clone(), Value::Int(*n)),
                    Term::Var(x) => match var(x) {
                        Ok(c) => c,
                        Err(r) => return Step::Stuck(r),
                    },
                    Term::J => match var("J") {
                        Ok(c) => c,
                        Err(_) => return Step::Stuck(StuckReason::JOutsideLambda),
                    },
                    Term::Lam(x, b) => Config::Cont(e.clone(), Value::closure(s, x, b)),
                    Term::App(t0, t1) => Config::Eval(
                        t1.clone(),
                        s.clone(),
                        e.push(Frame::Operand(t0.clone(), s.clone())),
                    ),
                }
            }
            Config::Apply(v0, v1, e) => match v0 {
                Value::Succ => match succ(v1) {
                    Ok(v) => Config::Cont(e.clone(), v),
                    Err(r) => return Step::Stuck(r),
                },
                Value::FunClo(s, x, t) => Config::Eval(
                    t.clone(),
                    s.extend(x.clone(), v1.clone())
                        .extend(name("J"), Value::StateAppender(e.clone())),
                    e.clone(),
                ),
                Value::StateAppender(p) => {
                    Config::Cont(e.clone(), Value::PgmClo(Rc::new(v1.clone()), p.clone()))
                }
                Value::PgmClo(v, p) => Config::Apply((**v).clone(), v1.clone(), p.clone()),
                Value::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
            },
            Config::Cont(e, v) => match e.0.uncons() {
                None => return Step::Done(v.clone()),
                Some((Frame::Operand(t, s), e)) => Config::Eval(
                    t.clone(),
                    s.clone(),
                    Ctx(e.push(Frame::Operator(v.clone()))),
                ),
                Some((Frame::Operator(v1), e)) => Config::Apply(v.clone(), v1.clone(), Ctx(e)),
                Some((Frame::Delim, _)) => return Step::Stuck(StuckReason::Malformed),
            },
        })
    }

    fn describe(&self, cfg: &Config) -> TraceLine {
        describe(cfg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::machine::run;
    use crate::outcome::{Observable, Outcome};
    use crate::syntax::parse_program;

    fn eval<M: Machine<Value = Val>>(m: &M, src: &str) -> Outcome<Option<i64>> {
        run(m, &parse_program(src).unwrap(), 10_000)
            .outcome
            .map(|v| v.as_int())
    }

    #[test]
    fn top_level_j_needs_a_delimiter() {
        let p5 = "((J (lam k k)) 0)";
        assert_eq!(eval(&Marked::DELIMITED, p5), Outcome::Final(Some(0)));
        assert_eq!(
            eval(&Marked::UNDELIMITED, p5),
            Outcome::Stuck(StuckReason::NoDelimiter)
        );
        assert_eq!(eval(&CekJ::WITH_TOP_LEVEL_J, p5), Outcome::Final(Some(0)));
        assert_eq!(
            eval(&CekJ::WITHOUT_TOP_LEVEL_J, p5),
            Outcome::Stuck(StuckReason::JOutsideLambda)
        );
    }

    #[test]
    fn inject_binds_j_for_the_env_machine() {
        let p = parse_program("(succ 4)").unwrap();
        let Config::Eval(_, s, e) = CekJ::WITH_TOP_LEVEL_J.inject(&p) else {
            panic!()
        };
        assert!(matches!(s.lookup("J"), Ok(Value::StateAppender(c)) if c.0.is_empty()));
        assert!(e.0.is_empty());
    }

    #[test]
    fn previous_skips_to_innermost_delimiter() {
        let e = Ctx::default()
            .push(Frame::Operator(Value::Int(1)))
            .push(Frame::Delim)
            .push(Frame::Operator(Value::Int(2)));
        assert_eq!(e.previous().unwrap().0.len(), 1);
        assert!(Ctx::default().previous().is_none());
    }
}
