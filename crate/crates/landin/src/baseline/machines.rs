//! The CEK machine and its callee-save and stack-threading variants, all
//! evaluating operators before operands.

use std::fmt;
use std::rc::Rc;

use crate::list::List;
use crate::machine::{Machine, Step, TraceLine};
use crate::outcome::{Observable, StuckReason};
use crate::syntax::{name, Env, Name, Program, Term};

#[derive(Clone)]
pub enum Val {
    Int(i64),
    Succ,
    Clo(Env<Val>, Name, Rc<Term>),
}

impl Observable for Val {
    fn as_int(&self) -> Option<i64> {
        match self {
            Val::Int(n) => Some(*n),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val::Int(n) => write!(f, "{n}"),
            Val::Succ => f.write_str("succ"),
            Val::Clo(_, x, t) => write!(f, "#closure(lam {x} {t})"),
        }
    }
}

impl fmt::Debug for Val {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn initial_env() -> Env<Val> {
    Env::empty().extend(name("succ"), Val::Succ)
}

/// The value of a leaf term, or why it has none.
fn leaf(t: &Rc<Term>, e: &Env<Val>) -> Option<Result<Val, StuckReason>> {
    match &**t {
        Term::Lit(n) => Some(Ok(Val::Int(*n))),
        Term::Var(x) => Some(e.lookup(x).cloned().map_err(|_| StuckReason::UnboundVariable)),
        Term::Lam(x, b) => Some(Ok(Val::Clo(e.clone(), x.clone(), b.clone()))),
        Term::J => Some(Err(StuckReason::Malformed)),
        Term::App(..) => None,
    }
}

fn succ(v: &Val) -> Result<Val, StuckReason> {
    match v {
        Val::Int(n) => Ok(Val::Int(n.wrapping_add(1))),
        _ => Err(StuckReason::SuccNonInteger),
    }
}

fn line(tag: &'static str, focus: String, depth: usize) -> TraceLine {
    TraceLine {
        tag,
        focus,
        ctx_depth: depth,
        dump_depth: 0,
    }
}

pub mod cek {
    use super::*;

    #[derive(Clone, Debug)]
    pub enum Frame {
        /// The operator is being evaluated; the operand waits.
        Arg(Rc<Term>, Env<Val>),
        /// The operand is being evaluated.
        Fun(Val),
    }

    #[derive(Clone, Debug)]
    pub enum Config {
        Eval(Rc<Term>, Env<Val>, List<Frame>),
        Cont(List<Frame>, Val),
    }

    #[derive(Clone, Copy, Debug, Default)]
    pub struct Cek;

    impl Machine for Cek {
        type Config = Config;
        type Value = Val;

        fn inject(&self, p: &Program) -> Config {
            Config::Eval(p.term().clone(), initial_env(), List::nil())
        }

        fn step(&self, cfg: &Config) -> Step<Config, Val> {
            Step::Next(match cfg {
                Config::Eval(t, e, k) => match leaf(t, e) {
                    Some(Ok(v)) => Config::Cont(k.clone(), v),
                    Some(Err(r)) => return Step::Stuck(r),
                    None => {
                        let Term::App(t0, t1) = &**t else { unreachable!() };
                        Config::Eval(t0.clone(), e.clone(), k.push(Frame::Arg(t1.clone(), e.clone())))
                    }
                },
                Config::Cont(k, v) => match k.uncons() {
                    None => return Step::Done(v.clone()),
                    Some((Frame::Arg(t, e), k)) => Config::Eval(t.clone(), e.clone(), k.push(Frame::Fun(v.clone()))),
                    Some((Frame::Fun(f), k)) => match f {
                        Val::Clo(e, x, b) => Config::Eval(b.clone(), e.extend(x.clone(), v.clone()), k),
                        Val::Succ => match succ(v) {
                            Ok(v) => Config::Cont(k, v),
                            Err(r) => return Step::Stuck(r),
                        },
                        Val::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
                    },
                },
            })
        }

        fn describe(&self, cfg: &Config) -> TraceLine {
            match cfg {
                Config::Eval(t, _, k) => line("eval", t.to_string(), k.len()),
                Config::Cont(k, v) => line("cont", v.to_string(), k.len()),
            }
        }
    }
}

pub mod callee_save {
    use super::*;

    #[derive(Clone, Debug)]
    pub enum Frame {
        Arg(Rc<Term>),
        Fun(Val),
        /// Restores the caller's environment.
        Ret(Env<Val>),
    }

    #[derive(Clone, Debug)]
    pub enum Config {
        Eval(Rc<Term>, Env<Val>, List<Frame>),
        Cont(List<Frame>, Val, Env<Val>),
    }

    #[derive(Clone, Copy, Debug, Default)]
    pub struct CekCalleeSave;

    impl Machine for CekCalleeSave {
        type Config = Config;
        type Value = Val;

        fn inject(&self, p: &Program) -> Config {
            Config::Eval(p.term().clone(), initial_env(), List::nil())
        }

        fn step(&self, cfg: &Config) -> Step<Config, Val> {
            Step::Next(match cfg {
                Config::Eval(t, e, k) => match leaf(t, e) {
                    Some(Ok(v)) => Config::Cont(k.clone(), v, e.clone()),
                    Some(Err(r)) => return Step::Stuck(r),
                    None => {
                        let Term::App(t0, t1) = &**t else { unreachable!() };
                        Config::Eval(t0.clone(), e.clone(), k.push(Frame::Arg(t1.clone())))
                    }
                },
                Config::Cont(k, v, e) => match k.uncons() {
                    None => return Step::Done(v.clone()),
                    Some((Frame::Arg(t), k)) => Config::Eval(t.clone(), e.clone(), k.push(Frame::Fun(v.clone()))),
                    Some((Frame::Fun(f), k)) => match f {
                        Val::Clo(e1, x, b) => Config::Eval(
                            b.clone(),
                            e1.extend(x.clone(), v.clone()),
                            k.push(Frame::Ret(e.clone())),
                        ),
                        Val::Succ => match succ(v) {
                            Ok(v) => Config::Cont(k, v, e.clone()),
                            Err(r) => return Step::Stuck(r),
                        },
                        Val::Int(_) => return Step::Stuck(StuckReason::ApplyNonFunction),
                    },
                    Some((Frame::Ret(e1), k)) => Config::Cont(k, v.clone(), e1.clone()),
                },
            })
        }

        fn describe(&self, cfg: &Config) -> TraceLine {
            match cfg {
                Config::Eval(t, _, k) => line("eval", t.to_string(), k.len()),
                Config::Cont(k, v, _) => line("cont", v.to_string(), k.len()),
            }
        }
    }
}

pub mod stack {
    use super::*;

    #[derive(Clone, Debug)]
    pub enum Frame {
        Arg(Rc<Term>, Env<Val>),
        /// The operator value is on the data stack.
        Fun,
        /// Restores the caller's data stack.
        Ret(List<Val>),
    }

    #[derive(Clone, Debug)]
    pub enum Config {
        Eval(Rc<Term>, List<Val>, Env<Val>, List<Frame>),
        Cont(List<Frame>, List<Val>),
    }

    #[derive(Clone, Copy, Debug, Default)]
    pub struct CekStack;

    impl Machine for CekStack {
        type Config = Config;
        type Value = Val;

        fn inject(&self, p: &Program) -> Config {
            Config::Eval(p.term().clone(), List::nil(), initial_env(), List::nil())
        }

        fn step(&self, cfg: &Config) -> Step<Config, Val> {
            Step::Next(match cfg {
                Config::Eval(t, s, e, k) => match leaf(t, e) {
                    Some(Ok(v)) => Config::Cont(k.clone(), s.push(v)),
                    Some(Err(r)) => return Step::Stuck(r),
                    None => {
                        let Term::App(t0, t1) = &**t else { unreachable!() };
                        Config::Eval(t0.clone(), s.clone(), e.clone(), k.push(Frame::Arg(t1.clone(), e.clone())))
                    }
                },
                Config::Cont(k, s) => {
                    let Some((v, rest)) = s.uncons() else {
                        return Step::Stuck(StuckReason::Malformed);
                    };
                    match k.uncons() {
                        None => return Step::Done(v.clone()),
                        Some((Frame::Arg(t, e), k)) => {
                            Config::Eval(t.clone(), s.clone(), e.clone(), k.push(Frame::Fun))
                        }
                        Some((Frame::Fun, k)) => match rest.uncons() {
                            Some((Val::Clo(e, x, b), s0)) => Config::Eval(
                                b.clone(),
                                List::nil(),
                                e.extend(x.clone(), v.clone()),
                                k.push(Frame::Ret(s0)),
                            ),
                            Some((Val::Succ, s0)) => match succ(v) {
                                Ok(v) => Config::Cont(k, s0.push(v)),
                                Err(r) => return Step::Stuck(r),
                            },
                            Some((Val::Int(_), _)) => return Step::Stuck(StuckReason::ApplyNonFunction),
                            None => return Step::Stuck(StuckReason::Malformed),
                        },
                        Some((Frame::Ret(s1), k)) => Config::Cont(k, s1.push(v.clone())),
                    }
                }
            })
        }

        fn describe(&self, cfg: &Config) -> TraceLine {
            match cfg {
                Config::Eval(t, _, _, k) => line("eval", t.to_string(), k.len()),
                Config::Cont(k, s) => line(
                    "cont",
                    s.head().map(|v| v.to_string()).unwrap_or_default(),
                    k.len(),
                ),
            }
        }
    }
}
