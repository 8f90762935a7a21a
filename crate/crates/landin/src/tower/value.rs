use std::fmt;
use std::rc::Rc;

use crate::control::{Comp, Cont};
use crate::outcome::{Observable, StuckReason};
use crate::syntax::{name, Env, Name, Term};

pub type Computation = Comp<HoValue>;
pub type Applicable = Rc<dyn Fn(HoValue) -> Computation>;

/// What a dump continuation receives in the Burge-style evaluator.
#[derive(Clone, Debug)]
pub enum Returned {
    Yield(HoValue),
    Throw(HoValue, HoValue),
}

/// A dump, in whichever representation the engine uses.
#[derive(Clone)]
pub enum Dump {
    /// A host function from values.
    Host(Applicable),
    /// A host function from tagged results.
    Tagged(Rc<dyn Fn(Returned) -> Computation>),
    /// A continuation captured by a control operator.
    Captured(Cont<HoValue>),
}

impl fmt::Debug for Dump {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dump::Host(_) => f.write_str("#dump"),
            Dump::Tagged(_) => f.write_str("#tagged-dump"),
            Dump::Captured(k) => write!(f, "{k:?}"),
        }
    }
}

/// Values of the higher-order evaluators. The compositional engines use
/// only `Int` and `Fun`.
#[derive(Clone)]
pub enum HoValue {
    Int(i64),
    Succ,
    FunClo(Env<HoValue>, Name, Rc<Term>),
    StateAppender(Dump),
    PgmClo(Rc<HoValue>, Dump),
    Fun(Applicable),
}

impl HoValue {
    pub fn fun(f: impl Fn(HoValue) -> Computation + 'static) -> HoValue {
        HoValue::Fun(Rc::new(f))
    }
}

impl fmt::Display for HoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HoValue::Int(n) => write!(f, "{n}"),
            HoValue::Succ => f.write_str("succ"),
            HoValue::FunClo(_, x, t) => write!(f, "#closure(lam {x} {t})"),
            HoValue::StateAppender(_) => f.write_str("#state-appender"),
            HoValue::PgmClo(v, _) => write!(f, "#program-closure({v})"),
            HoValue::Fun(_) => f.write_str("#function"),
        }
    }
}

impl fmt::Debug for HoValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Observable for HoValue {
    fn as_int(&self) -> Option<i64> {
        match self {
            HoValue::Int(n) => Some(*n),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

pub fn initial_env() -> Env<HoValue> {
    Env::empty().extend(name("succ"), HoValue::Succ)
}

pub(crate) fn succ(v: &HoValue) -> Result<HoValue, StuckReason> {
    match v {
        HoValue::Int(n) => Ok(HoValue::Int(n.wrapping_add(1))),
        _ => Err(StuckReason::SuccNonInteger),
    }
}
