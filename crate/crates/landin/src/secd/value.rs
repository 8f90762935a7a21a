use std::fmt;
use std::rc::Rc;

use crate::outcome::Observable;
use crate::syntax::{name, Env, Name, Term};

/// Machine values, parameterized by the representation `D` of captured
/// dumps.
pub enum Value<D> {
    Int(i64),
    Succ,
    FunClo(Env<Value<D>>, Name, Rc<Term>),
    StateAppender(D),
    PgmClo(Rc<Value<D>>, D),
}

impl<D: Clone> Clone for Value<D> {
    fn clone(&self) -> Self {
        match self {
            Value::Int(n) => Value::Int(*n),
            Value::Succ => Value::Succ,
            Value::FunClo(e, x, t) => Value::FunClo(e.clone(), x.clone(), t.clone()),
            Value::StateAppender(d) => Value::StateAppender(d.clone()),
            Value::PgmClo(v, d) => Value::PgmClo(v.clone(), d.clone()),
        }
    }
}

impl<D> Value<D> {
    pub fn closure(e: &Env<Value<D>>, x: &Name, body: &Rc<Term>) -> Self {
        Value::FunClo(e.clone(), x.clone(), body.clone())
    }
}

impl<D> Observable for Value<D> {
    fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(n) => Some(*n),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

impl<D> fmt::Display for Value<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(n) => write!(f, "{n}"),
            Value::Succ => f.write_str("succ"),
            Value::FunClo(_, x, t) => write!(f, "#closure(lam {x} {t})"),
            Value::StateAppender(_) => f.write_str("#state-appender"),
            Value::PgmClo(v, _) => write!(f, "#program-closure({v})"),
        }
    }
}

impl<D> fmt::Debug for Value<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The initial environment, binding `succ`.
pub fn initial_env<D>() -> Env<Value<D>> {
    Env::empty().extend(name("succ"), Value::Succ)
}

pub(crate) fn succ<D>(v: &Value<D>) -> Result<Value<D>, crate::outcome::StuckReason> {
    match v {
        Value::Int(n) => Ok(Value::Int(n.wrapping_add(1))),
        _ => Err(crate::outcome::StuckReason::SuccNonInteger),
    }
}
