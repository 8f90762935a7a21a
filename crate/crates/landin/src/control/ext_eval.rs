//! Call-by-value, right-to-left evaluation of the extended language.

use std::fmt;
use std::rc::Rc;

use super::comp::{self, pure, run, step, stuck, Capture, Comp, Cont};
use crate::outcome::{Observable, Run, StuckReason};
use crate::syntax::{name, Env, ExtTerm, Name, Pattern};

#[derive(Clone)]
pub enum ExtValue {
    Int(i64),
    Succ,
    Clo(Env<ExtValue>, Name, Rc<ExtTerm>),
    Pair(Rc<ExtValue>, Rc<ExtValue>),
    Inl(Rc<ExtValue>),
    Inr(Rc<ExtValue>),
    Captured(Cont<ExtValue>),
}

impl fmt::Display for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtValue::Int(n) => write!(f, "{n}"),
            ExtValue::Succ => f.write_str("succ"),
            ExtValue::Clo(_, x, t) => write!(f, "#closure(lam {x} {t})"),
            ExtValue::Pair(a, b) => write!(f, "(pair {a} {b})"),
            ExtValue::Inl(v) => write!(f, "(inl {v})"),
            ExtValue::Inr(v) => write!(f, "(inr {v})"),
            ExtValue::Captured(k) => write!(f, "#continuation({})", k.kind()),
        }
    }
}

impl fmt::Debug for ExtValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Observable for ExtValue {
    fn as_int(&self) -> Option<i64> {
        match self {
            ExtValue::Int(n) => Some(*n),
            _ => None,
        }
    }

    fn describe(&self) -> String {
        self.to_string()
    }
}

pub fn initial_ext_env() -> Env<ExtValue> {
    Env::empty().extend(name("succ"), ExtValue::Succ)
}

fn bind_pattern(p: &Pattern, v: &ExtValue, e: &Env<ExtValue>) -> Option<Env<ExtValue>> {
    match (p, v) {
        (Pattern::Var(x), v) => Some(e.extend(x.clone(), v.clone())),
        (Pattern::Pair(p, q), ExtValue::Pair(a, b)) => {
            let e = bind_pattern(p, a, e)?;
            bind_pattern(q, b, &e)
        }
        (Pattern::Inl(p), ExtValue::Inl(a)) | (Pattern::Inr(p), ExtValue::Inr(a)) => {
            bind_pattern(p, a, e)
        }
        _ => None,
    }
}

fn capture_op(t: &ExtTerm) -> Capture {
    match t {
        ExtTerm::Shift1(..) => Capture::Shift1,
        ExtTerm::Shift2(..) => Capture::Shift2,
        ExtTerm::Cop1(..) => Capture::Control1,
        _ => Capture::Control2,
    }
}

pub fn eval(t: Rc<ExtTerm>, e: Env<ExtValue>) -> Comp<ExtValue> {
    step(move || eval_now(&t, &e))
}

fn eval_now(t: &Rc<ExtTerm>, e: &Env<ExtValue>) -> Comp<ExtValue> {
    use ExtTerm as T;
    match &**t {
        T::Lit(n) => pure(ExtValue::Int(*n)),
        T::Var(x) => match e.lookup(x) {
            Ok(v) => pure(v.clone()),
            Err(_) => stuck(StuckReason::UnboundVariable),
        },
        T::Lam(x, b) => pure(ExtValue::Clo(e.clone(), x.clone(), b.clone())),
        T::App(t0, t1) => {
            let (t0, e0) = (t0.clone(), e.clone());
            eval(t1.clone(), e.clone()).bind(move |v1| {
                eval(t0.clone(), e0.clone()).bind(move |v0| apply(v0, v1.clone()))
            })
        }
        T::Shift1(k, b) | T::Shift2(k, b) | T::Cop1(k, b) | T::Cop2(k, b) => {
            let (k, b, e) = (k.clone(), b.clone(), e.clone());
            comp::capture(capture_op(t), move |c| {
                eval(b, e.extend(k, ExtValue::Captured(c)))
            })
        }
        T::Reset1(b) => comp::reset1(eval(b.clone(), e.clone())),
        T::Reset2(b) => comp::reset2(eval(b.clone(), e.clone())),
        T::Callcc(f) => eval(f.clone(), e.clone()).bind(|f| {
            comp::callcc(move |c| apply(f.clone(), ExtValue::Captured(c)))
        }),
        T::Pair(a, b) => {
            let (a, e0) = (a.clone(), e.clone());
            eval(b.clone(), e.clone()).bind(move |vb| {
                eval(a.clone(), e0.clone())
                    .bind(move |va| pure(ExtValue::Pair(Rc::new(va), Rc::new(vb.clone()))))
            })
        }
        T::Inl(a) => eval(a.clone(), e.clone()).bind(|v| pure(ExtValue::Inl(Rc::new(v)))),
        T::Inr(a) => eval(a.clone(), e.clone()).bind(|v| pure(ExtValue::Inr(Rc::new(v)))),
        T::Case(s, p, l, q, r) => {
            let (p, l, q, r, e0) = (p.clone(), l.clone(), q.clone(), r.clone(), e.clone());
            eval(s.clone(), e.clone()).bind(move |v| {
                let (pat, body, inner) = match &v {
                    ExtValue::Inl(a) => (&p, &l, a),
                    ExtValue::Inr(a) => (&q, &r, a),
                    _ => return stuck(StuckReason::CaseNonSum),
                };
                match bind_pattern(pat, inner, &e0) {
                    Some(e1) => eval(body.clone(), e1),
                    None => stuck(StuckReason::CaseNonSum),
                }
            })
        }
        T::LetP(p, t0, t1) => {
            let (p, t1, e0) = (p.clone(), t1.clone(), e.clone());
            eval(t0.clone(), e.clone()).bind(move |v| match bind_pattern(&p, &v, &e0) {
                Some(e1) => eval(t1.clone(), e1),
                // A destructuring let on a normal return that receives a
                // thrown pair means a value reached the top level through
                // a program closure with nowhere to go.
                None if matches!((&p, &v), (Pattern::Inl(_), ExtValue::Inr(_))) => {
                    stuck(StuckReason::JOutsideLambda)
                }
                None => stuck(StuckReason::CaseNonSum),
            })
        }
    }
}

pub fn apply(f: ExtValue, v: ExtValue) -> Comp<ExtValue> {
    match f {
        ExtValue::Succ => match v {
            ExtValue::Int(n) => pure(ExtValue::Int(n.wrapping_add(1))),
            _ => stuck(StuckReason::SuccNonInteger),
        },
        ExtValue::Clo(e, x, b) => eval(b, e.extend(x, v)),
        ExtValue::Captured(k) => comp::resume(k, v),
        _ => stuck(StuckReason::ApplyNonFunction),
    }
}

/// Evaluates `t` under `reset2(reset1(.))` in `e`.
pub fn ext_eval(t: &ExtTerm, e: &Env<ExtValue>, fuel: u64) -> Run<ExtValue> {
    let c = comp::reset2(comp::reset1(eval(Rc::new(t.clone()), e.clone())));
    run(c, fuel)
}

/// Evaluates a closed term in the initial environment.
pub fn ext_run(t: &ExtTerm, fuel: u64) -> Run<ExtValue> {
    ext_eval(t, &initial_ext_env(), fuel)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::outcome::Outcome;
    use crate::syntax::parse_ext;

    fn value(src: &str) -> Outcome<Option<i64>> {
        ext_run(&parse_ext(src).unwrap(), 100_000)
            .outcome
            .map(|v| v.as_int())
    }

    #[test]
    fn basics() {
        assert_eq!(value("((lam x x) 42)"), Outcome::Final(Some(42)));
        assert_eq!(
            value("(case (inl 3) (inl x (succ x)) (inr y 0))"),
            Outcome::Final(Some(4))
        );
        assert_eq!(
            value("(letp (pair a b) (pair 1 2) b)"),
            Outcome::Final(Some(2))
        );
        assert_eq!(
            value("(case 3 (inl x x) (inr y y))"),
            Outcome::Stuck(StuckReason::CaseNonSum)
        );
        assert_eq!(
            value("(let (inl v) (inr 3) v)"),
            Outcome::Stuck(StuckReason::JOutsideLambda)
        );
        assert_eq!(value("z"), Outcome::Stuck(StuckReason::UnboundVariable));
    }

    #[test]
    fn operands_before_operators() {
        assert_eq!(
            value("((lam d ((0 0) (shift1 k 7))) 5)"),
            Outcome::Final(Some(7))
        );
        assert_eq!(
            value("(pair (0 0) (shift1 k 7))"),
            Outcome::Final(Some(7))
        );
    }

    #[test]
    fn control_examples() {
        assert_eq!(value("(reset1 (shift1 k (k 5)))"), Outcome::Final(Some(5)));
        assert_eq!(value("(reset1 (succ (shift1 k 10)))"), Outcome::Final(Some(10)));
        assert_eq!(
            value("(reset1 (succ (callcc (lam k 10))))"),
            Outcome::Final(Some(11))
        );
        assert_eq!(
            value("(reset2 (reset1 (succ (shift1 c (shift2 d (d (c 1)))))))"),
            Outcome::Final(Some(2))
        );
    }
}
