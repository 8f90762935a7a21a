//! Computations over a three-layer continuation stack.
//!
//! A [`Comp`] is a description of work; [`run`] interprets it with an
//! explicit loop, so neither deep object-level recursion nor captured
//! continuations consume host stack. The three layers are:
//!
//! * `k1`, a list of frames (the current delimited context),
//! * `k2`, a list of saved `k1`s (one per enclosing `reset1`),
//! * `k3`, a list of saved `(k1, k2)` pairs (one per enclosing `reset2`).
//!
//! The outermost identities act as the top delimiters, so every capture
//! operator is total.

use std::fmt;
use std::rc::Rc;

use crate::list::List;
use crate::outcome::{Outcome, Run, StuckReason};

pub type Frame<V> = Rc<dyn Fn(V) -> Comp<V>>;
pub type K1<V> = List<Frame<V>>;
pub type K2<V> = List<K1<V>>;

/// A captured continuation.
pub enum Cont<V> {
    /// From `shift1`: resuming composes with the current context.
    Pushy1(K1<V>),
    /// From `shift2`.
    Pushy2(K1<V>, K2<V>),
    /// From `C1` or `callcc`: resuming replaces the current `k1`.
    Jumpy1(K1<V>),
    /// From `C2`: resuming replaces `k1` and `k2`.
    Jumpy2(K1<V>, K2<V>),
}

impl<V> Clone for Cont<V> {
    fn clone(&self) -> Self {
        match self {
            Cont::Pushy1(k) => Cont::Pushy1(k.clone()),
            Cont::Pushy2(k, kk) => Cont::Pushy2(k.clone(), kk.clone()),
            Cont::Jumpy1(k) => Cont::Jumpy1(k.clone()),
            Cont::Jumpy2(k, kk) => Cont::Jumpy2(k.clone(), kk.clone()),
        }
    }
}

impl<V> Cont<V> {
    pub fn kind(&self) -> &'static str {
        match self {
            Cont::Pushy1(_) => "shift1",
            Cont::Pushy2(..) => "shift2",
            Cont::Jumpy1(_) => "jumpy1",
            Cont::Jumpy2(..) => "jumpy2",
        }
    }
}

impl<V> fmt::Debug for Cont<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#continuation({})", self.kind())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Capture {
    Shift1,
    Shift2,
    Control1,
    Control2,
    CallCc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    One,
    Two,
}

pub enum Comp<V> {
    Pure(V),
    Stuck(StuckReason),
    Bind(Box<Comp<V>>, Frame<V>),
    Reset(Level, Box<Comp<V>>),
    Capture(Capture, Box<dyn FnOnce(Cont<V>) -> Comp<V>>),
    Resume(Cont<V>, V),
    /// One unit of fuel, then the delayed computation.
    Step(Box<dyn FnOnce() -> Comp<V>>),
}

impl<V: 'static> Comp<V> {
    pub fn bind(self, f: impl Fn(V) -> Comp<V> + 'static) -> Comp<V> {
        match self {
            Comp::Stuck(r) => Comp::Stuck(r),
            m => Comp::Bind(Box::new(m), Rc::new(f)),
        }
    }

    pub fn then(self, f: Frame<V>) -> Comp<V> {
        Comp::Bind(Box::new(self), f)
    }
}

pub fn pure<V>(v: V) -> Comp<V> {
    Comp::Pure(v)
}

pub fn stuck<V>(r: StuckReason) -> Comp<V> {
    Comp::Stuck(r)
}

pub fn step<V>(f: impl FnOnce() -> Comp<V> + 'static) -> Comp<V> {
    Comp::Step(Box::new(f))
}

pub fn reset1<V>(c: Comp<V>) -> Comp<V> {
    Comp::Reset(Level::One, Box::new(c))
}

pub fn reset2<V>(c: Comp<V>) -> Comp<V> {
    Comp::Reset(Level::Two, Box::new(c))
}

pub fn capture<V>(op: Capture, f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    Comp::Capture(op, Box::new(f))
}

pub fn shift1<V>(f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    capture(Capture::Shift1, f)
}

pub fn shift2<V>(f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    capture(Capture::Shift2, f)
}

pub fn control1<V>(f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    capture(Capture::Control1, f)
}

pub fn control2<V>(f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    capture(Capture::Control2, f)
}

pub fn callcc<V>(f: impl FnOnce(Cont<V>) -> Comp<V> + 'static) -> Comp<V> {
    capture(Capture::CallCc, f)
}

pub fn resume<V>(k: Cont<V>, v: V) -> Comp<V> {
    Comp::Resume(k, v)
}

/// Interpreter iterations allowed per unit of fuel, beyond a fixed
/// allowance. Returning through frames is free, and some divergent programs
/// with J pile up frames faster than they consume fuel.
pub const WORK_PER_STEP: u64 = 1_000;
const WORK_ALLOWANCE: u64 = 1_000_000;

/// Runs a computation under the outermost identities. Each [`Comp::Step`]
/// costs one unit of fuel. Exceeding the work bound derived from
/// [`WORK_PER_STEP`] also counts as running out of fuel.
pub fn run<V>(c: Comp<V>, fuel: u64) -> Run<V> {
    let mut k1: K1<V> = List::nil();
    let mut k2: K2<V> = List::nil();
    let mut k3: List<(K1<V>, K2<V>)> = List::nil();
    let mut steps = 0u64;
    let work_bound = fuel.saturating_mul(WORK_PER_STEP).saturating_add(WORK_ALLOWANCE);
    let mut work = 0u64;
    let mut cur = c;
    loop {
        work += 1;
        if work > work_bound {
            return Run {
                outcome: Outcome::OutOfFuel(fuel),
                steps: fuel,
            };
        }
        cur = match cur {
            Comp::Pure(v) => {
                if let Some((f, rest)) = k1.uncons() {
                    let f = f.clone();
                    k1 = rest;
                    f(v)
                } else if let Some((k, rest)) = k2.uncons() {
                    k1 = k.clone();
                    k2 = rest;
                    Comp::Pure(v)
                } else if let Some(((a, b), rest)) = k3.uncons() {
                    k1 = a.clone();
                    k2 = b.clone();
                    k3 = rest;
                    Comp::Pure(v)
                } else {
                    return Run {
                        outcome: Outcome::Final(v),
                        steps,
                    };
                }
            }
            Comp::Stuck(r) => {
                return Run {
                    outcome: Outcome::Stuck(r),
                    steps,
                }
            }
            Comp::Bind(m, f) => {
                k1 = List::cons(f, k1);
                *m
            }
            Comp::Reset(Level::One, m) => {
                k2 = List::cons(std::mem::take(&mut k1), k2);
                *m
            }
            Comp::Reset(Level::Two, m) => {
                k3 = List::cons((std::mem::take(&mut k1), std::mem::take(&mut k2)), k3);
                *m
            }
            Comp::Capture(op, f) => {
                let k = match op {
                    Capture::Shift1 => Cont::Pushy1(std::mem::take(&mut k1)),
                    Capture::Control1 => Cont::Jumpy1(std::mem::take(&mut k1)),
                    Capture::CallCc => Cont::Jumpy1(k1.clone()),
                    Capture::Shift2 => {
                        Cont::Pushy2(std::mem::take(&mut k1), std::mem::take(&mut k2))
                    }
                    Capture::Control2 => {
                        Cont::Jumpy2(std::mem::take(&mut k1), std::mem::take(&mut k2))
                    }
                };
                f(k)
            }
            Comp::Resume(k, v) => {
                match k {
                    Cont::Pushy1(k) => {
                        k2 = List::cons(std::mem::replace(&mut k1, k), k2);
                    }
                    Cont::Pushy2(k, kk) => {
                        let saved = (
                            std::mem::replace(&mut k1, k),
                            std::mem::replace(&mut k2, kk),
                        );
                        k3 = List::cons(saved, k3);
                    }
                    Cont::Jumpy1(k) => k1 = k,
                    Cont::Jumpy2(k, kk) => {
                        k1 = k;
                        k2 = kk;
                    }
                }
                Comp::Pure(v)
            }
            Comp::Step(f) => {
                if steps == fuel {
                    return Run {
                        outcome: Outcome::OutOfFuel(fuel),
                        steps,
                    };
                }
                steps += 1;
                f()
            }
        }
    }
}
