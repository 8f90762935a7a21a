//! The clause tables. Each translation is a fold over the source term;
//! literals, variables and applications depend only on the calling
//! convention, while abstractions and J are specific to each simulation.

use super::build::*;
use super::{Simulation as S, Variant};
use crate::syntax::{name, ExtTerm as X, Name, Term};

/// How translated terms receive their continuations.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Convention {
    Direct,
    /// `λk. ...`
    OneLayer,
    /// `λk.λd. ...`, functions take both.
    TwoLayers,
    /// `λk.λd. ...`, functions take only `k`.
    Return,
    /// `λk.λj. ...`, functions take both (the table with JI).
    DoubleBarrelled,
    /// `λd. ...` around direct-style code.
    DirectReturn,
}

pub(super) struct Translator {
    sim: S,
    variant: Variant,
    fresh: Fresh,
}

impl Translator {
    pub(super) fn new(sim: S, variant: Variant, source: &Term) -> Translator {
        Translator {
            sim,
            variant,
            fresh: Fresh::for_term(source),
        }
    }

    fn convention(&self) -> Convention {
        use Convention::*;
        match self.sim {
            S::DsShift2 | S::DsC2 | S::FelleisenDs | S::BurgeDs => Direct,
            S::Cps1Shift | S::Cps1C | S::Cps1Callcc | S::FelleisenCps | S::BurgeCps1 => OneLayer,
            S::Cps2 | S::BurgeCps2 => TwoLayers,
            S::CpsRet => Return,
            S::Thielecke if self.variant == Variant::ViaJi => DoubleBarrelled,
            S::Thielecke => Return,
            S::DsRet => DirectReturn,
        }
    }

    fn n(&mut self, base: &'static str) -> Name {
        self.fresh.name(base)
    }

    pub(super) fn term(&mut self, t: &Term, succ_bound: bool) -> X {
        match t {
            Term::Lit(n) => self.value(X::Lit(*n)),
            Term::Var(x) if &**x == "succ" && !succ_bound => {
                let s = self.succ();
                self.value(s)
            }
            Term::Var(x) => self.value(var(x)),
            Term::App(t0, t1) => {
                let a = self.term(t0, succ_bound);
                let b = self.term(t1, succ_bound);
                self.app(a, b)
            }
            Term::Lam(x, b) => {
                let body = self.term(b, succ_bound || &**x == "succ");
                self.lam(x, body)
            }
            Term::J => self.j(),
        }
    }

    /// The successor function under the calling convention.
    fn succ(&mut self) -> X {
        let s = X::var("succ");
        let (n, k) = (self.n("n"), self.n("k"));
        let bump = app(s.clone(), var(&n));
        match self.convention() {
            Convention::Direct | Convention::DirectReturn => s,
            Convention::OneLayer | Convention::Return => lam(&n, lam(&k, app(var(&k), bump))),
            Convention::TwoLayers => {
                let d = self.n("d");
                lam(&n, lam(&k, lam(&d, app2(var(&k), bump, var(&d)))))
            }
            Convention::DoubleBarrelled => {
                let j = self.n("j");
                lam(&n, lam(&k, lam(&j, app(var(&k), bump))))
            }
        }
    }

    /// A term whose value is `w`.
    fn value(&mut self, w: X) -> X {
        match self.convention() {
            Convention::Direct => w,
            Convention::OneLayer => {
                let k = self.n("k");
                lam(&k, app(var(&k), w))
            }
            Convention::TwoLayers => {
                let (k, d) = (self.n("k"), self.n("d"));
                lam(&k, lam(&d, app2(var(&k), w, var(&d))))
            }
            Convention::Return | Convention::DoubleBarrelled => {
                let (k, d) = (self.n("k"), self.n("d"));
                lam(&k, lam(&d, app(var(&k), w)))
            }
            Convention::DirectReturn => {
                let d = self.n("d");
                lam(&d, w)
            }
        }
    }

    /// The application of (translated) `a` to (translated) `b`, operand
    /// first.
    fn app(&mut self, a: X, b: X) -> X {
        match self.convention() {
            Convention::Direct => app(a, b),
            Convention::OneLayer => {
                let (k, v0, v1) = (self.n("k"), self.n("v"), self.n("v"));
                let call = app2(var(&v0), var(&v1), var(&k));
                lam(&k, app(b, lam(&v1, app(a, lam(&v0, call)))))
            }
            Convention::TwoLayers => {
                let (k, d, v0, v1) = (self.n("k"), self.n("d"), self.n("v"), self.n("v"));
                let (d0, d1) = (self.n("d"), self.n("d"));
                let call = app3(var(&v0), var(&v1), var(&k), var(&d0));
                let inner = lam(&v1, lam(&d1, app2(a, lam(&v0, lam(&d0, call)), var(&d1))));
                lam(&k, lam(&d, app2(b, inner, var(&d))))
            }
            Convention::Return => {
                let (k, d, v0, v1) = (self.n("k"), self.n("d"), self.n("v"), self.n("v"));
                let call = app2(var(&v0), var(&v1), var(&k));
                let inner = lam(&v1, app2(a, lam(&v0, call), var(&d)));
                lam(&k, lam(&d, app2(b, inner, var(&d))))
            }
            Convention::DoubleBarrelled => {
                let (k, j, v0, v1) = (self.n("k"), self.n("j"), self.n("v"), self.n("v"));
                let call = app3(var(&v0), var(&v1), var(&k), var(&j));
                let inner = lam(&v1, app2(a, lam(&v0, call), var(&j)));
                lam(&k, lam(&j, app2(b, inner, var(&j))))
            }
            Convention::DirectReturn => {
                let d = self.n("d");
                lam(&d, app(app(a, var(&d)), app(b, var(&d))))
            }
        }
    }

    fn id(&mut self) -> X {
        let v = self.n("v");
        lam(&v, var(&v))
    }

    fn lam(&mut self, x: &Name, body: X) -> X {
        match self.sim {
            S::DsShift2 | S::DsC2 => lam(x, reset1(body)),
            S::Cps1Shift | S::Cps1C | S::Cps1Callcc => {
                let (k, k1) = (self.n("k"), self.n("k"));
                let id = self.id();
                lam(&k, app(var(&k), lam(x, lam(&k1, app(var(&k1), app(body, id))))))
            }
            S::Cps2 => {
                let (k, d, k1, d1) = (self.n("k"), self.n("d"), self.n("k"), self.n("d"));
                let (v, d2, w) = (self.n("v"), self.n("d"), self.n("v"));
                let ret = lam(&v, lam(&d2, app(var(&d2), var(&v))));
                let resume = lam(&w, app2(var(&k1), var(&w), var(&d1)));
                let f = lam(x, lam(&k1, lam(&d1, app2(body, ret, resume))));
                lam(&k, lam(&d, app2(var(&k), f, var(&d))))
            }
            S::CpsRet | S::Thielecke => {
                let (k, d, k1) = (self.n("k"), self.n("d"), self.n("k"));
                let f = if self.variant == Variant::ViaJi {
                    let j1 = self.n("j");
                    lam(x, lam(&k1, lam(&j1, app2(body, var(&k1), var(&k1)))))
                } else {
                    lam(x, lam(&k1, app2(body, var(&k1), var(&k1))))
                };
                lam(&k, lam(&d, app(var(&k), f)))
            }
            S::DsRet => {
                let (d, k) = (self.n("d"), self.n("k"));
                let resumed = app(var(&k), app(body, var(&k)));
                let captured = if self.variant == Variant::ResetFree {
                    resumed
                } else {
                    reset1(resumed)
                };
                lam(&d, lam(x, shift1(&k, captured)))
            }
            S::FelleisenDs => {
                let (d, v, v1) = (self.n("d"), self.n("v"), self.n("v"));
                let j = name("J");
                let call = app(var(&v), var(&v1));
                match self.variant {
                    Variant::CallccFlavor => {
                        let pc = lam(&v, lam(&v1, app(var(&d), call)));
                        lam(x, callcc(lam(&d, let_(&j, pc, body))))
                    }
                    Variant::ControlFlavor => {
                        let pc = lam(&v, lam(&v1, app(var(&d), call)));
                        lam(x, cop1(&d, let_(&j, pc, app(var(&d), body))))
                    }
                    _ => {
                        let k = self.n("k");
                        let pc = lam(&v, lam(&v1, shift1(&k, app(var(&d), call))));
                        lam(x, shift1(&d, let_(&j, pc, app(var(&d), body))))
                    }
                }
            }
            S::FelleisenCps => {
                let (k, d, v, k1, v1, k2) = (
                    self.n("k"),
                    self.n("d"),
                    self.n("v"),
                    self.n("k"),
                    self.n("v"),
                    self.n("k"),
                );
                let pc = lam(&v1, lam(&k2, app2(var(&v), var(&v1), var(&d))));
                let sa = lam(&v, lam(&k1, app(var(&k1), pc)));
                let f = lam(x, lam(&d, let_(&name("J"), sa, app(body, var(&d)))));
                lam(&k, app(var(&k), f))
            }
            S::BurgeDs => {
                let (v, v0, v1) = (self.n("v"), self.n("v"), self.n("v"));
                let throw = app(var(&v0), var(&v1));
                lam(x, case_sum(reset1(inl(body)), &v, var(&v), &v0, &v1, throw))
            }
            S::BurgeCps1 => {
                let (k, k1, w, v, v0, v1) = (
                    self.n("k"),
                    self.n("k"),
                    self.n("v"),
                    self.n("v"),
                    self.n("v"),
                    self.n("v"),
                );
                let ret = lam(&w, inl(var(&w)));
                let normal = app(var(&k1), var(&v));
                let throw = app2(var(&v0), var(&v1), var(&k1));
                let f = lam(x, lam(&k1, case_sum(app(body, ret), &v, normal, &v0, &v1, throw)));
                lam(&k, app(var(&k), f))
            }
            S::BurgeCps2 => {
                let (k, d, k1, d1) = (self.n("k"), self.n("d"), self.n("k"), self.n("d"));
                let (w, d2, r) = (self.n("v"), self.n("d"), self.n("v"));
                let (v, v0, v1) = (self.n("v"), self.n("v"), self.n("v"));
                let ret = lam(&w, lam(&d2, app(var(&d2), inl(var(&w)))));
                let normal = app2(var(&k1), var(&v), var(&d1));
                let throw = app3(var(&v0), var(&v1), var(&k1), var(&d1));
                let dump = lam(&r, case_sum(var(&r), &v, normal, &v0, &v1, throw));
                let f = lam(x, lam(&k1, lam(&d1, app2(body, ret, dump))));
                lam(&k, lam(&d, app2(var(&k), f, var(&d))))
            }
        }
    }

    fn j(&mut self) -> X {
        match self.sim {
            S::DsShift2 => {
                let (c, d, v, v1, c1, d1) = (
                    self.n("c"),
                    self.n("d"),
                    self.n("v"),
                    self.n("v"),
                    self.n("c"),
                    self.n("d"),
                );
                let jump = app(var(&d), reset1(app(var(&v), var(&v1))));
                let pc = lam(&v1, shift1(&c1, shift2(&d1, jump)));
                shift1(&c, shift2(&d, app(var(&d), app(var(&c), lam(&v, pc)))))
            }
            S::DsC2 => {
                let (c, d, v, v1) = (self.n("c"), self.n("d"), self.n("v"), self.n("v"));
                let pc = lam(&v1, app(var(&d), reset1(app(var(&v), var(&v1)))));
                cop1(&c, cop2(&d, app(var(&d), self.resume_jumpy(&c, lam(&v, pc)))))
            }
            S::Cps1Shift | S::Cps1C | S::Cps1Callcc => {
                let (k, d, v, k1, v1, k2) = (
                    self.n("k"),
                    self.n("d"),
                    self.n("v"),
                    self.n("k"),
                    self.n("v"),
                    self.n("k"),
                );
                let id = self.id();
                let jump = app(var(&d), app2(var(&v), var(&v1), id));
                let pc_body = if self.sim == S::Cps1Shift {
                    let d1 = self.n("d");
                    shift1(&d1, jump)
                } else {
                    jump
                };
                let sa = lam(&v, lam(&k1, app(var(&k1), lam(&v1, lam(&k2, pc_body)))));
                let resumed = app(var(&k), sa);
                match self.sim {
                    S::Cps1Shift => lam(&k, shift1(&d, app(var(&d), resumed))),
                    S::Cps1C => lam(&k, cop1(&d, app(var(&d), resumed))),
                    _ => lam(&k, callcc(lam(&d, resumed))),
                }
            }
            S::Cps2 => {
                let (k, d, v, k1, d3) = (self.n("k"), self.n("d"), self.n("v"), self.n("k"), self.n("d"));
                let (v1, k2, d1, w, d2) = (self.n("v"), self.n("k"), self.n("d"), self.n("v"), self.n("d"));
                let ret = lam(&w, lam(&d2, app(var(&d2), var(&w))));
                let pc = lam(&v1, lam(&k2, lam(&d1, app3(var(&v), var(&v1), ret, var(&d)))));
                let sa = lam(&v, lam(&k1, lam(&d3, app2(var(&k1), pc, var(&d3)))));
                lam(&k, lam(&d, app2(var(&k), sa, var(&d))))
            }
            S::CpsRet | S::Thielecke if self.variant != Variant::ViaJi => {
                let (k, d, v, k1, v1, k2) = (
                    self.n("k"),
                    self.n("d"),
                    self.n("v"),
                    self.n("k"),
                    self.n("v"),
                    self.n("k"),
                );
                let pc = lam(&v1, lam(&k2, app2(var(&v), var(&v1), var(&d))));
                let sa = lam(&v, lam(&k1, app(var(&k1), pc)));
                lam(&k, lam(&d, app(var(&k), sa)))
            }
            S::CpsRet | S::Thielecke => self.j_from_ji(),
            S::DsRet => {
                let (d, v0, v1, k) = (self.n("d"), self.n("v"), self.n("v"), self.n("k"));
                let jump = app(var(&d), app(var(&v0), var(&v1)));
                let body = if self.variant == Variant::ResetFree {
                    jump
                } else {
                    reset1(jump)
                };
                lam(&d, lam(&v0, lam(&v1, shift1(&k, body))))
            }
            S::FelleisenDs | S::FelleisenCps => self.value(X::var("J")),
            S::BurgeDs => {
                let (c, d, v, v1) = (self.n("c"), self.n("d"), self.n("v"), self.n("v"));
                let throw = app(var(&d), inr(pair(var(&v), var(&v1))));
                if matches!(self.variant, Variant::ControlFlavor | Variant::AsPrinted) {
                    let pc = lam(&v1, throw);
                    cop1(&c, cop2(&d, app(var(&d), self.resume_jumpy(&c, lam(&v, pc)))))
                } else {
                    let (c1, d1) = (self.n("c"), self.n("d"));
                    let pc = lam(&v1, shift1(&c1, shift2(&d1, throw)));
                    shift1(&c, shift2(&d, app(var(&d), app(var(&c), lam(&v, pc)))))
                }
            }
            S::BurgeCps1 => {
                let (k, d, v, k1, v1, k2) = (
                    self.n("k"),
                    self.n("d"),
                    self.n("v"),
                    self.n("k"),
                    self.n("v"),
                    self.n("k"),
                );
                let throw = app(var(&d), inr(pair(var(&v), var(&v1))));
                let pc_body = match self.variant {
                    Variant::ControlFlavor | Variant::CallccFlavor => throw,
                    _ => {
                        let d1 = self.n("d");
                        shift1(&d1, throw)
                    }
                };
                let sa = lam(&v, lam(&k1, app(var(&k1), lam(&v1, lam(&k2, pc_body)))));
                let resumed = app(var(&k), sa);
                match self.variant {
                    Variant::ControlFlavor => lam(&k, cop1(&d, app(var(&d), resumed))),
                    Variant::CallccFlavor => lam(&k, callcc(lam(&d, resumed))),
                    _ => lam(&k, shift1(&d, app(var(&d), resumed))),
                }
            }
            S::BurgeCps2 => {
                let (k, d, v, k1, d3) = (self.n("k"), self.n("d"), self.n("v"), self.n("k"), self.n("d"));
                let (v1, k2, d1) = (self.n("v"), self.n("k"), self.n("d"));
                let throw = app(var(&d), inr(pair(var(&v), var(&v1))));
                let pc = lam(&v1, lam(&k2, lam(&d1, throw)));
                let sa = lam(&v, lam(&k1, lam(&d3, app2(var(&k1), pc, var(&d3)))));
                lam(&k, lam(&d, app2(var(&k), sa, var(&d))))
            }
        }
    }

    /// `c sa` for a continuation `c` captured by `C1`. Resuming it replaces
    /// the current first-level context, which here holds the pending
    /// application of the dump; `reset1` saves that context first.
    fn resume_jumpy(&self, c: &Name, sa: X) -> X {
        let resumed = app(var(c), sa);
        if self.variant == Variant::AsPrinted {
            resumed
        } else {
            reset1(resumed)
        }
    }

    /// J as `(λc.λv.λv'. c (v v')) JI` under the table with JI.
    fn j_from_ji(&mut self) -> X {
        let (c, v, v1) = (self.n("c"), self.n("v"), self.n("v"));
        let (cv, vv, vv1) = (self.value(var(&c)), self.value(var(&v)), self.value(var(&v1)));
        let inner = self.app(vv, vv1);
        let body = self.app(cv, inner);
        let f = self.lam(&v1, body);
        let f = self.lam(&v, f);
        let f = self.lam(&c, f);
        let (k, j, x, k1, j1) = (self.n("k"), self.n("j"), self.n("x"), self.n("k"), self.n("j"));
        let ji = lam(&k, lam(&j, app(var(&k), lam(&x, lam(&k1, lam(&j1, app(var(&j), var(&x))))))));
        self.app(f, ji)
    }

    pub(super) fn wrap(&mut self, b: X) -> X {
        match self.sim {
            S::DsShift2 | S::DsC2 => reset2(reset1(b)),
            S::Cps1Shift | S::Cps1C | S::Cps1Callcc | S::DsRet => {
                let id = self.id();
                reset1(app(b, id))
            }
            S::Cps2 => {
                let (v, d) = (self.n("v"), self.n("d"));
                let id = self.id();
                app2(b, lam(&v, lam(&d, app(var(&d), var(&v)))), id)
            }
            S::CpsRet | S::Thielecke => {
                let (i0, i1) = (self.id(), self.id());
                app2(b, i0, i1)
            }
            S::FelleisenDs => {
                // The top-level program closure discards the current
                // control context, as the ones bound in function bodies do.
                let (v, v1, k) = (self.n("v"), self.n("v"), self.n("k"));
                let top = lam(&v, lam(&v1, shift1(&k, app(var(&v), var(&v1)))));
                let_(&name("J"), top, reset1(b))
            }
            S::FelleisenCps => {
                let (v, k, v1, k1) = (self.n("v"), self.n("k"), self.n("v"), self.n("k"));
                let id = self.id();
                let pc = lam(&v1, lam(&k1, app2(var(&v), var(&v1), id)));
                let top = lam(&v, lam(&k, app(var(&k), pc)));
                let id = self.id();
                let_(&name("J"), top, app(b, id))
            }
            S::BurgeDs => {
                let v = self.n("v");
                reset2(let_inl(&v, reset1(inl(b))))
            }
            S::BurgeCps1 => {
                let (v, w) = (self.n("v"), self.n("v"));
                reset1(let_inl(&v, app(b, lam(&w, inl(var(&w))))))
            }
            S::BurgeCps2 => {
                let (v, d, r, w) = (self.n("v"), self.n("d"), self.n("v"), self.n("v"));
                let ret = lam(&v, lam(&d, app(var(&d), inl(var(&v)))));
                app2(b, ret, lam(&r, let_inl(&w, var(&r))))
            }
        }
    }
}
