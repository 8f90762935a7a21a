//! Term builders and hygienic name supply for the translations.

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use crate::syntax::{name, ExtTerm as X, Name, Pattern, Term};

pub(super) fn lam(x: &Name, b: X) -> X {
    X::Lam(x.clone(), Rc::new(b))
}

pub(super) fn app(f: X, a: X) -> X {
    X::App(Rc::new(f), Rc::new(a))
}

pub(super) fn app2(f: X, a: X, b: X) -> X {
    app(app(f, a), b)
}

pub(super) fn app3(f: X, a: X, b: X, c: X) -> X {
    app(app2(f, a, b), c)
}

pub(super) fn var(x: &Name) -> X {
    X::Var(x.clone())
}

pub(super) fn let_(x: &Name, rhs: X, body: X) -> X {
    app(lam(x, body), rhs)
}

pub(super) fn reset1(b: X) -> X {
    X::Reset1(Rc::new(b))
}

pub(super) fn reset2(b: X) -> X {
    X::Reset2(Rc::new(b))
}

pub(super) fn shift1(k: &Name, b: X) -> X {
    X::Shift1(k.clone(), Rc::new(b))
}

pub(super) fn shift2(k: &Name, b: X) -> X {
    X::Shift2(k.clone(), Rc::new(b))
}

pub(super) fn cop1(k: &Name, b: X) -> X {
    X::Cop1(k.clone(), Rc::new(b))
}

pub(super) fn cop2(k: &Name, b: X) -> X {
    X::Cop2(k.clone(), Rc::new(b))
}

pub(super) fn callcc(f: X) -> X {
    X::Callcc(Rc::new(f))
}

pub(super) fn inl(a: X) -> X {
    X::Inl(Rc::new(a))
}

pub(super) fn inr(a: X) -> X {
    X::Inr(Rc::new(a))
}

pub(super) fn pair(a: X, b: X) -> X {
    X::Pair(Rc::new(a), Rc::new(b))
}

/// `case s of inl v => l | inr (v0, v1) => r`
pub(super) fn case_sum(s: X, v: &Name, l: X, v0: &Name, v1: &Name, r: X) -> X {
    X::Case(
        Rc::new(s),
        Pattern::Var(v.clone()),
        Rc::new(l),
        Pattern::pair(Pattern::Var(v0.clone()), Pattern::Var(v1.clone())),
        Rc::new(r),
    )
}

/// `let inl v = rhs in v`
pub(super) fn let_inl(v: &Name, rhs: X) -> X {
    X::LetP(Pattern::Inl(Box::new(Pattern::Var(v.clone()))), Rc::new(rhs), Rc::new(var(v)))
}

/// Supplies binder names that are distinct from each other and from every
/// identifier of the source program.
pub(super) struct Fresh {
    avoid: BTreeSet<String>,
    next: HashMap<&'static str, usize>,
}

impl Fresh {
    pub(super) fn for_term(t: &Term) -> Fresh {
        let mut avoid = BTreeSet::new();
        collect(t, &mut avoid);
        avoid.insert("succ".to_owned());
        avoid.insert("J".to_owned());
        Fresh {
            avoid,
            next: HashMap::new(),
        }
    }

    /// `base`, then `base1`, `base2`, ...
    pub(super) fn name(&mut self, base: &'static str) -> Name {
        loop {
            let n = self.next.entry(base).or_insert(0);
            let candidate = if *n == 0 {
                base.to_owned()
            } else {
                format!("{base}{n}")
            };
            *n += 1;
            if self.avoid.insert(candidate.clone()) {
                return name(&candidate);
            }
        }
    }
}

fn collect(t: &Term, out: &mut BTreeSet<String>) {
    match t {
        Term::Lit(_) | Term::J => {}
        Term::Var(x) => {
            out.insert(x.to_string());
        }
        Term::Lam(x, b) => {
            out.insert(x.to_string());
            collect(b, out);
        }
        Term::App(a, b) => {
            collect(a, out);
            collect(b, out);
        }
    }
}
