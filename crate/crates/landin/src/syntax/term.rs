use std::collections::BTreeSet;
use std::fmt;
use std::rc::Rc;

use thiserror::Error;

/// Identifiers are shared, immutable strings.
pub type Name = Rc<str>;

pub fn name(s: &str) -> Name {
    Rc::from(s)
}

/// Applicative expressions extended with the J operator.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    Lit(i64),
    Var(Name),
    Lam(Name, Rc<Term>),
    App(Rc<Term>, Rc<Term>),
    J,
}

impl Term {
    pub fn var(x: &str) -> Term {
        Term::Var(name(x))
    }

    pub fn lam(x: &str, body: Term) -> Term {
        Term::Lam(name(x), Rc::new(body))
    }

    pub fn app(t0: Term, t1: Term) -> Term {
        Term::App(Rc::new(t0), Rc::new(t1))
    }

    /// `let x = t0 in t1`, i.e. `((lam x t1) t0)`.
    pub fn let_(x: &str, t0: Term, t1: Term) -> Term {
        Term::app(Term::lam(x, t1), t0)
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Lit(_) | Term::Var(_) | Term::J => 1,
            Term::Lam(_, b) => 1 + b.size(),
            Term::App(a, b) => 1 + a.size() + b.size(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        fn go(t: &Term, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
            match t {
                Term::Lit(_) | Term::J => {}
                Term::Var(x) => {
                    if !bound.contains(x) {
                        out.insert(x.clone());
                    }
                }
                Term::Lam(x, b) => {
                    bound.push(x.clone());
                    go(b, bound, out);
                    bound.pop();
                }
                Term::App(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn contains_j(&self) -> bool {
        match self {
            Term::J => true,
            Term::Lit(_) | Term::Var(_) => false,
            Term::Lam(_, b) => b.contains_j(),
            Term::App(a, b) => a.contains_j() || b.contains_j(),
        }
    }

    /// True when every occurrence of J sits inside the body of some lambda.
    pub fn j_under_lambda(&self) -> bool {
        match self {
            Term::J => false,
            Term::Lit(_) | Term::Var(_) | Term::Lam(..) => true,
            Term::App(a, b) => a.j_under_lambda() && b.j_under_lambda(),
        }
    }

    fn binds(&self, x: &str) -> bool {
        match self {
            Term::Lit(_) | Term::Var(_) | Term::J => false,
            Term::Lam(y, b) => &**y == x || b.binds(x),
            Term::App(a, b) => a.binds(x) || b.binds(x),
        }
    }
}

/// A binding pattern of the extended language.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    Var(Name),
    Pair(Box<Pattern>, Box<Pattern>),
    Inl(Box<Pattern>),
    Inr(Box<Pattern>),
}

impl Pattern {
    pub fn var(x: &str) -> Pattern {
        Pattern::Var(name(x))
    }

    pub fn pair(a: Pattern, b: Pattern) -> Pattern {
        Pattern::Pair(Box::new(a), Box::new(b))
    }

    pub fn binders(&self, out: &mut Vec<Name>) {
        match self {
            Pattern::Var(x) => out.push(x.clone()),
            Pattern::Pair(a, b) => {
                a.binders(out);
                b.binders(out);
            }
            Pattern::Inl(p) | Pattern::Inr(p) => p.binders(out),
        }
    }
}

/// The target language of the J simulations: call-by-value lambda terms
/// with two levels of delimited control, jumpy control, call/cc, pairs and
/// binary sums.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtTerm {
    Lit(i64),
    Var(Name),
    Lam(Name, Rc<ExtTerm>),
    App(Rc<ExtTerm>, Rc<ExtTerm>),
    Shift1(Name, Rc<ExtTerm>),
    Reset1(Rc<ExtTerm>),
    Shift2(Name, Rc<ExtTerm>),
    Reset2(Rc<ExtTerm>),
    Cop1(Name, Rc<ExtTerm>),
    Cop2(Name, Rc<ExtTerm>),
    Callcc(Rc<ExtTerm>),
    Pair(Rc<ExtTerm>, Rc<ExtTerm>),
    Inl(Rc<ExtTerm>),
    Inr(Rc<ExtTerm>),
    Case(Rc<ExtTerm>, Pattern, Rc<ExtTerm>, Pattern, Rc<ExtTerm>),
    LetP(Pattern, Rc<ExtTerm>, Rc<ExtTerm>),
}

impl ExtTerm {
    pub fn var(x: &str) -> ExtTerm {
        ExtTerm::Var(name(x))
    }

    pub fn size(&self) -> usize {
        use ExtTerm::*;
        match self {
            Lit(_) | Var(_) => 1,
            Lam(_, b) | Shift1(_, b) | Shift2(_, b) | Cop1(_, b) | Cop2(_, b) => 1 + b.size(),
            Reset1(b) | Reset2(b) | Callcc(b) | Inl(b) | Inr(b) => 1 + b.size(),
            App(a, b) | Pair(a, b) | LetP(_, a, b) => 1 + a.size() + b.size(),
            Case(s, _, l, _, r) => 1 + s.size() + l.size() + r.size(),
        }
    }

    /// True when the term uses none of the control operators.
    pub fn is_control_free(&self) -> bool {
        use ExtTerm::*;
        match self {
            Lit(_) | Var(_) => true,
            Shift1(..) | Reset1(_) | Shift2(..) | Reset2(_) | Cop1(..) | Cop2(..) | Callcc(_) => {
                false
            }
            Lam(_, b) | Inl(b) | Inr(b) => b.is_control_free(),
            App(a, b) | Pair(a, b) | LetP(_, a, b) => a.is_control_free() && b.is_control_free(),
            Case(s, _, l, _, r) => s.is_control_free() && l.is_control_free() && r.is_control_free(),
        }
    }

    pub fn free_vars(&self) -> BTreeSet<Name> {
        fn bind(
            xs: &[Name],
            t: &ExtTerm,
            bound: &mut Vec<Name>,
            out: &mut BTreeSet<Name>,
        ) {
            let n = bound.len();
            bound.extend(xs.iter().cloned());
            go(t, bound, out);
            bound.truncate(n);
        }
        fn pat(p: &Pattern) -> Vec<Name> {
            let mut v = Vec::new();
            p.binders(&mut v);
            v
        }
        fn go(t: &ExtTerm, bound: &mut Vec<Name>, out: &mut BTreeSet<Name>) {
            use ExtTerm::*;
            match t {
                Lit(_) => {}
                Var(x) => {
                    if !bound.contains(x) {
                        out.insert(x.clone());
                    }
                }
                Lam(x, b) | Shift1(x, b) | Shift2(x, b) | Cop1(x, b) | Cop2(x, b) => {
                    bind(std::slice::from_ref(x), b, bound, out)
                }
                Reset1(b) | Reset2(b) | Callcc(b) | Inl(b) | Inr(b) => go(b, bound, out),
                App(a, b) | Pair(a, b) => {
                    go(a, bound, out);
                    go(b, bound, out);
                }
                Case(s, p, l, q, r) => {
                    go(s, bound, out);
                    bind(&pat(p), l, bound, out);
                    bind(&pat(q), r, bound, out);
                }
                LetP(p, a, b) => {
                    go(a, bound, out);
                    bind(&pat(p), b, bound, out);
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }
}

impl From<&Term> for ExtTerm {
    /// Embeds a J-free term; the constructor J is read as the variable `J`.
    fn from(t: &Term) -> ExtTerm {
        match t {
            Term::Lit(n) => ExtTerm::Lit(*n),
            Term::Var(x) => ExtTerm::Var(x.clone()),
            Term::Lam(x, b) => ExtTerm::Lam(x.clone(), Rc::new(ExtTerm::from(&**b))),
            Term::App(a, b) => ExtTerm::App(
                Rc::new(ExtTerm::from(&**a)),
                Rc::new(ExtTerm::from(&**b)),
            ),
            Term::J => ExtTerm::var("J"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ProgramError {
    #[error("program has free variable `{0}`")]
    FreeVariable(Name),
    #[error("program binds the identifier J")]
    BindsJ,
}

/// A closed term, evaluated in the initial environment binding `succ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Program {
    root: Rc<Term>,
}

impl Program {
    pub fn new(t: Term) -> Result<Program, ProgramError> {
        if let Some(x) = t.free_vars().into_iter().find(|x| &**x != "succ") {
            return Err(ProgramError::FreeVariable(x));
        }
        if t.binds("J") {
            return Err(ProgramError::BindsJ);
        }
        Ok(Program { root: Rc::new(t) })
    }

    pub fn term(&self) -> &Rc<Term> {
        &self.root
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closedness() {
        assert!(Program::new(Term::app(Term::var("succ"), Term::Lit(4))).is_ok());
        assert_eq!(
            Program::new(Term::var("y")),
            Err(ProgramError::FreeVariable(name("y")))
        );
        assert_eq!(
            Program::new(Term::lam("J", Term::var("J"))),
            Err(ProgramError::BindsJ)
        );
    }

    #[test]
    fn j_placement() {
        let top = Term::app(Term::J, Term::Lit(0));
        assert!(top.contains_j());
        assert!(!top.j_under_lambda());
        let under = Term::lam("x", top.clone());
        assert!(under.j_under_lambda());
        assert!(Term::Lit(1).j_under_lambda());
    }
}
