use std::fmt;

use super::term::{ExtTerm, Pattern, Term};

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Lit(n) => write!(f, "{n}"),
            Term::Var(x) => write!(f, "{x}"),
            Term::Lam(x, b) => write!(f, "(lam {x} {b})"),
            Term::App(a, b) => write!(f, "({a} {b})"),
            Term::J => write!(f, "J"),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Var(x) => write!(f, "{x}"),
            Pattern::Pair(a, b) => write!(f, "(pair {a} {b})"),
            Pattern::Inl(p) => write!(f, "(inl {p})"),
            Pattern::Inr(p) => write!(f, "(inr {p})"),
        }
    }
}

impl fmt::Display for ExtTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use ExtTerm::*;
        match self {
            Lit(n) => write!(f, "{n}"),
            Var(x) => write!(f, "{x}"),
            Lam(x, b) => write!(f, "(lam {x} {b})"),
            App(a, b) => write!(f, "({a} {b})"),
            Shift1(k, b) => write!(f, "(shift1 {k} {b})"),
            Reset1(b) => write!(f, "(reset1 {b})"),
            Shift2(k, b) => write!(f, "(shift2 {k} {b})"),
            Reset2(b) => write!(f, "(reset2 {b})"),
            Cop1(k, b) => write!(f, "(C1 {k} {b})"),
            Cop2(k, b) => write!(f, "(C2 {k} {b})"),
            Callcc(b) => write!(f, "(callcc {b})"),
            Pair(a, b) => write!(f, "(pair {a} {b})"),
            Inl(b) => write!(f, "(inl {b})"),
            Inr(b) => write!(f, "(inr {b})"),
            Case(s, p, l, q, r) => write!(f, "(case {s} (inl {p} {l}) (inr {q} {r}))"),
            LetP(p, a, b) => write!(f, "(letp {p} {a} {b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::parse::{parse_ext, parse_term};
    use super::*;
    use crate::syntax::name;
    use proptest::prelude::*;
    use std::rc::Rc;

    #[test]
    fn print_examples() {
        assert_eq!(Term::Lit(4).to_string(), "4");
        assert_eq!(Term::lam("x", Term::var("x")).to_string(), "(lam x x)");
        assert_eq!(
            Term::app(Term::var("succ"), Term::Lit(4)).to_string(),
            "(succ 4)"
        );
    }

    fn ident() -> impl Strategy<Value = String> {
        prop_oneof![
            Just("x".to_string()),
            Just("y".to_string()),
            Just("succ".to_string()),
            Just("k'".to_string()),
            "[a-z][a-z0-9_]{0,4}".prop_filter("keyword", |s| {
                !matches!(s.as_str(), "lam" | "let" | "inl" | "inr" | "pair" | "case" | "letp")
            }),
        ]
    }

    fn term() -> impl Strategy<Value = Term> {
        let leaf = prop_oneof![
            any::<i64>().prop_map(Term::Lit),
            ident().prop_map(|x| Term::var(&x)),
            Just(Term::J),
        ];
        leaf.prop_recursive(6, 64, 2, |inner| {
            prop_oneof![
                (ident(), inner.clone()).prop_map(|(x, b)| Term::lam(&x, b)),
                (inner.clone(), inner).prop_map(|(a, b)| Term::app(a, b)),
            ]
        })
    }

    fn pattern() -> impl Strategy<Value = Pattern> {
        ident()
            .prop_map(|x| Pattern::var(&x))
            .prop_recursive(3, 8, 2, |inner| {
                prop_oneof![
                    (inner.clone(), inner.clone()).prop_map(|(a, b)| Pattern::pair(a, b)),
                    inner.clone().prop_map(|p| Pattern::Inl(Box::new(p))),
                    inner.prop_map(|p| Pattern::Inr(Box::new(p))),
                ]
            })
    }

    fn ext() -> impl Strategy<Value = ExtTerm> {
        use ExtTerm as E;
        let leaf = prop_oneof![
            any::<i64>().prop_map(E::Lit),
            ident().prop_map(|x| E::var(&x)),
            Just(E::var("J")),
        ];
        leaf.prop_recursive(5, 64, 3, |inner| {
            let b = |t: ExtTerm| Rc::new(t);
            prop_oneof![
                (ident(), inner.clone()).prop_map(move |(x, t)| E::Lam(name(&x), b(t))),
                (inner.clone(), inner.clone()).prop_map(move |(s, t)| E::App(b(s), b(t))),
                (ident(), inner.clone()).prop_map(move |(x, t)| E::Shift1(name(&x), b(t))),
                (ident(), inner.clone()).prop_map(move |(x, t)| E::Shift2(name(&x), b(t))),
                (ident(), inner.clone()).prop_map(move |(x, t)| E::Cop1(name(&x), b(t))),
                (ident(), inner.clone()).prop_map(move |(x, t)| E::Cop2(name(&x), b(t))),
                inner.clone().prop_map(move |t| E::Reset1(b(t))),
                inner.clone().prop_map(move |t| E::Reset2(b(t))),
                inner.clone().prop_map(move |t| E::Callcc(b(t))),
                inner.clone().prop_map(move |t| E::Inl(b(t))),
                inner.clone().prop_map(move |t| E::Inr(b(t))),
                (inner.clone(), inner.clone()).prop_map(move |(s, t)| E::Pair(b(s), b(t))),
                (pattern(), inner.clone(), inner.clone())
                    .prop_map(move |(p, s, t)| E::LetP(p, b(s), b(t))),
                (inner.clone(), pattern(), inner.clone(), pattern(), inner)
                    .prop_filter("distinct binders", |(_, p, _, q, _)| {
                        !matches!((p, q), (Pattern::Var(x), Pattern::Var(y)) if x == y)
                    })
                    .prop_map(move |(s, p, l, q, r)| E::Case(b(s), p, b(l), q, b(r))),
            ]
        })
    }

    proptest! {
        #[test]
        fn term_round_trip(t in term()) {
            prop_assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }

        #[test]
        fn ext_round_trip(t in ext()) {
            prop_assert_eq!(parse_ext(&t.to_string()).unwrap(), t);
        }
    }
}
