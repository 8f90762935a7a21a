//! The fixed test corpus.

use std::fmt;
use std::str::FromStr;

use crate::syntax::{parse_program, Program, Term};

/// The fragment of the language a program lies in, or an engine accepts.
/// Ordered by inclusion.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subset {
    PureLambda,
    JUnderLambda,
    Unrestricted,
}

impl Subset {
    /// The smallest subset containing `t`.
    pub fn of(t: &Term) -> Subset {
        if !t.contains_j() {
            Subset::PureLambda
        } else if t.j_under_lambda() {
            Subset::JUnderLambda
        } else {
            Subset::Unrestricted
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Subset::PureLambda => "pure-lambda",
            Subset::JUnderLambda => "j-under-lambda",
            Subset::Unrestricted => "unrestricted",
        }
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Subset {
    type Err = String;

    fn from_str(s: &str) -> Result<Subset, String> {
        match s {
            "pure-lambda" => Ok(Subset::PureLambda),
            "j-under-lambda" => Ok(Subset::JUnderLambda),
            "unrestricted" => Ok(Subset::Unrestricted),
            _ => Err(format!("unknown subset `{s}`")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Entry {
    pub id: &'static str,
    pub program: Program,
    pub subset: Subset,
}

const SOURCES: &[(&str, &str)] = &[
    ("P1", "(succ 4)"),
    ("P2", "((lam x x) 42)"),
    ("P3", "((lam x2 (succ (((J (lam k k)) 0) 100))) 10)"),
    ("P4", "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)"),
    ("P5", "((J (lam k k)) 0)"),
    ("P6", "((lam f (succ ((J f) 7))) (lam n (succ n)))"),
    ("P7", "((lam d ((0 0) (((J (lam k k)) 0) 99))) 5)"),
    ("omega", "((lam x (x x)) (lam x (x x)))"),
    ("literal", "7"),
    ("identity", "(lam x x)"),
    ("succ-itself", "succ"),
    ("succ-chain", "(succ (succ (succ 0)))"),
    ("curried-const", "(((lam x (lam y x)) 1) 2)"),
    ("shadowing", "((lam x ((lam x (succ x)) x)) 5)"),
    ("shadowing-curried", "(((lam x (lam x x)) 1) 2)"),
    ("twice", "((lam f (f (f 1))) (lam n (succ n)))"),
    ("self-application", "((lam x (x x)) (lam y 7))"),
    ("higher-order", "((lam f ((lam g (g 3)) (lam y (f y)))) succ)"),
    ("church-sum", "((((lam m (lam f (lam x ((m f) (f x))))) (lam f (lam x (f (f x))))) succ) 0)"),
    ("apply-literal", "(1 2)"),
    ("succ-of-procedure", "(succ (lam x x))"),
    ("stuck-in-body", "((lam d ((0 0) 1)) 5)"),
    ("program-closure-value", "((lam x (J x)) 3)"),
    ("escape-from-argument", "((lam a ((lam b (succ (((J (lam v v)) a) b))) 20)) 30)"),
    ("nested-captures", "((lam x ((J (lam v ((J (lam w (succ w))) v))) x)) 4)"),
    ("two-captures", "((lam x (succ ((lam y (succ (((J (lam k k)) y) 0))) (((J (lam k k)) x) 0)))) 10)"),
    ("escape-through-callee", "((lam f (succ (f 0))) (lam n ((J (lam k (succ k))) n)))"),
    ("stored-program-closure", "((lam p ((lam q (succ (q 1))) p)) ((lam z (J (lam u u))) 0))"),
    ("reinvoked-program-closure", "((lam k (k (k 5))) ((lam u (J succ)) 0))"),
    ("top-level-escape", "(succ ((J (lam k k)) 1))"),
    ("top-level-succ-closure", "((J succ) 41)"),
    ("capture-returns-closure", "(((lam x (lam y (J y))) 1) 2)"),
];

/// Every corpus program, in a fixed order.
pub fn corpus() -> Vec<Entry> {
    SOURCES
        .iter()
        .map(|&(id, src)| {
            let program = parse_program(src).unwrap_or_else(|e| panic!("corpus program {id}: {e}"));
            let subset = Subset::of(program.term());
            Entry { id, program, subset }
        })
        .collect()
}

pub fn entry(id: &str) -> Option<Entry> {
    corpus().into_iter().find(|e| e.id == id)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_program_is_closed_and_classified() {
        let c = corpus();
        assert!(c.len() >= 27);
        let class = |id| entry(id).unwrap().subset;
        assert_eq!(class("P1"), Subset::PureLambda);
        assert_eq!(class("P3"), Subset::JUnderLambda);
        assert_eq!(class("P5"), Subset::Unrestricted);
        assert_eq!(class("omega"), Subset::PureLambda);
        let mut ids: Vec<_> = c.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), c.len());
    }

    #[test]
    fn subsets_are_ordered_by_inclusion() {
        assert!(Subset::PureLambda < Subset::JUnderLambda);
        assert!(Subset::JUnderLambda < Subset::Unrestricted);
        assert_eq!("j-under-lambda".parse::<Subset>().unwrap(), Subset::JUnderLambda);
        assert!("all".parse::<Subset>().is_err());
    }
}
