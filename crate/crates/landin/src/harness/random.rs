//! Seeded generation of closed programs, and shrinking of counterexamples.

use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::syntax::{name, Name, Program, Term};

/// Where generated programs may use J.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum JPolicy {
    None,
    UnderLambda,
    Anywhere,
}

impl JPolicy {
    pub const ALL: [JPolicy; 3] = [JPolicy::None, JPolicy::UnderLambda, JPolicy::Anywhere];

    pub fn as_str(self) -> &'static str {
        match self {
            JPolicy::None => "none",
            JPolicy::UnderLambda => "under-lambda",
            JPolicy::Anywhere => "anywhere",
        }
    }

    pub fn admits(self, t: &Term) -> bool {
        match self {
            JPolicy::None => !t.contains_j(),
            JPolicy::UnderLambda => t.j_under_lambda(),
            JPolicy::Anywhere => true,
        }
    }
}

impl fmt::Display for JPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for JPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<JPolicy, String> {
        JPolicy::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown J policy `{s}`"))
    }
}

const BINDERS: [&str; 5] = ["x", "y", "z", "f", "k"];

struct Gen {
    rng: ChaCha8Rng,
    policy: JPolicy,
    scope: Vec<Name>,
}

impl Gen {
    fn j_allowed(&self) -> bool {
        match self.policy {
            JPolicy::None => false,
            JPolicy::UnderLambda => !self.scope.is_empty(),
            JPolicy::Anywhere => true,
        }
    }

    fn leaf(&mut self) -> Term {
        loop {
            match self.rng.gen_range(0..10) {
                0..=2 => return Term::Lit(self.rng.gen_range(0..10)),
                3..=5 if !self.scope.is_empty() => {
                    let i = self.rng.gen_range(0..self.scope.len());
                    return Term::Var(self.scope[i].clone());
                }
                6 => return Term::var("succ"),
                7 | 8 if self.j_allowed() => return Term::J,
                9 => {
                    let x = BINDERS[self.rng.gen_range(0..BINDERS.len())];
                    return Term::lam(x, Term::var(x));
                }
                _ => {}
            }
        }
    }

    fn term(&mut self, size: usize) -> Term {
        if size <= 1 {
            return self.leaf();
        }
        if size == 2 || self.rng.gen_bool(0.4) {
            let x = name(BINDERS[self.rng.gen_range(0..BINDERS.len())]);
            self.scope.push(x.clone());
            let body = self.term(size - 1);
            self.scope.pop();
            Term::Lam(x, Rc::new(body))
        } else {
            let left = self.rng.gen_range(1..size - 1);
            let right = size - 1 - left;
            let a = self.term(left);
            let b = self.term(right);
            Term::App(Rc::new(a), Rc::new(b))
        }
    }
}

/// A closed program of roughly `size` nodes, determined by `seed`. It never
/// binds `J` and uses J only where `policy` allows.
pub fn random_closed_term(seed: u64, size: usize, policy: JPolicy) -> Program {
    assert!(size >= 1, "size must be positive");
    let mut g = Gen {
        rng: ChaCha8Rng::seed_from_u64(seed),
        policy,
        scope: Vec::new(),
    };
    let t = g.term(size);
    Program::new(t).expect("generated terms are closed")
}

/// Every term obtained from `t` by one shrinking move: replacing an
/// application by one of its sides, replacing a subterm by `0`, or
/// replacing an abstraction by its body.
fn candidates(t: &Term) -> Vec<Term> {
    let mut out = Vec::new();
    if *t != Term::Lit(0) {
        out.push(Term::Lit(0));
    }
    match t {
        Term::App(a, b) => {
            out.push((**a).clone());
            out.push((**b).clone());
            out.extend(candidates(a).into_iter().map(|a| Term::App(Rc::new(a), b.clone())));
            out.extend(candidates(b).into_iter().map(|b| Term::App(a.clone(), Rc::new(b))));
        }
        Term::Lam(x, b) => {
            out.push((**b).clone());
            out.extend(candidates(b).into_iter().map(|b| Term::Lam(x.clone(), Rc::new(b))));
        }
        Term::Lit(_) | Term::Var(_) | Term::J => {}
    }
    out
}

/// Greedily shrinks `p` while `fails` keeps holding, trying at most
/// `budget` candidates.
pub fn shrink(p: &Program, policy: JPolicy, budget: usize, mut fails: impl FnMut(&Program) -> bool) -> Program {
    let mut best = p.clone();
    let mut tried = 0;
    'outer: loop {
        let mut cs = candidates(best.term());
        cs.sort_by_key(Term::size);
        for c in cs {
            if tried >= budget {
                break 'outer;
            }
            if !policy.admits(&c) {
                continue;
            }
            let Ok(q) = Program::new(c) else { continue };
            tried += 1;
            if fails(&q) {
                best = q;
                continue 'outer;
            }
        }
        break;
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_program;
    use proptest::prelude::*;

    #[test]
    fn size_one_is_a_leaf() {
        for seed in 0..50 {
            let t = random_closed_term(seed, 1, JPolicy::None);
            let leafy = match &**t.term() {
                Term::Lit(_) | Term::Var(_) => true,
                Term::Lam(x, b) => **b == Term::Var(x.clone()),
                _ => false,
            };
            assert!(leafy, "{t}");
        }
    }

    #[test]
    fn shrinking_finds_a_small_witness() {
        let p = parse_program("((lam x (succ ((lam y (y y)) (lam z z)))) 4)").unwrap();
        let has_self_application = |q: &Program| q.to_string().contains("(y y)");
        let s = shrink(&p, JPolicy::Anywhere, 10_000, has_self_application);
        assert_eq!(s.to_string(), "(lam y (y y))");
    }

    #[test]
    fn policies_parse() {
        for p in JPolicy::ALL {
            assert_eq!(p.as_str().parse::<JPolicy>().unwrap(), p);
        }
    }

    fn policy() -> impl Strategy<Value = JPolicy> {
        prop_oneof![Just(JPolicy::None), Just(JPolicy::UnderLambda), Just(JPolicy::Anywhere)]
    }

    proptest! {
        #[test]
        fn generated_terms_are_well_formed(seed in any::<u64>(), size in 1usize..40, policy in policy()) {
            let p = random_closed_term(seed, size, policy);
            prop_assert_eq!(&p, &random_closed_term(seed, size, policy));
            prop_assert!(policy.admits(p.term()));
            prop_assert!(p.term().size() <= 2 * size);
            prop_assert_eq!(parse_program(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn shrinking_keeps_the_property(seed in any::<u64>(), size in 1usize..30) {
            let p = random_closed_term(seed, size, JPolicy::UnderLambda);
            let has_succ = |q: &Program| q.to_string().contains("succ");
            let s = shrink(&p, JPolicy::UnderLambda, 1_000, has_succ);
            prop_assert!(s.term().size() <= p.term().size());
            prop_assert_eq!(has_succ(&s), has_succ(&p));
            prop_assert!(JPolicy::UnderLambda.admits(s.term()));
        }
    }
}
