//! Evaluates terms of the language with delimited and undelimited control
//! operators, showing how shift1 and C1 differ.

use landin::control::ext_run;
use landin::syntax::parse_ext;

fn main() {
    for src in [
        "(reset1 (succ (shift1 k 10)))",
        "(reset1 (succ (shift1 k (k 10))))",
        "(reset1 (succ (shift1 k (succ (k 10)))))",
        "(reset1 (succ (C1 k (succ (k 10)))))",
        "(reset1 (succ (callcc (lam k 10))))",
        "(reset2 (succ (reset1 (succ (shift2 k 1)))))",
    ] {
        let r = ext_run(&parse_ext(src).unwrap(), 10_000).report();
        println!("{src:<45} {}", r.outcome);
    }
}
