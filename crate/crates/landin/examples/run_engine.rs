//! Evaluates a program with a single engine, e.g.
//! `cargo run --example run_engine -- secd-felleisen '((lam x (succ x)) 4)'`.

use landin::harness::{engine, DEFAULT_FUEL};
use landin::syntax::parse_program;

fn main() {
    let mut args = std::env::args().skip(1);
    let id = args.next().unwrap_or_else(|| "secd-felleisen".to_string());
    let src = args
        .next()
        .unwrap_or_else(|| "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)".to_string());
    let e = engine(&id).unwrap_or_else(|| panic!("no engine `{id}`"));
    let p = parse_program(&src).expect("parse error");
    let r = e.run(&p, DEFAULT_FUEL);
    println!("{}\t{} steps", r.outcome, r.steps);
}
