//! Runs the reduction semantics and the machines derived from it, then
//! checks the refocusing and round-trip laws on reachable states.

use landin::machine::run;
use landin::rs::two_layer::TwoLayer;
use landin::rs::{check_refocusing, check_round_trip, reachable, Fused, Rb, Refocused};
use landin::syntax::parse_program;

fn main() {
    let p = parse_program("((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)").unwrap();
    let rb = run(&Rb(TwoLayer), &p, 10_000).report();
    let refocused = run(&Refocused(TwoLayer), &p, 10_000).report();
    let fused = run(&Fused(TwoLayer), &p, 10_000).report();
    println!("reduction-based {} ({} steps)", rb.outcome, rb.steps);
    println!("refocused       {} ({} steps)", refocused.outcome, refocused.steps);
    println!("fused           {} ({} steps)", fused.outcome, fused.steps);

    let states = reachable(&TwoLayer, &p, 10_000, 100);
    let failures = states
        .iter()
        .filter(|(c, x)| check_refocusing(&TwoLayer, c, x).is_err() || check_round_trip(&TwoLayer, c, x).is_err())
        .count();
    println!("{} reachable states, {failures} law failures", states.len());
}
