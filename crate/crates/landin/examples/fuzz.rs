//! Generates random programs under each J policy and reports any program on
//! which engines of one family disagree.

use landin::harness::{fuzz, random_closed_term, JPolicy, FUZZ_FUEL};

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    for policy in JPolicy::ALL {
        println!("{policy}: e.g. {}", random_closed_term(seed, 12, policy));
        let r = fuzz(seed, 200, policy, FUZZ_FUEL);
        println!("  {} programs, {} terminating, {} counterexamples", r.cases, r.terminating, r.counterexamples.len());
        for c in &r.counterexamples {
            println!("  {} (shrunk from {})", c.minimized, c.original);
        }
    }
}
