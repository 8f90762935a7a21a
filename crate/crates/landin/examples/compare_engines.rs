//! Runs every applicable engine on the corpus programs that use J outside
//! any lambda, where the two machine families part ways.

use landin::harness::{compare, corpus, describe_camps, Subset, DEFAULT_FUEL};

fn main() {
    for e in corpus().into_iter().filter(|e| e.subset == Subset::Unrestricted) {
        let r = compare(e.id, &e.program, DEFAULT_FUEL, None);
        let verdict = if r.agree { "agree" } else { "dissent" };
        println!("{:<28} {verdict:<8} {}", e.id, describe_camps(&r));
    }
}
