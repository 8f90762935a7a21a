//! Runs the whole invariant suite with a seed and case count from the
//! command line, e.g. `cargo run --release --example invariant_suite 1 1000`.

use std::time::Instant;

use landin::harness::check;

fn main() {
    let mut args = std::env::args().skip(1);
    let seed = args.next().and_then(|s| s.parse().ok()).unwrap_or(1);
    let cases = args.next().and_then(|s| s.parse().ok()).unwrap_or(200);
    let start = Instant::now();
    for r in check(seed, cases) {
        println!("{r}");
    }
    println!("elapsed {:.2?}", start.elapsed());
}
