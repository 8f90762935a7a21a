//! Prints the traced Fibonacci computation in both its higher-order and
//! defunctionalized versions.

use landin::harness::{fib_cps_trace, fib_def_trace};

fn main() {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    println!("cps              {:?}", fib_cps_trace(n));
    println!("defunctionalized {:?}", fib_def_trace(n));
}
