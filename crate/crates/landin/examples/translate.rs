//! Shows the image of one program under each simulation by control
//! operators or continuation-passing style.

use landin::sims::{translate_program, Simulation, Variant};
use landin::syntax::parse_program;

fn main() {
    let p = parse_program("((lam f (succ ((J f) 7))) (lam n (succ n)))").unwrap();
    for s in Simulation::ALL {
        match translate_program(s, Variant::Standard, &p) {
            Ok(t) => println!("{}\n  {t}", s.id()),
            Err(e) => println!("{}\n  {e}", s.id()),
        }
    }
}
