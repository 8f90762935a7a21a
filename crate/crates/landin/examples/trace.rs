//! Prints every configuration that an abstract machine goes through.

use landin::harness::engine;
use landin::syntax::parse_program;

fn main() {
    let p = parse_program("((lam x2 (succ (((J (lam k k)) 0) 100))) 10)").unwrap();
    for id in ["secd-felleisen", "secd-disentangled"] {
        let (lines, outcome) = engine(id).unwrap().trace(&p, 1_000).unwrap();
        println!("{id}:");
        for l in lines {
            println!("  {l}");
        }
        println!("  {outcome}");
    }
}
