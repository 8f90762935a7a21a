//! Checks step-count correspondences between pairs of machines on the
//! corpus programs that reach a value.

use landin::harness::{corpus, lockstep_check, Ratio, DEFAULT_FUEL};
use landin::outcome::Observation;

fn main() {
    let pairs = [
        ("secd-felleisen", "secd-disentangled", Ratio::new(2, 1)),
        ("secd-modern", "rs-lrhoj-compressed", Ratio::ONE),
        ("cek-j", "rs-inherited-compressed", Ratio::ONE),
    ];
    for (m1, m2, ratio) in pairs {
        for e in corpus().iter().take(12) {
            let r = lockstep_check(m1, m2, &e.program, DEFAULT_FUEL, ratio).unwrap();
            if !matches!(r.observations.0, Observation::Num(_) | Observation::Procedure) {
                continue;
            }
            let verdict = if r.pass { "pass" } else { "FAIL" };
            println!("{m1} vs {m2} on {}: {verdict} {:?}", e.id, r.steps);
        }
    }
}
