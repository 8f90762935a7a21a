use super::*;
use crate::machine::run;
use crate::outcome::{Observable, Observation, Reported};
use crate::secd::Secd;
use crate::syntax::{parse_ext, parse_program, parse_term};

const P3: &str = "((lam x2 (succ (((J (lam k k)) 0) 100))) 10)";
const P4: &str = "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)";
const P5: &str = "((J (lam k k)) 0)";

const UNDER_LAMBDA: &[&str] = &[
    P3,
    P4,
    "(succ 4)",
    "((lam x x) 7)",
    "((lam d ((0 0) (((J (lam k k)) 0) 99))) 5)",
    "(succ ((lam x ((lam y 5) J)) 0))",
    "((lam f (f (f 1))) (lam x (succ x)))",
    "((lam succ (succ 3)) (lam x x))",
    "((lam x ((lam g (succ (g 1))) (J (lam y (succ y))))) 0)",
    "((lam x (succ ((J succ) 41))) 0)",
    "((lam x (J 3)) 0)",
    "(((lam x J) 0) (lam y y))",
    "((((lam x J) 0) (lam y (succ y))) 5)",
];

fn secd(src: &str, flavor: Secd) -> Observation {
    let r = run(&flavor, &parse_program(src).unwrap(), 100_000);
    Observation::of(&r.outcome.map(|v| Reported::of(&v)))
}

fn sim(s: Simulation, v: Variant, src: &str) -> Observation {
    let r = run_variant(s, v, &parse_program(src).unwrap(), 100_000);
    Observation::of(&r.outcome.map(|v| Reported::of(&v)))
}

#[test]
fn pinned_examples() {
    let t = translate(Simulation::Cps1Shift, &parse_term("5").unwrap()).unwrap();
    assert_eq!(t, parse_ext("(lam k (k 5))").unwrap());
    let t = translate(Simulation::DsShift2, &parse_term("(lam x x)").unwrap()).unwrap();
    assert_eq!(t, parse_ext("(lam x (reset1 x))").unwrap());
    let t0 = parse_term("(f a)").unwrap();
    let t = translate(Simulation::FelleisenDs, &t0).unwrap();
    assert_eq!(t, ExtTerm::from(&t0));

    let value = |s, src| run_simulation(s, &parse_program(src).unwrap(), 1_000_000).outcome.map(|v| v.as_int());
    assert_eq!(value(Simulation::Cps2, P3), Outcome::Final(Some(0)));
    assert_eq!(value(Simulation::Thielecke, P4), Outcome::Final(Some(1)));
    assert_eq!(
        value(Simulation::BurgeCps2, P5),
        Outcome::Stuck(StuckReason::JOutsideLambda)
    );
}

#[test]
fn wrappers() {
    let p = parse_term("5").unwrap();
    let b = ExtTerm::var("B");
    assert_eq!(
        wrap_program(Simulation::Cps2, &p, b.clone()),
        parse_ext("((B (lam v (lam d (d v)))) (lam v1 v1))").unwrap()
    );
    assert_eq!(
        wrap_program(Simulation::DsRet, &p, b.clone()),
        parse_ext("(reset1 (B (lam v v)))").unwrap()
    );
    assert_eq!(
        wrap_program(Simulation::DsShift2, &p, b.clone()),
        parse_ext("(reset2 (reset1 B))").unwrap()
    );
    assert_eq!(
        wrap_program(Simulation::BurgeDs, &p, b),
        parse_ext("(reset2 (letp (inl v) (reset1 (inl B)) v))").unwrap()
    );
}

#[test]
fn felleisen_family_agrees_with_the_machine() {
    for &src in UNDER_LAMBDA.iter().chain([P5].iter()) {
        let expected = secd(src, Secd::FELLEISEN);
        for s in Simulation::ALL.into_iter().filter(|s| !s.is_burge()) {
            for &v in s.variants().iter().filter(|&&v| v != Variant::AsPrinted) {
                assert_eq!(sim(s, v, src), expected, "{} {v:?} on {src}", s.id());
            }
        }
    }
}

#[test]
fn burge_family_agrees_with_the_machine() {
    for &src in UNDER_LAMBDA {
        let expected = secd(src, Secd::BURGE);
        for s in Simulation::ALL.into_iter().filter(|s| s.is_burge()) {
            for &v in s.variants().iter().filter(|&&v| v != Variant::AsPrinted) {
                assert_eq!(sim(s, v, src), expected, "{} {v:?} on {src}", s.id());
            }
        }
    }
    assert_eq!(
        translate(Simulation::BurgeDs, &parse_term(P5).unwrap()),
        Err(TranslateError::JOutsideLambda)
    );
}

#[test]
fn jumpy_clause_as_printed_loses_the_dump() {
    for v in [Variant::Standard, Variant::AsPrinted] {
        for (src, n) in [(P3, 0), (P4, 1), (P5, 0)] {
            assert_eq!(sim(Simulation::DsC2, v, src), Observation::Num(n));
        }
    }
    // The state appender is returned, not applied, so the function body
    // finishes normally and its value must flow back through `succ`.
    let src = "(succ ((lam x ((lam y 5) J)) 0))";
    assert_eq!(secd(src, Secd::FELLEISEN), Observation::Num(6));
    assert_eq!(sim(Simulation::DsC2, Variant::Standard, src), Observation::Num(6));
    assert_eq!(sim(Simulation::DsC2, Variant::AsPrinted, src), Observation::Num(5));
    assert_eq!(sim(Simulation::BurgeDs, Variant::AsPrinted, src), Observation::Procedure);
}

#[test]
fn pure_cps_images_use_no_control_operators() {
    for &src in UNDER_LAMBDA {
        let p = parse_program(src).unwrap();
        for s in Simulation::ALL.into_iter().filter(|s| s.is_pure_cps()) {
            assert!(translate_program(s, Variant::Standard, &p).unwrap().is_control_free());
        }
    }
}

#[test]
fn translations_are_closed() {
    for &src in UNDER_LAMBDA {
        let p = parse_program(src).unwrap();
        for s in Simulation::ALL {
            for &v in s.variants() {
                let t = translate_program(s, v, &p).unwrap();
                let free: Vec<_> = t.free_vars().into_iter().collect();
                assert!(free.iter().all(|x| &**x == "succ"), "{} {free:?}", s.id());
            }
        }
    }
}

#[test]
fn binders_avoid_source_names() {
    let t = parse_term("(lam k (lam v (k v)))").unwrap();
    let out = translate(Simulation::Cps1Shift, &t).unwrap().to_string();
    assert!(out.contains("(lam k1"), "{out}");
    let p = parse_program("((lam k (lam v (k v))) (lam k 3))").unwrap();
    assert_eq!(
        run_simulation(Simulation::Cps2, &p, 10_000).outcome.map(|v| v.as_int()),
        Outcome::Final(None)
    );
}

