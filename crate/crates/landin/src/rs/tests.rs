use super::inherited::{self, InheritedCalc};
use super::marked::{self, MarkedCalc};
use super::two_layer::{self, Ctxs, Dump, TwoLayer};
use super::*;
use crate::machine::run;
use crate::outcome::Outcome;
use crate::secd::{CekJ, Marked, Modern};
use crate::syntax::parse_program;

const PROGRAMS: &[&str] = &[
    "(succ 4)",
    "((lam x x) 42)",
    "((lam x2 (succ (((J (lam k k)) 0) 100))) 10)",
    "((lam x2 (succ ((lam x1 (((J (lam k k)) 0) x1)) 100))) 10)",
    "((lam d ((0 0) (((J (lam k k)) 0) 99))) 5)",
    "((lam f (f (f 1))) (lam n (succ n)))",
    "((lam x (J x)) 3)",
    "(((lam x (lam y x)) 1) 2)",
    "((lam f (succ ((J f) 7))) (lam n (succ n)))",
];

fn p(src: &str) -> Program {
    parse_program(src).unwrap()
}

fn int<M: Machine>(m: &M, src: &str) -> Outcome<Option<i64>>
where
    M::Value: Observable,
{
    run(m, &p(src), 100_000).outcome.map(|v| v.as_int())
}

fn sub(src: &str) -> two_layer::Clo {
    Closure::Sub(p(src).term().clone(), initial_subst())
}

#[test]
fn plug_examples() {
    let c = sub("(lam x x)");
    assert_eq!(TwoLayer.plug(c.clone(), &Ctxs::default()), c);
    let c0 = Closure::Succ;
    let x = Ctxs {
        c1: List::nil().push(Frame::Operand(c0.clone())),
        c2: Dump::default(),
    };
    assert_eq!(TwoLayer.plug(Closure::Lit(1), &x), Closure::comp(c0, Closure::Lit(1)));
    let x = Ctxs {
        c1: List::nil(),
        c2: Dump(List::nil().push(List::nil())),
    };
    assert_eq!(TwoLayer.plug(Closure::Lit(1), &x), Closure::boundary(Closure::Lit(1)));
}

#[test]
fn contract_examples() {
    let s = initial_subst();
    let var = Redex::Var(p("succ").term().clone(), s.clone());
    let x = Ctxs::default();
    assert_eq!(TwoLayer.contract(&var, &x).unwrap().0, Closure::Succ);
    let d = Dump(List::nil().push(List::nil()));
    let x = Ctxs { c1: List::nil(), c2: d.clone() };
    let j = Redex::J(Rc::new(Term::J), s);
    assert_eq!(TwoLayer.contract(&j, &x).unwrap(), (Closure::Ctx(d), x.clone()));
    let succ4 = Redex::App(Value::Succ, Value::Lit(4));
    assert_eq!(TwoLayer.contract(&succ4, &x).unwrap(), (Closure::Lit(5), x));
}

#[test]
fn decompose_examples() {
    assert!(matches!(decompose(&TwoLayer, Closure::Lit(7)), Decomposition::Val(Value::Lit(7))));
    let app = sub("((lam x x) 1)");
    match decompose(&TwoLayer, app.clone()) {
        Decomposition::Dec(r, x) => {
            assert!(matches!(r, Redex::Prop(..)));
            assert_eq!(r.closure(), app);
            assert_eq!(x, Ctxs::default());
        }
        d => panic!("{d:?}"),
    }
    let c = Closure::comp(Closure::Succ, Closure::Lit(4));
    assert_eq!(
        decompose(&TwoLayer, c.clone()),
        Decomposition::Dec(Redex::App(Value::Succ, Value::Lit(4)), Ctxs::default())
    );
    assert_eq!(reduce_once(&TwoLayer, c).unwrap(), Closure::Lit(5));
    assert_eq!(reduce_once(&TwoLayer, Closure::Lit(3)).unwrap(), Closure::Lit(3));
}

#[test]
fn prop_fires_first() {
    let c = sub("((lam x x) 42)");
    let Closure::Comp(c0, c1) = reduce_once(&TwoLayer, c).unwrap() else {
        panic!()
    };
    assert!(matches!(&*c0, Closure::Sub(t, _) if matches!(**t, Term::Lam(..))));
    assert!(matches!(&*c1, Closure::Sub(t, _) if **t == Term::Lit(42)));
}

fn all_stages(src: &str) -> Vec<Outcome<Option<i64>>> {
    let t = TwoLayer;
    let m = MarkedCalc::DELIMITED;
    let i = InheritedCalc::WITH_TOP_LEVEL_J;
    vec![
        int(&Rb(t), src),
        int(&Refocused(t), src),
        int(&Fused(t), src),
        int(&two_layer::Compressed, src),
        int(&Rb(m), src),
        int(&Refocused(m), src),
        int(&Fused(m), src),
        int(&marked::Compressed { delimited_start: true }, src),
        int(&Rb(i), src),
        int(&Refocused(i), src),
        int(&Fused(i), src),
        int(&inherited::Compressed { top_level_j: true }, src),
    ]
}

#[test]
fn observational_pair_on_every_stage() {
    let p3 = all_stages(PROGRAMS[2]);
    assert!(p3.iter().all(|o| *o == Outcome::Final(Some(0))), "{p3:?}");
    let p4 = all_stages(PROGRAMS[3]);
    assert!(p4.iter().all(|o| *o == Outcome::Final(Some(1))), "{p4:?}");
    let p7 = all_stages(PROGRAMS[4]);
    assert!(p7.iter().all(|o| *o == Outcome::Final(Some(0))), "{p7:?}");
}

#[test]
fn four_stages_agree() {
    for src in PROGRAMS {
        let outs = all_stages(src);
        assert!(outs.windows(2).all(|w| w[0] == w[1]), "{src}: {outs:?}");
    }
}

#[test]
fn compressed_machines_coincide_with_the_secd_variants() {
    for src in PROGRAMS {
        let prog = p(src);
        let (a, b) = (run(&two_layer::Compressed, &prog, 100_000), run(&Modern, &prog, 100_000));
        assert_eq!(a.steps, b.steps, "{src}");
        assert_eq!(a.outcome.map(|v| v.as_int()), b.outcome.map(|v| v.as_int()));
        for (delimited_start, m) in [(true, Marked::DELIMITED), (false, Marked::UNDELIMITED)] {
            let a = run(&marked::Compressed { delimited_start }, &prog, 100_000);
            let b = run(&m, &prog, 100_000);
            assert_eq!(a.steps, b.steps, "{src}");
            assert_eq!(a.outcome.map(|v| v.as_int()), b.outcome.map(|v| v.as_int()));
        }
        for (top_level_j, m) in [(true, CekJ::WITH_TOP_LEVEL_J), (false, CekJ::WITHOUT_TOP_LEVEL_J)] {
            let a = run(&inherited::Compressed { top_level_j }, &prog, 100_000);
            let b = run(&m, &prog, 100_000);
            assert_eq!(a.steps, b.steps, "{src}");
            assert_eq!(a.outcome.map(|v| v.as_int()), b.outcome.map(|v| v.as_int()));
        }
    }
}

#[test]
fn compression_only_removes_transitions() {
    for src in PROGRAMS {
        let prog = p(src);
        let compressed = run(&two_layer::Compressed, &prog, 100_000).steps;
        let fused = run(&Fused(TwoLayer), &prog, 100_000).steps;
        assert!(compressed <= fused, "{src}: {compressed} > {fused}");
    }
}

#[test]
fn top_level_j_in_the_marked_calculus() {
    let j = p("J");
    match decompose(&MarkedCalc::UNDELIMITED, MarkedCalc::UNDELIMITED.initial(&j)) {
        Decomposition::Dec(r, e) => {
            assert_eq!(MarkedCalc::UNDELIMITED.contract(&r, &e).unwrap_err(), StuckReason::NoDelimiter)
        }
        d => panic!("{d:?}"),
    }
    match decompose(&MarkedCalc::DELIMITED, MarkedCalc::DELIMITED.initial(&j)) {
        Decomposition::Dec(r, e) => {
            let (c, _) = MarkedCalc::DELIMITED.contract(&r, &e).unwrap();
            assert_eq!(c, Closure::Ctx(marked::Ctx::default()));
        }
        d => panic!("{d:?}"),
    }
    let p5 = "((J (lam k k)) 0)";
    assert_eq!(int(&Rb(MarkedCalc::UNDELIMITED), p5), Outcome::Stuck(StuckReason::NoDelimiter));
    assert_eq!(
        int(&Rb(InheritedCalc::WITHOUT_TOP_LEVEL_J), p5),
        Outcome::Stuck(StuckReason::JOutsideLambda)
    );
}

#[test]
fn divergence_exhausts_fuel() {
    let omega = p("((lam x (x x)) (lam x (x x)))");
    assert_eq!(run(&Rb(TwoLayer), &omega, 300).outcome.map(|_| ()), Outcome::OutOfFuel(300));
    assert_eq!(run(&Fused(MarkedCalc::DELIMITED), &omega, 300).steps, 300);
}

fn laws_hold<C: Calculus>(calc: C) -> usize {
    let mut n = 0;
    for src in PROGRAMS {
        for (c, x) in reachable(&calc, &p(src), 10_000, 200) {
            check_refocusing(&calc, &c, &x).unwrap();
            check_round_trip(&calc, &c, &x).unwrap();
            n += 1;
        }
    }
    n
}

#[test]
fn refocusing_and_round_trip_on_reachable_states() {
    assert!(laws_hold(TwoLayer) > 100);
    assert!(laws_hold(MarkedCalc::DELIMITED) > 100);
    assert!(laws_hold(InheritedCalc::WITH_TOP_LEVEL_J) > 100);
}

#[test]
fn rb_trace_prints_one_closure_per_contraction() {
    let (lines, out) = crate::machine::trace_lines(&Rb(TwoLayer), &p("(succ 4)"), 100);
    assert_eq!(out.map(|v| v.as_int()), Outcome::Final(Some(5)));
    assert_eq!(lines[0].to_string(), "reduce | (succ 4)[s1] | 0 | 0");
    assert_eq!(lines.last().unwrap().focus, "5");
}
