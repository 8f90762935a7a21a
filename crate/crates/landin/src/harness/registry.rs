//! Every engine under its string id.

use std::fmt;

use super::corpus::Subset;
use crate::baseline::{self, Baseline as Base, Cek, CekCalleeSave, CekStack, Rho};
use crate::machine::{self, Machine, TraceLine};
use crate::outcome::{Observable, Outcome, Reported, Run};
use crate::rs::inherited::{self, InheritedCalc};
use crate::rs::marked::{self, MarkedCalc};
use crate::rs::two_layer::{self, TwoLayer};
use crate::rs::{Fused, Rb, Refocused};
use crate::secd::{CallerSave, CekJ, Disentangled, Marked, Modern, Secd};
use crate::sims::{self, Simulation, Variant};
use crate::syntax::Program;
use crate::tower::Evaluator;

/// Engines that are expected to agree with each other on every program
/// they accept.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// J resumes the dump current when it was evaluated, at any level.
    Felleisen,
    /// J is only meaningful inside a function body.
    Burge,
    /// The λ-calculus without J.
    Baseline,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Felleisen => "felleisen",
            Family::Burge => "burge",
            Family::Baseline => "baseline",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Address space reserved for each engine run; pages are only touched as
/// needed.
pub const ENGINE_STACK: usize = 1 << 30;

/// Fuel bound for the reduction-based engines. Each of their steps
/// re-decomposes the whole closure, so a divergent program whose dump grows
/// makes them quadratic; beyond this bound they report exhaustion.
pub const RB_FUEL_CAP: u64 = 2_000;

type Runner = Box<dyn Fn(&Program, u64) -> Run<Reported>>;
type Tracer = Box<dyn Fn(&Program, u64) -> (Vec<TraceLine>, Outcome<Reported>)>;

pub struct Engine {
    pub id: String,
    pub family: Family,
    /// The largest fragment the engine accepts.
    pub subset: Subset,
    runner: Runner,
    tracer: Option<Tracer>,
}

impl fmt::Debug for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Engine")
            .field("id", &self.id)
            .field("family", &self.family)
            .field("subset", &self.subset)
            .finish_non_exhaustive()
    }
}

impl Engine {
    /// Runs on a fresh stack of [`ENGINE_STACK`] bytes: tearing down the
    /// continuations of a long divergent run recurses through nested
    /// closures.
    pub fn run(&self, p: &Program, fuel: u64) -> Run<Reported> {
        stacker::grow(ENGINE_STACK, || (self.runner)(p, fuel))
    }

    /// One line per configuration, for first-order engines.
    pub fn trace(&self, p: &Program, fuel: u64) -> Option<(Vec<TraceLine>, Outcome<Reported>)> {
        self.tracer.as_ref().map(|t| stacker::grow(ENGINE_STACK, || t(p, fuel)))
    }

    pub fn has_trace(&self) -> bool {
        self.tracer.is_some()
    }

    pub fn accepts(&self, s: Subset) -> bool {
        s <= self.subset
    }

    fn machine<M>(id: impl Into<String>, family: Family, subset: Subset, m: M) -> Engine
    where
        M: Machine + Clone + 'static,
        M::Value: Observable,
    {
        let m2 = m.clone();
        Engine {
            id: id.into(),
            family,
            subset,
            runner: Box::new(move |p, fuel| machine::run(&m, p, fuel).report()),
            tracer: Some(Box::new(move |p, fuel| {
                let (lines, out) = machine::trace_lines(&m2, p, fuel);
                (lines, out.map(|v| Reported::of(&v)))
            })),
        }
    }

    fn capped(mut self, cap: u64) -> Engine {
        let runner = self.runner;
        self.runner = Box::new(move |p, fuel| runner(p, fuel.min(cap)));
        self.tracer = self.tracer.map(|t| -> Tracer { Box::new(move |p, fuel| t(p, fuel.min(cap))) });
        self
    }

    fn opaque(
        id: impl Into<String>,
        family: Family,
        subset: Subset,
        f: impl Fn(&Program, u64) -> Run<Reported> + 'static,
    ) -> Engine {
        Engine {
            id: id.into(),
            family,
            subset,
            runner: Box::new(f),
            tracer: None,
        }
    }
}

fn variant_tag(v: Variant) -> Option<&'static str> {
    match v {
        Variant::Standard => None,
        Variant::CallccFlavor => Some("callcc"),
        Variant::ControlFlavor => Some("control"),
        Variant::ResetFree => Some("reset-free"),
        Variant::ViaJi => Some("via-ji"),
        Variant::AsPrinted => Some("as-printed"),
    }
}

fn rs_pipelines<C>(
    out: &mut Vec<Engine>,
    prefix: &str,
    calc: C,
    compressed: impl Machine<Value = impl Observable> + Clone + 'static,
) where
    C: crate::rs::Calculus + 'static,
{
    use Family::Felleisen;
    use Subset::Unrestricted;
    out.push(Engine::machine(prefix, Felleisen, Unrestricted, Rb(calc)).capped(RB_FUEL_CAP));
    out.push(Engine::machine(format!("{prefix}-refocused"), Felleisen, Unrestricted, Refocused(calc)));
    out.push(Engine::machine(format!("{prefix}-fused"), Felleisen, Unrestricted, Fused(calc)));
    out.push(Engine::machine(format!("{prefix}-compressed"), Felleisen, Unrestricted, compressed));
}

/// All engines, in a fixed order.
pub fn registry() -> Vec<Engine> {
    use Family::*;
    use Subset::*;
    let mut out = vec![
        Engine::machine("secd-felleisen", Felleisen, Unrestricted, Secd::FELLEISEN),
        Engine::machine("secd-disentangled", Felleisen, Unrestricted, Disentangled::FAITHFUL),
        Engine::machine("secd-disentangled-short", Felleisen, Unrestricted, Disentangled::SHORT),
        Engine::machine("secd-modern", Felleisen, Unrestricted, Modern),
        Engine::machine("secd-callersave-dump", Felleisen, Unrestricted, CallerSave),
        Engine::machine("marked-context", Felleisen, Unrestricted, Marked::DELIMITED),
        Engine::machine("cek-j", Felleisen, Unrestricted, CekJ::WITH_TOP_LEVEL_J),
    ];
    for e in Evaluator::ALL {
        let family = if e == Evaluator::Cps2Burge { Burge } else { Felleisen };
        out.push(Engine::opaque(e.id(), family, Unrestricted, move |p, fuel| e.run(p, fuel).report()));
    }
    for s in Simulation::ALL {
        // The Burge translations reject J outside function bodies.
        let (family, subset) = if s.is_burge() { (Burge, JUnderLambda) } else { (Felleisen, Unrestricted) };
        for &v in s.variants() {
            if v == Variant::AsPrinted {
                continue;
            }
            let id = match variant_tag(v) {
                None => s.id().to_string(),
                Some(tag) => format!("{}:{tag}", s.id()),
            };
            out.push(Engine::opaque(id, family, subset, move |p, fuel| {
                sims::run_variant(s, v, p, fuel).report()
            }));
        }
    }
    rs_pipelines(&mut out, "rs-lrhoj", TwoLayer, two_layer::Compressed);
    rs_pipelines(
        &mut out,
        "rs-marked",
        MarkedCalc::DELIMITED,
        marked::Compressed { delimited_start: true },
    );
    rs_pipelines(
        &mut out,
        "rs-inherited",
        InheritedCalc::WITH_TOP_LEVEL_J,
        inherited::Compressed { top_level_j: true },
    );
    out.push(Engine::machine("secd-burge", Burge, Unrestricted, Secd::BURGE));
    out.push(Engine::machine("secd-burge-disentangled", Burge, Unrestricted, Disentangled::BURGE));
    for b in Base::ALL {
        out.push(match b {
            Base::Cek => Engine::machine(b.id(), Baseline, PureLambda, Cek),
            Base::CekCalleeSave => Engine::machine(b.id(), Baseline, PureLambda, CekCalleeSave),
            Base::CekStack => Engine::machine(b.id(), Baseline, PureLambda, CekStack),
            Base::RsRho => Engine::machine(b.id(), Baseline, PureLambda, Rb(Rho)).capped(RB_FUEL_CAP),
            Base::RsRhoRefocused => Engine::machine(b.id(), Baseline, PureLambda, Refocused(Rho)),
            Base::RsRhoCompressed => Engine::machine(b.id(), Baseline, PureLambda, baseline::rho::Compressed),
            _ => Engine::opaque(b.id(), Baseline, PureLambda, move |p, fuel| b.run(p, fuel)),
        });
    }
    out
}

/// Looks an engine up by id. `λρ̂J` is accepted as a spelling of `lrhoj`.
pub fn engine(id: &str) -> Option<Engine> {
    let id = id.replace("λρ̂J", "lrhoj");
    registry().into_iter().find(|e| e.id == id)
}
