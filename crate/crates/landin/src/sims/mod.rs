//! Syntax-directed translations of J into the extended language, each of
//! which, composed with [`crate::control::ext_eval`], is another engine.

mod build;
mod translate;

use thiserror::Error;

use crate::control::{ext_run, ExtValue};
use crate::outcome::{Outcome, Run, StuckReason};
use crate::syntax::{ExtTerm, Program, Term};
use translate::Translator;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Simulation {
    /// Direct style with `shift1`/`shift2`.
    DsShift2,
    /// One layer of continuations, with `shift`.
    Cps1Shift,
    /// Two layers of continuations, no control operators.
    Cps2,
    /// Direct style with the jumpy `C1`/`C2`.
    DsC2,
    /// One layer, with the jumpy `C`.
    Cps1C,
    /// One layer, with `callcc`.
    Cps1Callcc,
    /// CPS with an extra return continuation.
    CpsRet,
    /// Direct style, passing a return continuation.
    DsRet,
    /// The double-barrelled CPS transformation.
    Thielecke,
    /// J as a dynamically bound identifier, direct style.
    FelleisenDs,
    /// J as a dynamically bound identifier, CPS.
    FelleisenCps,
    /// Tagged returns, direct style.
    BurgeDs,
    /// Tagged returns, one layer.
    BurgeCps1,
    /// Tagged returns, two layers.
    BurgeCps2,
}

/// Alternative forms of some translations, each expected to agree with the
/// standard one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Standard,
    /// `callcc` in place of `shift` (Felleisen direct style, Burge one layer).
    CallccFlavor,
    /// The jumpy `C` operators in place of `shift` (Felleisen direct style,
    /// Burge direct style and one layer).
    ControlFlavor,
    /// The direct-style return-continuation translation without the resets
    /// inside its captures.
    ResetFree,
    /// Thielecke's translation with J obtained from JI by expansion.
    ViaJi,
    /// The two-level jumpy clause for J resuming the captured first-level
    /// continuation directly. It loses the dump whenever a state appender
    /// is returned to instead of applied; kept to exhibit that.
    AsPrinted,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TranslateError {
    #[error("J occurs outside of a lambda-abstraction")]
    JOutsideLambda,
    #[error("{0:?} is not a variant of {1}")]
    NoSuchVariant(Variant, &'static str),
}

impl Simulation {
    pub const ALL: [Simulation; 14] = [
        Simulation::DsShift2,
        Simulation::Cps1Shift,
        Simulation::Cps2,
        Simulation::DsC2,
        Simulation::Cps1C,
        Simulation::Cps1Callcc,
        Simulation::CpsRet,
        Simulation::DsRet,
        Simulation::Thielecke,
        Simulation::FelleisenDs,
        Simulation::FelleisenCps,
        Simulation::BurgeDs,
        Simulation::BurgeCps1,
        Simulation::BurgeCps2,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Simulation::DsShift2 => "sim-ds-shift2",
            Simulation::Cps1Shift => "sim-cps1-shift",
            Simulation::Cps2 => "sim-cps2",
            Simulation::DsC2 => "sim-ds-C2",
            Simulation::Cps1C => "sim-cps1-C",
            Simulation::Cps1Callcc => "sim-cps1-callcc",
            Simulation::CpsRet => "sim-cps-ret",
            Simulation::DsRet => "sim-ds-ret",
            Simulation::Thielecke => "sim-thielecke",
            Simulation::FelleisenDs => "sim-felleisen-ds",
            Simulation::FelleisenCps => "sim-felleisen-cps",
            Simulation::BurgeDs => "sim-burge-ds",
            Simulation::BurgeCps1 => "sim-burge-cps1",
            Simulation::BurgeCps2 => "sim-burge-cps2",
        }
    }

    pub fn from_id(id: &str) -> Option<Simulation> {
        Simulation::ALL.into_iter().find(|s| s.id() == id)
    }

    /// Simulations of the machine that restricts J to function bodies.
    pub fn is_burge(self) -> bool {
        matches!(
            self,
            Simulation::BurgeDs | Simulation::BurgeCps1 | Simulation::BurgeCps2
        )
    }

    /// Whether translated terms use no control operator.
    pub fn is_pure_cps(self) -> bool {
        matches!(
            self,
            Simulation::Cps2 | Simulation::CpsRet | Simulation::Thielecke | Simulation::BurgeCps2
        )
    }

    pub fn variants(self) -> &'static [Variant] {
        use Variant::*;
        match self {
            Simulation::FelleisenDs => &[Standard, CallccFlavor, ControlFlavor],
            Simulation::BurgeDs => &[Standard, ControlFlavor, AsPrinted],
            Simulation::DsC2 => &[Standard, AsPrinted],
            Simulation::BurgeCps1 => &[Standard, ControlFlavor, CallccFlavor],
            Simulation::DsRet => &[Standard, ResetFree],
            Simulation::Thielecke => &[Standard, ViaJi],
            _ => &[Standard],
        }
    }

    fn check(self, variant: Variant, t: &Term) -> Result<(), TranslateError> {
        if !self.variants().contains(&variant) {
            return Err(TranslateError::NoSuchVariant(variant, self.id()));
        }
        if self.is_burge() && !t.j_under_lambda() {
            return Err(TranslateError::JOutsideLambda);
        }
        Ok(())
    }
}

/// Translates a term, without the program wrapper.
pub fn translate(s: Simulation, t: &Term) -> Result<ExtTerm, TranslateError> {
    translate_variant(s, Variant::Standard, t)
}

pub fn translate_variant(s: Simulation, v: Variant, t: &Term) -> Result<ExtTerm, TranslateError> {
    s.check(v, t)?;
    Ok(Translator::new(s, v, t).term(t, false))
}

/// Translates a whole program: the translated term inside the wrapper that
/// supplies its initial continuations and delimiters.
pub fn translate_program(s: Simulation, v: Variant, p: &Program) -> Result<ExtTerm, TranslateError> {
    let t = p.term();
    s.check(v, t)?;
    let mut tr = Translator::new(s, v, t);
    let body = tr.term(t, false);
    Ok(tr.wrap(body))
}

/// Wraps an already translated term. Binder names in the wrapper are chosen
/// to avoid those of `source`.
pub fn wrap_program(s: Simulation, source: &Term, body: ExtTerm) -> ExtTerm {
    Translator::new(s, Variant::Standard, source).wrap(body)
}

pub fn run_simulation(s: Simulation, p: &Program, fuel: u64) -> Run<ExtValue> {
    run_variant(s, Variant::Standard, p, fuel)
}

pub fn run_variant(s: Simulation, v: Variant, p: &Program, fuel: u64) -> Run<ExtValue> {
    match translate_program(s, v, p) {
        Ok(t) => ext_run(&t, fuel),
        Err(_) => Run {
            outcome: Outcome::Stuck(StuckReason::JOutsideLambda),
            steps: 0,
        },
    }
}

#[cfg(test)]
mod tests;
