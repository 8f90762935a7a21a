//! The uniform observable of every engine.

use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StuckReason {
    UnboundVariable,
    ApplyNonFunction,
    SuccNonInteger,
    JOutsideLambda,
    NoDelimiter,
    CaseNonSum,
    /// A configuration that no run from an injected program can reach.
    Malformed,
}

impl StuckReason {
    pub fn as_str(self) -> &'static str {
        match self {
            StuckReason::UnboundVariable => "unbound-variable",
            StuckReason::ApplyNonFunction => "apply-non-function",
            StuckReason::SuccNonInteger => "succ-non-integer",
            StuckReason::JOutsideLambda => "j-outside-lambda",
            StuckReason::NoDelimiter => "no-delimiter",
            StuckReason::CaseNonSum => "case-non-sum",
            StuckReason::Malformed => "malformed-configuration",
        }
    }
}

impl fmt::Display for StuckReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Outcome<V> {
    Final(V),
    Stuck(StuckReason),
    OutOfFuel(u64),
}

impl<V> Outcome<V> {
    pub fn map<W>(self, f: impl FnOnce(V) -> W) -> Outcome<W> {
        match self {
            Outcome::Final(v) => Outcome::Final(f(v)),
            Outcome::Stuck(r) => Outcome::Stuck(r),
            Outcome::OutOfFuel(n) => Outcome::OutOfFuel(n),
        }
    }

    pub fn final_value(&self) -> Option<&V> {
        match self {
            Outcome::Final(v) => Some(v),
            _ => None,
        }
    }
}

/// Values that can be looked at from outside an engine.
pub trait Observable {
    fn as_int(&self) -> Option<i64>;
    /// Short description used for non-integer results.
    fn describe(&self) -> String;
}

/// An engine-independent rendering of a final value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Reported {
    Int(i64),
    Procedure(String),
}

impl Reported {
    pub fn of<V: Observable>(v: &V) -> Reported {
        match v.as_int() {
            Some(n) => Reported::Int(n),
            None => Reported::Procedure(v.describe()),
        }
    }
}

/// An outcome together with the number of transitions taken.
#[derive(Clone, Debug, PartialEq)]
pub struct Run<V> {
    pub outcome: Outcome<V>,
    pub steps: u64,
}

impl<V: Observable> Run<V> {
    pub fn report(&self) -> Run<Reported> {
        Run {
            outcome: match &self.outcome {
                Outcome::Final(v) => Outcome::Final(Reported::of(v)),
                Outcome::Stuck(r) => Outcome::Stuck(*r),
                Outcome::OutOfFuel(n) => Outcome::OutOfFuel(*n),
            },
            steps: self.steps,
        }
    }
}

impl Run<Reported> {
    pub fn observe(&self) -> Observation {
        Observation::of(&self.outcome)
    }
}

/// The quotient under which engines are compared: integers are compared
/// exactly, every other value is just a procedure, and stuck reasons are
/// ignored.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Observation {
    Num(i64),
    Procedure,
    StuckObs,
    Unknown(u64),
}

impl Observation {
    pub fn of(o: &Outcome<Reported>) -> Observation {
        match o {
            Outcome::Final(Reported::Int(n)) => Observation::Num(*n),
            Outcome::Final(Reported::Procedure(_)) => Observation::Procedure,
            Outcome::Stuck(_) => Observation::StuckObs,
            Outcome::OutOfFuel(n) => Observation::Unknown(*n),
        }
    }

    pub fn is_known(&self) -> bool {
        !matches!(self, Observation::Unknown(_))
    }

    /// Equal, or at least one side unknown.
    pub fn agrees_with(&self, other: &Observation) -> bool {
        !self.is_known() || !other.is_known() || self == other
    }
}

impl fmt::Display for Observation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Observation::Num(n) => write!(f, "{n}"),
            Observation::Procedure => f.write_str("procedure"),
            Observation::StuckObs => f.write_str("stuck"),
            Observation::Unknown(n) => write!(f, "unknown({n})"),
        }
    }
}

impl fmt::Display for Outcome<Reported> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Outcome::Final(Reported::Int(n)) => write!(f, "value: {n}"),
            Outcome::Final(Reported::Procedure(_)) => f.write_str("value: #procedure"),
            Outcome::Stuck(r) => write!(f, "stuck: {r}"),
            Outcome::OutOfFuel(_) => f.write_str("fuel-exhausted"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn observation_quotient() {
        let a = Observation::of(&Outcome::Stuck(StuckReason::NoDelimiter));
        let b = Observation::of(&Outcome::Stuck(StuckReason::JOutsideLambda));
        assert_eq!(a, b);
        let p = Observation::of(&Outcome::Final(Reported::Procedure("succ".into())));
        let q = Observation::of(&Outcome::Final(Reported::Procedure("closure".into())));
        assert_eq!(p, q);
        assert!(Observation::Unknown(10).agrees_with(&Observation::Num(3)));
        assert!(!Observation::Num(1).agrees_with(&Observation::Num(0)));
    }

    #[test]
    fn cli_rendering() {
        assert_eq!(Outcome::Final(Reported::Int(5)).to_string(), "value: 5");
        assert_eq!(
            Outcome::<Reported>::Stuck(StuckReason::JOutsideLambda).to_string(),
            "stuck: j-outside-lambda"
        );
        assert_eq!(Outcome::<Reported>::OutOfFuel(3).to_string(), "fuel-exhausted");
    }
}
