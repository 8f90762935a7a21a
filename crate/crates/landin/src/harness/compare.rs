//! Running many engines on one program and judging whether they agree.

use std::fmt;

use super::corpus::Subset;
use super::registry::{engine, registry, Engine, Family};
use crate::outcome::{Observation, Outcome, Reported};
use crate::syntax::Program;

#[derive(Clone, Debug)]
pub struct Row {
    pub engine: String,
    pub family: Family,
    pub outcome: Outcome<Reported>,
    pub steps: u64,
    pub observation: Observation,
}

/// The consensus of one family, if it has any known observation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Camp {
    pub family: Family,
    pub observation: Option<Observation>,
}

#[derive(Clone, Debug)]
pub struct CompareReport {
    pub program: String,
    /// The fragment the program lies in.
    pub class: Subset,
    pub rows: Vec<Row>,
    pub camps: Vec<Camp>,
    pub agree: bool,
    /// Engines whose known observation differs from the majority of the
    /// group they are judged in.
    pub dissent: Vec<String>,
}

impl CompareReport {
    pub fn observation(&self, engine: &str) -> Option<Observation> {
        self.rows.iter().find(|r| r.engine == engine).map(|r| r.observation)
    }

    pub fn family(&self, f: Family) -> impl Iterator<Item = &Row> {
        self.rows.iter().filter(move |r| r.family == f)
    }
}

impl fmt::Display for CompareReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}\t{}", r.engine, r.observation)?;
        }
        if self.agree {
            write!(f, "verdict\tagree")
        } else {
            write!(f, "verdict\tdissent: {}", self.dissent.join(" "))
        }
    }
}

/// The most frequent known observation, earliest first on ties.
fn majority<'a>(rows: impl Iterator<Item = &'a Row>) -> Option<Observation> {
    let mut counts: Vec<(Observation, usize)> = Vec::new();
    for r in rows.filter(|r| r.observation.is_known()) {
        match counts.iter_mut().find(|(o, _)| *o == r.observation) {
            Some((_, n)) => *n += 1,
            None => counts.push((r.observation, 1)),
        }
    }
    let best = counts.iter().map(|(_, n)| *n).max()?;
    counts.into_iter().find(|(_, n)| *n == best).map(|(o, _)| o)
}

/// Judges already computed rows. Each family must agree internally. When
/// the program uses J only inside function bodies, or not at all, the
/// families must also agree with each other; on other programs the
/// Felleisen and Burge families legitimately form separate camps.
pub fn judge(program: &str, class: Subset, rows: Vec<Row>) -> CompareReport {
    let families = [Family::Felleisen, Family::Burge, Family::Baseline];
    let camps: Vec<Camp> = families
        .iter()
        .filter(|&&f| rows.iter().any(|r| r.family == f))
        .map(|&f| Camp {
            family: f,
            observation: majority(rows.iter().filter(|r| r.family == f)),
        })
        .collect();
    let mut dissent = Vec::new();
    if class == Subset::Unrestricted {
        for c in &camps {
            if let Some(o) = c.observation {
                dissent.extend(
                    rows.iter()
                        .filter(|r| r.family == c.family && r.observation.is_known() && r.observation != o)
                        .map(|r| r.engine.clone()),
                );
            }
        }
        dissent.sort_by_key(|id| rows.iter().position(|r| &r.engine == id));
    } else if let Some(o) = majority(rows.iter()) {
        dissent.extend(
            rows.iter()
                .filter(|r| r.observation.is_known() && r.observation != o)
                .map(|r| r.engine.clone()),
        );
    }
    CompareReport {
        program: program.to_string(),
        class,
        agree: dissent.is_empty(),
        rows,
        camps,
        dissent,
    }
}

fn row(e: &Engine, p: &Program, fuel: u64) -> Row {
    let run = e.run(p, fuel);
    Row {
        engine: e.id.clone(),
        family: e.family,
        observation: run.observe(),
        outcome: run.outcome,
        steps: run.steps,
    }
}

/// Runs every registered engine that accepts `filter`, or the program's own
/// fragment when no filter is given.
pub fn compare(program: &str, p: &Program, fuel: u64, filter: Option<Subset>) -> CompareReport {
    let class = Subset::of(p.term());
    let s = filter.unwrap_or(class).max(class);
    let rows = registry().iter().filter(|e| e.accepts(s)).map(|e| row(e, p, fuel)).collect();
    judge(program, class, rows)
}

/// A rational step ratio.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub const ONE: Ratio = Ratio { num: 1, den: 1 };

    pub fn new(num: u64, den: u64) -> Ratio {
        assert!(den > 0, "zero denominator");
        Ratio { num, den }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LockstepError {
    #[error("unknown engine `{0}`")]
    UnknownEngine(String),
    #[error("engine `{0}` has no trace")]
    NoTrace(String),
}

#[derive(Clone, Debug, PartialEq)]
pub struct LockstepReport {
    pub pass: bool,
    pub steps: (u64, u64),
    pub observations: (Observation, Observation),
}

/// Passes iff `steps(m2) = ratio * steps(m1)` and both observations are
/// equal.
pub fn lockstep_check(
    m1: &str,
    m2: &str,
    p: &Program,
    fuel: u64,
    ratio: Ratio,
) -> Result<LockstepReport, LockstepError> {
    let get = |id: &str| {
        let e = engine(id).ok_or_else(|| LockstepError::UnknownEngine(id.to_string()))?;
        if !e.has_trace() {
            return Err(LockstepError::NoTrace(id.to_string()));
        }
        Ok(e)
    };
    let (e1, e2) = (get(m1)?, get(m2)?);
    let (r1, r2) = (e1.run(p, fuel), e2.run(p, fuel));
    let observations = (r1.observe(), r2.observe());
    let pass = r2.steps * ratio.den == r1.steps * ratio.num && observations.0 == observations.1;
    Ok(LockstepReport {
        pass,
        steps: (r1.steps, r2.steps),
        observations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::corpus::entry;
    use Observation::*;

    fn report(id: &str) -> CompareReport {
        let e = entry(id).unwrap();
        compare(id, &e.program, 100_000, None)
    }

    #[test]
    fn all_engines_agree_on_succ_4() {
        let r = report("P1");
        assert!(r.agree, "{r}");
        assert!(r.rows.iter().all(|row| row.observation == Num(5)));
        assert!(r.family(Family::Baseline).count() == 9);
    }

    #[test]
    fn p4_on_the_felleisen_family() {
        let r = report("P4");
        assert!(r.agree, "{r}");
        assert!(r.family(Family::Felleisen).all(|row| row.observation == Num(1)));
        assert_eq!(r.family(Family::Baseline).count(), 0);
    }

    #[test]
    fn p5_splits_into_two_coherent_camps() {
        let r = report("P5");
        assert!(r.agree, "{r}");
        assert_eq!(
            r.camps,
            vec![
                Camp { family: Family::Felleisen, observation: Some(Num(0)) },
                Camp { family: Family::Burge, observation: Some(StuckObs) },
            ]
        );
    }

    #[test]
    fn unknown_never_breaks_agreement() {
        let r = compare("omega", &entry("omega").unwrap().program, 2_000, None);
        assert!(r.agree);
        assert!(r.rows.iter().all(|row| matches!(row.observation, Unknown(_))));
    }

    fn fake(engine: &str, family: Family, observation: Observation) -> Row {
        Row {
            engine: engine.into(),
            family,
            outcome: Outcome::OutOfFuel(0),
            steps: 0,
            observation,
        }
    }

    #[test]
    fn dissenters_are_the_minority() {
        let rows = vec![
            fake("a", Family::Felleisen, Num(1)),
            fake("b", Family::Felleisen, Num(2)),
            fake("c", Family::Felleisen, Num(1)),
            fake("d", Family::Felleisen, Unknown(9)),
        ];
        let r = judge("x", Subset::JUnderLambda, rows.clone());
        assert_eq!(r.dissent, vec!["b"]);
        let mut rows = rows;
        rows.push(fake("e", Family::Burge, Num(2)));
        rows.push(fake("f", Family::Burge, Num(2)));
        let r = judge("x", Subset::JUnderLambda, rows.clone());
        assert!(!r.agree);
        let r = judge("x", Subset::Unrestricted, rows);
        assert_eq!(r.dissent, vec!["b"]);
    }

    #[test]
    fn lockstep_examples() {
        let p1 = entry("P1").unwrap().program;
        let r = lockstep_check("secd-felleisen", "secd-disentangled", &p1, 1_000_000, Ratio::new(2, 1)).unwrap();
        assert!(r.pass, "{r:?}");
        let p3 = entry("P3").unwrap().program;
        let r = lockstep_check("secd-modern", "rs-λρ̂J-compressed", &p3, 1_000_000, Ratio::ONE).unwrap();
        assert!(r.pass, "{r:?}");
        let p5 = entry("P5").unwrap().program;
        let r = lockstep_check("secd-felleisen", "secd-burge", &p5, 1_000_000, Ratio::ONE).unwrap();
        assert!(!r.pass);
        assert_eq!(
            lockstep_check("cps2", "cek", &p1, 10, Ratio::ONE),
            Err(LockstepError::NoTrace("cps2".into()))
        );
    }
}
