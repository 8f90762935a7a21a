//! Abstract machines, evaluators, control-operator simulations and
//! reduction semantics for applicative expressions with Landin's J
//! operator, with a harness that checks they all agree.
//!
//! Every engine maps a [`syntax::Program`] and a fuel bound to an
//! [`outcome::Outcome`]. The [`harness`] module registers all of them under
//! string ids and compares their observations.

pub mod baseline;
pub mod control;
pub mod harness;
pub mod list;
pub mod machine;
pub mod outcome;
pub mod rs;
pub mod secd;
pub mod sims;
pub mod syntax;
pub mod tower;
