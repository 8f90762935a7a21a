//! Delimited control over layered continuations, and an evaluator for the
//! extended language built on it.

pub mod comp;
pub mod ext_eval;

pub use comp::{Comp, Cont};
pub use ext_eval::{ext_eval, ext_run, initial_ext_env, ExtValue};
