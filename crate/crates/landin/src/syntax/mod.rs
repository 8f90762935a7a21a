//! Abstract and concrete syntax, and environments.

mod env;
mod parse;
mod print;
mod term;

pub use env::{Env, Unbound};
pub use parse::{parse_ext, parse_term, ParseError};
pub use term::{name, ExtTerm, Name, Pattern, Program, ProgramError, Term};

/// Parses a closed program.
pub fn parse_program(src: &str) -> Result<Program, LoadError> {
    Ok(Program::new(parse_term(src)?)?)
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Program(#[from] ProgramError),
}
