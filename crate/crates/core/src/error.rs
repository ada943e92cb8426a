use thiserror::Error;

use crate::alphabet::Letter;

/// Errors reported by the toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid letter {0:?}: tokens must be nonempty and contain no whitespace, ':' or '#'")]
    InvalidLetter(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: letter {letter} is not declared in the alphabet")]
    UndeclaredLetter { line: usize, letter: String },

    #[error("line {line}: state {state} out of range (automaton has {states} states)")]
    StateOutOfRange {
        line: usize,
        state: usize,
        states: usize,
    },

    #[error("letter {0} does not belong to the automaton alphabet")]
    ForeignLetter(Letter),

    #[error("state {state} out of range (automaton has {states} states)")]
    InvalidState { state: usize, states: usize },

    #[error("operation requires a deterministic automaton")]
    NotDeterministic,

    #[error("operation requires every state of the Büchi automaton to be accepting")]
    NotAllAccepting,

    #[error("letter {0} collides with the reserved pattern-letter prefix '@'")]
    ReservedLetter(Letter),

    #[error("pattern letter {0} has no recorded tuple")]
    MissingPatternLetter(Letter),

    #[error("invalid factorization pattern: {0}")]
    InvalidPattern(String),

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("level must be at least {min}, got {got}")]
    LevelTooSmall { min: usize, got: usize },

    #[error("resource bound exceeded: {what} (limit {limit})")]
    BoundExceeded { what: &'static str, limit: usize },

    #[error("DIMACS line {line}: {message}")]
    Dimacs { line: usize, message: String },

    #[error("invalid CNF: {0}")]
    InvalidCnf(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
