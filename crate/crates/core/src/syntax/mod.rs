//! Process terms, the specification language and its tables.

mod lexer;
pub mod parser;
pub mod pretty;
mod spec;
mod tables;
mod term;

pub use parser::{parse_formula, parse_proc, parse_spec, parse_spec_with};
pub use pretty::pretty;
pub use spec::{Query, Spec, DEFAULT_SAMPLES, DEFAULT_SIZE};
pub use tables::{CommEntry, CommError, CommTable, StateSpace};
pub use term::{Action, ProcTerm};
