//! Contradiction-tolerant process algebra with propositional signals.
//!
//! Guards and signals are formulas of a three-valued paraconsistent logic
//! ([`logic`]). Process terms ([`syntax`]) are reduced to basic terms and
//! compared axiomatically ([`normalize`]), given a structural operational
//! semantics ([`sos`]) and compared by splitting bisimulation ([`bisim`]).
//! Recursion goes through guarded recursive specifications ([`recspec`]).

pub mod bisim;
pub mod error;
pub mod gen;
pub mod limits;
pub mod logic;
pub mod normalize;
pub mod recspec;
pub mod sos;
pub mod syntax;

pub use error::{Error, Result};
pub use limits::Limits;
pub use logic::{Formula, Prop, Signature, TruthValue, TruthVector};
pub use syntax::{Action, ProcTerm, Spec};
