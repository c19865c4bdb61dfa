//! Parsed specifications and their textual serialization.

use std::fmt;

use super::tables::{CommTable, StateSpace};
use super::term::{Action, ProcTerm};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::logic::{Formula, Signature};
use crate::recspec::RecSpec;

/// Default number of instances per axiom in the soundness suite.
pub const DEFAULT_SAMPLES: usize = 50;
/// Default term-size bound of the soundness suite.
pub const DEFAULT_SIZE: usize = 8;

/// A query statement inside a specification file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Query {
    Taut(Formula),
    Equiv(Formula, Formula),
    Consistent(Formula),
    Entails {
        premises: Vec<Formula>,
        goal: Formula,
    },
    Normalize(String),
    Signal(String),
    Lts(String),
    Bisim(String, String),
    Eq(String, String),
    Axioms {
        samples: usize,
        size: usize,
        seed: u64,
    },
    Lint,
}

impl fmt::Display for Query {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Query::Taut(a) => write!(f, "query taut {a};"),
            Query::Equiv(a, b) => write!(f, "query equiv {a}, {b};"),
            Query::Consistent(a) => write!(f, "query consistent {a};"),
            Query::Entails { premises, goal } => {
                write!(f, "query entails {goal}")?;
                for (i, p) in premises.iter().enumerate() {
                    f.write_str(if i == 0 { " from " } else { ", " })?;
                    write!(f, "{p}")?;
                }
                f.write_str(";")
            }
            Query::Normalize(n) => write!(f, "query normalize {n};"),
            Query::Signal(n) => write!(f, "query signal {n};"),
            Query::Lts(n) => write!(f, "query lts {n};"),
            Query::Bisim(a, b) => write!(f, "query bisim {a}, {b};"),
            Query::Eq(a, b) => write!(f, "query eq {a}, {b};"),
            Query::Axioms {
                samples,
                size,
                seed,
            } => {
                write!(f, "query axioms samples {samples} size {size} seed {seed};")
            }
            Query::Lint => f.write_str("query lint;"),
        }
    }
}

/// A validated specification: declarations, tables, recursive
/// specifications, named closed processes and queries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spec {
    pub signature: Signature,
    pub actions: Vec<Action>,
    pub comm: CommTable,
    pub statespaces: Vec<StateSpace>,
    pub recspecs: Vec<RecSpec>,
    /// Named processes, with references to earlier definitions expanded.
    pub defs: Vec<(String, ProcTerm)>,
    pub queries: Vec<Query>,
    pub limits: Limits,
}

impl Spec {
    /// An empty specification with the given limits.
    pub fn empty(limits: Limits) -> Result<Self> {
        Ok(Spec {
            signature: Signature::with_cap(Vec::<String>::new(), limits.atom_cap)?,
            actions: Vec::new(),
            comm: CommTable::empty(),
            statespaces: Vec::new(),
            recspecs: Vec::new(),
            defs: Vec::new(),
            queries: Vec::new(),
            limits,
        })
    }

    pub fn parse(text: &str) -> Result<Self> {
        super::parser::parse_spec(text)
    }

    pub fn parse_with(text: &str, limits: Limits) -> Result<Self> {
        super::parser::parse_spec_with(text, limits)
    }

    pub fn def(&self, name: &str) -> Option<&ProcTerm> {
        self.defs.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }

    pub fn recspec(&self, name: &str) -> Option<&RecSpec> {
        self.recspecs.iter().find(|r| r.name == name)
    }

    /// The state space declaring `state`.
    pub fn state_space(&self, state: &str) -> Option<&StateSpace> {
        self.statespaces.iter().find(|s| s.contains(state))
    }

    pub fn is_action(&self, name: &str) -> bool {
        self.actions.iter().any(|a| a.name() == name)
    }

    /// Right-hand side of `var` in `spec`, with variables closed over the
    /// specification.
    pub fn unfold(&self, var: &str, spec: &str) -> Result<ProcTerm> {
        self.recspec(spec)
            .ok_or_else(|| Error::UnknownRecSpec(spec.to_string()))?
            .unfold(var)
    }

    /// Checks that `p` is closed and that every name in it is declared.
    pub fn check_term(&self, p: &ProcTerm) -> Result<()> {
        if let Some(x) = p.free_vars().into_iter().next() {
            return Err(Error::OpenTerm(x));
        }
        self.check_names(p)
    }

    fn check_names(&self, p: &ProcTerm) -> Result<()> {
        match p {
            ProcTerm::Act(a) if !self.is_action(a.name()) => {
                return Err(Error::UnknownAction(a.to_string()))
            }
            ProcTerm::Guard(phi, _) | ProcTerm::Emit(phi, _) => self.signature.check(phi)?,
            ProcTerm::State(s, _) if self.state_space(s).is_none() => {
                return Err(Error::UnknownState(s.clone()))
            }
            ProcTerm::Rec { var, spec } => {
                let rs = self
                    .recspec(spec)
                    .ok_or_else(|| Error::UnknownRecSpec(spec.clone()))?;
                if rs.rhs(var).is_none() {
                    return Err(Error::UnboundVariable {
                        spec: spec.clone(),
                        var: var.clone(),
                    });
                }
            }
            _ => {}
        }
        p.children()
            .into_iter()
            .try_for_each(|c| self.check_names(c))
    }
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}

impl fmt::Display for Spec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.signature.is_empty() {
            writeln!(f, "props {};", self.signature.atoms().join(", "))?;
        }
        if !self.actions.is_empty() {
            writeln!(f, "actions {};", join(&self.actions))?;
        }
        for e in self.comm.canonical_entries() {
            let r = e
                .result
                .map_or_else(|| "delta".to_string(), |r| r.to_string());
            writeln!(f, "comm {} | {} = {r};", e.left, e.right)?;
        }
        for s in &self.statespaces {
            writeln!(f, "{s}")?;
        }
        for r in &self.recspecs {
            writeln!(f, "{r}")?;
        }
        for (name, t) in &self.defs {
            writeln!(f, "proc {name} = {t};")?;
        }
        for q in &self.queries {
            writeln!(f, "{q}")?;
        }
        Ok(())
    }
}
