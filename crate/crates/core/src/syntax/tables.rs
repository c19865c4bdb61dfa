//! Communication function and state-operator tables.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use super::term::Action;
use crate::logic::Formula;

/// One declared `comm a | b = c;` entry. `result == None` stands for `δ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommEntry {
    pub left: Action,
    pub right: Action,
    pub result: Option<Action>,
}

impl CommEntry {
    pub fn new(left: &str, right: &str, result: Option<&str>) -> Self {
        CommEntry {
            left: Action::new(left),
            right: Action::new(right),
            result: result.map(Action::new),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CommError {
    #[error("undeclared action `{0}`")]
    UnknownAction(String),
    #[error("conflicting entries for {a} | {b}: {first} vs {second}")]
    Conflict {
        a: String,
        b: String,
        first: String,
        second: String,
    },
    #[error("not associative at ({a}, {b}, {c}): ({a} | {b}) | {c} = {left} but {a} | ({b} | {c}) = {right}")]
    NotAssociative {
        a: String,
        b: String,
        c: String,
        left: String,
        right: String,
    },
}

fn show(a: &Option<Action>) -> String {
    a.as_ref()
        .map_or_else(|| "delta".to_string(), |a| a.to_string())
}

/// Completed communication function: commutative, associative and
/// absorbing for `δ`. Only non-`δ` results are stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommTable {
    entries: BTreeMap<(Action, Action), Action>,
}

impl CommTable {
    /// Pure interleaving: every pair communicates to `δ`.
    pub fn empty() -> Self {
        CommTable::default()
    }

    /// Symmetrically completes the declared entries, reads missing entries
    /// as `δ`, and checks associativity over all triples of declared
    /// actions. The first failing triple in declaration order is reported.
    pub fn validate(declared: &[CommEntry], actions: &[Action]) -> Result<CommTable, CommError> {
        let known = |a: &Action| -> Result<(), CommError> {
            if actions.contains(a) {
                Ok(())
            } else {
                Err(CommError::UnknownAction(a.to_string()))
            }
        };
        let mut full: BTreeMap<(Action, Action), Option<Action>> = BTreeMap::new();
        for e in declared {
            known(&e.left)?;
            known(&e.right)?;
            if let Some(r) = &e.result {
                known(r)?;
            }
            for key in [
                (e.left.clone(), e.right.clone()),
                (e.right.clone(), e.left.clone()),
            ] {
                match full.get(&key) {
                    Some(prev) if *prev != e.result => {
                        return Err(CommError::Conflict {
                            a: key.0.to_string(),
                            b: key.1.to_string(),
                            first: show(prev),
                            second: show(&e.result),
                        })
                    }
                    _ => {
                        full.insert(key, e.result.clone());
                    }
                }
            }
        }
        let table = CommTable {
            entries: full
                .into_iter()
                .filter_map(|(k, v)| v.map(|v| (k, v)))
                .collect(),
        };
        for a in actions {
            for b in actions {
                for c in actions {
                    let left = table.apply(table.get(a, b).as_ref(), Some(c));
                    let right = table.apply(Some(a), table.get(b, c).as_ref());
                    if left != right {
                        return Err(CommError::NotAssociative {
                            a: a.to_string(),
                            b: b.to_string(),
                            c: c.to_string(),
                            left: show(&left),
                            right: show(&right),
                        });
                    }
                }
            }
        }
        Ok(table)
    }

    /// `γ(a, b)`; `None` is `δ`.
    pub fn get(&self, a: &Action, b: &Action) -> Option<Action> {
        self.entries.get(&(a.clone(), b.clone())).cloned()
    }

    /// `γ` extended to `Act ∪ {δ}`.
    pub fn apply(&self, a: Option<&Action>, b: Option<&Action>) -> Option<Action> {
        match (a, b) {
            (Some(a), Some(b)) => self.get(a, b),
            _ => None,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// All non-`δ` entries, both orientations.
    pub fn entries(&self) -> Vec<CommEntry> {
        self.entries
            .iter()
            .map(|((a, b), c)| CommEntry {
                left: a.clone(),
                right: b.clone(),
                result: Some(c.clone()),
            })
            .collect()
    }

    /// One entry per unordered pair, for serialization.
    pub fn canonical_entries(&self) -> Vec<CommEntry> {
        self.entries()
            .into_iter()
            .filter(|e| e.left <= e.right)
            .collect()
    }
}

/// State space of a family of state operators: a finite set of states with
/// action relabelling `act`, state change `eff` and emitted signal `sig`.
/// Unspecified entries default to `act(a,s) = a`, `eff(a,s) = s` and
/// `sig(s) = tt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateSpace {
    pub name: String,
    pub states: Vec<String>,
    pub sig: BTreeMap<String, Formula>,
    pub act: BTreeMap<(Action, String), Option<Action>>,
    pub eff: BTreeMap<(Action, String), String>,
}

impl StateSpace {
    pub fn new(name: &str, states: &[&str]) -> Self {
        StateSpace {
            name: name.to_string(),
            states: states.iter().map(|s| s.to_string()).collect(),
            sig: BTreeMap::new(),
            act: BTreeMap::new(),
            eff: BTreeMap::new(),
        }
    }

    pub fn contains(&self, state: &str) -> bool {
        self.states.iter().any(|s| s == state)
    }

    pub fn sig(&self, state: &str) -> Formula {
        self.sig.get(state).cloned().unwrap_or_else(Formula::truth)
    }

    /// `act(a, s)`; `None` is `δ`.
    pub fn act(&self, a: &Action, state: &str) -> Option<Action> {
        self.act
            .get(&(a.clone(), state.to_string()))
            .cloned()
            .unwrap_or_else(|| Some(a.clone()))
    }

    pub fn eff<'a>(&'a self, a: &Action, state: &'a str) -> &'a str {
        self.eff
            .get(&(a.clone(), state.to_string()))
            .map_or(state, String::as_str)
    }
}

impl fmt::Display for StateSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "statespace {} {{", self.name)?;
        writeln!(f, "  states {};", self.states.join(", "))?;
        for (s, phi) in &self.sig {
            writeln!(f, "  sig({s}) = {phi};")?;
        }
        for ((a, s), b) in &self.act {
            writeln!(f, "  act({a}, {s}) = {};", show(b))?;
        }
        for ((a, s), t) in &self.eff {
            writeln!(f, "  eff({a}, {s}) = {t};")?;
        }
        f.write_str("}")
    }
}
