//! Symbolic transitions, reachable transition systems and their expansion
//! per valuation.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rustc_hash::FxHashMap as HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::logic::{Formula, Prop, TruthVector};
use crate::normalize::{KeyId, Normalizer};
use crate::syntax::{Action, ProcTerm, Spec};

/// Target of a symbolic transition: a term, or successful termination.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Target {
    Tick,
    Term(ProcTerm),
}

/// A transition `p --guard, action--> target` derived by the rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymTransition {
    pub action: Action,
    pub guard: Prop,
    pub target: Target,
}

/// Rule-based semantics over one specification, memoizing signals.
pub struct Semantics<'s> {
    spec: &'s Spec,
    valuations: usize,
    signals: HashMap<ProcTerm, Prop>,
    unfolding: Vec<ProcTerm>,
}

impl<'s> Semantics<'s> {
    pub fn new(spec: &'s Spec) -> Self {
        Semantics {
            spec,
            valuations: spec.signature.valuation_count(),
            signals: HashMap::default(),
            unfolding: Vec::new(),
        }
    }

    fn prop(&self, f: &Formula) -> Result<Prop> {
        self.spec.signature.prop(f.clone())
    }

    fn state_sig(&self, state: &str) -> Result<Prop> {
        let space = self
            .spec
            .state_space(state)
            .ok_or_else(|| Error::UnknownState(state.to_string()))?;
        self.prop(&space.sig(state))
    }

    fn enter(&mut self, p: &ProcTerm) -> Result<ProcTerm> {
        let ProcTerm::Rec { var, spec } = p else {
            unreachable!("enter on a non-constant")
        };
        if self.unfolding.contains(p) {
            return Err(Error::Unguarded {
                spec: spec.clone(),
                equation: var.clone(),
                var: var.clone(),
            });
        }
        let body = self.spec.unfold(var, spec)?;
        self.unfolding.push(p.clone());
        Ok(body)
    }

    /// The signal `s(p)` per the signal rules.
    pub fn signal(&mut self, p: &ProcTerm) -> Result<Prop> {
        if let Some(s) = self.signals.get(p) {
            return Ok(s.clone());
        }
        let s = match p {
            ProcTerm::Nex => Prop::falsity(self.valuations),
            ProcTerm::Delta | ProcTerm::Act(_) => Prop::truth(self.valuations),
            ProcTerm::Var(x) => return Err(Error::OpenTerm(x.clone())),
            ProcTerm::Alt(x, y)
            | ProcTerm::Par(x, y)
            | ProcTerm::LeftMerge(x, y)
            | ProcTerm::CommMerge(x, y) => self.signal(x)?.and(&self.signal(y)?),
            ProcTerm::Seq(x, _) | ProcTerm::Encap(_, x) => self.signal(x)?,
            ProcTerm::Guard(phi, x) => self.prop(phi)?.implies(&self.signal(x)?),
            ProcTerm::Emit(phi, x) => self.prop(phi)?.and(&self.signal(x)?),
            ProcTerm::State(s, x) => self.signal(x)?.and(&self.state_sig(s)?),
            ProcTerm::Rec { .. } => {
                let body = self.enter(p)?;
                let r = self.signal(&body);
                self.unfolding.pop();
                r?
            }
        };
        self.signals.insert(p.clone(), s.clone());
        Ok(s)
    }

    fn blocked(&mut self, p: &ProcTerm) -> Result<bool> {
        Ok(self.signal(p)?.is_false_equiv())
    }

    /// Target signal check, made outside any unfolding in progress.
    fn target_blocked(&mut self, p: &ProcTerm) -> Result<bool> {
        let outer = std::mem::take(&mut self.unfolding);
        let r = self.blocked(p);
        self.unfolding = outer;
        r
    }

    /// All transitions of `p` derivable by the rules, sorted and without
    /// duplicates (guards compared by truth vector).
    pub fn step_transitions(&mut self, p: &ProcTerm) -> Result<Vec<SymTransition>> {
        let mut out = self.steps(p)?;
        out.sort();
        out.dedup();
        Ok(out)
    }

    fn steps(&mut self, p: &ProcTerm) -> Result<Vec<SymTransition>> {
        use Target::{Term, Tick};
        let tr = |guard: Prop, action: Action, target: Target| SymTransition {
            action,
            guard,
            target,
        };
        Ok(match p {
            ProcTerm::Delta | ProcTerm::Nex => vec![],
            ProcTerm::Act(a) => vec![tr(Prop::truth(self.valuations), a.clone(), Tick)],
            ProcTerm::Var(x) => return Err(Error::OpenTerm(x.clone())),
            ProcTerm::Rec { .. } => {
                let body = self.enter(p)?;
                let r = self.steps(&body);
                self.unfolding.pop();
                r?
            }
            ProcTerm::Alt(x, y) => {
                if self.blocked(p)? {
                    return Ok(vec![]);
                }
                let mut v = self.steps(x)?;
                v.extend(self.steps(y)?);
                v
            }
            ProcTerm::Seq(x, y) => {
                let mut v = Vec::new();
                for t in self.steps(x)? {
                    match t.target {
                        Tick => {
                            if !self.target_blocked(y)? {
                                v.push(tr(t.guard, t.action, Term((**y).clone())));
                            }
                        }
                        Term(x1) => v.push(tr(
                            t.guard,
                            t.action,
                            Term(ProcTerm::seq(x1, (**y).clone())),
                        )),
                    }
                }
                v
            }
            ProcTerm::Guard(phi, x) => {
                let psi = self.prop(phi)?;
                self.steps(x)?
                    .into_iter()
                    .map(|t| SymTransition {
                        guard: psi.and(&t.guard),
                        ..t
                    })
                    .filter(|t| !t.guard.is_false_equiv())
                    .collect()
            }
            ProcTerm::Emit(_, x) => {
                if self.blocked(p)? {
                    return Ok(vec![]);
                }
                self.steps(x)?
            }
            ProcTerm::Par(x, y) | ProcTerm::LeftMerge(x, y) | ProcTerm::CommMerge(x, y) => {
                if self.blocked(p)? {
                    return Ok(vec![]);
                }
                let tx = self.steps(x)?;
                let ty = self.steps(y)?;
                let mut v = Vec::new();
                if !matches!(p, ProcTerm::CommMerge(..)) {
                    self.interleave(&tx, y, false, &mut v)?;
                }
                if matches!(p, ProcTerm::Par(..)) {
                    self.interleave(&ty, x, true, &mut v)?;
                }
                if !matches!(p, ProcTerm::LeftMerge(..)) {
                    for a in &tx {
                        for b in &ty {
                            let Some(c) = self.spec.comm.get(&a.action, &b.action) else {
                                continue;
                            };
                            let guard = a.guard.and(&b.guard);
                            if guard.is_false_equiv() {
                                continue;
                            }
                            let target = match (&a.target, &b.target) {
                                (Tick, Tick) => Tick,
                                (Tick, Term(y1)) => Term(y1.clone()),
                                (Term(x1), Tick) => Term(x1.clone()),
                                (Term(x1), Term(y1)) => {
                                    let t = ProcTerm::par(x1.clone(), y1.clone());
                                    if self.target_blocked(&t)? {
                                        continue;
                                    }
                                    Term(t)
                                }
                            };
                            v.push(tr(guard, c, target));
                        }
                    }
                }
                v
            }
            ProcTerm::Encap(h, x) => self
                .steps(x)?
                .into_iter()
                .filter(|t| !h.contains(&t.action))
                .map(|t| SymTransition {
                    target: match t.target {
                        Tick => Tick,
                        Term(x1) => Term(ProcTerm::Encap(h.clone(), Box::new(x1))),
                    },
                    ..t
                })
                .collect(),
            ProcTerm::State(s, x) => {
                if self.blocked(p)? {
                    return Ok(vec![]);
                }
                let space = self.spec.state_space(s).expect("signal checked the state");
                let mut v = Vec::new();
                for t in self.steps(x)? {
                    let Some(b) = space.act(&t.action, s) else {
                        continue;
                    };
                    let target = match t.target {
                        Tick => Tick,
                        Term(x1) => {
                            let next =
                                ProcTerm::State(space.eff(&t.action, s).to_string(), Box::new(x1));
                            if self.target_blocked(&next)? {
                                continue;
                            }
                            Term(next)
                        }
                    };
                    v.push(tr(t.guard, b, target));
                }
                v
            }
        })
    }

    /// Moves of one merge operand `own` next to `other`. With `right` set
    /// the moving operand is the right one.
    fn interleave(
        &mut self,
        own: &[SymTransition],
        other: &ProcTerm,
        right: bool,
        out: &mut Vec<SymTransition>,
    ) -> Result<()> {
        for t in own {
            let target = match &t.target {
                Target::Tick => other.clone(),
                Target::Term(x1) if right => ProcTerm::par(other.clone(), x1.clone()),
                Target::Term(x1) => ProcTerm::par(x1.clone(), other.clone()),
            };
            if !self.target_blocked(&target)? {
                out.push(SymTransition {
                    action: t.action.clone(),
                    guard: t.guard.clone(),
                    target: Target::Term(target),
                });
            }
        }
        Ok(())
    }
}

/// Transitions of a closed term over `spec`.
pub fn step_transitions(spec: &Spec, p: &ProcTerm) -> Result<Vec<SymTransition>> {
    Semantics::new(spec).step_transitions(p)
}

/// Index of the shared terminal state in every [`Lts`].
pub const TICK: usize = 0;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtsState {
    /// Representative term; `None` for the terminal state.
    pub term: Option<ProcTerm>,
    pub signal: Prop,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Transition {
    pub from: usize,
    pub action: Action,
    pub to: usize,
    pub guard: Prop,
}

/// Reachable symbolic transition system. State 0 is the terminal state,
/// the initial state is 1 and the rest are numbered breadth-first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lts {
    pub states: Vec<LtsState>,
    pub transitions: Vec<Transition>,
    pub initial: usize,
    pub valuations: usize,
}

/// Builds the LTS reachable from `p`, identifying states by canonical key.
/// At most `spec.limits.state_budget` non-terminal states are created.
pub fn build_lts(spec: &Spec, p: &ProcTerm) -> Result<Lts> {
    let mut norm = Normalizer::new(spec);
    build_lts_with(&mut norm, p)
}

/// As [`build_lts`], sharing the normalizer's key cache.
pub fn build_lts_with(norm: &mut Normalizer<'_>, p: &ProcTerm) -> Result<Lts> {
    let spec = norm.spec();
    spec.check_term(p)?;
    let budget = spec.limits.state_budget;
    let valuations = spec.signature.valuation_count();
    let mut sem = Semantics::new(spec);
    let mut states = vec![LtsState {
        term: None,
        signal: Prop::truth(valuations),
    }];
    let mut index: HashMap<KeyId, usize> = HashMap::default();
    let mut queue = VecDeque::new();
    let mut transitions = Vec::new();

    let mut intern = |t: ProcTerm,
                      norm: &mut Normalizer<'_>,
                      sem: &mut Semantics<'_>,
                      states: &mut Vec<LtsState>,
                      queue: &mut VecDeque<usize>|
     -> Result<usize> {
        let key = norm.key(&t)?;
        if let Some(&i) = index.get(&key) {
            return Ok(i);
        }
        if states.len() > budget {
            return Err(Error::Budget {
                what: "state",
                limit: budget,
                frontier: t.to_string(),
            });
        }
        let signal = sem.signal(&t)?;
        states.push(LtsState {
            term: Some(t),
            signal,
        });
        index.insert(key, states.len() - 1);
        queue.push_back(states.len() - 1);
        Ok(states.len() - 1)
    };

    let initial = intern(p.clone(), norm, &mut sem, &mut states, &mut queue)?;
    while let Some(i) = queue.pop_front() {
        let term = states[i].term.clone().expect("non-terminal state");
        for t in sem.step_transitions(&term)? {
            let to = match t.target {
                Target::Tick => TICK,
                Target::Term(q) => intern(q, norm, &mut sem, &mut states, &mut queue)?,
            };
            transitions.push(Transition {
                from: i,
                action: t.action,
                to,
                guard: t.guard,
            });
        }
    }
    transitions.sort();
    transitions.dedup();
    let lts = Lts {
        states,
        transitions,
        initial,
        valuations,
    };
    debug_assert_eq!(lts.audit(), Ok(()));
    Ok(lts)
}

#[derive(Serialize)]
struct JsonState {
    id: usize,
    term: String,
    signal: String,
    signal_vector: String,
}

#[derive(Serialize)]
struct JsonTransition {
    from: usize,
    guard: String,
    action: String,
    to: usize,
}

#[derive(Serialize)]
struct JsonLts {
    states: Vec<JsonState>,
    transitions: Vec<JsonTransition>,
    initial: usize,
}

fn vector_string(v: &TruthVector) -> String {
    v.values().iter().map(|x| x.symbol()).collect()
}

impl Lts {
    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn successors(&self, from: usize) -> impl Iterator<Item = &Transition> {
        self.transitions.iter().filter(move |t| t.from == from)
    }

    fn state_label(&self, i: usize) -> String {
        match &self.states[i].term {
            None => "TICK".to_string(),
            Some(t) => t.to_string(),
        }
    }

    /// Checks the structural invariants: endpoints exist, the terminal
    /// state is silent with signal ⊤, no guard or target signal is
    /// false-equivalent.
    pub fn audit(&self) -> std::result::Result<(), String> {
        let tick = &self.states[TICK];
        if tick.term.is_some() || !tick.signal.is_truth_equiv() {
            return Err("terminal state malformed".into());
        }
        for t in &self.transitions {
            if t.from >= self.states.len() || t.to >= self.states.len() {
                return Err(format!("dangling transition {t:?}"));
            }
            if t.from == TICK {
                return Err("terminal state has a transition".into());
            }
            if t.guard.is_false_equiv() {
                return Err(format!(
                    "false-equivalent guard on {}",
                    self.state_label(t.from)
                ));
            }
            if self.states[t.to].signal.is_false_equiv() {
                return Err(format!(
                    "transition into blocked state {}",
                    self.state_label(t.to)
                ));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let doc = JsonLts {
            states: self
                .states
                .iter()
                .enumerate()
                .map(|(id, s)| JsonState {
                    id,
                    term: self.state_label(id),
                    signal: s.signal.formula().to_string(),
                    signal_vector: vector_string(s.signal.vector()),
                })
                .collect(),
            transitions: self
                .transitions
                .iter()
                .map(|t| JsonTransition {
                    from: t.from,
                    guard: t.guard.formula().to_string(),
                    action: t.action.to_string(),
                    to: t.to,
                })
                .collect(),
            initial: self.initial,
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }

    pub fn to_dot(&self) -> String {
        let esc = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = String::from("digraph lts {\n  node [shape=box];\n");
        for (i, s) in self.states.iter().enumerate() {
            let shape = if i == TICK {
                ", shape=doublecircle"
            } else {
                ""
            };
            let _ = writeln!(
                out,
                "  s{i} [label=\"{}\\n{}\"{shape}];",
                esc(&self.state_label(i)),
                esc(&s.signal.formula().to_string())
            );
        }
        let _ = writeln!(out, "  init [shape=point];\n  init -> s{};", self.initial);
        for t in &self.transitions {
            let _ = writeln!(
                out,
                "  s{} -> s{} [label=\"{} ▸ {}\"];",
                t.from,
                t.to,
                esc(&t.guard.formula().to_string()),
                t.action
            );
        }
        out.push_str("}\n");
        out
    }
}

/// An LTS unfolded per valuation: edges `(valuation, action, target)` for
/// every state, labelled with the state's signal vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedLts {
    pub labels: Vec<TruthVector>,
    pub edges: Vec<Vec<(usize, Action, usize)>>,
    pub initial: usize,
    pub valuations: usize,
}

impl ExpandedLts {
    pub fn state_count(&self) -> usize {
        self.labels.len()
    }

    pub fn is_tick(&self, state: usize) -> bool {
        state == TICK
    }

    /// Successors of `state` under valuation `nu` and `action`.
    pub fn moves<'a>(
        &'a self,
        state: usize,
        nu: usize,
        action: &'a Action,
    ) -> impl Iterator<Item = usize> + 'a {
        self.edges[state]
            .iter()
            .filter(move |(v, a, _)| *v == nu && a == action)
            .map(|(_, _, t)| *t)
    }
}

/// Edge `(p, ν, a, p')` exists iff some transition `p --φ, a--> p'` has
/// `φ` and the signal of `p` both satisfied at `ν`.
pub fn expand_valuations(lts: &Lts, cap: usize) -> Result<ExpandedLts> {
    let size = lts.valuations.saturating_mul(lts.states.len());
    if size > cap {
        return Err(Error::Capacity {
            what: "expanded transition system",
            size,
            cap,
        });
    }
    let mut edges = vec![Vec::new(); lts.states.len()];
    for t in &lts.transitions {
        let sig = &lts.states[t.from].signal;
        for nu in 0..lts.valuations {
            if t.guard.holds_at(nu) && sig.holds_at(nu) {
                edges[t.from].push((nu, t.action.clone(), t.to));
            }
        }
    }
    for e in &mut edges {
        e.sort();
        e.dedup();
    }
    Ok(ExpandedLts {
        labels: lts
            .states
            .iter()
            .map(|s| s.signal.vector().clone())
            .collect(),
        edges,
        initial: lts.initial,
        valuations: lts.valuations,
    })
}
