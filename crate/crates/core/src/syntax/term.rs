use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::logic::Formula;

/// A declared action name. Deadlock is not an action; places where the
/// result may be deadlock use `Option<Action>` with `None` for `δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Action(Arc<str>);

impl Action {
    pub fn new(name: &str) -> Self {
        Action(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Action {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Action {
    fn from(name: &str) -> Self {
        Action::new(name)
    }
}

/// Process term.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProcTerm {
    Delta,
    Act(Action),
    Nex,
    Alt(Box<ProcTerm>, Box<ProcTerm>),
    Seq(Box<ProcTerm>, Box<ProcTerm>),
    /// `φ :-> p`
    Guard(Formula, Box<ProcTerm>),
    /// `φ ^ p`
    Emit(Formula, Box<ProcTerm>),
    Par(Box<ProcTerm>, Box<ProcTerm>),
    LeftMerge(Box<ProcTerm>, Box<ProcTerm>),
    CommMerge(Box<ProcTerm>, Box<ProcTerm>),
    Encap(BTreeSet<Action>, Box<ProcTerm>),
    /// State operator applied in the named state.
    State(String, Box<ProcTerm>),
    /// Recursion constant `<var | spec>`.
    Rec {
        var: String,
        spec: String,
    },
    /// Recursion variable; only inside recursive specifications.
    Var(String),
}

impl ProcTerm {
    pub fn act(name: &str) -> Self {
        ProcTerm::Act(Action::new(name))
    }

    pub fn alt(p: ProcTerm, q: ProcTerm) -> Self {
        ProcTerm::Alt(Box::new(p), Box::new(q))
    }

    pub fn seq(p: ProcTerm, q: ProcTerm) -> Self {
        ProcTerm::Seq(Box::new(p), Box::new(q))
    }

    pub fn guard(f: Formula, p: ProcTerm) -> Self {
        ProcTerm::Guard(f, Box::new(p))
    }

    pub fn emit(f: Formula, p: ProcTerm) -> Self {
        ProcTerm::Emit(f, Box::new(p))
    }

    pub fn par(p: ProcTerm, q: ProcTerm) -> Self {
        ProcTerm::Par(Box::new(p), Box::new(q))
    }

    pub fn left_merge(p: ProcTerm, q: ProcTerm) -> Self {
        ProcTerm::LeftMerge(Box::new(p), Box::new(q))
    }

    pub fn comm_merge(p: ProcTerm, q: ProcTerm) -> Self {
        ProcTerm::CommMerge(Box::new(p), Box::new(q))
    }

    pub fn encap<I: IntoIterator<Item = Action>>(h: I, p: ProcTerm) -> Self {
        ProcTerm::Encap(h.into_iter().collect(), Box::new(p))
    }

    pub fn state(s: &str, p: ProcTerm) -> Self {
        ProcTerm::State(s.to_string(), Box::new(p))
    }

    pub fn rec(var: &str, spec: &str) -> Self {
        ProcTerm::Rec {
            var: var.to_string(),
            spec: spec.to_string(),
        }
    }

    /// Constant for `Act ∪ {δ}`.
    pub fn from_action(a: Option<Action>) -> Self {
        a.map_or(ProcTerm::Delta, ProcTerm::Act)
    }

    /// Number of process-level nodes; formulas count as part of their
    /// guard or emission node.
    pub fn size(&self) -> usize {
        match self {
            ProcTerm::Delta
            | ProcTerm::Act(_)
            | ProcTerm::Nex
            | ProcTerm::Rec { .. }
            | ProcTerm::Var(_) => 1,
            ProcTerm::Guard(_, p)
            | ProcTerm::Emit(_, p)
            | ProcTerm::Encap(_, p)
            | ProcTerm::State(_, p) => 1 + p.size(),
            ProcTerm::Alt(p, q)
            | ProcTerm::Seq(p, q)
            | ProcTerm::Par(p, q)
            | ProcTerm::LeftMerge(p, q)
            | ProcTerm::CommMerge(p, q) => 1 + p.size() + q.size(),
        }
    }

    pub fn children(&self) -> Vec<&ProcTerm> {
        match self {
            ProcTerm::Delta
            | ProcTerm::Act(_)
            | ProcTerm::Nex
            | ProcTerm::Rec { .. }
            | ProcTerm::Var(_) => vec![],
            ProcTerm::Guard(_, p)
            | ProcTerm::Emit(_, p)
            | ProcTerm::Encap(_, p)
            | ProcTerm::State(_, p) => vec![p],
            ProcTerm::Alt(p, q)
            | ProcTerm::Seq(p, q)
            | ProcTerm::Par(p, q)
            | ProcTerm::LeftMerge(p, q)
            | ProcTerm::CommMerge(p, q) => vec![p, q],
        }
    }

    fn any(&self, pred: &impl Fn(&ProcTerm) -> bool) -> bool {
        pred(self) || self.children().into_iter().any(|c| c.any(pred))
    }

    pub fn is_closed(&self) -> bool {
        !self.any(&|t| matches!(t, ProcTerm::Var(_)))
    }

    pub fn has_recursion(&self) -> bool {
        self.any(&|t| matches!(t, ProcTerm::Rec { .. }))
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        if let ProcTerm::Var(x) = self {
            out.insert(x.clone());
        }
        for c in self.children() {
            c.collect_vars(out);
        }
    }

    /// Formulas occurring in guards and emissions, outermost first.
    pub fn formulas(&self) -> Vec<&Formula> {
        let mut out = Vec::new();
        self.collect_formulas(&mut out);
        out
    }

    fn collect_formulas<'a>(&'a self, out: &mut Vec<&'a Formula>) {
        if let ProcTerm::Guard(f, _) | ProcTerm::Emit(f, _) = self {
            out.push(f);
        }
        for c in self.children() {
            c.collect_formulas(out);
        }
    }

    /// Rebuilds the term bottom-up, replacing each node for which `f`
    /// returns `Some`.
    pub fn map_leaves(&self, f: &impl Fn(&ProcTerm) -> Option<ProcTerm>) -> ProcTerm {
        if let Some(t) = f(self) {
            return t;
        }
        let m = |p: &ProcTerm| Box::new(p.map_leaves(f));
        match self {
            ProcTerm::Delta
            | ProcTerm::Act(_)
            | ProcTerm::Nex
            | ProcTerm::Rec { .. }
            | ProcTerm::Var(_) => self.clone(),
            ProcTerm::Alt(p, q) => ProcTerm::Alt(m(p), m(q)),
            ProcTerm::Seq(p, q) => ProcTerm::Seq(m(p), m(q)),
            ProcTerm::Par(p, q) => ProcTerm::Par(m(p), m(q)),
            ProcTerm::LeftMerge(p, q) => ProcTerm::LeftMerge(m(p), m(q)),
            ProcTerm::CommMerge(p, q) => ProcTerm::CommMerge(m(p), m(q)),
            ProcTerm::Guard(phi, p) => ProcTerm::Guard(phi.clone(), m(p)),
            ProcTerm::Emit(phi, p) => ProcTerm::Emit(phi.clone(), m(p)),
            ProcTerm::Encap(h, p) => ProcTerm::Encap(h.clone(), m(p)),
            ProcTerm::State(s, p) => ProcTerm::State(s.clone(), m(p)),
        }
    }

    /// Replaces every variable `X` by `<X | spec>`.
    pub fn close_over(&self, spec: &str) -> ProcTerm {
        self.map_leaves(&|t| match t {
            ProcTerm::Var(x) => Some(ProcTerm::rec(x, spec)),
            _ => None,
        })
    }

    /// Simultaneous substitution of variables.
    pub fn substitute(&self, subst: &impl Fn(&str) -> Option<ProcTerm>) -> ProcTerm {
        self.map_leaves(&|t| match t {
            ProcTerm::Var(x) => subst(x),
            _ => None,
        })
    }
}

impl fmt::Display for ProcTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::syntax::pretty::write_term(f, self, 0)
    }
}
