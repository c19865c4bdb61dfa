//! Elimination to basic terms, root signals and the axiomatic equality
//! decision procedure.
//!
//! Every closed term is rewritten to the shape
//! `χ ^ δ + Σ φᵢ :-> aᵢ · pᵢ + Σ ψⱼ :-> bⱼ` (or `nex`). [`Normalizer::head`]
//! computes one layer of that shape directly from the axioms; basic terms
//! and canonical keys are obtained by repeating it on the continuations.

use std::fmt;

use rustc_hash::{FxHashMap as HashMap, FxHashSet as HashSet};

use crate::error::{Error, Result};
use crate::logic::{Formula, Prop, TruthVector};
use crate::syntax::{Action, ProcTerm, Spec};

/// A guarded step `guard :-> action · cont`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Step<C> {
    pub action: Action,
    pub guard: Prop,
    pub cont: C,
}

/// A guarded termination `guard :-> action`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub action: Action,
    pub guard: Prop,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Node<C> {
    pub signal: Prop,
    pub steps: Vec<Step<C>>,
    pub terms: Vec<Term>,
}

/// Either `nex` or `signal ^ δ + steps + terms`, with continuations of
/// type `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Shape<C> {
    Nex,
    Node(Node<C>),
}

/// One unfolding of a term: continuations are still arbitrary terms.
pub type Head = Shape<ProcTerm>;

impl<C> Shape<C> {
    pub fn node(&self) -> Option<&Node<C>> {
        match self {
            Shape::Nex => None,
            Shape::Node(n) => Some(n),
        }
    }

    pub fn signal(&self, valuations: usize) -> Prop {
        match self {
            Shape::Nex => Prop::falsity(valuations),
            Shape::Node(n) => n.signal.clone(),
        }
    }
}

/// A basic term: a finite tree of [`Shape`]s. Comparison goes through
/// truth vectors, so equality is equality modulo logical equivalence of
/// guards and signals and modulo summand order once reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasicTerm(pub Shape<BasicTerm>);

impl BasicTerm {
    pub fn nex() -> Self {
        BasicTerm(Shape::Nex)
    }

    pub fn is_nex(&self) -> bool {
        self.0 == Shape::Nex
    }

    /// No signal or guard is false-equivalent, at any depth.
    pub fn is_well_formed(&self) -> bool {
        match &self.0 {
            Shape::Nex => true,
            Shape::Node(n) => {
                !n.signal.is_false_equiv()
                    && n.terms.iter().all(|t| !t.guard.is_false_equiv())
                    && n.steps.iter().all(|s| {
                        !s.guard.is_false_equiv() && !s.cont.is_nex() && s.cont.is_well_formed()
                    })
            }
        }
    }

    /// Number of nodes of the tree.
    pub fn size(&self) -> usize {
        match &self.0 {
            Shape::Nex => 1,
            Shape::Node(n) => {
                1 + n.terms.len() + n.steps.iter().map(|s| s.cont.size()).sum::<usize>()
            }
        }
    }

    /// The basic term as a process term.
    pub fn embed(&self) -> ProcTerm {
        let n = match &self.0 {
            Shape::Nex => return ProcTerm::Nex,
            Shape::Node(n) => n,
        };
        // a guard equal to the root signal is implied by it
        let guarded = |g: &Prop, t: ProcTerm| {
            if (g.is_truth_equiv() && g.formula().is_truth()) || *g == n.signal {
                t
            } else {
                ProcTerm::guard(g.formula().clone(), t)
            }
        };
        let mut summands: Vec<ProcTerm> = Vec::new();
        for s in &n.steps {
            summands.push(guarded(
                &s.guard,
                ProcTerm::seq(ProcTerm::Act(s.action.clone()), s.cont.embed()),
            ));
        }
        for t in &n.terms {
            summands.push(guarded(&t.guard, ProcTerm::Act(t.action.clone())));
        }
        let plain_signal = n.signal.formula().is_truth();
        if !plain_signal || summands.is_empty() {
            let head = if plain_signal {
                ProcTerm::Delta
            } else {
                ProcTerm::emit(n.signal.formula().clone(), ProcTerm::Delta)
            };
            summands.insert(0, head);
        }
        summands
            .into_iter()
            .reduce(ProcTerm::alt)
            .expect("at least one summand")
    }
}

impl fmt::Display for BasicTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.embed().fmt(f)
    }
}

pub(crate) fn group_steps<C: Ord + Clone>(steps: Vec<Step<C>>) -> Vec<Step<C>> {
    let mut steps = steps;
    steps.sort_by(|x, y| (&x.action, &x.cont).cmp(&(&y.action, &y.cont)));
    let mut out: Vec<Step<C>> = Vec::with_capacity(steps.len());
    for s in steps {
        match out.last_mut() {
            Some(last) if last.action == s.action && last.cont == s.cont => {
                if last.guard != s.guard {
                    last.guard = last.guard.or(&s.guard);
                }
            }
            _ => out.push(s),
        }
    }
    out.sort();
    out
}

pub(crate) fn group_terms(terms: Vec<Term>) -> Vec<Term> {
    let mut terms = terms;
    terms.sort_by(|x, y| x.action.cmp(&y.action));
    let mut out: Vec<Term> = Vec::with_capacity(terms.len());
    for t in terms {
        match out.last_mut() {
            Some(last) if last.action == t.action => {
                if last.guard != t.guard {
                    last.guard = last.guard.or(&t.guard);
                }
            }
            _ => out.push(t),
        }
    }
    out.sort();
    out
}

/// Removes duplicate summands and joins summands that differ only in their
/// guard, recursively, then sorts summands by action, guard vector and
/// continuation. Every guard is first strengthened with the root signal of
/// its node (`χ ^ (φ :-> x) = χ ^ ((χ /\ φ) :-> x)`), so guards only matter
/// where the node can start. Idempotent; the result does not depend on
/// summand order.
pub fn reduce_basic(b: &BasicTerm) -> BasicTerm {
    match &b.0 {
        Shape::Nex => BasicTerm::nex(),
        Shape::Node(n) => {
            let n = strengthen(n.clone());
            let steps = n
                .steps
                .into_iter()
                .map(|s| Step {
                    cont: reduce_basic(&s.cont),
                    ..s
                })
                .collect();
            BasicTerm(Shape::Node(Node {
                signal: n.signal,
                steps: group_steps(steps),
                terms: group_terms(n.terms),
            }))
        }
    }
}

/// The guards of `n` conjoined with its root signal; summands whose guard
/// becomes false-equivalent are dropped.
fn strengthen<C>(n: Node<C>) -> Node<C> {
    let chi = n.signal;
    let steps = n
        .steps
        .into_iter()
        .map(|s| Step {
            guard: s.guard.restrict(&chi),
            ..s
        })
        .filter(|s| !s.guard.is_false_equiv())
        .collect();
    let terms = n
        .terms
        .into_iter()
        .map(|t| Term {
            guard: t.guard.restrict(&chi),
            ..t
        })
        .filter(|t| !t.guard.is_false_equiv())
        .collect();
    Node {
        signal: chi,
        steps,
        terms,
    }
}

/// Identifier of an interned canonical key.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KeyId(u32);

/// Canonical key of a term: its reduced basic form with continuations
/// shared by identifier. Continuations that contain recursion constants
/// are kept as opaque terms, which keeps keys finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Key {
    Nex,
    Node {
        signal: TruthVector,
        steps: Vec<(Action, TruthVector, KeyId)>,
        terms: Vec<(Action, TruthVector)>,
    },
    Opaque(ProcTerm),
}

/// Stateful normalizer over one specification. Results are memoized per
/// term, so repeated queries share work.
pub struct Normalizer<'s> {
    spec: &'s Spec,
    valuations: usize,
    signals: HashMap<ProcTerm, Prop>,
    basics: HashMap<ProcTerm, BasicTerm>,
    key_memo: HashMap<ProcTerm, KeyId>,
    key_ids: HashMap<Key, KeyId>,
    keys: Vec<Key>,
    /// Recursion constants being unfolded for the current head or signal.
    unfolding: Vec<ProcTerm>,
    /// Terms whose basic form is being computed.
    expanding: HashSet<ProcTerm>,
}

impl<'s> Normalizer<'s> {
    pub fn new(spec: &'s Spec) -> Self {
        Normalizer {
            spec,
            valuations: spec.signature.valuation_count(),
            signals: HashMap::default(),
            basics: HashMap::default(),
            key_memo: HashMap::default(),
            key_ids: HashMap::default(),
            keys: Vec::new(),
            unfolding: Vec::new(),
            expanding: HashSet::default(),
        }
    }

    pub fn spec(&self) -> &'s Spec {
        self.spec
    }

    pub fn prop(&self, f: &Formula) -> Result<Prop> {
        self.spec.signature.prop(f.clone())
    }

    fn truth(&self) -> Prop {
        Prop::truth(self.valuations)
    }

    fn unfold(&mut self, p: &ProcTerm) -> Result<ProcTerm> {
        let ProcTerm::Rec { var, spec } = p else {
            unreachable!("unfold of a non-constant")
        };
        if self.unfolding.contains(p) {
            return Err(Error::Unguarded {
                spec: spec.clone(),
                equation: var.clone(),
                var: var.clone(),
            });
        }
        self.spec.unfold(var, spec)
    }

    fn sig_of(&self, state: &str) -> Result<Prop> {
        let space = self
            .spec
            .state_space(state)
            .ok_or_else(|| Error::UnknownState(state.to_string()))?;
        self.prop(&space.sig(state))
    }

    fn budget_check(&self, size: usize, frontier: &ProcTerm) -> Result<()> {
        let limit = self.spec.limits.expansion_cap;
        if size > limit {
            Err(Error::Budget {
                what: "normalization",
                limit,
                frontier: frontier.to_string(),
            })
        } else {
            Ok(())
        }
    }

    /// The proposition that holds at the start of `p`.
    pub fn root_signal(&mut self, p: &ProcTerm) -> Result<Prop> {
        if let Some(s) = self.signals.get(p) {
            return Ok(s.clone());
        }
        let s = match p {
            ProcTerm::Nex => Prop::falsity(self.valuations),
            ProcTerm::Delta | ProcTerm::Act(_) => self.truth(),
            ProcTerm::Var(x) => return Err(Error::OpenTerm(x.clone())),
            ProcTerm::Alt(x, y)
            | ProcTerm::Par(x, y)
            | ProcTerm::LeftMerge(x, y)
            | ProcTerm::CommMerge(x, y) => {
                let sx = self.root_signal(x)?;
                sx.and(&self.root_signal(y)?)
            }
            ProcTerm::Seq(x, _) | ProcTerm::Encap(_, x) => self.root_signal(x)?,
            ProcTerm::Guard(phi, x) => self.prop(phi)?.implies(&self.root_signal(x)?),
            ProcTerm::Emit(phi, x) => self.prop(phi)?.and(&self.root_signal(x)?),
            ProcTerm::State(s, x) => self.root_signal(x)?.and(&self.sig_of(s)?),
            ProcTerm::Rec { .. } => {
                let body = self.unfold(p)?;
                self.unfolding.push(p.clone());
                let r = self.root_signal(&body);
                self.unfolding.pop();
                r?
            }
        };
        self.signals.insert(p.clone(), s.clone());
        Ok(s)
    }

    /// One layer of the basic form of `p`: the root signal, the initial
    /// steps with their continuation terms and the initial terminations.
    /// Summands with a false-equivalent guard or continuation signal are
    /// dropped, and a false-equivalent root signal yields `nex`.
    pub fn head(&mut self, p: &ProcTerm) -> Result<Head> {
        let raw = self.raw_head(p)?;
        self.prune(raw)
    }

    fn node(signal: Prop, steps: Vec<Step<ProcTerm>>, terms: Vec<Term>) -> Head {
        Shape::Node(Node {
            signal,
            steps,
            terms,
        })
    }

    fn prune(&mut self, h: Head) -> Result<Head> {
        let Shape::Node(n) = h else {
            return Ok(Shape::Nex);
        };
        if n.signal.is_false_equiv() {
            return Ok(Shape::Nex);
        }
        // continuations are past an action, outside the current unfolding
        let outer = std::mem::take(&mut self.unfolding);
        let mut steps = Vec::with_capacity(n.steps.len());
        let mut failure = None;
        for s in n.steps {
            if s.guard.is_false_equiv() {
                continue;
            }
            match self.root_signal(&s.cont) {
                Ok(sig) if sig.is_false_equiv() => {}
                Ok(_) => steps.push(s),
                Err(e) => {
                    failure = Some(e);
                    break;
                }
            }
        }
        self.unfolding = outer;
        if let Some(e) = failure {
            return Err(e);
        }
        let terms = n
            .terms
            .into_iter()
            .filter(|t| !t.guard.is_false_equiv())
            .collect();
        Ok(Self::node(n.signal, steps, terms))
    }

    fn raw_head(&mut self, p: &ProcTerm) -> Result<Head> {
        let t = self.truth();
        Ok(match p {
            ProcTerm::Delta => Self::node(t, vec![], vec![]),
            ProcTerm::Act(a) => Self::node(
                t.clone(),
                vec![],
                vec![Term {
                    action: a.clone(),
                    guard: t,
                }],
            ),
            ProcTerm::Nex => Shape::Nex,
            ProcTerm::Var(x) => return Err(Error::OpenTerm(x.clone())),
            ProcTerm::Rec { .. } => {
                let body = self.unfold(p)?;
                self.unfolding.push(p.clone());
                let r = self.head(&body);
                self.unfolding.pop();
                r?
            }
            ProcTerm::Alt(x, y) => {
                let (Shape::Node(nx), Shape::Node(ny)) = (self.head(x)?, self.head(y)?) else {
                    return Ok(Shape::Nex);
                };
                let mut steps = nx.steps;
                steps.extend(ny.steps);
                let mut terms = nx.terms;
                terms.extend(ny.terms);
                Self::node(nx.signal.and(&ny.signal), steps, terms)
            }
            ProcTerm::Seq(x, y) => {
                let Shape::Node(nx) = self.head(x)? else {
                    return Ok(Shape::Nex);
                };
                let mut steps: Vec<Step<ProcTerm>> = nx
                    .steps
                    .into_iter()
                    .map(|s| Step {
                        cont: ProcTerm::seq(s.cont, (**y).clone()),
                        ..s
                    })
                    .collect();
                steps.extend(nx.terms.into_iter().map(|t| Step {
                    action: t.action,
                    guard: t.guard,
                    cont: (**y).clone(),
                }));
                Self::node(nx.signal, steps, vec![])
            }
            ProcTerm::Guard(phi, x) => {
                let psi = self.prop(phi)?;
                if psi.is_false_equiv() {
                    return Ok(Self::node(t, vec![], vec![]));
                }
                match self.head(x)? {
                    Shape::Nex => {
                        let f = Prop::falsity(self.valuations);
                        Self::node(psi.implies(&f), vec![], vec![])
                    }
                    Shape::Node(n) => Self::node(
                        psi.implies(&n.signal),
                        n.steps
                            .into_iter()
                            .map(|s| Step {
                                guard: psi.and(&s.guard),
                                ..s
                            })
                            .collect(),
                        n.terms
                            .into_iter()
                            .map(|s| Term {
                                guard: psi.and(&s.guard),
                                ..s
                            })
                            .collect(),
                    ),
                }
            }
            ProcTerm::Emit(phi, x) => {
                let psi = self.prop(phi)?;
                match self.head(x)? {
                    Shape::Nex => Shape::Nex,
                    Shape::Node(n) => Self::node(psi.and(&n.signal), n.steps, n.terms),
                }
            }
            ProcTerm::Par(x, y) | ProcTerm::LeftMerge(x, y) | ProcTerm::CommMerge(x, y) => {
                let (Shape::Node(nx), Shape::Node(ny)) = (self.head(x)?, self.head(y)?) else {
                    return Ok(Shape::Nex);
                };
                let signal = nx.signal.and(&ny.signal);
                let (mut steps, mut terms) = (Vec::new(), Vec::new());
                if !matches!(p, ProcTerm::CommMerge(..)) {
                    for s in &nx.steps {
                        steps.push(Step {
                            cont: ProcTerm::par(s.cont.clone(), (**y).clone()),
                            ..s.clone()
                        });
                    }
                    for s in &nx.terms {
                        steps.push(Step {
                            action: s.action.clone(),
                            guard: s.guard.clone(),
                            cont: (**y).clone(),
                        });
                    }
                }
                if matches!(p, ProcTerm::Par(..)) {
                    for s in &ny.steps {
                        steps.push(Step {
                            cont: ProcTerm::par((**x).clone(), s.cont.clone()),
                            ..s.clone()
                        });
                    }
                    for s in &ny.terms {
                        steps.push(Step {
                            action: s.action.clone(),
                            guard: s.guard.clone(),
                            cont: (**x).clone(),
                        });
                    }
                }
                if !matches!(p, ProcTerm::LeftMerge(..)) {
                    self.communications(&nx, &ny, &mut steps, &mut terms);
                }
                Self::node(signal, steps, terms)
            }
            ProcTerm::Encap(h, x) => match self.head(x)? {
                Shape::Nex => Shape::Nex,
                Shape::Node(n) => Self::node(
                    n.signal,
                    n.steps
                        .into_iter()
                        .filter(|s| !h.contains(&s.action))
                        .map(|s| Step {
                            cont: ProcTerm::Encap(h.clone(), Box::new(s.cont)),
                            ..s
                        })
                        .collect(),
                    n.terms
                        .into_iter()
                        .filter(|s| !h.contains(&s.action))
                        .collect(),
                ),
            },
            ProcTerm::State(st, x) => {
                let sigma = self.sig_of(st)?;
                let space = self.spec.state_space(st).expect("checked by sig_of");
                match self.head(x)? {
                    Shape::Nex => Shape::Nex,
                    Shape::Node(n) => Self::node(
                        n.signal.and(&sigma),
                        n.steps
                            .into_iter()
                            .filter_map(|s| {
                                let b = space.act(&s.action, st)?;
                                let next = space.eff(&s.action, st).to_string();
                                Some(Step {
                                    action: b,
                                    guard: s.guard,
                                    cont: ProcTerm::State(next, Box::new(s.cont)),
                                })
                            })
                            .collect(),
                        n.terms
                            .into_iter()
                            .filter_map(|s| {
                                Some(Term {
                                    action: space.act(&s.action, st)?,
                                    guard: s.guard,
                                })
                            })
                            .collect(),
                    ),
                }
            }
        })
    }

    fn communications(
        &self,
        nx: &Node<ProcTerm>,
        ny: &Node<ProcTerm>,
        steps: &mut Vec<Step<ProcTerm>>,
        terms: &mut Vec<Term>,
    ) {
        // each summand as (guard, action, continuation or None for termination)
        let summands = |n: &Node<ProcTerm>| -> Vec<(Prop, Action, Option<ProcTerm>)> {
            n.steps
                .iter()
                .map(|s| (s.guard.clone(), s.action.clone(), Some(s.cont.clone())))
                .chain(
                    n.terms
                        .iter()
                        .map(|t| (t.guard.clone(), t.action.clone(), None)),
                )
                .collect()
        };
        let ys = summands(ny);
        for (gx, a, cx) in summands(nx) {
            for (gy, b, cy) in &ys {
                let Some(c) = self.spec.comm.get(&a, b) else {
                    continue;
                };
                let guard = gx.and(gy);
                let cont = match (&cx, cy) {
                    (Some(x1), Some(y1)) => Some(ProcTerm::par(x1.clone(), y1.clone())),
                    (Some(x1), None) => Some(x1.clone()),
                    (None, Some(y1)) => Some(y1.clone()),
                    (None, None) => None,
                };
                match cont {
                    Some(cont) => steps.push(Step {
                        action: c,
                        guard,
                        cont,
                    }),
                    None => terms.push(Term { action: c, guard }),
                }
            }
        }
    }

    /// Basic form of a closed term: [`Normalizer::head`] applied to every
    /// continuation. Fails on recursion whose unfolding does not terminate.
    pub fn to_basic(&mut self, p: &ProcTerm) -> Result<BasicTerm> {
        if let Some(b) = self.basics.get(p) {
            return Ok(b.clone());
        }
        self.budget_check(self.basics.len(), p)?;
        if !self.expanding.insert(p.clone()) {
            return Err(Error::Budget {
                what: "recursion unfolding",
                limit: self.spec.limits.state_budget,
                frontier: p.to_string(),
            });
        }
        if self.expanding.len() > self.spec.limits.state_budget {
            self.expanding.remove(p);
            return Err(Error::Budget {
                what: "recursion unfolding",
                limit: self.spec.limits.state_budget,
                frontier: p.to_string(),
            });
        }
        let r = self.expand_basic(p);
        self.expanding.remove(p);
        let b = r?;
        self.basics.insert(p.clone(), b.clone());
        Ok(b)
    }

    fn expand_basic(&mut self, p: &ProcTerm) -> Result<BasicTerm> {
        let Shape::Node(n) = self.head(p)? else {
            return Ok(BasicTerm::nex());
        };
        let mut steps = Vec::with_capacity(n.steps.len());
        for s in n.steps {
            let cont = self.to_basic(&s.cont)?;
            steps.push(Step {
                action: s.action,
                guard: s.guard,
                cont,
            });
        }
        Ok(BasicTerm(Shape::Node(Node {
            signal: n.signal,
            steps,
            terms: n.terms,
        })))
    }

    fn intern(&mut self, k: Key) -> KeyId {
        if let Some(id) = self.key_ids.get(&k) {
            return *id;
        }
        let id = KeyId(self.keys.len() as u32);
        self.keys.push(k.clone());
        self.key_ids.insert(k, id);
        id
    }

    pub fn key_node(&self, id: KeyId) -> &Key {
        &self.keys[id.0 as usize]
    }

    /// Canonical key of `p`. Two recursion-free terms get the same key
    /// exactly when their reduced basic forms coincide.
    pub fn key(&mut self, p: &ProcTerm) -> Result<KeyId> {
        if let Some(id) = self.key_memo.get(p) {
            return Ok(*id);
        }
        self.budget_check(self.key_memo.len(), p)?;
        let key = match self.head(p)? {
            Shape::Nex => Key::Nex,
            Shape::Node(n) => {
                let n = strengthen(n);
                let mut steps = Vec::with_capacity(n.steps.len());
                for s in n.steps {
                    let cont = if s.cont.has_recursion() {
                        self.intern(Key::Opaque(s.cont))
                    } else {
                        self.key(&s.cont)?
                    };
                    steps.push(Step {
                        action: s.action,
                        guard: s.guard,
                        cont,
                    });
                }
                let steps = group_steps(steps);
                let terms = group_terms(n.terms);
                Key::Node {
                    signal: n.signal.vector().clone(),
                    steps: steps
                        .into_iter()
                        .map(|s| (s.action, s.guard.vector().clone(), s.cont))
                        .collect(),
                    terms: terms
                        .into_iter()
                        .map(|t| (t.action, t.guard.vector().clone()))
                        .collect(),
                }
            }
        };
        let id = self.intern(key);
        self.key_memo.insert(p.clone(), id);
        Ok(id)
    }

    /// Axiomatic equality: equal canonical keys. Sound for bisimilarity.
    pub fn decide_equal(&mut self, p: &ProcTerm, q: &ProcTerm) -> Result<bool> {
        Ok(self.key(p)? == self.key(q)?)
    }
}

/// Root signal of a closed term over `spec`.
pub fn root_signal(spec: &Spec, p: &ProcTerm) -> Result<Prop> {
    Normalizer::new(spec).root_signal(p)
}

/// Basic form of a closed term over `spec`.
pub fn to_basic(spec: &Spec, p: &ProcTerm) -> Result<BasicTerm> {
    Normalizer::new(spec).to_basic(p)
}

/// Reduced basic form, as printed by the `normalize` query.
pub fn normal_form(spec: &Spec, p: &ProcTerm) -> Result<BasicTerm> {
    Ok(reduce_basic(&to_basic(spec, p)?))
}

pub fn decide_equal(spec: &Spec, p: &ProcTerm, q: &ProcTerm) -> Result<bool> {
    Normalizer::new(spec).decide_equal(p, q)
}
