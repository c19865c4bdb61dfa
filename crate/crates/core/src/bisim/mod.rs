//! Splitting bisimulation, decided by partition refinement on expanded
//! transition systems.

use std::collections::BTreeSet;
use std::fmt;

use rustc_hash::{FxHashMap as HashMap, FxHashSet};

use crate::error::Result;
use crate::logic::TruthVector;
use crate::normalize::Normalizer;
use crate::sos::{build_lts_with, expand_valuations, ExpandedLts, Lts, Semantics, Target};
use crate::syntax::{Action, ProcTerm, Spec};

pub mod suite;

/// Which system makes the move in a witness step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// One move of a distinguishing play: `mover` performs `action` under
/// `valuation`, the opponent answers (if it can), and the game continues
/// from the resulting pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessStep {
    pub valuation: usize,
    pub action: Action,
    pub mover: Side,
    /// Resulting states `(left, right)`.
    pub states: (usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mismatch {
    /// The last move had no answer at all.
    Unmatched,
    /// The final states carry different signal vectors.
    Signal(TruthVector, TruthVector),
    /// Exactly one of the final states is successful termination.
    Termination,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub steps: Vec<WitnessStep>,
    pub mismatch: Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BisimReport {
    pub equivalent: bool,
    pub witness: Option<Witness>,
}

/// Disjoint union of expanded systems; states of system `i` start at
/// `offsets[i]`.
struct Union<'a> {
    systems: &'a [&'a ExpandedLts],
    offsets: Vec<usize>,
    total: usize,
}

impl<'a> Union<'a> {
    fn new(systems: &'a [&'a ExpandedLts]) -> Self {
        let mut offsets = Vec::with_capacity(systems.len());
        let mut total = 0;
        for s in systems {
            offsets.push(total);
            total += s.state_count();
        }
        Union {
            systems,
            offsets,
            total,
        }
    }

    fn locate(&self, g: usize) -> (usize, usize) {
        let i = self.offsets.partition_point(|&o| o <= g) - 1;
        (i, g - self.offsets[i])
    }
}

/// An expanded move `(valuation, action, class of the target)`.
type Move<A> = (usize, A, u32);

/// Block index per union state after each refinement round; the last
/// entry is the coarsest stable partition.
fn refine(u: &Union<'_>) -> Vec<Vec<u32>> {
    let mut ids: HashMap<(bool, &TruthVector), u32> = HashMap::default();
    let mut first = Vec::with_capacity(u.total);
    for g in 0..u.total {
        let (i, s) = u.locate(g);
        let sys = u.systems[i];
        let n = ids.len() as u32;
        first.push(*ids.entry((sys.is_tick(s), &sys.labels[s])).or_insert(n));
    }
    let mut rounds = vec![first];
    loop {
        let prev = rounds.last().expect("nonempty");
        let count = prev.iter().collect::<BTreeSet<_>>().len();
        let mut ids: HashMap<(u32, Vec<Move<&Action>>), u32> = HashMap::default();
        let mut next = Vec::with_capacity(u.total);
        for g in 0..u.total {
            let (i, s) = u.locate(g);
            let off = u.offsets[i];
            let mut sig: Vec<Move<&Action>> = u.systems[i].edges[s]
                .iter()
                .map(|(nu, a, t)| (*nu, a, prev[off + t]))
                .collect();
            sig.sort();
            sig.dedup();
            let n = ids.len() as u32;
            next.push(*ids.entry((prev[g], sig)).or_insert(n));
        }
        let stable = ids.len() == count;
        rounds.push(next);
        if stable {
            return rounds;
        }
    }
}

/// Bisimulation class of the initial state of each system; equal numbers
/// mean bisimilar.
pub fn classes(systems: &[&ExpandedLts]) -> Vec<u32> {
    let u = Union::new(systems);
    let rounds = refine(&u);
    let last = rounds.last().expect("nonempty");
    systems
        .iter()
        .zip(&u.offsets)
        .map(|(s, off)| last[off + s.initial])
        .collect()
}

/// Decides bisimilarity of the initial states of `l` and `r`.
pub fn compare(l: &ExpandedLts, r: &ExpandedLts) -> BisimReport {
    let systems = [l, r];
    let u = Union::new(&systems);
    let rounds = refine(&u);
    let off = u.offsets[1];
    let block = |k: usize, a: usize, b: usize| rounds[k][a] == rounds[k][off + b];
    let last = rounds.len() - 1;
    if block(last, l.initial, r.initial) {
        return BisimReport {
            equivalent: true,
            witness: None,
        };
    }
    let mut steps = Vec::new();
    let (mut p, mut q) = (l.initial, r.initial);
    loop {
        // the first round separating the current pair
        let k = (0..=last).find(|&k| !block(k, p, q)).expect("separated");
        if k == 0 {
            let mismatch = if l.is_tick(p) != r.is_tick(q) {
                Mismatch::Termination
            } else {
                Mismatch::Signal(l.labels[p].clone(), r.labels[q].clone())
            };
            return BisimReport {
                equivalent: false,
                witness: Some(Witness { steps, mismatch }),
            };
        }
        // a move of one side into a block the other side cannot reach
        let prev = &rounds[k - 1];
        let found = find_unanswered(l, p, r, q, |x| prev[x], |y| prev[off + y])
            .map(|(nu, a, p1, q1)| (Side::Left, nu, a, (p1, q1)))
            .or_else(|| {
                find_unanswered(r, q, l, p, |y| prev[off + y], |x| prev[x])
                    .map(|(nu, a, q1, p1)| (Side::Right, nu, a, (p1, q1)))
            });
        let (mover, valuation, action, (p1, q1)) = found.expect("refinement split has a cause");
        match (p1, q1) {
            (Some(p1), Some(q1)) => {
                steps.push(WitnessStep {
                    valuation,
                    action,
                    mover,
                    states: (p1, q1),
                });
                p = p1;
                q = q1;
            }
            (p1, q1) => {
                steps.push(WitnessStep {
                    valuation,
                    action,
                    mover,
                    states: (p1.unwrap_or(p), q1.unwrap_or(q)),
                });
                return BisimReport {
                    equivalent: false,
                    witness: Some(Witness {
                        steps,
                        mismatch: Mismatch::Unmatched,
                    }),
                };
            }
        }
    }
}

/// A move `(ν, a, s1)` of `s` in `x` such that no `(ν, a)` move of `t` in
/// `y` reaches the block of `s1`. Returns the move with one (failing)
/// answer, or `None` as answer when there is none.
#[allow(clippy::type_complexity)]
fn find_unanswered(
    x: &ExpandedLts,
    s: usize,
    y: &ExpandedLts,
    t: usize,
    bx: impl Fn(usize) -> u32,
    by: impl Fn(usize) -> u32,
) -> Option<(usize, Action, Option<usize>, Option<usize>)> {
    for (nu, a, s1) in &x.edges[s] {
        let mut answers = y.moves(t, *nu, a).peekable();
        if answers.peek().is_none() {
            return Some((*nu, a.clone(), Some(*s1), None));
        }
        let answers: Vec<usize> = answers.collect();
        if answers.iter().all(|t1| by(*t1) != bx(*s1)) {
            return Some((*nu, a.clone(), Some(*s1), Some(answers[0])));
        }
    }
    None
}

impl Witness {
    /// Replays the witness: every recorded move exists in the mover's
    /// system, every answer exists in the other, and the end is a genuine
    /// mismatch.
    pub fn replay(&self, l: &ExpandedLts, r: &ExpandedLts) -> bool {
        let (mut p, mut q) = (l.initial, r.initial);
        for (i, st) in self.steps.iter().enumerate() {
            let is_last = i + 1 == self.steps.len();
            let (p1, q1) = st.states;
            let unanswered = is_last && self.mismatch == Mismatch::Unmatched;
            let ok = match st.mover {
                Side::Left => {
                    l.moves(p, st.valuation, &st.action).any(|x| x == p1)
                        && if unanswered {
                            r.moves(q, st.valuation, &st.action).next().is_none()
                        } else {
                            r.moves(q, st.valuation, &st.action).any(|y| y == q1)
                        }
                }
                Side::Right => {
                    r.moves(q, st.valuation, &st.action).any(|y| y == q1)
                        && if unanswered {
                            l.moves(p, st.valuation, &st.action).next().is_none()
                        } else {
                            l.moves(p, st.valuation, &st.action).any(|x| x == p1)
                        }
                }
            };
            if !ok {
                return false;
            }
            p = p1;
            q = q1;
        }
        match &self.mismatch {
            Mismatch::Unmatched => !self.steps.is_empty(),
            Mismatch::Termination => l.is_tick(p) != r.is_tick(q),
            Mismatch::Signal(a, b) => a == &l.labels[p] && b == &r.labels[q] && a != b,
        }
    }

    /// Human-readable trace, with valuations rendered by `valuation`.
    pub fn render(&self, valuation: impl Fn(usize) -> String) -> String {
        let mut out = String::new();
        for st in &self.steps {
            let who = match st.mover {
                Side::Left => "left",
                Side::Right => "right",
            };
            out.push_str(&format!(
                "  {who} does {} at {}\n",
                st.action,
                valuation(st.valuation)
            ));
        }
        let end = match &self.mismatch {
            Mismatch::Unmatched => "  the other side cannot answer".to_string(),
            Mismatch::Termination => "  only one side has terminated".to_string(),
            Mismatch::Signal(a, b) => {
                let v = |t: &TruthVector| t.values().iter().map(|x| x.symbol()).collect::<String>();
                format!("  signals differ: {} vs {}", v(a), v(b))
            }
        };
        out.push_str(&end);
        out
    }
}

impl fmt::Display for BisimReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.equivalent {
            "bisimilar"
        } else {
            "not bisimilar"
        })
    }
}

/// Both expanded systems of a comparison, kept for witness rendering.
pub struct Comparison {
    pub left: Lts,
    pub right: Lts,
    pub left_expanded: ExpandedLts,
    pub right_expanded: ExpandedLts,
    pub report: BisimReport,
}

pub fn compare_terms(norm: &mut Normalizer<'_>, p: &ProcTerm, q: &ProcTerm) -> Result<Comparison> {
    let cap = norm.spec().limits.expansion_cap;
    let left = build_lts_with(norm, p)?;
    let right = build_lts_with(norm, q)?;
    let left_expanded = expand_valuations(&left, cap)?;
    let right_expanded = expand_valuations(&right, cap)?;
    let report = compare(&left_expanded, &right_expanded);
    Ok(Comparison {
        left,
        right,
        left_expanded,
        right_expanded,
        report,
    })
}

/// Splitting bisimilarity of two closed terms over `spec`.
pub fn bisimilar(spec: &Spec, p: &ProcTerm, q: &ProcTerm) -> Result<BisimReport> {
    let mut norm = Normalizer::new(spec);
    Ok(compare_terms(&mut norm, p, q)?.report)
}

/// Bisimulation classes of recursion-free terms, computed bottom-up: on
/// an acyclic system two states are bisimilar exactly when they agree on
/// termination, signal vector and the set of `(valuation, action, class)`
/// moves. Far cheaper than refinement over large populations.
pub struct Classifier<'s> {
    sem: Semantics<'s>,
    valuations: usize,
    memo: HashMap<ProcTerm, u32>,
    ids: HashMap<(TruthVector, Vec<Move<Action>>), u32>,
    active: FxHashSet<ProcTerm>,
}

/// Class of successful termination.
const TICK_CLASS: u32 = 0;

impl<'s> Classifier<'s> {
    pub fn new(spec: &'s Spec) -> Self {
        Classifier {
            sem: Semantics::new(spec),
            valuations: spec.signature.valuation_count(),
            memo: HashMap::default(),
            ids: HashMap::default(),
            active: Default::default(),
        }
    }

    /// The class of `p`, or `None` when `p` reaches itself.
    pub fn class(&mut self, p: &ProcTerm) -> Result<Option<u32>> {
        if let Some(c) = self.memo.get(p) {
            return Ok(Some(*c));
        }
        // only recursion constants can lead back to a term in progress
        let tracked = p.has_recursion();
        if tracked && !self.active.insert(p.clone()) {
            return Ok(None);
        }
        let r = self.compute(p);
        if tracked {
            self.active.remove(p);
        }
        let Some(c) = r? else { return Ok(None) };
        self.memo.insert(p.clone(), c);
        Ok(Some(c))
    }

    fn compute(&mut self, p: &ProcTerm) -> Result<Option<u32>> {
        let signal = self.sem.signal(p)?;
        let mut moves = Vec::new();
        for t in self.sem.step_transitions(p)? {
            let target = match &t.target {
                Target::Tick => TICK_CLASS,
                Target::Term(q) => match self.class(q)? {
                    Some(c) => c,
                    None => return Ok(None),
                },
            };
            for nu in 0..self.valuations {
                if t.guard.holds_at(nu) && signal.holds_at(nu) {
                    moves.push((nu, t.action.clone(), target));
                }
            }
        }
        moves.sort();
        moves.dedup();
        let n = self.ids.len() as u32 + 1;
        Ok(Some(
            *self
                .ids
                .entry((signal.vector().clone(), moves))
                .or_insert(n),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_proc;

    fn spec() -> Spec {
        Spec::parse("props P, Q; actions a, b, c, d; comm b | c = d;").unwrap()
    }

    fn check(s: &Spec, x: &str, y: &str) -> (bool, Comparison) {
        let mut n = Normalizer::new(s);
        let c = compare_terms(
            &mut n,
            &parse_proc(x, s).unwrap(),
            &parse_proc(y, s).unwrap(),
        )
        .unwrap();
        if let Some(w) = &c.report.witness {
            assert!(
                w.replay(&c.left_expanded, &c.right_expanded),
                "{x} vs {y}: {w:?}"
            );
        }
        (c.report.equivalent, c)
    }

    #[test]
    fn examples() {
        let s = spec();
        assert!(check(&s, "a . (P ^ b + ~P ^ c)", "a . ((P /\\ ~P) ^ (b + c))").0);
        assert!(check(&s, "a . (Cons(P) ^ (P ^ b + ~P ^ c))", "delta").0);
        let (eq, c) = check(&s, "a", "delta");
        assert!(!eq);
        let w = c.report.witness.unwrap();
        assert_eq!(w.mismatch, Mismatch::Unmatched);
        assert_eq!(w.steps[0].mover, Side::Left);
        assert!(!check(&s, "a . (P ^ b || ~P ^ c)", "delta").0);
    }

    #[test]
    fn witnesses_replay() {
        let s = spec();
        let (_, c) = check(&s, "a . b", "a . c");
        assert_eq!(c.report.witness.unwrap().steps.len(), 2);
        let (_, c) = check(&s, "P ^ a", "a");
        assert!(matches!(
            c.report.witness.unwrap().mismatch,
            Mismatch::Signal(..)
        ));
        let (_, c) = check(&s, "a . delta", "a");
        assert_eq!(c.report.witness.unwrap().mismatch, Mismatch::Termination);
        let (eq, c) = check(&s, "a . b + a . c", "a . (b + c)");
        assert!(!eq);
        assert_eq!(c.report.witness.unwrap().steps[0].mover, Side::Left);
        let (_, c) = check(&s, "b", "P ^ delta + b");
        assert_eq!(
            c.report.witness.unwrap().mismatch,
            Mismatch::Signal(
                TruthVector::constant(9, crate::logic::TruthValue::True),
                s.signature
                    .truth_vector(&crate::logic::Formula::atom("P"))
                    .unwrap()
            )
        );
        let (_, c) = check(&s, "delta", "Q :-> b");
        assert_eq!(c.report.witness.unwrap().steps[0].mover, Side::Right);
    }

    #[test]
    fn satisfaction_matching() {
        let s = spec();
        // GC7 at valuations where one disjunct is TRUE and the other BOTH
        assert!(check(&s, "(P \\/ Q) :-> a", "P :-> a + Q :-> a").0);
        assert!(check(&s, "(P \\/ ~P) :-> a", "a").0);
        assert!(!check(&s, "P :-> a", "a").0);
    }

    #[test]
    fn classes_group_initial_states() {
        let s = spec();
        let mut n = Normalizer::new(&s);
        let terms = ["a + a", "a", "a . b", "a . (b + b)", "delta"];
        let ex: Vec<ExpandedLts> = terms
            .iter()
            .map(|x| {
                let l = build_lts_with(&mut n, &parse_proc(x, &s).unwrap()).unwrap();
                expand_valuations(&l, 1 << 20).unwrap()
            })
            .collect();
        let refs: Vec<&ExpandedLts> = ex.iter().collect();
        let c = classes(&refs);
        assert_eq!(c[0], c[1]);
        assert_eq!(c[2], c[3]);
        assert_ne!(c[1], c[2]);
        assert_ne!(c[1], c[4]);
    }

    #[test]
    fn recursion_unfolds() {
        let s = Spec::parse("actions a; recspec E { X = a . X; Y = a . a . Y; }").unwrap();
        assert!(check(&s, "<X | E>", "<Y | E>").0);
        assert!(check(&s, "<X | E>", "a . <X | E>").0);
        assert!(!check(&s, "<X | E>", "a . a").0);
    }

    #[test]
    fn classifier_agrees_with_refinement() {
        let s = spec();
        let g = crate::gen::TermGen::for_spec(&s);
        let mut r = crate::gen::rng(11);
        let terms: Vec<ProcTerm> = (0..60).map(|_| g.term(&mut r, 7)).collect();
        let mut c = Classifier::new(&s);
        let mut n = Normalizer::new(&s);
        let ex: Vec<ExpandedLts> = terms
            .iter()
            .map(|t| expand_valuations(&build_lts_with(&mut n, t).unwrap(), 1 << 24).unwrap())
            .collect();
        let refs: Vec<&ExpandedLts> = ex.iter().collect();
        let by_refinement = classes(&refs);
        let by_class: Vec<u32> = terms.iter().map(|t| c.class(t).unwrap().unwrap()).collect();
        for i in 0..terms.len() {
            for j in 0..terms.len() {
                assert_eq!(
                    by_refinement[i] == by_refinement[j],
                    by_class[i] == by_class[j],
                    "{} vs {}",
                    terms[i],
                    terms[j]
                );
            }
        }
    }
}
