//! Seeded generators for formulas, terms and linear specifications, and
//! exhaustive enumerators for small populations.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::logic::Formula;
use crate::recspec::RecSpec;
use crate::syntax::{Action, ProcTerm, Spec};

pub type GenRng = ChaCha8Rng;

pub fn rng(seed: u64) -> GenRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random formula of depth at most `depth` over `atoms`, using every
/// connective including `ff` and `Cons`.
pub fn formula(rng: &mut impl Rng, atoms: &[String], depth: usize) -> Formula {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return match rng.gen_range(0..10) {
            0 => Formula::Falsity,
            1 => Formula::truth(),
            _ if atoms.is_empty() => Formula::truth(),
            _ => Formula::atom(atoms.choose(rng).expect("nonempty").clone()),
        };
    }
    let sub = |rng: &mut _| formula(rng, atoms, depth - 1);
    match rng.gen_range(0..9) {
        0 | 1 => Formula::not(sub(rng)),
        2 | 3 => Formula::and(sub(rng), sub(rng)),
        4 | 5 => Formula::or(sub(rng), sub(rng)),
        6 | 7 => Formula::implies(sub(rng), sub(rng)),
        _ => Formula::cons(sub(rng)),
    }
}

/// Every formula with at most `max_size` nodes over `atoms` and `ff`,
/// built from `~`, `/\`, `\/` and, if `implication` is set, `=>`.
pub fn all_formulas(atoms: &[String], max_size: usize, implication: bool) -> Vec<Formula> {
    let mut by_size: Vec<Vec<Formula>> = vec![Vec::new(); max_size + 1];
    if max_size == 0 {
        return Vec::new();
    }
    by_size[1] = atoms
        .iter()
        .map(Formula::atom)
        .chain([Formula::Falsity])
        .collect();
    for n in 2..=max_size {
        let mut out: Vec<Formula> = by_size[n - 1].iter().cloned().map(Formula::not).collect();
        for i in 1..n - 1 {
            let j = n - 1 - i;
            for a in &by_size[i] {
                for b in &by_size[j] {
                    out.push(Formula::and(a.clone(), b.clone()));
                    out.push(Formula::or(a.clone(), b.clone()));
                    if implication {
                        out.push(Formula::implies(a.clone(), b.clone()));
                    }
                }
            }
        }
        by_size[n] = out;
    }
    by_size.into_iter().flatten().collect()
}

/// Random closed terms over the vocabulary of a specification.
#[derive(Clone, Debug)]
pub struct TermGen {
    pub atoms: Vec<String>,
    pub actions: Vec<Action>,
    pub states: Vec<String>,
    pub formula_depth: usize,
    /// Allow `||`, `||_`, `|`, `encap` and `state` nodes.
    pub concurrency: bool,
}

impl TermGen {
    pub fn for_spec(spec: &Spec) -> Self {
        TermGen {
            atoms: spec.signature.atoms().to_vec(),
            actions: spec.actions.clone(),
            states: spec
                .statespaces
                .iter()
                .flat_map(|s| s.states.iter().cloned())
                .collect(),
            formula_depth: 2,
            concurrency: true,
        }
    }

    pub fn sequential(mut self) -> Self {
        self.concurrency = false;
        self
    }

    pub fn formula(&self, rng: &mut impl Rng) -> Formula {
        formula(rng, &self.atoms, self.formula_depth)
    }

    pub fn action(&self, rng: &mut impl Rng) -> Action {
        self.actions
            .choose(rng)
            .expect("at least one action")
            .clone()
    }

    /// A random subset of the actions.
    pub fn action_set(&self, rng: &mut impl Rng) -> Vec<Action> {
        self.actions
            .iter()
            .filter(|_| rng.gen_bool(0.5))
            .cloned()
            .collect()
    }

    fn leaf(&self, rng: &mut impl Rng) -> ProcTerm {
        match rng.gen_range(0..12) {
            0 => ProcTerm::Delta,
            1 => ProcTerm::Nex,
            _ => ProcTerm::Act(self.action(rng)),
        }
    }

    /// A random closed recursion-free term with at most `size` nodes.
    pub fn term(&self, rng: &mut impl Rng, size: usize) -> ProcTerm {
        let size = rng.gen_range(1..=size.max(1));
        self.exact(rng, size)
    }

    fn exact(&self, rng: &mut impl Rng, size: usize) -> ProcTerm {
        if size <= 1 {
            return self.leaf(rng);
        }
        let unary = size == 2 || rng.gen_ratio(1, 3);
        if unary {
            let x = self.exact(rng, size - 1);
            let kinds = if self.concurrency && !self.states.is_empty() {
                4
            } else if self.concurrency {
                3
            } else {
                2
            };
            return match rng.gen_range(0..kinds) {
                0 => ProcTerm::guard(self.formula(rng), x),
                1 => ProcTerm::emit(self.formula(rng), x),
                2 => ProcTerm::encap(self.action_set(rng), x),
                _ => ProcTerm::state(self.states.choose(rng).expect("nonempty"), x),
            };
        }
        let left = rng.gen_range(1..size - 1);
        let x = self.exact(rng, left);
        let y = self.exact(rng, size - 1 - left);
        let kinds = if self.concurrency { 5 } else { 2 };
        match rng.gen_range(0..kinds) {
            0 => ProcTerm::alt(x, y),
            1 => ProcTerm::seq(x, y),
            2 => ProcTerm::par(x, y),
            3 => ProcTerm::left_merge(x, y),
            _ => ProcTerm::comm_merge(x, y),
        }
    }

    /// A random linear recursive specification with variables `X0..Xn`.
    pub fn linear_recspec(&self, rng: &mut impl Rng, name: &str, vars: usize) -> RecSpec {
        let names: Vec<String> = (0..vars).map(|i| format!("X{i}")).collect();
        let equations = names
            .iter()
            .map(|x| {
                let mut summands = Vec::new();
                if rng.gen_ratio(1, 4) {
                    summands.push(ProcTerm::emit(self.formula(rng), ProcTerm::Delta));
                }
                for _ in 0..rng.gen_range(1..=3) {
                    let next = ProcTerm::Var(names.choose(rng).expect("nonempty").clone());
                    let step = ProcTerm::seq(ProcTerm::Act(self.action(rng)), next);
                    summands.push(self.maybe_guard(rng, step));
                }
                if rng.gen_bool(0.5) {
                    let a = ProcTerm::Act(self.action(rng));
                    summands.push(self.maybe_guard(rng, a));
                }
                let rhs = summands
                    .into_iter()
                    .reduce(ProcTerm::alt)
                    .expect("nonempty");
                (x.clone(), rhs)
            })
            .collect();
        RecSpec::new(name, equations)
    }

    fn maybe_guard(&self, rng: &mut impl Rng, t: ProcTerm) -> ProcTerm {
        if rng.gen_bool(0.5) {
            ProcTerm::guard(self.formula(rng), t)
        } else {
            t
        }
    }
}

/// Calls `visit` on every term with at most `max_size` nodes built from
/// `leaves` with `+`, `.`, and `φ :->`, `φ ^` for `φ` in `guards`.
/// Terms are visited in order of size.
pub fn enumerate_terms(
    leaves: &[ProcTerm],
    guards: &[Formula],
    max_size: usize,
    mut visit: impl FnMut(&ProcTerm),
) {
    let mut by_size: Vec<Vec<ProcTerm>> = vec![Vec::new(); max_size + 1];
    for n in 1..=max_size {
        // the largest size is streamed rather than stored
        let last = n == max_size;
        let mut out = Vec::new();
        let mut emit = |t: ProcTerm| {
            visit(&t);
            if !last {
                out.push(t);
            }
        };
        if n == 1 {
            leaves.iter().cloned().for_each(&mut emit);
        } else {
            for x in &by_size[n - 1] {
                for g in guards {
                    emit(ProcTerm::guard(g.clone(), x.clone()));
                    emit(ProcTerm::emit(g.clone(), x.clone()));
                }
            }
            for i in 1..n - 1 {
                for x in &by_size[i] {
                    for y in &by_size[n - 1 - i] {
                        emit(ProcTerm::alt(x.clone(), y.clone()));
                        emit(ProcTerm::seq(x.clone(), y.clone()));
                    }
                }
            }
        }
        by_size[n] = out;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_deterministic() {
        let s = Spec::parse("props P, Q; actions a, b;").unwrap();
        let g = TermGen::for_spec(&s);
        let run = || {
            let mut r = rng(7);
            (0..20)
                .map(|_| g.term(&mut r, 10).to_string())
                .collect::<Vec<_>>()
        };
        assert_eq!(run(), run());
        let mut r = rng(1);
        for _ in 0..200 {
            assert!(g.term(&mut r, 8).size() <= 8);
        }
    }

    #[test]
    fn enumeration_counts() {
        let atoms = vec!["P".to_string()];
        // sizes 1..3 over {P, ff} with ~, /\, \/ : 2 + 2 + (2 + 2*2*2)
        assert_eq!(all_formulas(&atoms, 3, false).len(), 14);
        let mut n = 0;
        enumerate_terms(
            &[ProcTerm::Delta, ProcTerm::act("a")],
            &[Formula::truth()],
            3,
            |_| n += 1,
        );
        // size 1: 2, size 2: 2*2, size 3: 4*2 + 2*2*2
        assert_eq!(n, 2 + 4 + 16);
    }

    #[test]
    fn linear_specs_are_guarded() {
        let s = Spec::parse("props P; actions a, b;").unwrap();
        let g = TermGen::for_spec(&s);
        let mut r = rng(3);
        for i in 0..20 {
            let e = g.linear_recspec(&mut r, &format!("R{i}"), 3);
            crate::recspec::check_guarded(&e).unwrap();
        }
    }
}
