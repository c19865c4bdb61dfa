//! Randomized soundness check of the axioms: random closed instances of
//! every equation are compared by bisimilarity.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::error::Result;
use crate::gen::{self, GenRng, TermGen};
use crate::logic::Formula;
use crate::normalize::Normalizer;
use crate::syntax::{Action, ProcTerm, Spec};

use super::compare_terms;

/// Ingredients for one axiom instance.
pub struct Instance<'a> {
    gen: &'a TermGen,
    spec: &'a Spec,
    rng: &'a mut GenRng,
    size: usize,
}

impl Instance<'_> {
    fn x(&mut self) -> ProcTerm {
        self.gen.term(self.rng, self.size)
    }

    fn phi(&mut self) -> Formula {
        self.gen.formula(self.rng)
    }

    /// A declared action, or `δ` with small probability.
    fn a(&mut self) -> Option<Action> {
        if self.rng.gen_ratio(1, 6) {
            None
        } else {
            Some(self.gen.action(self.rng))
        }
    }

    fn action(&mut self) -> Action {
        self.gen.action(self.rng)
    }

    fn h(&mut self) -> Vec<Action> {
        self.gen.action_set(self.rng)
    }

    fn state(&mut self) -> Option<String> {
        self.gen.states.choose(self.rng).cloned()
    }

    fn comm(&self, a: &Option<Action>, b: &Option<Action>) -> Option<Action> {
        self.spec.comm.apply(a.as_ref(), b.as_ref())
    }

    fn all(&self) -> Vec<Action> {
        self.spec.actions.clone()
    }

    /// A formula equivalent to `f`, differently written.
    fn variant(&mut self, f: Formula) -> Formula {
        match self.rng.gen_range(0..5) {
            0 => Formula::not(Formula::not(f)),
            1 => Formula::and(f.clone(), f),
            2 => Formula::or(f.clone(), f),
            3 => Formula::and(f, Formula::truth()),
            _ => Formula::or(Formula::Falsity, f),
        }
    }
}

fn leaf(a: Option<Action>) -> ProcTerm {
    a.map_or(ProcTerm::Delta, ProcTerm::Act)
}

fn and(a: &Formula, b: &Formula) -> Formula {
    Formula::and(a.clone(), b.clone())
}

type Maker = fn(&mut Instance<'_>) -> Option<(ProcTerm, ProcTerm)>;

/// An equation of the theory with its instance generator.
pub struct Axiom {
    pub name: &'static str,
    pub group: &'static str,
    make: Maker,
}

impl Axiom {
    /// One random instance `(lhs, rhs)` over the vocabulary of `spec`, or
    /// `None` when the specification lacks what the axiom needs.
    pub fn instance(
        &self,
        spec: &Spec,
        gen: &TermGen,
        rng: &mut GenRng,
        size: usize,
    ) -> Option<(ProcTerm, ProcTerm)> {
        (self.make)(&mut Instance {
            gen,
            spec,
            rng,
            size,
        })
    }
}

macro_rules! axiom {
    ($group:expr, $name:expr, |$i:ident| $body:expr) => {
        Axiom {
            name: $name,
            group: $group,
            make: |$i: &mut Instance<'_>| $body,
        }
    };
}

/// Every axiom and derived equation the suite checks, in report order.
/// `RDP` is handled separately since it needs a fresh specification.
pub fn axioms() -> Vec<Axiom> {
    use ProcTerm as T;
    vec![
        axiom!("basic", "A1", |i| {
            let (x, y) = (i.x(), i.x());
            Some((T::alt(x.clone(), y.clone()), T::alt(y, x)))
        }),
        axiom!("basic", "A2", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::alt(T::alt(x.clone(), y.clone()), z.clone()),
                T::alt(x, T::alt(y, z)),
            ))
        }),
        axiom!("basic", "A3", |i| {
            let x = i.x();
            Some((T::alt(x.clone(), x.clone()), x))
        }),
        axiom!("basic", "A4", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::seq(T::alt(x.clone(), y.clone()), z.clone()),
                T::alt(T::seq(x, z.clone()), T::seq(y, z)),
            ))
        }),
        axiom!("basic", "A5", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::seq(T::seq(x.clone(), y.clone()), z.clone()),
                T::seq(x, T::seq(y, z)),
            ))
        }),
        axiom!("basic", "A6", |i| {
            let x = i.x();
            Some((T::alt(x.clone(), T::Delta), x))
        }),
        axiom!("basic", "A7", |i| Some((T::seq(T::Delta, i.x()), T::Delta))),
        axiom!("basic", "NE1", |i| Some((T::alt(i.x(), T::Nex), T::Nex))),
        axiom!("basic", "NE2", |i| Some((T::seq(T::Nex, i.x()), T::Nex))),
        axiom!("basic", "NE3", |i| Some((
            T::seq(leaf(i.a()), T::Nex),
            T::Delta
        ))),
        axiom!("basic", "GC1", |i| {
            let x = i.x();
            Some((T::guard(Formula::truth(), x.clone()), x))
        }),
        axiom!("basic", "GC2", |i| Some((
            T::guard(Formula::Falsity, i.x()),
            T::Delta
        ))),
        axiom!("basic", "GC3", |i| Some((
            T::guard(i.phi(), T::Delta),
            T::Delta
        ))),
        axiom!("basic", "GC4", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::guard(f.clone(), T::alt(x.clone(), y.clone())),
                T::alt(T::guard(f.clone(), x), T::guard(f, y)),
            ))
        }),
        axiom!("basic", "GC5", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::guard(f.clone(), T::seq(x.clone(), y.clone())),
                T::seq(T::guard(f, x), y),
            ))
        }),
        axiom!("basic", "GC6", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            Some((
                T::guard(f.clone(), T::guard(g.clone(), x.clone())),
                T::guard(and(&f, &g), x),
            ))
        }),
        axiom!("basic", "GC7", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            Some((
                T::guard(Formula::or(f.clone(), g.clone()), x.clone()),
                T::alt(T::guard(f, x.clone()), T::guard(g, x)),
            ))
        }),
        axiom!("basic", "SE1", |i| {
            let x = i.x();
            Some((T::emit(Formula::truth(), x.clone()), x))
        }),
        axiom!("basic", "SE2", |i| Some((
            T::emit(Formula::Falsity, i.x()),
            T::Nex
        ))),
        axiom!("basic", "SE3", |i| Some((T::emit(i.phi(), T::Nex), T::Nex))),
        axiom!("basic", "SE4", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::alt(T::emit(f.clone(), x.clone()), y.clone()),
                T::emit(f, T::alt(x, y)),
            ))
        }),
        axiom!("basic", "SE5", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::seq(T::emit(f.clone(), x.clone()), y.clone()),
                T::emit(f, T::seq(x, y)),
            ))
        }),
        axiom!("basic", "SE6", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            Some((
                T::emit(f.clone(), T::emit(g.clone(), x.clone())),
                T::emit(and(&f, &g), x),
            ))
        }),
        axiom!("basic", "SE7", |i| {
            let (f, x) = (i.phi(), i.x());
            Some((
                T::emit(f.clone(), T::guard(f.clone(), x.clone())),
                T::emit(f, x),
            ))
        }),
        axiom!("basic", "SE8", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            Some((
                T::guard(f.clone(), T::emit(g.clone(), x.clone())),
                T::emit(Formula::implies(f.clone(), g), T::guard(f, x)),
            ))
        }),
        axiom!("basic", "IMP-guard", |i| {
            let (f, x) = (i.phi(), i.x());
            let g = i.variant(f.clone());
            Some((T::guard(f, x.clone()), T::guard(g, x)))
        }),
        axiom!("basic", "IMP-emit", |i| {
            let (f, x) = (i.phi(), i.x());
            let g = i.variant(f.clone());
            Some((T::emit(f, x.clone()), T::emit(g, x)))
        }),
        axiom!("derived", "SE-sum", |i| {
            let (f, g, x, y) = (i.phi(), i.phi(), i.x(), i.x());
            Some((
                T::alt(T::emit(f.clone(), x.clone()), T::emit(g.clone(), y.clone())),
                T::emit(and(&f, &g), T::alt(x, y)),
            ))
        }),
        axiom!("derived", "SE-guard-left", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            let fg = and(&f, &g);
            Some((T::emit(fg.clone(), T::guard(f, x.clone())), T::emit(fg, x)))
        }),
        axiom!("derived", "SE-guard-right", |i| {
            let (f, g, x) = (i.phi(), i.phi(), i.x());
            Some((
                T::emit(f.clone(), T::guard(and(&f, &g), x.clone())),
                T::emit(f, T::guard(g, x)),
            ))
        }),
        axiom!("derived", "SE-delta", |i| {
            let (f, x) = (i.phi(), i.x());
            Some((
                T::alt(T::emit(f.clone(), T::Delta), x.clone()),
                T::emit(f, x),
            ))
        }),
        axiom!("derived", "GC-nex", |i| {
            let f = i.phi();
            Some((
                T::guard(f.clone(), T::Nex),
                T::emit(Formula::implies(f, Formula::Falsity), T::Delta),
            ))
        }),
        axiom!("merge", "CM1", |i| {
            let (x, y) = (i.x(), i.x());
            Some((
                T::par(x.clone(), y.clone()),
                T::alt(
                    T::alt(
                        T::left_merge(x.clone(), y.clone()),
                        T::left_merge(y.clone(), x.clone()),
                    ),
                    T::comm_merge(x, y),
                ),
            ))
        }),
        axiom!("merge", "CM2S", |i| {
            let (a, x) = (leaf(i.a()), i.x());
            let all = i.all();
            Some((
                T::left_merge(a.clone(), x.clone()),
                T::alt(T::seq(a, x.clone()), T::encap(all, x)),
            ))
        }),
        axiom!("merge", "CM3S", |i| {
            let (a, x, y) = (leaf(i.a()), i.x(), i.x());
            let all = i.all();
            Some((
                T::left_merge(T::seq(a.clone(), x.clone()), y.clone()),
                T::alt(T::seq(a, T::par(x, y.clone())), T::encap(all, y)),
            ))
        }),
        axiom!("merge", "CM4", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::left_merge(T::alt(x.clone(), y.clone()), z.clone()),
                T::alt(T::left_merge(x, z.clone()), T::left_merge(y, z)),
            ))
        }),
        axiom!("merge", "CM5", |i| {
            let (a, b, x) = (i.a(), i.a(), i.x());
            let c = i.comm(&a, &b);
            Some((
                T::comm_merge(T::seq(leaf(a), x.clone()), leaf(b)),
                T::seq(leaf(c), x),
            ))
        }),
        axiom!("merge", "CM6", |i| {
            let (a, b, x) = (i.a(), i.a(), i.x());
            let c = i.comm(&a, &b);
            Some((
                T::comm_merge(leaf(a), T::seq(leaf(b), x.clone())),
                T::seq(leaf(c), x),
            ))
        }),
        axiom!("merge", "CM7", |i| {
            let (a, b, x, y) = (i.a(), i.a(), i.x(), i.x());
            let c = i.comm(&a, &b);
            Some((
                T::comm_merge(T::seq(leaf(a), x.clone()), T::seq(leaf(b), y.clone())),
                T::seq(leaf(c), T::par(x, y)),
            ))
        }),
        axiom!("merge", "CM8", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::comm_merge(T::alt(x.clone(), y.clone()), z.clone()),
                T::alt(T::comm_merge(x, z.clone()), T::comm_merge(y, z)),
            ))
        }),
        axiom!("merge", "CM9", |i| {
            let (x, y, z) = (i.x(), i.x(), i.x());
            Some((
                T::comm_merge(x.clone(), T::alt(y.clone(), z.clone())),
                T::alt(T::comm_merge(x.clone(), y), T::comm_merge(x, z)),
            ))
        }),
        axiom!("merge", "GC8S", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            let all = i.all();
            Some((
                T::left_merge(T::guard(f.clone(), x.clone()), y.clone()),
                T::alt(T::guard(f, T::left_merge(x, y.clone())), T::encap(all, y)),
            ))
        }),
        axiom!("merge", "GC9S", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            let all = i.all();
            Some((
                T::comm_merge(T::guard(f.clone(), x.clone()), y.clone()),
                T::alt(T::guard(f, T::comm_merge(x, y.clone())), T::encap(all, y)),
            ))
        }),
        axiom!("merge", "GC10S", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            let all = i.all();
            Some((
                T::comm_merge(x.clone(), T::guard(f.clone(), y.clone())),
                T::alt(T::guard(f, T::comm_merge(x.clone(), y)), T::encap(all, x)),
            ))
        }),
        axiom!("merge", "GC11", |i| {
            let (h, f, x) = (i.h(), i.phi(), i.x());
            Some((
                T::encap(h.clone(), T::guard(f.clone(), x.clone())),
                T::guard(f, T::encap(h, x)),
            ))
        }),
        axiom!("merge", "C1", |i| {
            let (a, b) = (leaf(i.a()), leaf(i.a()));
            Some((T::comm_merge(a.clone(), b.clone()), T::comm_merge(b, a)))
        }),
        axiom!("merge", "C2", |i| {
            let (a, b, c) = (leaf(i.a()), leaf(i.a()), leaf(i.a()));
            Some((
                T::comm_merge(T::comm_merge(a.clone(), b.clone()), c.clone()),
                T::comm_merge(a, T::comm_merge(b, c)),
            ))
        }),
        axiom!("merge", "C3", |i| Some((
            T::comm_merge(T::Delta, leaf(i.a())),
            T::Delta
        ))),
        axiom!("merge", "D1", |i| {
            let a = i.action();
            let h: Vec<Action> = i.h().into_iter().filter(|b| *b != a).collect();
            Some((T::encap(h, T::Act(a.clone())), T::Act(a)))
        }),
        axiom!("merge", "D2", |i| {
            let a = i.action();
            let mut h = i.h();
            h.push(a.clone());
            Some((T::encap(h, T::Act(a)), T::Delta))
        }),
        axiom!("merge", "D3", |i| {
            let (h, x, y) = (i.h(), i.x(), i.x());
            Some((
                T::encap(h.clone(), T::alt(x.clone(), y.clone())),
                T::alt(T::encap(h.clone(), x), T::encap(h, y)),
            ))
        }),
        axiom!("merge", "D4", |i| {
            let (h, x, y) = (i.h(), i.x(), i.x());
            Some((
                T::encap(h.clone(), T::seq(x.clone(), y.clone())),
                T::seq(T::encap(h.clone(), x), T::encap(h, y)),
            ))
        }),
        axiom!("merge", "SE9", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::left_merge(T::emit(f.clone(), x.clone()), y.clone()),
                T::emit(f, T::left_merge(x, y)),
            ))
        }),
        axiom!("merge", "SE10", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::comm_merge(T::emit(f.clone(), x.clone()), y.clone()),
                T::emit(f, T::comm_merge(x, y)),
            ))
        }),
        axiom!("merge", "SE11", |i| {
            let (f, x, y) = (i.phi(), i.x(), i.x());
            Some((
                T::comm_merge(x.clone(), T::emit(f.clone(), y.clone())),
                T::emit(f, T::comm_merge(x, y)),
            ))
        }),
        axiom!("merge", "SE12", |i| {
            let (h, f, x) = (i.h(), i.phi(), i.x());
            Some((
                T::encap(h.clone(), T::emit(f.clone(), x.clone())),
                T::emit(f, T::encap(h, x)),
            ))
        }),
        axiom!("state", "SO1", |i| {
            let s = i.state()?;
            let a = i.a();
            let space = i.spec.state_space(&s)?;
            let b = a.as_ref().and_then(|a| space.act(a, &s));
            Some((T::state(&s, leaf(a)), T::emit(space.sig(&s), leaf(b))))
        }),
        axiom!("state", "SO2", |i| {
            let s = i.state()?;
            let (a, x) = (i.action(), i.x());
            let space = i.spec.state_space(&s)?;
            let b = space.act(&a, &s);
            let next = space.eff(&a, &s).to_string();
            Some((
                T::state(&s, T::seq(T::Act(a), x.clone())),
                T::emit(space.sig(&s), T::seq(leaf(b), T::state(&next, x))),
            ))
        }),
        axiom!("state", "SO3", |i| {
            let s = i.state()?;
            let (x, y) = (i.x(), i.x());
            Some((
                T::state(&s, T::alt(x.clone(), y.clone())),
                T::alt(T::state(&s, x), T::state(&s, y)),
            ))
        }),
        axiom!("state", "SO4", |i| {
            let s = i.state()?;
            let (f, x) = (i.phi(), i.x());
            let sig = i.spec.state_space(&s)?.sig(&s);
            Some((
                T::state(&s, T::guard(f.clone(), x.clone())),
                T::emit(sig, T::guard(f, T::state(&s, x))),
            ))
        }),
        axiom!("state", "SO5", |i| {
            let s = i.state()?;
            let (f, x) = (i.phi(), i.x());
            Some((
                T::state(&s, T::emit(f.clone(), x.clone())),
                T::emit(f, T::state(&s, x)),
            ))
        }),
        axiom!("state", "SO-nex", |i| Some((
            T::state(&i.state()?, T::Nex),
            T::Nex
        ))),
        axiom!("state", "SO-delta", |i| {
            let s = i.state()?;
            let sig = i.spec.state_space(&s)?.sig(&s);
            Some((T::state(&s, T::Delta), T::emit(sig, T::Delta)))
        }),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lhs: String,
    pub rhs: String,
    pub witness: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomOutcome {
    pub name: String,
    pub group: String,
    pub instances: usize,
    pub passed: usize,
    /// Set when the specification lacks the vocabulary for the axiom.
    pub skipped: Option<String>,
    pub counterexamples: Vec<Counterexample>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub size: usize,
    pub outcomes: Vec<AxiomOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.counterexamples.is_empty())
    }

    pub fn outcome(&self, name: &str) -> Option<&AxiomOutcome> {
        self.outcomes.iter().find(|o| o.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    /// One line per axiom, then every counterexample.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for o in &self.outcomes {
            let status = match (&o.skipped, o.counterexamples.is_empty()) {
                (Some(why), _) => format!("skipped ({why})"),
                (None, true) => "ok".to_string(),
                (None, false) => "FAILED".to_string(),
            };
            out.push_str(&format!(
                "{:<16} {:>3}/{:<3} {status}\n",
                o.name, o.passed, o.instances
            ));
        }
        for o in &self.outcomes {
            for c in &o.counterexamples {
                out.push_str(&format!(
                    "\n{}: {}  =  {}\n{}\n",
                    o.name, c.lhs, c.rhs, c.witness
                ));
            }
        }
        let failed = self
            .outcomes
            .iter()
            .filter(|o| !o.counterexamples.is_empty())
            .count();
        out.push_str(&format!("axioms failing: {failed}\n"));
        out
    }
}

/// Seed of the generator for the axiom at `index`.
fn axiom_seed(seed: u64, index: usize) -> u64 {
    seed ^ (index as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15)
}

fn check(spec: &Spec, lhs: &ProcTerm, rhs: &ProcTerm) -> Result<Option<Counterexample>> {
    let mut norm = Normalizer::new(spec);
    let c = compare_terms(&mut norm, lhs, rhs)?;
    if c.report.equivalent {
        return Ok(None);
    }
    let witness = c
        .report
        .witness
        .map(|w| w.render(|nu| spec.signature.valuation(nu).to_string()))
        .unwrap_or_default();
    Ok(Some(Counterexample {
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        witness,
    }))
}

/// Checks `samples` random instances of every axiom (and of the recursive
/// definition principle) for bisimilarity. Deterministic given `seed`.
pub fn axiom_soundness_suite(
    spec: &Spec,
    samples: usize,
    size: usize,
    seed: u64,
) -> Result<SuiteReport> {
    let term_gen = TermGen::for_spec(spec);
    let mut outcomes = Vec::new();
    let all = axioms();
    for (k, ax) in all.iter().enumerate() {
        let mut rng = gen::rng(axiom_seed(seed, k));
        let mut outcome = AxiomOutcome {
            name: ax.name.to_string(),
            group: ax.group.to_string(),
            instances: 0,
            passed: 0,
            skipped: None,
            counterexamples: Vec::new(),
        };
        if spec.actions.is_empty() {
            outcome.skipped = Some("no actions declared".into());
            outcomes.push(outcome);
            continue;
        }
        for _ in 0..samples {
            let mut inst = Instance {
                gen: &term_gen,
                spec,
                rng: &mut rng,
                size,
            };
            let Some((lhs, rhs)) = (ax.make)(&mut inst) else {
                outcome.skipped = Some("no state space declared".into());
                break;
            };
            outcome.instances += 1;
            match check(spec, &lhs, &rhs)? {
                None => outcome.passed += 1,
                Some(c) => outcome.counterexamples.push(c),
            }
        }
        outcomes.push(outcome);
    }
    outcomes.push(rdp(spec, &term_gen, samples, axiom_seed(seed, all.len()))?);
    Ok(SuiteReport {
        seed,
        samples,
        size,
        outcomes,
    })
}

/// `<X | E> = <t_X | E>` for random linear specifications `E`.
fn rdp(spec: &Spec, term_gen: &TermGen, samples: usize, seed: u64) -> Result<AxiomOutcome> {
    let mut rng = gen::rng(seed);
    let mut outcome = AxiomOutcome {
        name: "RDP".into(),
        group: "recursion".into(),
        instances: 0,
        passed: 0,
        skipped: None,
        counterexamples: Vec::new(),
    };
    if spec.actions.is_empty() {
        outcome.skipped = Some("no actions declared".into());
        return Ok(outcome);
    }
    let mut name = "Rdp".to_string();
    while spec.recspec(&name).is_some() {
        name.push('_');
    }
    for _ in 0..samples {
        let vars = rng.gen_range(1..=3);
        let e = term_gen.linear_recspec(&mut rng, &name, vars);
        let x = format!("X{}", rng.gen_range(0..vars));
        let mut local = spec.clone();
        local.recspecs.push(e);
        let lhs = ProcTerm::rec(&x, &name);
        let rhs = local.unfold(&x, &name)?;
        outcome.instances += 1;
        match check(&local, &lhs, &rhs)? {
            None => outcome.passed += 1,
            Some(c) => outcome.counterexamples.push(c),
        }
    }
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    const SPEC: &str = "props P, Q; actions a, b, c; comm a | b = c;\n\
        statespace m { states s0, s1; sig(s0) = P; sig(s1) = ~Q;\n\
        act(a, s0) = b; eff(a, s0) = s1; act(b, s1) = delta; eff(c, s1) = s0; }";

    #[test]
    fn small_sweep_passes() {
        let s = Spec::parse(SPEC).unwrap();
        let r = axiom_soundness_suite(&s, 5, 6, 1).unwrap();
        assert!(r.all_passed(), "{}", r.render());
        assert!(r.outcomes.iter().all(|o| o.skipped.is_none()));
        assert_eq!(r, axiom_soundness_suite(&s, 5, 6, 1).unwrap());
    }

    #[test]
    fn state_axioms_skip_without_states() {
        let s = Spec::parse("props P; actions a;").unwrap();
        let r = axiom_soundness_suite(&s, 2, 4, 0).unwrap();
        assert!(r.outcome("SO1").unwrap().skipped.is_some());
        assert!(r.outcome("A1").unwrap().skipped.is_none());
        let json: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["outcomes"][0]["name"], "A1");
    }

    #[test]
    fn detects_a_false_equation() {
        let s = Spec::parse("actions a, b;").unwrap();
        let c = check(&s, &ProcTerm::act("a"), &ProcTerm::act("b"))
            .unwrap()
            .unwrap();
        assert!(c.witness.contains("cannot answer"));
    }
}
