//! Recursive specifications: guardedness, unfolding and linear form.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::normalize::{group_steps, group_terms, Node, Normalizer, Shape, Step};
use crate::syntax::{ProcTerm, Spec};

/// A named finite set of recursion equations `X = t_X`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecSpec {
    pub name: String,
    pub equations: Vec<(String, ProcTerm)>,
}

impl RecSpec {
    pub fn new(name: &str, equations: Vec<(String, ProcTerm)>) -> Self {
        RecSpec {
            name: name.to_string(),
            equations,
        }
    }

    pub fn vars(&self) -> impl Iterator<Item = &str> {
        self.equations.iter().map(|(x, _)| x.as_str())
    }

    pub fn rhs(&self, var: &str) -> Option<&ProcTerm> {
        self.equations
            .iter()
            .find(|(x, _)| x == var)
            .map(|(_, t)| t)
    }

    /// `<t_X | E>`: the right-hand side of `var` with every variable `Y`
    /// replaced by the constant `<Y | E>`.
    pub fn unfold(&self, var: &str) -> Result<ProcTerm> {
        self.rhs(var)
            .map(|t| t.close_over(&self.name))
            .ok_or_else(|| Error::UnboundVariable {
                spec: self.name.clone(),
                var: var.to_string(),
            })
    }
}

impl fmt::Display for RecSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "recspec {} {{", self.name)?;
        for (x, t) in &self.equations {
            writeln!(f, "  {x} = {t};")?;
        }
        f.write_str("}")
    }
}

/// Variables occurring in `t` at positions that the head of `t` (its
/// signal and initial transitions) depends on. The right operand of `·`
/// is only reached after an action; every other operator, including the
/// merges through signal inheritance, exposes both operands.
pub fn unguarded_vars(t: &ProcTerm) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    collect_unguarded(t, &mut out);
    out
}

fn collect_unguarded(t: &ProcTerm, out: &mut BTreeSet<String>) {
    match t {
        ProcTerm::Var(x) => {
            out.insert(x.clone());
        }
        ProcTerm::Seq(p, _) => collect_unguarded(p, out),
        _ => {
            for c in t.children() {
                collect_unguarded(c, out);
            }
        }
    }
}

/// Accepts `e` when no variable depends on itself through unguarded
/// occurrences, so that unfolding the head of any constant terminates.
/// Every variable must be bound.
pub fn check_guarded(e: &RecSpec) -> Result<()> {
    let mut deps: BTreeMap<&str, BTreeSet<String>> = BTreeMap::new();
    for (x, t) in &e.equations {
        if let Some(y) = t.free_vars().into_iter().find(|y| e.rhs(y).is_none()) {
            return Err(Error::UnboundVariable {
                spec: e.name.clone(),
                var: y,
            });
        }
        deps.insert(x, unguarded_vars(t));
    }
    // depth-first search for a cycle; 1 = on stack, 2 = done
    fn visit<'a>(
        x: &'a str,
        deps: &'a BTreeMap<&'a str, BTreeSet<String>>,
        mark: &mut BTreeMap<&'a str, u8>,
    ) -> Option<(&'a str, &'a str)> {
        mark.insert(x, 1);
        for y in &deps[x] {
            match mark.get(y.as_str()) {
                Some(1) => return Some((x, y)),
                Some(_) => {}
                None => {
                    if let Some(hit) = visit(y, deps, mark) {
                        return Some(hit);
                    }
                }
            }
        }
        mark.insert(x, 2);
        None
    }
    let mut mark = BTreeMap::new();
    for x in e.vars() {
        if mark.contains_key(x) {
            continue;
        }
        if let Some((eq, var)) = visit(x, &deps, &mut mark) {
            return Err(Error::Unguarded {
                spec: e.name.clone(),
                equation: eq.to_string(),
                var: var.to_string(),
            });
        }
    }
    Ok(())
}

/// A recursive specification in linear form: every right-hand side is
/// `χ ^ δ + Σ φᵢ :-> aᵢ · Xᵢ + Σ ψⱼ :-> bⱼ` (or `nex`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSpec {
    pub name: String,
    pub equations: Vec<(String, Shape<String>)>,
    /// Closed terms that introduced variables not in the original spec.
    pub fresh: Vec<(String, ProcTerm)>,
}

impl LinearSpec {
    pub fn var_count(&self) -> usize {
        self.equations.len()
    }

    /// The linear equations as an ordinary recursive specification.
    pub fn to_recspec(&self, name: &str) -> RecSpec {
        let guarded = |g: &crate::logic::Prop, t: ProcTerm| {
            if g.formula().is_truth() {
                t
            } else {
                ProcTerm::guard(g.formula().clone(), t)
            }
        };
        let rhs = |shape: &Shape<String>| {
            let Shape::Node(n) = shape else {
                return ProcTerm::Nex;
            };
            let mut summands = Vec::new();
            if !n.signal.formula().is_truth() {
                summands.push(ProcTerm::emit(n.signal.formula().clone(), ProcTerm::Delta));
            }
            for s in &n.steps {
                let body = ProcTerm::seq(
                    ProcTerm::Act(s.action.clone()),
                    ProcTerm::Var(s.cont.clone()),
                );
                summands.push(guarded(&s.guard, body));
            }
            for t in &n.terms {
                summands.push(guarded(&t.guard, ProcTerm::Act(t.action.clone())));
            }
            summands
                .into_iter()
                .reduce(ProcTerm::alt)
                .unwrap_or(ProcTerm::Delta)
        };
        RecSpec::new(
            name,
            self.equations
                .iter()
                .map(|(x, shape)| (x.clone(), rhs(shape)))
                .collect(),
        )
    }
}

impl fmt::Display for LinearSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let e = self.to_recspec(&self.name);
        write!(f, "{e}")?;
        for (x, t) in &self.fresh {
            write!(f, "\n// {x} stands for {t}")?;
        }
        Ok(())
    }
}

/// Whether `t` puts a constant of `spec` under a merge operator.
fn merges_recursion(t: &ProcTerm, spec: &str) -> bool {
    let mentions = |u: &ProcTerm| -> bool {
        fn go(u: &ProcTerm, spec: &str) -> bool {
            matches!(u, ProcTerm::Rec { spec: s, .. } if s == spec)
                || u.children().into_iter().any(|c| go(c, spec))
        }
        go(u, spec)
    };
    match t {
        ProcTerm::Par(..) | ProcTerm::LeftMerge(..) | ProcTerm::CommMerge(..) => mentions(t),
        _ => t.children().into_iter().any(|c| merges_recursion(c, spec)),
    }
}

/// Rewrites the spec named `name` in `spec` to linear form. Continuations
/// that are not constants of the spec become fresh variables; merges over
/// constants are rejected, and so is any spec needing more fresh
/// variables than the state budget.
pub fn to_linear(spec: &Spec, name: &str) -> Result<LinearSpec> {
    let e = spec
        .recspec(name)
        .ok_or_else(|| Error::UnknownRecSpec(name.to_string()))?;
    check_guarded(e)?;
    let budget = spec.limits.state_budget;
    let mut norm = Normalizer::new(spec);
    let mut names: HashMap<ProcTerm, String> = HashMap::new();
    let mut taken: BTreeSet<String> = e.vars().map(str::to_string).collect();
    let mut queue: Vec<(String, ProcTerm, String)> = Vec::new();
    for x in e.vars() {
        let c = ProcTerm::rec(x, name);
        names.insert(c.clone(), x.to_string());
        queue.push((x.to_string(), c, x.to_string()));
    }
    let mut fresh = Vec::new();
    let mut equations = Vec::new();
    let mut i = 0;
    while i < queue.len() {
        let (x, term, origin) = queue[i].clone();
        i += 1;
        let shape = match norm.head(&term)? {
            Shape::Nex => Shape::Nex,
            Shape::Node(n) => {
                let mut steps = Vec::with_capacity(n.steps.len());
                for s in n.steps {
                    let var = match names.get(&s.cont) {
                        Some(v) => v.clone(),
                        None => {
                            if merges_recursion(&s.cont, name) {
                                return Err(Error::NotLinear {
                                    spec: name.to_string(),
                                    equation: origin,
                                    reason: format!(
                                        "continuation {} merges a recursion variable",
                                        s.cont
                                    ),
                                });
                            }
                            if queue.len() >= budget {
                                return Err(Error::NotLinear {
                                    spec: name.to_string(),
                                    equation: origin,
                                    reason: format!(
                                        "more than {budget} fresh variables needed at {}",
                                        s.cont
                                    ),
                                });
                            }
                            let mut k = 1;
                            while taken.contains(&format!("{x}{k}")) {
                                k += 1;
                            }
                            let v = format!("{x}{k}");
                            taken.insert(v.clone());
                            names.insert(s.cont.clone(), v.clone());
                            fresh.push((v.clone(), s.cont.clone()));
                            queue.push((v.clone(), s.cont, origin.clone()));
                            v
                        }
                    };
                    steps.push(Step {
                        action: s.action,
                        guard: s.guard,
                        cont: var,
                    });
                }
                Shape::Node(Node {
                    signal: n.signal,
                    steps: group_steps(steps),
                    terms: group_terms(n.terms),
                })
            }
        };
        equations.push((x, shape));
    }
    Ok(LinearSpec {
        name: name.to_string(),
        equations,
        fresh,
    })
}
