//! The three-valued paraconsistent logic underlying signals and guards.
//!
//! Formulas are built from atoms, falsity, negation, conjunction,
//! disjunction and a deduction-theorem implication. Every logical question
//! (consequence, equivalence, consistency, membership in the class of
//! falsity) is decided semantically by enumerating all `3^n` valuations of
//! a finite [`Signature`].

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default maximum number of atoms in a signature (729 valuations).
pub const DEFAULT_ATOM_CAP: usize = 6;

/// One of the three truth values. The derived order `False < True < Both`
/// is the canonical order used for valuation enumeration and serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruthValue {
    False,
    True,
    Both,
}

impl TruthValue {
    pub const ALL: [TruthValue; 3] = [TruthValue::False, TruthValue::True, TruthValue::Both];

    #[allow(clippy::should_implement_trait)]
    pub fn not(self) -> Self {
        match self {
            TruthValue::False => TruthValue::True,
            TruthValue::True => TruthValue::False,
            TruthValue::Both => TruthValue::Both,
        }
    }

    pub fn and(self, other: Self) -> Self {
        use TruthValue::*;
        match (self, other) {
            (True, True) => True,
            (False, _) | (_, False) => False,
            _ => Both,
        }
    }

    pub fn or(self, other: Self) -> Self {
        use TruthValue::*;
        match (self, other) {
            (True, _) | (_, True) => True,
            (False, False) => False,
            _ => Both,
        }
    }

    /// The consequent's value unless the antecedent is false.
    pub fn implies(self, other: Self) -> Self {
        match self {
            TruthValue::False => TruthValue::True,
            _ => other,
        }
    }

    /// A valuation satisfies a formula when its value is true or both.
    pub fn is_designated(self) -> bool {
        self != TruthValue::False
    }

    pub fn symbol(self) -> char {
        match self {
            TruthValue::False => 'F',
            TruthValue::True => 'T',
            TruthValue::Both => 'B',
        }
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TruthValue::False => "false",
            TruthValue::True => "true",
            TruthValue::Both => "both",
        };
        f.write_str(s)
    }
}

/// Propositional formula. Truth, bi-implication, `Iff` and `Cons` are
/// abbreviations and expand into these node kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Atom(String),
    Falsity,
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn atom(name: impl Into<String>) -> Self {
        Formula::Atom(name.into())
    }

    pub fn truth() -> Self {
        Formula::Not(Box::new(Formula::Falsity))
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn implies(a: Formula, b: Formula) -> Self {
        Formula::Implies(Box::new(a), Box::new(b))
    }

    /// `(a ⊃ b) ∧ (b ⊃ a)`
    pub fn bi_impl(a: Formula, b: Formula) -> Self {
        Formula::and(
            Formula::implies(a.clone(), b.clone()),
            Formula::implies(b, a),
        )
    }

    /// `(a ↔ b) ∧ (¬a ↔ ¬b)`, the internalized logical equivalence.
    pub fn iff(a: Formula, b: Formula) -> Self {
        Formula::and(
            Formula::bi_impl(a.clone(), b.clone()),
            Formula::bi_impl(Formula::not(a), Formula::not(b)),
        )
    }

    /// `(a ⊃ ⊥) ∨ (¬a ⊃ ⊥)`, the internalized consistency statement.
    pub fn cons(a: Formula) -> Self {
        Formula::or(
            Formula::implies(a.clone(), Formula::Falsity),
            Formula::implies(Formula::not(a), Formula::Falsity),
        )
    }

    pub fn is_truth(&self) -> bool {
        matches!(self, Formula::Not(inner) if **inner == Formula::Falsity)
    }

    pub fn is_falsity(&self) -> bool {
        *self == Formula::Falsity
    }

    /// Conjunction simplified by the unit, zero and idempotence laws.
    pub fn conj(a: Formula, b: Formula) -> Self {
        if a.is_falsity() || b.is_falsity() {
            Formula::Falsity
        } else if a.is_truth() {
            b
        } else if b.is_truth() || a == b {
            a
        } else {
            Formula::and(a, b)
        }
    }

    /// Disjunction simplified by the unit, zero and idempotence laws.
    pub fn disj(a: Formula, b: Formula) -> Self {
        if a.is_truth() || b.is_truth() {
            Formula::truth()
        } else if a.is_falsity() {
            b
        } else if b.is_falsity() || a == b {
            a
        } else {
            Formula::or(a, b)
        }
    }

    /// Number of AST nodes.
    pub fn size(&self) -> usize {
        match self {
            Formula::Atom(_) | Formula::Falsity => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                1 + a.size() + b.size()
            }
        }
    }

    pub fn has_implication(&self) -> bool {
        match self {
            Formula::Atom(_) | Formula::Falsity => false,
            Formula::Not(f) => f.has_implication(),
            Formula::And(a, b) | Formula::Or(a, b) => a.has_implication() || b.has_implication(),
            Formula::Implies(..) => true,
        }
    }

    pub fn atoms(&self) -> Vec<&str> {
        let mut out = Vec::new();
        self.collect_atoms(&mut out);
        out.sort_unstable();
        out.dedup();
        out
    }

    fn collect_atoms<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Formula::Atom(name) => out.push(name),
            Formula::Falsity => {}
            Formula::Not(f) => f.collect_atoms(out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_atoms(out);
                b.collect_atoms(out);
            }
        }
    }

    /// Value under a single valuation, following the clause for each
    /// connective.
    pub fn eval(&self, v: &Valuation<'_>) -> Result<TruthValue> {
        Ok(match self {
            Formula::Atom(name) => v
                .get(name)
                .ok_or_else(|| Error::UnknownAtom(name.clone()))?,
            Formula::Falsity => TruthValue::False,
            Formula::Not(f) => f.eval(v)?.not(),
            Formula::And(a, b) => a.eval(v)?.and(b.eval(v)?),
            Formula::Or(a, b) => a.eval(v)?.or(b.eval(v)?),
            Formula::Implies(a, b) => a.eval(v)?.implies(b.eval(v)?),
        })
    }

    fn prec(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Or(..) => 2,
            Formula::And(..) => 3,
            Formula::Not(..) => 4,
            Formula::Atom(_) | Formula::Falsity => 5,
        }
    }

    /// True for formulas printed without any binary connective at top level.
    pub fn is_simple(&self) -> bool {
        self.prec() >= 4
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            f.write_str("(")?;
            self.fmt_prec(f, 0)?;
            return f.write_str(")");
        }
        match self {
            Formula::Atom(name) => f.write_str(name),
            Formula::Falsity => f.write_str("ff"),
            _ if self.is_truth() => f.write_str("tt"),
            Formula::Not(inner) => {
                f.write_str("~")?;
                inner.fmt_prec(f, 4)
            }
            // `/\` and `\/` parse left-associatively, `=>` right-associatively.
            Formula::And(a, b) => {
                a.fmt_prec(f, 3)?;
                f.write_str(" /\\ ")?;
                b.fmt_prec(f, 4)
            }
            Formula::Or(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" \\/ ")?;
                b.fmt_prec(f, 3)
            }
            Formula::Implies(a, b) => {
                a.fmt_prec(f, 2)?;
                f.write_str(" => ")?;
                b.fmt_prec(f, 1)
            }
        }
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Ordered, finite set of atomic propositions. The order fixes the
/// valuation enumeration: a mixed-radix counter whose most significant
/// digit is the first declared atom, with digits `False, True, Both`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    atoms: Vec<String>,
    columns: Vec<TruthVector>,
}

impl Signature {
    pub fn new<I, S>(atoms: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Self::with_cap(atoms, DEFAULT_ATOM_CAP)
    }

    pub fn with_cap<I, S>(atoms: I, cap: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let atoms: Vec<String> = atoms.into_iter().map(Into::into).collect();
        for (i, a) in atoms.iter().enumerate() {
            if atoms[..i].contains(a) {
                return Err(Error::DuplicateAtom(a.clone()));
            }
        }
        if atoms.len() > cap {
            return Err(Error::AtomCap {
                atoms: atoms.len(),
                cap,
            });
        }
        let n = atoms.len();
        let count = 3usize.pow(n as u32);
        let columns = (0..n)
            .map(|k| {
                let stride = 3usize.pow((n - 1 - k) as u32);
                TruthVector(
                    (0..count)
                        .map(|i| TruthValue::ALL[(i / stride) % 3])
                        .collect(),
                )
            })
            .collect();
        Ok(Signature { atoms, columns })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn len(&self) -> usize {
        self.atoms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn contains(&self, atom: &str) -> bool {
        self.index_of(atom).is_some()
    }

    pub fn index_of(&self, atom: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == atom)
    }

    /// `3^n`
    pub fn valuation_count(&self) -> usize {
        3usize.pow(self.atoms.len() as u32)
    }

    pub fn valuation(&self, index: usize) -> Valuation<'_> {
        let values = self.columns.iter().map(|c| c.0[index]).collect();
        Valuation {
            signature: self,
            values,
        }
    }

    pub fn valuations(&self) -> impl Iterator<Item = Valuation<'_>> + '_ {
        (0..self.valuation_count()).map(move |i| self.valuation(i))
    }

    /// Checks that every atom of `f` is declared.
    pub fn check(&self, f: &Formula) -> Result<()> {
        match f.atoms().into_iter().find(|a| !self.contains(a)) {
            Some(a) => Err(Error::UnknownAtom(a.to_string())),
            None => Ok(()),
        }
    }

    /// Values of `f` under every valuation, in canonical order. Computed
    /// bottom-up on whole columns.
    pub fn truth_vector(&self, f: &Formula) -> Result<TruthVector> {
        Ok(match f {
            Formula::Atom(name) => {
                let k = self
                    .index_of(name)
                    .ok_or_else(|| Error::UnknownAtom(name.clone()))?;
                self.columns[k].clone()
            }
            Formula::Falsity => TruthVector::constant(self.valuation_count(), TruthValue::False),
            Formula::Not(a) => self.truth_vector(a)?.not(),
            Formula::And(a, b) => self.truth_vector(a)?.and(&self.truth_vector(b)?),
            Formula::Or(a, b) => self.truth_vector(a)?.or(&self.truth_vector(b)?),
            Formula::Implies(a, b) => self.truth_vector(a)?.implies(&self.truth_vector(b)?),
        })
    }

    pub fn prop(&self, f: Formula) -> Result<Prop> {
        let vector = self.truth_vector(&f)?;
        Ok(Prop { formula: f, vector })
    }

    pub fn truth(&self) -> Prop {
        Prop::truth(self.valuation_count())
    }

    pub fn falsity(&self) -> Prop {
        Prop::falsity(self.valuation_count())
    }

    /// Satisfied (true or both) under every valuation.
    pub fn is_tautology(&self, f: &Formula) -> Result<bool> {
        Ok(self.truth_vector(f)?.is_designated_everywhere())
    }

    /// `gamma ⊨ f`: every valuation either makes some premise false or
    /// satisfies `f`.
    pub fn entails(&self, gamma: &[Formula], f: &Formula) -> Result<bool> {
        let premises = gamma
            .iter()
            .map(|g| self.truth_vector(g))
            .collect::<Result<Vec<_>>>()?;
        let goal = self.truth_vector(f)?;
        Ok((0..self.valuation_count()).all(|i| {
            premises.iter().any(|p| p.0[i] == TruthValue::False) || goal.0[i].is_designated()
        }))
    }

    /// Same value under every valuation.
    pub fn lequiv(&self, a: &Formula, b: &Formula) -> Result<bool> {
        Ok(self.truth_vector(a)? == self.truth_vector(b)?)
    }

    /// Never valued `Both`.
    pub fn is_consistent(&self, f: &Formula) -> Result<bool> {
        Ok(!self.truth_vector(f)?.has_both())
    }

    /// Membership in the equivalence class of falsity.
    pub fn is_false_equiv(&self, f: &Formula) -> Result<bool> {
        Ok(self.truth_vector(f)?.is_all_false())
    }

    /// Classical two-valued validity, evaluated with boolean tables over the
    /// `2^n` classical valuations.
    pub fn classical_taut(&self, f: &Formula) -> Result<bool> {
        self.check(f)?;
        let n = self.atoms.len();
        Ok((0..1usize << n).all(|bits| {
            let assignment: Vec<bool> = (0..n).map(|k| bits >> (n - 1 - k) & 1 == 1).collect();
            self.classical_eval(f, &assignment)
        }))
    }

    fn classical_eval(&self, f: &Formula, assignment: &[bool]) -> bool {
        match f {
            Formula::Atom(name) => assignment[self.index_of(name).expect("checked atom")],
            Formula::Falsity => false,
            Formula::Not(a) => !self.classical_eval(a, assignment),
            Formula::And(a, b) => {
                self.classical_eval(a, assignment) && self.classical_eval(b, assignment)
            }
            Formula::Or(a, b) => {
                self.classical_eval(a, assignment) || self.classical_eval(b, assignment)
            }
            Formula::Implies(a, b) => {
                !self.classical_eval(a, assignment) || self.classical_eval(b, assignment)
            }
        }
    }
}

/// Total assignment of truth values to the atoms of a signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Valuation<'s> {
    signature: &'s Signature,
    values: Vec<TruthValue>,
}

impl<'s> Valuation<'s> {
    pub fn from_values(signature: &'s Signature, values: Vec<TruthValue>) -> Option<Self> {
        (values.len() == signature.len()).then_some(Valuation { signature, values })
    }

    pub fn get(&self, atom: &str) -> Option<TruthValue> {
        self.signature.index_of(atom).map(|k| self.values[k])
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.values
    }

    /// Position of this valuation in the canonical enumeration.
    pub fn index(&self) -> usize {
        self.values.iter().fold(0, |acc, v| acc * 3 + *v as usize)
    }
}

impl fmt::Display for Valuation<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (atom, v)) in self.signature.atoms.iter().zip(&self.values).enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{atom}={v}")?;
        }
        f.write_str("}")
    }
}

/// Values of one formula under all valuations, in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TruthVector(Vec<TruthValue>);

impl TruthVector {
    pub fn constant(len: usize, value: TruthValue) -> Self {
        TruthVector(vec![value; len])
    }

    pub fn from_values(values: Vec<TruthValue>) -> Self {
        TruthVector(values)
    }

    pub fn values(&self) -> &[TruthValue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: usize) -> TruthValue {
        self.0[index]
    }

    pub fn not(&self) -> Self {
        TruthVector(self.0.iter().map(|v| v.not()).collect())
    }

    fn zip_with(&self, other: &Self, op: impl Fn(TruthValue, TruthValue) -> TruthValue) -> Self {
        debug_assert_eq!(self.0.len(), other.0.len());
        TruthVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| op(*a, *b))
                .collect(),
        )
    }

    pub fn and(&self, other: &Self) -> Self {
        self.zip_with(other, TruthValue::and)
    }

    pub fn or(&self, other: &Self) -> Self {
        self.zip_with(other, TruthValue::or)
    }

    pub fn implies(&self, other: &Self) -> Self {
        self.zip_with(other, TruthValue::implies)
    }

    pub fn is_all_false(&self) -> bool {
        self.0.iter().all(|v| *v == TruthValue::False)
    }

    pub fn is_designated_everywhere(&self) -> bool {
        self.0.iter().all(|v| v.is_designated())
    }

    pub fn is_all_true(&self) -> bool {
        self.0.iter().all(|v| *v == TruthValue::True)
    }

    pub fn has_both(&self) -> bool {
        self.0.contains(&TruthValue::Both)
    }
}

impl fmt::Display for TruthVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|v| write!(f, "{}", v.symbol()))
    }
}

/// A formula paired with its truth vector. Equality, ordering and hashing
/// go through the vector only, so two props are equal exactly when their
/// formulas are logically equivalent; the formula is kept for printing.
#[derive(Clone, Debug)]
pub struct Prop {
    formula: Formula,
    vector: TruthVector,
}

impl Prop {
    pub fn truth(valuations: usize) -> Self {
        Prop {
            formula: Formula::truth(),
            vector: TruthVector::constant(valuations, TruthValue::True),
        }
    }

    pub fn falsity(valuations: usize) -> Self {
        Prop {
            formula: Formula::Falsity,
            vector: TruthVector::constant(valuations, TruthValue::False),
        }
    }

    pub fn formula(&self) -> &Formula {
        &self.formula
    }

    pub fn vector(&self) -> &TruthVector {
        &self.vector
    }

    pub fn into_formula(self) -> Formula {
        self.formula
    }

    pub fn is_false_equiv(&self) -> bool {
        self.vector.is_all_false()
    }

    pub fn is_truth_equiv(&self) -> bool {
        self.vector.is_all_true()
    }

    pub fn holds_at(&self, valuation: usize) -> bool {
        self.vector.0[valuation].is_designated()
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(&self) -> Prop {
        Prop {
            formula: Formula::not(self.formula.clone()),
            vector: self.vector.not(),
        }
    }

    pub fn and(&self, other: &Prop) -> Prop {
        Prop {
            formula: Formula::conj(self.formula.clone(), other.formula.clone()),
            vector: self.vector.and(&other.vector),
        }
    }

    pub fn or(&self, other: &Prop) -> Prop {
        Prop {
            formula: Formula::disj(self.formula.clone(), other.formula.clone()),
            vector: self.vector.or(&other.vector),
        }
    }

    pub fn implies(&self, other: &Prop) -> Prop {
        let formula = if self.formula.is_truth() {
            other.formula.clone()
        } else if other.formula.is_truth() || self.formula.is_falsity() {
            Formula::truth()
        } else {
            Formula::implies(self.formula.clone(), other.formula.clone())
        };
        Prop {
            formula,
            vector: self.vector.implies(&other.vector),
        }
    }

    /// `context ∧ self`, keeping the original formula when the conjunction
    /// does not change the vector.
    pub fn restrict(&self, context: &Prop) -> Prop {
        let vector = context.vector.and(&self.vector);
        if vector == self.vector {
            self.clone()
        } else {
            Prop {
                formula: Formula::conj(context.formula.clone(), self.formula.clone()),
                vector,
            }
        }
    }
}

impl PartialEq for Prop {
    fn eq(&self, other: &Self) -> bool {
        self.vector == other.vector
    }
}

impl Eq for Prop {}

impl Hash for Prop {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.vector.hash(state)
    }
}

impl PartialOrd for Prop {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Prop {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vector.cmp(&other.vector)
    }
}

impl fmt::Display for Prop {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.formula.fmt(f)
    }
}
