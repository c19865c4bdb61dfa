//! Recursive-descent parser for specifications, formulas and process terms.
//!
//! Names must be declared before use. Process identifiers resolve to a
//! recursion variable (inside a `recspec` block), then an action, then a
//! named process, which is expanded in place.

use std::collections::BTreeSet;

use super::lexer::{tokenize, Tok, Token};
use super::spec::{Query, Spec, DEFAULT_SAMPLES, DEFAULT_SIZE};
use super::tables::{CommEntry, CommTable, StateSpace};
use super::term::{Action, ProcTerm};
use crate::error::{Error, Pos, Result};
use crate::limits::Limits;
use crate::logic::{Formula, Signature};
use crate::recspec::{self, RecSpec};

const RESERVED: &[&str] = &["tt", "ff", "delta", "nex", "encap", "state", "Cons"];

pub fn parse_spec(text: &str) -> Result<Spec> {
    parse_spec_with(text, Limits::default())
}

pub fn parse_spec_with(text: &str, limits: Limits) -> Result<Spec> {
    let mut p = Parser::new(text, Spec::empty(limits)?)?;
    let mut comm = Vec::new();
    while p.peek() != &Tok::Eof {
        p.statement(&mut comm)?;
    }
    p.spec.comm = CommTable::validate(&comm, &p.spec.actions)?;
    Ok(p.spec)
}

/// Parses a process term against the declarations of `spec`.
pub fn parse_proc(text: &str, spec: &Spec) -> Result<ProcTerm> {
    let mut p = Parser::new(text, spec.clone())?;
    let t = p.alt()?;
    p.expect(Tok::Eof)?;
    Ok(t)
}

/// Parses a formula over the signature of `spec`.
pub fn parse_formula(text: &str, spec: &Spec) -> Result<Formula> {
    let mut p = Parser::new(text, spec.clone())?;
    let f = p.formula()?;
    p.expect(Tok::Eof)?;
    Ok(f)
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    spec: Spec,
    /// Variables of the recursive specification being parsed.
    vars: BTreeSet<String>,
}

fn further(a: Error, b: Error) -> Error {
    match (a.pos(), b.pos()) {
        (Some(pa), Some(pb)) if pa > pb => a,
        _ => b,
    }
}

impl Parser {
    fn new(text: &str, spec: Spec) -> Result<Self> {
        Ok(Parser {
            toks: tokenize(text)?,
            i: 0,
            spec,
            vars: BTreeSet::new(),
        })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.i].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.i].pos
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.i].tok.clone();
        if self.i + 1 < self.toks.len() {
            self.i += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if self.peek() == tok {
            self.bump();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: Tok) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            self.error(format!("expected {tok}, found {}", self.peek()))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(name) => {
                self.bump();
                Ok(name)
            }
            other => self.error(format!("expected an identifier, found {other}")),
        }
    }

    fn keyword(&mut self, kw: &str) -> Result<()> {
        match self.peek() {
            Tok::Ident(name) if name == kw => {
                self.bump();
                Ok(())
            }
            other => self.error(format!("expected `{kw}`, found {other}")),
        }
    }

    fn number(&mut self) -> Result<u64> {
        match self.peek().clone() {
            Tok::Number(n) => {
                self.bump();
                Ok(n)
            }
            other => self.error(format!("expected a number, found {other}")),
        }
    }

    /// Comma-separated identifiers; the list may be empty when followed by
    /// `end`.
    fn ident_list(&mut self, end: &Tok) -> Result<Vec<(String, Pos)>> {
        let mut out = Vec::new();
        if self.peek() == end {
            return Ok(out);
        }
        loop {
            let pos = self.pos();
            out.push((self.ident()?, pos));
            if !self.eat(&Tok::Comma) {
                return Ok(out);
            }
        }
    }

    fn is_term_name(&self, name: &str) -> bool {
        self.spec.signature.contains(name)
            || self.spec.is_action(name)
            || self.spec.def(name).is_some()
    }

    /// Rejects reserved words and names already used by an atom, action or
    /// named process.
    fn fresh_name(&self, name: &str, pos: Pos) -> Result<()> {
        if RESERVED.contains(&name) {
            return Err(Error::Parse {
                pos,
                msg: format!("`{name}` is a reserved word"),
            });
        }
        if self.is_term_name(name) {
            return Err(Error::Parse {
                pos,
                msg: format!("`{name}` is already declared"),
            });
        }
        Ok(())
    }

    fn action(&mut self) -> Result<Action> {
        let pos = self.pos();
        let name = self.ident()?;
        if self.spec.is_action(&name) {
            Ok(Action::new(&name))
        } else {
            Err(Error::Unresolved { pos, name })
        }
    }

    /// An action or `delta`.
    fn action_or_delta(&mut self) -> Result<Option<Action>> {
        if matches!(self.peek(), Tok::Ident(n) if n == "delta") {
            self.bump();
            Ok(None)
        } else {
            self.action().map(Some)
        }
    }

    fn statement(&mut self, comm: &mut Vec<CommEntry>) -> Result<()> {
        let pos = self.pos();
        let kw = self.ident()?;
        match kw.as_str() {
            "props" => {
                let names = self.ident_list(&Tok::Semi)?;
                self.expect(Tok::Semi)?;
                let mut atoms = self.spec.signature.atoms().to_vec();
                for (name, pos) in names {
                    self.fresh_name(&name, pos)?;
                    if atoms.contains(&name) {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("`{name}` is already declared"),
                        });
                    }
                    atoms.push(name);
                }
                self.spec.signature = Signature::with_cap(atoms, self.spec.limits.atom_cap)?;
            }
            "actions" => {
                let names = self.ident_list(&Tok::Semi)?;
                self.expect(Tok::Semi)?;
                for (name, pos) in names {
                    self.fresh_name(&name, pos)?;
                    self.spec.actions.push(Action::new(&name));
                }
            }
            "comm" => {
                let left = self.action()?;
                self.expect(Tok::Bar)?;
                let right = self.action()?;
                self.expect(Tok::Eq)?;
                let result = self.action_or_delta()?;
                self.expect(Tok::Semi)?;
                comm.push(CommEntry {
                    left,
                    right,
                    result,
                });
            }
            "statespace" => self.statespace()?,
            "recspec" => self.recspec()?,
            "proc" => {
                let pos = self.pos();
                let name = self.ident()?;
                self.fresh_name(&name, pos)?;
                self.expect(Tok::Eq)?;
                let body = self.alt()?;
                self.expect(Tok::Semi)?;
                self.spec.defs.push((name, body));
            }
            "query" => {
                let q = self.query()?;
                self.expect(Tok::Semi)?;
                self.spec.queries.push(q);
            }
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown statement `{kw}`"),
                })
            }
        }
        Ok(())
    }

    fn state_name(&mut self, space: &StateSpace) -> Result<String> {
        let pos = self.pos();
        let name = self.ident()?;
        if space.contains(&name) {
            Ok(name)
        } else {
            Err(Error::Unresolved { pos, name })
        }
    }

    fn statespace(&mut self) -> Result<()> {
        let name = self.ident()?;
        if self.spec.statespaces.iter().any(|s| s.name == name) {
            return self.error(format!("state space `{name}` is already declared"));
        }
        self.expect(Tok::LBrace)?;
        self.keyword("states")?;
        let mut space = StateSpace::new(&name, &[]);
        for (s, pos) in self.ident_list(&Tok::Semi)? {
            if RESERVED.contains(&s.as_str())
                || space.contains(&s)
                || self.spec.state_space(&s).is_some()
            {
                return Err(Error::Parse {
                    pos,
                    msg: format!("state `{s}` is already declared or reserved"),
                });
            }
            space.states.push(s);
        }
        self.expect(Tok::Semi)?;
        while !self.eat(&Tok::RBrace) {
            let pos = self.pos();
            let kw = self.ident()?;
            self.expect(Tok::LParen)?;
            match kw.as_str() {
                "sig" => {
                    let s = self.state_name(&space)?;
                    self.expect(Tok::RParen)?;
                    self.expect(Tok::Eq)?;
                    let f = self.formula()?;
                    if space.sig.insert(s.clone(), f).is_some() {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("duplicate sig({s})"),
                        });
                    }
                }
                "act" | "eff" => {
                    let a = self.action()?;
                    self.expect(Tok::Comma)?;
                    let s = self.state_name(&space)?;
                    self.expect(Tok::RParen)?;
                    self.expect(Tok::Eq)?;
                    let key = (a.clone(), s.clone());
                    let dup = if kw == "act" {
                        let b = self.action_or_delta()?;
                        space.act.insert(key, b).is_some()
                    } else {
                        let t = self.state_name(&space)?;
                        space.eff.insert(key, t).is_some()
                    };
                    if dup {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("duplicate {kw}({a}, {s})"),
                        });
                    }
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("expected `sig`, `act` or `eff`, found `{kw}`"),
                    })
                }
            }
            self.expect(Tok::Semi)?;
        }
        self.spec.statespaces.push(space);
        Ok(())
    }

    fn recspec(&mut self) -> Result<()> {
        let name = self.ident()?;
        if self.spec.recspec(&name).is_some() {
            return self.error(format!(
                "recursive specification `{name}` is already declared"
            ));
        }
        self.expect(Tok::LBrace)?;
        // Collect the bound variables first so that equations may refer
        // forward.
        let mut depth = 0usize;
        let mut k = self.i;
        let mut at_start = true;
        let mut vars = BTreeSet::new();
        loop {
            match &self.toks[k].tok {
                Tok::Eof => break,
                Tok::RBrace if depth == 0 => break,
                Tok::LBrace => depth += 1,
                Tok::RBrace => depth -= 1,
                Tok::Ident(x) if at_start && self.toks[k + 1].tok == Tok::Eq => {
                    let pos = self.toks[k].pos;
                    self.fresh_name(x, pos)?;
                    if !vars.insert(x.clone()) {
                        return Err(Error::Parse {
                            pos,
                            msg: format!("variable `{x}` has two equations"),
                        });
                    }
                }
                _ => {}
            }
            at_start = depth == 0 && self.toks[k].tok == Tok::Semi;
            k += 1;
        }
        self.vars = vars;
        let mut equations = Vec::new();
        while !self.eat(&Tok::RBrace) {
            let x = self.ident()?;
            self.expect(Tok::Eq)?;
            let body = self.alt()?;
            self.expect(Tok::Semi)?;
            equations.push((x, body));
        }
        self.vars.clear();
        let rs = RecSpec::new(&name, equations);
        recspec::check_guarded(&rs)?;
        self.spec.recspecs.push(rs);
        Ok(())
    }

    fn def_name(&mut self) -> Result<String> {
        let pos = self.pos();
        let name = self.ident()?;
        if self.spec.def(&name).is_some() {
            Ok(name)
        } else {
            Err(Error::Unresolved { pos, name })
        }
    }

    fn query(&mut self) -> Result<Query> {
        let pos = self.pos();
        let kind = self.ident()?;
        Ok(match kind.as_str() {
            "taut" => Query::Taut(self.formula()?),
            "consistent" => Query::Consistent(self.formula()?),
            "equiv" => {
                let a = self.formula()?;
                self.expect(Tok::Comma)?;
                Query::Equiv(a, self.formula()?)
            }
            "entails" => {
                let goal = self.formula()?;
                let mut premises = Vec::new();
                if matches!(self.peek(), Tok::Ident(w) if w == "from") {
                    self.bump();
                    premises.push(self.formula()?);
                    while self.eat(&Tok::Comma) {
                        premises.push(self.formula()?);
                    }
                }
                Query::Entails { premises, goal }
            }
            "normalize" => Query::Normalize(self.def_name()?),
            "signal" => Query::Signal(self.def_name()?),
            "lts" => Query::Lts(self.def_name()?),
            "bisim" | "eq" => {
                let a = self.def_name()?;
                self.expect(Tok::Comma)?;
                let b = self.def_name()?;
                if kind == "bisim" {
                    Query::Bisim(a, b)
                } else {
                    Query::Eq(a, b)
                }
            }
            "axioms" => {
                let (mut samples, mut size, mut seed) = (DEFAULT_SAMPLES, DEFAULT_SIZE, 0u64);
                while let Tok::Ident(opt) = self.peek().clone() {
                    self.bump();
                    match opt.as_str() {
                        "samples" => samples = self.number()? as usize,
                        "size" => size = self.number()? as usize,
                        "seed" => seed = self.number()?,
                        _ => return self.error(format!("unknown axioms option `{opt}`")),
                    }
                }
                Query::Axioms {
                    samples,
                    size,
                    seed,
                }
            }
            "lint" => Query::Lint,
            _ => {
                return Err(Error::Parse {
                    pos,
                    msg: format!("unknown query `{kind}`"),
                })
            }
        })
    }

    // ----- formulas -----

    fn formula(&mut self) -> Result<Formula> {
        let lhs = self.disjunction()?;
        if self.eat(&Tok::Implies) {
            Ok(Formula::implies(lhs, self.formula()?))
        } else {
            Ok(lhs)
        }
    }

    fn disjunction(&mut self) -> Result<Formula> {
        let mut f = self.conjunction()?;
        while self.eat(&Tok::Or) {
            f = Formula::or(f, self.conjunction()?);
        }
        Ok(f)
    }

    fn conjunction(&mut self) -> Result<Formula> {
        let mut f = self.negation()?;
        while self.eat(&Tok::And) {
            f = Formula::and(f, self.negation()?);
        }
        Ok(f)
    }

    fn negation(&mut self) -> Result<Formula> {
        if self.eat(&Tok::Tilde) {
            return Ok(Formula::not(self.negation()?));
        }
        let pos = self.pos();
        match self.bump() {
            Tok::LParen => {
                let f = self.formula()?;
                self.expect(Tok::RParen)?;
                Ok(f)
            }
            Tok::Ident(name) => match name.as_str() {
                "tt" => Ok(Formula::truth()),
                "ff" => Ok(Formula::Falsity),
                "Cons" => {
                    self.expect(Tok::LParen)?;
                    let f = self.formula()?;
                    self.expect(Tok::RParen)?;
                    Ok(Formula::cons(f))
                }
                _ if self.spec.signature.contains(&name) => Ok(Formula::atom(name)),
                _ => Err(Error::Unresolved { pos, name }),
            },
            other => Err(Error::Parse {
                pos,
                msg: format!("expected a formula, found {other}"),
            }),
        }
    }

    // ----- processes -----

    fn alt(&mut self) -> Result<ProcTerm> {
        let mut t = self.merge()?;
        while self.eat(&Tok::Plus) {
            t = ProcTerm::alt(t, self.merge()?);
        }
        Ok(t)
    }

    fn merge(&mut self) -> Result<ProcTerm> {
        let mut t = self.prefix()?;
        let mut op: Option<Tok> = None;
        while matches!(self.peek(), Tok::Par | Tok::LeftMerge | Tok::Bar) {
            let tok = self.peek().clone();
            if let Some(prev) = &op {
                if *prev != tok {
                    return self.error(format!(
                        "mixed merge operators {prev} and {tok} need parentheses"
                    ));
                }
            }
            self.bump();
            let rhs = self.prefix()?;
            t = match tok {
                Tok::Par => ProcTerm::par(t, rhs),
                Tok::LeftMerge => ProcTerm::left_merge(t, rhs),
                _ => ProcTerm::comm_merge(t, rhs),
            };
            op = Some(tok);
        }
        Ok(t)
    }

    fn prefix(&mut self) -> Result<ProcTerm> {
        let start = self.i;
        let formula_err = match self.formula() {
            Ok(phi) => match self.peek() {
                Tok::Guard => {
                    self.bump();
                    return Ok(ProcTerm::guard(phi, self.prefix()?));
                }
                Tok::Caret => {
                    self.bump();
                    return Ok(ProcTerm::emit(phi, self.prefix()?));
                }
                other => Error::Parse {
                    pos: self.pos(),
                    msg: format!("expected `:->` or `^` after a formula, found {other}"),
                },
            },
            Err(e) => e,
        };
        self.i = start;
        self.seq().map_err(|e| further(formula_err, e))
    }

    fn seq(&mut self) -> Result<ProcTerm> {
        let mut t = self.primary()?;
        while self.eat(&Tok::Dot) {
            t = ProcTerm::seq(t, self.primary()?);
        }
        Ok(t)
    }

    fn primary(&mut self) -> Result<ProcTerm> {
        let pos = self.pos();
        match self.bump() {
            Tok::LParen => {
                let t = self.alt()?;
                self.expect(Tok::RParen)?;
                Ok(t)
            }
            Tok::Lt => {
                let vpos = self.pos();
                let var = self.ident()?;
                self.expect(Tok::Bar)?;
                let spos = self.pos();
                let spec = self.ident()?;
                self.expect(Tok::Gt)?;
                let rs = self.spec.recspec(&spec).ok_or(Error::Unresolved {
                    pos: spos,
                    name: spec.clone(),
                })?;
                if rs.rhs(&var).is_none() {
                    return Err(Error::Unresolved {
                        pos: vpos,
                        name: var,
                    });
                }
                Ok(ProcTerm::rec(&var, &spec))
            }
            Tok::Ident(name) => match name.as_str() {
                "delta" => Ok(ProcTerm::Delta),
                "nex" => Ok(ProcTerm::Nex),
                "encap" => {
                    self.expect(Tok::LBrace)?;
                    let mut h = BTreeSet::new();
                    for (a, pos) in self.ident_list(&Tok::RBrace)? {
                        if !self.spec.is_action(&a) {
                            return Err(Error::Unresolved { pos, name: a });
                        }
                        h.insert(Action::new(&a));
                    }
                    self.expect(Tok::RBrace)?;
                    self.expect(Tok::LParen)?;
                    let t = self.alt()?;
                    self.expect(Tok::RParen)?;
                    Ok(ProcTerm::Encap(h, Box::new(t)))
                }
                "state" => {
                    self.expect(Tok::LBracket)?;
                    let spos = self.pos();
                    let s = self.ident()?;
                    if self.spec.state_space(&s).is_none() {
                        return Err(Error::Unresolved { pos: spos, name: s });
                    }
                    self.expect(Tok::RBracket)?;
                    self.expect(Tok::LParen)?;
                    let t = self.alt()?;
                    self.expect(Tok::RParen)?;
                    Ok(ProcTerm::state(&s, t))
                }
                _ if self.vars.contains(&name) => Ok(ProcTerm::Var(name)),
                _ if self.spec.is_action(&name) => Ok(ProcTerm::act(&name)),
                _ => match self.spec.def(&name) {
                    Some(t) => Ok(t.clone()),
                    None if self.spec.signature.contains(&name)
                        || RESERVED.contains(&name.as_str()) =>
                    {
                        Err(Error::Parse {
                            pos,
                            msg: format!("`{name}` is not a process"),
                        })
                    }
                    None => Err(Error::Unresolved { pos, name }),
                },
            },
            other => Err(Error::Parse {
                pos,
                msg: format!("expected a process, found {other}"),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::pretty::pretty;

    fn demo() -> Spec {
        parse_spec(
            "props P, Q;\nactions a, b, c, d;\ncomm b | c = d;\n\
             statespace mem { states s0, s1; sig(s0) = P; act(a, s0) = b; eff(a, s0) = s1; sig(s1) = Q; }\n\
             recspec E { X = a . Y; Y = b . X; }\n\
             proc M = P :-> a;",
        )
        .unwrap()
    }

    #[test]
    fn parses_example_spec() {
        let s = parse_spec("actions a; props P; proc M = P :-> a;").unwrap();
        assert_eq!(
            s.def("M"),
            Some(&ProcTerm::guard(Formula::atom("P"), ProcTerm::act("a")))
        );
    }

    #[test]
    fn unresolved_names_are_reported_with_position() {
        let err = parse_spec("actions a;\nproc M = a . z;").unwrap_err();
        assert_eq!(
            err,
            Error::Unresolved {
                pos: Pos { line: 2, col: 14 },
                name: "z".into()
            }
        );
    }

    #[test]
    fn comm_is_completed() {
        let s = demo();
        assert_eq!(s.comm.get(&"c".into(), &"b".into()), Some(Action::new("d")));
    }

    #[test]
    fn precedence() {
        let s = demo();
        let t = parse_proc("P :-> a . b + c", &s).unwrap();
        let expect = ProcTerm::alt(
            ProcTerm::guard(
                Formula::atom("P"),
                ProcTerm::seq(ProcTerm::act("a"), ProcTerm::act("b")),
            ),
            ProcTerm::act("c"),
        );
        assert_eq!(t, expect);
        assert_eq!(
            parse_proc("tt ^ delta", &s).unwrap(),
            ProcTerm::emit(Formula::truth(), ProcTerm::Delta)
        );
        assert!(parse_proc("a || b | c", &s).is_err());
        assert!(parse_proc("(a || b) | c", &s).is_ok());
        assert_eq!(
            parse_proc("a . b . c", &s).unwrap(),
            ProcTerm::seq(
                ProcTerm::seq(ProcTerm::act("a"), ProcTerm::act("b")),
                ProcTerm::act("c")
            )
        );
    }

    #[test]
    fn formulas() {
        let s = demo();
        let f = parse_formula("P => Q => ~P \\/ Q /\\ P", &s).unwrap();
        let p = || Formula::atom("P");
        let q = || Formula::atom("Q");
        assert_eq!(
            f,
            Formula::implies(
                p(),
                Formula::implies(q(), Formula::or(Formula::not(p()), Formula::and(q(), p())))
            )
        );
        assert_eq!(parse_formula("Cons(P)", &s).unwrap(), Formula::cons(p()));
        assert!(parse_formula("R", &s).is_err());
    }

    #[test]
    fn definitions_are_expanded() {
        let s = parse_spec("actions a, b; proc A = a + b; proc B = A . A;").unwrap();
        let ab = ProcTerm::alt(ProcTerm::act("a"), ProcTerm::act("b"));
        assert_eq!(s.def("B"), Some(&ProcTerm::seq(ab.clone(), ab)));
    }

    #[test]
    fn recspec_blocks() {
        let s = demo();
        let e = s.recspec("E").unwrap();
        assert_eq!(
            e.rhs("X"),
            Some(&ProcTerm::seq(
                ProcTerm::act("a"),
                ProcTerm::Var("Y".into())
            ))
        );
        let t = parse_proc("<X | E> . a", &s).unwrap();
        assert_eq!(
            t,
            ProcTerm::seq(ProcTerm::rec("X", "E"), ProcTerm::act("a"))
        );
        assert!(parse_proc("<Z | E>", &s).is_err());
        assert!(parse_proc("X", &s).is_err());
        let err = parse_spec("actions a; recspec E { X = X + a; }").unwrap_err();
        assert!(matches!(err, Error::Unguarded { .. }), "{err:?}");
    }

    #[test]
    fn statespaces() {
        let s = demo();
        let m = s.state_space("s1").unwrap();
        assert_eq!(m.eff(&"a".into(), "s0"), "s1");
        assert_eq!(m.act(&"a".into(), "s0"), Some(Action::new("b")));
        assert!(parse_proc("state[s9](a)", &s).is_err());
        assert!(
            parse_spec("actions a; statespace m { states s; } statespace n { states s; }").is_err()
        );
    }

    #[test]
    fn rejects_bad_input() {
        for bad in [
            "actions a, a;",
            "props P; actions P;",
            "actions delta;",
            "actions a; comm a | a = a; comm a | a = delta;",
            "proc M = ;",
            "query frobnicate;",
            "props P; proc M = P;",
        ] {
            assert!(parse_spec(bad).is_err(), "{bad}");
        }
        let err = parse_spec("actions a, b; comm a | a = b; comm a | b = a;").unwrap_err();
        assert!(matches!(err, Error::Comm(_)));
    }

    #[test]
    fn atom_cap_is_enforced() {
        let limits = Limits {
            atom_cap: 2,
            ..Limits::default()
        };
        let err = parse_spec_with("props A, B, C;", limits).unwrap_err();
        assert!(err.is_resource());
    }

    #[test]
    fn queries_round_trip() {
        let text = "props P, Q;\nactions a;\nproc M = a;\nproc N = P :-> a;\n\
                    query taut P \\/ ~P;\nquery equiv P, Q;\nquery consistent P;\n\
                    query entails Q from P, ~P;\nquery entails tt;\nquery normalize M;\nquery signal N;\n\
                    query lts M;\nquery bisim M, N;\nquery eq M, N;\nquery axioms samples 5 size 4 seed 9;\nquery lint;\n";
        let s = parse_spec(text).unwrap();
        assert_eq!(s.queries.len(), 12);
        assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn spec_round_trip() {
        let s = demo();
        assert_eq!(parse_spec(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn pretty_round_trip_examples() {
        let s = demo();
        for text in [
            "a + delta",
            "(P /\\ Q) :-> a",
            "encap{a}(a || b)",
            "encap{}(a ||_ b)",
            "state[s0](a . a)",
            "P ^ Q :-> a . (b + c) || nex",
            "~P => ff :-> a | b | c",
            "(a + b) . (c + d)",
            "<X | E> + <Y | E> . a",
        ] {
            let t = parse_proc(text, &s).unwrap();
            assert_eq!(parse_proc(&pretty(&t), &s).unwrap(), t, "{text}");
        }
    }
}
