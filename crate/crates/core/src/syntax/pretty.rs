//! Rendering of process terms in the concrete syntax accepted by the parser.
//!
//! Levels, loosest first: `+`, the merges, the prefix operators `:->` and
//! `^`, `.`, primaries. Output re-parses to the same tree.

use std::fmt::{self, Write};

use super::term::ProcTerm;
use crate::logic::Formula;

const ALT: u8 = 1;
const MERGE: u8 = 2;
const PREFIX: u8 = 3;
const SEQ: u8 = 4;
const PRIMARY: u8 = 5;

fn level(p: &ProcTerm) -> u8 {
    match p {
        ProcTerm::Alt(..) => ALT,
        ProcTerm::Par(..) | ProcTerm::LeftMerge(..) | ProcTerm::CommMerge(..) => MERGE,
        ProcTerm::Guard(..) | ProcTerm::Emit(..) => PREFIX,
        ProcTerm::Seq(..) => SEQ,
        _ => PRIMARY,
    }
}

fn merge_symbol(p: &ProcTerm) -> Option<&'static str> {
    match p {
        ProcTerm::Par(..) => Some("||"),
        ProcTerm::LeftMerge(..) => Some("||_"),
        ProcTerm::CommMerge(..) => Some("|"),
        _ => None,
    }
}

pub(crate) fn write_formula_operand<W: Write>(w: &mut W, phi: &Formula) -> fmt::Result {
    if phi.is_simple() {
        write!(w, "{phi}")
    } else {
        write!(w, "({phi})")
    }
}

pub(crate) fn write_term<W: Write>(w: &mut W, p: &ProcTerm, min: u8) -> fmt::Result {
    if level(p) < min {
        w.write_char('(')?;
        write_term(w, p, 0)?;
        return w.write_char(')');
    }
    match p {
        ProcTerm::Delta => w.write_str("delta"),
        ProcTerm::Nex => w.write_str("nex"),
        ProcTerm::Act(a) => w.write_str(a.name()),
        ProcTerm::Var(x) => w.write_str(x),
        ProcTerm::Rec { var, spec } => write!(w, "<{var} | {spec}>"),
        ProcTerm::Alt(a, b) => {
            write_term(w, a, ALT)?;
            w.write_str(" + ")?;
            write_term(w, b, MERGE)
        }
        ProcTerm::Par(a, b) | ProcTerm::LeftMerge(a, b) | ProcTerm::CommMerge(a, b) => {
            let sym = merge_symbol(p).expect("merge node");
            // chains of one merge operator associate to the left
            let left_min = if merge_symbol(a) == Some(sym) {
                MERGE
            } else {
                PREFIX
            };
            write_term(w, a, left_min)?;
            write!(w, " {sym} ")?;
            write_term(w, b, PREFIX)
        }
        ProcTerm::Guard(phi, body) | ProcTerm::Emit(phi, body) => {
            write_formula_operand(w, phi)?;
            w.write_str(if matches!(p, ProcTerm::Guard(..)) {
                " :-> "
            } else {
                " ^ "
            })?;
            write_term(w, body, PREFIX)
        }
        ProcTerm::Seq(a, b) => {
            write_term(w, a, SEQ)?;
            w.write_str(" . ")?;
            write_term(w, b, PRIMARY)
        }
        ProcTerm::Encap(h, body) => {
            w.write_str("encap{")?;
            for (i, a) in h.iter().enumerate() {
                if i > 0 {
                    w.write_str(", ")?;
                }
                w.write_str(a.name())?;
            }
            w.write_str("}(")?;
            write_term(w, body, 0)?;
            w.write_char(')')
        }
        ProcTerm::State(s, body) => {
            write!(w, "state[{s}](")?;
            write_term(w, body, 0)?;
            w.write_char(')')
        }
    }
}

/// Concrete-syntax rendering of a term.
pub fn pretty(p: &ProcTerm) -> String {
    let mut out = String::new();
    write_term(&mut out, p, 0).expect("writing to a String");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::term::Action;

    #[test]
    fn renders_examples() {
        assert_eq!(
            pretty(&ProcTerm::alt(ProcTerm::act("a"), ProcTerm::Delta)),
            "a + delta"
        );
        let pq = Formula::and(Formula::atom("P"), Formula::atom("Q"));
        assert_eq!(
            pretty(&ProcTerm::guard(pq, ProcTerm::act("a"))),
            "(P /\\ Q) :-> a"
        );
        let t = ProcTerm::encap(
            [Action::new("a")],
            ProcTerm::par(ProcTerm::act("a"), ProcTerm::act("b")),
        );
        assert_eq!(pretty(&t), "encap{a}(a || b)");
    }

    #[test]
    fn parenthesizes_where_needed() {
        let a = || ProcTerm::act("a");
        let b = || ProcTerm::act("b");
        assert_eq!(
            pretty(&ProcTerm::seq(a(), ProcTerm::seq(b(), a()))),
            "a . (b . a)"
        );
        assert_eq!(
            pretty(&ProcTerm::seq(ProcTerm::seq(a(), b()), a())),
            "a . b . a"
        );
        assert_eq!(
            pretty(&ProcTerm::par(ProcTerm::comm_merge(a(), b()), a())),
            "(a | b) || a"
        );
        assert_eq!(
            pretty(&ProcTerm::seq(
                ProcTerm::guard(Formula::atom("P"), a()),
                b()
            )),
            "(P :-> a) . b"
        );
        assert_eq!(
            pretty(&ProcTerm::guard(
                Formula::atom("P"),
                ProcTerm::alt(a(), b())
            )),
            "P :-> (a + b)"
        );
        assert_eq!(
            pretty(&ProcTerm::emit(Formula::truth(), ProcTerm::Delta)),
            "tt ^ delta"
        );
    }
}
