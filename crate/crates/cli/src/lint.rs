//! Static checks on a validated specification.
//!
//! Warnings (the verdict turns negative) flag constructs that cannot
//! behave as written: guards that never hold and processes whose signal is
//! false-equivalent. Notes are informational.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use ctacp_core::normalize::Normalizer;
use ctacp_core::recspec::to_linear;
use ctacp_core::{Formula, ProcTerm, Spec};

use crate::commands::{Failure, Verdict};

fn collect(p: &ProcTerm, actions: &mut BTreeSet<String>, formulas: &mut Vec<Formula>) {
    match p {
        ProcTerm::Act(a) => {
            actions.insert(a.name().to_string());
        }
        ProcTerm::Encap(h, _) => actions.extend(h.iter().map(|a| a.name().to_string())),
        _ => {}
    }
    formulas.extend(p.formulas().into_iter().cloned());
    for c in p.children() {
        collect(c, actions, formulas);
    }
}

/// Every guard formula directly under a `:->` in `p`.
fn guards<'a>(p: &'a ProcTerm, out: &mut Vec<&'a Formula>) {
    if let ProcTerm::Guard(phi, _) = p {
        out.push(phi);
    }
    for c in p.children() {
        guards(c, out);
    }
}

pub fn lint(s: &Spec, out: &mut String) -> Result<Verdict, Failure> {
    let mut warnings = Vec::new();
    let mut notes = Vec::new();
    let mut norm = Normalizer::new(s);

    let mut bodies: Vec<(String, &ProcTerm)> = s
        .defs
        .iter()
        .map(|(n, p)| (format!("proc {n}"), p))
        .collect();
    for e in &s.recspecs {
        for (x, t) in &e.equations {
            bodies.push((format!("recspec {} equation {x}", e.name), t));
        }
    }

    for (owner, p) in &bodies {
        let mut gs = Vec::new();
        guards(p, &mut gs);
        for g in gs {
            let prop = s
                .signature
                .prop(g.clone())
                .map_err(|e| Failure::Input(format!("{owner}: {e}")))?;
            if prop.is_false_equiv() {
                warnings.push(format!("{owner}: guard `{g}` never holds"));
            }
        }
    }

    for (name, p) in &s.defs {
        match norm.root_signal(p) {
            Ok(sig) if sig.is_false_equiv() => warnings.push(format!(
                "proc {name}: signal is false-equivalent, so it behaves as nex"
            )),
            Ok(sig) if sig.vector().has_both() => notes.push(format!(
                "proc {name}: signal `{}` may be contradictory",
                sig.formula()
            )),
            Ok(_) => {}
            Err(e) => warnings.push(format!("proc {name}: {e}")),
        }
    }

    for e in &s.recspecs {
        match to_linear(s, &e.name) {
            Ok(l) => {
                let mut text = format!(
                    "recspec {}: linear form with {} equations",
                    e.name,
                    l.var_count()
                );
                for line in l.to_string().lines() {
                    text.push_str("\n    ");
                    text.push_str(line);
                }
                notes.push(text);
            }
            Err(err) => notes.push(format!("recspec {}: no finite linear form ({err})", e.name)),
        }
    }

    let mut used = BTreeSet::new();
    let mut formulas = Vec::new();
    for (_, p) in &bodies {
        collect(p, &mut used, &mut formulas);
    }
    for space in &s.statespaces {
        formulas.extend(space.sig.values().cloned());
    }
    for a in &s.actions {
        if !used.contains(a.name()) {
            notes.push(format!("action `{a}` does not occur in any process"));
        }
    }
    let atoms: BTreeSet<&str> = formulas.iter().flat_map(|f| f.atoms()).collect();
    for p in s.signature.atoms() {
        if !atoms.contains(p.as_str()) {
            notes.push(format!(
                "atom `{p}` does not occur in any process or state signal"
            ));
        }
    }

    for w in &warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    for n in &notes {
        writeln!(out, "note: {n}").unwrap();
    }
    writeln!(
        out,
        "lint: {} warnings, {} notes",
        warnings.len(),
        notes.len()
    )
    .unwrap();
    Ok(if warnings.is_empty() {
        Verdict::Yes
    } else {
        Verdict::No
    })
}
