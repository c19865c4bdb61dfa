use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use ctacp_core::bisim::compare_terms;
use ctacp_core::bisim::suite::axiom_soundness_suite;
use ctacp_core::normalize::{reduce_basic, Normalizer};
use ctacp_core::sos::build_lts_with;
use ctacp_core::syntax::{parse_formula, parse_proc, Query};
use ctacp_core::{Error, Formula, Limits, ProcTerm, Spec};

use crate::Command;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }

    fn word(self) -> &'static str {
        match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
        }
    }

    fn and(self, other: Verdict) -> Verdict {
        Verdict::from_bool(self == Verdict::Yes && other == Verdict::Yes)
    }
}

#[derive(Debug)]
pub enum Failure {
    /// Unreadable input, bad arguments or an invalid specification.
    Input(String),
    /// A budget or capacity was exhausted.
    Resource(String),
}

impl Failure {
    pub fn message(&self) -> &str {
        match self {
            Failure::Input(m) | Failure::Resource(m) => m,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Input(_) => 2,
            Failure::Resource(_) => 3,
        }
    }

    fn core(context: &str, e: Error) -> Self {
        let m = format!("{context}: {e}");
        if e.is_resource() {
            Failure::Resource(m)
        } else {
            Failure::Input(m)
        }
    }
}

type Outcome = Result<Verdict, Failure>;

fn load(path: &Path, limits: Limits) -> Result<Spec, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Spec::parse_with(&text, limits).map_err(|e| Failure::core(&path.display().to_string(), e))
}

fn formula(spec: &Spec, text: &str) -> Result<Formula, Failure> {
    parse_formula(text, spec).map_err(|e| Failure::core(&format!("formula `{text}`"), e))
}

/// A defined process name, or else a process term.
fn process(spec: &Spec, text: &str) -> Result<ProcTerm, Failure> {
    if let Some(p) = spec.def(text.trim()) {
        return Ok(p.clone());
    }
    parse_proc(text, spec).map_err(|e| Failure::core(&format!("process `{text}`"), e))
}

fn lift<T>(context: &str, r: ctacp_core::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| Failure::core(context, e))
}

/// Writes `text` with a final newline to `path`, or appends it to `out`
/// when `path` is `-`.
fn write_output(path: &Path, text: &str, out: &mut String) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    if path == Path::new("-") {
        out.push_str(&text);
        Ok(())
    } else {
        fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
    }
}

pub fn execute(command: &Command, limits: Limits, out: &mut String) -> Outcome {
    match command {
        Command::Check { file } => {
            let s = load(file, limits)?;
            check(&s, out)
        }
        Command::Taut { file, formula: f } => {
            let s = load(file, limits)?;
            taut(&s, &formula(&s, f)?, out)
        }
        Command::Equiv { file, formulas } => {
            let s = load(file, limits)?;
            let [a, b] = formulas.as_slice() else {
                return Err(Failure::Input(format!(
                    "equiv takes exactly two formulas, got {}",
                    formulas.len()
                )));
            };
            equiv(&s, &formula(&s, a)?, &formula(&s, b)?, out)
        }
        Command::Consistent { file, formula: f } => {
            let s = load(file, limits)?;
            consistent(&s, &formula(&s, f)?, out)
        }
        Command::Entails {
            file,
            premises,
            goal,
        } => {
            let s = load(file, limits)?;
            let premises = premises
                .iter()
                .map(|p| formula(&s, p))
                .collect::<Result<Vec<_>, _>>()?;
            entails(&s, &premises, &formula(&s, goal)?, out)
        }
        Command::Signal { file, process: p } => {
            let s = load(file, limits)?;
            signal(&s, &process(&s, p)?, out)
        }
        Command::Normalize {
            file,
            process: p,
            raw,
        } => {
            let s = load(file, limits)?;
            normalize(&s, &process(&s, p)?, *raw, out)
        }
        Command::Lts {
            file,
            process: p,
            json,
            dot,
        } => {
            let s = load(file, limits)?;
            let mut norm = Normalizer::new(&s);
            let lts = lift("lts", build_lts_with(&mut norm, &process(&s, p)?))?;
            writeln!(out, "states: {}", lts.state_count()).unwrap();
            writeln!(out, "transitions: {}", lts.transitions.len()).unwrap();
            if let Some(path) = json {
                write_output(path, &lts.to_json(), out)?;
            }
            if let Some(path) = dot {
                write_output(path, &lts.to_dot(), out)?;
            }
            Ok(Verdict::Yes)
        }
        Command::Bisim { file, left, right } => {
            let s = load(file, limits)?;
            bisim(&s, &process(&s, left)?, &process(&s, right)?, out)
        }
        Command::Eq { file, left, right } => {
            let s = load(file, limits)?;
            eq(&s, &process(&s, left)?, &process(&s, right)?, out)
        }
        Command::Axioms {
            file,
            samples,
            size,
            seed,
            json,
        } => {
            let s = load(file, limits)?;
            axioms(&s, *samples, *size, *seed, json.as_deref(), out)
        }
        Command::Lint { file } => {
            let s = load(file, limits)?;
            crate::lint::lint(&s, out)
        }
        Command::Run { file } => {
            let s = load(file, limits)?;
            run(&s, out)
        }
    }
}

fn check(s: &Spec, out: &mut String) -> Outcome {
    writeln!(
        out,
        "ok: {} atoms, {} actions, {} communications, {} state spaces, {} recursive specifications, {} processes, {} queries",
        s.signature.len(),
        s.actions.len(),
        s.comm.canonical_entries().len(),
        s.statespaces.len(),
        s.recspecs.len(),
        s.defs.len(),
        s.queries.len()
    )
    .unwrap();
    Ok(Verdict::Yes)
}

fn taut(s: &Spec, f: &Formula, out: &mut String) -> Outcome {
    let v = Verdict::from_bool(lift("taut", s.signature.is_tautology(f))?);
    writeln!(out, "tautology: {}", v.word()).unwrap();
    Ok(v)
}

fn equiv(s: &Spec, a: &Formula, b: &Formula, out: &mut String) -> Outcome {
    let v = Verdict::from_bool(lift("equiv", s.signature.lequiv(a, b))?);
    writeln!(out, "equivalent: {}", v.word()).unwrap();
    Ok(v)
}

fn consistent(s: &Spec, f: &Formula, out: &mut String) -> Outcome {
    let v = Verdict::from_bool(lift("consistent", s.signature.is_consistent(f))?);
    writeln!(out, "consistent: {}", v.word()).unwrap();
    Ok(v)
}

fn entails(s: &Spec, premises: &[Formula], goal: &Formula, out: &mut String) -> Outcome {
    let v = Verdict::from_bool(lift("entails", s.signature.entails(premises, goal))?);
    writeln!(out, "entails: {}", v.word()).unwrap();
    Ok(v)
}

fn signal(s: &Spec, p: &ProcTerm, out: &mut String) -> Outcome {
    let prop = lift("signal", Normalizer::new(s).root_signal(p))?;
    writeln!(out, "signal: {}", prop.formula()).unwrap();
    writeln!(out, "vector: {}", prop.vector()).unwrap();
    Ok(Verdict::Yes)
}

fn normalize(s: &Spec, p: &ProcTerm, raw: bool, out: &mut String) -> Outcome {
    let b = lift("normalize", Normalizer::new(s).to_basic(p))?;
    let b = if raw { b } else { reduce_basic(&b) };
    writeln!(out, "{b}").unwrap();
    Ok(Verdict::Yes)
}

fn bisim(s: &Spec, p: &ProcTerm, q: &ProcTerm, out: &mut String) -> Outcome {
    let mut norm = Normalizer::new(s);
    let c = lift("bisim", compare_terms(&mut norm, p, q))?;
    let v = Verdict::from_bool(c.report.equivalent);
    writeln!(out, "bisimilar: {}", v.word()).unwrap();
    if let Some(w) = &c.report.witness {
        writeln!(out, "witness:").unwrap();
        writeln!(
            out,
            "{}",
            w.render(|nu| s.signature.valuation(nu).to_string())
        )
        .unwrap();
    }
    Ok(v)
}

fn eq(s: &Spec, p: &ProcTerm, q: &ProcTerm, out: &mut String) -> Outcome {
    let v = Verdict::from_bool(lift("eq", Normalizer::new(s).decide_equal(p, q))?);
    writeln!(out, "equal: {}", v.word()).unwrap();
    Ok(v)
}

fn axioms(
    s: &Spec,
    samples: usize,
    size: usize,
    seed: u64,
    json: Option<&Path>,
    out: &mut String,
) -> Outcome {
    let report = lift("axioms", axiom_soundness_suite(s, samples, size, seed))?;
    out.push_str(&report.render());
    if let Some(path) = json {
        write_output(path, &report.to_json(), out)?;
    }
    Ok(Verdict::from_bool(report.all_passed()))
}

fn named(s: &Spec, name: &str) -> Result<ProcTerm, Failure> {
    s.def(name)
        .cloned()
        .ok_or_else(|| Failure::Input(format!("unknown process `{name}`")))
}

/// Runs every query of the file in order. The verdict is negative if any
/// query's is; the first error stops the run.
fn run(s: &Spec, out: &mut String) -> Outcome {
    let mut verdict = Verdict::Yes;
    for q in &s.queries {
        writeln!(out, "> {q}").unwrap();
        let v = match q {
            Query::Taut(f) => taut(s, f, out)?,
            Query::Equiv(a, b) => equiv(s, a, b, out)?,
            Query::Consistent(f) => consistent(s, f, out)?,
            Query::Entails { premises, goal } => entails(s, premises, goal, out)?,
            Query::Normalize(n) => normalize(s, &named(s, n)?, false, out)?,
            Query::Signal(n) => signal(s, &named(s, n)?, out)?,
            Query::Lts(n) => {
                let lts = lift(
                    "lts",
                    build_lts_with(&mut Normalizer::new(s), &named(s, n)?),
                )?;
                out.push_str(&lts.to_json());
                out.push('\n');
                Verdict::Yes
            }
            Query::Bisim(a, b) => bisim(s, &named(s, a)?, &named(s, b)?, out)?,
            Query::Eq(a, b) => eq(s, &named(s, a)?, &named(s, b)?, out)?,
            Query::Axioms {
                samples,
                size,
                seed,
            } => axioms(s, *samples, *size, *seed, None, out)?,
            Query::Lint => crate::lint::lint(s, out)?,
        };
        verdict = verdict.and(v);
    }
    if s.queries.is_empty() {
        writeln!(out, "no queries").unwrap();
    }
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> Spec {
        Spec::parse(
            "props P; actions a, b, c, d; comm b | c = d;\n\
             proc M1 = a . (P ^ b + ~P ^ c);\n\
             proc M2 = a . ((P /\\ ~P) ^ (b + c));\n\
             proc Del = delta;",
        )
        .unwrap()
    }

    #[test]
    fn verdicts_and_lines() {
        let s = spec();
        let mut out = String::new();
        let f = formula(&s, "P \\/ ~P").unwrap();
        assert_eq!(taut(&s, &f, &mut out).unwrap(), Verdict::Yes);
        let (m1, m2, del) = (
            named(&s, "M1").unwrap(),
            named(&s, "M2").unwrap(),
            named(&s, "Del").unwrap(),
        );
        assert_eq!(bisim(&s, &m1, &m2, &mut out).unwrap(), Verdict::Yes);
        assert_eq!(eq(&s, &m1, &del, &mut out).unwrap(), Verdict::No);
        assert_eq!(out, "tautology: yes\nbisimilar: yes\nequal: no\n");
    }

    #[test]
    fn processes_resolve_by_name_or_term() {
        let s = spec();
        assert_eq!(process(&s, "Del").unwrap(), ProcTerm::Delta);
        assert_eq!(process(&s, "a + b").unwrap().size(), 3);
        assert!(matches!(process(&s, "a +"), Err(Failure::Input(_))));
    }

    #[test]
    fn failures_map_to_exit_codes() {
        let budget = Error::Budget {
            what: "state",
            limit: 1,
            frontier: "x".into(),
        };
        assert_eq!(Failure::core("q", budget).exit_code(), 3);
        assert_eq!(
            Failure::core("q", Error::UnknownAtom("Z".into())).exit_code(),
            2
        );
    }
}
