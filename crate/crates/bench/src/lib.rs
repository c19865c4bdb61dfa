//! Benchmark workloads shared by the criterion benches.

use ctacp_core::gen::{self, TermGen};
use ctacp_core::{Formula, ProcTerm, Spec};

pub const SPEC: &str = "props P, Q, R; actions a, b, c, d; comm b | c = d;\n\
    statespace m { states s0, s1; sig(s0) = P; sig(s1) = ~Q;\n\
    act(a, s0) = b; eff(a, s0) = s1; }\n\
    recspec E { X = P :-> a . Y + b . X; Y = ~P ^ (c . X + d); }";

pub fn spec() -> Spec {
    Spec::parse(SPEC).expect("benchmark specification parses")
}

/// `n` random formulas of the given depth over the atoms of [`SPEC`].
pub fn formulas(n: usize, depth: usize, seed: u64) -> Vec<Formula> {
    let atoms = spec().signature.atoms().to_vec();
    let mut rng = gen::rng(seed);
    (0..n)
        .map(|_| gen::formula(&mut rng, &atoms, depth))
        .collect()
}

/// `n` random closed terms of at most `size` nodes.
pub fn terms(n: usize, size: usize, seed: u64) -> Vec<ProcTerm> {
    let s = spec();
    let g = TermGen::for_spec(&s);
    let mut rng = gen::rng(seed);
    (0..n).map(|_| g.term(&mut rng, size)).collect()
}

/// `k` copies of `P ^ b . c + ~P :-> c` in parallel, whose state space
/// grows exponentially in `k`.
pub fn parallel(k: usize) -> ProcTerm {
    let s = spec();
    let unit = ctacp_core::syntax::parse_proc("P ^ b . c + ~P :-> c", &s).expect("parses");
    (1..k).fold(unit.clone(), |acc, _| ProcTerm::par(acc, unit.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_well_formed() {
        let s = spec();
        assert_eq!(formulas(5, 3, 1).len(), 5);
        for t in terms(20, 10, 2) {
            s.check_term(&t).unwrap();
        }
        assert_eq!(parallel(3).size(), 3 * parallel(1).size() + 2);
    }
}
