use proptest::prelude::*;

use ctacp_core::bisim::bisimilar;
use ctacp_core::bisim::suite::axioms;
use ctacp_core::gen::{self, TermGen};
use ctacp_core::normalize::{normal_form, reduce_basic, Normalizer};
use ctacp_core::recspec::{check_guarded, RecSpec};
use ctacp_core::sos::{build_lts, Semantics};
use ctacp_core::syntax::{parse_formula, parse_proc};
use ctacp_core::{Action, Formula, ProcTerm, Spec};

const SPEC: &str = "props P, Q; actions a, b, c; comm a | b = c;\n\
    statespace m { states s0, s1; sig(s0) = P; sig(s1) = ~Q;\n\
    act(a, s0) = b; eff(a, s0) = s1; act(b, s1) = delta; eff(c, s1) = s0; }";

fn spec() -> Spec {
    Spec::parse(SPEC).unwrap()
}

fn formula() -> impl Strategy<Value = Formula> {
    let leaf = prop_oneof![
        Just(Formula::atom("P")),
        Just(Formula::atom("Q")),
        Just(Formula::Falsity),
        Just(Formula::truth()),
    ];
    leaf.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::and(a, b)),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::or(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Formula::implies(a, b)),
        ]
    })
}

fn action() -> impl Strategy<Value = Action> {
    prop_oneof![Just("a"), Just("b"), Just("c")].prop_map(Action::new)
}

fn term() -> impl Strategy<Value = ProcTerm> {
    let leaf = prop_oneof![
        1 => Just(ProcTerm::Delta),
        1 => Just(ProcTerm::Nex),
        6 => action().prop_map(ProcTerm::Act),
    ];
    leaf.prop_recursive(4, 16, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ProcTerm::alt(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ProcTerm::seq(x, y)),
            (formula(), inner.clone()).prop_map(|(f, x)| ProcTerm::guard(f, x)),
            (formula(), inner.clone()).prop_map(|(f, x)| ProcTerm::emit(f, x)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ProcTerm::par(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ProcTerm::left_merge(x, y)),
            (inner.clone(), inner.clone()).prop_map(|(x, y)| ProcTerm::comm_merge(x, y)),
            (prop::collection::vec(action(), 0..3), inner.clone())
                .prop_map(|(h, x)| ProcTerm::encap(h, x)),
            (prop_oneof![Just("s0"), Just("s1")], inner).prop_map(|(s, x)| ProcTerm::state(s, x)),
        ]
    })
}

/// The canonical basic form of `p` as a term; bisimilar to `p`.
fn canonical(s: &Spec, p: &ProcTerm) -> ProcTerm {
    normal_form(s, p).unwrap().embed()
}

fn bisim(s: &Spec, p: &ProcTerm, q: &ProcTerm) -> bool {
    bisimilar(s, p, q).unwrap().equivalent
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn printing_round_trips(p in term(), f in formula()) {
        let s = spec();
        prop_assert_eq!(parse_proc(&p.to_string(), &s).unwrap(), p);
        prop_assert_eq!(parse_formula(&f.to_string(), &s).unwrap(), f);
    }

    #[test]
    fn canonicalization_is_idempotent(p in term()) {
        let s = spec();
        let b = normal_form(&s, &p).unwrap();
        prop_assert_eq!(reduce_basic(&b), b.clone());
        prop_assert_eq!(normal_form(&s, &b.embed()).unwrap(), b);
    }

    #[test]
    fn canonical_form_ignores_summand_order(x in term(), y in term(), z in term()) {
        let s = spec();
        let nf = |t: ProcTerm| normal_form(&s, &t).unwrap();
        prop_assert_eq!(nf(ProcTerm::alt(x.clone(), y.clone())), nf(ProcTerm::alt(y.clone(), x.clone())));
        prop_assert_eq!(
            nf(ProcTerm::alt(ProcTerm::alt(x.clone(), y.clone()), z.clone())),
            nf(ProcTerm::alt(x, ProcTerm::alt(y, z)))
        );
    }

    #[test]
    fn signals_agree(p in term()) {
        let s = spec();
        let mut norm = Normalizer::new(&s);
        let root = norm.root_signal(&p).unwrap();
        prop_assert_eq!(Semantics::new(&s).signal(&p).unwrap(), root.clone());
        let basic = norm.to_basic(&p).unwrap();
        prop_assert_eq!(basic.0.signal(s.signature.valuation_count()), root);
    }

    #[test]
    fn lts_states_carry_their_signals(p in term()) {
        let s = spec();
        let lts = build_lts(&s, &p).unwrap();
        prop_assert!(lts.audit().is_ok());
        let mut norm = Normalizer::new(&s);
        for st in &lts.states {
            if let Some(t) = &st.term {
                prop_assert_eq!(&st.signal, &norm.root_signal(t).unwrap());
            }
        }
        prop_assert_eq!(&lts.states[lts.initial].signal, &norm.root_signal(&p).unwrap());
    }

    #[test]
    fn bisimilarity_is_an_equivalence(p in term(), q in term()) {
        let s = spec();
        prop_assert!(bisim(&s, &p, &p));
        prop_assert_eq!(bisim(&s, &p, &q), bisim(&s, &q, &p));
        let p1 = canonical(&s, &p);
        let p2 = Normalizer::new(&s).to_basic(&p).unwrap().embed();
        prop_assert!(bisim(&s, &p, &p1) && bisim(&s, &p1, &p2) && bisim(&s, &p, &p2));
        prop_assert_eq!(bisim(&s, &p1, &q), bisim(&s, &p, &q));
    }

    #[test]
    fn bisimilarity_is_a_congruence(p in term(), r in term(), f in formula(), h in prop::collection::vec(action(), 0..3)) {
        let s = spec();
        let q = canonical(&s, &p);
        let contexts: Vec<Box<dyn Fn(ProcTerm) -> ProcTerm>> = vec![
            Box::new(|x| ProcTerm::alt(x, r.clone())),
            Box::new(|x| ProcTerm::seq(x, r.clone())),
            Box::new(|x| ProcTerm::seq(r.clone(), x)),
            Box::new(|x| ProcTerm::guard(f.clone(), x)),
            Box::new(|x| ProcTerm::emit(f.clone(), x)),
            Box::new(|x| ProcTerm::par(x, r.clone())),
            Box::new(|x| ProcTerm::left_merge(x, r.clone())),
            Box::new(|x| ProcTerm::left_merge(r.clone(), x)),
            Box::new(|x| ProcTerm::comm_merge(r.clone(), x)),
            Box::new(|x| ProcTerm::encap(h.clone(), x)),
            Box::new(|x| ProcTerm::state("s0", x)),
        ];
        for ctx in &contexts {
            let (cp, cq) = (ctx(p.clone()), ctx(q.clone()));
            prop_assert!(bisim(&s, &cp, &cq), "{} vs {}", cp, cq);
        }
    }

    #[test]
    fn guardedness_survives_renaming(seed in any::<u64>(), vars in 1usize..4, inject in any::<bool>()) {
        let s = spec();
        let g = TermGen::for_spec(&s);
        let mut rng = gen::rng(seed);
        let mut e = g.linear_recspec(&mut rng, "E", vars);
        if inject {
            // an unguarded summand
            let (x, rhs) = e.equations[0].clone();
            e.equations[0] = (x.clone(), ProcTerm::alt(rhs, ProcTerm::Var(x)));
        }
        let renamed_var = |x: &str| format!("Z_{x}");
        let renamed = RecSpec::new(
            "F",
            e.equations
                .iter()
                .map(|(x, t)| (renamed_var(x), t.substitute(&|y| Some(ProcTerm::Var(renamed_var(y))))))
                .collect(),
        );
        prop_assert_eq!(check_guarded(&e).is_ok(), !inject);
        prop_assert_eq!(check_guarded(&renamed).is_ok(), !inject);
    }

    #[test]
    fn decided_equality_proves_axiom_instances(seed in any::<u64>()) {
        let s = spec();
        let g = TermGen::for_spec(&s);
        let mut rng = gen::rng(seed);
        let mut norm = Normalizer::new(&s);
        for ax in axioms() {
            if let Some((lhs, rhs)) = ax.instance(&s, &g, &mut rng, 5) {
                prop_assert!(norm.decide_equal(&lhs, &rhs).unwrap(), "{}: {} = {}", ax.name, lhs, rhs);
            }
        }
    }
}
