//! Property-based invariants over random tables, terms and relabelings.

use proptest::prelude::*;

use wardforge::constructions::groups::{build_group, group_catalog};
use wardforge::constructions::parastrophe::parastrophes;
use wardforge::constructions::ward;
use wardforge::double::{check_law, Law};
use wardforge::props::{check_basic, is_quasigroup};
use wardforge::suite::{replay, run_check, SuiteConfig, Verdict};
use wardforge::term::{catalog, holds_universally, parse_identity, Const, Interpretation, Term, Var};
use wardforge::{BasicProperty, Magma, PointedMagma};

fn magma(max: usize) -> impl Strategy<Value = Magma> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0..n, n * n).prop_map(move |cells| Magma::new(n, cells).unwrap())
    })
}

fn magma_pair(max: usize) -> impl Strategy<Value = (Magma, Magma)> {
    (1..=max).prop_flat_map(|n| {
        let table = move || prop::collection::vec(0..n, n * n).prop_map(move |c| Magma::new(n, c).unwrap());
        (table(), table())
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn relabeled_group() -> impl Strategy<Value = PointedMagma> {
    let specs = group_catalog(8);
    (0..specs.len()).prop_flat_map(move |i| {
        let g = build_group(&specs[i]).unwrap();
        permutation(g.order()).prop_map(move |p| g.relabel(&p))
    })
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        (0..6usize).prop_map(|i| Term::Var(Var::ALL[i])),
        Just(Term::Const(Const::E)),
        Just(Term::Const(Const::F)),
        (1..5usize).prop_map(Term::Lit),
    ];
    leaf.prop_recursive(4, 24, 2, |inner| {
        (inner.clone(), inner, any::<bool>()).prop_map(|(l, r, star)| {
            if star {
                Term::star(l, r)
            } else {
                Term::dot(l, r)
            }
        })
    })
}

/// The first tuple in lexicographic order (last position fastest).
fn first_falsifying(m: &Magma, prop: BasicProperty) -> Option<Vec<usize>> {
    let n = m.order();
    let k = prop.arity();
    (0..n.pow(k as u32))
        .map(|mut code| {
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = code % n;
                code /= n;
            }
            t
        })
        .find(|t| prop.falsified_by(m, t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn dual_is_an_involution(m in magma(5)) {
        prop_assert_eq!(m.dual().dual(), m);
    }

    #[test]
    fn witnesses_are_first_and_falsifying(m in magma(4)) {
        for prop in BasicProperty::ALL {
            if prop == BasicProperty::Cancellative {
                // Cancellativity is reported on ordered pairs y < z.
                continue;
            }
            let witness = check_basic(&m, prop).into_witness();
            prop_assert_eq!(witness.clone(), first_falsifying(&m, prop), "{}", prop);
            if let Some(w) = witness {
                prop_assert!(prop.falsified_by(&m, &w));
            }
        }
    }

    #[test]
    fn medial_evaluator_agrees_with_table_scan(m in magma(4)) {
        let id = &catalog("MEDIAL").unwrap()[0];
        let evaluated = holds_universally(id, &Interpretation::new(&m)).unwrap().holds();
        prop_assert_eq!(evaluated, check_basic(&m, BasicProperty::Medial).holds());
    }

    #[test]
    fn properties_survive_relabeling(m in magma(4), seed in any::<u64>()) {
        let n = m.order();
        let mut p: Vec<usize> = (0..n).collect();
        p.rotate_left((seed as usize) % n);
        let r = m.relabel(&p);
        for prop in BasicProperty::ALL {
            prop_assert_eq!(check_basic(&m, prop).holds(), check_basic(&r, prop).holds());
        }
        prop_assert_eq!(is_quasigroup(&m).holds(), is_quasigroup(&r).holds());
    }

    #[test]
    fn printed_terms_parse_back(l in term(), r in term()) {
        let id = wardforge::term::Identity::new(l, r);
        let printed = id.to_string();
        let parsed = parse_identity(&printed).unwrap();
        prop_assert_eq!(&parsed, &id);
        prop_assert_eq!(parsed.to_string(), printed);
    }

    #[test]
    fn interchange_laws_dualize((a, b) in magma_pair(3)) {
        for law in [Law::Plain, Law::Lateral, Law::Reversible] {
            let direct = check_law(&a, &b, law).unwrap().holds();
            let dual = check_law(&a.dual(), &b.dual(), law).unwrap().holds();
            prop_assert_eq!(direct, dual);
        }
    }

    #[test]
    fn ward_round_trips_under_relabeling(g in relabeled_group()) {
        let der = ward::der(&g).unwrap();
        prop_assert_eq!(&ward::ret(&der).unwrap(), &g);
        let dder = ward::double_der(&g).unwrap();
        prop_assert_eq!(ward::d_of_ward(&der).unwrap(), dder.clone());
        prop_assert_eq!(ward::d_of_dward(&dder).unwrap(), der);
    }

    #[test]
    fn parastrophe_of_parastrophe_stays_quasigroup(g in relabeled_group()) {
        let w = ward::der(&g).unwrap().into_magma();
        for p in parastrophes(&w).unwrap() {
            prop_assert!(is_quasigroup(&p).holds());
            prop_assert_eq!(parastrophes(&p).unwrap()[5].clone(), p.dual());
        }
    }
}

#[test]
fn refutation_witnesses_replay() {
    let config = SuiteConfig::new(4);
    for id in ["E2_1b", "CEX4_TABLE", "EX5", "T6_5", "C5_5"] {
        let r = run_check(id, &config).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted, "{id}");
        let cx = r.counterexample.unwrap();
        assert_eq!(replay(id, &cx.instance).unwrap(), Some(cx.failure), "{id}");
    }
}
