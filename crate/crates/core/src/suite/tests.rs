use super::*;
use crate::double::{check_law, Law};
use crate::props::{check_basic, classify_group, is_quasigroup, BasicProperty};

fn summary(reports: &[TheoremCheck]) -> Vec<(&'static str, Verdict, usize, usize)> {
    reports
        .iter()
        .map(|r| (r.id, r.verdict, r.instances, r.failures))
        .collect()
}

#[test]
fn ids_are_unique_and_resolvable() {
    let ids = registry_ids();
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for id in ids {
        assert!(describe(id).is_some(), "{id}");
    }
}

#[test]
fn unknown_id_is_an_error() {
    let err = run_check("BOGUS", &SuiteConfig::new(3)).unwrap_err();
    assert!(matches!(err, Error::UnknownCheck(ref id) if id == "BOGUS"));
    assert!(replay("BOGUS", &Instance::new("x", vec![], vec![])).is_err());
}

#[test]
fn run_all_at_order_three() {
    let reports = run_all(&SuiteConfig::new(3));
    assert_eq!(reports.len(), registry_ids().len());
    for r in &reports {
        assert!(r.as_expected(), "{} {} {:?}", r.id, r.verdict, r.counterexample);
        if !r.known_discrepancy && r.quantifier == Quantifier::Universal {
            assert_ne!(r.verdict, Verdict::Refuted, "{}", r.id);
        }
    }
    let verdict = |id: &str| reports.iter().find(|r| r.id == id).unwrap().verdict;
    assert_eq!(verdict("E2_1b"), Verdict::Refuted);
    assert_eq!(verdict("CEX4_TABLE"), Verdict::Refuted);
    assert_eq!(verdict("DW_WEAK6"), Verdict::Skipped);
}

#[test]
fn determinism() {
    let config = SuiteConfig::new(3);
    assert_eq!(summary(&run_all(&config)), summary(&run_all(&config)));
}

#[test]
fn refuted_counterexamples_replay() {
    for r in run_all(&SuiteConfig::new(3)) {
        if r.verdict != Verdict::Refuted {
            continue;
        }
        let cx = r.counterexample.expect("refutations carry a counterexample");
        let again = replay(r.id, &cx.instance).unwrap();
        assert_eq!(again.as_ref(), Some(&cx.failure), "{}", r.id);
    }
}

/// The documented refutations, re-derived with the property checkers
/// rather than the suite's predicates.
#[test]
fn refutations_hold_through_public_operations() {
    let config = SuiteConfig::new(3);
    let cx = |id| run_check(id, &config).unwrap().counterexample.unwrap().instance;

    let table = cx("CEX4_TABLE");
    let v = is_quasigroup(&table.tables[0]).into_witness().unwrap();
    assert_eq!(v.to_string(), "row 2 duplicates 3");

    let e21b = cx("E2_1b");
    let fails = |m: &Magma| !check_basic(m, BasicProperty::Associative).holds();
    assert!(fails(&e21b.tables[0]) || fails(&e21b.tables[1]));

    let t65 = cx("T6_5");
    let (g, q) = (&t65.tables[0], &t65.tables[1]);
    assert!(check_law(g, q, Law::Plain).unwrap().holds());
    assert!(classify_group(g).is_group && !classify_group(g).is_boolean_group());
    assert!(check_basic(q, BasicProperty::Cancellative).holds());
}

#[test]
fn monotone_in_the_order_cap() {
    for r3 in run_all(&SuiteConfig::new(3)) {
        if r3.verdict != Verdict::Confirmed || r3.quantifier != Quantifier::Universal {
            continue;
        }
        let r4 = run_check(r3.id, &SuiteConfig::new(4)).unwrap();
        assert!(r4.instances >= r3.instances, "{}", r3.id);
        if !r4.known_discrepancy {
            assert_eq!(r4.verdict, Verdict::Confirmed, "{}", r3.id);
        }
    }
}

#[test]
fn parastrophe_pairs_over_all_small_quasigroups() {
    let r = run_check("T7_1", &SuiteConfig::new(4)).unwrap();
    assert_eq!(r.verdict, Verdict::Confirmed);
    // 1 + 2 + 12 + 576 Latin squares of orders 1 to 4.
    assert_eq!(r.instances, 591);
    assert_eq!(r.max_order, 4);
}

#[test]
fn extended_entries_and_caps() {
    let plain = run_check("DW_WEAK6", &SuiteConfig::new(6)).unwrap();
    assert_eq!(plain.verdict, Verdict::Skipped);
    assert_eq!(run_check("T7_1", &SuiteConfig::new(9)).unwrap().max_order, 5);
    let eh = run_check("T2_6", &SuiteConfig::new(2)).unwrap();
    assert_eq!(eh.max_order, 2);
    assert_eq!(eh.verdict, Verdict::Confirmed);
}

#[test]
fn new_findings_at_order_four() {
    let config = SuiteConfig::new(4);
    for id in ["C5_5", "EX5", "T6_5"] {
        let r = run_check(id, &config).unwrap();
        assert_eq!(r.verdict, Verdict::Refuted, "{id}");
        assert!(r.known_discrepancy && r.as_expected(), "{id}");
    }
}

#[test]
fn as_expected_rules() {
    let mut r = run_check("E2_1", &SuiteConfig::new(2)).unwrap();
    assert!(r.as_expected());
    r.verdict = Verdict::Refuted;
    assert!(!r.as_expected());
    r.known_discrepancy = true;
    assert!(r.as_expected());
    r.verdict = Verdict::Confirmed;
    assert!(r.as_expected());
}
