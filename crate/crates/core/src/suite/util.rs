//! Small predicates and failure builders shared by the check modules.

use super::Failure;
use crate::double::{check_law, Law};
use crate::props::{classify_group, PropertyResult};
use crate::table::Magma;
use crate::term::{catalog, holds_universally, parse_identity, Interpretation};

pub(crate) type Check = std::result::Result<(), Failure>;

pub(crate) fn ensure(ok: bool, reason: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(Failure::new(reason()))
    }
}

/// Checks both directions of `lhs ⟺ rhs` and names the one that fails.
pub(crate) fn iff(lhs: bool, lhs_name: &str, rhs: bool, rhs_name: &str) -> Check {
    match (lhs, rhs) {
        (true, false) => Err(Failure::new(format!(
            "{lhs_name} holds but {rhs_name} does not ({lhs_name} ⇒ {rhs_name} fails)"
        ))),
        (false, true) => Err(Failure::new(format!(
            "{rhs_name} holds but {lhs_name} does not ({rhs_name} ⇒ {lhs_name} fails)"
        ))),
        _ => Ok(()),
    }
}

/// `a ⇒ b`, named.
pub(crate) fn implies(a: bool, a_name: &str, b: bool, b_name: &str) -> Check {
    ensure(!a || b, || format!("{a_name} holds but {b_name} does not"))
}

/// Turns a property result into a check whose failure carries the witness.
pub(crate) fn holds(result: PropertyResult, what: impl FnOnce() -> String) -> Check {
    match result.into_witness() {
        None => Ok(()),
        Some(w) => Err(Failure::new(format!("{} fails", what())).with_witness(w)),
    }
}

pub(crate) fn law(a: &Magma, b: &Magma, law: Law) -> bool {
    law_result(a, b, law).holds()
}

pub(crate) fn law_result(a: &Magma, b: &Magma, law: Law) -> PropertyResult {
    check_law(a, b, law).expect("family tables share an order")
}

/// Whether the equal-order tables coincide; on failure the witness is the
/// first differing cell.
pub(crate) fn same_table(actual: &Magma, expected: &Magma, what: impl FnOnce() -> String) -> Check {
    let n = actual.order();
    for x in 0..n {
        for y in 0..n {
            if actual.op(x, y) != expected.op(x, y) {
                return Err(Failure::new(format!(
                    "{}: cell ({x}, {y}) is {} instead of {}",
                    what(),
                    actual.op(x, y),
                    expected.op(x, y)
                ))
                .with_witness(vec![x, y]));
            }
        }
    }
    Ok(())
}

/// Evaluates every identity stored under a catalog name, with `e` bound.
pub(crate) fn catalog_holds(name: &str, m: &Magma, e: Option<usize>) -> bool {
    catalog(name)
        .expect("known catalog name")
        .iter()
        .all(|id| identity_holds(id, m, e))
}

/// Evaluates identity texts in the single operation `.`, with `e` bound.
pub(crate) fn texts_hold(texts: &[&str], m: &Magma, e: usize) -> bool {
    texts.iter().all(|t| {
        let id = parse_identity(t).expect("well-formed identity");
        identity_holds(&id, m, Some(e))
    })
}

fn identity_holds(id: &crate::term::Identity, m: &Magma, e: Option<usize>) -> bool {
    let mut interp = Interpretation::new(m);
    if let Some(e) = e {
        interp = interp.with_e(e);
    }
    holds_universally(id, &interp)
        .expect("identity fits the interpretation")
        .holds()
}

pub(crate) fn is_group_with_unit(m: &Magma, unit: usize) -> bool {
    let info = classify_group(m);
    info.is_group && info.unit == Some(unit)
}

pub(crate) fn is_abelian_group_with_unit(m: &Magma, unit: usize) -> bool {
    let info = classify_group(m);
    info.unit == Some(unit) && info.is_abelian_group()
}

pub(crate) fn is_boolean_group(m: &Magma) -> bool {
    classify_group(m).is_boolean_group()
}

/// A group with an element whose powers exhaust the carrier.
pub(crate) fn is_cyclic_group(m: &Magma) -> bool {
    let info = classify_group(m);
    let Some(unit) = info.unit.filter(|_| info.is_group) else {
        return false;
    };
    let n = m.order();
    m.elements().any(|g| {
        let mut x = g;
        let mut k = 1;
        while x != unit {
            x = m.op(x, g);
            k += 1;
        }
        k == n
    })
}

pub(crate) fn left_cancellative(m: &Magma) -> bool {
    m.rows().all(|row| {
        let mut seen = vec![false; row.len()];
        row.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    })
}

pub(crate) fn right_cancellative(m: &Magma) -> bool {
    left_cancellative(&m.dual())
}
