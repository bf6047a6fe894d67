//! Double magmas formed by Ward quasigroups.

use super::families::{members, pairs, quasigroups, small_magmas, Class, Instances};
use super::util::{
    ensure, holds, iff, is_boolean_group, law, law_result, left_cancellative, same_table,
    texts_hold,
};
use super::{Instance, Step};
use crate::constructions::enumerate::all_magmas;
use crate::constructions::ward::formula;
use crate::double::Law;
use crate::props::{
    classify_group, has, is_left_unit, is_quasigroup, is_right_unit, unipotency, units,
    BasicProperty,
};

/// Pairs of Ward quasigroups of equal order: all enumerated ones up to
/// order 4, then catalog ones.
pub(crate) fn ward_pairs(max: usize, _: bool) -> Instances {
    let ws = members(Class::Ward, max, 4);
    pairs(ws.clone(), ws)
}

pub(crate) fn five_conditions(i: &Instance) -> Step {
    let (a, b, e) = (i.t(0), i.t(1), i.p(0));
    let same = a == b;
    let c1 = law(a, b, Law::Plain);
    let c2 = same && has(a, BasicProperty::Medial);
    let c3 = same && has(a, BasicProperty::LeftModular);
    let c4 = same && texts_hold(&["(x.y).z = (x.z).y", "x.(y.z) = (x.y).(e.z)"], a, e);
    let c5 = same && classify_group(&formula::ret(a, e)).is_abelian_group();
    iff(c1, "(1) double magma", c2, "(2) equal and medial")?;
    iff(c2, "(2) equal and medial", c3, "(3) equal and left modular")?;
    iff(c3, "(3) equal and left modular", c4, "(4) equal with xy·z = xz·y and x·yz = xy·ez")?;
    iff(c4, "(4) equal with xy·z = xz·y and x·yz = xy·ez", c5, "(5) equal with abelian retract")?;
    Ok(true)
}

pub(crate) fn wards(max: usize, _: bool) -> Instances {
    super::families::singles(members(Class::Ward, max, 4))
}

pub(crate) fn medial_dual(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    if !has(w, BasicProperty::Medial) {
        return Ok(false);
    }
    let d = w.dual();
    ensure(is_quasigroup(&d).holds(), || "the dual is not a quasigroup".into())?;
    ensure(unipotency(&d) == Some(e), || format!("the dual is not unipotent at {e}"))?;
    ensure(units(&d).left == vec![e], || format!("{e} is not the unique left unit of the dual"))?;
    holds(crate::props::check_basic(&d, BasicProperty::RightModular), || {
        "right modularity of the dual".into()
    })?;
    holds(law_result(w, &d, Law::Plain), || "interchange law with the dual".into())?;
    ensure(is_right_unit(w, e), || format!("{e} is not a right unit"))?;
    Ok(true)
}

pub(crate) fn proper_iff_not_boolean(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    if !has(w, BasicProperty::Medial) {
        return Ok(false);
    }
    let d = w.dual();
    holds(law_result(w, &d, Law::Plain), || "interchange law with the dual".into())?;
    ensure(is_right_unit(w, e) && is_left_unit(&d, e), || {
        "the pair is not right-left unital".into()
    })?;
    iff(
        *w != d,
        "a proper double magma",
        !is_boolean_group(&formula::ret(w, e)),
        "a non-boolean retract",
    )?;
    Ok(true)
}

/// Eq (4) and Eq (5) are read as the lateral and reversible laws of the
/// pair `(·, ret)`.
pub(crate) fn retract_laws(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    if !has(w, BasicProperty::Medial) {
        return Ok(false);
    }
    let r = formula::ret(w, e);
    holds(law_result(w, &r, Law::Plain), || "interchange law with the retract".into())?;
    let lateral = law(w, &r, Law::Lateral);
    let reversible = law(w, &r, Law::Reversible);
    iff(lateral, "lateral law", reversible, "reversible law")?;
    iff(reversible, "reversible law", is_boolean_group(&r), "a boolean retract")?;
    Ok(true)
}

/// Part 0: Ward quasigroups with unital magmas (order ≤ 3) or loops (order
/// 4). Part 1: medial Ward quasigroups with every magma (order ≤ 3) or
/// quasigroup (order 4).
pub(crate) fn ward_partners(max: usize, _: bool) -> Instances {
    let part0 = (1..=max.min(4)).flat_map(|n| {
        let wards = &quasigroups(n).ward;
        let partners: &'static [_] = if n <= 3 {
            &small_magmas(n).unital
        } else {
            &quasigroups(n).loops
        };
        super::families::cross(wards, partners, "Ward with unital")
    });
    let part1 = (1..=max.min(4)).flat_map(|n| {
        let medial: Vec<_> = quasigroups(n)
            .ward
            .iter()
            .filter(|(w, _)| has(w, BasicProperty::Medial))
            .cloned()
            .collect();
        let partners: Box<dyn Iterator<Item = crate::Magma>> = if n <= 3 {
            all_magmas(n).expect("small order")
        } else {
            Box::new(quasigroups(n).all.iter().cloned())
        };
        partners.enumerate().flat_map(move |(j, s)| {
            medial
                .clone()
                .into_iter()
                .enumerate()
                .map(move |(k, (w, e))| {
                    Instance::new(
                        format!("order {n} medial Ward #{k} with magma #{j}"),
                        vec![w, s.clone()],
                        vec![e],
                    )
                    .with_part(1)
                })
        })
    });
    Box::new(part0.map(|i| i.with_part(0)).chain(part1))
}

pub(crate) fn partner_is_retract(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    let s = i.t(1);
    if i.part == 0 {
        if !law(w, s, Law::Plain) {
            return Ok(false);
        }
        same_table(s, &formula::ret(w, e), || "the unital partner is not ret".into())?;
        holds(crate::props::check_basic(w, BasicProperty::Medial), || {
            "mediality of the Ward quasigroup".into()
        })?;
        return Ok(true);
    }
    let hypotheses = has(w, BasicProperty::Medial)
        && left_cancellative(s)
        && unipotency(s).is_some()
        && !units(s).right.is_empty();
    if !hypotheses || !law(&formula::ret(w, e), s, Law::Plain) {
        return Ok(false);
    }
    same_table(s, w, || "the partner of ret differs from the Ward quasigroup".into())?;
    Ok(true)
}
