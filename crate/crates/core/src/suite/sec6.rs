//! Double magma partners of groups, and the dual-side mirror of the Ward
//! retract theorems.

use super::families::{
    cross, group_tables, members, quasigroups, small_magmas, Class, Instances, Member,
};
use super::util::{
    catalog_holds, ensure, holds, iff, implies, is_boolean_group, law, law_result,
    left_cancellative, right_cancellative, same_table,
};
use super::{Instance, Step};
use crate::classes::{is_ward, right_modular_left_unit, ward_dual_point};
use crate::constructions::enumerate::all_magmas;
use crate::constructions::ward::formula;
use crate::double::Law;
use crate::props::{classify_group, has, unipotency, units, BasicProperty};
use crate::table::Magma;

fn group_members(n: usize) -> Vec<Member> {
    group_tables(n)
        .iter()
        .enumerate()
        .map(|(i, (g, u))| (format!("order {n} group #{i}"), g.clone(), *u))
        .collect()
}

fn to_members(list: &[(Magma, usize)], what: &str, n: usize) -> Vec<Member> {
    list.iter()
        .enumerate()
        .map(|(i, (m, p))| (format!("order {n} {what} #{i}"), m.clone(), *p))
        .collect()
}

// ---- Lemma 6.1 ------------------------------------------------------------------

pub(crate) fn group_magma_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(3)).flat_map(|n| {
        let groups = group_tables(n);
        all_magmas(n)
            .expect("small order")
            .enumerate()
            .flat_map(move |(j, m)| {
                groups.iter().enumerate().map(move |(i, (g, u))| {
                    Instance::new(
                        format!("order {n} group #{i} with magma #{j}"),
                        vec![g.clone(), m.clone()],
                        vec![*u],
                    )
                })
            })
    }))
}

pub(crate) fn unit_clauses(i: &Instance) -> Step {
    let (g, m, e) = (i.t(0), i.t(1), i.p(0));
    if !law(g, m, Law::Plain) {
        return Ok(false);
    }
    let u = units(m);
    let unipotent = unipotency(m).is_some();
    for h in m.elements() {
        let right = u.right.contains(&h);
        let left = u.left.contains(&h);
        let same = e == h;
        let clause = |k: &str| format!("clause ({k}) for ê = {h}");
        implies(u.right == [h] || u.left == [h], &clause("i"), same, "e = ê")?;
        implies(right && left_cancellative(m), &clause("ii"), same, "e = ê")?;
        implies(left && right_cancellative(m), &clause("iii"), same, "e = ê")?;
        implies((right || left) && unipotent, &clause("iv"), same, "e = ê")?;
    }
    Ok(true)
}

// ---- Theorem 6.2 -------------------------------------------------------------------

/// Every group table with every right modular, unipotent, left unital
/// magma (order ≤ 3) or quasigroup (order 4); catalog groups with derbar of
/// catalog abelian groups above.
pub(crate) fn group_rm_pairs(max: usize, _: bool) -> Instances {
    let enumerated = (1..=max.min(4)).flat_map(|n| {
        let partners: Vec<(Magma, usize)> = if n <= 3 {
            small_magmas(n).rm_unipotent.clone()
        } else {
            quasigroups(n)
                .rmlu
                .iter()
                .filter(|(m, _)| unipotency(m).is_some())
                .cloned()
                .collect()
        };
        super::families::pairs(group_members(n), to_members(&partners, "partner", n))
    });
    let groups: Vec<Member> = members(Class::Group, max.min(8), 0)
        .into_iter()
        .filter(|(_, m, _)| m.order() > 4)
        .collect();
    let partners: Vec<Member> = members(Class::Rmulu, max.min(8), 0)
        .into_iter()
        .filter(|(_, m, _)| m.order() > 4)
        .collect();
    Box::new(enumerated.chain(super::families::pairs(groups, partners)))
}

pub(crate) fn group_partner_is_derbar(i: &Instance) -> Step {
    let (g, s, e) = (i.t(0), i.t(1), i.p(0));
    let Some(hat) = right_modular_left_unit(s) else {
        return Ok(false);
    };
    if unipotency(s).is_none() || !law(g, s, Law::Plain) {
        return Ok(false);
    }
    ensure(hat == e, || format!("the left unit {hat} differs from the identity {e}"))?;
    ensure(classify_group(g).is_abelian_group(), || "the group is not abelian".into())?;
    same_table(s, &formula::derbar(g, e), || "the partner against derbar".into())?;
    Ok(true)
}

// ---- Lemma 6.3, Lemma 6.4, Theorem 6.5 -------------------------------------------

pub(crate) fn unital_quasigroup_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| {
        let unital: &'static [(Magma, usize)] = if n <= 3 {
            &small_magmas(n).unital
        } else {
            &quasigroups(n).loops
        };
        let quasi: Vec<(Magma, usize)> = quasigroups(n).all.iter().map(|q| (q.clone(), 0)).collect();
        cross(unital, Box::leak(quasi.into_boxed_slice()), "unital with quasigroup")
    }))
}

pub(crate) fn unital_partner_commutative(i: &Instance) -> Step {
    let (m, q) = (i.t(0), i.t(1));
    if !law(m, q, Law::Plain) {
        return Ok(false);
    }
    holds(crate::props::check_basic(m, BasicProperty::Commutative), || {
        "commutativity of the unital magma".into()
    })?;
    Ok(true)
}

pub(crate) fn ward_iff_cancellative_eq1(i: &Instance) -> Step {
    let m = i.t(0);
    iff(
        is_ward(m),
        "Ward quasigroup",
        has(m, BasicProperty::Cancellative) && catalog_holds("WARD", m, None),
        "cancellative with Eq (1)",
    )?;
    Ok(true)
}

pub(crate) fn group_quasigroup_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| {
        let quasi: Vec<Member> = quasigroups(n)
            .all
            .iter()
            .enumerate()
            .map(|(i, q)| (format!("order {n} quasigroup #{i}"), q.clone(), 0))
            .collect();
        super::families::pairs(group_members(n), quasi)
    }))
}

pub(crate) fn group_with_left_ward(i: &Instance) -> Step {
    let (g, q) = (i.t(0), i.t(1));
    let identity = catalog_holds_text("(z.x).(z.y) = x.y", q);
    if !has(q, BasicProperty::Cancellative) || !identity || !law(g, q, Law::Plain) {
        return Ok(false);
    }
    ensure(is_boolean_group(g), || "the group is not boolean".into())?;
    same_table(q, g, || "the partner against the group".into())?;
    Ok(true)
}

fn catalog_holds_text(text: &str, m: &Magma) -> bool {
    super::util::texts_hold(&[text], m, 0)
}

// ---- Theorems 6.6 and 6.7 ------------------------------------------------------------

pub(crate) fn rmulus(max: usize, _: bool) -> Instances {
    super::families::singles(members(Class::Rmulu, max, 4))
}

/// Eq (4) and Eq (5) are read as the lateral and reversible laws of the
/// pair `(·, retbar)`.
pub(crate) fn retbar_laws(i: &Instance) -> Step {
    let (q, e) = (i.t(0), i.p(0));
    let r = formula::retbar(q, e);
    holds(law_result(q, &r, Law::Plain), || "interchange law with retbar".into())?;
    let lateral = law(q, &r, Law::Lateral);
    let reversible = law(q, &r, Law::Reversible);
    iff(lateral, "lateral law", reversible, "reversible law")?;
    iff(reversible, "reversible law", is_boolean_group(&r), "a boolean retbar")?;
    Ok(true)
}

/// Part 0: Ward-dual quasigroups with unital magmas (order ≤ 3) or loops
/// (order 4). Part 1: medial Ward-dual quasigroups with every magma (order
/// ≤ 3) or quasigroup (order 4).
pub(crate) fn ward_dual_partners(max: usize, _: bool) -> Instances {
    let duals = |n: usize| -> Vec<(Magma, usize)> {
        quasigroups(n).ward.iter().map(|(w, e)| (w.dual(), *e)).collect()
    };
    let part0 = (1..=max.min(4)).flat_map(move |n| {
        let partners: &'static [_] = if n <= 3 {
            &small_magmas(n).unital
        } else {
            &quasigroups(n).loops
        };
        let d: &'static [(Magma, usize)] = Box::leak(duals(n).into_boxed_slice());
        cross(d, partners, "Ward-dual with unital")
    });
    let part1 = (1..=max.min(4)).flat_map(move |n| {
        let medial: Vec<_> = duals(n)
            .into_iter()
            .filter(|(q, _)| has(q, BasicProperty::Medial))
            .collect();
        let partners: Box<dyn Iterator<Item = Magma>> = if n <= 3 {
            all_magmas(n).expect("small order")
        } else {
            Box::new(quasigroups(n).all.iter().cloned())
        };
        partners.enumerate().flat_map(move |(j, s)| {
            medial.clone().into_iter().enumerate().map(move |(k, (q, e))| {
                Instance::new(
                    format!("order {n} medial Ward-dual #{k} with magma #{j}"),
                    vec![q, s.clone()],
                    vec![e],
                )
                .with_part(1)
            })
        })
    });
    Box::new(part0.chain(part1))
}

pub(crate) fn partner_is_retbar(i: &Instance) -> Step {
    let (q, e, s) = (i.t(0), i.p(0), i.t(1));
    debug_assert_eq!(ward_dual_point(q), Some(e));
    if i.part == 0 {
        if !law(q, s, Law::Plain) {
            return Ok(false);
        }
        same_table(s, &formula::retbar(q, e), || "the unital partner against retbar".into())?;
        holds(crate::props::check_basic(q, BasicProperty::Medial), || {
            "mediality of the Ward-dual quasigroup".into()
        })?;
        return Ok(true);
    }
    let hypotheses = has(q, BasicProperty::Medial)
        && right_cancellative(s)
        && unipotency(s).is_some()
        && !units(s).left.is_empty();
    if !hypotheses || !law(&formula::retbar(q, e), s, Law::Plain) {
        return Ok(false);
    }
    same_table(s, q, || "the partner of retbar against the quasigroup".into())?;
    Ok(true)
}
