//! Double Ward quasigroups: identities, the D correspondence, the lateral
//! law with the induced group, translatability and isotopy.

use super::families::{
    distinct_tables, group_tables, members, quasigroups, singles, Class, Instances,
};
use super::util::{
    catalog_holds, ensure, holds, iff, implies, is_cyclic_group, law, law_result, same_table,
};
use super::{Failure, Instance, Step};
use crate::classes::{
    double_ward_law, double_ward_points, dw_weak_law, is_double_ward, is_double_ward_at, ward_point,
};
use crate::constructions::affine::affine;
use crate::constructions::translatable::{translatability, translatable_orderings};
use crate::constructions::ward::formula;
use crate::double::Law;
use crate::fixtures::{cyclic, printed_6x6};
use crate::iso::{find_isomorphism, find_isotopism};
use crate::props::{has, is_quasigroup, BasicProperty};
use crate::table::Magma;

pub(crate) fn dwards(max: usize, _: bool) -> Instances {
    singles(members(Class::DoubleWard, max, 4))
}

pub(crate) fn wards(max: usize, _: bool) -> Instances {
    singles(members(Class::Ward, max, 4))
}

/// Part 0: Ward quasigroups; part 1: double Ward quasigroups.
pub(crate) fn wards_and_dwards(max: usize, extended: bool) -> Instances {
    Box::new(
        wards(max, extended)
            .map(|i| i.with_part(0))
            .chain(dwards(max, extended).map(|i| i.with_part(1))),
    )
}

// ---- Lemma 4.1 and the weak identity -----------------------------------------

pub(crate) fn lemma_identities(i: &Instance) -> Step {
    let (m, e) = (i.t(0), i.p(0));
    for k in 1..=7 {
        let name = format!("L41_{k}");
        ensure(catalog_holds(&name, m, Some(e)), || {
            format!("identity ({k}) of the lemma fails")
        })?;
    }
    Ok(true)
}

/// `x·y = b − x − y (mod n)` for `b ≠ 0`.
pub(crate) fn weak_family(max: usize, _: bool) -> Instances {
    Box::new((2..=max).flat_map(|n| {
        (1..n as i64).map(move |b| {
            Instance::new(
                format!("n={n}: x·y = {b} - x - y"),
                vec![affine(n, -1, -1, b).expect("n ≥ 1")],
                vec![b as usize],
            )
        })
    }))
}

/// The weak law holds at every `e`, and Eq (2) holds exactly at the `e`
/// with `3e ≡ b`.
pub(crate) fn weak_law_everywhere(i: &Instance) -> Step {
    let (m, b) = (i.t(0), i.p(0));
    let n = m.order();
    for e in m.elements() {
        holds(dw_weak_law(m, e), || format!("the weak law at e = {e}"))?;
    }
    let expected: Vec<usize> = m.elements().filter(|e| (3 * e) % n == b % n).collect();
    let actual = double_ward_points(m);
    ensure(actual == expected, || {
        format!("Eq (2) holds at {actual:?}, expected exactly the solutions {expected:?} of 3e = b")
    })?;
    Ok(true)
}

pub(crate) fn printed_table(_: usize, _: bool) -> Instances {
    Box::new(std::iter::once(Instance::new(
        "the printed order-6 table",
        vec![printed_6x6()],
        vec![],
    )))
}

/// The printed table is claimed to be a quasigroup satisfying the weak law
/// at some `e` without being double Ward there.
pub(crate) fn printed_table_claim(i: &Instance) -> Step {
    let m = i.t(0);
    let weak: Vec<usize> = m.elements().filter(|&e| dw_weak_law(m, e).holds()).collect();
    if let Some(v) = is_quasigroup(m).into_witness() {
        let weak = if weak.is_empty() {
            "the weak law holds at no e".to_string()
        } else {
            format!("the weak law holds at {weak:?}")
        };
        return Err(Failure::new(format!("the table is not a Latin square ({v}); {weak}"))
        .with_witness(v.to_tuple()));
    }
    let witness = weak.iter().find(|&&e| !double_ward_law(m, e).holds());
    ensure(witness.is_some(), || {
        format!("no e satisfies the weak law while failing Eq (2); weak law at {weak:?}")
    })?;
    Ok(true)
}

// ---- D, Ret, ret --------------------------------------------------------------

pub(crate) fn d_of_ward_is_dward(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    let d = formula::d_of_ward(w, e);
    ensure(is_double_ward_at(&d, e), || format!("D is not double Ward at {e}"))?;
    Ok(true)
}

pub(crate) fn d_of_dward_is_ward(i: &Instance) -> Step {
    let (dw, e) = (i.t(0), i.p(0));
    let d = formula::d_of_dward(dw, e);
    ensure(ward_point(&d) == Some(e), || format!("D is not Ward with point {e}"))?;
    Ok(true)
}

pub(crate) fn d_involution(i: &Instance) -> Step {
    let (m, e) = (i.t(0), i.p(0));
    let back = if i.part == 0 {
        formula::d_of_dward(&formula::d_of_ward(m, e), e)
    } else {
        formula::d_of_ward(&formula::d_of_dward(m, e), e)
    };
    same_table(&back, m, || "D applied twice".into())?;
    Ok(true)
}

/// `ret(D(q)) = Ret(q)`, for `q` Ward (part 0) or double Ward (part 1).
pub(crate) fn ret_of_d(i: &Instance) -> Step {
    let (m, e) = (i.t(0), i.p(0));
    let d = if i.part == 0 {
        formula::d_of_ward(m, e)
    } else {
        formula::d_of_dward(m, e)
    };
    same_table(&formula::ret(&d, e), &formula::double_ret(m, e), || {
        "ret(D(q)) against Ret(q)".into()
    })?;
    Ok(true)
}

/// `(q, Ret q)` satisfies the lateral law, and every group on the carrier
/// with identity `e` forming the lateral law with `q` equals `Ret q`
/// (searched up to order 6).
pub(crate) fn lateral_with_ret(i: &Instance) -> Step {
    let (dw, e) = (i.t(0), i.p(0));
    let r = formula::double_ret(dw, e);
    holds(law_result(dw, &r, Law::Lateral), || "lateral law with Ret".into())?;
    if dw.order() <= 6 {
        for (g, unit) in group_tables(dw.order()) {
            if *unit == e && law(dw, g, Law::Lateral) {
                same_table(g, &r, || "a lateral group partner with identity e is not Ret".into())?;
            }
        }
    }
    Ok(true)
}

pub(crate) fn remark_instance(_: usize, _: bool) -> Instances {
    let star = Magma::from_fn(6, |x, y| (12 - x - y) % 6);
    Box::new(std::iter::once(Instance::new(
        "x∗y = −x−y (mod 6) at 2 with (Z6, +, 0)",
        vec![star, cyclic(6)],
        vec![2, 0],
    )))
}

/// The lateral law holds and `(Z6, ∗, 2)` is double Ward, yet `+` is not
/// `Ret(Z6, ∗, 2)`: the group need not share the point.
pub(crate) fn remark_z6(i: &Instance) -> Step {
    let (star, plus, e) = (i.t(0), i.t(1), i.p(0));
    holds(law_result(star, plus, Law::Lateral), || "lateral law".into())?;
    ensure(is_double_ward_at(star, e), || format!("∗ is not double Ward at {e}"))?;
    ensure(formula::double_ret(star, e) != *plus, || "Ret(∗, 2) equals +".into())?;
    Ok(true)
}

pub(crate) fn d_with_ret(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    let d = formula::d_of_ward(w, e);
    let r = formula::double_ret(&d, e);
    holds(law_result(&d, &r, Law::Lateral), || "lateral law of D with Ret(D)".into())?;
    same_table(&r, &formula::ret(w, e), || "Ret(D(q)) against ret(q)".into())?;
    same_table(&r, &Magma::from_fn(w.order(), |x, y| w.op(x, w.op(e, y))), || {
        "Ret(D(q)) against x·ey".into()
    })?;
    Ok(true)
}

pub(crate) fn dward_commutative(i: &Instance) -> Step {
    let (dw, e) = (i.t(0), i.p(0));
    let comm = has(dw, BasicProperty::Commutative);
    let medial = has(dw, BasicProperty::Medial);
    let inducing = has(&formula::d_of_dward(dw, e), BasicProperty::Medial);
    let group = has(&formula::double_ret(dw, e), BasicProperty::Commutative);
    iff(comm, "commutativity", medial, "mediality")?;
    iff(medial, "mediality", inducing, "a medial inducing Ward quasigroup")?;
    iff(inducing, "a medial inducing Ward quasigroup", group, "a commutative Ret")?;
    Ok(true)
}

pub(crate) fn dual_is_dward(i: &Instance) -> Step {
    let (dw, e) = (i.t(0), i.p(0));
    ensure(is_double_ward_at(&dw.dual(), e), || format!("the dual is not double Ward at {e}"))?;
    Ok(true)
}

pub(crate) fn with_dual(i: &Instance) -> Step {
    let dw = i.t(0);
    let d = dw.dual();
    let plain = law(dw, &d, Law::Plain);
    let lateral = law(dw, &d, Law::Lateral);
    let comm = has(dw, BasicProperty::Commutative);
    let medial = has(dw, BasicProperty::Medial);
    iff(plain, "double magma with the dual", lateral, "lateral with the dual")?;
    iff(lateral, "lateral with the dual", comm, "commutativity")?;
    iff(comm, "commutativity", medial, "mediality")?;
    Ok(true)
}

pub(crate) fn magmas(max: usize, extended: bool) -> Instances {
    super::sec2::magmas(max, extended)
}

pub(crate) fn cancellative_dw_law(i: &Instance) -> Step {
    let m = i.t(0);
    let cancellative = has(m, BasicProperty::Cancellative);
    for e in m.elements() {
        iff(
            cancellative && catalog_holds("DOUBLE_WARD", m, Some(e)),
            &format!("cancellative with Eq (2) at {e}"),
            is_double_ward_at(m, e),
            &format!("double Ward at {e}"),
        )?;
    }
    Ok(true)
}

pub(crate) fn idempotent_weak(i: &Instance) -> Step {
    let m = i.t(0);
    let weak = has(m, BasicProperty::Cancellative)
        && m.elements()
            .any(|e| m.op(e, e) == e && catalog_holds("DW_WEAK", m, Some(e)));
    iff(
        is_double_ward(m),
        "double Ward",
        weak,
        "cancellative with the weak law at an idempotent",
    )?;
    Ok(true)
}

// ---- translatability ---------------------------------------------------------

/// Part 0: enumerated members of order 2 to 5 (one per table; k-translatability
/// needs `1 ≤ k < n`); part 1: the
/// class member induced by `Z_n` under its natural ordering; part 2 (Ward
/// only): `der(S3)`.
fn translatable_family(class: Class, max: usize) -> Instances {
    let enumerated: Vec<Instance> = (2..=max.min(5))
        .flat_map(|n| {
            let list = match class {
                Class::Ward => &quasigroups(n).ward,
                _ => &quasigroups(n).dward,
            };
            distinct_tables(list)
                .into_iter()
                .enumerate()
                .map(move |(i, (m, p))| Instance::new(format!("order {n} #{i}"), vec![m], vec![p]))
        })
        .collect();
    let cyclic_members = (2..=max).map(move |n| {
        let z = cyclic(n);
        let m = match class {
            Class::Ward => formula::der(&z, 0),
            _ => formula::double_der(&z, 0),
        };
        Instance::new(format!("induced by Z{n}"), vec![m], vec![0]).with_part(1)
    });
    let s3: Vec<Instance> = members(Class::Ward, max, 0)
        .into_iter()
        .filter(|(l, _, _)| class == Class::Ward && l == "der(sym3)")
        .map(|(l, m, p)| Instance::new(l, vec![m], vec![p]).with_part(2))
        .collect();
    Box::new(enumerated.into_iter().chain(cyclic_members).chain(s3))
}

pub(crate) fn translatable_dwards(max: usize, _: bool) -> Instances {
    translatable_family(Class::DoubleWard, max)
}

pub(crate) fn translatable_wards(max: usize, _: bool) -> Instances {
    translatable_family(Class::Ward, max)
}

fn orderings_k(m: &Magma) -> Vec<(Vec<usize>, Vec<usize>)> {
    translatable_orderings(m).expect("order within the ordering limit")
}

/// `expected_k` gives the only allowed `k` for order `n`.
fn only_k(i: &Instance, expected_k: fn(usize) -> usize, induced: fn(&Magma, usize) -> Magma) -> Step {
    let (m, e) = (i.t(0), i.p(0));
    let n = m.order();
    match i.part {
        0 => {
            let found = orderings_k(m);
            for (ordering, ks) in &found {
                ensure(ks.iter().all(|&k| k == expected_k(n)), || {
                    format!("translatable with k in {ks:?} under ordering {ordering:?}")
                })?;
            }
            if !found.is_empty() {
                ensure(is_cyclic_group(&induced(m, e)), || {
                    "translatable but the induced group is not cyclic".into()
                })?;
            }
        }
        1 => {
            let ks = translatability(m);
            ensure(ks == vec![expected_k(n)], || {
                format!("natural ordering gives k in {ks:?}, expected [{}]", expected_k(n))
            })?;
        }
        _ => {
            let ks = translatability(m);
            ensure(ks.is_empty(), || format!("natural ordering gives k in {ks:?}"))?;
        }
    }
    Ok(true)
}

pub(crate) fn dward_k(i: &Instance) -> Step {
    only_k(i, |n| n - 1, formula::double_ret)
}

pub(crate) fn ward_k(i: &Instance) -> Step {
    only_k(i, |_| 1, formula::ret)
}

fn translatable_iff_cyclic(i: &Instance, induced: fn(&Magma, usize) -> Magma, dw: bool) -> Step {
    if i.part != 0 {
        return Ok(false);
    }
    let (m, e) = (i.t(0), i.p(0));
    let translatable = !orderings_k(m).is_empty();
    iff(
        translatable,
        "translatable",
        is_cyclic_group(&induced(m, e)),
        "induced by a cyclic group",
    )?;
    if dw {
        implies(translatable, "translatable", has(m, BasicProperty::Commutative), "commutative")?;
    }
    Ok(true)
}

pub(crate) fn dward_translatable_iff_cyclic(i: &Instance) -> Step {
    translatable_iff_cyclic(i, formula::double_ret, true)
}

pub(crate) fn ward_translatable_iff_cyclic(i: &Instance) -> Step {
    translatable_iff_cyclic(i, formula::ret, false)
}

// ---- isotopy -------------------------------------------------------------------

pub(crate) fn dward_table_pairs(max: usize, _: bool) -> Instances {
    let mut out = Vec::new();
    for n in 1..=max.min(5) {
        let tables = distinct_tables(&quasigroups(n).dward);
        for (i, (a, _)) in tables.iter().enumerate() {
            for (j, (b, _)) in tables.iter().enumerate().skip(i + 1) {
                out.push(Instance::new(
                    format!("order {n} double Ward #{i} and #{j}"),
                    vec![a.clone(), b.clone()],
                    vec![],
                ));
            }
        }
    }
    Box::new(out.into_iter())
}

pub(crate) fn isotopic_iff_isomorphic(i: &Instance) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    let isotopic = find_isotopism(a, b).expect("order within the isotopy limit").is_some();
    let isomorphic = find_isomorphism(a, b).expect("equal orders").is_some();
    iff(isotopic, "isotopic", isomorphic, "isomorphic")?;
    Ok(true)
}

// ---- order-6 search --------------------------------------------------------------

/// Every quasigroup of order ≤ 5 and the affine quasigroups
/// `ax + by + c` over `Z6`.
pub(crate) fn weak_search_family(max: usize, _: bool) -> Instances {
    let small = super::families::quasigroup_sweep(max.min(5));
    let six = (6..=max.min(6)).flat_map(|n| {
        [1i64, 5].into_iter().flat_map(move |a| {
            [1i64, 5].into_iter().flat_map(move |b| {
                (0..n as i64).map(move |c| {
                    Instance::new(
                        format!("n={n}: x·y = {a}x+{b}y+{c}"),
                        vec![affine(n, a, b, c).expect("n ≥ 1")],
                        vec![],
                    )
                })
            })
        })
    });
    Box::new(small.chain(six))
}

/// A find: a non-idempotent `e` where the weak law holds and Eq (2) fails.
pub(crate) fn weak_without_dw(i: &Instance) -> Step {
    let m = i.t(0);
    let found = m.elements().find(|&e| {
        m.op(e, e) != e && dw_weak_law(m, e).holds() && !double_ward_law(m, e).holds()
    });
    match found {
        Some(e) => Err(Failure::new(format!(
            "the weak law holds at the non-idempotent e = {e} while Eq (2) fails"
        ))
        .with_witness(vec![e])),
        None => Ok(true),
    }
}
