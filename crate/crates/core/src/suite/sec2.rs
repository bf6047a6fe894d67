//! Interchange laws of a magma with its dual, Ward quasigroups and their
//! retracts, unit coincidence, and the affine example family.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::families::{
    group_tables, magma_sweep, members, quasigroups, small_magmas, Class, Instances,
};
use super::util::{ensure, holds, iff, law, law_result};
use super::{Failure, Instance, Step};
use crate::classes::ward_point;
use crate::constructions::affine;
use crate::constructions::enumerate::all_magmas;
use crate::constructions::ward::formula;
use crate::double::{eckmann_hilton, Law};
use crate::props::{
    check_basic, classify_group, group_inverse, has, square_commutative, units,
    BasicProperty,
};
use crate::table::{Magma, PointedMagma};

// ---- Lemma 2.3 --------------------------------------------------------------

pub(crate) fn magmas(max: usize, _: bool) -> Instances {
    magma_sweep(max)
}

pub(crate) fn dual_plain_iff_medial(i: &Instance) -> Step {
    let m = i.t(0);
    iff(
        law(m, &m.dual(), Law::Plain),
        "interchange law with the dual",
        has(m, BasicProperty::Medial),
        "mediality",
    )?;
    Ok(true)
}

pub(crate) fn dual_always_reversible(i: &Instance) -> Step {
    let m = i.t(0);
    holds(law_result(m, &m.dual(), Law::Reversible), || {
        "reversible law with the dual".into()
    })?;
    Ok(true)
}

pub(crate) fn dual_lateral_iff_square_commutative(i: &Instance) -> Step {
    let m = i.t(0);
    iff(
        law(m, &m.dual(), Law::Lateral),
        "lateral law with the dual",
        square_commutative(m),
        "commutativity of the set of products",
    )?;
    Ok(true)
}

/// Every pair of order ≤ 2 magmas, every pair of order-3 quasigroups, and
/// (from order 4) seeded random pairs of magmas and of quasigroups.
pub(crate) fn dualizing_pairs(max: usize, _: bool) -> Instances {
    let mut out = Vec::new();
    for n in 1..=max.min(2) {
        let all: Vec<Magma> = all_magmas(n).expect("small order").collect();
        for (i, a) in all.iter().enumerate() {
            for (j, b) in all.iter().enumerate() {
                out.push(Instance::new(
                    format!("order {n} magmas #{i}, #{j}"),
                    vec![a.clone(), b.clone()],
                    vec![],
                ));
            }
        }
    }
    if max >= 3 {
        let q = &quasigroups(3).all;
        for (i, a) in q.iter().enumerate() {
            for (j, b) in q.iter().enumerate() {
                out.push(Instance::new(
                    format!("order 3 quasigroups #{i}, #{j}"),
                    vec![a.clone(), b.clone()],
                    vec![],
                ));
            }
        }
    }
    if max >= 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed4);
        for k in 0..1000 {
            let mut random = || Magma::from_fn(4, |_, _| rng.gen_range(0..4));
            let (a, b) = (random(), random());
            out.push(Instance::new(format!("random order 4 magmas, draw {k}"), vec![a, b], vec![]));
        }
        let q = &quasigroups(4).all;
        for k in 0..1000 {
            let (i, j) = (rng.gen_range(0..q.len()), rng.gen_range(0..q.len()));
            out.push(Instance::new(
                format!("random order 4 quasigroups #{i}, #{j}, draw {k}"),
                vec![q[i].clone(), q[j].clone()],
                vec![],
            ));
        }
    }
    Box::new(out.into_iter())
}

fn dualizing(i: &Instance, which: Law) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    iff(
        law(a, b, which),
        &format!("{} law for (·, ∗)", which.name()),
        law(&a.dual(), &b.dual(), which),
        &format!("{} law for the duals", which.name()),
    )?;
    Ok(true)
}

pub(crate) fn dualizing_plain(i: &Instance) -> Step {
    dualizing(i, Law::Plain)
}

pub(crate) fn dualizing_lateral(i: &Instance) -> Step {
    dualizing(i, Law::Lateral)
}

pub(crate) fn dualizing_reversible(i: &Instance) -> Step {
    dualizing(i, Law::Reversible)
}

pub(crate) fn self_plain_iff_medial(i: &Instance) -> Step {
    let m = i.t(0);
    iff(
        law(m, m, Law::Plain),
        "interchange law with itself",
        has(m, BasicProperty::Medial),
        "mediality",
    )?;
    Ok(true)
}

// ---- Lemma 2.4 --------------------------------------------------------------

pub(crate) fn wards(max: usize, _: bool) -> Instances {
    super::families::singles(members(Class::Ward, max, 4))
}

pub(crate) fn ward_medial(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    let medial = has(w, BasicProperty::Medial);
    let left_modular = has(w, BasicProperty::LeftModular);
    let abelian = classify_group(&formula::ret(w, e)).is_abelian_group();
    iff(medial, "mediality", left_modular, "left modularity")?;
    iff(left_modular, "left modularity", abelian, "an abelian retract")?;
    Ok(true)
}

pub(crate) fn ward_commutative(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    iff(
        has(w, BasicProperty::Commutative),
        "commutativity",
        classify_group(&formula::ret(w, e)).is_boolean_group(),
        "a boolean retract",
    )?;
    Ok(true)
}

/// Every quasigroup of order ≤ 4, then catalog Ward quasigroups of order
/// 5 and 6.
pub(crate) fn ward_representation_family(max: usize, _: bool) -> Instances {
    let quasi = (1..=max.min(4)).flat_map(|n| {
        quasigroups(n)
            .all
            .iter()
            .enumerate()
            .map(move |(i, q)| Instance::new(format!("order {n} quasigroup #{i}"), vec![q.clone()], vec![]))
    });
    let larger: Vec<Instance> = members(Class::Ward, max, 4)
        .into_iter()
        .filter(|(_, m, _)| m.order() > 4)
        .map(|(l, m, p)| Instance::new(l, vec![m], vec![p]))
        .collect();
    Box::new(quasi.chain(larger))
}

/// Ward ⟺ `xy = y⁻¹⋆x` for some group `⋆` on the carrier, searching every
/// group table of the same order.
pub(crate) fn ward_representation(i: &Instance) -> Step {
    let q = i.t(0);
    let represented = group_tables(q.order()).iter().any(|(g, unit)| {
        q.elements().all(|x| {
            q.elements()
                .all(|y| q.op(x, y) == g.op(group_inverse(g, *unit, y), x))
        })
    });
    iff(
        ward_point(q).is_some(),
        "Ward",
        represented,
        "xy = y⁻¹⋆x for a group ⋆",
    )?;
    Ok(true)
}

// ---- Proposition 2.5 --------------------------------------------------------

pub(crate) fn ward_with_left_unital(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(3)).flat_map(|n| {
        let wards = &quasigroups(n).ward;
        all_magmas(n)
            .expect("small order")
            .filter(|m| units(m).left.len() == 1)
            .enumerate()
            .flat_map(move |(j, m)| {
                wards.iter().enumerate().map(move |(i, (w, e))| {
                    Instance::new(
                        format!("order {n} Ward #{i} with left unital magma #{j}"),
                        vec![w.clone(), m.clone()],
                        vec![*e],
                    )
                })
            })
    }))
}

pub(crate) fn unique_left_unit_is_point(i: &Instance) -> Step {
    let (w, m, e) = (i.t(0), i.t(1), i.p(0));
    let left = units(m).left;
    if left.len() != 1 || !law(w, m, Law::Plain) {
        return Ok(false);
    }
    ensure(left[0] == e, || {
        format!("the left unit {} differs from the Ward point {e}", left[0])
    })?;
    Ok(true)
}

// ---- Theorem 2.6 ------------------------------------------------------------

pub(crate) fn unital_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(3)).flat_map(|n| {
        let unital = &small_magmas(n).unital;
        super::families::cross(unital, unital, "unital magma")
    }))
}

pub(crate) fn eckmann_hilton_holds(i: &Instance) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    if !law(a, b, Law::Plain) {
        return Ok(false);
    }
    let pa = PointedMagma::new(a.clone(), i.p(0)).expect("point in range");
    let pb = PointedMagma::new(b.clone(), i.p(1)).expect("point in range");
    let eh = eckmann_hilton(&pa, &pb).expect("hypotheses hold");
    ensure(eh.all(), || format!("Eckmann–Hilton conclusions fail: {eh:?}"))?;
    Ok(true)
}

// ---- Example 2.1 ------------------------------------------------------------

/// Coefficients run over `1..=n`, with `n` standing for 0 modulo `n`.
pub(crate) fn affine_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max).flat_map(|n| {
        let coeffs = move || 1..=n as i64;
        coeffs().flat_map(move |a| {
            coeffs().flat_map(move |b| {
                coeffs().flat_map(move |c| {
                    coeffs().map(move |d| {
                        Instance::new(
                            format!("n={n}: x·y = {a}x+{b}y, x∗y = {c}x+{d}y"),
                            vec![
                                affine::affine(n, a, b, 0).expect("n ≥ 1"),
                                affine::affine(n, c, d, 0).expect("n ≥ 1"),
                            ],
                            vec![],
                        )
                    })
                })
            })
        })
    }))
}

pub(crate) fn affine_interchange(i: &Instance) -> Step {
    holds(law_result(i.t(0), i.t(1), Law::Plain), || {
        format!("interchange law for {}", i.label)
    })?;
    Ok(true)
}

pub(crate) fn affine_diagonal_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max).flat_map(|n| {
        (1..=n as i64).flat_map(move |a| {
            (1..=n as i64).map(move |c| {
                Instance::new(
                    format!("n={n}: x·y = {a}x+{a}y, x∗y = {c}x+{c}y"),
                    vec![
                        affine::affine(n, a, a, 0).expect("n ≥ 1"),
                        affine::affine(n, c, c, 0).expect("n ≥ 1"),
                    ],
                    vec![],
                )
            })
        })
    }))
}

/// Both operations must be commutative semigroups.
pub(crate) fn affine_double_semigroup(i: &Instance) -> Step {
    for (name, t) in [("x·y", i.t(0)), ("x∗y", i.t(1))] {
        let n = t.order();
        let k = if n > 1 { t.op(1, 0) } else { 0 };
        for prop in [BasicProperty::Associative, BasicProperty::Commutative] {
            if let Some(w) = check_basic(t, prop).into_witness() {
                return Err(Failure::new(format!(
                    "{name} = {k}x+{k}y (mod {n}) is not {}",
                    prop.name()
                ))
                .with_witness(w));
            }
        }
    }
    holds(law_result(i.t(0), i.t(1), Law::Plain), || "interchange law".into())?;
    Ok(true)
}
