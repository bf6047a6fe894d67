//! Double magmas of right modular, left unital magmas and the automorphism
//! characterizations; idempotent magmas.

use super::families::{quasigroups, small_magmas, Instances};
use super::util::{ensure, holds, iff, law, law_result};
use super::{Instance, Step};
use crate::classes::right_modular_left_unit;
use crate::constructions::enumerate::all_magmas;
use crate::double::{alpha_left, alpha_right, commuting_condition, AlphaOutcome, Law};
use crate::iso::{automorphisms, compose};
use crate::table::{Magma, PointedMagma};

/// Right modular, left unital quasigroups of order `n` with their left unit.
fn rmlu(n: usize) -> &'static [(Magma, usize)] {
    &quasigroups(n).rmlu
}

fn pointed(m: &Magma, p: usize) -> PointedMagma {
    PointedMagma::new(m.clone(), p).expect("point in range")
}

pub(crate) fn rmlu_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| super::families::cross(rmlu(n), rmlu(n), "rmlu")))
}

/// Pairs `(a, b)` with `a` left modular and right unital (the dual of a
/// member) and `b` right modular and left unital.
pub(crate) fn lmru_rmlu_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| {
        super::families::cross(rmlu(n), rmlu(n), "lmru/rmlu").map(|mut i| {
            i.tables[0] = i.tables[0].dual();
            i
        })
    }))
}

pub(crate) fn rmlu_triples(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| {
        let list = rmlu(n);
        list.iter().enumerate().flat_map(move |(i, (a, pa))| {
            list.iter()
                .enumerate()
                .filter(move |(_, (b, _))| law(a, b, Law::Plain))
                .flat_map(move |(j, (b, pb))| {
                    list.iter()
                        .enumerate()
                        .filter(move |(_, (c, _))| law(a, c, Law::Plain))
                        .map(move |(k, (c, pc))| {
                            Instance::new(
                                format!("order {n} rmlu #{i} with #{j} and #{k}"),
                                vec![a.clone(), b.clone(), c.clone()],
                                vec![*pa, *pb, *pc],
                            )
                        })
                })
        })
    }))
}

/// As [`rmlu_triples`], with the second and third tables dualized to left
/// modular, right unital magmas.
pub(crate) fn rmlu_lmru_triples(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(4)).flat_map(|n| {
        let list = rmlu(n);
        list.iter().enumerate().flat_map(move |(i, (a, pa))| {
            list.iter()
                .enumerate()
                .filter(move |(_, (b, _))| law(a, &b.dual(), Law::Plain))
                .flat_map(move |(j, (b, pb))| {
                    list.iter()
                        .enumerate()
                        .filter(move |(_, (c, _))| law(a, &c.dual(), Law::Plain))
                        .map(move |(k, (c, pc))| {
                            Instance::new(
                                format!("order {n} rmlu #{i} with dual #{j} and dual #{k}"),
                                vec![a.clone(), b.dual(), c.dual()],
                                vec![*pa, *pb, *pc],
                            )
                        })
                })
        })
    }))
}

/// Some involutive automorphism `α` of `b` with `b(x, y) = f(α, x, y)`.
fn some_alpha(b: &Magma, f: impl Fn(&[usize], usize, usize) -> usize) -> Option<Vec<usize>> {
    automorphisms(b, true)
        .expect("order within the automorphism limit")
        .into_iter()
        .find(|al| b.elements().all(|x| b.elements().all(|y| b.op(x, y) == f(al, x, y))))
}

pub(crate) fn left_characterization(i: &Instance) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    let plain = law(a, b, Law::Plain);
    let alpha = some_alpha(b, |al, x, y| a.op(al[x], y));
    iff(
        plain,
        "double magma",
        alpha.is_some(),
        "x∗y = αx·y for an involutive automorphism α of ∗",
    )?;
    if plain {
        let outcome = alpha_left(&pointed(a, i.p(0)), &pointed(b, i.p(1))).expect("hypotheses hold");
        ensure(matches!(outcome, AlphaOutcome::Found(_)), || {
            format!("α = (x∗ē)·ē fails: {outcome}")
        })?;
        let e = i.p(1);
        let other: Vec<usize> = a.elements().map(|x| b.op(a.op(x, e), e)).collect();
        ensure(outcome.alpha() == Some(&other), || {
            "(x∗ē)·ē and (x·ē)∗ē differ".into()
        })?;
    }
    Ok(true)
}

pub(crate) fn right_characterization(i: &Instance) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    let plain = law(a, b, Law::Plain);
    let alpha = some_alpha(b, |al, x, y| a.op(y, al[x]));
    iff(
        plain,
        "double magma",
        alpha.is_some(),
        "x∗y = y·αx for an involutive automorphism α of ∗",
    )?;
    if plain {
        let outcome =
            alpha_right(&pointed(a, i.p(0)), &pointed(b, i.p(1))).expect("hypotheses hold");
        ensure(matches!(outcome, AlphaOutcome::Found(_)), || {
            format!("α = (e·x)∗e fails: {outcome}")
        })?;
    }
    Ok(true)
}

/// The three-way equivalence shared by both corollaries, given `α` and `β`.
fn commuting(i: &Instance, alpha: &[usize], beta: &[usize]) -> Step {
    let (a, b, c) = (i.t(0), i.t(1), i.t(2));
    let pa = pointed(a, i.p(0));
    let double = law(b, c, Law::Plain);
    let commute = compose(alpha, beta) == compose(beta, alpha);
    let condition = commuting_condition(&pa, &pointed(b, i.p(1)), &pointed(c, i.p(2)))
        .expect("left unit of the shared magma");
    iff(double, "(∗, ⋆) double magma", commute, "α and β commute")?;
    iff(commute, "α and β commute", condition, "(x∗e)⋆e = (x⋆e)∗e")?;
    Ok(true)
}

/// `x·y = αx∗y = βx⋆y` with `α`, `β` involutive automorphisms of `·`.
pub(crate) fn left_commuting(i: &Instance) -> Step {
    let (a, b, c) = (i.t(0), i.t(1), i.t(2));
    let pa = pointed(a, i.p(0));
    let alpha = alpha_left(&pointed(b, i.p(1)), &pa).expect("hypotheses hold");
    let beta = alpha_left(&pointed(c, i.p(2)), &pa).expect("hypotheses hold");
    let (Some(alpha), Some(beta)) = (alpha.alpha(), beta.alpha()) else {
        return Ok(false);
    };
    commuting(i, alpha, beta)
}

/// `x∗y = αy·x` and `x⋆y = βy·x` with `α`, `β` involutive automorphisms
/// of `·`.
pub(crate) fn right_commuting(i: &Instance) -> Step {
    let (a, b, c) = (i.t(0), i.t(1), i.t(2));
    // The three operations share the unit e.
    if i.p(1) != i.p(0) || i.p(2) != i.p(0) {
        return Ok(false);
    }
    let pa = pointed(a, i.p(0));
    // Theorem 5.4 with the roles swapped gives a(x, y) = b(y, αx), that is
    // b(x, y) = a(αy, x).
    let alpha = alpha_right(&pointed(b, i.p(1)), &pa).expect("hypotheses hold");
    let beta = alpha_right(&pointed(c, i.p(2)), &pa).expect("hypotheses hold");
    let (Some(alpha), Some(beta)) = (alpha.alpha(), beta.alpha()) else {
        return Ok(false);
    };
    let reconstructs = |t: &Magma, al: &[usize]| {
        t.elements().all(|x| t.elements().all(|y| t.op(x, y) == a.op(al[y], x)))
    };
    if !reconstructs(b, alpha) || !reconstructs(c, beta) {
        return Ok(false);
    }
    commuting(i, alpha, beta)
}

/// Right modular, left unital magmas of order ≤ 3 and quasigroups of
/// order 4.
pub(crate) fn rmlu_magmas(max: usize, _: bool) -> Instances {
    let small = (1..=max.min(3)).flat_map(|n| {
        all_magmas(n)
            .expect("small order")
            .filter_map(|m| right_modular_left_unit(&m).map(|l| (m, l)))
            .enumerate()
            .map(move |(i, (m, l))| Instance::new(format!("order {n} rmlu magma #{i}"), vec![m], vec![l]))
    });
    let four = (4..=max.min(4)).flat_map(|n| {
        rmlu(n)
            .iter()
            .enumerate()
            .map(move |(i, (m, l))| Instance::new(format!("order {n} rmlu quasigroup #{i}"), vec![m.clone()], vec![*l]))
    });
    Box::new(small.chain(four))
}

pub(crate) fn double_with_dual(i: &Instance) -> Step {
    let m = i.t(0);
    holds(law_result(m, &m.dual(), Law::Plain), || "interchange law with the dual".into())?;
    Ok(true)
}

pub(crate) fn idempotent_pairs(max: usize, _: bool) -> Instances {
    Box::new((1..=max.min(3)).flat_map(|n| {
        let list = &small_magmas(n).idempotent;
        list.iter().enumerate().flat_map(move |(i, a)| {
            list.iter().enumerate().map(move |(j, b)| {
                Instance::new(
                    format!("order {n} idempotent #{i} with #{j}"),
                    vec![a.clone(), b.clone()],
                    vec![],
                )
            })
        })
    }))
}

pub(crate) fn idempotent_laws(i: &Instance) -> Step {
    let (a, b) = (i.t(0), i.t(1));
    iff(law(a, b, Law::Lateral), "lateral law", a == b, "equal operations")?;
    iff(
        law(a, b, Law::Reversible),
        "reversible law",
        *b == a.dual(),
        "∗ equal to the dual of ·",
    )?;
    Ok(true)
}
