//! Parastrophes: mediality of parastrophe pairs, the parastrophe table and
//! counts, and the ten characterizations through single parastrophes.

use super::families::{members, quasigroup_sweep, singles, Class, Instances};
use super::util::{
    catalog_holds, ensure, iff, implies, is_abelian_group_with_unit, is_group_with_unit, law,
    same_table,
};
use super::{Instance, Step};
use crate::classes::{
    is_double_ward, right_modular_left_unit, ward_dual_point, ward_point,
};
use crate::constructions::parastrophe::parastrophe_unchecked;
use crate::constructions::ward::formula;
use crate::double::Law;
use crate::props::{check_basic, group_inverse, has, unipotency, BasicProperty};
use crate::table::Magma;

// ---- Theorem 7.1 --------------------------------------------------------------

/// Every quasigroup of order ≤ 4, or ≤ 5 in extended mode.
pub(crate) fn quasigroups_for_pairs(max: usize, extended: bool) -> Instances {
    let top = if extended { max.min(5) } else { max.min(4) };
    quasigroup_sweep(top)
}

pub(crate) fn medial_iff_parastrophe_pairs(i: &Instance) -> Step {
    let q = i.t(0);
    let medial = check_basic(q, BasicProperty::Medial).holds();
    iff(
        medial,
        "mediality (table scan)",
        catalog_holds("MEDIAL", q, None),
        "mediality (identity evaluator)",
    )?;
    let ps: Vec<Magma> = (0..=5).map(|k| parastrophe_unchecked(q, k)).collect();
    let failing = (0..=5)
        .flat_map(|a| (a..=5).map(move |b| (a, b)))
        .find(|&(a, b)| !law(&ps[a], &ps[b], Law::Plain));
    let all_pairs = failing.is_none();
    let pair_name = match failing {
        Some((a, b)) => format!("every parastrophe pair satisfies Eq (3) (∘{a}, ∘{b} fails)"),
        None => "every parastrophe pair satisfies Eq (3)".into(),
    };
    iff(medial, "mediality", all_pairs, &pair_name)?;
    Ok(true)
}

// ---- The parastrophe table ---------------------------------------------------------

const COLUMNS: [Class; 5] = [
    Class::Group,
    Class::Ward,
    Class::WardDual,
    Class::DoubleWard,
    Class::Rmulu,
];

fn column_name(part: usize) -> &'static str {
    ["group", "Ward", "Ward-dual", "double Ward", "unipotent rm-lu"][part]
}

/// Members of the five classes, the column index stored as the part.
pub(crate) fn table_columns(max: usize, _: bool) -> Instances {
    Box::new(COLUMNS.iter().enumerate().flat_map(move |(part, &class)| {
        singles(members(class, max, 4)).map(move |i| i.with_part(part))
    }))
}

/// The five cell formulas of one column, as functions of `(q, point)`.
fn column_formulas(part: usize, q: &Magma, p: usize) -> [Magma; 5] {
    let n = q.order();
    let f = |g: &dyn Fn(usize, usize) -> usize| Magma::from_fn(n, g);
    let o = |x, y| q.op(x, y);
    let inv = |x| group_inverse(q, p, x);
    match part {
        0 => [
            f(&|x, y| o(inv(x), y)),
            f(&|x, y| o(x, inv(y))),
            f(&|x, y| o(y, inv(x))),
            f(&|x, y| o(inv(y), x)),
            f(&|x, y| o(y, x)),
        ],
        1 => [
            f(&|x, y| o(o(p, y), o(p, x))),
            f(&|x, y| o(x, o(p, y))),
            f(&|x, y| o(y, o(p, x))),
            f(&|x, y| o(o(p, x), o(p, y))),
            f(&|x, y| o(y, x)),
        ],
        2 => [
            f(&|x, y| o(o(x, p), y)),
            f(&|x, y| o(o(y, p), o(x, p))),
            f(&|x, y| o(o(x, p), o(y, p))),
            f(&|x, y| o(o(y, p), x)),
            f(&|x, y| o(y, x)),
        ],
        3 => [
            f(&|x, y| o(y, x)),
            f(&|x, y| o(y, x)),
            f(&|x, y| o(x, y)),
            f(&|x, y| o(x, y)),
            f(&|x, y| o(y, x)),
        ],
        _ => [
            f(&|x, y| o(o(x, p), y)),
            f(&|x, y| o(x, y)),
            f(&|x, y| o(y, x)),
            f(&|x, y| o(o(y, p), x)),
            f(&|x, y| o(y, x)),
        ],
    }
}

pub(crate) fn table_cells(i: &Instance) -> Step {
    let (q, p) = (i.t(0), i.p(0));
    for (k, expected) in column_formulas(i.part, q, p).iter().enumerate() {
        same_table(&parastrophe_unchecked(q, k + 1), expected, || {
            format!("{} column, ∘{} row", column_name(i.part), k + 1)
        })?;
    }
    Ok(true)
}

// ---- Parastrophe counts ----------------------------------------------------------

/// Whether the six tables `∘ = ∘0, …, ∘5` coincide exactly as the
/// equivalence classes listed.
fn pattern(ps: &[Magma], classes: &[&[usize]]) -> bool {
    let class_of = |k: usize| classes.iter().position(|c| c.contains(&k)).expect("covers 0..6");
    (0..6).all(|a| (0..6).all(|b| (ps[a] == ps[b]) == (class_of(a) == class_of(b))))
}

fn distinct(ps: &[Magma]) -> usize {
    let mut v = ps.to_vec();
    v.sort();
    v.dedup();
    v.len()
}

pub(crate) fn parastrophe_counts(i: &Instance) -> Step {
    let q = i.t(0);
    let ps: Vec<Magma> = (0..=5).map(|k| parastrophe_unchecked(q, k)).collect();
    let count = distinct(&ps);
    let boolean = super::util::is_boolean_group(q);
    let commutative = has(q, BasicProperty::Commutative);
    let all_equal: &[&[usize]] = &[&[0, 1, 2, 3, 4, 5]];
    let shown = || format!("{count} distinct parastrophes");
    match i.part {
        0 => {
            if !commutative {
                ensure(count == 6, || format!("a non-commutative group has {}", shown()))?;
            } else if boolean {
                ensure(count == 1, || format!("a boolean group has {}", shown()))?;
            } else {
                ensure(pattern(&ps, &[&[0, 5], &[1, 3], &[2, 4]]), || {
                    format!("the group pattern ∘=∘5, ∘1=∘3, ∘2=∘4 fails with {}", shown())
                })?;
            }
        }
        1 | 2 => {
            let medial = has(q, BasicProperty::Medial);
            let three: &[&[usize]] = if i.part == 1 {
                &[&[0, 1], &[2, 3], &[4, 5]]
            } else {
                // The mirror pattern for the dual side.
                &[&[0, 2], &[1, 4], &[3, 5]]
            };
            iff(count == 1, "one parastrophe", boolean, "a boolean group")?;
            iff(
                count == 3 && pattern(&ps, three),
                "three parastrophes in the stated pattern",
                medial && !boolean,
                "medial and not a boolean group",
            )?;
            iff(count == 6, "six parastrophes", !medial && !boolean, "neither medial nor boolean")?;
        }
        3 => {
            if commutative {
                ensure(pattern(&ps, all_equal), || format!("a commutative one has {}", shown()))?;
            } else {
                ensure(pattern(&ps, &[&[0, 3, 4], &[1, 2, 5]]), || {
                    format!("the pattern ∘=∘3=∘4≠∘1=∘2=∘5 fails with {}", shown())
                })?;
            }
        }
        _ => {
            if boolean {
                ensure(pattern(&ps, all_equal), || format!("a boolean group has {}", shown()))?;
            } else {
                ensure(pattern(&ps, &[&[0, 2], &[1, 4], &[3, 5]]), || {
                    format!("the pattern ∘=∘2≠∘1=∘4≠∘3=∘5 fails with {}", shown())
                })?;
            }
        }
    }
    Ok(true)
}

// ---- The ten characterizations ----------------------------------------------------

/// Every quasigroup of order ≤ 5, then catalog members of every class
/// above that order.
pub(crate) fn characterization_family(max: usize, _: bool) -> Instances {
    let low = max.min(5);
    let larger: Vec<Instance> = COLUMNS
        .iter()
        .flat_map(|&c| members(c, max, 0))
        .filter(|(_, m, _)| m.order() > low)
        .map(|(l, m, _)| Instance::new(l, vec![m], vec![]))
        .collect();
    Box::new(quasigroup_sweep(low).chain(larger))
}

fn ward_at(m: &Magma, r: usize) -> bool {
    ward_point(m) == Some(r)
}

fn ward_dual_at(m: &Magma, r: usize) -> bool {
    ward_dual_point(m) == Some(r)
}

fn rmulu_at(m: &Magma, l: usize) -> bool {
    right_modular_left_unit(m) == Some(l) && unipotency(m) == Some(l)
}

/// Checks, for every point `r`, that the parastrophe `∘i` is in `lhs` at `r`
/// exactly when the original equals `formula(∘i, r)` and is in `rhs` at `r`.
fn characterization(
    i: &Instance,
    index: usize,
    lhs: (&str, fn(&Magma, usize) -> bool),
    formula: impl Fn(&Magma, usize) -> Magma,
    rhs: (&str, fn(&Magma, usize) -> bool),
) -> Step {
    let q = i.t(0);
    let p = parastrophe_unchecked(q, index);
    for r in q.elements() {
        let left = lhs.1(&p, r);
        let right = *q == formula(&p, r) && rhs.1(q, r);
        iff(
            left,
            &format!("∘{index} {} at {r}", lhs.0),
            right,
            &format!("∘ given by the formula and {} at {r}", rhs.0),
        )?;
    }
    Ok(true)
}

fn group_at(m: &Magma, r: usize) -> bool {
    is_group_with_unit(m, r)
}

fn abelian_group_at(m: &Magma, r: usize) -> bool {
    is_abelian_group_with_unit(m, r)
}

fn op(n: usize, f: impl Fn(usize, usize) -> usize) -> Magma {
    Magma::from_fn(n, f)
}

pub(crate) fn t7_2(i: &Instance) -> Step {
    characterization(
        i,
        1,
        ("Ward", ward_at),
        |p, r| op(p.order(), |x, y| p.op(p.op(r, y), p.op(r, x))),
        ("Ward", ward_at),
    )
}

pub(crate) fn t7_3(i: &Instance) -> Step {
    characterization(
        i,
        2,
        ("Ward", ward_at),
        formula::ret,
        ("a group with unit", group_at),
    )
}

pub(crate) fn t7_4(i: &Instance) -> Step {
    characterization(
        i,
        3,
        ("Ward", ward_at),
        |p, r| op(p.order(), |x, y| p.op(p.op(r, x), p.op(r, y))),
        ("Ward-dual", ward_dual_at),
    )
}

/// `x∘y = y∘4(r∘4x)` is the dual of ret(∘4, r).
pub(crate) fn t7_5(i: &Instance) -> Step {
    characterization(
        i,
        4,
        ("Ward", ward_at),
        |p, r| formula::ret(p, r).dual(),
        ("a group with unit", group_at),
    )
}

pub(crate) fn t7_6(i: &Instance) -> Step {
    characterization(
        i,
        1,
        ("Ward-dual", ward_dual_at),
        formula::retbar,
        ("a group with unit", group_at),
    )
}

pub(crate) fn t7_7(i: &Instance) -> Step {
    characterization(
        i,
        2,
        ("Ward-dual", ward_dual_at),
        |p, r| op(p.order(), |x, y| p.op(p.op(y, r), p.op(x, r))),
        ("Ward-dual", ward_dual_at),
    )
}

/// `x∘y = (y∘3r)∘3x` is the dual of retbar(∘3, r).
pub(crate) fn t7_8(i: &Instance) -> Step {
    characterization(
        i,
        3,
        ("Ward-dual", ward_dual_at),
        |p, r| formula::retbar(p, r).dual(),
        ("a group with unit", group_at),
    )
}

pub(crate) fn t7_9(i: &Instance) -> Step {
    characterization(
        i,
        4,
        ("Ward-dual", ward_dual_at),
        |p, r| op(p.order(), |x, y| p.op(p.op(x, r), p.op(y, r))),
        ("Ward", ward_at),
    )
}

pub(crate) fn t7_10(i: &Instance) -> Step {
    characterization(
        i,
        1,
        ("unipotent, right modular, left unital", rmulu_at),
        |p, l| op(p.order(), |x, y| p.op(p.op(y, l), x)),
        ("an abelian group with unit", abelian_group_at),
    )
}

pub(crate) fn t7_11(i: &Instance) -> Step {
    let q = i.t(0);
    let dw = is_double_ward(q);
    let dual = q.dual();
    for k in 1..=5 {
        let p = parastrophe_unchecked(q, k);
        iff(
            is_double_ward(&p),
            &format!("∘{k} double Ward"),
            dw,
            "∘ double Ward",
        )?;
        implies(
            dw,
            "∘ double Ward",
            p == *q || p == dual,
            &format!("∘{k} equal to ∘ or its dual"),
        )?;
    }
    Ok(true)
}

// ---- Eqs (6)–(10) ---------------------------------------------------------------------

pub(crate) fn wards(max: usize, _: bool) -> Instances {
    singles(members(Class::Ward, max, 4))
}

pub(crate) fn ward_identities(i: &Instance) -> Step {
    let (w, e) = (i.t(0), i.p(0));
    for name in ["E6", "E7", "E8", "E9", "E10"] {
        ensure(catalog_holds(name, w, Some(e)), || format!("{name} fails at {e}"))?;
    }
    Ok(true)
}
