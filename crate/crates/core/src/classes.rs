//! Membership tests for the quasigroup classes built from groups.
//!
//! These are direct loops over the table. The identity language checks the
//! same laws through its own evaluator, and the two are compared in tests.

use crate::props::{
    first_triple, has, is_left_unit, is_quasigroup, unipotency, BasicProperty, PropertyResult,
};
use crate::table::Magma;

/// `xz·yz = xy` for all `x, y, z`.
pub fn ward_law(m: &Magma) -> PropertyResult {
    let op = |a, b| m.op(a, b);
    first_triple(m.order(), |x, y, z| op(op(x, z), op(y, z)) != op(x, y)).into()
}

/// `(ee·xz)(ey·z) = xy` for all `x, y, z`, at the given `e`.
pub fn double_ward_law(m: &Magma, e: usize) -> PropertyResult {
    let op = |a, b| m.op(a, b);
    let ee = op(e, e);
    first_triple(m.order(), |x, y, z| {
        op(op(ee, op(x, z)), op(op(e, y), z)) != op(x, y)
    })
    .into()
}

/// The weakened form `(e·xz)(ey·z) = xy`.
pub fn dw_weak_law(m: &Magma, e: usize) -> PropertyResult {
    let op = |a, b| m.op(a, b);
    first_triple(m.order(), |x, y, z| {
        op(op(e, op(x, z)), op(op(e, y), z)) != op(x, y)
    })
    .into()
}

/// The point `e = xx` of a Ward quasigroup, or `None` if `m` is not one.
pub fn ward_point(m: &Magma) -> Option<usize> {
    if !is_quasigroup(m).holds() || !ward_law(m).holds() {
        return None;
    }
    unipotency(m)
}

pub fn is_ward(m: &Magma) -> bool {
    ward_point(m).is_some()
}

/// The point of a Ward-dual quasigroup (the dual of a Ward quasigroup).
pub fn ward_dual_point(m: &Magma) -> Option<usize> {
    ward_point(&m.dual())
}

pub fn is_double_ward_at(m: &Magma, e: usize) -> bool {
    e < m.order() && is_quasigroup(m).holds() && double_ward_law(m, e).holds()
}

/// Every `e` at which `m` is a double Ward quasigroup. The point is not
/// unique in general.
pub fn double_ward_points(m: &Magma) -> Vec<usize> {
    if !is_quasigroup(m).holds() {
        return Vec::new();
    }
    m.elements()
        .filter(|&e| double_ward_law(m, e).holds())
        .collect()
}

pub fn is_double_ward(m: &Magma) -> bool {
    !double_ward_points(m).is_empty()
}

/// The left unit of a right modular, left unital magma. Right modularity
/// makes the left unit unique.
pub fn right_modular_left_unit(m: &Magma) -> Option<usize> {
    if !has(m, BasicProperty::RightModular) {
        return None;
    }
    m.elements().find(|&l| is_left_unit(m, l))
}

/// The right unit of a left modular, right unital magma.
pub fn left_modular_right_unit(m: &Magma) -> Option<usize> {
    right_modular_left_unit(&m.dual())
}

/// The left unit of a unipotent, left unital, right modular quasigroup.
pub fn modular_unipotent_point(m: &Magma) -> Option<usize> {
    if !is_quasigroup(m).holds() {
        return None;
    }
    let l = right_modular_left_unit(m)?;
    (unipotency(m) == Some(l)).then_some(l)
}
