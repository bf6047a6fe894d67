//! The correspondences between groups, Ward quasigroups and double Ward
//! quasigroups.
//!
//! The checked constructions validate their input and fail with
//! [`Error::Precondition`] naming the property that does not hold. The
//! `formula` submodule applies the same defining formulas to any table
//! without checking, which the theorem suite uses to test converses.

use crate::classes::{double_ward_law, ward_law};
use crate::error::{Error, Result};
use crate::props::{
    check_basic, classify_group, is_left_unit, is_quasigroup, unipotency, BasicProperty,
};
use crate::table::{Magma, PointedMagma};

/// The defining formulas, applied without precondition checks.
pub mod formula {
    use crate::props::group_inverse;
    use crate::table::Magma;

    /// `x·y = x∘y⁻¹` in the group `g` with identity `e`.
    pub fn der(g: &Magma, e: usize) -> Magma {
        Magma::from_fn(g.order(), |x, y| g.op(x, group_inverse(g, e, y)))
    }

    /// `x∘y = x·(e·y)`.
    pub fn ret(w: &Magma, e: usize) -> Magma {
        Magma::from_fn(w.order(), |x, y| w.op(x, w.op(e, y)))
    }

    /// `x∗y = x⁻¹∘y⁻¹`.
    pub fn double_der(g: &Magma, e: usize) -> Magma {
        Magma::from_fn(g.order(), |x, y| {
            g.op(group_inverse(g, e, x), group_inverse(g, e, y))
        })
    }

    /// `x⋄y = (e·x)·(e·y)`.
    pub fn double_ret(dw: &Magma, e: usize) -> Magma {
        Magma::from_fn(dw.order(), |x, y| dw.op(dw.op(e, x), dw.op(e, y)))
    }

    /// `x⋆y = (e·x)·y`.
    pub fn d_of_ward(w: &Magma, e: usize) -> Magma {
        Magma::from_fn(w.order(), |x, y| w.op(w.op(e, x), y))
    }

    /// `x•y = (e⋆x)⋆y`; the same formula as [`d_of_ward`].
    pub fn d_of_dward(dw: &Magma, e: usize) -> Magma {
        d_of_ward(dw, e)
    }

    /// `x·y = x⁻¹∘y`.
    pub fn derbar(g: &Magma, e: usize) -> Magma {
        Magma::from_fn(g.order(), |x, y| g.op(group_inverse(g, e, x), y))
    }

    /// `x∘̄y = (x·e)·y`.
    pub fn retbar(q: &Magma, e: usize) -> Magma {
        Magma::from_fn(q.order(), |x, y| q.op(q.op(x, e), y))
    }
}

fn latin_witness(m: &Magma) -> Option<Vec<usize>> {
    is_quasigroup(m).into_witness().map(|v| v.to_tuple())
}

fn require_group(construction: &'static str, g: &PointedMagma, abelian: bool) -> Result<()> {
    let info = classify_group(g.magma());
    if !info.is_group {
        return Err(Error::precondition(construction, "GROUP", None));
    }
    if info.unit != Some(g.point()) {
        return Err(Error::precondition(
            construction,
            "UNIT_AT_POINT",
            Some(vec![g.point()]),
        ));
    }
    if abelian && !info.is_abelian_group() {
        let witness = check_basic(g.magma(), BasicProperty::Commutative).into_witness();
        return Err(Error::precondition(construction, "ABELIAN", witness));
    }
    Ok(())
}

fn require_quasigroup(construction: &'static str, m: &Magma) -> Result<()> {
    match latin_witness(m) {
        Some(w) => Err(Error::precondition(construction, "QUASIGROUP", Some(w))),
        None => Ok(()),
    }
}

/// A Ward quasigroup pointed at its unipotent square.
fn require_ward(construction: &'static str, w: &PointedMagma) -> Result<()> {
    require_quasigroup(construction, w.magma())?;
    if let Some(witness) = ward_law(w.magma()).into_witness() {
        return Err(Error::precondition(construction, "WARD", Some(witness)));
    }
    if unipotency(w.magma()) != Some(w.point()) {
        return Err(Error::precondition(
            construction,
            "UNIPOTENT_AT_POINT",
            Some(vec![w.point()]),
        ));
    }
    Ok(())
}

fn require_double_ward(construction: &'static str, dw: &PointedMagma) -> Result<()> {
    require_quasigroup(construction, dw.magma())?;
    match double_ward_law(dw.magma(), dw.point()).into_witness() {
        Some(witness) => Err(Error::precondition(construction, "DOUBLE_WARD", Some(witness))),
        None => Ok(()),
    }
}

fn pointed(m: Magma, point: usize) -> Result<PointedMagma> {
    PointedMagma::new(m, point)
}

/// The Ward quasigroup `x·y = x∘y⁻¹` of a group pointed at its identity.
pub fn der(g: &PointedMagma) -> Result<PointedMagma> {
    require_group("der", g, false)?;
    pointed(formula::der(g.magma(), g.point()), g.point())
}

/// The group `x∘y = x·(e·y)` of a Ward quasigroup pointed at `e = x·x`.
pub fn ret(w: &PointedMagma) -> Result<PointedMagma> {
    require_ward("ret", w)?;
    pointed(formula::ret(w.magma(), w.point()), w.point())
}

/// The double Ward quasigroup `x∗y = x⁻¹∘y⁻¹` of a group.
pub fn double_der(g: &PointedMagma) -> Result<PointedMagma> {
    require_group("Der", g, false)?;
    pointed(formula::double_der(g.magma(), g.point()), g.point())
}

/// The group `x⋄y = (e·x)·(e·y)` of a double Ward quasigroup.
pub fn double_ret(dw: &PointedMagma) -> Result<PointedMagma> {
    require_double_ward("Ret", dw)?;
    pointed(formula::double_ret(dw.magma(), dw.point()), dw.point())
}

/// The double Ward quasigroup `x⋆y = (e·x)·y` of a Ward quasigroup.
pub fn d_of_ward(w: &PointedMagma) -> Result<PointedMagma> {
    require_ward("D", w)?;
    pointed(formula::d_of_ward(w.magma(), w.point()), w.point())
}

/// The Ward quasigroup `x•y = (e⋆x)⋆y` of a double Ward quasigroup.
pub fn d_of_dward(dw: &PointedMagma) -> Result<PointedMagma> {
    require_double_ward("D", dw)?;
    pointed(formula::d_of_dward(dw.magma(), dw.point()), dw.point())
}

/// The unipotent, right modular, left unital quasigroup `x·y = x⁻¹∘y` of
/// an abelian group.
pub fn derbar(g: &PointedMagma) -> Result<PointedMagma> {
    require_group("derbar", g, true)?;
    pointed(formula::derbar(g.magma(), g.point()), g.point())
}

/// The group `x∘̄y = (x·e)·y` of a unipotent, right modular quasigroup
/// pointed at its left unit `e`.
pub fn retbar(q: &PointedMagma) -> Result<PointedMagma> {
    let (m, e) = (q.magma(), q.point());
    require_quasigroup("retbar", m)?;
    if let Some(w) = check_basic(m, BasicProperty::RightModular).into_witness() {
        return Err(Error::precondition("retbar", "RIGHT_MODULAR", Some(w)));
    }
    if !is_left_unit(m, e) {
        return Err(Error::precondition("retbar", "LEFT_UNIT_AT_POINT", Some(vec![e])));
    }
    if unipotency(m) != Some(e) {
        return Err(Error::precondition("retbar", "UNIPOTENT_AT_POINT", Some(vec![e])));
    }
    pointed(formula::retbar(m, e), e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::groups::{build_group, group_catalog, GroupSpec};
    use crate::fixtures::{cyclic, dw3, w3};

    fn group(spec: GroupSpec) -> PointedMagma {
        build_group(&spec).unwrap()
    }

    fn at0(m: Magma) -> PointedMagma {
        PointedMagma::new(m, 0).unwrap()
    }

    #[test]
    fn cyclic_three_examples() {
        let z3 = group(GroupSpec::Cyclic(3));
        assert_eq!(der(&z3).unwrap().magma(), &w3());
        assert_eq!(double_der(&z3).unwrap().magma(), &dw3());
        assert_eq!(ret(&at0(w3())).unwrap().magma(), &cyclic(3));
        assert_eq!(double_ret(&at0(dw3())).unwrap().magma(), &cyclic(3));
        assert_eq!(d_of_ward(&at0(w3())).unwrap().magma(), &dw3());
        assert_eq!(d_of_dward(&at0(dw3())).unwrap().magma(), &w3());
        assert_eq!(derbar(&z3).unwrap().magma(), &w3().dual());
        assert_eq!(retbar(&at0(w3().dual())).unwrap().magma(), &cyclic(3));
    }

    #[test]
    fn boolean_groups_are_fixed_points() {
        for spec in [GroupSpec::Cyclic(2), GroupSpec::klein()] {
            let g = group(spec);
            assert_eq!(&der(&g).unwrap(), &g);
            assert_eq!(&double_der(&g).unwrap(), &g);
            assert_eq!(&derbar(&g).unwrap(), &g);
            assert_eq!(&ret(&g).unwrap(), &g);
            assert_eq!(&double_ret(&g).unwrap(), &g);
            assert_eq!(&d_of_ward(&g).unwrap(), &g);
            assert_eq!(&d_of_dward(&g).unwrap(), &g);
            assert_eq!(&retbar(&g).unwrap(), &g);
        }
    }

    #[test]
    fn round_trips_over_catalog() {
        for spec in group_catalog(12) {
            let g = group(spec.clone());
            let w = der(&g).unwrap();
            assert_eq!(ret(&w).unwrap(), g, "{spec}");
            let dw = double_der(&g).unwrap();
            assert_eq!(double_ret(&dw).unwrap(), g, "{spec}");
            assert_eq!(d_of_dward(&d_of_ward(&w).unwrap()).unwrap(), w, "{spec}");
            assert_eq!(d_of_ward(&d_of_dward(&dw).unwrap()).unwrap(), dw, "{spec}");
        }
    }

    #[test]
    fn preconditions_are_named() {
        let z3 = at0(cyclic(3));
        let err = ret(&z3).unwrap_err();
        assert_eq!(err.to_string(), "ret: input fails WARD at witness (0, 0, 1)");
        let s3 = group(GroupSpec::Sym3);
        assert!(matches!(
            derbar(&s3),
            Err(Error::Precondition { property: "ABELIAN", .. })
        ));
        assert!(matches!(
            der(&at0(w3())),
            Err(Error::Precondition { property: "GROUP", .. })
        ));
        let shifted = PointedMagma::new(cyclic(3), 1).unwrap();
        assert!(matches!(
            der(&shifted),
            Err(Error::Precondition { property: "UNIT_AT_POINT", .. })
        ));
        assert!(matches!(
            retbar(&at0(w3())),
            Err(Error::Precondition { property: "RIGHT_MODULAR", .. })
        ));
        assert!(matches!(
            double_ret(&at0(crate::fixtures::a31())),
            Err(Error::Precondition { property: "DOUBLE_WARD", .. })
        ));
    }
}
