//! Pairs of operations on one carrier: the three interchange laws, the
//! unit arguments around them, and the involutive-automorphism
//! characterizations of right modular, left unital double magmas.

use std::fmt;

use crate::error::{Error, Result};
use crate::iso::{is_homomorphism, is_involution, Permutation};
use crate::props::{first_quad, has, is_left_unit, is_right_unit, BasicProperty, PropertyResult};
use crate::table::{Magma, PointedMagma};

/// The interchange laws between `·` (first operation) and `∗` (second).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Law {
    /// `(x·y)∗(z·w) = (x∗z)·(y∗w)`
    Plain,
    /// `(x·y)∗(z·w) = (y∗x)·(w∗z)`
    Lateral,
    /// `(x·y)∗(z·w) = (w∗z)·(y∗x)`
    Reversible,
}

impl Law {
    pub const ALL: [Law; 3] = [Law::Plain, Law::Lateral, Law::Reversible];

    /// The catalog name of the law.
    pub fn name(self) -> &'static str {
        match self {
            Law::Plain => "INTERCHANGE",
            Law::Lateral => "LATERAL",
            Law::Reversible => "REVERSIBLE_LAW",
        }
    }

    /// Whether the quadruple `(x, y, z, w)` falsifies the law for `(a, b)`.
    pub fn falsified_by(self, a: &Magma, b: &Magma, t: &[usize]) -> bool {
        let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
        let lhs = b.op(a.op(x, y), a.op(z, w));
        let rhs = match self {
            Law::Plain => a.op(b.op(x, z), b.op(y, w)),
            Law::Lateral => a.op(b.op(y, x), b.op(w, z)),
            Law::Reversible => a.op(b.op(w, z), b.op(y, x)),
        };
        lhs != rhs
    }
}

/// Checks `law` with `·` = `a` and `∗` = `b` over all quadruples.
pub fn check_law(a: &Magma, b: &Magma, law: Law) -> Result<PropertyResult> {
    a.same_order(b)?;
    Ok(first_quad(a.order(), |x, y, z, w| law.falsified_by(a, b, &[x, y, z, w])).into())
}

/// Shorthand for `check_law(a, b, law)?.holds()`.
pub fn satisfies(a: &Magma, b: &Magma, law: Law) -> Result<bool> {
    Ok(check_law(a, b, law)?.holds())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairReport {
    pub plain: PropertyResult,
    pub lateral: PropertyResult,
    pub reversible: PropertyResult,
    /// The two tables differ.
    pub proper: bool,
}

impl PairReport {
    pub fn law(&self, law: Law) -> &PropertyResult {
        match law {
            Law::Plain => &self.plain,
            Law::Lateral => &self.lateral,
            Law::Reversible => &self.reversible,
        }
    }
}

pub fn classify_pair(a: &Magma, b: &Magma) -> Result<PairReport> {
    Ok(PairReport {
        plain: check_law(a, b, Law::Plain)?,
        lateral: check_law(a, b, Law::Lateral)?,
        reversible: check_law(a, b, Law::Reversible)?,
        proper: a != b,
    })
}

/// Whether each law holds for `(a, b)` exactly when it holds for `(b, a)`.
pub fn symmetry_check(a: &Magma, b: &Magma) -> Result<bool> {
    let ab = classify_pair(a, b)?;
    let ba = classify_pair(b, a)?;
    Ok(Law::ALL
        .iter()
        .all(|&l| ab.law(l).holds() == ba.law(l).holds()))
}

/// Result of computing and verifying the automorphism of the duality
/// theorems.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlphaOutcome {
    /// The formula gave an involutive automorphism reconstructing `∗`.
    Found(Permutation),
    /// The pair does not satisfy the interchange law; the witness falsifies it.
    NotDoubleMagma(Vec<usize>),
    /// The formula's value fails one of the theorem's conclusions.
    Violation { alpha: Vec<usize>, reason: String },
}

impl AlphaOutcome {
    pub fn alpha(&self) -> Option<&Permutation> {
        match self {
            AlphaOutcome::Found(a) => Some(a),
            _ => None,
        }
    }
}

impl fmt::Display for AlphaOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphaOutcome::Found(a) => write!(f, "alpha = {a:?}"),
            AlphaOutcome::NotDoubleMagma(w) => {
                write!(f, "not a double magma, interchange fails at {w:?}")
            }
            AlphaOutcome::Violation { alpha, reason } => {
                write!(f, "alpha = {alpha:?} {reason}")
            }
        }
    }
}

fn require(construction: &'static str, ok: bool, property: &'static str, point: usize) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(construction, property, Some(vec![point])))
    }
}

fn require_right_modular(construction: &'static str, m: &Magma) -> Result<()> {
    match crate::props::check_basic(m, BasicProperty::RightModular).into_witness() {
        Some(w) => Err(Error::precondition(construction, "RIGHT_MODULAR", Some(w))),
        None => Ok(()),
    }
}

fn require_left_modular(construction: &'static str, m: &Magma) -> Result<()> {
    match crate::props::check_basic(m, BasicProperty::LeftModular).into_witness() {
        Some(w) => Err(Error::precondition(construction, "LEFT_MODULAR", Some(w))),
        None => Ok(()),
    }
}

/// Checks the conclusions shared by both characterizations: `α` is an
/// involutive automorphism of `b` and `b(x, y) = reconstruct(x, y, α)`.
fn verify_alpha(
    alpha: Vec<usize>,
    b: &Magma,
    reconstruct: impl Fn(usize, usize, &[usize]) -> usize,
) -> AlphaOutcome {
    let violation = |reason: &str| AlphaOutcome::Violation {
        alpha: alpha.clone(),
        reason: reason.to_string(),
    };
    if !is_involution(&alpha) {
        return violation("is not an involution");
    }
    if !is_homomorphism(b, b, &alpha) {
        return violation("is not an automorphism of the second operation");
    }
    let reconstructs = b
        .elements()
        .all(|x| b.elements().all(|y| b.op(x, y) == reconstruct(x, y, &alpha)));
    if !reconstructs {
        return violation("does not reconstruct the second operation");
    }
    AlphaOutcome::Found(alpha)
}

/// For right modular magmas `a` and `b`, left unital at their points,
/// forming a double magma: `α(x) = (x∗ē)·ē` with `ē` the point of `b`,
/// verified to be an involutive automorphism of `b` with `x∗y = α(x)·y`.
pub fn alpha_left(a: &PointedMagma, b: &PointedMagma) -> Result<AlphaOutcome> {
    const NAME: &str = "alpha_left";
    let (ma, mb) = (a.magma(), b.magma());
    ma.same_order(mb)?;
    require_right_modular(NAME, ma)?;
    require_right_modular(NAME, mb)?;
    require(NAME, is_left_unit(ma, a.point()), "LEFT_UNIT_AT_POINT", a.point())?;
    require(NAME, is_left_unit(mb, b.point()), "LEFT_UNIT_AT_POINT", b.point())?;
    if let Some(w) = check_law(ma, mb, Law::Plain)?.into_witness() {
        return Ok(AlphaOutcome::NotDoubleMagma(w));
    }
    let e = b.point();
    let alpha = ma.elements().map(|x| ma.op(mb.op(x, e), e)).collect();
    Ok(verify_alpha(alpha, mb, |x, y, al| ma.op(al[x], y)))
}

/// For `a` left modular and right unital at its point `e`, and `b` right
/// modular and left unital at its point, forming a double magma:
/// `α(x) = (e·x)∗e`, verified to be an involutive automorphism of `b`
/// with `x∗y = y·α(x)`.
pub fn alpha_right(a: &PointedMagma, b: &PointedMagma) -> Result<AlphaOutcome> {
    const NAME: &str = "alpha_right";
    let (ma, mb) = (a.magma(), b.magma());
    ma.same_order(mb)?;
    require_left_modular(NAME, ma)?;
    require_right_modular(NAME, mb)?;
    require(NAME, is_right_unit(ma, a.point()), "RIGHT_UNIT_AT_POINT", a.point())?;
    require(NAME, is_left_unit(mb, b.point()), "LEFT_UNIT_AT_POINT", b.point())?;
    if let Some(w) = check_law(ma, mb, Law::Plain)?.into_witness() {
        return Ok(AlphaOutcome::NotDoubleMagma(w));
    }
    let e = a.point();
    let alpha = ma.elements().map(|x| mb.op(ma.op(e, x), e)).collect();
    Ok(verify_alpha(alpha, mb, |x, y, al| ma.op(y, al[x])))
}

/// The conclusions of the Eckmann–Hilton argument for a unital pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EckmannHilton {
    pub units_equal: bool,
    pub operations_coincide: bool,
    pub commutative: bool,
    pub associative: bool,
}

impl EckmannHilton {
    pub fn all(&self) -> bool {
        self.units_equal && self.operations_coincide && self.commutative && self.associative
    }
}

/// For two magmas with two-sided units at their points that satisfy the
/// interchange law, evaluates the four conclusions of the argument.
pub fn eckmann_hilton(a: &PointedMagma, b: &PointedMagma) -> Result<EckmannHilton> {
    const NAME: &str = "eckmann_hilton";
    let (ma, mb) = (a.magma(), b.magma());
    ma.same_order(mb)?;
    for m in [a, b] {
        let unital = is_left_unit(m.magma(), m.point()) && is_right_unit(m.magma(), m.point());
        require(NAME, unital, "UNIT_AT_POINT", m.point())?;
    }
    if let Some(w) = check_law(ma, mb, Law::Plain)?.into_witness() {
        return Err(Error::precondition(NAME, "INTERCHANGE", Some(w)));
    }
    Ok(EckmannHilton {
        units_equal: a.point() == b.point(),
        operations_coincide: ma == mb,
        commutative: has(ma, BasicProperty::Commutative) && has(mb, BasicProperty::Commutative),
        associative: has(ma, BasicProperty::Associative) && has(mb, BasicProperty::Associative),
    })
}

/// `(x∗e)⋆e = (x⋆e)∗e` for all `x`, where `∗` is `b`, `⋆` is `c` and `e`
/// is the left unit of the shared magma `a`.
pub fn commuting_condition(a: &PointedMagma, b: &PointedMagma, c: &PointedMagma) -> Result<bool> {
    let (ma, mb, mc) = (a.magma(), b.magma(), c.magma());
    ma.same_order(mb)?;
    ma.same_order(mc)?;
    let e = a.point();
    require("commuting_condition", is_left_unit(ma, e), "LEFT_UNIT_AT_POINT", e)?;
    Ok(ma
        .elements()
        .all(|x| mc.op(mb.op(x, e), e) == mb.op(mc.op(x, e), e)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic, dw3, w3};

    fn at0(m: Magma) -> PointedMagma {
        PointedMagma::new(m, 0).unwrap()
    }

    #[test]
    fn classify_examples() {
        let r = classify_pair(&w3(), &w3().dual()).unwrap();
        assert!(r.plain.holds() && r.reversible.holds() && r.proper);
        assert!(!r.lateral.holds());
        let ret_dw3 = cyclic(3);
        let r = classify_pair(&dw3(), &ret_dw3).unwrap();
        assert!(r.lateral.holds() && r.plain.holds() && r.reversible.holds());
        let r = classify_pair(&cyclic(2), &cyclic(2)).unwrap();
        assert!(r.plain.holds() && r.lateral.holds() && r.reversible.holds());
        assert!(!r.proper);
        assert!(classify_pair(&cyclic(2), &cyclic(3)).is_err());
    }

    #[test]
    fn witnesses_replay() {
        let r = classify_pair(&w3(), &w3().dual()).unwrap();
        let w = r.lateral.witness().unwrap();
        assert!(Law::Lateral.falsified_by(&w3(), &w3().dual(), w));
    }

    #[test]
    fn symmetry_examples() {
        assert!(symmetry_check(&w3(), &w3().dual()).unwrap());
        assert!(symmetry_check(&cyclic(3), &w3()).unwrap());
    }

    #[test]
    fn alpha_examples() {
        let derbar_z3 = at0(w3().dual());
        let z3 = at0(cyclic(3));
        assert_eq!(
            alpha_left(&derbar_z3, &z3).unwrap(),
            AlphaOutcome::Found(vec![0, 2, 1])
        );
        assert_eq!(
            alpha_left(&derbar_z3, &derbar_z3).unwrap(),
            AlphaOutcome::Found(vec![0, 1, 2])
        );
        assert_eq!(
            alpha_right(&at0(w3()), &derbar_z3).unwrap(),
            AlphaOutcome::Found(vec![0, 1, 2])
        );
        assert!(matches!(
            alpha_left(&at0(w3()), &z3),
            Err(Error::Precondition { property: "RIGHT_MODULAR", .. })
        ));
    }

    #[test]
    fn alpha_for_twisted_and_unrelated_partners() {
        let klein = Magma::from_fn(4, |x, y| x ^ y);
        // twisting by the involutive automorphism swapping 1 and 2
        let twisted = Magma::from_fn(4, |x, y| klein.op([0, 2, 1, 3][x], y));
        assert_eq!(
            alpha_left(&at0(klein.clone()), &at0(twisted)).unwrap(),
            AlphaOutcome::Found(vec![0, 2, 1, 3])
        );
        let out = alpha_left(&at0(klein), &at0(cyclic(4))).unwrap();
        assert!(matches!(out, AlphaOutcome::NotDoubleMagma(_)));
    }

    #[test]
    fn eckmann_hilton_examples() {
        let z3 = at0(cyclic(3));
        assert!(eckmann_hilton(&z3, &z3).unwrap().all());
        assert!(matches!(
            eckmann_hilton(&at0(w3()), &z3),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn commuting_examples() {
        let z5 = at0(cyclic(5));
        let neg = Magma::from_fn(5, |x, y| ((5 - x) % 5 + y) % 5);
        assert!(commuting_condition(&z5, &z5, &at0(neg.clone())).unwrap());
        assert!(commuting_condition(&z5, &z5, &z5).unwrap());
        let one = at0(cyclic(1));
        assert!(commuting_condition(&one, &one, &one).unwrap());
    }
}
