//! Single-magma structural predicates.
//!
//! Every universally quantified check scans its variables in lexicographic
//! order and reports the first falsifying tuple.

use std::fmt;

use crate::table::Magma;

/// Outcome of a universally quantified check. A witness is present exactly
/// when the property fails.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PropertyResult<W = Vec<usize>> {
    witness: Option<W>,
}

impl<W> PropertyResult<W> {
    pub fn pass() -> Self {
        PropertyResult { witness: None }
    }

    pub fn fail(witness: W) -> Self {
        PropertyResult {
            witness: Some(witness),
        }
    }

    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }

    pub fn witness(&self) -> Option<&W> {
        self.witness.as_ref()
    }

    pub fn into_witness(self) -> Option<W> {
        self.witness
    }
}

impl<W> From<Option<W>> for PropertyResult<W> {
    fn from(witness: Option<W>) -> Self {
        PropertyResult { witness }
    }
}

pub(crate) fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            if bad(x, y) {
                return Some(vec![x, y]);
            }
        }
    }
    None
}

pub(crate) fn first_triple(
    n: usize,
    mut bad: impl FnMut(usize, usize, usize) -> bool,
) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if bad(x, y, z) {
                    return Some(vec![x, y, z]);
                }
            }
        }
    }
    None
}

pub(crate) fn first_quad(
    n: usize,
    mut bad: impl FnMut(usize, usize, usize, usize) -> bool,
) -> Option<Vec<usize>> {
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for w in 0..n {
                    if bad(x, y, z, w) {
                        return Some(vec![x, y, z, w]);
                    }
                }
            }
        }
    }
    None
}

/// Which kind of line of the table broke the Latin property.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    Row,
    Column,
}

/// A row or column that repeats `value`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LatinViolation {
    pub line: Line,
    pub index: usize,
    pub value: usize,
}

impl LatinViolation {
    /// `(flag, index, value)` with flag 0 for a row and 1 for a column.
    pub fn to_tuple(self) -> Vec<usize> {
        let flag = match self.line {
            Line::Row => 0,
            Line::Column => 1,
        };
        vec![flag, self.index, self.value]
    }
}

impl fmt::Display for LatinViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let line = match self.line {
            Line::Row => "row",
            Line::Column => "column",
        };
        write!(f, "{line} {} duplicates {}", self.index, self.value)
    }
}

/// Latin-square test: every row and every column is a permutation.
/// Rows are scanned before columns.
pub fn is_quasigroup(m: &Magma) -> PropertyResult<LatinViolation> {
    let n = m.order();
    let mut seen = vec![usize::MAX; n];
    let mut stamp = 0;
    for x in 0..n {
        for y in 0..n {
            let v = m.op(x, y);
            if seen[v] == stamp {
                return PropertyResult::fail(LatinViolation {
                    line: Line::Row,
                    index: x,
                    value: v,
                });
            }
            seen[v] = stamp;
        }
        stamp += 1;
    }
    for y in 0..n {
        for x in 0..n {
            let v = m.op(x, y);
            if seen[v] == stamp {
                return PropertyResult::fail(LatinViolation {
                    line: Line::Column,
                    index: y,
                    value: v,
                });
            }
            seen[v] = stamp;
        }
        stamp += 1;
    }
    PropertyResult::pass()
}

/// Properties checked by [`check_basic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicProperty {
    Commutative,
    Associative,
    /// Left and right cancellation; the witness `(x, y, z)` has `y < z` and
    /// `x·y = x·z` or `y·x = z·x`.
    Cancellative,
    Medial,
    RightModular,
    LeftModular,
    Reversible,
    Idempotent,
}

impl BasicProperty {
    pub const ALL: [BasicProperty; 8] = [
        BasicProperty::Commutative,
        BasicProperty::Associative,
        BasicProperty::Cancellative,
        BasicProperty::Medial,
        BasicProperty::RightModular,
        BasicProperty::LeftModular,
        BasicProperty::Reversible,
        BasicProperty::Idempotent,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BasicProperty::Commutative => "commutative",
            BasicProperty::Associative => "associative",
            BasicProperty::Cancellative => "cancellative",
            BasicProperty::Medial => "medial",
            BasicProperty::RightModular => "right modular",
            BasicProperty::LeftModular => "left modular",
            BasicProperty::Reversible => "reversible",
            BasicProperty::Idempotent => "idempotent",
        }
    }

    /// Number of entries in a witness tuple.
    pub fn arity(self) -> usize {
        match self {
            BasicProperty::Idempotent => 1,
            BasicProperty::Commutative => 2,
            BasicProperty::Associative
            | BasicProperty::Cancellative
            | BasicProperty::RightModular
            | BasicProperty::LeftModular => 3,
            BasicProperty::Medial | BasicProperty::Reversible => 4,
        }
    }

    /// True iff the tuple falsifies the defining identity in `m`.
    pub fn falsified_by(self, m: &Magma, t: &[usize]) -> bool {
        if t.len() != self.arity() || t.iter().any(|&v| v >= m.order()) {
            return false;
        }
        let op = |a, b| m.op(a, b);
        match self {
            BasicProperty::Idempotent => op(t[0], t[0]) != t[0],
            BasicProperty::Commutative => op(t[0], t[1]) != op(t[1], t[0]),
            BasicProperty::Associative => op(op(t[0], t[1]), t[2]) != op(t[0], op(t[1], t[2])),
            BasicProperty::Cancellative => {
                let (x, y, z) = (t[0], t[1], t[2]);
                y != z && (op(x, y) == op(x, z) || op(y, x) == op(z, x))
            }
            BasicProperty::RightModular => op(op(t[0], t[1]), t[2]) != op(op(t[2], t[1]), t[0]),
            BasicProperty::LeftModular => op(t[0], op(t[1], t[2])) != op(t[2], op(t[1], t[0])),
            BasicProperty::Medial => {
                op(op(t[0], t[1]), op(t[2], t[3])) != op(op(t[0], t[2]), op(t[1], t[3]))
            }
            BasicProperty::Reversible => {
                op(op(t[0], t[1]), op(t[2], t[3])) != op(op(t[3], t[2]), op(t[1], t[0]))
            }
        }
    }
}

impl fmt::Display for BasicProperty {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn check_basic(m: &Magma, prop: BasicProperty) -> PropertyResult {
    let n = m.order();
    let op = |a, b| m.op(a, b);
    let witness = match prop {
        BasicProperty::Idempotent => (0..n).find(|&x| op(x, x) != x).map(|x| vec![x]),
        BasicProperty::Commutative => first_pair(n, |x, y| op(x, y) != op(y, x)),
        BasicProperty::Associative => first_triple(n, |x, y, z| op(op(x, y), z) != op(x, op(y, z))),
        BasicProperty::Cancellative => first_triple(n, |x, y, z| {
            y < z && (op(x, y) == op(x, z) || op(y, x) == op(z, x))
        }),
        BasicProperty::RightModular => first_triple(n, |x, y, z| op(op(x, y), z) != op(op(z, y), x)),
        BasicProperty::LeftModular => first_triple(n, |x, y, z| op(x, op(y, z)) != op(z, op(y, x))),
        BasicProperty::Medial => first_quad(n, |x, y, z, w| {
            op(op(x, y), op(z, w)) != op(op(x, z), op(y, w))
        }),
        BasicProperty::Reversible => first_quad(n, |x, y, z, w| {
            op(op(x, y), op(z, w)) != op(op(w, z), op(y, x))
        }),
    };
    witness.into()
}

/// Shorthand for `check_basic(m, prop).holds()`.
pub fn has(m: &Magma, prop: BasicProperty) -> bool {
    check_basic(m, prop).holds()
}

/// Left and right units of a magma.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Units {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

impl Units {
    /// Two-sided units (at most one exists).
    pub fn two_sided(&self) -> Option<usize> {
        self.left.iter().copied().find(|l| self.right.contains(l))
    }
}

pub fn is_left_unit(m: &Magma, l: usize) -> bool {
    m.elements().all(|x| m.op(l, x) == x)
}

pub fn is_right_unit(m: &Magma, r: usize) -> bool {
    m.elements().all(|x| m.op(x, r) == x)
}

pub fn units(m: &Magma) -> Units {
    Units {
        left: m.elements().filter(|&l| is_left_unit(m, l)).collect(),
        right: m.elements().filter(|&r| is_right_unit(m, r)).collect(),
    }
}

/// The common value of the diagonal, when `x·x` is constant.
pub fn unipotency(m: &Magma) -> Option<usize> {
    let r = m.op(0, 0);
    m.elements().all(|x| m.op(x, x) == r).then_some(r)
}

/// Group classification. The abelian and boolean flags and the unit are
/// only reported for groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupInfo {
    pub is_group: bool,
    pub is_abelian: Option<bool>,
    pub is_boolean: Option<bool>,
    pub unit: Option<usize>,
}

impl GroupInfo {
    const NOT_A_GROUP: GroupInfo = GroupInfo {
        is_group: false,
        is_abelian: None,
        is_boolean: None,
        unit: None,
    };

    pub fn is_abelian_group(&self) -> bool {
        self.is_abelian == Some(true)
    }

    pub fn is_boolean_group(&self) -> bool {
        self.is_boolean == Some(true)
    }
}

pub fn classify_group(m: &Magma) -> GroupInfo {
    let Some(unit) = units(m).two_sided() else {
        return GroupInfo::NOT_A_GROUP;
    };
    if !is_quasigroup(m).holds() || !has(m, BasicProperty::Associative) {
        return GroupInfo::NOT_A_GROUP;
    }
    GroupInfo {
        is_group: true,
        is_abelian: Some(has(m, BasicProperty::Commutative)),
        is_boolean: Some(m.elements().all(|x| m.op(x, x) == unit)),
        unit: Some(unit),
    }
}

/// Inverse of `x` in a group table with identity `unit`.
pub(crate) fn group_inverse(m: &Magma, unit: usize, x: usize) -> usize {
    m.elements()
        .find(|&y| m.op(x, y) == unit)
        .expect("group element without inverse")
}

/// The sub-table on the set of products `{x·y}` is commutative.
pub fn square_commutative(m: &Magma) -> bool {
    let mut products: Vec<usize> = m.cells().to_vec();
    products.sort_unstable();
    products.dedup();
    products
        .iter()
        .all(|&s| products.iter().all(|&t| m.op(s, t) == m.op(t, s)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w3() -> Magma {
        Magma::from_rows(&[[0, 2, 1], [1, 0, 2], [2, 1, 0]]).unwrap()
    }

    fn z3() -> Magma {
        Magma::from_rows(&[[0, 1, 2], [1, 2, 0], [2, 0, 1]]).unwrap()
    }

    #[test]
    fn latin_checks() {
        assert!(is_quasigroup(&w3()).holds());
        assert!(is_quasigroup(&Magma::from_rows(&[[0]]).unwrap()).holds());
        let bad = Magma::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert_eq!(
            is_quasigroup(&bad).witness(),
            Some(&LatinViolation {
                line: Line::Row,
                index: 0,
                value: 0
            })
        );
        let cols = Magma::from_rows(&[[0, 1], [0, 1]]).unwrap();
        assert_eq!(
            is_quasigroup(&cols).witness().map(|v| v.line),
            Some(Line::Column)
        );
    }

    #[test]
    fn basic_examples() {
        assert!(has(&w3(), BasicProperty::Medial));
        assert_eq!(
            check_basic(&w3(), BasicProperty::Commutative).witness(),
            Some(&vec![0, 1])
        );
        assert!(has(&z3(), BasicProperty::Associative));
        // (0·0)·1 = 2 but 0·(0·1) = 1 in x−y mod 3
        assert_eq!(
            check_basic(&w3(), BasicProperty::Associative).witness(),
            Some(&vec![0, 0, 1])
        );
    }

    #[test]
    fn witnesses_replay() {
        let m = Magma::from_rows(&[[1, 0, 0], [2, 2, 1], [0, 1, 2]]).unwrap();
        for prop in BasicProperty::ALL {
            if let Some(w) = check_basic(&m, prop).witness() {
                assert!(prop.falsified_by(&m, w), "{prop} witness {w:?}");
            }
        }
    }

    #[test]
    fn units_and_unipotency() {
        assert_eq!(
            units(&w3()),
            Units {
                left: vec![],
                right: vec![0]
            }
        );
        assert_eq!(
            units(&w3().dual()),
            Units {
                left: vec![0],
                right: vec![]
            }
        );
        assert_eq!(units(&z3()).two_sided(), Some(0));
        assert_eq!(unipotency(&w3()), Some(0));
        assert_eq!(unipotency(&z3()), None);
        assert_eq!(unipotency(&Magma::from_rows(&[[0]]).unwrap()), Some(0));
    }

    #[test]
    fn group_classification() {
        let z2 = Magma::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(
            classify_group(&z2),
            GroupInfo {
                is_group: true,
                is_abelian: Some(true),
                is_boolean: Some(true),
                unit: Some(0)
            }
        );
        let info = classify_group(&z3());
        assert!(info.is_group && info.is_abelian_group() && !info.is_boolean_group());
        assert_eq!(classify_group(&w3()), GroupInfo::NOT_A_GROUP);
    }

    #[test]
    fn square_commutativity() {
        assert!(square_commutative(&z3()));
        assert!(!square_commutative(&w3()));
    }
}
