//! Toyoda representation `x·y = α(x) + β(y) + c` of medial quasigroups.
//!
//! Every abelian group structure on the carrier is tried (each abelian
//! group of the right order under every relabelling, without repeats).
//! Once the group is fixed, with zero `o`, the representation is forced:
//! `c = o·o`, `α(x) = x·o − c` and `β(y) = o·y − c`. It is accepted when
//! `α` and `β` are commuting automorphisms and the formula reproduces the
//! table.

use std::collections::BTreeSet;

use crate::constructions::groups::{abelian_groups, build_group};
use crate::error::{Error, Result};
use crate::iso::{compose, is_homomorphism, permutations, Permutation};
use crate::props::{group_inverse, has, is_quasigroup, BasicProperty};
use crate::table::Magma;

/// Largest order accepted by the Toyoda search.
pub const TOYODA_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Toyoda {
    /// The abelian group `+` on the carrier.
    pub group: Magma,
    /// Its zero.
    pub zero: usize,
    pub alpha: Permutation,
    pub beta: Permutation,
    pub c: usize,
}

impl Toyoda {
    /// Whether `q(x, y) = α(x) + β(y) + c` everywhere, with `α`, `β`
    /// commuting automorphisms of the group.
    pub fn verify(&self, q: &Magma) -> bool {
        let g = &self.group;
        let add = |a, b| g.op(a, b);
        is_homomorphism(g, g, &self.alpha)
            && is_homomorphism(g, g, &self.beta)
            && compose(&self.alpha, &self.beta) == compose(&self.beta, &self.alpha)
            && q.elements().all(|x| {
                q.elements()
                    .all(|y| q.op(x, y) == add(add(self.alpha[x], self.beta[y]), self.c))
            })
    }
}

fn derive(q: &Magma, group: &Magma) -> Option<Toyoda> {
    let zero = q.elements().find(|&x| group.op(x, x) == x)?;
    let c = q.op(zero, zero);
    let neg_c = group_inverse(group, zero, c);
    let alpha: Vec<usize> = q.elements().map(|x| group.op(q.op(x, zero), neg_c)).collect();
    let beta: Vec<usize> = q.elements().map(|y| group.op(q.op(zero, y), neg_c)).collect();
    let t = Toyoda {
        group: group.clone(),
        zero,
        alpha,
        beta,
        c,
    };
    t.verify(q).then_some(t)
}

fn check_input(q: &Magma) -> Result<()> {
    Error::guard("Toyoda decomposition", q.order(), TOYODA_LIMIT)?;
    if let Some(v) = is_quasigroup(q).into_witness() {
        return Err(Error::precondition("toyoda", "QUASIGROUP", Some(v.to_tuple())));
    }
    Ok(())
}

/// Every abelian group table on `0..n`, without repeats, in a fixed order.
fn abelian_structures(n: usize) -> Vec<Magma> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for spec in abelian_groups(n) {
        let base = build_group(&spec).expect("small abelian group").into_magma();
        for sigma in permutations(n) {
            let g = base.relabel(&sigma);
            if seen.insert(g.clone()) {
                out.push(g);
            }
        }
    }
    out
}

/// Some Toyoda representation, or `None` exactly when `q` is not medial.
pub fn toyoda_decompose(q: &Magma) -> Result<Option<Toyoda>> {
    check_input(q)?;
    if !has(q, BasicProperty::Medial) {
        return Ok(None);
    }
    Ok(abelian_structures(q.order())
        .iter()
        .find_map(|g| derive(q, g)))
}

/// Every Toyoda representation of `q`, one per admissible group structure.
pub fn toyoda_decompositions(q: &Magma) -> Result<Vec<Toyoda>> {
    check_input(q)?;
    Ok(abelian_structures(q.order())
        .iter()
        .filter_map(|g| derive(q, g))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a31, cyclic, w3};

    #[test]
    fn examples() {
        let t = toyoda_decompose(&w3()).unwrap().unwrap();
        assert_eq!(t.group, cyclic(3));
        assert_eq!((t.alpha.clone(), t.beta.clone(), t.c), (vec![0, 1, 2], vec![0, 2, 1], 0));
        let t = toyoda_decompose(&a31()).unwrap().unwrap();
        assert_eq!(t.group, cyclic(3));
        assert_eq!((t.alpha.clone(), t.beta.clone(), t.c), (vec![0, 2, 1], vec![0, 2, 1], 1));
        assert!(toyoda_decompositions(&w3()).unwrap().len() > 1);
        assert!(toyoda_decompose(&cyclic(7)).is_err());
    }

    #[test]
    fn non_medial_has_no_representation() {
        let s3 = build_group(&crate::constructions::groups::GroupSpec::Sym3)
            .unwrap()
            .into_magma();
        assert_eq!(toyoda_decompose(&s3).unwrap(), None);
        assert!(toyoda_decompositions(&s3).unwrap().is_empty());
    }
}
