//! k-translatable tables.
//!
//! With 1-based labels a table is k-translatable when
//! `i·j = a_{[k − k·i + j]_n}` for its first row `a`. Shifting to 0-based
//! labels (`i → i + 1`, `j → j + 1`) gives `i·j = a[(j − k·i) mod n]`.

use crate::error::{Error, Result};
use crate::iso::{permutations, Permutation};
use crate::table::Magma;

/// Largest order for which every ordering of the carrier is tried.
pub const ORDERING_LIMIT: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslatableSpec {
    first_row: Vec<usize>,
    k: usize,
}

impl TranslatableSpec {
    /// `first_row` must be a permutation of `0..n` and `1 ≤ k < n`.
    pub fn new(first_row: Vec<usize>, k: usize) -> Result<Self> {
        let n = first_row.len();
        let mut seen = vec![false; n];
        let is_perm = first_row
            .iter()
            .all(|&a| a < n && !std::mem::replace(&mut seen[a], true));
        if !is_perm || k == 0 || k >= n {
            return Err(Error::InvalidTranslatable { order: n });
        }
        Ok(TranslatableSpec { first_row, k })
    }

    pub fn first_row(&self) -> &[usize] {
        &self.first_row
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

fn shifted(a: &[usize], k: usize, i: usize, j: usize) -> usize {
    let n = a.len();
    a[(j + n * n - (k * i) % n) % n]
}

pub fn from_translatable(spec: &TranslatableSpec) -> Magma {
    let a = &spec.first_row;
    Magma::from_fn(a.len(), |i, j| shifted(a, spec.k, i, j))
}

/// Every `k` in `1..n` for which the table, in its stored order, is
/// k-translatable.
pub fn translatability(m: &Magma) -> Vec<usize> {
    let n = m.order();
    let a = m.row(0);
    (1..n)
        .filter(|&k| {
            m.elements()
                .all(|i| m.elements().all(|j| m.op(i, j) == shifted(a, k, i, j)))
        })
        .collect()
}

/// Translatability after reading the table under `ordering` (position `t`
/// stands for element `ordering[t]`).
pub fn translatability_under(m: &Magma, ordering: &[usize]) -> Vec<usize> {
    translatability(&m.reorder(ordering))
}

/// Every ordering of the carrier under which the table is translatable,
/// with the admissible `k` values, in lexicographic order of orderings.
pub fn translatable_orderings(m: &Magma) -> Result<Vec<(Permutation, Vec<usize>)>> {
    Error::guard("translatability ordering search", m.order(), ORDERING_LIMIT)?;
    Ok(permutations(m.order())
        .filter_map(|p| {
            let ks = translatability_under(m, &p);
            (!ks.is_empty()).then_some((p, ks))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic, dw3, w3};

    #[test]
    fn examples() {
        let spec = |row: &[usize], k| TranslatableSpec::new(row.to_vec(), k).unwrap();
        assert_eq!(from_translatable(&spec(&[0, 2, 1], 1)), w3());
        assert_eq!(from_translatable(&spec(&[0, 2, 1], 2)), dw3());
        assert_eq!(from_translatable(&spec(&[0, 1], 1)), cyclic(2));
        assert_eq!(translatability(&w3()), vec![1]);
        assert_eq!(translatability(&dw3()), vec![2]);
        assert!(TranslatableSpec::new(vec![0, 0, 1], 1).is_err());
        assert!(TranslatableSpec::new(vec![0, 1, 2], 3).is_err());
        assert!(TranslatableSpec::new(vec![0, 1, 2], 0).is_err());
    }

    #[test]
    fn one_based_formula_agrees() {
        // i·j = a_{[k − k·i + j]_n} over labels 1..n with 0 read as n
        let n = 5;
        let row = vec![3, 0, 4, 1, 2];
        for k in 1..n {
            let m = from_translatable(&TranslatableSpec::new(row.clone(), k).unwrap());
            for i in 1..=n {
                for j in 1..=n {
                    let idx = ((k as i64 - (k * i) as i64 + j as i64).rem_euclid(n as i64)) as usize;
                    let idx = if idx == 0 { n } else { idx };
                    assert_eq!(m.op(i - 1, j - 1), row[idx - 1]);
                }
            }
            assert!(translatability(&m).contains(&k));
        }
    }

    #[test]
    fn ordering_search() {
        let found = translatable_orderings(&w3()).unwrap();
        assert!(found.contains(&(vec![0, 1, 2], vec![1])));
        assert!(translatable_orderings(&cyclic(7)).is_err());
    }
}
