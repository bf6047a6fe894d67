//! The five parastrophes (conjugates) of a quasigroup.

use crate::error::{Error, Result};
use crate::props::is_quasigroup;
use crate::table::Magma;

/// `x ∘ᵢ y = z` is defined by:
/// 1. `x·z = y`
/// 2. `z·y = x`
/// 3. `z·x = y`
/// 4. `y·z = x`
/// 5. `y·x = z` (the dual)
pub fn parastrophe(q: &Magma, i: usize) -> Result<Magma> {
    if !(1..=5).contains(&i) {
        return Err(Error::ParastropheIndex(i));
    }
    if let Some(v) = is_quasigroup(q).into_witness() {
        return Err(Error::precondition("parastrophe", "QUASIGROUP", Some(v.to_tuple())));
    }
    Ok(parastrophe_unchecked(q, i))
}

/// Parastrophe of a table already known to be a quasigroup. Index 0 returns
/// the table itself.
pub(crate) fn parastrophe_unchecked(q: &Magma, i: usize) -> Magma {
    let n = q.order();
    // ldiv[a][b] solves a·z = b; rdiv[a][b] solves z·a = b
    let mut ldiv = vec![0; n * n];
    let mut rdiv = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let p = q.op(x, y);
            ldiv[x * n + p] = y;
            rdiv[y * n + p] = x;
        }
    }
    match i {
        0 => q.clone(),
        1 => Magma::from_fn(n, |x, y| ldiv[x * n + y]),
        2 => Magma::from_fn(n, |x, y| rdiv[y * n + x]),
        3 => Magma::from_fn(n, |x, y| rdiv[x * n + y]),
        4 => Magma::from_fn(n, |x, y| ldiv[y * n + x]),
        5 => q.dual(),
        _ => unreachable!("index checked by caller"),
    }
}

/// The original operation followed by its five parastrophes.
pub fn parastrophes(q: &Magma) -> Result<[Magma; 6]> {
    if let Some(v) = is_quasigroup(q).into_witness() {
        return Err(Error::precondition("parastrophe", "QUASIGROUP", Some(v.to_tuple())));
    }
    Ok(std::array::from_fn(|i| parastrophe_unchecked(q, i)))
}

/// Number of pairwise distinct tables among a quasigroup and its
/// parastrophes.
pub fn distinct_parastrophe_count(q: &Magma) -> Result<usize> {
    let mut all = parastrophes(q)?.to_vec();
    all.sort();
    all.dedup();
    Ok(all.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{cyclic, w3};

    #[test]
    fn examples() {
        assert_eq!(parastrophe(&cyclic(3), 2).unwrap(), w3());
        assert_eq!(parastrophe(&w3(), 5).unwrap(), w3().dual());
        assert_eq!(parastrophe(&w3(), 0), Err(Error::ParastropheIndex(0)));
        assert_eq!(parastrophe(&w3(), 6), Err(Error::ParastropheIndex(6)));
        let not_latin = Magma::from_rows(&[[0, 0], [1, 1]]).unwrap();
        assert!(matches!(
            parastrophe(&not_latin, 1),
            Err(Error::Precondition { property: "QUASIGROUP", .. })
        ));
    }

    #[test]
    fn defining_equivalences_hold() {
        let q = Magma::from_rows(&[[1, 0, 3, 2], [3, 2, 1, 0], [0, 3, 2, 1], [2, 1, 0, 3]]).unwrap();
        let p = parastrophes(&q).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(q.op(x, p[1].op(x, y)), y);
                assert_eq!(q.op(p[2].op(x, y), y), x);
                assert_eq!(q.op(p[3].op(x, y), x), y);
                assert_eq!(q.op(y, p[4].op(x, y)), x);
                assert_eq!(q.op(y, x), p[5].op(x, y));
            }
        }
        // pairwise duality: ∘̄₁ = ∘₄ and ∘̄₂ = ∘₃
        assert_eq!(p[1].dual(), p[4]);
        assert_eq!(p[2].dual(), p[3]);
    }
}
