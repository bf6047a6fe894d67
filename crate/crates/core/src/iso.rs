//! Exhaustive isomorphism, isotopy and automorphism search.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::props::is_quasigroup;
use crate::table::Magma;

/// Largest order accepted by [`find_isotopism`].
pub const ISOTOPY_LIMIT: usize = 5;
/// Largest order accepted by [`automorphisms`].
pub const AUTOMORPHISM_LIMIT: usize = 8;

/// A bijection of `0..n` stored as its image list.
pub type Permutation = Vec<usize>;

pub fn identity_permutation(n: usize) -> Permutation {
    (0..n).collect()
}

pub fn compose(outer: &[usize], inner: &[usize]) -> Permutation {
    inner.iter().map(|&x| outer[x]).collect()
}

pub fn invert(p: &[usize]) -> Permutation {
    let mut inv = vec![0; p.len()];
    for (x, &y) in p.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

pub fn is_involution(p: &[usize]) -> bool {
    p.iter().enumerate().all(|(x, &y)| p[y] == x)
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..n).permutations(n)
}

/// True iff `sigma` maps products of `a` to products of `b`.
pub fn is_homomorphism(a: &Magma, b: &Magma, sigma: &[usize]) -> bool {
    a.order() == b.order()
        && a.elements()
            .all(|x| a.elements().all(|y| sigma[a.op(x, y)] == b.op(sigma[x], sigma[y])))
}

/// Per-element data preserved by every isomorphism.
fn signature(m: &Magma, x: usize) -> (bool, usize, usize, usize) {
    let idempotent = m.op(x, x) == x;
    let fixes_left = m.elements().filter(|&y| m.op(x, y) == y).count();
    let fixes_right = m.elements().filter(|&y| m.op(y, x) == y).count();
    let square_roots = m.elements().filter(|&y| m.op(y, y) == x).count();
    (idempotent, fixes_left, fixes_right, square_roots)
}

struct IsoSearch<'a> {
    a: &'a Magma,
    b: &'a Magma,
    candidates: Vec<Vec<usize>>,
    sigma: Vec<usize>,
    used: Vec<bool>,
}

const UNSET: usize = usize::MAX;

impl<'a> IsoSearch<'a> {
    fn new(a: &'a Magma, b: &'a Magma) -> Self {
        let n = a.order();
        let sig_b: Vec<_> = b.elements().map(|y| signature(b, y)).collect();
        let candidates = a
            .elements()
            .map(|x| {
                let s = signature(a, x);
                (0..n).filter(|&y| sig_b[y] == s).collect()
            })
            .collect();
        IsoSearch {
            a,
            b,
            candidates,
            sigma: vec![UNSET; n],
            used: vec![false; n],
        }
    }

    /// Checks every product among the first `k + 1` assigned elements that
    /// involves element `k`.
    fn consistent(&self, k: usize) -> bool {
        for u in 0..=k {
            for (x, y) in [(u, k), (k, u)] {
                let p = self.a.op(x, y);
                let image = self.b.op(self.sigma[x], self.sigma[y]);
                match self.sigma[p] {
                    UNSET => {
                        if self.used[image] {
                            return false;
                        }
                    }
                    s if s != image => return false,
                    _ => {}
                }
            }
        }
        true
    }

    /// Depth-first search; `visit` returns false to stop.
    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let n = self.a.order();
        if k == n {
            return visit(&self.sigma);
        }
        for i in 0..self.candidates[k].len() {
            let v = self.candidates[k][i];
            if self.used[v] {
                continue;
            }
            self.sigma[k] = v;
            self.used[v] = true;
            let keep_going = !self.consistent(k) || self.run(k + 1, visit);
            self.used[v] = false;
            self.sigma[k] = UNSET;
            if !keep_going {
                return false;
            }
        }
        true
    }
}

/// Some bijection `σ` with `σ(x·y) = σ(x)∗σ(y)`, if one exists.
pub fn find_isomorphism(a: &Magma, b: &Magma) -> Result<Option<Permutation>> {
    a.same_order(b)?;
    let mut found = None;
    IsoSearch::new(a, b).run(0, &mut |s| {
        found = Some(s.to_vec());
        false
    });
    Ok(found)
}

pub fn are_isomorphic(a: &Magma, b: &Magma) -> Result<bool> {
    Ok(find_isomorphism(a, b)?.is_some())
}

/// Every automorphism, optionally only the involutive ones, in
/// lexicographic order.
pub fn automorphisms(m: &Magma, involutive_only: bool) -> Result<Vec<Permutation>> {
    Error::guard("automorphism search", m.order(), AUTOMORPHISM_LIMIT)?;
    let mut all = Vec::new();
    IsoSearch::new(m, m).run(0, &mut |s| {
        if !involutive_only || is_involution(s) {
            all.push(s.to_vec());
        }
        true
    });
    Ok(all)
}

/// Bijections with `γ(x·y) = α(x)∗β(y)` for all `x, y`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotopism {
    pub alpha: Permutation,
    pub beta: Permutation,
    pub gamma: Permutation,
}

impl Isotopism {
    pub fn verify(&self, a: &Magma, b: &Magma) -> bool {
        a.order() == b.order()
            && a.elements().all(|x| {
                a.elements()
                    .all(|y| self.gamma[a.op(x, y)] == b.op(self.alpha[x], self.beta[y]))
            })
    }
}

pub fn find_isotopism(a: &Magma, b: &Magma) -> Result<Option<Isotopism>> {
    a.same_order(b)?;
    Error::guard("isotopy search", a.order(), ISOTOPY_LIMIT)?;
    if is_quasigroup(a).holds() && is_quasigroup(b).holds() {
        Ok(quasigroup_isotopism(a, b))
    } else {
        Ok(general_isotopism(a, b))
    }
}

/// For quasigroups, `α` and `β(0)` determine `γ` through column 0 of `a`,
/// and then `β` through row `α(0)` of `b`.
fn quasigroup_isotopism(a: &Magma, b: &Magma) -> Option<Isotopism> {
    let n = a.order();
    for alpha in permutations(n) {
        for beta0 in 0..n {
            let mut gamma = vec![UNSET; n];
            for x in 0..n {
                gamma[a.op(x, 0)] = b.op(alpha[x], beta0);
            }
            let mut beta = vec![UNSET; n];
            for y in 0..n {
                let target = gamma[a.op(0, y)];
                beta[y] = (0..n)
                    .find(|&t| b.op(alpha[0], t) == target)
                    .expect("b is a quasigroup");
            }
            let iso = Isotopism {
                alpha: alpha.clone(),
                beta,
                gamma,
            };
            if iso.verify(a, b) {
                return Some(iso);
            }
        }
    }
    None
}

#[allow(clippy::needless_range_loop)]
fn general_isotopism(a: &Magma, b: &Magma) -> Option<Isotopism> {
    let n = a.order();
    let perms: Vec<Permutation> = permutations(n).collect();
    for alpha in &perms {
        'beta: for beta in &perms {
            let mut gamma = vec![UNSET; n];
            for x in 0..n {
                for y in 0..n {
                    let p = a.op(x, y);
                    let image = b.op(alpha[x], beta[y]);
                    if gamma[p] == UNSET {
                        gamma[p] = image;
                    } else if gamma[p] != image {
                        continue 'beta;
                    }
                }
            }
            // γ must be injective on the image of a; extend it to a bijection.
            let mut used = vec![false; n];
            for &g in gamma.iter().filter(|&&g| g != UNSET) {
                if used[g] {
                    continue 'beta;
                }
                used[g] = true;
            }
            let mut free = (0..n).filter(|&v| !used[v]);
            for g in gamma.iter_mut().filter(|g| **g == UNSET) {
                *g = free.next().expect("counts match");
            }
            return Some(Isotopism {
                alpha: alpha.clone(),
                beta: beta.clone(),
                gamma,
            });
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Magma {
        Magma::from_fn(n, |x, y| (x + y) % n)
    }

    fn klein() -> Magma {
        Magma::from_fn(4, |x, y| x ^ y)
    }

    fn w3() -> Magma {
        Magma::from_fn(3, |x, y| (x + 3 - y) % 3)
    }

    #[test]
    fn isomorphism_examples() {
        let z3 = cyclic(3);
        let sigma = find_isomorphism(&z3, &z3).unwrap().unwrap();
        assert!(is_homomorphism(&z3, &z3, &sigma));
        assert_eq!(find_isomorphism(&cyclic(4), &klein()).unwrap(), None);
        assert_eq!(find_isomorphism(&w3(), &w3().dual()).unwrap(), None);
        assert!(matches!(
            find_isomorphism(&cyclic(2), &cyclic(3)),
            Err(Error::OrderMismatch { .. })
        ));
    }

    #[test]
    fn relabelled_copies_are_isomorphic() {
        let m = cyclic(5);
        let r = m.relabel(&[3, 0, 4, 1, 2]);
        let sigma = find_isomorphism(&m, &r).unwrap().unwrap();
        assert!(is_homomorphism(&m, &r, &sigma));
    }

    #[test]
    fn isotopy_examples() {
        let z3 = cyclic(3);
        let iso = find_isotopism(&z3, &z3).unwrap().unwrap();
        assert_eq!(iso.alpha, vec![0, 1, 2]);
        assert_eq!(iso.beta, vec![0, 1, 2]);
        assert_eq!(iso.gamma, vec![0, 1, 2]);
        let iso = find_isotopism(&w3(), &z3).unwrap().unwrap();
        assert!(iso.verify(&w3(), &z3));
        assert!(find_isotopism(&cyclic(2), &z3).is_err());
        assert!(matches!(
            find_isotopism(&cyclic(6), &cyclic(6)),
            Err(Error::CostGuard { .. })
        ));
        assert_eq!(find_isotopism(&cyclic(4), &klein()).unwrap(), None);
    }

    #[test]
    fn isotopy_of_non_quasigroups() {
        let a = Magma::from_rows(&[[0, 0], [0, 1]]).unwrap();
        let b = Magma::from_rows(&[[0, 1], [1, 1]]).unwrap();
        let iso = find_isotopism(&a, &b).unwrap().unwrap();
        assert!(iso.verify(&a, &b));
        let c = Magma::from_rows(&[[0, 0], [0, 0]]).unwrap();
        assert_eq!(find_isotopism(&a, &c).unwrap(), None);
    }

    #[test]
    fn automorphism_examples() {
        let z3 = cyclic(3);
        let expected = vec![vec![0, 1, 2], vec![0, 2, 1]];
        assert_eq!(automorphisms(&z3, false).unwrap(), expected);
        assert_eq!(automorphisms(&z3, true).unwrap(), expected);
        assert_eq!(
            automorphisms(&Magma::from_rows(&[[0]]).unwrap(), false).unwrap(),
            vec![vec![0]]
        );
        assert_eq!(automorphisms(&klein(), false).unwrap().len(), 6);
        assert_eq!(automorphisms(&cyclic(5), false).unwrap().len(), 4);
        assert!(automorphisms(&cyclic(9), false).is_err());
    }
}
