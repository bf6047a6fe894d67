//! Exhaustive generators of small tables.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::table::Magma;

/// Largest order accepted by [`enumerate_quasigroups`].
pub const LATIN_LIMIT: usize = 5;
/// Largest order accepted by [`all_magmas`].
pub const MAGMA_LIMIT: usize = 3;

/// Every Latin square of order `n`, each once, in lexicographic order of
/// the row-major cell sequence. Cells are filled row by row with
/// backtracking; the iterator is pull-based.
#[derive(Debug, Clone)]
pub struct LatinSquares {
    n: usize,
    cells: Vec<usize>,
    next_value: Vec<usize>,
    row_used: Vec<u32>,
    col_used: Vec<u32>,
    pos: usize,
    done: bool,
}

impl LatinSquares {
    fn new(n: usize) -> Self {
        let total = n * n;
        LatinSquares {
            n,
            cells: vec![0; total],
            next_value: vec![0; total],
            row_used: vec![0; n],
            col_used: vec![0; n],
            pos: 0,
            done: n == 0,
        }
    }

    fn unplace(&mut self) {
        self.pos -= 1;
        let (r, c) = (self.pos / self.n, self.pos % self.n);
        let bit = 1 << self.cells[self.pos];
        self.row_used[r] &= !bit;
        self.col_used[c] &= !bit;
    }
}

impl Iterator for LatinSquares {
    type Item = Magma;

    fn next(&mut self) -> Option<Magma> {
        let total = self.n * self.n;
        if self.done {
            return None;
        }
        if self.pos == total {
            self.unplace();
        }
        loop {
            let (r, c) = (self.pos / self.n, self.pos % self.n);
            let used = self.row_used[r] | self.col_used[c];
            let candidate = (self.next_value[self.pos]..self.n).find(|&v| used & (1 << v) == 0);
            match candidate {
                Some(v) => {
                    self.cells[self.pos] = v;
                    self.next_value[self.pos] = v + 1;
                    self.row_used[r] |= 1 << v;
                    self.col_used[c] |= 1 << v;
                    self.pos += 1;
                    if self.pos == total {
                        return Some(
                            Magma::new(self.n, self.cells.clone()).expect("entries in range"),
                        );
                    }
                    self.next_value[self.pos] = 0;
                }
                None => {
                    if self.pos == 0 {
                        self.done = true;
                        return None;
                    }
                    self.unplace();
                }
            }
        }
    }
}

pub fn enumerate_quasigroups(n: usize) -> Result<LatinSquares> {
    Error::guard("quasigroup enumeration", n, LATIN_LIMIT)?;
    Ok(LatinSquares::new(n))
}

/// Every quasigroup of order `1..=max_order`, smallest order first.
pub fn quasigroups_up_to(max_order: usize) -> Result<impl Iterator<Item = Magma>> {
    Error::guard("quasigroup enumeration", max_order, LATIN_LIMIT)?;
    Ok((1..=max_order).flat_map(LatinSquares::new))
}

/// Every magma of order `n` (`n^(n²)` tables) in lexicographic order.
pub fn all_magmas(n: usize) -> Result<Box<dyn Iterator<Item = Magma>>> {
    Error::guard("magma enumeration", n, MAGMA_LIMIT)?;
    if n == 0 {
        return Ok(Box::new(std::iter::empty()));
    }
    Ok(Box::new(
        (0..n * n)
            .map(|_| 0..n)
            .multi_cartesian_product()
            .map(move |cells| Magma::new(n, cells).expect("entries in range")),
    ))
}

/// Every magma of order `1..=max_order`, smallest order first.
pub fn magmas_up_to(max_order: usize) -> Result<impl Iterator<Item = Magma>> {
    Error::guard("magma enumeration", max_order, MAGMA_LIMIT)?;
    Ok((1..=max_order).flat_map(|n| all_magmas(n).expect("order checked")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props::is_quasigroup;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=4)
            .map(|n| enumerate_quasigroups(n).unwrap().count())
            .collect();
        assert_eq!(counts, [0, 1, 2, 12, 576]);
        assert!(enumerate_quasigroups(6).is_err());
    }

    #[test]
    fn order_three_is_sorted_and_latin() {
        let all: Vec<Magma> = enumerate_quasigroups(3).unwrap().collect();
        assert!(all.windows(2).all(|w| w[0].cells() < w[1].cells()));
        assert!(all.iter().all(|m| is_quasigroup(m).holds()));
    }

    #[test]
    fn magma_counts() {
        assert_eq!(all_magmas(1).unwrap().count(), 1);
        assert_eq!(all_magmas(2).unwrap().count(), 16);
        assert_eq!(magmas_up_to(2).unwrap().count(), 17);
        assert!(all_magmas(4).is_err());
    }
}
