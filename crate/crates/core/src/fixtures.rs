//! Small named tables used in examples, tests and the theorem suite.

use crate::table::Magma;

/// `x·y = x − y (mod 3)`, the Ward quasigroup of the cyclic group of order 3.
pub fn w3() -> Magma {
    Magma::from_fn(3, |x, y| (x + 3 - y) % 3)
}

/// `x·y = −x − y (mod 3)`, the double Ward quasigroup of the cyclic group
/// of order 3.
pub fn dw3() -> Magma {
    Magma::from_fn(3, |x, y| (6 - x - y) % 3)
}

/// `x·y = 1 − x − y (mod 3)`: satisfies the weak double Ward law at every
/// point but is not a double Ward quasigroup.
pub fn a31() -> Magma {
    Magma::from_fn(3, |x, y| (7 - x - y) % 3)
}

/// Addition modulo `n`.
pub fn cyclic(n: usize) -> Magma {
    Magma::from_fn(n, |x, y| (x + y) % n)
}

/// The 6×6 table printed as an example of a quasigroup satisfying the weak
/// double Ward law, transcribed verbatim (1-based rows below). As printed
/// it is not a Latin square: the third row repeats 4 and omits 3.
pub const PRINTED_6X6_ROWS: [[usize; 6]; 6] = [
    [3, 6, 1, 5, 4, 2],
    [6, 5, 4, 3, 2, 1],
    [1, 4, 6, 2, 5, 4],
    [5, 3, 2, 6, 1, 4],
    [4, 2, 5, 1, 3, 6],
    [2, 1, 3, 4, 6, 5],
];

/// [`PRINTED_6X6_ROWS`] shifted to 0-based labels.
pub fn printed_6x6() -> Magma {
    Magma::from_fn(6, |x, y| PRINTED_6X6_ROWS[x][y] - 1)
}
