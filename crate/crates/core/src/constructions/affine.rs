//! Affine tables `x·y = a·x + b·y + c (mod n)`.

use crate::error::{Error, Result};
use crate::table::Magma;

pub fn affine(n: usize, a: i64, b: i64, c: i64) -> Result<Magma> {
    if n == 0 {
        return Err(Error::EmptyTable);
    }
    let m = n as i64;
    Ok(Magma::from_fn(n, |x, y| {
        (a * x as i64 + b * y as i64 + c).rem_euclid(m) as usize
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{a31, w3};
    use crate::props::is_quasigroup;

    #[test]
    fn examples() {
        assert_eq!(affine(3, 1, -1, 0).unwrap(), w3());
        assert_eq!(affine(3, -1, -1, 1).unwrap(), a31());
        assert!(!is_quasigroup(&affine(6, 2, 2, 0).unwrap()).holds());
        assert!(affine(0, 1, 1, 0).is_err());
    }
}
