//! Cayley tables.
//!
//! A [`Magma`] is an order-`n` multiplication table over the elements
//! `0..n`. Entry `(x, y)` holds the product `x·y`. Tables are validated on
//! construction and never mutated afterwards.

use std::fmt;
use std::ops::Range;

use crate::error::{Error, Result};

/// A finite magma stored as a row-major Cayley table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Magma {
    order: usize,
    cells: Vec<usize>,
}

impl Magma {
    /// Builds a table from `order * order` row-major entries.
    pub fn new(order: usize, cells: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        let expected = order * order;
        if cells.len() != expected {
            return Err(Error::Shape {
                order,
                expected,
                found: cells.len(),
            });
        }
        if let Some(i) = cells.iter().position(|&v| v >= order) {
            return Err(Error::EntryOutOfRange {
                row: i / order,
                col: i % order,
                value: cells[i],
                order,
            });
        }
        Ok(Magma { order, cells })
    }

    /// Builds a table from explicit rows; the order is the number of rows.
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut cells = Vec::with_capacity(order * order);
        for row in rows {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::Shape {
                    order,
                    expected: order,
                    found: row.len(),
                });
            }
            cells.extend_from_slice(row);
        }
        Magma::new(order, cells)
    }

    /// Tabulates `f` over all pairs.
    ///
    /// Panics if `order` is zero or `f` returns a value outside `0..order`;
    /// callers use this for operations that are closed by construction.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(order > 0, "empty table");
        let mut cells = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let v = f(x, y);
                assert!(v < order, "product {v} of ({x}, {y}) out of range");
                cells.push(v);
            }
        }
        Magma { order, cells }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> Range<usize> {
        0..self.order
    }

    /// The product `x·y`.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.order + y]
    }

    pub fn row(&self, x: usize) -> &[usize] {
        &self.cells[x * self.order..(x + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> {
        self.cells.chunks(self.order)
    }

    pub fn cells(&self) -> &[usize] {
        &self.cells
    }

    /// The dual magma, `x ·̄ y = y·x` (the transposed table).
    pub fn dual(&self) -> Magma {
        Magma::from_fn(self.order, |x, y| self.op(y, x))
    }

    /// The isomorphic copy carried along the bijection `sigma`:
    /// the result satisfies `r(σx, σy) = σ(x·y)`.
    pub fn relabel(&self, sigma: &[usize]) -> Magma {
        assert_eq!(sigma.len(), self.order);
        let mut inverse = vec![0; self.order];
        for (x, &s) in sigma.iter().enumerate() {
            inverse[s] = x;
        }
        Magma::from_fn(self.order, |x, y| sigma[self.op(inverse[x], inverse[y])])
    }

    /// The table read under an ordering of the carrier: position `t` stands
    /// for the element `ordering[t]`.
    pub fn reorder(&self, ordering: &[usize]) -> Magma {
        assert_eq!(ordering.len(), self.order);
        let mut position = vec![0; self.order];
        for (t, &x) in ordering.iter().enumerate() {
            position[x] = t;
        }
        Magma::from_fn(self.order, |s, t| {
            position[self.op(ordering[s], ordering[t])]
        })
    }

    pub(crate) fn check_element(&self, element: usize) -> Result<()> {
        if element < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                order: self.order,
            })
        }
    }

    pub(crate) fn same_order(&self, other: &Magma) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }
}

impl fmt::Debug for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Magma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A magma with a distinguished element (a unit, the unipotent square, or
/// the `e` of a double Ward quasigroup, depending on context).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointedMagma {
    magma: Magma,
    point: usize,
}

impl PointedMagma {
    pub fn new(magma: Magma, point: usize) -> Result<Self> {
        magma.check_element(point)?;
        Ok(PointedMagma { magma, point })
    }

    pub fn magma(&self) -> &Magma {
        &self.magma
    }

    pub fn point(&self) -> usize {
        self.point
    }

    pub fn order(&self) -> usize {
        self.magma.order()
    }

    pub fn into_magma(self) -> Magma {
        self.magma
    }

    /// The dual table with the same point.
    pub fn dual(&self) -> PointedMagma {
        PointedMagma {
            magma: self.magma.dual(),
            point: self.point,
        }
    }

    pub fn relabel(&self, sigma: &[usize]) -> PointedMagma {
        PointedMagma {
            magma: self.magma.relabel(sigma),
            point: sigma[self.point],
        }
    }
}
