//! Finite magmas as Cayley tables, with the constructions relating groups,
//! Ward quasigroups and double Ward quasigroups, an identity language, the
//! interchange laws between pairs of operations, and a registry of
//! exhaustive checks over generated families of tables.
//!
//! Elements are always `0..n` internally.

pub mod classes;
pub mod constructions;
pub mod double;
pub mod error;
pub mod fixtures;
pub mod iso;
pub mod props;
pub mod suite;
pub mod table;
pub mod term;

pub use error::{Error, Result};
pub use props::{BasicProperty, PropertyResult};
pub use table::{Magma, PointedMagma};
