//! Table-to-table constructions and generators of instance families.

pub mod affine;
pub mod enumerate;
pub mod groups;
pub mod parastrophe;
pub mod toyoda;
pub mod translatable;
pub mod ward;

pub use affine::affine;
pub use enumerate::{all_magmas, enumerate_quasigroups, magmas_up_to, quasigroups_up_to, LatinSquares};
pub use groups::{abelian_groups, build_group, group_catalog, GroupSpec};
pub use parastrophe::{distinct_parastrophe_count, parastrophe, parastrophes};
pub use toyoda::{toyoda_decompose, toyoda_decompositions, Toyoda};
pub use translatable::{
    from_translatable, translatability, translatability_under, translatable_orderings,
    TranslatableSpec,
};
pub use ward::{d_of_dward, d_of_ward, der, derbar, double_der, double_ret, ret, retbar};
