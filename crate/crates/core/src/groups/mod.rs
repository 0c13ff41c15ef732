//! Finite groups given by generators: enumeration, classes, centralizers,
//! subgroups, quotients and normal structure.

mod element;
mod group;
mod quotient;
mod subgroup;

pub use element::{Coset, GroupElement, Matrix, Permutation};
pub use group::{ConjugacyClass, FiniteGroup, DEFAULT_ORDER_CAP};
pub use quotient::{CosetTable, Quotient};
pub use subgroup::SubgroupHandle;
