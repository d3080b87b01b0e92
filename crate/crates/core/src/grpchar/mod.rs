//! Finite permutation groups, class functions over cyclotomic fields,
//! character tables, and series arithmetic over class functions.

pub mod classfn;
pub mod cyclotomic;
mod dixon;
pub mod group;
pub mod perm;
pub mod series;
pub mod symchar;

pub use classfn::{inner_product, CharacterTable, ClassFunction, Decomposition};
pub use cyclotomic::Cyclotomic;
pub use group::{FiniteGroup, GroupError, DEFAULT_GROUP_CAP};
pub use perm::Permutation;
pub use series::{EquivariantSeries, RationalForm};
pub use symchar::{partitions, standard_young_tableaux, symmetric_character};
