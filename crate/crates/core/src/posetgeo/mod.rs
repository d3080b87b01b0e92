//! Posets and their derived geometry: ideal lattices, order complexes,
//! canonically triangulated order polytopes, Lipschitz polytopes, and type-A
//! alcove triangulations.

pub mod alcoved;
pub mod orderpoly;
pub mod poset;

pub use alcoved::{alcove_triangulation, coordinate_permutation_action, lipschitz_polytope};
pub use orderpoly::{order_polytope, OrderPolytope};
pub use poset::{Poset, PosetAction, PosetError};
