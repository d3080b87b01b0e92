//! Lattice polytopes with affine unimodular group actions: lattice-point
//! enumeration, equivariant Ehrhart series, triangulation validation, and the
//! h*-series against `det(Id − ρ̃t)`.

pub mod affine;
pub mod base;
pub mod ehrhart;
pub mod triangulation;

pub use affine::{AffineAction, AffineMap};
pub use base::{Halfspace, LatticePolytope, PolytopeError};
pub use ehrhart::{equivariant_ehrhart, h_star_series, verify_ebm, EbmEntry, EbmReport};
pub use triangulation::{GeoTriangulation, TriangulationReport};
