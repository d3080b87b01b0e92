//! Exact-arithmetic equivariant Hilbert and Ehrhart series.
//!
//! This crate computes, over finite permutation groups acting on combinatorial
//! objects, power series whose coefficients are virtual characters:
//!
//! * [`grpchar`] — permutation groups, conjugacy classes, cyclotomic numbers,
//!   class functions, character tables (Dixon's method), symmetric-group
//!   characters, and truncated series of class functions;
//! * [`complex`] — abstract simplicial complexes with group actions: proper and
//!   translative actions, invariant colorings, equivariant f/h and flag f/h
//!   characters, Hilbert series of face rings, rational homology, Cohen–Macaulay
//!   tests, and invariant linear systems of parameters;
//! * [`polytope`] — lattice polytopes with affine unimodular actions:
//!   lattice-point enumeration, equivariant Ehrhart series, triangulation
//!   validation, and the h*-series against `det(Id − ρ̃t)`;
//! * [`posetgeo`] — finite posets and their derived geometry: order ideals,
//!   order complexes, canonically triangulated order polytopes, Lipschitz
//!   polytopes, and alcove triangulations.
//!
//! All arithmetic is exact: rationals are arbitrary precision and character
//! values live in cyclotomic number fields represented in the power basis.
//! The crate is `no_std` (it requires `alloc`); IO, file formats and the
//! command-line front end live in the companion `equiseries-cli` crate.
//!
//! Every value is immutable after construction and every operation is a pure
//! function, so shared inputs may be used concurrently.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod complex;
pub mod grpchar;
pub mod polytope;
pub mod posetgeo;

mod linalg;

pub use grpchar::cyclotomic::{Int, Rational};
