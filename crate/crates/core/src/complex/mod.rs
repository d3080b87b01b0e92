//! Abstract simplicial complexes with group actions: properness and
//! translativity, invariant colorings, equivariant f/h and flag f/h
//! characters, Hilbert series of face rings, rational homology, and invariant
//! linear systems of parameters.

pub mod acted;
pub mod lsop;
pub mod simplicial;

pub use acted::{ActedComplex, Coloring, FaceCharacters, FlagCharacters, QuotientGraph};
pub use lsop::{invariant_lsop, verify_lsop, LinearForms};
pub use simplicial::{ComplexError, SimplicialComplex};
