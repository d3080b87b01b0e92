//! Invariant linear systems of parameters and the Kind–Kleinschmidt rank test.

use alloc::vec::Vec;

use num_traits::Zero;

use super::acted::{ActedComplex, Coloring};
use super::simplicial::{ComplexError, SimplicialComplex};
use crate::grpchar::cyclotomic::{Int, Rational};
use crate::linalg;

/// Linear forms in the vertex variables, one row per form.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearForms {
    matrix: Vec<Vec<Rational>>,
}

impl LinearForms {
    pub fn new(matrix: Vec<Vec<Rational>>) -> Self {
        LinearForms { matrix }
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.matrix
    }
}

/// `θ_i = Σ_v γ(v)^i·x_v` for `i = 0..=d`, with `0^0 = 1`: `d+1` forms that
/// are constant on vertex orbits whenever the coloring is invariant.
pub fn invariant_lsop(
    acted: &ActedComplex,
    coloring: &Coloring,
) -> Result<LinearForms, ComplexError> {
    coloring.check_proper(acted.complex())?;
    coloring.check_invariant(acted)?;
    let d = acted.complex().dim();
    let rows = (d + 1).max(0) as usize;
    let n = acted.complex().n_vertices();
    let mut matrix = Vec::with_capacity(rows);
    for i in 0..rows {
        let row: Vec<Rational> = (0..n)
            .map(|v| {
                let c = coloring.color(v) as i64;
                // 0^0 = 1 by convention.
                let mut acc = Rational::from(Int::from(1));
                for _ in 0..i {
                    acc *= Rational::from(Int::from(c));
                }
                acc
            })
            .collect();
        matrix.push(row);
    }
    Ok(LinearForms { matrix })
}

/// Kind–Kleinschmidt criterion: `d+1` linear forms are a linear system of
/// parameters iff, restricted to every facet, they span a space of dimension
/// equal to the facet size.
pub fn verify_lsop(complex: &SimplicialComplex, forms: &LinearForms) -> bool {
    let d = complex.dim();
    if forms.matrix.len() != (d + 1).max(0) as usize {
        return false;
    }
    if forms
        .matrix
        .iter()
        .any(|row| row.len() != complex.n_vertices())
    {
        return false;
    }
    for facet in complex.facets() {
        let restricted: Vec<Vec<Rational>> = forms
            .matrix
            .iter()
            .map(|row| facet.iter().map(|&v| row[v].clone()).collect())
            .collect();
        if linalg::rank_rational(restricted) != facet.len() {
            return false;
        }
    }
    true
}

/// Whether a coefficient row pattern is constant on the vertex orbits.
pub fn is_orbitwise_constant(acted: &ActedComplex, forms: &LinearForms) -> bool {
    let quotient = acted.quotient_graph();
    forms.matrix.iter().all(|row| {
        quotient
            .orbits
            .iter()
            .all(|orbit| orbit.iter().all(|&v| row[v] == row[orbit[0]]))
    })
}

pub use helpers::rational_from_i64;

mod helpers {
    use super::*;

    pub fn rational_from_i64(v: i64) -> Rational {
        Rational::from(Int::from(v))
    }

    #[allow(dead_code)]
    pub fn zero() -> Rational {
        Rational::zero()
    }
}
