//! Equivariant Ehrhart series, h*-series, and the coefficientwise
//! Ehrhart–Hilbert comparison for invariant unimodular triangulations.

use alloc::boxed::Box;
use alloc::vec::Vec;

use super::affine::AffineAction;
use super::base::{LatticePolytope, PolytopeError};
use super::triangulation::GeoTriangulation;
use crate::complex::ActedComplex;
use crate::grpchar::classfn::ClassFunction;
use crate::grpchar::cyclotomic::Int;
use crate::grpchar::series::EquivariantSeries;

/// The equivariant Ehrhart series to degree `n`: the coefficient of `t^m` is
/// the permutation character on the lattice points of the `m`-th dilate.
pub fn equivariant_ehrhart(
    polytope: &LatticePolytope,
    action: &AffineAction,
    n: usize,
) -> Result<EquivariantSeries, PolytopeError> {
    if !action.preserves(polytope) {
        return Err(PolytopeError::DoesNotPreserveVertices { generator: 0 });
    }
    let group = action.group().clone();
    let mut coeffs = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let points = polytope.lattice_points(m as i64);
        let values: Vec<i64> = group
            .classes()
            .iter()
            .map(|class| {
                let map = action.map(class.representative);
                points
                    .iter()
                    .filter(|x| {
                        map.matrix
                            .iter()
                            .zip(map.translation.iter())
                            .enumerate()
                            .all(|(i, (row, &t))| {
                                super::base::dot(row, x) + m as i64 * t == x[i]
                            })
                    })
                    .count() as i64
            })
            .collect();
        coeffs.push(ClassFunction::from_ints(group.clone(), &values));
    }
    Ok(EquivariantSeries::from_coeffs(group, coeffs))
}

/// `h*(P,ρ;t)` truncated at degree `n`: the product of the equivariant
/// Ehrhart series with `det(Id − ρ̃·t)`, computed classwise. The result is a
/// power series and need not be a polynomial.
pub fn h_star_series(
    polytope: &LatticePolytope,
    action: &AffineAction,
    n: usize,
) -> Result<EquivariantSeries, PolytopeError> {
    let ehrhart = equivariant_ehrhart(polytope, action, n)?;
    let det_poly = action.det_id_minus_rho_t();
    ehrhart
        .mul_polynomial(&det_poly)
        .map_err(|_| PolytopeError::DimensionMismatch { expected: action.dim(), found: 0 })
}

/// One comparison entry of the Ehrhart–Hilbert check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EbmEntry {
    pub class: usize,
    pub degree: usize,
    /// Fixed lattice points of the dilate.
    pub lattice_count: Int,
    /// Fixed monomials of the face ring of the triangulation.
    pub monomial_count: Int,
}

#[derive(Clone, Debug)]
pub struct EbmReport {
    pub ok: bool,
    pub entries: Vec<EbmEntry>,
}

impl EbmReport {
    pub fn mismatches(&self) -> impl Iterator<Item = &EbmEntry> {
        self.entries
            .iter()
            .filter(|e| e.lattice_count != e.monomial_count)
    }
}

/// Compares, for every conjugacy class and every degree up to `n`, the number
/// of fixed lattice points of the dilates of `polytope` with the number of
/// fixed monomials of the face ring of the triangulation, after validating
/// the triangulation (lattice, unimodular, covering, disjoint, invariant).
/// The two sides are computed independently: a bounding-box scan against a
/// monomial enumeration.
pub fn verify_ebm(
    polytope: &LatticePolytope,
    triangulation: &GeoTriangulation,
    action: &AffineAction,
    n: usize,
) -> Result<EbmReport, PolytopeError> {
    let report = triangulation.check(polytope, Some(action));
    if !report.passed() {
        return Err(PolytopeError::TriangulationInvalid(Box::new(report)));
    }
    let induced = triangulation.induced_vertex_action(action)?;
    let acted = ActedComplex::new(
        triangulation.complex().clone(),
        action.group().clone(),
        induced,
    )?;
    let hilbert = acted.hilbert_series_direct(n);
    let ehrhart = equivariant_ehrhart(polytope, action, n)?;

    let group = action.group();
    let mut entries = Vec::new();
    let mut ok = true;
    for class in 0..group.class_count() {
        for degree in 0..=n {
            let lattice_count = ehrhart
                .coeff(degree)
                .value(class)
                .as_rational()
                .expect("permutation character values are integers")
                .to_integer();
            let monomial_count = hilbert
                .coeff(degree)
                .value(class)
                .as_rational()
                .expect("permutation character values are integers")
                .to_integer();
            ok &= lattice_count == monomial_count;
            entries.push(EbmEntry {
                class,
                degree,
                lattice_count,
                monomial_count,
            });
        }
    }
    Ok(EbmReport { ok, entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::group::FiniteGroup;
    use crate::grpchar::perm::Permutation;
    use crate::grpchar::series::expand_rational;
    use crate::polytope::affine::AffineMap;
    use alloc::sync::Arc;
    use alloc::vec;

    fn unit_square() -> LatticePolytope {
        LatticePolytope::from_vertices(
            2,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap()
    }

    fn square_swap() -> AffineAction {
        let group =
            FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        let swap = AffineMap {
            matrix: vec![vec![0, 1], vec![1, 0]],
            translation: vec![0, 0],
        };
        AffineAction::from_generators(group, &unit_square(), &[swap]).unwrap()
    }

    fn ints(cf: &ClassFunction) -> Vec<i64> {
        cf.values()
            .iter()
            .map(|v| i64::try_from(v.as_rational().unwrap().to_integer()).unwrap())
            .collect()
    }

    #[test]
    fn square_ehrhart_series() {
        let action = square_swap();
        let series = equivariant_ehrhart(&unit_square(), &action, 4).unwrap();
        for m in 0..=4i64 {
            // (m+1)² points, m+1 of them on the diagonal.
            assert_eq!(
                ints(series.coeff(m as usize)),
                vec![(m + 1) * (m + 1), m + 1]
            );
        }
        // Matches the closed form (1 + χ_sgn·t)/(1−t)³.
        let group = action.group().clone();
        let triv = ClassFunction::trivial(group.clone());
        let sgn = ClassFunction::from_ints(group.clone(), &[1, -1]);
        let closed = expand_rational(
            &[triv.clone(), sgn],
            &[(triv.clone(), 1), (triv.clone(), 1), (triv, 1)],
            4,
        )
        .unwrap();
        assert_eq!(series, closed);
    }

    #[test]
    fn trivial_group_gives_classical_ehrhart() {
        let group = FiniteGroup::trivial(1);
        let action = AffineAction::trivial(group, 2);
        let series = equivariant_ehrhart(&unit_square(), &action, 3).unwrap();
        let counts: Vec<i64> = (0..=3).map(|m| ints(series.coeff(m))[0]).collect();
        assert_eq!(counts, vec![1, 4, 9, 16]);
    }

    #[test]
    fn h_star_of_the_square() {
        let action = square_swap();
        let hstar = h_star_series(&unit_square(), &action, 6).unwrap();
        // At the identity the classical h* of the unit square is 1 + t.
        let at_id: Vec<i64> = (0..=6).map(|m| ints(hstar.coeff(m))[0]).collect();
        assert_eq!(at_id, vec![1, 1, 0, 0, 0, 0, 0]);
        // Under the swap the h*-series is 1 + t as well.
        let at_swap: Vec<i64> = (0..=6).map(|m| ints(hstar.coeff(m))[1]).collect();
        assert_eq!(at_swap, vec![1, 1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn h_star_segment_is_one() {
        let segment = LatticePolytope::from_vertices(1, vec![vec![0], vec![1]]).unwrap();
        let group = FiniteGroup::trivial(1);
        let action = AffineAction::trivial(group, 1);
        let hstar = h_star_series(&segment, &action, 5).unwrap();
        let coeffs: Vec<i64> = (0..=5).map(|m| ints(hstar.coeff(m))[0]).collect();
        assert_eq!(coeffs, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn verify_ebm_on_the_square() {
        let square = unit_square();
        let action = square_swap();
        let triangulation = GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1, 3], vec![0, 2, 3]],
        )
        .unwrap();
        let report = verify_ebm(&square, &triangulation, &action, 6).unwrap();
        assert!(report.ok);
        assert_eq!(report.mismatches().count(), 0);
    }

    #[test]
    fn verify_ebm_unit_segment() {
        let segment = LatticePolytope::from_vertices(1, vec![vec![0], vec![1]]).unwrap();
        let group = FiniteGroup::trivial(1);
        let action = AffineAction::trivial(group.clone(), 1);
        let triangulation =
            GeoTriangulation::from_lattice(vec![vec![0], vec![1]], vec![vec![0, 1]]).unwrap();
        let report = verify_ebm(&segment, &triangulation, &action, 6).unwrap();
        assert!(report.ok);
        for entry in &report.entries {
            assert_eq!(entry.lattice_count, Int::from(entry.degree as i64 + 1));
        }
        let _ = Arc::strong_count(&group);
    }

    #[test]
    fn verify_ebm_rejects_bad_triangulations() {
        let square = unit_square();
        let action = square_swap();
        let partial = GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1, 3]],
        )
        .unwrap();
        assert!(matches!(
            verify_ebm(&square, &partial, &action, 3),
            Err(PolytopeError::TriangulationInvalid(_))
        ));
    }
}
