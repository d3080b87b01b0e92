//! Affine unimodular group actions on lattice polytopes.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::base::{dot, LatticePolytope, PolytopeError};
use crate::grpchar::classfn::ClassFunction;
use crate::grpchar::cyclotomic::{Cyclotomic, Int, Rational};
use crate::grpchar::group::FiniteGroup;
use crate::linalg;

/// The affine map `x ↦ A·x + b` with integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: Vec<Vec<i64>>,
    pub translation: Vec<i64>,
}

impl AffineMap {
    pub fn identity(dim: usize) -> Self {
        AffineMap {
            matrix: (0..dim)
                .map(|i| (0..dim).map(|j| i64::from(i == j)).collect())
                .collect(),
            translation: vec![0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.translation.len()
    }

    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        self.matrix
            .iter()
            .zip(self.translation.iter())
            .map(|(row, &t)| dot(row, x) + t)
            .collect()
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        let dim = self.dim();
        let matrix: Vec<Vec<i64>> = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| (0..dim).map(|k| self.matrix[i][k] * other.matrix[k][j]).sum())
                    .collect()
            })
            .collect();
        let translation: Vec<i64> = (0..dim)
            .map(|i| dot(&self.matrix[i], &other.translation) + self.translation[i])
            .collect();
        AffineMap { matrix, translation }
    }

    pub fn determinant(&self) -> Int {
        linalg::det_int(&self.matrix)
    }

    /// The linear map on `Z^{d+1}` fixing the last coordinate, as a block
    /// matrix `[[A, b], [0, 1]]`.
    pub fn homogenized(&self) -> Vec<Vec<i64>> {
        let dim = self.dim();
        let mut rows: Vec<Vec<i64>> = self
            .matrix
            .iter()
            .zip(self.translation.iter())
            .map(|(row, &t)| {
                let mut r = row.clone();
                r.push(t);
                r
            })
            .collect();
        let mut last = vec![0; dim + 1];
        last[dim] = 1;
        rows.push(last);
        rows
    }
}

/// A group acting by affine unimodular transformations, one map per element.
#[derive(Clone, Debug)]
pub struct AffineAction {
    group: Arc<FiniteGroup>,
    dim: usize,
    maps: Vec<AffineMap>,
}

impl AffineAction {
    /// Extends generator maps over the group, checking unimodularity, that
    /// each generator permutes the polytope's vertex list, and the
    /// homomorphism property.
    pub fn from_generators(
        group: Arc<FiniteGroup>,
        polytope: &LatticePolytope,
        gen_maps: &[AffineMap],
    ) -> Result<Self, PolytopeError> {
        let dim = polytope.dim();
        for (gi, map) in gen_maps.iter().enumerate() {
            if map.dim() != dim || map.matrix.iter().any(|row| row.len() != dim) {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    found: map.dim(),
                });
            }
            if map.determinant().abs() != Int::one() {
                return Err(PolytopeError::NotUnimodular { generator: gi });
            }
            if !permutes_vertices(polytope, map) {
                return Err(PolytopeError::DoesNotPreserveVertices { generator: gi });
            }
        }
        let maps = group.extend_homomorphism(
            AffineMap::identity(dim),
            gen_maps,
            |a, b| a.compose(b),
            |a, b| a == b,
        )?;
        Ok(AffineAction { group, dim, maps })
    }

    pub fn trivial(group: Arc<FiniteGroup>, dim: usize) -> Self {
        let maps = vec![AffineMap::identity(dim); group.order()];
        AffineAction { group, dim, maps }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn maps(&self) -> &[AffineMap] {
        &self.maps
    }

    pub fn map(&self, element: usize) -> &AffineMap {
        &self.maps[element]
    }

    /// Whether every map permutes the polytope's vertex list.
    pub fn preserves(&self, polytope: &LatticePolytope) -> bool {
        polytope.dim() == self.dim && self.maps.iter().all(|m| permutes_vertices(polytope, m))
    }

    /// `det(Id − ρ̃·t)` classwise: the coefficient of `t^m` is a class
    /// function with integer values, assembled from the homogenized maps.
    pub fn det_id_minus_rho_t(&self) -> Vec<ClassFunction> {
        let degree = self.dim + 1;
        let per_class: Vec<Vec<Int>> = self
            .group
            .classes()
            .iter()
            .map(|class| {
                let homog = self.maps[class.representative].homogenized();
                det_id_minus_t(&homog, degree)
            })
            .collect();
        (0..=degree)
            .map(|m| {
                let values: Vec<Cyclotomic> = per_class
                    .iter()
                    .map(|poly| Cyclotomic::from_bigint(poly[m].clone()))
                    .collect();
                ClassFunction::new(self.group.clone(), values)
            })
            .collect()
    }
}

fn permutes_vertices(polytope: &LatticePolytope, map: &AffineMap) -> bool {
    let mut images: Vec<Vec<i64>> = polytope.vertices().iter().map(|v| map.apply(v)).collect();
    images.sort();
    images.dedup();
    images == polytope.vertices()
}

/// Integer coefficients of `det(I − M·t)` for a square integer matrix, via
/// evaluation at `t = 0..=degree` and Lagrange interpolation.
fn det_id_minus_t(matrix: &[Vec<i64>], degree: usize) -> Vec<Int> {
    let n = matrix.len();
    let points: Vec<(Rational, Rational)> = (0..=degree as i64)
        .map(|t| {
            let m: Vec<Vec<Rational>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            let id = if i == j { 1 } else { 0 };
                            Rational::from(Int::from(id - matrix[i][j] * t))
                        })
                        .collect()
                })
                .collect();
            (
                Rational::from(Int::from(t)),
                linalg::det_rational(m),
            )
        })
        .collect();
    let coeffs = lagrange_interpolate(&points);
    debug_assert!(coeffs.len() <= degree + 1);
    let mut out: Vec<Int> = coeffs
        .iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer()
        })
        .collect();
    out.resize(degree + 1, Int::zero());
    out
}

/// Coefficients of the unique polynomial through the given points.
fn lagrange_interpolate(points: &[(Rational, Rational)]) -> Vec<Rational> {
    let n = points.len();
    let mut acc = vec![Rational::zero(); n];
    for (j, (xj, yj)) in points.iter().enumerate() {
        // Basis polynomial Π_{l≠j} (x − x_l)/(x_j − x_l), in coefficient form.
        let mut basis = vec![Rational::zero(); n];
        basis[0] = Rational::one();
        let mut deg = 0;
        let mut denom = Rational::one();
        for (l, (xl, _)) in points.iter().enumerate() {
            if l == j {
                continue;
            }
            // basis *= (x − x_l)
            for k in (0..=deg).rev() {
                let shifted = basis[k].clone();
                basis[k + 1] = &basis[k + 1] + &shifted;
                basis[k] = -(xl * &shifted);
            }
            // Re-add the lower contributions: multiply-by-(x − xl) done in place.
            deg += 1;
            denom *= xj - xl;
        }
        let scale = yj / &denom;
        for k in 0..=deg {
            acc[k] = &acc[k] + &(&basis[k] * &scale);
        }
    }
    while acc.len() > 1 && acc.last().map(|c| c.is_zero()) == Some(true) {
        acc.pop();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::perm::Permutation;

    fn ints(cf: &ClassFunction) -> Vec<i64> {
        cf.values()
            .iter()
            .map(|v| i64::try_from(v.as_rational().unwrap().to_integer()).unwrap())
            .collect()
    }

    fn unit_square() -> LatticePolytope {
        LatticePolytope::from_vertices(
            2,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap()
    }

    fn swap_action() -> AffineAction {
        let group =
            FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        let swap = AffineMap {
            matrix: vec![vec![0, 1], vec![1, 0]],
            translation: vec![0, 0],
        };
        AffineAction::from_generators(group, &unit_square(), &[swap]).unwrap()
    }

    #[test]
    fn composition_convention() {
        let a = AffineMap {
            matrix: vec![vec![0, 1], vec![1, 0]],
            translation: vec![1, 0],
        };
        let b = AffineMap {
            matrix: vec![vec![1, 0], vec![0, 1]],
            translation: vec![0, 2],
        };
        // (a∘b)(x) = A_a(A_b x + b_b) + b_a
        assert_eq!(a.compose(&b).apply(&[0, 0]), a.apply(&b.apply(&[0, 0])));
    }

    #[test]
    fn identity_det_poly_is_power_of_one_minus_t() {
        let group = FiniteGroup::trivial(1);
        let action = AffineAction::trivial(group, 2);
        let poly = action.det_id_minus_rho_t();
        // (1 − t)³ = 1 − 3t + 3t² − t³
        let coeffs: Vec<i64> = poly.iter().map(|c| ints(c)[0]).collect();
        assert_eq!(coeffs, vec![1, -3, 3, -1]);
    }

    #[test]
    fn coordinate_swap_det_poly() {
        let action = swap_action();
        let poly = action.det_id_minus_rho_t();
        // At the swap: eigenvalues of ρ̃ are (1, −1, 1): (1−t)²(1+t).
        let at_swap: Vec<i64> = poly.iter().map(|c| ints(c)[1]).collect();
        assert_eq!(at_swap, vec![1, -1, -1, 1]);
        let at_id: Vec<i64> = poly.iter().map(|c| ints(c)[0]).collect();
        assert_eq!(at_id, vec![1, -3, 3, -1]);
    }

    #[test]
    fn segment_antipodal_det_poly() {
        // x ↦ −x + 1 on the unit segment: det = (1−t)(1+t) at that class.
        let segment = LatticePolytope::from_vertices(1, vec![vec![0], vec![1]]).unwrap();
        let group =
            FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        let flip = AffineMap {
            matrix: vec![vec![-1]],
            translation: vec![1],
        };
        let action = AffineAction::from_generators(group, &segment, &[flip]).unwrap();
        let poly = action.det_id_minus_rho_t();
        let at_flip: Vec<i64> = poly.iter().map(|c| ints(c)[1]).collect();
        assert_eq!(at_flip, vec![1, 0, -1]);
    }

    #[test]
    fn bad_generators_are_rejected() {
        let group =
            FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        let shear = AffineMap {
            matrix: vec![vec![1, 1], vec![0, 1]],
            translation: vec![0, 0],
        };
        assert!(matches!(
            AffineAction::from_generators(group.clone(), &unit_square(), &[shear]),
            Err(PolytopeError::DoesNotPreserveVertices { .. })
        ));
        let doubling = AffineMap {
            matrix: vec![vec![2, 0], vec![0, 1]],
            translation: vec![0, 0],
        };
        assert!(matches!(
            AffineAction::from_generators(group, &unit_square(), &[doubling]),
            Err(PolytopeError::NotUnimodular { .. })
        ));
    }
}
