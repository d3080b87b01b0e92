//! Geometric triangulations of lattice polytopes and their validation:
//! lattice vertices, unimodular cells, volume coverage, interior
//! disjointness, and equivariance.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use super::affine::AffineAction;
use super::base::{LatticePolytope, PolytopeError};
use crate::complex::SimplicialComplex;
use crate::grpchar::cyclotomic::{Int, Rational};
use crate::linalg;

/// A simplicial complex whose abstract vertices carry (rational) coordinates.
/// Coordinates are kept rational so that non-lattice input is diagnosed by
/// [`GeoTriangulation::check`] rather than rejected at parse time.
#[derive(Clone, Debug)]
pub struct GeoTriangulation {
    coords: Vec<Vec<Rational>>,
    complex: SimplicialComplex,
}

/// Outcome of the triangulation checks; `passed` requires every section to be
/// clean.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriangulationReport {
    /// Vertices with non-integer coordinates.
    pub non_lattice_vertices: Vec<usize>,
    /// Pairs of vertices sharing coordinates.
    pub duplicate_coordinates: Vec<(usize, usize)>,
    /// Vertices outside the polytope.
    pub outside_vertices: Vec<usize>,
    /// Cells that are not unimodular simplices (wrong arity, degenerate, or
    /// |det| ≠ 1).
    pub non_unimodular_cells: Vec<usize>,
    /// Σ |det| over maximal cells.
    pub covered_volume: Int,
    /// dim!·vol(P) from the independent pyramid-decomposition oracle.
    pub expected_volume: Int,
    /// Pairs of cells whose interiors meet (witnessed by barycenters).
    pub overlapping_cells: Vec<(usize, usize)>,
    /// (generator, cell) pairs where the generator image is not a cell.
    pub action_violations: Vec<(usize, usize)>,
}

impl TriangulationReport {
    pub fn unimodular(&self) -> bool {
        self.non_unimodular_cells.is_empty()
    }

    pub fn covers(&self) -> bool {
        self.covered_volume == self.expected_volume
    }

    pub fn passed(&self) -> bool {
        self.non_lattice_vertices.is_empty()
            && self.duplicate_coordinates.is_empty()
            && self.outside_vertices.is_empty()
            && self.unimodular()
            && self.covers()
            && self.overlapping_cells.is_empty()
            && self.action_violations.is_empty()
    }
}

impl fmt::Display for TriangulationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "all checks passed (normalized volume {})", self.covered_volume);
        }
        if !self.non_lattice_vertices.is_empty() {
            write!(f, "non-lattice vertices {:?}; ", self.non_lattice_vertices)?;
        }
        if !self.duplicate_coordinates.is_empty() {
            write!(f, "duplicate coordinates {:?}; ", self.duplicate_coordinates)?;
        }
        if !self.outside_vertices.is_empty() {
            write!(f, "vertices outside polytope {:?}; ", self.outside_vertices)?;
        }
        if !self.unimodular() {
            write!(f, "non-unimodular cells {:?}; ", self.non_unimodular_cells)?;
        }
        if !self.covers() {
            write!(
                f,
                "covered volume {} ≠ expected {}; ",
                self.covered_volume, self.expected_volume
            )?;
        }
        if !self.overlapping_cells.is_empty() {
            write!(f, "overlapping cells {:?}; ", self.overlapping_cells)?;
        }
        if !self.action_violations.is_empty() {
            write!(f, "generator/cell violations {:?}", self.action_violations)?;
        }
        Ok(())
    }
}

impl GeoTriangulation {
    pub fn new(
        coords: Vec<Vec<Rational>>,
        cells: Vec<Vec<usize>>,
    ) -> Result<Self, PolytopeError> {
        let complex = SimplicialComplex::new(coords.len(), cells)?;
        Ok(GeoTriangulation { coords, complex })
    }

    pub fn from_lattice(coords: Vec<Vec<i64>>, cells: Vec<Vec<usize>>) -> Result<Self, PolytopeError> {
        let coords = coords
            .into_iter()
            .map(|v| v.into_iter().map(|x| Rational::from(Int::from(x))).collect())
            .collect();
        Self::new(coords, cells)
    }

    pub fn coords(&self) -> &[Vec<Rational>] {
        &self.coords
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Integer coordinates, or the first offending vertex.
    pub fn lattice_coords(&self) -> Result<Vec<Vec<i64>>, usize> {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, v)| {
                v.iter()
                    .map(|x| {
                        if x.is_integer() {
                            i64::try_from(x.to_integer()).map_err(|_| i)
                        } else {
                            Err(i)
                        }
                    })
                    .collect::<Result<Vec<i64>, usize>>()
            })
            .collect()
    }

    /// Runs all validation checks against a polytope and an optional action.
    pub fn check(
        &self,
        polytope: &LatticePolytope,
        action: Option<&AffineAction>,
    ) -> TriangulationReport {
        let mut report = TriangulationReport::default();
        let dim = polytope.dim();

        for (i, coord) in self.coords.iter().enumerate() {
            if coord.len() != dim || coord.iter().any(|x| !x.is_integer()) {
                report.non_lattice_vertices.push(i);
            }
        }
        for i in 0..self.coords.len() {
            for j in i + 1..self.coords.len() {
                if self.coords[i] == self.coords[j] {
                    report.duplicate_coordinates.push((i, j));
                }
            }
        }
        for (i, coord) in self.coords.iter().enumerate() {
            if coord.len() == dim && !polytope.contains_rational_point(coord) {
                report.outside_vertices.push(i);
            }
        }
        report.expected_volume = polytope.normalized_volume();
        if !report.non_lattice_vertices.is_empty() {
            return report;
        }
        let lattice = self.lattice_coords().expect("checked integral");

        // Unimodularity and covered volume.
        let cells = self.complex.facets();
        let mut covered = Int::zero();
        for (ci, cell) in cells.iter().enumerate() {
            if cell.len() != dim + 1 {
                report.non_unimodular_cells.push(ci);
                continue;
            }
            let least = cell
                .iter()
                .min_by(|&&a, &&b| lattice[a].cmp(&lattice[b]))
                .copied()
                .expect("nonempty cell");
            let edges: Vec<Vec<i64>> = cell
                .iter()
                .filter(|&&v| v != least)
                .map(|&v| {
                    (0..dim)
                        .map(|k| lattice[v][k] - lattice[least][k])
                        .collect()
                })
                .collect();
            let det = linalg::det_int(&edges).abs();
            if !det.is_one() {
                report.non_unimodular_cells.push(ci);
            }
            covered += det;
        }
        report.covered_volume = covered;

        // Interior disjointness via barycenters.
        let barycenters: Vec<Option<Vec<Rational>>> = cells
            .iter()
            .map(|cell| {
                if cell.len() != dim + 1 {
                    return None;
                }
                let n = Rational::from(Int::from(cell.len() as i64));
                Some(
                    (0..dim)
                        .map(|k| {
                            let sum: Rational = cell
                                .iter()
                                .map(|&v| Rational::from(Int::from(lattice[v][k])))
                                .sum();
                            sum / &n
                        })
                        .collect(),
                )
            })
            .collect();
        for i in 0..cells.len() {
            let Some(b) = &barycenters[i] else { continue };
            for j in 0..cells.len() {
                if i == j || cells[j].len() != dim + 1 {
                    continue;
                }
                if simplex_contains(&lattice, &cells[j], b) {
                    report.overlapping_cells.push((i.min(j), i.max(j)));
                }
            }
        }
        report.overlapping_cells.sort_unstable();
        report.overlapping_cells.dedup();

        // Equivariance: generator images of cells are cells.
        if let Some(action) = action {
            let cell_keys: alloc::collections::BTreeSet<Vec<Vec<i64>>> = cells
                .iter()
                .map(|cell| {
                    let mut key: Vec<Vec<i64>> =
                        cell.iter().map(|&v| lattice[v].clone()).collect();
                    key.sort();
                    key
                })
                .collect();
            for (gi, gen) in action.group().generators().iter().enumerate() {
                let elem = action
                    .group()
                    .index_of(gen)
                    .expect("generators are elements");
                let map = action.map(elem);
                for (ci, cell) in cells.iter().enumerate() {
                    let mut image: Vec<Vec<i64>> =
                        cell.iter().map(|&v| map.apply(&lattice[v])).collect();
                    image.sort();
                    if !cell_keys.contains(&image) {
                        report.action_violations.push((gi, ci));
                    }
                }
            }
        }
        report
    }

    /// The permutation each group element induces on the triangulation's
    /// vertices (by mapping coordinates), for building the acted complex.
    pub fn induced_vertex_action(
        &self,
        action: &AffineAction,
    ) -> Result<Vec<crate::grpchar::perm::Permutation>, PolytopeError> {
        let lattice = self
            .lattice_coords()
            .map_err(|v| PolytopeError::InducedActionUndefined { element: 0, vertex: v })?;
        let index: BTreeMap<Vec<i64>, usize> = lattice
            .iter()
            .enumerate()
            .map(|(i, c)| (c.clone(), i))
            .collect();
        let mut perms = Vec::with_capacity(action.maps().len());
        for (e, map) in action.maps().iter().enumerate() {
            let mut images = Vec::with_capacity(lattice.len());
            for (v, coord) in lattice.iter().enumerate() {
                let target = map.apply(coord);
                match index.get(&target) {
                    Some(&w) => images.push(w),
                    None => {
                        return Err(PolytopeError::InducedActionUndefined { element: e, vertex: v })
                    }
                }
            }
            perms.push(
                crate::grpchar::perm::Permutation::new(images)
                    .expect("bijective images of a bijection"),
            );
        }
        Ok(perms)
    }
}

/// Whether a rational point lies in the closed simplex on the given vertices.
fn simplex_contains(lattice: &[Vec<i64>], cell: &[usize], point: &[Rational]) -> bool {
    let dim = point.len();
    let v0 = &lattice[cell[0]];
    let matrix: Vec<Vec<Rational>> = (0..dim)
        .map(|r| {
            cell[1..]
                .iter()
                .map(|&v| Rational::from(Int::from(lattice[v][r] - v0[r])))
                .collect()
        })
        .collect();
    let rhs: Vec<Rational> = (0..dim)
        .map(|r| point[r].clone() - Rational::from(Int::from(v0[r])))
        .collect();
    let Some(coords) = linalg::solve_rational(&matrix, &rhs) else {
        return false;
    };
    // Residual check (solve_rational returns a candidate for square systems).
    for r in 0..dim {
        let lhs: Rational = matrix[r]
            .iter()
            .zip(coords.iter())
            .map(|(m, c)| m * c)
            .sum();
        if lhs != rhs[r] {
            return false;
        }
    }
    let total: Rational = coords.iter().sum();
    coords.iter().all(|c| !c.is_negative()) && total <= Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::group::FiniteGroup;
    use crate::grpchar::perm::Permutation;
    use crate::polytope::affine::AffineMap;
    use alloc::vec;

    fn unit_square() -> LatticePolytope {
        LatticePolytope::from_vertices(
            2,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
        )
        .unwrap()
    }

    fn diagonal_split() -> GeoTriangulation {
        GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1, 3], vec![0, 2, 3]],
        )
        .unwrap()
    }

    #[test]
    fn diagonal_split_passes() {
        let square = unit_square();
        let report = diagonal_split().check(&square, None);
        assert!(report.passed(), "{report}");
        assert_eq!(report.covered_volume, Int::from(2));
    }

    #[test]
    fn non_lattice_center_is_rejected() {
        let square = unit_square();
        let half = Rational::new(Int::from(1), Int::from(2));
        let coords = vec![
            vec![Rational::zero(), Rational::zero()],
            vec![Rational::one(), Rational::zero()],
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::one()],
            vec![half.clone(), half],
        ];
        let cells = vec![
            vec![0, 1, 4],
            vec![1, 3, 4],
            vec![3, 2, 4],
            vec![2, 0, 4],
        ];
        let triangulation = GeoTriangulation::new(coords, cells).unwrap();
        let report = triangulation.check(&square, None);
        assert!(!report.passed());
        assert_eq!(report.non_lattice_vertices, vec![4]);
    }

    #[test]
    fn swap_maps_the_two_triangles_to_each_other() {
        let square = unit_square();
        let group =
            FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        let swap = AffineMap {
            matrix: vec![vec![0, 1], vec![1, 0]],
            translation: vec![0, 0],
        };
        let action = AffineAction::from_generators(group, &square, &[swap]).unwrap();
        let triangulation = diagonal_split();
        let report = triangulation.check(&square, Some(&action));
        assert!(report.passed(), "{report}");
        let perms = triangulation.induced_vertex_action(&action).unwrap();
        assert_eq!(perms[1].images(), &[0, 2, 1, 3]);
    }

    #[test]
    fn missing_cell_fails_coverage() {
        let square = unit_square();
        let triangulation = GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1, 3]],
        )
        .unwrap();
        let report = triangulation.check(&square, None);
        assert!(!report.passed());
        assert!(report.unimodular());
        assert!(!report.covers());
    }

    #[test]
    fn overlapping_cells_are_detected() {
        let square = unit_square();
        let triangulation = GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]],
            vec![vec![0, 1, 3], vec![0, 2, 3], vec![0, 1, 2]],
        )
        .unwrap();
        let report = triangulation.check(&square, None);
        assert!(!report.passed());
        assert!(!report.overlapping_cells.is_empty());
    }

    #[test]
    fn non_unimodular_cell_is_flagged() {
        let wide = LatticePolytope::from_vertices(
            2,
            vec![vec![0, 0], vec![2, 0], vec![0, 1], vec![2, 1]],
        )
        .unwrap();
        let triangulation = GeoTriangulation::from_lattice(
            vec![vec![0, 0], vec![2, 0], vec![0, 1], vec![2, 1]],
            vec![vec![0, 1, 3], vec![0, 2, 3]],
        )
        .unwrap();
        let report = triangulation.check(&wide, None);
        assert!(!report.unimodular());
        assert_eq!(report.non_unimodular_cells, vec![0, 1]);
        // |det| of both cells is 2, so the volume identity still holds.
        assert!(report.covers());
    }
}
