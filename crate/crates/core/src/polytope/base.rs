//! Full-dimensional lattice polytopes in both V- and H-representation, with
//! exact lattice-point enumeration and an independent volume oracle.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::grpchar::cyclotomic::{format_rational, Int, Rational};
use crate::grpchar::group::GroupError;
use crate::linalg;

/// The inequality `normal·x ≤ offset`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Halfspace {
    pub normal: Vec<i64>,
    pub offset: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolytopeError {
    DimensionMismatch { expected: usize, found: usize },
    EmptyVertexSet,
    NotFullDimensional { affine_rank: usize, dim: usize },
    /// Brute-force facet/vertex enumeration is provided for small dimension.
    DimensionTooLarge { dim: usize, limit: usize },
    VertexViolatesHalfspace { vertex: Vec<i64>, halfspace: usize },
    /// A vertex not cut out by `dim` independent active halfspaces.
    VertexNotBasic { vertex: Vec<i64> },
    /// A basic feasible solution of the H-representation missing from the
    /// vertex list.
    MissingVertex { point: Vec<i64> },
    /// A basic feasible solution with non-integer coordinates.
    NonLatticeVertex { point: String },
    Group(GroupError),
    /// A generator matrix with |det| ≠ 1.
    NotUnimodular { generator: usize },
    /// A generator that does not permute the polytope's vertex list.
    DoesNotPreserveVertices { generator: usize },
    /// The affine action does not map triangulation vertices to vertices.
    InducedActionUndefined { element: usize, vertex: usize },
    /// A facet normal outside `±e_i`, `e_i − e_j`: not alcoved.
    NotAlcoved { halfspace: usize },
    /// check_triangulation failed; the report carries the offenders.
    TriangulationInvalid(alloc::boxed::Box<super::triangulation::TriangulationReport>),
    Complex(crate::complex::ComplexError),
}

impl fmt::Display for PolytopeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolytopeError::DimensionMismatch { expected, found } => {
                write!(f, "expected vectors of length {expected}, found {found}")
            }
            PolytopeError::EmptyVertexSet => write!(f, "a polytope needs at least one vertex"),
            PolytopeError::NotFullDimensional { affine_rank, dim } => write!(
                f,
                "vertex set spans an affine subspace of rank {affine_rank}, expected dimension {dim}"
            ),
            PolytopeError::DimensionTooLarge { dim, limit } => {
                write!(f, "brute-force enumeration supports dimension ≤ {limit}, got {dim}")
            }
            PolytopeError::VertexViolatesHalfspace { vertex, halfspace } => {
                write!(f, "vertex {vertex:?} violates halfspace {halfspace}")
            }
            PolytopeError::VertexNotBasic { vertex } => write!(
                f,
                "vertex {vertex:?} does not lie on {} independent active halfspaces",
                "dim"
            ),
            PolytopeError::MissingVertex { point } => write!(
                f,
                "point {point:?} satisfies dim independent halfspaces with equality but is not a listed vertex"
            ),
            PolytopeError::NonLatticeVertex { point } => {
                write!(f, "basic solution {point} is not a lattice point")
            }
            PolytopeError::Group(e) => write!(f, "{e}"),
            PolytopeError::NotUnimodular { generator } => {
                write!(f, "generator {generator} is not unimodular")
            }
            PolytopeError::DoesNotPreserveVertices { generator } => {
                write!(f, "generator {generator} does not permute the vertex set")
            }
            PolytopeError::InducedActionUndefined { element, vertex } => write!(
                f,
                "element {element} maps triangulation vertex {vertex} outside the vertex set"
            ),
            PolytopeError::NotAlcoved { halfspace } => write!(
                f,
                "halfspace {halfspace} is not of the alcoved form ±e_i or e_i − e_j"
            ),
            PolytopeError::TriangulationInvalid(report) => {
                write!(f, "triangulation checks failed: {report}")
            }
            PolytopeError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for PolytopeError {
    fn from(e: GroupError) -> Self {
        PolytopeError::Group(e)
    }
}

impl From<crate::complex::ComplexError> for PolytopeError {
    fn from(e: crate::complex::ComplexError) -> Self {
        PolytopeError::Complex(e)
    }
}

const BRUTE_FORCE_DIM_LIMIT: usize = 8;

/// A full-dimensional lattice polytope in `Z^dim`, carrying both its vertex
/// list and an H-representation; consistency of the two is checked at
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticePolytope {
    dim: usize,
    vertices: Vec<Vec<i64>>,
    halfspaces: Vec<Halfspace>,
}

impl LatticePolytope {
    pub fn new(
        dim: usize,
        vertices: Vec<Vec<i64>>,
        halfspaces: Vec<Halfspace>,
    ) -> Result<Self, PolytopeError> {
        if vertices.is_empty() {
            return Err(PolytopeError::EmptyVertexSet);
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
        }
        for h in &halfspaces {
            if h.normal.len() != dim {
                return Err(PolytopeError::DimensionMismatch {
                    expected: dim,
                    found: h.normal.len(),
                });
            }
        }
        let mut vertices = vertices;
        vertices.sort();
        vertices.dedup();

        let affine_rank = linalg::affine_independent_count(&vertices);
        if affine_rank != dim + 1 {
            return Err(PolytopeError::NotFullDimensional { affine_rank, dim });
        }
        for (hi, h) in halfspaces.iter().enumerate() {
            for v in &vertices {
                if dot(&h.normal, v) > h.offset {
                    return Err(PolytopeError::VertexViolatesHalfspace {
                        vertex: v.clone(),
                        halfspace: hi,
                    });
                }
            }
        }
        let polytope = LatticePolytope {
            dim,
            vertices,
            halfspaces,
        };
        polytope.check_vertex_halfspace_consistency()?;
        Ok(polytope)
    }

    /// Builds the H-representation from the vertex list by brute-force facet
    /// enumeration over dim-subsets of vertices (dimension ≤ 8).
    pub fn from_vertices(dim: usize, vertices: Vec<Vec<i64>>) -> Result<Self, PolytopeError> {
        if dim > BRUTE_FORCE_DIM_LIMIT {
            return Err(PolytopeError::DimensionTooLarge {
                dim,
                limit: BRUTE_FORCE_DIM_LIMIT,
            });
        }
        let mut sorted = vertices.clone();
        sorted.sort();
        sorted.dedup();
        let halfspaces = facet_halfspaces(dim, &sorted);
        Self::new(dim, sorted, halfspaces)
    }

    /// Builds the vertex list from the H-representation by solving all
    /// dim-subsets of equalities (dimension ≤ 8).
    pub fn from_halfspaces(dim: usize, halfspaces: Vec<Halfspace>) -> Result<Self, PolytopeError> {
        if dim > BRUTE_FORCE_DIM_LIMIT {
            return Err(PolytopeError::DimensionTooLarge {
                dim,
                limit: BRUTE_FORCE_DIM_LIMIT,
            });
        }
        let mut vertices: BTreeSet<Vec<i64>> = BTreeSet::new();
        let mut bad: Option<PolytopeError> = None;
        linalg::for_each_combination(halfspaces.len(), dim, &mut |subset| {
            if bad.is_some() {
                return;
            }
            if let Some(point) = solve_equalities(dim, &halfspaces, subset) {
                if satisfies_all(&halfspaces, &point, 1) {
                    match rational_point_to_lattice(&point) {
                        Some(lattice) => {
                            vertices.insert(lattice);
                        }
                        None => {
                            bad = Some(PolytopeError::NonLatticeVertex {
                                point: format_point(&point),
                            });
                        }
                    }
                }
            }
        });
        if let Some(e) = bad {
            return Err(e);
        }
        Self::new(dim, vertices.into_iter().collect(), halfspaces)
    }

    /// Every basic feasible solution of the H-representation must be a listed
    /// vertex, and every vertex must be basic.
    fn check_vertex_halfspace_consistency(&self) -> Result<(), PolytopeError> {
        // Each vertex lies on dim linearly independent active halfspaces.
        for v in &self.vertices {
            let active: Vec<&Halfspace> = self
                .halfspaces
                .iter()
                .filter(|h| dot(&h.normal, v) == h.offset)
                .collect();
            let rows: Vec<Vec<Int>> = active
                .iter()
                .map(|h| h.normal.iter().map(|&x| Int::from(x)).collect())
                .collect();
            if linalg::rank_int(rows) != self.dim {
                return Err(PolytopeError::VertexNotBasic { vertex: v.clone() });
            }
        }
        // Conversely, basic feasible solutions are exactly the vertices.
        if self.halfspaces.len() <= 16 && self.dim <= BRUTE_FORCE_DIM_LIMIT {
            let mut result: Result<(), PolytopeError> = Ok(());
            linalg::for_each_combination(self.halfspaces.len(), self.dim, &mut |subset| {
                if result.is_err() {
                    return;
                }
                if let Some(point) = solve_equalities(self.dim, &self.halfspaces, subset) {
                    if satisfies_all(&self.halfspaces, &point, 1) {
                        match rational_point_to_lattice(&point) {
                            Some(lattice) => {
                                if !self.vertices.contains(&lattice) {
                                    result = Err(PolytopeError::MissingVertex { point: lattice });
                                }
                            }
                            None => {
                                result = Err(PolytopeError::NonLatticeVertex {
                                    point: format_point(&point),
                                });
                            }
                        }
                    }
                }
            });
            result?;
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[Vec<i64>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[Halfspace] {
        &self.halfspaces
    }

    /// Membership of a lattice point in the `m`-th dilate (`a·x ≤ m·b`).
    pub fn contains_lattice_point(&self, x: &[i64], m: i64) -> bool {
        self.halfspaces
            .iter()
            .all(|h| dot(&h.normal, x) <= m * h.offset)
    }

    pub fn contains_rational_point(&self, x: &[Rational]) -> bool {
        self.halfspaces.iter().all(|h| {
            let lhs: Rational = h
                .normal
                .iter()
                .zip(x.iter())
                .map(|(&a, xi)| Rational::from(Int::from(a)) * xi)
                .sum();
            lhs <= Rational::from(Int::from(h.offset))
        })
    }

    /// All lattice points of the `m`-th dilate, in lexicographic order, by
    /// scanning the integer bounding box.
    pub fn lattice_points(&self, m: i64) -> Vec<Vec<i64>> {
        assert!(m >= 0, "dilation factor must be nonnegative");
        let mut lo = vec![i64::MAX; self.dim];
        let mut hi = vec![i64::MIN; self.dim];
        for v in &self.vertices {
            for i in 0..self.dim {
                lo[i] = lo[i].min(m * v[i]);
                hi[i] = hi[i].max(m * v[i]);
            }
        }
        let mut points = Vec::new();
        let mut current = lo.clone();
        'scan: loop {
            if self.contains_lattice_point(&current, m) {
                points.push(current.clone());
            }
            // Odometer increment, most significant coordinate first.
            let mut pos = self.dim;
            loop {
                if pos == 0 {
                    break 'scan;
                }
                pos -= 1;
                if current[pos] < hi[pos] {
                    current[pos] += 1;
                    for p in pos + 1..self.dim {
                        current[p] = lo[p];
                    }
                    break;
                }
            }
        }
        points
    }

    pub fn vertex_barycenter(&self) -> Vec<Rational> {
        let n = Rational::from(Int::from(self.vertices.len() as i64));
        (0..self.dim)
            .map(|i| {
                let sum: Rational = self
                    .vertices
                    .iter()
                    .map(|v| Rational::from(Int::from(v[i])))
                    .sum();
                sum / &n
            })
            .collect()
    }

    /// Euclidean volume (normalised to the lattice), computed independently
    /// of any triangulation by recursive pyramid decomposition over the
    /// facets from an interior rational point.
    pub fn volume(&self) -> Rational {
        lattice_volume(self.dim, &self.vertices)
    }

    /// `dim!·volume`, an integer for lattice polytopes.
    pub fn normalized_volume(&self) -> Int {
        let mut vol = self.volume();
        for k in 1..=self.dim {
            vol = vol * Rational::from(Int::from(k as i64));
        }
        debug_assert!(vol.is_integer());
        vol.to_integer()
    }
}

pub(crate) fn dot(a: &[i64], x: &[i64]) -> i64 {
    a.iter().zip(x.iter()).map(|(&p, &q)| p * q).sum()
}

fn format_point(p: &[Rational]) -> String {
    let parts: Vec<String> = p.iter().map(format_rational).collect();
    alloc::format!("({})", parts.join(", "))
}

fn rational_point_to_lattice(p: &[Rational]) -> Option<Vec<i64>> {
    p.iter()
        .map(|x| {
            if x.is_integer() {
                i64::try_from(x.to_integer()).ok()
            } else {
                None
            }
        })
        .collect()
}

fn satisfies_all(halfspaces: &[Halfspace], x: &[Rational], m: i64) -> bool {
    halfspaces.iter().all(|h| {
        let lhs: Rational = h
            .normal
            .iter()
            .zip(x.iter())
            .map(|(&a, xi)| Rational::from(Int::from(a)) * xi)
            .sum();
        lhs <= Rational::from(Int::from(m * h.offset))
    })
}

/// Solves `normal_i·x = offset_i` over the chosen subset; `None` when the
/// normals are dependent.
fn solve_equalities(
    dim: usize,
    halfspaces: &[Halfspace],
    subset: &[usize],
) -> Option<Vec<Rational>> {
    let a: Vec<Vec<Rational>> = subset
        .iter()
        .map(|&i| {
            halfspaces[i]
                .normal
                .iter()
                .map(|&x| Rational::from(Int::from(x)))
                .collect()
        })
        .collect();
    let rank = linalg::rank_rational(a.clone());
    if rank != dim {
        return None;
    }
    let b: Vec<Rational> = subset
        .iter()
        .map(|&i| Rational::from(Int::from(halfspaces[i].offset)))
        .collect();
    linalg::solve_rational(&a, &b)
}

/// Supporting facet hyperplanes of a vertex set, as primitive oriented
/// halfspaces, found over all dim-subsets of vertices.
fn facet_halfspaces(dim: usize, vertices: &[Vec<i64>]) -> Vec<Halfspace> {
    let mut found: BTreeSet<Halfspace> = BTreeSet::new();
    if dim == 0 {
        return Vec::new();
    }
    linalg::for_each_combination(vertices.len(), dim, &mut |subset| {
        let base = &vertices[subset[0]];
        let diffs: Vec<Vec<Rational>> = subset[1..]
            .iter()
            .map(|&i| {
                vertices[i]
                    .iter()
                    .zip(base.iter())
                    .map(|(&x, &y)| Rational::from(Int::from(x - y)))
                    .collect()
            })
            .collect();
        let kernel = linalg::nullspace_rational(&diffs, dim);
        if kernel.len() != 1 {
            return; // not spanning a hyperplane
        }
        let Some(normal) = primitive_integer_vector(&kernel[0]) else {
            return;
        };
        let offset = dot(&normal, base);
        let mut below = true;
        let mut above = true;
        for v in vertices {
            let val = dot(&normal, v);
            below &= val <= offset;
            above &= val >= offset;
        }
        if below {
            found.insert(Halfspace { normal, offset });
        } else if above {
            found.insert(Halfspace {
                normal: normal.iter().map(|&x| -x).collect(),
                offset: -offset,
            });
        }
    });
    found.into_iter().collect()
}

/// Scales a rational vector to a primitive integer vector.
fn primitive_integer_vector(v: &[Rational]) -> Option<Vec<i64>> {
    let mut lcm = Int::one();
    for x in v {
        lcm = num_integer::lcm(lcm, x.denom().clone());
    }
    let ints: Vec<Int> = v.iter().map(|x| (x * Rational::from(lcm.clone())).to_integer()).collect();
    let mut gcd = Int::zero();
    for x in &ints {
        gcd = num_integer::gcd(gcd, x.abs());
    }
    if gcd.is_zero() {
        return None;
    }
    ints.iter().map(|x| i64::try_from(x / &gcd).ok()).collect()
}

/// Lattice-normalised volume of the convex hull of `vertices` in `Z^dim`,
/// by pyramid decomposition from the vertex barycenter; degenerate vertex
/// sets have volume zero.
fn lattice_volume(dim: usize, vertices: &[Vec<i64>]) -> Rational {
    if dim == 0 {
        return Rational::one();
    }
    if linalg::affine_independent_count(vertices) != dim + 1 {
        return Rational::zero();
    }
    let n = Rational::from(Int::from(vertices.len() as i64));
    let barycenter: Vec<Rational> = (0..dim)
        .map(|i| {
            let sum: Rational = vertices
                .iter()
                .map(|v| Rational::from(Int::from(v[i])))
                .sum();
            sum / &n
        })
        .collect();
    let mut total = Rational::zero();
    for facet in facet_halfspaces(dim, vertices) {
        let active: Vec<Vec<i64>> = vertices
            .iter()
            .filter(|v| dot(&facet.normal, v) == facet.offset)
            .cloned()
            .collect();
        // Project the facet onto a lattice basis of the normal's kernel.
        let basis = linalg::integer_kernel_basis(&facet.normal);
        debug_assert_eq!(basis.len(), dim - 1);
        let anchor = &active[0];
        let matrix: Vec<Vec<Rational>> = (0..dim)
            .map(|r| {
                basis
                    .iter()
                    .map(|col| Rational::from(Int::from(col[r])))
                    .collect()
            })
            .collect();
        let mut projected = Vec::with_capacity(active.len());
        for v in &active {
            let rhs: Vec<Rational> = (0..dim)
                .map(|r| Rational::from(Int::from(v[r] - anchor[r])))
                .collect();
            let coords = linalg::solve_rational(&matrix, &rhs)
                .expect("facet vertices lie in the facet hyperplane");
            let lattice: Vec<i64> = coords
                .iter()
                .map(|c| {
                    debug_assert!(c.is_integer());
                    i64::try_from(c.to_integer()).expect("desk-scale coordinates")
                })
                .collect();
            projected.push(lattice);
        }
        // height · (d−1)-volume; the primitive normal makes the lattice
        // height exactly offset − normal·barycenter.
        let height = Rational::from(Int::from(facet.offset))
            - facet
                .normal
                .iter()
                .zip(barycenter.iter())
                .map(|(&a, x)| Rational::from(Int::from(a)) * x)
                .sum::<Rational>();
        total += height * lattice_volume(dim - 1, &projected);
    }
    total / Rational::from(Int::from(dim as i64))
}
