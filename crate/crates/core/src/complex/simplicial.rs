//! Abstract simplicial complexes given by their facets.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::grpchar::group::GroupError;
use crate::grpchar::cyclotomic::Int;
use crate::linalg;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComplexError {
    /// The void complex (no faces at all, not even the empty face).
    VoidComplex,
    VertexOutOfRange { vertex: usize, n_vertices: usize },
    RepeatedVertex { facet: Vec<usize> },
    Group(GroupError),
    ActionLength { expected: usize, found: usize },
    ActionDegree { expected: usize, found: usize },
    /// A generator fails to map the face set to itself.
    ActionDoesNotPreserve { generator: usize, facet: Vec<usize> },
    /// A setwise-fixed face that is not pointwise fixed.
    NotProper { element: usize, face: Vec<usize> },
    ColoringLength { expected: usize, found: usize },
    /// Two vertices of one face share a color.
    ColoringNotProper { face: Vec<usize> },
    /// A vertex changes color under some group element.
    ColoringNotInvariant { element: usize, vertex: usize },
    ColorOutOfRange { vertex: usize, color: usize, palette: usize },
    PaletteTooLarge { palette: usize },
    /// Reduced homology spread over several degrees.
    HomologyNotConcentrated { degrees: Vec<isize> },
}

impl fmt::Display for ComplexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexError::VoidComplex => write!(f, "the void complex is not accepted"),
            ComplexError::VertexOutOfRange { vertex, n_vertices } => {
                write!(f, "vertex {vertex} out of range for {n_vertices} vertices")
            }
            ComplexError::RepeatedVertex { facet } => {
                write!(f, "facet {facet:?} repeats a vertex")
            }
            ComplexError::Group(e) => write!(f, "{e}"),
            ComplexError::ActionLength { expected, found } => {
                write!(f, "action has {found} images, expected one per group element ({expected})")
            }
            ComplexError::ActionDegree { expected, found } => {
                write!(f, "action permutes {found} points, expected {expected}")
            }
            ComplexError::ActionDoesNotPreserve { generator, facet } => {
                write!(f, "generator {generator} maps facet {facet:?} outside the complex")
            }
            ComplexError::NotProper { element, face } => write!(
                f,
                "action is not proper: element {element} fixes face {face:?} setwise but not pointwise"
            ),
            ComplexError::ColoringLength { expected, found } => {
                write!(f, "coloring has {found} entries, expected {expected}")
            }
            ComplexError::ColoringNotProper { face } => {
                write!(f, "coloring repeats a color on face {face:?}")
            }
            ComplexError::ColoringNotInvariant { element, vertex } => {
                write!(f, "coloring is not invariant: element {element} recolors vertex {vertex}")
            }
            ComplexError::ColorOutOfRange { vertex, color, palette } => {
                write!(f, "vertex {vertex} has color {color} outside palette of size {palette}")
            }
            ComplexError::PaletteTooLarge { palette } => {
                write!(f, "palette of size {palette} exceeds the flag-vector limit")
            }
            ComplexError::HomologyNotConcentrated { degrees } => write!(
                f,
                "reduced homology is not concentrated in a single degree (nonzero in {degrees:?})"
            ),
        }
    }
}

impl From<GroupError> for ComplexError {
    fn from(e: GroupError) -> Self {
        ComplexError::Group(e)
    }
}

/// An abstract simplicial complex on `{0, …, n−1}`, stored by its facets with
/// the face set materialised as the downward closure (the empty face is always
/// present).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    facets: Vec<Vec<usize>>,
    faces: Vec<Vec<usize>>,
    face_index: BTreeMap<Vec<usize>, usize>,
}

impl SimplicialComplex {
    /// Builds the complex generated by `facets`; contained faces are dropped
    /// so the stored facet list is an antichain. The void complex (an empty
    /// facet list) is rejected.
    pub fn new(n_vertices: usize, facets: Vec<Vec<usize>>) -> Result<Self, ComplexError> {
        if facets.is_empty() {
            return Err(ComplexError::VoidComplex);
        }
        let mut normalized: Vec<Vec<usize>> = Vec::with_capacity(facets.len());
        for mut facet in facets {
            for &v in &facet {
                if v >= n_vertices {
                    return Err(ComplexError::VertexOutOfRange {
                        vertex: v,
                        n_vertices,
                    });
                }
            }
            facet.sort_unstable();
            if facet.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex { facet });
            }
            normalized.push(facet);
        }
        normalized.sort();
        normalized.dedup();
        let maximal: Vec<Vec<usize>> = normalized
            .iter()
            .filter(|f| {
                !normalized
                    .iter()
                    .any(|g| g.len() > f.len() && is_subset(f, g))
            })
            .cloned()
            .collect();

        let mut face_set: BTreeSet<Vec<usize>> = BTreeSet::new();
        for facet in &maximal {
            for mask in 0u64..(1 << facet.len()) {
                let face: Vec<usize> = facet
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                face_set.insert(face);
            }
        }
        let mut faces: Vec<Vec<usize>> = face_set.into_iter().collect();
        faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let face_index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Ok(SimplicialComplex {
            n_vertices,
            facets: maximal,
            faces,
            face_index,
        })
    }

    /// Complex consisting of the empty face only.
    pub fn empty_face_only(n_vertices: usize) -> Self {
        Self::new(n_vertices, vec![vec![]]).expect("the {∅} complex")
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn facets(&self) -> &[Vec<usize>] {
        &self.facets
    }

    /// All faces sorted by (size, lexicographic); index 0 is the empty face.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_index(&self, face: &[usize]) -> Option<usize> {
        self.face_index.get(face).copied()
    }

    /// `max |facet| − 1`; the `{∅}` complex has dimension −1.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(|f| f.len() as isize - 1).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets
            .iter()
            .all(|f| f.len() as isize == self.dim() + 1)
    }

    /// `f_{i−1}` counts at index `i` (so index 0 counts the empty face).
    pub fn f_vector(&self) -> Vec<usize> {
        let mut counts = vec![0usize; (self.dim() + 2).max(1) as usize];
        for face in &self.faces {
            counts[face.len()] += 1;
        }
        counts
    }

    /// The link of `face`: all faces disjoint from it whose union with it is
    /// a face.
    pub fn link(&self, face: &[usize]) -> SimplicialComplex {
        let mut sorted = face.to_vec();
        sorted.sort_unstable();
        let link_faces: Vec<Vec<usize>> = self
            .faces
            .iter()
            .filter(|g| {
                g.iter().all(|v| !sorted.contains(v)) && {
                    let mut union = sorted.clone();
                    union.extend(g.iter().copied());
                    union.sort_unstable();
                    self.face_index.contains_key(&union)
                }
            })
            .cloned()
            .collect();
        Self::from_faces(self.n_vertices, link_faces)
    }

    /// Builds a complex from an arbitrary set of faces (the maximal ones
    /// become facets). The set must contain at least the empty face.
    pub fn from_faces(n_vertices: usize, faces: Vec<Vec<usize>>) -> SimplicialComplex {
        let maximal: Vec<Vec<usize>> = faces
            .iter()
            .filter(|f| !faces.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        let facets = if maximal.is_empty() { vec![vec![]] } else { maximal };
        Self::new(n_vertices, facets).expect("faces of a valid complex")
    }

    /// Reduced rational Betti numbers in degrees `0..=dim`; empty when the
    /// complex is `{∅}`.
    pub fn betti_numbers(&self) -> Vec<usize> {
        let reduced = self.reduced_betti();
        (0..=self.dim().max(-1))
            .filter(|&i| i >= 0)
            .map(|i| reduced.get(&i).copied().unwrap_or(0))
            .collect()
    }

    /// Reduced Betti numbers including degree −1 (nonzero only for `{∅}`).
    pub fn reduced_betti(&self) -> BTreeMap<isize, usize> {
        let d = self.dim();
        // Faces grouped by dimension, −1..=d.
        let mut by_dim: BTreeMap<isize, Vec<&Vec<usize>>> = BTreeMap::new();
        for face in &self.faces {
            by_dim.entry(face.len() as isize - 1).or_default().push(face);
        }
        let mut index_in_dim: BTreeMap<&Vec<usize>, usize> = BTreeMap::new();
        for faces in by_dim.values() {
            for (i, face) in faces.iter().enumerate() {
                index_in_dim.insert(face, i);
            }
        }
        // rank ∂_i for i = 0..=d.
        let mut boundary_rank: BTreeMap<isize, usize> = BTreeMap::new();
        for i in 0..=d {
            let rows = by_dim.get(&i).map(|v| v.len()).unwrap_or(0);
            let cols = by_dim.get(&(i - 1)).map(|v| v.len()).unwrap_or(0);
            if rows == 0 || cols == 0 {
                boundary_rank.insert(i, 0);
                continue;
            }
            let faces_i = &by_dim[&i];
            let mut matrix: Vec<Vec<Int>> = vec![vec![Int::from(0); cols]; rows];
            for (r, face) in faces_i.iter().enumerate() {
                for (j, _) in face.iter().enumerate() {
                    let mut sub: Vec<usize> = (*face).clone();
                    sub.remove(j);
                    let c = index_in_dim[&sub];
                    matrix[r][c] = if j % 2 == 0 { Int::from(1) } else { Int::from(-1) };
                }
            }
            boundary_rank.insert(i, linalg::rank_int(matrix));
        }
        let mut betti = BTreeMap::new();
        for i in -1..=d {
            let f_i = by_dim.get(&i).map(|v| v.len()).unwrap_or(0);
            let rank_i = boundary_rank.get(&i).copied().unwrap_or(0);
            let rank_up = boundary_rank.get(&(i + 1)).copied().unwrap_or(0);
            let b = f_i - rank_i - rank_up;
            if b > 0 {
                betti.insert(i, b);
            }
        }
        betti
    }

    /// Reisner's criterion over the rationals: every link (including the link
    /// of the empty face) has reduced homology only in its top dimension.
    pub fn is_cohen_macaulay(&self) -> bool {
        for face in &self.faces {
            let link = self.link(face);
            let dim = link.dim();
            let reduced = link.reduced_betti();
            if reduced.keys().any(|&i| i < dim) {
                return false;
            }
        }
        true
    }
}

pub(crate) fn is_subset(a: &[usize], b: &[usize]) -> bool {
    // Both sorted.
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}
