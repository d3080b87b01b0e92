//! Simplicial complexes with a group action by vertex permutations.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::simplicial::{ComplexError, SimplicialComplex};
use crate::grpchar::classfn::ClassFunction;
use crate::grpchar::group::FiniteGroup;
use crate::grpchar::perm::Permutation;
use crate::grpchar::series::{expand_rational, EquivariantSeries, SeriesError};
use crate::linalg::binomial;

/// A vertex coloring of a complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    palette: usize,
}

impl Coloring {
    pub fn new(colors: Vec<usize>, palette: usize) -> Result<Self, ComplexError> {
        for (vertex, &color) in colors.iter().enumerate() {
            if color >= palette {
                return Err(ComplexError::ColorOutOfRange {
                    vertex,
                    color,
                    palette,
                });
            }
        }
        Ok(Coloring { colors, palette })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, vertex: usize) -> usize {
        self.colors[vertex]
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// No face may repeat a color.
    pub fn check_proper(&self, complex: &SimplicialComplex) -> Result<(), ComplexError> {
        if self.colors.len() != complex.n_vertices() {
            return Err(ComplexError::ColoringLength {
                expected: complex.n_vertices(),
                found: self.colors.len(),
            });
        }
        for face in complex.faces() {
            let mut seen = BTreeSet::new();
            for &v in face {
                if !seen.insert(self.colors[v]) {
                    return Err(ComplexError::ColoringNotProper { face: face.clone() });
                }
            }
        }
        Ok(())
    }

    /// `γ(gv) = γ(v)` for every group element.
    pub fn check_invariant(&self, acted: &ActedComplex) -> Result<(), ComplexError> {
        for (e, perm) in acted.action.iter().enumerate() {
            for v in 0..self.colors.len() {
                if self.colors[perm.apply(v)] != self.colors[v] {
                    return Err(ComplexError::ColoringNotInvariant { element: e, vertex: v });
                }
            }
        }
        Ok(())
    }

    /// The color set of a face, as a sorted list.
    pub fn color_set(&self, face: &[usize]) -> Vec<usize> {
        let mut set: Vec<usize> = face.iter().map(|&v| self.colors[v]).collect();
        set.sort_unstable();
        set.dedup();
        set
    }
}

/// The quotient multigraph of the 1-skeleton by the vertex orbits.
#[derive(Clone, Debug)]
pub struct QuotientGraph {
    /// Vertex orbits listed by their least member, each sorted.
    pub orbits: Vec<Vec<usize>>,
    /// Orbit index of each vertex.
    pub orbit_of: Vec<usize>,
    /// Edges between distinct orbits.
    pub edges: BTreeSet<(usize, usize)>,
    /// Orbits carrying a loop: two distinct vertices in one orbit span an edge.
    pub loops: BTreeSet<usize>,
}

impl QuotientGraph {
    pub fn is_loopless(&self) -> bool {
        self.loops.is_empty()
    }
}

/// Equivariant f- and h-characters of an acted complex.
#[derive(Clone, Debug)]
pub struct FaceCharacters {
    /// `𝔣_{i−1}` at index `i`, for `i = 0..=d+1`.
    pub f: Vec<ClassFunction>,
    /// Per face orbit: the orbit's least face and its permutation character.
    pub orbit_f: Vec<(Vec<usize>, ClassFunction)>,
    /// `𝔥_k` at index `k`, for `k = 0..=d+1`.
    pub h: Vec<ClassFunction>,
}

/// Equivariant flag f- and h-characters, keyed by sorted color sets.
#[derive(Clone, Debug)]
pub struct FlagCharacters {
    pub f_s: BTreeMap<Vec<usize>, ClassFunction>,
    pub h_s: BTreeMap<Vec<usize>, ClassFunction>,
}

/// An abstract simplicial complex paired with a group acting by vertex
/// permutations that preserve the face set.
#[derive(Clone, Debug)]
pub struct ActedComplex {
    complex: SimplicialComplex,
    group: Arc<FiniteGroup>,
    /// One vertex permutation per group element, in element order.
    action: Vec<Permutation>,
}

impl ActedComplex {
    pub fn new(
        complex: SimplicialComplex,
        group: Arc<FiniteGroup>,
        action: Vec<Permutation>,
    ) -> Result<Self, ComplexError> {
        if action.len() != group.order() {
            return Err(ComplexError::ActionLength {
                expected: group.order(),
                found: action.len(),
            });
        }
        for perm in &action {
            if perm.degree() != complex.n_vertices() {
                return Err(ComplexError::ActionDegree {
                    expected: complex.n_vertices(),
                    found: perm.degree(),
                });
            }
        }
        // Generators must map facets into the face set; the rest follows by
        // composition.
        for (gi, gen_elem) in group.generator_indices().into_iter().enumerate() {
            let perm = &action[gen_elem];
            for facet in complex.facets() {
                let mut image: Vec<usize> = facet.iter().map(|&v| perm.apply(v)).collect();
                image.sort_unstable();
                if complex.face_index(&image).is_none() {
                    return Err(ComplexError::ActionDoesNotPreserve {
                        generator: gi,
                        facet: facet.clone(),
                    });
                }
            }
        }
        Ok(ActedComplex {
            complex,
            group,
            action,
        })
    }

    /// Extends generator images to the whole group (checking the homomorphism
    /// property) and attaches them to the complex.
    pub fn from_generator_images(
        complex: SimplicialComplex,
        group: Arc<FiniteGroup>,
        gen_images: &[Permutation],
    ) -> Result<Self, ComplexError> {
        let action = group.extend_permutation_action(complex.n_vertices(), gen_images)?;
        Self::new(complex, group, action)
    }

    /// The natural action of a permutation group on a complex over the same
    /// points.
    pub fn from_vertex_group(
        complex: SimplicialComplex,
        group: Arc<FiniteGroup>,
    ) -> Result<Self, ComplexError> {
        let action = group.elements().to_vec();
        Self::new(complex, group, action)
    }

    pub fn with_trivial_action(complex: SimplicialComplex) -> Self {
        let group = FiniteGroup::trivial(1);
        let action = vec![Permutation::identity(complex.n_vertices())];
        Self::new(complex, group, action).expect("trivial action")
    }

    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn action(&self) -> &[Permutation] {
        &self.action
    }

    /// Image of a face (by index) under a group element.
    pub fn face_image(&self, face_idx: usize, element: usize) -> usize {
        let perm = &self.action[element];
        let mut image: Vec<usize> = self.complex.faces()[face_idx]
            .iter()
            .map(|&v| perm.apply(v))
            .collect();
        image.sort_unstable();
        self.complex
            .face_index(&image)
            .expect("group elements preserve the face set")
    }

    /// All faces fixed setwise by a group element (the empty face always is).
    pub fn fixed_faces(&self, element: usize) -> Vec<usize> {
        (0..self.complex.faces().len())
            .filter(|&i| self.face_image(i, element) == i)
            .collect()
    }

    /// First `(element, face)` pair where a setwise-fixed face moves a vertex.
    pub fn properness_violation(&self) -> Option<(usize, Vec<usize>)> {
        for e in 1..self.group.order() {
            let perm = &self.action[e];
            for &fi in &self.fixed_faces(e) {
                let face = &self.complex.faces()[fi];
                if face.iter().any(|&v| perm.apply(v) != v) {
                    return Some((e, face.clone()));
                }
            }
        }
        None
    }

    /// Every setwise-fixed face is pointwise fixed.
    pub fn is_proper(&self) -> bool {
        self.properness_violation().is_none()
    }

    /// The quotient of the 1-skeleton by the vertex orbits; the action is
    /// translative exactly when this graph is loopless.
    pub fn quotient_graph(&self) -> QuotientGraph {
        let n = self.complex.n_vertices();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        for start in 0..n {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let idx = orbits.len();
            let mut members = vec![start];
            orbit_of[start] = idx;
            let mut queue = vec![start];
            while let Some(v) = queue.pop() {
                for perm in &self.action {
                    let w = perm.apply(v);
                    if orbit_of[w] == usize::MAX {
                        orbit_of[w] = idx;
                        members.push(w);
                        queue.push(w);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        let mut edges = BTreeSet::new();
        let mut loops = BTreeSet::new();
        for face in self.complex.faces() {
            if face.len() != 2 {
                continue;
            }
            let (a, b) = (orbit_of[face[0]], orbit_of[face[1]]);
            if a == b {
                loops.insert(a);
            } else {
                edges.insert((a.min(b), a.max(b)));
            }
        }
        QuotientGraph {
            orbits,
            orbit_of,
            edges,
            loops,
        }
    }

    pub fn is_translative(&self) -> bool {
        self.quotient_graph().is_loopless()
    }

    /// A proper invariant coloring with at most `k` colors, by exact
    /// backtracking on the quotient graph; `None` when no such coloring
    /// exists (in particular whenever the quotient has a loop).
    pub fn invariant_coloring(&self, k: usize) -> Option<Coloring> {
        let quotient = self.quotient_graph();
        if !quotient.is_loopless() {
            return None;
        }
        let m = quotient.orbits.len();
        let mut adjacency = vec![BTreeSet::new(); m];
        for &(a, b) in &quotient.edges {
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        let mut colors = vec![usize::MAX; m];
        if !color_backtrack(0, m, k, &adjacency, &mut colors) {
            return None;
        }
        let palette = colors.iter().max().map(|&c| c + 1).unwrap_or(0).max(1);
        let vertex_colors: Vec<usize> = (0..self.complex.n_vertices())
            .map(|v| colors[quotient.orbit_of[v]])
            .collect();
        Some(Coloring::new(vertex_colors, palette).expect("colors in palette"))
    }

    /// Equivariant f-vector, orbitwise f-characters, and h-vector.
    pub fn equivariant_f_h(&self) -> FaceCharacters {
        let dp1 = (self.complex.dim() + 1).max(0) as usize;
        let faces = self.complex.faces();
        let class_reps: Vec<usize> = self
            .group
            .classes()
            .iter()
            .map(|c| c.representative)
            .collect();

        let mut f = Vec::with_capacity(dp1 + 1);
        for size in 0..=dp1 {
            let values: Vec<i64> = class_reps
                .iter()
                .map(|&rep| {
                    (0..faces.len())
                        .filter(|&fi| faces[fi].len() == size && self.face_image(fi, rep) == fi)
                        .count() as i64
                })
                .collect();
            f.push(ClassFunction::from_ints(self.group.clone(), &values));
        }

        // Face orbits, each keyed by its least face.
        let mut orbit_of_face = vec![usize::MAX; faces.len()];
        let mut orbit_members: Vec<Vec<usize>> = Vec::new();
        for start in 0..faces.len() {
            if orbit_of_face[start] != usize::MAX {
                continue;
            }
            let idx = orbit_members.len();
            let mut members = vec![start];
            orbit_of_face[start] = idx;
            let mut queue = vec![start];
            while let Some(fi) = queue.pop() {
                for e in 0..self.group.order() {
                    let gi = self.face_image(fi, e);
                    if orbit_of_face[gi] == usize::MAX {
                        orbit_of_face[gi] = idx;
                        members.push(gi);
                        queue.push(gi);
                    }
                }
            }
            members.sort_unstable();
            orbit_members.push(members);
        }
        let orbit_f: Vec<(Vec<usize>, ClassFunction)> = orbit_members
            .iter()
            .map(|members| {
                let values: Vec<i64> = class_reps
                    .iter()
                    .map(|&rep| {
                        members
                            .iter()
                            .filter(|&&fi| self.face_image(fi, rep) == fi)
                            .count() as i64
                    })
                    .collect();
                (
                    faces[members[0]].clone(),
                    ClassFunction::from_ints(self.group.clone(), &values),
                )
            })
            .collect();

        // 𝔥_k = Σ_i (−1)^{k−i} C(d+1−i, k−i) 𝔣_{i−1}
        let mut h = Vec::with_capacity(dp1 + 1);
        for k in 0..=dp1 {
            let mut acc = ClassFunction::zero(self.group.clone());
            for i in 0..=k {
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                let coeff = sign * binomial(dp1 - i, k - i);
                acc = acc.add(&f[i].scale_int(coeff));
            }
            h.push(acc);
        }
        FaceCharacters { f, orbit_f, h }
    }

    /// The subcomplex of faces colored entirely within `colors`, with the
    /// same group acting.
    pub fn restrict_to_colors(
        &self,
        coloring: &Coloring,
        colors: &BTreeSet<usize>,
    ) -> Result<ActedComplex, ComplexError> {
        coloring.check_proper(&self.complex)?;
        coloring.check_invariant(self)?;
        let faces: Vec<Vec<usize>> = self
            .complex
            .faces()
            .iter()
            .filter(|face| face.iter().all(|&v| colors.contains(&coloring.color(v))))
            .cloned()
            .collect();
        let restricted = SimplicialComplex::from_faces(self.complex.n_vertices(), faces);
        ActedComplex::new(restricted, self.group.clone(), self.action.clone())
    }

    /// Flag f- and h-characters over all subsets of the palette.
    pub fn flag_f_h(&self, coloring: &Coloring) -> Result<FlagCharacters, ComplexError> {
        coloring.check_proper(&self.complex)?;
        coloring.check_invariant(self)?;
        let palette = coloring.palette();
        if palette > 20 {
            return Err(ComplexError::PaletteTooLarge { palette });
        }
        let faces = self.complex.faces();
        let class_reps: Vec<usize> = self
            .group
            .classes()
            .iter()
            .map(|c| c.representative)
            .collect();

        // 𝔣_S: fixed faces with color set exactly S.
        let mut f_s: BTreeMap<Vec<usize>, ClassFunction> = BTreeMap::new();
        for mask in 0u32..(1 << palette) {
            let set: Vec<usize> = (0..palette).filter(|&c| mask >> c & 1 == 1).collect();
            let values: Vec<i64> = class_reps
                .iter()
                .map(|&rep| {
                    (0..faces.len())
                        .filter(|&fi| {
                            coloring.color_set(&faces[fi]) == set
                                && self.face_image(fi, rep) == fi
                        })
                        .count() as i64
                })
                .collect();
            f_s.insert(set, ClassFunction::from_ints(self.group.clone(), &values));
        }

        // 𝔥_S = Σ_{T⊆S} (−1)^{|S|−|T|} 𝔣_T
        let mut h_s = BTreeMap::new();
        for mask in 0u32..(1 << palette) {
            let set: Vec<usize> = (0..palette).filter(|&c| mask >> c & 1 == 1).collect();
            let mut acc = ClassFunction::zero(self.group.clone());
            let mut sub = mask;
            loop {
                let subset: Vec<usize> = (0..palette).filter(|&c| sub >> c & 1 == 1).collect();
                let sign = if (set.len() - subset.len()) % 2 == 0 { 1 } else { -1 };
                acc = acc.add(&f_s[&subset].scale_int(sign));
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & mask;
            }
            h_s.insert(set, acc);
        }
        Ok(FlagCharacters { f_s, h_s })
    }

    /// Equivariant Hilbert series of the face ring, degree by degree: the
    /// coefficient of `t^i` is the permutation character on the degree-`i`
    /// monomials whose support is a face. Valid for arbitrary actions.
    pub fn hilbert_series_direct(&self, n: usize) -> EquivariantSeries {
        let faces = self.complex.faces();
        let class_reps: Vec<usize> = self
            .group
            .classes()
            .iter()
            .map(|c| c.representative)
            .collect();
        let mut coeffs = Vec::with_capacity(n + 1);
        coeffs.push(ClassFunction::trivial(self.group.clone()));
        for degree in 1..=n {
            let values: Vec<i64> = class_reps
                .iter()
                .map(|&rep| {
                    let perm = &self.action[rep];
                    let mut count = 0i64;
                    for (fi, face) in faces.iter().enumerate() {
                        if face.is_empty() || face.len() > degree {
                            continue;
                        }
                        if self.face_image(fi, rep) != fi {
                            continue;
                        }
                        // Exponent vectors with full support on this face,
                        // invariant under the permutation of its vertices.
                        let positions: Vec<usize> = face
                            .iter()
                            .map(|&v| {
                                face.binary_search(&perm.apply(v))
                                    .expect("fixed face is stable")
                            })
                            .collect();
                        for_each_composition(degree, face.len(), &mut |alpha| {
                            if positions.iter().enumerate().all(|(i, &p)| alpha[p] == alpha[i]) {
                                count += 1;
                            }
                        });
                    }
                    count
                })
                .collect();
            coeffs.push(ClassFunction::from_ints(self.group.clone(), &values));
        }
        EquivariantSeries::from_coeffs(self.group.clone(), coeffs)
    }

    /// Closed-form equivariant Hilbert series `Σ 𝔥_k t^k / (1−t)^{d+1}`,
    /// valid only for proper actions; non-proper actions are rejected with a
    /// witnessing `(element, face)` pair.
    pub fn hilbert_series_formula(&self, n: usize) -> Result<EquivariantSeries, ComplexError> {
        if let Some((element, face)) = self.properness_violation() {
            return Err(ComplexError::NotProper { element, face });
        }
        let fh = self.equivariant_f_h();
        let denom_exp = fh.h.len() - 1;
        self.expand_numerator(fh.h, denom_exp, n)
    }

    /// Flag refinement `Σ_S 𝔥_S t^{|S|} / (1−t)^{|Γ|}` for a proper invariant
    /// coloring.
    pub fn hilbert_series_formula_colored(
        &self,
        coloring: &Coloring,
        n: usize,
    ) -> Result<EquivariantSeries, ComplexError> {
        if let Some((element, face)) = self.properness_violation() {
            return Err(ComplexError::NotProper { element, face });
        }
        let flags = self.flag_f_h(coloring)?;
        let palette = coloring.palette();
        let mut numerator = vec![ClassFunction::zero(self.group.clone()); palette + 1];
        for (set, h) in &flags.h_s {
            numerator[set.len()] = numerator[set.len()].add(h);
        }
        self.expand_numerator(numerator, palette, n)
    }

    fn expand_numerator(
        &self,
        numerator: Vec<ClassFunction>,
        denom_exp: usize,
        n: usize,
    ) -> Result<EquivariantSeries, ComplexError> {
        let denom: Vec<(ClassFunction, usize)> = (0..denom_exp)
            .map(|_| (ClassFunction::trivial(self.group.clone()), 1))
            .collect();
        let series = expand_rational(&numerator, &denom, n).map_err(series_bug)?;
        series
            .with_rational_form(numerator, denom_exp)
            .map_err(series_bug)
    }

    /// Alternating sum over fixed faces, `Σ_{i≥−1} (−1)^i · #{fixed i-faces}`,
    /// as a class function (the Lefschetz number of each element).
    pub fn lefschetz_character(&self) -> ClassFunction {
        let values: Vec<i64> = self
            .group
            .classes()
            .iter()
            .map(|class| {
                self.fixed_faces(class.representative)
                    .iter()
                    .map(|&fi| {
                        let dim = self.complex.faces()[fi].len() as i64 - 1;
                        if dim.rem_euclid(2) == 0 {
                            1
                        } else {
                            -1
                        }
                    })
                    .sum()
            })
            .collect();
        ClassFunction::from_ints(self.group.clone(), &values)
    }

    /// Hopf-trace character `𝔟_S` of a color-selected subcomplex: the
    /// alternating sum over its fixed faces, which by the Hopf trace identity
    /// equals the alternating sum of homology characters. It is only reported
    /// when the reduced homology of the subcomplex is concentrated in a single
    /// degree `k` (or vanishes entirely), where it carries full information:
    /// it then equals `(−1)^k` times the character on reduced homology, and
    /// `𝔥_S = (−1)^{|S|−1}·𝔟_S`. Errors when the homology is spread over
    /// several degrees.
    pub fn hopf_trace_character(
        &self,
        coloring: &Coloring,
        colors: &BTreeSet<usize>,
    ) -> Result<ClassFunction, ComplexError> {
        let restricted = self.restrict_to_colors(coloring, colors)?;
        let reduced = restricted.complex.reduced_betti();
        let degrees: Vec<isize> = reduced.keys().copied().collect();
        if degrees.len() > 1 {
            return Err(ComplexError::HomologyNotConcentrated { degrees });
        }
        Ok(restricted.lefschetz_character())
    }
}

fn series_bug(e: SeriesError) -> ComplexError {
    // The numerator and denominator are built over one group, so series
    // errors here indicate a bug rather than bad input.
    panic!("internal series construction failed: {e}");
}

fn color_backtrack(
    orbit: usize,
    m: usize,
    k: usize,
    adjacency: &[BTreeSet<usize>],
    colors: &mut Vec<usize>,
) -> bool {
    if orbit == m {
        return true;
    }
    for color in 0..k {
        if adjacency[orbit]
            .iter()
            .all(|&nb| colors[nb] == usize::MAX || colors[nb] != color)
        {
            colors[orbit] = color;
            if color_backtrack(orbit + 1, m, k, adjacency, colors) {
                return true;
            }
            colors[orbit] = usize::MAX;
        }
    }
    false
}

/// Calls `f` for every composition of `total` into `parts` positive parts.
pub(crate) fn for_each_composition(total: usize, parts: usize, f: &mut impl FnMut(&[usize])) {
    if parts == 0 {
        return;
    }
    let mut alpha = vec![1usize; parts];
    fn rec(pos: usize, remaining: usize, alpha: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if pos == alpha.len() - 1 {
            alpha[pos] = remaining;
            f(alpha);
            return;
        }
        let tail = alpha.len() - 1 - pos;
        for value in 1..=remaining - tail {
            alpha[pos] = value;
            rec(pos + 1, remaining - value, alpha, f);
        }
    }
    if total < parts {
        return;
    }
    rec(0, total - 0, &mut alpha, f);
}
