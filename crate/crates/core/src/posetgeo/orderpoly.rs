//! Order polytopes with their canonical unimodular triangulation, induced
//! affine action, and balanced rank coloring.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::poset::{Poset, PosetAction, PosetError};
use crate::complex::{ActedComplex, Coloring};
use crate::grpchar::perm::Permutation;
use crate::polytope::{AffineAction, AffineMap, GeoTriangulation, Halfspace, LatticePolytope};

/// An order polytope bundled with its canonical triangulation and the data
/// induced by a poset action: the coordinate-permutation affine action, the
/// ideal-permutation action on the triangulation's abstract complex, and the
/// balanced coloring by ideal cardinality.
#[derive(Clone, Debug)]
pub struct OrderPolytope {
    pub polytope: LatticePolytope,
    pub triangulation: GeoTriangulation,
    pub affine_action: AffineAction,
    pub acted_complex: ActedComplex,
    pub coloring: Coloring,
    /// The order ideals indexing the triangulation's vertices.
    pub ideals: Vec<Vec<usize>>,
}

/// Builds `{f : 0 ≤ f(x) ≤ f(y) ≤ 1 for x ≤ y}` with the triangulation whose
/// vertices are the indicators of ideal complements (`v_∅ = 1…1`, `v_X = 0`)
/// and whose maximal cells are the maximal chains of the ideal lattice.
pub fn order_polytope(poset: &Poset, action: &PosetAction) -> Result<OrderPolytope, PosetError> {
    let n = poset.n();
    let group = action.group().clone();

    let mut halfspaces = Vec::new();
    for x in poset.minimals() {
        let mut normal = vec![0i64; n];
        normal[x] = -1;
        halfspaces.push(Halfspace { normal, offset: 0 });
    }
    for (x, y) in poset.covers() {
        let mut normal = vec![0i64; n];
        normal[x] = 1;
        normal[y] = -1;
        halfspaces.push(Halfspace { normal, offset: 0 });
    }
    for x in poset.maximals() {
        let mut normal = vec![0i64; n];
        normal[x] = 1;
        halfspaces.push(Halfspace { normal, offset: 1 });
    }

    let (ideal_lattice, ideals) = poset.ideal_poset()?;
    // Vertex for ideal J: the indicator of its complement.
    let coords: Vec<Vec<i64>> = ideals
        .iter()
        .map(|ideal| {
            (0..n)
                .map(|x| if ideal.contains(&x) { 0 } else { 1 })
                .collect()
        })
        .collect();
    let polytope = LatticePolytope::new(n, coords.clone(), halfspaces)?;

    let complex = ideal_lattice.order_complex();
    let triangulation = GeoTriangulation::from_lattice(coords.clone(), complex.facets().to_vec())?;

    // Affine action: f ↦ f∘g⁻¹ is the permutation matrix with A[g(j)][j] = 1.
    let gen_maps: Vec<AffineMap> = group
        .generators()
        .iter()
        .map(|g| {
            let poset_perm = action
                .map(group.index_of(g).expect("generator is an element"))
                .clone();
            permutation_matrix(&poset_perm)
        })
        .collect();
    let affine_action = AffineAction::from_generators(group.clone(), &polytope, &gen_maps)?;

    // Induced action on ideals: J ↦ g(J).
    let ideal_index: BTreeMap<Vec<usize>, usize> = ideals
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.clone(), i))
        .collect();
    let mut ideal_perms = Vec::with_capacity(group.order());
    for e in 0..group.order() {
        let poset_perm = action.map(e);
        let images: Vec<usize> = ideals
            .iter()
            .map(|ideal| {
                let mut image: Vec<usize> = ideal.iter().map(|&x| poset_perm.apply(x)).collect();
                image.sort_unstable();
                ideal_index[&image]
            })
            .collect();
        ideal_perms.push(Permutation::new(images).expect("ideals are permuted"));
    }
    let acted_complex = ActedComplex::new(complex, group.clone(), ideal_perms.clone())?;

    // The two routes agree: permuting coordinates matches permuting ideals.
    for e in 0..group.order() {
        let map = affine_action.map(e);
        for (i, coord) in coords.iter().enumerate() {
            debug_assert_eq!(map.apply(coord), coords[ideal_perms[e].apply(i)]);
        }
    }

    // Balanced coloring by ideal cardinality.
    let coloring = Coloring::new(ideals.iter().map(|ideal| ideal.len()).collect(), n + 1)?;
    coloring.check_proper(acted_complex.complex())?;
    coloring.check_invariant(&acted_complex)?;

    Ok(OrderPolytope {
        polytope,
        triangulation,
        affine_action,
        acted_complex,
        coloring,
        ideals,
    })
}

/// The matrix of `x ↦ x∘g⁻¹`, i.e. `A[g(j)][j] = 1`.
pub(crate) fn permutation_matrix(perm: &Permutation) -> AffineMap {
    let n = perm.degree();
    let mut matrix = vec![vec![0i64; n]; n];
    for j in 0..n {
        matrix[perm.apply(j)][j] = 1;
    }
    AffineMap {
        matrix,
        translation: vec![0; n],
    }
}
