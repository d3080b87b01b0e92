//! Lipschitz polytopes of posets and triangulation of alcoved polytopes by
//! brute-force alcove enumeration.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::orderpoly::permutation_matrix;
use super::poset::{Poset, PosetError};
use crate::grpchar::group::FiniteGroup;
use crate::grpchar::perm::Permutation;
use crate::linalg;
use crate::polytope::{AffineAction, AffineMap, GeoTriangulation, Halfspace, LatticePolytope, PolytopeError};

/// `Lip(X) = {f : 0 ≤ f(x) ≤ 1 on minima, 0 ≤ f(y) − f(x) ≤ 1 on covers}`,
/// with vertices found by brute-force enumeration from the H-representation.
pub fn lipschitz_polytope(poset: &Poset) -> Result<LatticePolytope, PosetError> {
    let n = poset.n();
    let mut halfspaces = Vec::new();
    for x in poset.minimals() {
        let mut low = vec![0i64; n];
        low[x] = -1;
        halfspaces.push(Halfspace { normal: low, offset: 0 });
        let mut high = vec![0i64; n];
        high[x] = 1;
        halfspaces.push(Halfspace { normal: high, offset: 1 });
    }
    for (x, y) in poset.covers() {
        let mut low = vec![0i64; n];
        low[x] = 1;
        low[y] = -1;
        halfspaces.push(Halfspace { normal: low, offset: 0 });
        let mut high = vec![0i64; n];
        high[x] = -1;
        high[y] = 1;
        halfspaces.push(Halfspace { normal: high, offset: 1 });
    }
    Ok(LatticePolytope::from_halfspaces(n, halfspaces)?)
}

/// Triangulates an alcoved polytope (every facet normal `±e_i` or
/// `e_i − e_j`) by enumerating the alcoves `q + conv{v_{S_0}, …, v_{S_d}}`,
/// `S_j = {σ(1), …, σ(j)}`, over integer translates `q` in the vertex
/// bounding box and permutations `σ`, keeping the cells whose vertices all
/// lie in the polytope.
pub fn alcove_triangulation(polytope: &LatticePolytope) -> Result<GeoTriangulation, PolytopeError> {
    let dim = polytope.dim();
    for (hi, halfspace) in polytope.halfspaces().iter().enumerate() {
        if !is_alcoved_normal(&halfspace.normal) {
            return Err(PolytopeError::NotAlcoved { halfspace: hi });
        }
    }
    let mut lo = vec![i64::MAX; dim];
    let mut hi = vec![i64::MIN; dim];
    for v in polytope.vertices() {
        for i in 0..dim {
            lo[i] = lo[i].min(v[i]);
            hi[i] = hi[i].max(v[i]);
        }
    }
    let mut cells: BTreeSet<Vec<Vec<i64>>> = BTreeSet::new();
    let mut q = lo.clone();
    'scan: loop {
        if polytope.contains_lattice_point(&q, 1) {
            let mut chain = vec![q.clone()];
            extend_alcove(polytope, &mut chain, &mut vec![false; dim], &mut cells);
        }
        let mut pos = dim;
        loop {
            if pos == 0 {
                break 'scan;
            }
            pos -= 1;
            if q[pos] < hi[pos] {
                q[pos] += 1;
                for p in pos + 1..dim {
                    q[p] = lo[p];
                }
                break;
            }
        }
    }

    let mut vertex_set: BTreeSet<Vec<i64>> = BTreeSet::new();
    for cell in &cells {
        for v in cell {
            vertex_set.insert(v.clone());
        }
    }
    let coords: Vec<Vec<i64>> = vertex_set.into_iter().collect();
    let index: alloc::collections::BTreeMap<&Vec<i64>, usize> =
        coords.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let facets: Vec<Vec<usize>> = cells
        .iter()
        .map(|cell| cell.iter().map(|v| index[v]).collect())
        .collect();
    GeoTriangulation::from_lattice(coords, facets)
}

fn extend_alcove(
    polytope: &LatticePolytope,
    chain: &mut Vec<Vec<i64>>,
    used: &mut Vec<bool>,
    cells: &mut BTreeSet<Vec<Vec<i64>>>,
) {
    let dim = used.len();
    if chain.len() == dim + 1 {
        let mut cell = chain.clone();
        cell.sort();
        cells.insert(cell);
        return;
    }
    let last = chain.last().expect("chain starts at the translate").clone();
    for axis in 0..dim {
        if used[axis] {
            continue;
        }
        let mut next = last.clone();
        next[axis] += 1;
        if !polytope.contains_lattice_point(&next, 1) {
            continue;
        }
        used[axis] = true;
        chain.push(next);
        extend_alcove(polytope, chain, used, cells);
        chain.pop();
        used[axis] = false;
    }
}

fn is_alcoved_normal(normal: &[i64]) -> bool {
    let scale = linalg::gcd_slice(normal);
    if scale == 0 {
        return false;
    }
    let primitive: Vec<i64> = normal.iter().map(|&x| x / scale).collect();
    let positives = primitive.iter().filter(|&&x| x == 1).count();
    let negatives = primitive.iter().filter(|&&x| x == -1).count();
    let zeros = primitive.iter().filter(|&&x| x == 0).count();
    positives + negatives + zeros == primitive.len()
        && ((positives == 1 && negatives <= 1) || (positives == 0 && negatives == 1))
}

/// The action of coordinate permutations (`f ↦ f∘g⁻¹`, permutation matrices
/// with zero translation) on a polytope they preserve.
pub fn coordinate_permutation_action(
    polytope: &LatticePolytope,
    group: Arc<FiniteGroup>,
    gen_perms: &[Permutation],
) -> Result<AffineAction, PolytopeError> {
    let gen_maps: Vec<AffineMap> = gen_perms.iter().map(permutation_matrix).collect();
    AffineAction::from_generators(group, polytope, &gen_maps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::cyclotomic::Int;
    use crate::posetgeo::poset::PosetAction;

    fn cube(dim: usize) -> LatticePolytope {
        let vertices: Vec<Vec<i64>> = (0..1u64 << dim)
            .map(|mask| (0..dim).map(|i| (mask >> i & 1) as i64).collect())
            .collect();
        LatticePolytope::from_vertices(dim, vertices).unwrap()
    }

    #[test]
    fn cube_alcove_counts() {
        let square = cube(2);
        let triangulation = alcove_triangulation(&square).unwrap();
        assert_eq!(triangulation.complex().facets().len(), 2);
        let report = triangulation.check(&square, None);
        assert!(report.passed(), "{report}");

        let c3 = cube(3);
        let triangulation = alcove_triangulation(&c3).unwrap();
        assert_eq!(triangulation.complex().facets().len(), 6);
        assert!(triangulation.check(&c3, None).passed());
    }

    #[test]
    fn lipschitz_of_chain_two_is_a_parallelogram() {
        let p = lipschitz_polytope(&Poset::chain(2)).unwrap();
        assert_eq!(
            p.vertices(),
            &[vec![0, 0], vec![0, 1], vec![1, 1], vec![1, 2]]
        );
        let triangulation = alcove_triangulation(&p).unwrap();
        assert_eq!(triangulation.complex().facets().len(), 2);
    }

    #[test]
    fn lipschitz_of_antichain_is_the_cube() {
        let p = lipschitz_polytope(&Poset::antichain(3)).unwrap();
        assert_eq!(p.vertices().len(), 8);
        assert_eq!(p.normalized_volume(), Int::from(6));
    }

    #[test]
    fn lipschitz_t2_has_four_alcoves() {
        let t2 = Poset::bowtie_t(2);
        let p = lipschitz_polytope(&t2).unwrap();
        let triangulation = alcove_triangulation(&p).unwrap();
        assert_eq!(triangulation.complex().facets().len(), 4);
        let report = triangulation.check(&p, None);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn coordinate_actions_on_lipschitz_t2() {
        let t2 = Poset::bowtie_t(2);
        let p = lipschitz_polytope(&t2).unwrap();
        let swap = Permutation::new(vec![1, 0, 2]).unwrap();
        let action = PosetAction::from_generators(&t2, &[swap]).unwrap();
        let affine =
            coordinate_permutation_action(&p, action.group().clone(), action.group().generators())
                .unwrap();
        let triangulation = alcove_triangulation(&p).unwrap();
        let report = triangulation.check(&p, Some(&affine));
        assert!(report.passed(), "{report}");
        // A balanced (d+1)-coloring of the alcove triangulation exists.
        let induced = triangulation.induced_vertex_action(&affine).unwrap();
        let acted = crate::complex::ActedComplex::new(
            triangulation.complex().clone(),
            affine.group().clone(),
            induced,
        )
        .unwrap();
        let coloring = acted.invariant_coloring(p.dim() + 1).unwrap();
        assert!(coloring.palette() <= p.dim() + 1);
    }

    #[test]
    fn cube_with_full_symmetric_action_has_balanced_coloring() {
        let c3 = cube(3);
        let group = crate::grpchar::FiniteGroup::symmetric(3).unwrap();
        let affine =
            coordinate_permutation_action(&c3, group.clone(), group.generators()).unwrap();
        let triangulation = alcove_triangulation(&c3).unwrap();
        assert!(triangulation.check(&c3, Some(&affine)).passed());
        let induced = triangulation.induced_vertex_action(&affine).unwrap();
        let acted = crate::complex::ActedComplex::new(
            triangulation.complex().clone(),
            affine.group().clone(),
            induced,
        )
        .unwrap();
        let coloring = acted.invariant_coloring(4).unwrap();
        coloring.check_proper(acted.complex()).unwrap();
        coloring.check_invariant(&acted).unwrap();
    }

    #[test]
    fn non_alcoved_polytopes_are_rejected() {
        // x + y ≤ 2 is not an alcoved facet normal.
        let triangle =
            LatticePolytope::from_vertices(2, vec![vec![0, 0], vec![2, 0], vec![0, 2]]).unwrap();
        assert!(matches!(
            alcove_triangulation(&triangle),
            Err(PolytopeError::NotAlcoved { .. })
        ));
    }
}
