//! Built-in example constructions, each bundling the objects its report
//! needs. Golden comparisons live beside the constructions so the `example`
//! subcommand is self-checking.

use equiseries_core::complex::{ActedComplex, SimplicialComplex};
use equiseries_core::grpchar::series::expand_rational;
use equiseries_core::grpchar::symchar::syt_descent_polynomial;
use equiseries_core::grpchar::{ClassFunction, EquivariantSeries, FiniteGroup, Permutation};
use equiseries_core::polytope::{AffineAction, GeoTriangulation, LatticePolytope};
use equiseries_core::posetgeo::{
    alcove_triangulation, coordinate_permutation_action, lipschitz_polytope, order_polytope,
    OrderPolytope, Poset, PosetAction,
};

/// The 6-cycle with the antipodal involution.
pub fn hexagon() -> ActedComplex {
    let facets = (0..6).map(|i| vec![i, (i + 1) % 6]).collect();
    let complex = SimplicialComplex::new(6, facets).unwrap();
    let group = FiniteGroup::generate_default(6, &[Permutation::new(vec![3, 4, 5, 0, 1, 2]).unwrap()])
        .unwrap();
    ActedComplex::from_vertex_group(complex, group).unwrap()
}

/// Two disjoint points swapped by an involution (the face ring is the
/// coordinate ring of the union of the axes).
pub fn two_points_swap() -> ActedComplex {
    let complex = SimplicialComplex::new(2, vec![vec![0], vec![1]]).unwrap();
    let group =
        FiniteGroup::generate_default(2, &[Permutation::transposition(2, 0, 1)]).unwrap();
    ActedComplex::from_vertex_group(complex, group).unwrap()
}

/// A single edge whose endpoints are swapped: the standard non-proper action.
pub fn single_edge_swap() -> ActedComplex {
    let complex = SimplicialComplex::new(2, vec![vec![0, 1]]).unwrap();
    let group =
        FiniteGroup::generate_default(2, &[Permutation::transposition(2, 0, 1)]).unwrap();
    ActedComplex::from_vertex_group(complex, group).unwrap()
}

/// All automorphisms of a small poset, found by brute force.
pub fn automorphism_action(poset: &Poset) -> PosetAction {
    let n = poset.n();
    let mut autos = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    permute_filter(poset, &mut images, 0, &mut autos);
    PosetAction::from_generators(poset, &autos).expect("automorphisms act on the poset")
}

fn permute_filter(poset: &Poset, images: &mut Vec<usize>, at: usize, out: &mut Vec<Permutation>) {
    let n = images.len();
    if at == n {
        let perm = Permutation::new(images.clone()).unwrap();
        if poset.is_automorphism(&perm) {
            out.push(perm);
        }
        return;
    }
    for i in at..n {
        images.swap(at, i);
        permute_filter(poset, images, at + 1, out);
        images.swap(at, i);
    }
}

/// The unit square as the order polytope of a 2-antichain with the swap.
pub fn unit_square_swap() -> OrderPolytope {
    let poset = Poset::antichain(2);
    let action = automorphism_action(&poset);
    order_polytope(&poset, &action).unwrap()
}

/// `O(radio_tower(k))` with its `(Z_2)^k` level-swap action.
pub fn radio_tower(k: usize) -> OrderPolytope {
    let poset = Poset::radio_tower(k);
    let action = automorphism_action(&poset);
    order_polytope(&poset, &action).unwrap()
}

/// `sgn_j`: the character of the level-`j` swap factor of `(Z_2)^k` acting on
/// a radio tower (`j` is 1-based); `−1` exactly on the elements moving `a_j`.
pub fn radio_tower_sgn(data: &OrderPolytope, j: usize) -> ClassFunction {
    let group = data.affine_action.group().clone();
    let a_j = 2 * (j - 1);
    let values: Vec<i64> = group
        .classes()
        .iter()
        .map(|class| {
            // The poset action equals the natural action of the group
            // elements (the group was generated on the poset's points).
            if group.elements()[class.representative].apply(a_j) == a_j {
                1
            } else {
                -1
            }
        })
        .collect();
    ClassFunction::from_ints(group, &values)
}

/// `Π_{j=1}^k (1 + sgn_j·t) / (1−t)^{2k+1}` expanded to degree `n`.
pub fn radio_tower_closed_form(data: &OrderPolytope, k: usize, n: usize) -> EquivariantSeries {
    let group = data.affine_action.group().clone();
    let triv = ClassFunction::trivial(group.clone());
    let mut numerator = vec![triv.clone()];
    for j in 1..=k {
        numerator = poly_mul(&numerator, &[triv.clone(), radio_tower_sgn(data, j)]);
    }
    let denominator: Vec<(ClassFunction, usize)> =
        (0..2 * k + 1).map(|_| (triv.clone(), 1)).collect();
    expand_rational(&numerator, &denominator, n).expect("closed form expands")
}

/// Product of polynomials of class functions.
pub fn poly_mul(a: &[ClassFunction], b: &[ClassFunction]) -> Vec<ClassFunction> {
    let group = a[0].group().clone();
    let mut out = vec![ClassFunction::zero(group); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        for (j, cb) in b.iter().enumerate() {
            out[i + j] = out[i + j].add(&ca.mul(cb));
        }
    }
    out
}

/// The n-cube `O(antichain(n))` with the full symmetric action.
pub fn boolean_cube(n: usize) -> OrderPolytope {
    let poset = Poset::antichain(n);
    let action = automorphism_action(&poset);
    order_polytope(&poset, &action).unwrap()
}

/// `Σ_λ χ_λ·t^{des(λ)}` over standard Young tableaux, the expected Ehrhart
/// numerator of the n-cube.
pub fn boolean_syt_numerator(data: &OrderPolytope) -> Vec<ClassFunction> {
    syt_descent_polynomial(data.affine_action.group()).expect("symmetric group")
}

/// `Lip(T_n)` with its alcove triangulation and the coordinate action of the
/// automorphisms of `T_n` (the symmetric group on the minima).
pub struct LipschitzData {
    pub n_minima: usize,
    pub polytope: LatticePolytope,
    pub triangulation: GeoTriangulation,
    pub action: AffineAction,
    pub acted_complex: ActedComplex,
    pub poset_action: PosetAction,
}

pub fn lipschitz(n: usize) -> LipschitzData {
    let poset = Poset::bowtie_t(n);
    let polytope = lipschitz_polytope(&poset).unwrap();
    let triangulation = alcove_triangulation(&polytope).unwrap();
    let poset_action = automorphism_action(&poset);
    let action = coordinate_permutation_action(
        &polytope,
        poset_action.group().clone(),
        poset_action.group().generators(),
    )
    .unwrap();
    let induced = triangulation.induced_vertex_action(&action).unwrap();
    let acted_complex = ActedComplex::new(
        triangulation.complex().clone(),
        action.group().clone(),
        induced,
    )
    .unwrap();
    LipschitzData {
        n_minima: n,
        polytope,
        triangulation,
        action,
        acted_complex,
        poset_action,
    }
}

/// `(1+t)/(1−t) · Hilb(Δ(B_n))` over the same group as `Lip(T_n)`, the
/// expected Ehrhart series of the Lipschitz polytope.
pub fn lipschitz_identity_rhs(data: &LipschitzData, truncation: usize) -> EquivariantSeries {
    let antichain = Poset::antichain(data.n_minima);
    let restricted = data
        .poset_action
        .restrict_block(&antichain, 0)
        .expect("the top element is fixed");
    let boolean = order_polytope(&antichain, &restricted).unwrap();
    let hilbert = boolean.acted_complex.hilbert_series_direct(truncation);
    let group = data.action.group().clone();
    let triv = ClassFunction::trivial(group);
    let factor = expand_rational(&[triv.clone(), triv.clone()], &[(triv, 1)], truncation)
        .expect("(1+t)/(1−t) expands");
    factor.mul_truncated(&hilbert).expect("same group")
}

/// Both sides of the join identity: the Ehrhart series of `O(X_1∗X_2)` under
/// the full automorphism action and `(1−t)·Ehr(O(X_1))·Ehr(O(X_2))` under its
/// restrictions.
pub fn join_comparison(
    x1: &Poset,
    x2: &Poset,
    truncation: usize,
) -> (EquivariantSeries, EquivariantSeries) {
    use equiseries_core::polytope::equivariant_ehrhart;

    let join = Poset::join(x1, x2);
    let action = automorphism_action(&join);
    let joined = order_polytope(&join, &action).unwrap();
    let lhs = equivariant_ehrhart(&joined.polytope, &joined.affine_action, truncation).unwrap();

    let lower = action.restrict_block(x1, 0).expect("join factors are preserved");
    let upper = action.restrict_block(x2, x1.n()).expect("join factors are preserved");
    let d1 = order_polytope(x1, &lower).unwrap();
    let d2 = order_polytope(x2, &upper).unwrap();
    let e1 = equivariant_ehrhart(&d1.polytope, &d1.affine_action, truncation).unwrap();
    let e2 = equivariant_ehrhart(&d2.polytope, &d2.affine_action, truncation).unwrap();
    let group = action.group().clone();
    let triv = ClassFunction::trivial(group);
    let one_minus_t = [triv.clone(), triv.neg()];
    let rhs = e1
        .mul_truncated(&e2)
        .and_then(|p| p.mul_polynomial(&one_minus_t))
        .expect("same group");
    (lhs, rhs)
}
