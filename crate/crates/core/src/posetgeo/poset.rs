//! Finite posets, their automorphism actions, order ideals, and order
//! complexes.

use alloc::collections::BTreeSet;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::complex::{ComplexError, SimplicialComplex};
use crate::grpchar::group::{FiniteGroup, GroupError};
use crate::grpchar::perm::Permutation;
use crate::polytope::PolytopeError;

#[derive(Clone, Debug)]
pub enum PosetError {
    ElementOutOfRange { element: usize, n: usize },
    /// The reflexive-transitive closure of the covers contains a cycle.
    NotAntisymmetric { a: usize, b: usize },
    /// Ideal/extension enumeration is capped at desk scale.
    TooManyElements { n: usize, limit: usize },
    NotAnAutomorphism { generator: usize },
    ActionLength { expected: usize, found: usize },
    /// A group element maps a join factor outside itself.
    BlockNotPreserved { element: usize },
    Group(GroupError),
    Polytope(PolytopeError),
    Complex(ComplexError),
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::ElementOutOfRange { element, n } => {
                write!(f, "element {element} out of range for poset on {n} elements")
            }
            PosetError::NotAntisymmetric { a, b } => {
                write!(f, "relation is not antisymmetric: {a} ≤ {b} ≤ {a}")
            }
            PosetError::TooManyElements { n, limit } => {
                write!(f, "poset has {n} elements, enumeration supports at most {limit}")
            }
            PosetError::NotAnAutomorphism { generator } => {
                write!(f, "generator {generator} is not a poset automorphism")
            }
            PosetError::ActionLength { expected, found } => {
                write!(f, "action has {found} maps, expected {expected}")
            }
            PosetError::BlockNotPreserved { element } => {
                write!(f, "element {element} does not preserve the join factor")
            }
            PosetError::Group(e) => write!(f, "{e}"),
            PosetError::Polytope(e) => write!(f, "{e}"),
            PosetError::Complex(e) => write!(f, "{e}"),
        }
    }
}

impl From<GroupError> for PosetError {
    fn from(e: GroupError) -> Self {
        PosetError::Group(e)
    }
}

impl From<PolytopeError> for PosetError {
    fn from(e: PolytopeError) -> Self {
        PosetError::Polytope(e)
    }
}

impl From<ComplexError> for PosetError {
    fn from(e: ComplexError) -> Self {
        PosetError::Complex(e)
    }
}

const IDEAL_ENUMERATION_LIMIT: usize = 24;

/// A finite poset on `{0, …, n−1}` stored as its full order relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    leq: Vec<Vec<bool>>,
}

impl Poset {
    /// Builds the poset from covering relations `(lower, upper)` by
    /// reflexive-transitive closure.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut leq = vec![vec![false; n]; n];
        for i in 0..n {
            leq[i][i] = true;
        }
        for &(a, b) in covers {
            if a >= n {
                return Err(PosetError::ElementOutOfRange { element: a, n });
            }
            if b >= n {
                return Err(PosetError::ElementOutOfRange { element: b, n });
            }
            leq[a][b] = true;
        }
        // Warshall closure.
        for k in 0..n {
            for i in 0..n {
                if leq[i][k] {
                    for j in 0..n {
                        if leq[k][j] {
                            leq[i][j] = true;
                        }
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && leq[i][j] && leq[j][i] {
                    return Err(PosetError::NotAntisymmetric { a: i, b: j });
                }
            }
        }
        Ok(Poset { n, leq })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn lt(&self, a: usize, b: usize) -> bool {
        a != b && self.leq[a][b]
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| !self.lt(y, x)))
            .collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| (0..self.n).all(|y| !self.lt(x, y)))
            .collect()
    }

    /// Covering pairs `(lower, upper)`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if self.lt(a, b) && !(0..self.n).any(|z| self.lt(a, z) && self.lt(z, b)) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.degree() == self.n
            && (0..self.n).all(|a| {
                (0..self.n).all(|b| self.leq[a][b] == self.leq[perm.apply(a)][perm.apply(b)])
            })
    }

    /// The total order `0 < 1 < … < n−1`.
    pub fn chain(n: usize) -> Self {
        let covers: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        Self::from_covers(n, &covers).expect("chain")
    }

    pub fn antichain(n: usize) -> Self {
        Self::from_covers(n, &[]).expect("antichain")
    }

    /// Ordinal join: every element of `lower` below every element of `upper`,
    /// with `upper` re-indexed after `lower`.
    pub fn join(lower: &Poset, upper: &Poset) -> Self {
        let n = lower.n + upper.n;
        let mut covers = Vec::new();
        for (a, b) in lower.covers() {
            covers.push((a, b));
        }
        for (a, b) in upper.covers() {
            covers.push((lower.n + a, lower.n + b));
        }
        for a in lower.maximals() {
            for b in upper.minimals() {
                covers.push((a, lower.n + b));
            }
        }
        Self::from_covers(n, &covers).expect("join of posets")
    }

    /// The k-fold join of 2-element antichains: elements `a_i = 2i−2`,
    /// `b_i = 2i−1` with both of level i below both of level i+1.
    pub fn radio_tower(k: usize) -> Self {
        assert!(k >= 1, "radio tower needs at least one level");
        let mut poset = Self::antichain(2);
        for _ in 1..k {
            poset = Self::join(&poset, &Self::antichain(2));
        }
        poset
    }

    /// `n` incomparable minima below a single maximum (the join of an
    /// n-antichain with a point).
    pub fn bowtie_t(n: usize) -> Self {
        assert!(n >= 1);
        Self::join(&Self::antichain(n), &Self::chain(1))
    }

    /// All down-closed subsets, as sorted element lists ordered by
    /// cardinality and then lexicographically.
    pub fn order_ideals(&self) -> Result<Vec<Vec<usize>>, PosetError> {
        if self.n > IDEAL_ENUMERATION_LIMIT {
            return Err(PosetError::TooManyElements {
                n: self.n,
                limit: IDEAL_ENUMERATION_LIMIT,
            });
        }
        let mut ideals = Vec::new();
        'mask: for mask in 0u64..(1 << self.n) {
            for y in 0..self.n {
                if mask >> y & 1 == 1 {
                    for x in 0..self.n {
                        if self.lt(x, y) && mask >> x & 1 == 0 {
                            continue 'mask;
                        }
                    }
                }
            }
            let ideal: Vec<usize> = (0..self.n).filter(|&x| mask >> x & 1 == 1).collect();
            ideals.push(ideal);
        }
        ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(ideals)
    }

    /// The poset of order ideals `J(X)` ordered by inclusion, together with
    /// the ideals indexing its elements.
    pub fn ideal_poset(&self) -> Result<(Poset, Vec<Vec<usize>>), PosetError> {
        let ideals = self.order_ideals()?;
        let m = ideals.len();
        let sets: Vec<BTreeSet<usize>> = ideals
            .iter()
            .map(|i| i.iter().copied().collect())
            .collect();
        let mut leq = vec![vec![false; m]; m];
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                leq[i][j] = a.is_subset(b);
            }
        }
        Ok((Poset { n: m, leq }, ideals))
    }

    /// The order complex: vertices are poset elements, faces are chains,
    /// facets are the maximal chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        let mut chains = Vec::new();
        let mut stack = Vec::new();
        for start in self.minimals() {
            self.maximal_chains_from(start, &mut stack, &mut chains);
        }
        if chains.is_empty() {
            // Zero elements cannot occur (posets have n ≥ 1 in practice),
            // but guard with the empty-face complex.
            return SimplicialComplex::empty_face_only(self.n);
        }
        SimplicialComplex::new(self.n, chains).expect("chains form a complex")
    }

    fn maximal_chains_from(
        &self,
        element: usize,
        stack: &mut Vec<usize>,
        chains: &mut Vec<Vec<usize>>,
    ) {
        stack.push(element);
        let uppers: Vec<usize> = (0..self.n)
            .filter(|&y| self.lt(element, y) && !(0..self.n).any(|z| self.lt(element, z) && self.lt(z, y)))
            .collect();
        if uppers.is_empty() {
            chains.push(stack.clone());
        } else {
            for y in uppers {
                self.maximal_chains_from(y, stack, chains);
            }
        }
        stack.pop();
    }

    /// Number of linear extensions by brute-force filtering (desk scale).
    pub fn linear_extension_count(&self) -> Result<u64, PosetError> {
        if self.n > 9 {
            return Err(PosetError::TooManyElements { n: self.n, limit: 9 });
        }
        let mut count = 0u64;
        let mut order: Vec<usize> = Vec::new();
        let mut used = vec![false; self.n];
        self.extensions_rec(&mut order, &mut used, &mut count);
        Ok(count)
    }

    fn extensions_rec(&self, order: &mut Vec<usize>, used: &mut Vec<bool>, count: &mut u64) {
        if order.len() == self.n {
            *count += 1;
            return;
        }
        for x in 0..self.n {
            if used[x] {
                continue;
            }
            // x can come next iff everything below it is already placed.
            if (0..self.n).all(|y| !self.lt(y, x) || used[y]) {
                used[x] = true;
                order.push(x);
                self.extensions_rec(order, used, count);
                order.pop();
                used[x] = false;
            }
        }
    }
}

/// A group acting on a poset by automorphisms, one permutation per element.
#[derive(Clone, Debug)]
pub struct PosetAction {
    group: Arc<FiniteGroup>,
    maps: Vec<Permutation>,
}

impl PosetAction {
    /// Generates the group from automorphism generators acting on the poset's
    /// elements.
    pub fn from_generators(poset: &Poset, generators: &[Permutation]) -> Result<Self, PosetError> {
        for (gi, g) in generators.iter().enumerate() {
            if !poset.is_automorphism(g) {
                return Err(PosetError::NotAnAutomorphism { generator: gi });
            }
        }
        let group = FiniteGroup::generate_default(poset.n(), generators)?;
        let maps = group.elements().to_vec();
        Ok(PosetAction { group, maps })
    }

    /// An existing group acting through explicit per-element automorphisms.
    pub fn new(poset: &Poset, group: Arc<FiniteGroup>, maps: Vec<Permutation>) -> Result<Self, PosetError> {
        if maps.len() != group.order() {
            return Err(PosetError::ActionLength {
                expected: group.order(),
                found: maps.len(),
            });
        }
        for (e, m) in maps.iter().enumerate() {
            if !poset.is_automorphism(m) {
                let _ = e;
                return Err(PosetError::NotAnAutomorphism { generator: e });
            }
        }
        Ok(PosetAction { group, maps })
    }

    pub fn trivial(poset: &Poset) -> Self {
        let group = FiniteGroup::trivial(1);
        PosetAction {
            maps: vec![Permutation::identity(poset.n()); group.order()],
            group,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn maps(&self) -> &[Permutation] {
        &self.maps
    }

    pub fn map(&self, element: usize) -> &Permutation {
        &self.maps[element]
    }

    /// The action restricted to a contiguous block of elements (a join
    /// factor); every group element must preserve the block.
    pub fn restrict_block(
        &self,
        block: &Poset,
        start: usize,
    ) -> Result<PosetAction, PosetError> {
        let len = block.n();
        let mut maps = Vec::with_capacity(self.maps.len());
        for (e, m) in self.maps.iter().enumerate() {
            let images: Vec<usize> = (start..start + len)
                .map(|x| m.apply(x))
                .collect();
            if images.iter().any(|&y| y < start || y >= start + len) {
                return Err(PosetError::BlockNotPreserved { element: e });
            }
            let perm = Permutation::new(images.into_iter().map(|y| y - start).collect())
                .expect("restriction of a bijection preserving the block");
            maps.push(perm);
        }
        PosetAction::new(block, self.group.clone(), maps)
    }
}
