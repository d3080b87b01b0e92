//! Finite permutation groups as explicit element lists with conjugacy classes.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::perm::Permutation;

/// Default cap on group order; the element-list representation is meant for
/// desk-scale groups.
pub const DEFAULT_GROUP_CAP: usize = 10_080;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    DegreeMismatch { expected: usize, found: usize },
    CapExceeded { cap: usize },
    NotAHomomorphism,
    GroupMismatch,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::DegreeMismatch { expected, found } => {
                write!(f, "generator degree {found} does not match {expected}")
            }
            GroupError::CapExceeded { cap } => {
                write!(f, "group order exceeds the configured cap {cap}")
            }
            GroupError::NotAHomomorphism => {
                write!(f, "the generator images do not extend to a homomorphism")
            }
            GroupError::GroupMismatch => write!(f, "operands belong to different groups"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Least member in generation order; classes are listed by representative.
    pub representative: usize,
    /// All member element indices, ascending.
    pub members: Vec<usize>,
}

/// A finite permutation group given by its full element list.
///
/// Element 0 is the identity and elements appear in breadth-first generation
/// order, which makes every derived ordering deterministic.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    degree: usize,
    elements: Vec<Permutation>,
    index: BTreeMap<Vec<usize>, usize>,
    words: Vec<Vec<usize>>,
    generators: Vec<Permutation>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    inverse_of: Vec<usize>,
    exponent: u64,
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for FiniteGroup {}

impl FiniteGroup {
    /// Closure of the generators under composition, with conjugacy classes.
    pub fn generate(
        degree: usize,
        generators: &[Permutation],
        cap: usize,
    ) -> Result<Arc<Self>, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    found: g.degree(),
                });
            }
        }
        let generators: Vec<Permutation> =
            generators.iter().filter(|g| !g.is_identity()).cloned().collect();

        let mut elements = vec![Permutation::identity(degree)];
        let mut words: Vec<Vec<usize>> = vec![Vec::new()];
        let mut index = BTreeMap::new();
        index.insert(elements[0].images().to_vec(), 0usize);
        let mut frontier = 0usize;
        while frontier < elements.len() {
            let current = elements[frontier].clone();
            for (gi, g) in generators.iter().enumerate() {
                let product = current.compose(g);
                if !index.contains_key(product.images()) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(product.images().to_vec(), elements.len());
                    let mut word = words[frontier].clone();
                    word.push(gi);
                    words.push(word);
                    elements.push(product);
                }
            }
            frontier += 1;
        }

        let order = elements.len();
        let mut inverse_of = vec![0usize; order];
        for (i, e) in elements.iter().enumerate() {
            inverse_of[i] = index[e.inverse().images()];
        }

        // Conjugacy classes as orbits of conjugation by the generators.
        let mut class_of = vec![usize::MAX; order];
        let mut classes = Vec::new();
        for start in 0..order {
            if class_of[start] != usize::MAX {
                continue;
            }
            let class_idx = classes.len();
            let mut members = vec![start];
            class_of[start] = class_idx;
            let mut queue = vec![start];
            while let Some(e) = queue.pop() {
                for (gi, g) in generators.iter().enumerate() {
                    let conj = g
                        .inverse()
                        .compose(&elements[e])
                        .compose(g);
                    let _ = gi;
                    let ci = index[conj.images()];
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = class_idx;
                        members.push(ci);
                        queue.push(ci);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                members,
            });
        }

        let exponent = elements
            .iter()
            .fold(1u64, |acc, e| num_integer::lcm(acc, e.order()));

        Ok(Arc::new(FiniteGroup {
            degree,
            elements,
            index,
            words,
            generators,
            classes,
            class_of,
            inverse_of,
            exponent,
        }))
    }

    pub fn generate_default(degree: usize, generators: &[Permutation]) -> Result<Arc<Self>, GroupError> {
        Self::generate(degree, generators, DEFAULT_GROUP_CAP)
    }

    pub fn trivial(degree: usize) -> Arc<Self> {
        Self::generate(degree, &[], DEFAULT_GROUP_CAP).expect("trivial group")
    }

    /// The symmetric group on `n` points in its natural action.
    pub fn symmetric(n: usize) -> Result<Arc<Self>, GroupError> {
        let gens = if n < 2 {
            Vec::new()
        } else {
            vec![Permutation::transposition(n, 0, 1), Permutation::cycle(n)]
        };
        Self::generate(n, &gens, DEFAULT_GROUP_CAP)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_indices(&self) -> Vec<usize> {
        self.generators
            .iter()
            .map(|g| self.index[g.images()])
            .collect()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p.images()).copied()
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        let product = self.elements[a].compose(&self.elements[b]);
        self.index[product.images()]
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        self.inverse_of[a]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, element: usize) -> usize {
        self.class_of[element]
    }

    pub fn class_representative(&self, class: usize) -> &Permutation {
        &self.elements[self.classes[class].representative]
    }

    pub fn class_size(&self, class: usize) -> usize {
        self.classes[class].members.len()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c.members.len()).collect()
    }

    /// Class of `rep(class)^s`.
    pub fn power_class(&self, class: usize, s: u64) -> usize {
        let rep = self.classes[class].representative;
        let mut acc = 0usize;
        for _ in 0..s {
            acc = self.multiply(acc, rep);
        }
        self.class_of[acc]
    }

    /// Class of the inverses of the members of `class`.
    pub fn inverse_class(&self, class: usize) -> usize {
        self.class_of[self.inverse_of[self.classes[class].representative]]
    }

    /// Extends a map on the generators to the whole group and verifies that
    /// the extension is a homomorphism.
    ///
    /// `gen_images` must be indexed like [`Self::generators`].
    pub fn extend_homomorphism<T, M, E>(
        &self,
        identity: T,
        gen_images: &[T],
        mul: M,
        eq: E,
    ) -> Result<Vec<T>, GroupError>
    where
        T: Clone,
        M: Fn(&T, &T) -> T,
        E: Fn(&T, &T) -> bool,
    {
        assert_eq!(gen_images.len(), self.generators.len());
        let mut images: Vec<T> = Vec::with_capacity(self.order());
        for word in &self.words {
            let mut acc = identity.clone();
            for &gi in word {
                acc = mul(&acc, &gen_images[gi]);
            }
            images.push(acc);
        }
        // φ(e·g) = φ(e)·φ(g) for all e and generators g makes φ a homomorphism.
        for e in 0..self.order() {
            for (gi, g) in self.generators.iter().enumerate() {
                let eg = self.index[self.elements[e].compose(g).images()];
                let expected = mul(&images[e], &gen_images[gi]);
                if !eq(&images[eg], &expected) {
                    return Err(GroupError::NotAHomomorphism);
                }
            }
        }
        Ok(images)
    }

    /// Extends generator images that are permutations of a finite set.
    pub fn extend_permutation_action(
        &self,
        set_size: usize,
        gen_images: &[Permutation],
    ) -> Result<Vec<Permutation>, GroupError> {
        for img in gen_images {
            if img.degree() != set_size {
                return Err(GroupError::DegreeMismatch {
                    expected: set_size,
                    found: img.degree(),
                });
            }
        }
        self.extend_homomorphism(
            Permutation::identity(set_size),
            gen_images,
            |a, b| a.compose(b),
            |a, b| a == b,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z2_from_one_swap() {
        let g = FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.class_count(), 2);
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn s3_closure_and_classes() {
        // Brute-force closure of two 3-cycles gives all of S_3.
        let a = Permutation::new(vec![1, 0, 2]).unwrap();
        let b = Permutation::new(vec![1, 2, 0]).unwrap();
        let g = FiniteGroup::generate(3, &[a, b], 100).unwrap();
        assert_eq!(g.order(), 6);
        let mut sizes = g.class_sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert_eq!(g.classes()[0].representative, 0);
        assert_eq!(g.exponent(), 6);
    }

    #[test]
    fn trivial_group_on_three_points() {
        let g = FiniteGroup::generate(3, &[], 100).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.class_count(), 1);
    }

    #[test]
    fn cap_is_enforced() {
        let err = FiniteGroup::generate(
            5,
            &[Permutation::transposition(5, 0, 1), Permutation::cycle(5)],
            10,
        )
        .unwrap_err();
        assert_eq!(err, GroupError::CapExceeded { cap: 10 });
    }

    #[test]
    fn degree_mismatch_is_rejected() {
        let err =
            FiniteGroup::generate(3, &[Permutation::transposition(2, 0, 1)], 100).unwrap_err();
        assert!(matches!(err, GroupError::DegreeMismatch { .. }));
    }

    #[test]
    fn symmetric_groups() {
        for (n, order) in [(1usize, 1usize), (2, 2), (3, 6), (4, 24), (5, 120)] {
            let g = FiniteGroup::symmetric(n).unwrap();
            assert_eq!(g.order(), order);
        }
        // Class count of S_n = number of partitions of n.
        assert_eq!(FiniteGroup::symmetric(4).unwrap().class_count(), 5);
        assert_eq!(FiniteGroup::symmetric(5).unwrap().class_count(), 7);
    }

    #[test]
    fn power_and_inverse_classes() {
        let g = FiniteGroup::symmetric(3).unwrap();
        for c in 0..g.class_count() {
            assert_eq!(g.power_class(c, 1), c);
            assert_eq!(g.power_class(c, 0), 0);
            // In S_n every element is conjugate to its inverse.
            assert_eq!(g.inverse_class(c), c);
        }
    }

    #[test]
    fn homomorphism_extension_detects_bad_images() {
        let g = FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap();
        // Sending an involution to a 3-cycle is not a homomorphism.
        let bad = vec![Permutation::cycle(3)];
        assert_eq!(
            g.extend_permutation_action(3, &bad).unwrap_err(),
            GroupError::NotAHomomorphism
        );
        let good = vec![Permutation::transposition(3, 1, 2)];
        let images = g.extend_permutation_action(3, &good).unwrap();
        assert_eq!(images.len(), 2);
        assert!(images[0].is_identity());
    }
}
