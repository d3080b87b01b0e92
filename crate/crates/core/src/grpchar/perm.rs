//! Permutations of `{0, …, n−1}` in image form.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A bijection of `{0, …, n−1}`, stored as the image list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NotABijection(pub Vec<usize>);

impl fmt::Display for NotABijection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "image list {:?} is not a bijection", self.0)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self, NotABijection> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(NotABijection(images));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Transposition of `a` and `b` on `n` points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Permutation { images }
    }

    /// The n-cycle `0 ↦ 1 ↦ … ↦ n−1 ↦ 0`.
    pub fn cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&i| self.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, l| num_integer::lcm(acc, l as u64))
    }

    pub fn fixed_points(&self) -> usize {
        self.images.iter().enumerate().filter(|(i, &j)| *i == j).count()
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut cur = self.images[start];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                cur = self.images[cur];
            }
            cycles.push(cycle);
        }
        cycles
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        self.cycles().into_iter().map(|c| c.len()).collect()
    }

    /// Cycle type, descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths = self.cycle_lengths();
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// Cycle-type label such as `2+1` for a transposition on 3 points.
    pub fn cycle_type_label(&self) -> String {
        let parts: Vec<String> = self
            .cycle_type()
            .into_iter()
            .map(|l| alloc::format!("{l}"))
            .collect();
        parts.join("+")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![1, 2]).is_err());
        assert!(Permutation::new(vec![1, 0, 2]).is_ok());
    }

    #[test]
    fn composition_applies_right_factor_first() {
        let s = Permutation::transposition(3, 0, 1);
        let c = Permutation::cycle(3);
        // (s∘c)(0) = s(c(0)) = s(1) = 0
        assert_eq!(s.compose(&c).apply(0), 0);
        assert_eq!(c.compose(&s).apply(0), 2);
    }

    #[test]
    fn orders_and_cycle_types() {
        let c = Permutation::cycle(6);
        assert_eq!(c.order(), 6);
        let p = Permutation::new(vec![1, 0, 3, 2, 4]).unwrap();
        assert_eq!(p.cycle_type(), vec![2, 2, 1]);
        assert_eq!(p.cycle_type_label(), "2+2+1");
        assert_eq!(p.order(), 2);
        assert!(p.compose(&p.inverse()).is_identity());
    }
}
