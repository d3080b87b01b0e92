//! Class functions, permutation characters, character tables, effectiveness.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed};

use super::cyclotomic::{Cyclotomic, Int, Rational};
use super::dixon;
use super::group::{FiniteGroup, GroupError};
use super::perm::Permutation;

#[derive(Clone, Debug)]
pub enum CharError {
    Group(GroupError),
    /// A decomposition multiplicity was not a rational integer.
    NotVirtual { class_function: String, multiplicity: String },
    /// Dixon's method could not find a suitable prime.
    NoSuitablePrime { exponent: u64 },
    Internal(&'static str),
}

impl fmt::Display for CharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CharError::Group(e) => write!(f, "{e}"),
            CharError::NotVirtual { class_function, multiplicity } => write!(
                f,
                "class function {class_function} is not a virtual character (multiplicity {multiplicity})"
            ),
            CharError::NoSuitablePrime { exponent } => {
                write!(f, "no suitable prime found for exponent {exponent}")
            }
            CharError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl From<GroupError> for CharError {
    fn from(e: GroupError) -> Self {
        CharError::Group(e)
    }
}

/// A virtual-character value vector over the conjugacy classes of a group.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    group: Arc<FiniteGroup>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.same_group(other) && self.values == other.values
    }
}

impl Eq for ClassFunction {}

impl ClassFunction {
    pub fn new(group: Arc<FiniteGroup>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(
            values.len(),
            group.class_count(),
            "one value per conjugacy class"
        );
        ClassFunction { group, values }
    }

    pub fn trivial(group: Arc<FiniteGroup>) -> Self {
        let values = (0..group.class_count()).map(|_| Cyclotomic::one()).collect();
        ClassFunction { group, values }
    }

    pub fn zero(group: Arc<FiniteGroup>) -> Self {
        let values = (0..group.class_count()).map(|_| Cyclotomic::zero()).collect();
        ClassFunction { group, values }
    }

    pub fn constant(group: Arc<FiniteGroup>, value: i64) -> Self {
        let values = (0..group.class_count())
            .map(|_| Cyclotomic::from_int(value))
            .collect();
        ClassFunction { group, values }
    }

    /// Integer-valued class function from one value per class.
    pub fn from_ints(group: Arc<FiniteGroup>, values: &[i64]) -> Self {
        assert_eq!(values.len(), group.class_count());
        let values = values.iter().map(|&v| Cyclotomic::from_int(v)).collect();
        ClassFunction { group, values }
    }

    /// The character of a permutation action given by one permutation per
    /// group element: its value at a class is the number of fixed points of
    /// the class representative.
    ///
    /// The supplied images must form a homomorphism; building them through
    /// [`FiniteGroup::extend_permutation_action`] checks this on the
    /// generators.
    pub fn permutation_character(
        group: Arc<FiniteGroup>,
        action: &[Permutation],
    ) -> Result<Self, CharError> {
        if action.len() != group.order() {
            return Err(CharError::Internal("action must map every group element"));
        }
        let values = group
            .classes()
            .iter()
            .map(|class| Cyclotomic::from_int(action[class.representative].fixed_points() as i64))
            .collect();
        Ok(ClassFunction { group, values })
    }

    /// Permutation character from generator images on a `set_size`-point set;
    /// the homomorphism property is checked during extension.
    pub fn permutation_character_from_generators(
        group: Arc<FiniteGroup>,
        set_size: usize,
        gen_images: &[Permutation],
    ) -> Result<Self, CharError> {
        let action = group.extend_permutation_action(set_size, gen_images)?;
        Self::permutation_character(group, &action)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &Cyclotomic {
        &self.values[class]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn same_group(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.same_group(other), "class functions over different groups");
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.add(b))
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert!(self.same_group(other), "class functions over different groups");
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.sub(b))
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert!(self.same_group(other), "class functions over different groups");
        let values = self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| a.mul(b))
            .collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn neg(&self) -> Self {
        let values = self.values.iter().map(|v| v.neg()).collect();
        ClassFunction { group: self.group.clone(), values }
    }

    pub fn scale_int(&self, k: i64) -> Self {
        let factor = Rational::from(Int::from(k));
        let values = self.values.iter().map(|v| v.scale(&factor)).collect();
        ClassFunction { group: self.group.clone(), values }
    }
}

/// `⟨φ, ψ⟩ = |G|⁻¹ Σ_g φ(g)·conj(ψ(g))`, exactly.
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic, CharError> {
    if !phi.same_group(psi) {
        return Err(CharError::Group(GroupError::GroupMismatch));
    }
    let group = phi.group();
    let mut sum = Cyclotomic::zero();
    for (c, class) in group.classes().iter().enumerate() {
        let term = phi.value(c).mul(&psi.value(c).conj());
        let weighted = term.scale(&Rational::from(Int::from(class.members.len() as i64)));
        sum = sum.add(&weighted);
    }
    let order = Rational::new(Int::one(), Int::from(group.order() as i64));
    Ok(sum.scale(&order))
}

/// The multiplicities of a virtual character against a character table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub multiplicities: Vec<Int>,
    pub is_effective: bool,
}

/// The full list of irreducible characters of a finite group.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    irreducibles: Vec<ClassFunction>,
    class_sizes: Vec<usize>,
}

impl CharacterTable {
    /// Computes the table by Dixon's method: common eigenvectors of the
    /// class-sum multiplication matrices over a prime field, lifted to exact
    /// cyclotomic values with conductor `exponent(G)`.
    pub fn compute(group: Arc<FiniteGroup>) -> Result<Self, CharError> {
        let rows = dixon::character_table(&group)?;
        let mut irreducibles: Vec<ClassFunction> = rows
            .into_iter()
            .map(|values| ClassFunction::new(group.clone(), values))
            .collect();
        // Deterministic row order: by degree, then by values (largest first),
        // which lists the trivial character first.
        irreducibles.sort_by(|a, b| {
            let da = a.degree().as_rational().expect("integral degree");
            let db = b.degree().as_rational().expect("integral degree");
            da.cmp(&db).then_with(|| {
                for (x, y) in a.values().iter().zip(b.values().iter()) {
                    match y.sort_cmp(x) {
                        core::cmp::Ordering::Equal => {}
                        ord => return ord,
                    }
                }
                core::cmp::Ordering::Equal
            })
        });
        let class_sizes = group.class_sizes();
        Ok(CharacterTable {
            group,
            irreducibles,
            class_sizes,
        })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    /// Multiplicities `m_i = ⟨φ, χ_i⟩`; effective iff all are nonnegative
    /// integers. A non-integral multiplicity means the input is not a virtual
    /// character.
    pub fn decompose(&self, phi: &ClassFunction) -> Result<Decomposition, CharError> {
        let mut multiplicities = Vec::with_capacity(self.irreducibles.len());
        for chi in &self.irreducibles {
            let m = inner_product(phi, chi)?;
            let value = m.as_rational().filter(|r| r.denom().is_one());
            match value {
                Some(r) => multiplicities.push(r.to_integer()),
                None => {
                    return Err(CharError::NotVirtual {
                        class_function: alloc::format!("{}", DisplayValues(phi)),
                        multiplicity: alloc::format!("{m}"),
                    })
                }
            }
        }
        let is_effective = multiplicities.iter().all(|m| !m.is_negative());
        Ok(Decomposition {
            multiplicities,
            is_effective,
        })
    }
}

struct DisplayValues<'a>(&'a ClassFunction);

impl fmt::Display for DisplayValues<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.values().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}
