//! Truncated power series whose coefficients are class functions.
//!
//! All expansions are computed per conjugacy class by scalar geometric-series
//! expansion and reassembled, which is valid because class-function algebra is
//! pointwise.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use super::classfn::ClassFunction;
use super::cyclotomic::Cyclotomic;
use super::group::FiniteGroup;

#[derive(Clone, Debug)]
pub enum SeriesError {
    GroupMismatch,
    EmptyNumerator,
    /// A coefficient of `series·(1−t)^e` inside the verification window
    /// `(N−e, N]` is nonzero, so the numerator is not a polynomial there.
    NonTerminatingNumerator { degree: usize, value: String },
    /// The requested window does not fit inside the truncation.
    WindowTooSmall { truncation: usize, denom_exp: usize },
    /// A rational form failed to reproduce the stored coefficients.
    InconsistentRationalForm { degree: usize },
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::GroupMismatch => write!(f, "series operands over different groups"),
            SeriesError::EmptyNumerator => write!(f, "numerator polynomial must be nonempty"),
            SeriesError::NonTerminatingNumerator { degree, value } => write!(
                f,
                "numerator coefficient at degree {degree} is {value}, not zero: \
                 the series is not rational with the requested denominator"
            ),
            SeriesError::WindowTooSmall { truncation, denom_exp } => write!(
                f,
                "truncation {truncation} leaves no window for denominator exponent {denom_exp}"
            ),
            SeriesError::InconsistentRationalForm { degree } => write!(
                f,
                "rational form does not reproduce the series coefficient at degree {degree}"
            ),
        }
    }
}

/// `numerator(t) / (1−t)^denom_exp`.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalForm {
    pub numerator: Vec<ClassFunction>,
    pub denom_exp: usize,
}

/// A power series of class functions truncated at a fixed degree, optionally
/// carrying a rational form that reproduces it.
#[derive(Clone, Debug)]
pub struct EquivariantSeries {
    group: Arc<FiniteGroup>,
    truncation: usize,
    coeffs: Vec<ClassFunction>,
    rational_form: Option<RationalForm>,
}

impl PartialEq for EquivariantSeries {
    /// Coefficientwise equality up to the common truncation; the rational
    /// form is presentation, not identity.
    fn eq(&self, other: &Self) -> bool {
        self.truncation == other.truncation && self.coeffs == other.coeffs
    }
}

impl EquivariantSeries {
    pub fn from_coeffs(group: Arc<FiniteGroup>, coeffs: Vec<ClassFunction>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least its degree-0 coefficient");
        EquivariantSeries {
            group,
            truncation: coeffs.len() - 1,
            coeffs,
            rational_form: None,
        }
    }

    /// Attaches a rational form after checking that its expansion reproduces
    /// every stored coefficient.
    pub fn with_rational_form(
        mut self,
        numerator: Vec<ClassFunction>,
        denom_exp: usize,
    ) -> Result<Self, SeriesError> {
        let denom: Vec<(ClassFunction, usize)> = (0..denom_exp)
            .map(|_| (ClassFunction::trivial(self.group.clone()), 1))
            .collect();
        let expanded = expand_rational(&numerator, &denom, self.truncation)?;
        for (i, (a, b)) in expanded.coeffs.iter().zip(self.coeffs.iter()).enumerate() {
            if a != b {
                return Err(SeriesError::InconsistentRationalForm { degree: i });
            }
        }
        self.rational_form = Some(RationalForm { numerator, denom_exp });
        Ok(self)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn coeffs(&self) -> &[ClassFunction] {
        &self.coeffs
    }

    pub fn coeff(&self, degree: usize) -> &ClassFunction {
        &self.coeffs[degree]
    }

    pub fn rational_form(&self) -> Option<&RationalForm> {
        self.rational_form.as_ref()
    }

    /// The scalar series obtained by evaluating every coefficient at a class.
    pub fn evaluate_at_class(&self, class: usize) -> Vec<Cyclotomic> {
        self.coeffs.iter().map(|c| c.value(class).clone()).collect()
    }

    /// Truncated product of two series (up to the smaller truncation).
    pub fn mul_truncated(&self, other: &Self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].same_group(&other.coeffs[0]) {
            return Err(SeriesError::GroupMismatch);
        }
        let n = self.truncation.min(other.truncation);
        let mut coeffs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = ClassFunction::zero(self.group.clone());
            for j in 0..=i {
                acc = acc.add(&self.coeffs[j].mul(&other.coeffs[i - j]));
            }
            coeffs.push(acc);
        }
        Ok(EquivariantSeries {
            group: self.group.clone(),
            truncation: n,
            coeffs,
            rational_form: None,
        })
    }

    /// Truncated product with a polynomial of class functions.
    pub fn mul_polynomial(&self, poly: &[ClassFunction]) -> Result<Self, SeriesError> {
        if poly.is_empty() {
            return Err(SeriesError::EmptyNumerator);
        }
        if poly.iter().any(|c| !c.same_group(&self.coeffs[0])) {
            return Err(SeriesError::GroupMismatch);
        }
        let n = self.truncation;
        let mut coeffs = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let mut acc = ClassFunction::zero(self.group.clone());
            for (j, p) in poly.iter().enumerate() {
                if j > i {
                    break;
                }
                acc = acc.add(&p.mul(&self.coeffs[i - j]));
            }
            coeffs.push(acc);
        }
        Ok(EquivariantSeries {
            group: self.group.clone(),
            truncation: n,
            coeffs,
            rational_form: None,
        })
    }

    /// Coefficients of `self·(1−t)^e`, which must terminate within the
    /// verification window `(N−e, N]`; trailing zeros below the window are
    /// trimmed.
    pub fn rational_numerator(&self, e: usize) -> Result<Vec<ClassFunction>, SeriesError> {
        let n = self.truncation;
        if e > n {
            return Err(SeriesError::WindowTooSmall {
                truncation: n,
                denom_exp: e,
            });
        }
        let mut numerator = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = ClassFunction::zero(self.group.clone());
            for j in 0..=k.min(e) {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                let scale = sign * crate::linalg::binomial(e, j);
                acc = acc.add(&self.coeffs[k - j].scale_int(scale));
            }
            numerator.push(acc);
        }
        for (k, c) in numerator.iter().enumerate().skip(n + 1 - e) {
            if !c.is_zero() {
                return Err(SeriesError::NonTerminatingNumerator {
                    degree: k,
                    value: alloc::format!("{}", c.value(0)),
                });
            }
        }
        while numerator.len() > 1 && numerator.last().map(ClassFunction::is_zero) == Some(true) {
            numerator.pop();
        }
        Ok(numerator)
    }
}

/// Expands `numerator(t) / Π_i (1 − c_i·t^{r_i})` to degree `n`.
pub fn expand_rational(
    numerator: &[ClassFunction],
    denominator_factors: &[(ClassFunction, usize)],
    n: usize,
) -> Result<EquivariantSeries, SeriesError> {
    if numerator.is_empty() {
        return Err(SeriesError::EmptyNumerator);
    }
    let lead = &numerator[0];
    if numerator.iter().any(|c| !c.same_group(lead))
        || denominator_factors.iter().any(|(c, _)| !c.same_group(lead))
    {
        return Err(SeriesError::GroupMismatch);
    }
    let group = lead.group().clone();
    let class_count = group.class_count();
    let mut per_class: Vec<Vec<Cyclotomic>> = Vec::with_capacity(class_count);
    for class in 0..class_count {
        let mut series: Vec<Cyclotomic> = (0..=n)
            .map(|i| {
                numerator
                    .get(i)
                    .map(|c| c.value(class).clone())
                    .unwrap_or_else(Cyclotomic::zero)
            })
            .collect();
        for (cf, r) in denominator_factors {
            let c = cf.value(class).clone();
            if *r == 0 {
                continue;
            }
            // Multiply by Σ_k c^k t^{rk}: s'_i = s_i + c·s'_{i−r}.
            for i in *r..=n {
                let carried = c.mul(&series[i - r]);
                series[i] = series[i].add(&carried);
            }
        }
        per_class.push(series);
    }
    let coeffs: Vec<ClassFunction> = (0..=n)
        .map(|i| {
            let values: Vec<Cyclotomic> =
                (0..class_count).map(|c| per_class[c][i].clone()).collect();
            ClassFunction::new(group.clone(), values)
        })
        .collect();
    Ok(EquivariantSeries::from_coeffs(group, coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::perm::Permutation;
    use alloc::vec;

    fn z2() -> Arc<FiniteGroup> {
        FiniteGroup::generate(2, &[Permutation::transposition(2, 0, 1)], 100).unwrap()
    }

    fn sgn(group: &Arc<FiniteGroup>) -> ClassFunction {
        ClassFunction::from_ints(group.clone(), &[1, -1])
    }

    #[test]
    fn two_rational_forms_of_the_same_series() {
        // (1 + sgn·t)/(1−t) and (1+t)/(1−sgn·t) agree: 1, 1+sgn, 1+sgn, …
        let g = z2();
        let triv = ClassFunction::trivial(g.clone());
        let s = sgn(&g);
        let one_plus_sgn = triv.add(&s);

        let a = expand_rational(&[triv.clone(), s.clone()], &[(triv.clone(), 1)], 3).unwrap();
        let b = expand_rational(&[triv.clone(), triv.clone()], &[(s.clone(), 1)], 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.coeff(0), &triv);
        for i in 1..=3 {
            assert_eq!(a.coeff(i), &one_plus_sgn);
        }
    }

    #[test]
    fn geometric_square_over_trivial_group() {
        // 1/(1−t)² = 1 + 2t + 3t² + …
        let g = FiniteGroup::trivial(1);
        let triv = ClassFunction::trivial(g.clone());
        let s = expand_rational(&[triv.clone()], &[(triv.clone(), 1), (triv, 1)], 2).unwrap();
        let values: Vec<i64> = (0..=2)
            .map(|i| {
                let r = s.coeff(i).value(0).as_rational().unwrap();
                i64::try_from(r.to_integer()).unwrap()
            })
            .collect();
        assert_eq!(values, vec![1, 2, 3]);
    }

    #[test]
    fn numerator_roundtrip() {
        let g = z2();
        let triv = ClassFunction::trivial(g.clone());
        let s = sgn(&g);
        let numerator = vec![triv.clone(), s.clone(), s.neg()];
        let series = expand_rational(&numerator, &[(triv.clone(), 1), (triv, 1)], 8).unwrap();
        let recovered = series.rational_numerator(2).unwrap();
        assert_eq!(recovered, numerator);
    }

    #[test]
    fn simple_numerators() {
        let g = FiniteGroup::trivial(1);
        let triv = ClassFunction::trivial(g.clone());
        let series = expand_rational(&[triv.clone()], &[(triv, 1)], 6).unwrap();
        let num = series.rational_numerator(1).unwrap();
        assert_eq!(num.len(), 1);
        assert_eq!(num[0], ClassFunction::trivial(g));
    }

    #[test]
    fn non_terminating_numerator_is_rejected() {
        // 1/(1−t)² times (1−t) is 1/(1−t), but e=0 leaves the raw series.
        let g = FiniteGroup::trivial(1);
        let triv = ClassFunction::trivial(g.clone());
        let series =
            expand_rational(&[triv.clone()], &[(triv.clone(), 1), (triv, 1)], 4).unwrap();
        assert!(matches!(
            series.rational_numerator(1),
            Err(SeriesError::NonTerminatingNumerator { .. })
        ));
    }

    #[test]
    fn rational_form_validation() {
        let g = z2();
        let triv = ClassFunction::trivial(g.clone());
        let s = sgn(&g);
        let series = expand_rational(&[triv.clone(), s.clone()], &[(triv.clone(), 1)], 4).unwrap();
        let ok = series
            .clone()
            .with_rational_form(vec![triv.clone(), s.clone()], 1);
        assert!(ok.is_ok());
        let bad = series.with_rational_form(vec![triv.clone(), triv], 1);
        assert!(matches!(bad, Err(SeriesError::InconsistentRationalForm { .. })));
    }
}
