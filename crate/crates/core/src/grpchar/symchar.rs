//! Symmetric-group characters by the Murnaghan–Nakayama rule, plus standard
//! Young tableaux with their descent statistic.

use alloc::collections::BTreeMap;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::classfn::ClassFunction;
use super::group::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymCharError {
    NotAPartition { lambda: Vec<usize>, n: usize },
    NotSymmetricGroup { degree: usize, order: usize },
}

impl fmt::Display for SymCharError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymCharError::NotAPartition { lambda, n } => {
                write!(f, "{lambda:?} is not a partition of {n}")
            }
            SymCharError::NotSymmetricGroup { degree, order } => write!(
                f,
                "group of degree {degree} and order {order} is not the natural symmetric group"
            ),
        }
    }
}

/// All partitions of `n`, parts descending, in deterministic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

fn is_partition_of(lambda: &[usize], n: usize) -> bool {
    lambda.iter().all(|&p| p > 0)
        && lambda.windows(2).all(|w| w[0] >= w[1])
        && lambda.iter().sum::<usize>() == n
}

/// χ_λ(μ) by the Murnaghan–Nakayama rule, removing border strips of sizes
/// given by the cycle type `mu`.
pub fn murnaghan_nakayama(lambda: &[usize], mu: &[usize]) -> i64 {
    let mut memo = BTreeMap::new();
    mn_rec(lambda, mu, &mut memo)
}

type MnKey = (Vec<usize>, Vec<usize>);

fn mn_rec(lambda: &[usize], mu: &[usize], memo: &mut BTreeMap<MnKey, i64>) -> i64 {
    if lambda.is_empty() {
        return 1;
    }
    let key = (lambda.to_vec(), mu.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let k = mu[0];
    let rest = &mu[1..];
    // Border strips of size k via first-column hook (beta) numbers: remove a
    // strip by replacing b with b−k when b−k is not already a beta number;
    // the sign is (−1)^{#betas strictly between b−k and b}.
    let ell = lambda.len();
    let betas: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &part)| part + (ell - 1 - i))
        .collect();
    let mut total = 0i64;
    for (pos, &b) in betas.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if betas.contains(&target) {
            continue;
        }
        let crossings = betas
            .iter()
            .filter(|&&c| c != b && target < c && c < b)
            .count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut new_betas = betas.clone();
        new_betas[pos] = target;
        new_betas.sort_unstable_by(|a, b| b.cmp(a));
        let m = new_betas.len();
        let new_lambda: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &beta)| beta - (m - 1 - i))
            .filter(|&part| part > 0)
            .collect();
        total += sign * mn_rec(&new_lambda, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// χ_λ as a class function over a natural symmetric group: the value at each
/// class is the Murnaghan–Nakayama evaluation at the representative's cycle
/// type.
pub fn symmetric_character(
    group: &Arc<FiniteGroup>,
    lambda: &[usize],
) -> Result<ClassFunction, SymCharError> {
    let n = group.degree();
    if !is_partition_of(lambda, n) {
        return Err(SymCharError::NotAPartition {
            lambda: lambda.to_vec(),
            n,
        });
    }
    let factorial: usize = (1..=n).product();
    if group.order() != factorial {
        return Err(SymCharError::NotSymmetricGroup {
            degree: n,
            order: group.order(),
        });
    }
    let values: Vec<i64> = (0..group.class_count())
        .map(|c| murnaghan_nakayama(lambda, &group.class_representative(c).cycle_type()))
        .collect();
    Ok(ClassFunction::from_ints(group.clone(), &values))
}

/// A standard Young tableau, stored by the row index of each entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    pub shape: Vec<usize>,
    /// `row_of[i]` is the row containing entry `i+1`.
    pub row_of: Vec<usize>,
}

impl Tableau {
    /// Number of descents: positions `i` where `i+1` sits strictly below `i`.
    pub fn descents(&self) -> usize {
        self.row_of
            .windows(2)
            .filter(|w| w[1] > w[0])
            .count()
    }
}

/// All standard Young tableaux with `n` cells, over all shapes.
pub fn standard_young_tableaux(n: usize) -> Vec<Tableau> {
    let mut out = Vec::new();
    let mut rows: Vec<usize> = Vec::new();
    let mut row_of: Vec<usize> = Vec::new();
    fn rec(entry: usize, n: usize, rows: &mut Vec<usize>, row_of: &mut Vec<usize>, out: &mut Vec<Tableau>) {
        if entry == n {
            out.push(Tableau {
                shape: rows.clone(),
                row_of: row_of.clone(),
            });
            return;
        }
        for r in 0..=rows.len() {
            let fits = if r == rows.len() {
                true
            } else {
                r == 0 || rows[r] < rows[r - 1]
            };
            if !fits {
                continue;
            }
            if r == rows.len() {
                rows.push(1);
            } else {
                rows[r] += 1;
            }
            row_of.push(r);
            rec(entry + 1, n, rows, row_of, out);
            row_of.pop();
            if rows[r] == 1 && r == rows.len() - 1 {
                rows.pop();
            } else {
                rows[r] -= 1;
            }
        }
    }
    if n == 0 {
        return vec![Tableau { shape: vec![], row_of: vec![] }];
    }
    rec(0, n, &mut rows, &mut row_of, &mut out);
    out
}

/// `Σ_T χ_{shape(T)}·t^{des(T)}` over all standard Young tableaux with `n`
/// cells, as polynomial coefficients indexed by descent count.
pub fn syt_descent_polynomial(
    group: &Arc<FiniteGroup>,
) -> Result<Vec<ClassFunction>, SymCharError> {
    let n = group.degree();
    let mut by_descents: BTreeMap<usize, Vec<Vec<usize>>> = BTreeMap::new();
    for tableau in standard_young_tableaux(n) {
        by_descents
            .entry(tableau.descents())
            .or_default()
            .push(tableau.shape);
    }
    let max_des = by_descents.keys().next_back().copied().unwrap_or(0);
    let mut coeffs = vec![ClassFunction::zero(group.clone()); max_des + 1];
    for (des, shapes) in by_descents {
        for shape in shapes {
            let chi = symmetric_character(group, &shape)?;
            coeffs[des] = coeffs[des].add(&chi);
        }
    }
    Ok(coeffs)
}
