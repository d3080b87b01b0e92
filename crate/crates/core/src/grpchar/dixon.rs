//! Character tables by Dixon's method.
//!
//! The class-sum multiplication matrices of a finite group commute and share a
//! full set of common eigenvectors whose entries are `ω_i = |C_i|·χ(g_i)/χ(1)`.
//! Working over a prime field with `p ≡ 1 (mod exponent(G))` and
//! `p > 2·√|G|` makes all eigenvalues live in `F_p`; the character values are
//! then recovered exactly by matching eigenvalue discrete logarithms against
//! roots of unity.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;


use super::classfn::CharError;
use super::cyclotomic::{Cyclotomic, Rational};
use super::group::FiniteGroup;

pub(super) fn character_table(group: &Arc<FiniteGroup>) -> Result<Vec<Vec<Cyclotomic>>, CharError> {
    let k = group.class_count();
    if k == 1 {
        return Ok(vec![vec![Cyclotomic::one()]]);
    }
    let order = group.order() as u64;
    let exponent = group.exponent();
    let p = find_prime(exponent, order)?;

    let mats = structure_matrices(group, p);
    let eigenvectors = common_eigenvectors(&mats, p)?;
    if eigenvectors.len() != k {
        return Err(CharError::Internal("eigenspace refinement did not split"));
    }

    let class_sizes: Vec<u64> = group.class_sizes().iter().map(|&s| s as u64).collect();
    let inverse_class: Vec<usize> = (0..k).map(|c| group.inverse_class(c)).collect();
    let power_classes: Vec<Vec<usize>> = (0..k)
        .map(|c| {
            let n = group.class_representative(c).order();
            (0..n).map(|s| group.power_class(c, s)).collect()
        })
        .collect();

    let z = primitive_root(p);
    let mut rows = Vec::with_capacity(k);
    let mut degree_sum: u64 = 0;
    for v in &eigenvectors {
        // Normalise so the identity-class entry is 1, giving the ω values.
        if v[0] == 0 {
            return Err(CharError::Internal("eigenvector vanishes at the identity"));
        }
        let scale = mod_inv(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mod_mul(x, scale, p)).collect();

        // χ(1)² = |G| / Σ_i ω_i·ω_{i⁻¹}/|C_i|, determined below 2√|G| < p.
        let mut denom = 0u64;
        for i in 0..k {
            let term = mod_mul(omega[i], omega[inverse_class[i]], p);
            denom = mod_add(denom, mod_mul(term, mod_inv(class_sizes[i] % p, p), p), p);
        }
        let d_squared = mod_mul(order % p, mod_inv(denom, p), p);
        let degree = (1..=isqrt(order))
            .find(|&d| mod_mul(d % p, d % p, p) == d_squared)
            .ok_or(CharError::Internal("no integral character degree"))?;
        degree_sum += degree * degree;

        let chi_mod: Vec<u64> = (0..k)
            .map(|i| {
                let val = mod_mul(degree % p, omega[i], p);
                mod_mul(val, mod_inv(class_sizes[i] % p, p), p)
            })
            .collect();

        rows.push(lift_row(
            group,
            &chi_mod,
            &power_classes,
            degree,
            exponent,
            p,
            z,
        )?);
    }
    if degree_sum != order {
        return Err(CharError::Internal("degree squares do not sum to |G|"));
    }
    Ok(rows)
}

/// Recovers the exact cyclotomic values of one irreducible from its values
/// mod p, by inverting the discrete Fourier sum over each cyclic subgroup.
fn lift_row(
    group: &Arc<FiniteGroup>,
    chi_mod: &[u64],
    power_classes: &[Vec<usize>],
    degree: u64,
    exponent: u64,
    p: u64,
    z: u64,
) -> Result<Vec<Cyclotomic>, CharError> {
    let k = chi_mod.len();
    let mut values = Vec::with_capacity(k);
    for i in 0..k {
        let n = power_classes[i].len() as u64;
        let zeta = mod_pow(z, (p - 1) / n, p);
        let zeta_inv = mod_inv(zeta, p);
        let n_inv = mod_inv(n % p, p);
        let mut terms: Vec<(i64, Rational)> = Vec::new();
        let mut total = 0u64;
        for l in 0..n {
            let mut sum = 0u64;
            let mut zpow = 1u64; // ζ^{−l·s}
            let step = mod_pow(zeta_inv, l, p);
            for s in 0..n {
                sum = mod_add(sum, mod_mul(chi_mod[power_classes[i][s as usize]], zpow, p), p);
                zpow = mod_mul(zpow, step, p);
            }
            let mult = mod_mul(n_inv, sum, p);
            // Root-of-unity multiplicities are bounded by the degree < p.
            if mult > degree {
                return Err(CharError::Internal("eigenvalue multiplicity out of range"));
            }
            total += mult;
            if mult > 0 {
                terms.push((
                    (l as i64) * ((exponent / n) as i64),
                    Rational::from(super::cyclotomic::Int::from(mult)),
                ));
            }
        }
        if total != degree {
            return Err(CharError::Internal("multiplicities do not sum to the degree"));
        }
        values.push(Cyclotomic::from_terms(exponent as u32, &terms));
    }
    let _ = group;
    Ok(values)
}

/// `M_i[j][l] = #{(x, y) ∈ C_i × C_j : x·y = z_l}` for a fixed `z_l ∈ C_l`.
fn structure_matrices(group: &Arc<FiniteGroup>, p: u64) -> Vec<Vec<Vec<u64>>> {
    let k = group.class_count();
    let mut mats = vec![vec![vec![0u64; k]; k]; k];
    for i in 0..k {
        let members: Vec<usize> = group.classes()[i].members.clone();
        for l in 0..k {
            let z = group.classes()[l].representative;
            for &x in &members {
                let y = group.multiply(group.inverse_of(x), z);
                let j = group.class_of(y);
                mats[i][j][l] = mod_add(mats[i][j][l], 1, p);
            }
        }
    }
    mats
}

/// Simultaneous eigenvectors of the commuting matrices, by refining the full
/// space into eigenspaces one matrix at a time.
fn common_eigenvectors(mats: &[Vec<Vec<u64>>], p: u64) -> Result<Vec<Vec<u64>>, CharError> {
    let k = mats.len();
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let mut spaces = vec![identity];
    for mat in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
            } else {
                next.extend(split_space(&space, mat, p)?);
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return Err(CharError::Internal("common eigenspace of dimension > 1"));
    }
    Ok(spaces.into_iter().map(|mut s| s.pop().expect("one vector")).collect())
}

/// Splits an invariant subspace into the eigenspaces of `mat` restricted to it.
fn split_space(
    basis: &[Vec<u64>],
    mat: &[Vec<u64>],
    p: u64,
) -> Result<Vec<Vec<Vec<u64>>>, CharError> {
    let m = basis.len();
    let k = basis[0].len();
    let images: Vec<Vec<u64>> = basis
        .iter()
        .map(|b| {
            (0..k)
                .map(|j| {
                    let mut acc = 0u64;
                    for (l, &bl) in b.iter().enumerate() {
                        acc = mod_add(acc, mod_mul(mat[j][l], bl, p), p);
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let restriction = express_in_basis(basis, &images, p)
        .ok_or(CharError::Internal("subspace is not invariant"))?;
    // Eigenvectors of the restriction, transposed to act on coefficients.
    let mut rt = vec![vec![0u64; m]; m];
    for j in 0..m {
        for s in 0..m {
            rt[s][j] = restriction[j][s];
        }
    }
    let mut pieces = Vec::new();
    let mut found = 0;
    for lambda in 0..p {
        let mut shifted = rt.clone();
        for i in 0..m {
            shifted[i][i] = mod_sub(shifted[i][i], lambda, p);
        }
        let kernel = nullspace(&shifted, p);
        if kernel.is_empty() {
            continue;
        }
        found += kernel.len();
        let vectors: Vec<Vec<u64>> = kernel
            .iter()
            .map(|c| {
                (0..k)
                    .map(|col| {
                        let mut acc = 0u64;
                        for (j, &cj) in c.iter().enumerate() {
                            acc = mod_add(acc, mod_mul(cj, basis[j][col], p), p);
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        pieces.push(vectors);
        if found == m {
            break;
        }
    }
    if found != m {
        return Err(CharError::Internal("restriction is not diagonalisable"));
    }
    Ok(pieces)
}

/// Writes each of `vectors` in the given basis; `None` if any lies outside.
fn express_in_basis(basis: &[Vec<u64>], vectors: &[Vec<u64>], p: u64) -> Option<Vec<Vec<u64>>> {
    let m = basis.len();
    let k = basis[0].len();
    let t = vectors.len();
    // Augmented system: columns are basis vectors, then the targets.
    let mut aug = vec![vec![0u64; m + t]; k];
    for (j, b) in basis.iter().enumerate() {
        for row in 0..k {
            aug[row][j] = b[row];
        }
    }
    for (j, v) in vectors.iter().enumerate() {
        for row in 0..k {
            aug[row][m + j] = v[row];
        }
    }
    let mut pivot_rows = Vec::new();
    let mut r = 0;
    for col in 0..m {
        let Some(src) = (r..k).find(|&row| aug[row][col] != 0) else {
            return None; // basis not independent
        };
        aug.swap(r, src);
        let inv = mod_inv(aug[r][col], p);
        for c in col..m + t {
            aug[r][c] = mod_mul(aug[r][c], inv, p);
        }
        for row in 0..k {
            if row != r && aug[row][col] != 0 {
                let f = aug[row][col];
                for c in col..m + t {
                    let delta = mod_mul(f, aug[r][c], p);
                    aug[row][c] = mod_sub(aug[row][c], delta, p);
                }
            }
        }
        pivot_rows.push(r);
        r += 1;
    }
    // Rows below the pivots must vanish on the targets.
    for row in r..k {
        for c in m..m + t {
            if aug[row][c] != 0 {
                return None;
            }
        }
    }
    let mut coeffs = vec![vec![0u64; m]; t];
    for (j, coeff) in coeffs.iter_mut().enumerate() {
        for (col, &pr) in pivot_rows.iter().enumerate() {
            coeff[col] = aug[pr][m + j];
        }
    }
    Some(coeffs)
}

/// Basis of the kernel of a square matrix mod p.
fn nullspace(mat: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = mat.len();
    let mut a: Vec<Vec<u64>> = mat.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut r = 0;
    for col in 0..n {
        let Some(src) = (r..n).find(|&row| a[row][col] != 0) else {
            continue;
        };
        a.swap(r, src);
        let inv = mod_inv(a[r][col], p);
        for c in col..n {
            a[r][c] = mod_mul(a[r][c], inv, p);
        }
        for row in 0..n {
            if row != r && a[row][col] != 0 {
                let f = a[row][col];
                for c in col..n {
                    let delta = mod_mul(f, a[r][c], p);
                    a[row][c] = mod_sub(a[row][c], delta, p);
                }
            }
        }
        pivot_col_of_row.push(col);
        r += 1;
    }
    let pivot_cols: alloc::collections::BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![0u64; n];
        v[free] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = mod_sub(0, a[row][free], p);
        }
        basis.push(v);
    }
    basis
}

fn find_prime(exponent: u64, order: u64) -> Result<u64, CharError> {
    let mut p = exponent + 1;
    let mut steps = 0u32;
    loop {
        if (p as u128) * (p as u128) > (4 * order) as u128 && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
        steps += 1;
        if steps > 100_000 {
            return Err(CharError::NoSuitablePrime { exponent });
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut n = p - 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            factors.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        factors.push(n);
    }
    (2..p)
        .find(|&z| factors.iter().all(|&q| mod_pow(z, (p - 1) / q, p) != 1))
        .expect("F_p has a primitive root")
}

fn isqrt(n: u64) -> u64 {
    let mut r = 0u64;
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

fn mod_add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn mod_sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn mod_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mod_mul(acc, base, p);
        }
        base = mod_mul(base, base, p);
        exp >>= 1;
    }
    acc
}

fn mod_inv(a: u64, p: u64) -> u64 {
    mod_pow(a, p - 2, p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grpchar::perm::Permutation;

    #[test]
    fn primes_and_roots() {
        assert_eq!(find_prime(2, 2).unwrap(), 3);
        assert_eq!(find_prime(6, 6).unwrap(), 7);
        // S_4: exponent 12, |G| = 24, need p > 9.8 with p ≡ 1 (mod 12).
        assert_eq!(find_prime(12, 24).unwrap(), 13);
        let p = 13;
        let z = primitive_root(p);
        let mut seen = alloc::collections::BTreeSet::new();
        let mut acc = 1u64;
        for _ in 0..p - 1 {
            acc = mod_mul(acc, z, p);
            seen.insert(acc);
        }
        assert_eq!(seen.len(), (p - 1) as usize);
    }

    #[test]
    fn z3_table_is_roots_of_unity() {
        let g = FiniteGroup::generate(3, &[Permutation::cycle(3)], 100).unwrap();
        let rows = character_table(&g).unwrap();
        assert_eq!(rows.len(), 3);
        for row in &rows {
            assert_eq!(row[0], Cyclotomic::one());
            // Each value is a cube root of unity.
            for v in row {
                assert_eq!(v.pow(3), Cyclotomic::one());
            }
        }
    }
}
