//! Exact elements of cyclotomic number fields.
//!
//! An element of the `m`-th cyclotomic field is stored as a rational
//! coefficient vector in the power basis `1, ζ, …, ζ^{φ(m)−1}` reduced modulo
//! the `m`-th cyclotomic polynomial. Arithmetic between fields with different
//! conductors lifts both operands into the field indexed by the lcm.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_traits::{One, Signed, Zero};

pub type Int = num_bigint::BigInt;
pub type Rational = num_rational::Ratio<Int>;

/// Parses a rational from the `"p"` / `"p/q"` wire format.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|_| alloc::format!("invalid rational numerator: {s:?}"))?;
    let den: Int = den
        .parse()
        .map_err(|_| alloc::format!("invalid rational denominator: {s:?}"))?;
    if den.is_zero() {
        return Err(alloc::format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Formats a rational in the `"p"` / `"p/q"` wire format.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        alloc::format!("{}", r.numer())
    } else {
        alloc::format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn euler_phi(m: u32) -> u32 {
    let mut n = m;
    let mut result = m;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn divisors(m: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d != m / d {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd_u32(a, b) * b
}

pub fn gcd_u32(a: u32, b: u32) -> u32 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Coefficients (ascending, monic) of the `m`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(m: u32) -> Vec<Int> {
    let mut memo: BTreeMap<u32, Vec<Int>> = BTreeMap::new();
    cyclo_rec(m, &mut memo)
}

fn cyclo_rec(m: u32, memo: &mut BTreeMap<u32, Vec<Int>>) -> Vec<Int> {
    if let Some(p) = memo.get(&m) {
        return p.clone();
    }
    // Φ_m = (x^m − 1) / Π_{d|m, d<m} Φ_d
    let mut num = vec![Int::zero(); m as usize + 1];
    num[0] = -Int::one();
    num[m as usize] = Int::one();
    for d in divisors(m) {
        if d < m {
            let phi_d = cyclo_rec(d, memo);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    memo.insert(m, num.clone());
    num
}

/// Exact division of integer polynomials with a monic divisor.
fn poly_div_exact(num: &[Int], den: &[Int]) -> Vec<Int> {
    let dn = num.len() - 1;
    let dd = den.len() - 1;
    debug_assert!(den[dd].is_one());
    let mut rem: Vec<Int> = num.to_vec();
    let mut quot = vec![Int::zero(); dn - dd + 1];
    for i in (dd..=dn).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, dc) in den.iter().enumerate() {
            let delta = &c * dc;
            rem[i - dd + j] -= delta;
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

/// An exact element of the `conductor`-th cyclotomic field.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic {
            conductor: 1,
            coeffs: vec![r],
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from(Int::from(n)))
    }

    pub fn from_bigint(n: Int) -> Self {
        Self::from_rational(Rational::from(n))
    }

    /// ζ_m^k.
    pub fn root_of_unity(m: u32, k: i64) -> Self {
        assert!(m > 0, "conductor must be positive");
        Self::from_terms(m, &[(k, Rational::one())])
    }

    /// Builds Σ cᵢ·ζ_m^{eᵢ} and reduces into the power basis.
    pub fn from_terms(m: u32, terms: &[(i64, Rational)]) -> Self {
        assert!(m > 0, "conductor must be positive");
        let mut dense = vec![Rational::zero(); m as usize];
        for (exp, coeff) in terms {
            let e = exp.rem_euclid(m as i64) as usize;
            dense[e] = &dense[e] + coeff;
        }
        let coeffs = reduce_mod_cyclotomic(dense, m);
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Power-basis coefficients, length `φ(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn as_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The same element viewed in the `m2`-th cyclotomic field (`conductor | m2`).
    pub fn lift_to(&self, m2: u32) -> Self {
        assert!(
            m2 % self.conductor == 0,
            "cannot lift conductor {} into {}",
            self.conductor,
            m2
        );
        if m2 == self.conductor {
            return self.clone();
        }
        let step = (m2 / self.conductor) as i64;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as i64 * step, c.clone()))
            .collect();
        Self::from_terms(m2, &terms)
    }

    fn unified(&self, other: &Self) -> (Self, Self, u32) {
        let m = lcm_u32(self.conductor, other.conductor);
        (self.lift_to(m), other.lift_to(m), m)
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.conductor == other.conductor {
            let coeffs = self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .map(|(a, b)| a + b)
                .collect();
            return Cyclotomic {
                conductor: self.conductor,
                coeffs,
            };
        }
        let (a, b, _) = self.unified(other);
        a.add(&b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Rational operands need no polynomial reduction.
        if let Some(r) = self.as_rational() {
            return other.scale(&r);
        }
        if let Some(r) = other.as_rational() {
            return self.scale(&r);
        }
        let (a, b, m) = self.unified(other);
        let mut prod = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                prod[i + j] = &prod[i + j] + &(ca * cb);
            }
        }
        // Degrees may reach 2φ(m)−2 < 2m; fold exponents ≥ m via ζ^m = 1.
        let mut dense = vec![Rational::zero(); m as usize];
        for (e, c) in prod.into_iter().enumerate() {
            if !c.is_zero() {
                let idx = e % m as usize;
                dense[idx] = &dense[idx] + &c;
            }
        }
        let coeffs = reduce_mod_cyclotomic(dense, m);
        Cyclotomic {
            conductor: m,
            coeffs,
        }
    }

    /// Complex conjugation, ζ ↦ ζ⁻¹.
    pub fn conj(&self) -> Self {
        if self.is_rational() || self.conductor <= 2 {
            return self.clone();
        }
        let m = self.conductor;
        let terms: Vec<(i64, Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (-(i as i64), c.clone()))
            .collect();
        Self::from_terms(m, &terms)
    }

    pub fn pow(&self, k: u64) -> Self {
        let mut acc = Cyclotomic::one();
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Total order used only for deterministic sorting of output.
    pub fn sort_cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.unified(other);
        for (x, y) in a.coeffs.iter().zip(b.coeffs.iter()) {
            match x.cmp(y) {
                Ordering::Equal => {}
                ord => return ord,
            }
        }
        Ordering::Equal
    }
}

/// Dense coefficient vector of length `m` (exponents already folded mod `m`)
/// reduced modulo Φ_m into the power basis of length `φ(m)`.
fn reduce_mod_cyclotomic(mut dense: Vec<Rational>, m: u32) -> Vec<Rational> {
    let phi = euler_phi(m) as usize;
    let modulus = cyclotomic_polynomial(m);
    let deg = modulus.len() - 1;
    debug_assert_eq!(deg, phi);
    for i in (deg..dense.len()).rev() {
        if dense[i].is_zero() {
            continue;
        }
        let c = dense[i].clone();
        for (j, mc) in modulus.iter().enumerate() {
            if mc.is_zero() {
                continue;
            }
            let delta = &c * &Rational::from(mc.clone());
            dense[i - deg + j] = &dense[i - deg + j] - &delta;
        }
    }
    dense.truncate(deg.max(1));
    while dense.len() < phi {
        dense.push(Rational::zero());
    }
    dense
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = self.unified(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", format_rational(&r));
        }
        let m = self.conductor;
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if i == 0 {
                write!(f, "{}", format_rational(&mag))?;
            } else {
                if !mag.is_one() {
                    write!(f, "{}*", format_rational(&mag))?;
                }
                if i == 1 {
                    write!(f, "z{m}")?;
                } else {
                    write!(f, "z{m}^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl core::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::add(self, rhs)
    }
}

impl core::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::sub(self, rhs)
    }
}

impl core::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::mul(self, rhs)
    }
}

impl core::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> Rational {
        Rational::from(Int::from(n))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(
            cyclotomic_polynomial(1),
            vec![Int::from(-1), Int::from(1)]
        );
        assert_eq!(cyclotomic_polynomial(2), vec![Int::from(1), Int::from(1)]);
        // Φ_6 = x² − x + 1
        assert_eq!(
            cyclotomic_polynomial(6),
            vec![Int::from(1), Int::from(-1), Int::from(1)]
        );
        // Φ_12 = x⁴ − x² + 1
        assert_eq!(
            cyclotomic_polynomial(12),
            vec![
                Int::from(1),
                Int::from(0),
                Int::from(-1),
                Int::from(0),
                Int::from(1)
            ]
        );
    }

    #[test]
    fn roots_of_unity_sum_to_zero() {
        for m in [2u32, 3, 4, 5, 6, 8, 12] {
            let mut sum = Cyclotomic::zero();
            for k in 0..m {
                sum = sum.add(&Cyclotomic::root_of_unity(m, k as i64));
            }
            assert!(sum.is_zero(), "sum of {m}-th roots of unity");
        }
    }

    #[test]
    fn multiplication_matches_exponent_addition() {
        let z = Cyclotomic::root_of_unity(5, 1);
        let z3 = Cyclotomic::root_of_unity(5, 3);
        assert_eq!(z.pow(3), z3);
        assert_eq!(z.pow(5), Cyclotomic::one());
        assert_eq!(z.mul(&z.conj()), Cyclotomic::one());
    }

    #[test]
    fn cross_conductor_equality() {
        // ζ_6 − 1 has conductor 6; ζ_3 lives in conductor 3 but ζ_6² = ζ_3.
        let z6 = Cyclotomic::root_of_unity(6, 2);
        let z3 = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(z6, z3);
        assert_eq!(
            Cyclotomic::root_of_unity(4, 2),
            Cyclotomic::from_int(-1)
        );
    }

    #[test]
    fn conjugation_fixes_rationals() {
        let r = Cyclotomic::from_rational(Rational::new(Int::from(3), Int::from(7)));
        assert_eq!(r.conj(), r);
        let z = Cyclotomic::root_of_unity(8, 1);
        assert_eq!(z.conj(), Cyclotomic::root_of_unity(8, 7));
    }

    #[test]
    fn rational_wire_format() {
        assert_eq!(parse_rational("3/4").unwrap(), Rational::new(Int::from(3), Int::from(4)));
        assert_eq!(parse_rational("-2").unwrap(), rat(-2));
        assert!(parse_rational("1/0").is_err());
        assert_eq!(format_rational(&Rational::new(Int::from(-1), Int::from(2))), "-1/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }
}
