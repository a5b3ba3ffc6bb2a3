//! Elements of the cyclotomic field Q(ζ_N).
//!
//! An element is stored in the power basis ζ⁰ … ζ^(φ(N)−1). Every power ζ^k is
//! first reduced with ζ^N = 1 and then against the cyclotomic polynomial Φ_N,
//! so two elements are equal exactly when their coefficient vectors agree.
//! The external form pads this vector with zeros up to length N.

use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{Mutex, OnceLock};

use super::{ExactError, Rational};

/// Reduction data for one conductor, shared by all its elements.
pub struct CycloField {
    conductor: u32,
    degree: usize,
    /// Canonical coefficients of ζ^k for k in 0..N.
    powers: Vec<Vec<i64>>,
    /// Reverse lookup from a canonical coefficient vector to its exponent.
    root_index: HashMap<Vec<i64>, u32>,
}

impl CycloField {
    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Degree φ(N) of the field over Q.
    pub fn degree(&self) -> usize {
        self.degree
    }

    fn build(n: u32) -> CycloField {
        let phi_poly = cyclotomic_polynomial(n);
        let degree = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ: shift up, then fold the top term back using Φ_N (monic).
            let top = cur[degree - 1];
            for i in (1..degree).rev() {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for i in 0..degree {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
        let root_index = powers
            .iter()
            .enumerate()
            .map(|(k, v)| (v.clone(), k as u32))
            .collect();
        CycloField {
            conductor: n,
            degree,
            powers,
            root_index,
        }
    }
}

/// The shared reduction table for conductor `n`.
pub fn field(n: u32) -> &'static CycloField {
    thread_local! {
        static LAST: std::cell::Cell<Option<&'static CycloField>> = const { std::cell::Cell::new(None) };
    }
    if let Some(f) = LAST.with(|c| c.get()).filter(|f| f.conductor == n) {
        return f;
    }
    let f = shared_field(n);
    LAST.with(|c| c.set(Some(f)));
    f
}

fn shared_field(n: u32) -> &'static CycloField {
    assert!(n > 0, "conductor must be positive");
    static FIELDS: OnceLock<Mutex<HashMap<u32, &'static CycloField>>> = OnceLock::new();
    let map = FIELDS.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = map.lock().expect("field table poisoned");
    guard
        .entry(n)
        .or_insert_with(|| Box::leak(Box::new(CycloField::build(n))))
}

/// Integer coefficients (low degree first) of the N-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = exact_divide(&num, &cyclotomic_polynomial(d));
        }
    }
    num
}

fn exact_divide(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let qn = rem.len() - 1 - dn;
    let mut q = vec![0i64; qn + 1];
    for i in (0..=qn).rev() {
        let c = rem[i + dn];
        q[i] = c;
        if c != 0 {
            for (j, &dj) in den.iter().enumerate() {
                rem[i + j] -= c * dj;
            }
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    q
}

/// An exact element of Q(ζ_N).
#[derive(Clone)]
pub struct Cyclotomic {
    field: &'static CycloField,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.conductor == other.field.conductor && self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl Hash for Cyclotomic {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.field.conductor.hash(state);
        self.coeffs.hash(state);
    }
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let f = field(n);
        Cyclotomic {
            field: f,
            coeffs: vec![Rational::ZERO; f.degree],
        }
    }

    pub fn one(n: u32) -> Self {
        Self::from_rational(n, Rational::ONE)
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, Rational::from_int(v))
    }

    pub fn from_rational(n: u32, v: Rational) -> Self {
        let mut c = Self::zero(n);
        c.coeffs[0] = v;
        c
    }

    /// ζ_N^k, for any integer k.
    pub fn root(n: u32, k: i64) -> Self {
        let f = field(n);
        let e = k.rem_euclid(n as i64) as usize;
        Cyclotomic {
            field: f,
            coeffs: f.powers[e].iter().map(|&c| Rational::from_int(c)).collect(),
        }
    }

    /// Reduces an arbitrary vector of coefficients of ζ⁰ … ζ^(len−1).
    pub fn from_power_coeffs(n: u32, coeffs: &[Rational]) -> Self {
        let f = field(n);
        let mut out = vec![Rational::ZERO; f.degree];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            add_power(&mut out, f, k % n as usize, c);
        }
        Cyclotomic { field: f, coeffs: out }
    }

    pub fn conductor(&self) -> u32 {
        self.field.conductor
    }

    /// Canonical coefficients, length φ(N).
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Canonical coefficients padded with zeros to length N.
    pub fn padded_coeffs(&self) -> Vec<Rational> {
        let mut v = self.coeffs.clone();
        v.resize(self.field.conductor as usize, Rational::ZERO);
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Rational::is_zero)
    }

    /// The rational value, when the element lies in Q.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Rational::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    /// Returns `k` in 0..N when the element equals ζ_N^k.
    pub fn root_exponent(&self) -> Option<u32> {
        let key: Option<Vec<i64>> = self.coeffs.iter().map(Rational::as_i64).collect();
        key.and_then(|k| self.field.root_index.get(&k).copied())
    }

    /// Whether the element is a root of unity of order dividing N or 2N.
    pub fn is_root_of_unity(&self) -> bool {
        self.root_exponent().is_some() || (-self).root_exponent().is_some()
    }

    fn check_same(&self, other: &Self) -> Result<(), ExactError> {
        if self.field.conductor != other.field.conductor {
            Err(ExactError::ConductorMismatch {
                left: self.field.conductor,
                right: other.field.conductor,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Cyclotomic { field: self.field, coeffs })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, ExactError> {
        self.check_same(other)?;
        let f = self.field;
        if let Some(r) = self.as_rational() {
            return Ok(other.scale(r));
        }
        if let Some(r) = other.as_rational() {
            return Ok(self.scale(r));
        }
        let mut out = vec![Rational::ZERO; f.degree];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                add_power(&mut out, f, (i + j) % f.conductor as usize, &(a * b));
            }
        }
        Ok(Cyclotomic { field: f, coeffs: out })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(self.conductor(), r.recip()?));
        }
        let n = self.conductor();
        if let Some(k) = self.root_exponent() {
            return Ok(Self::root(n, -(k as i64)));
        }
        if let Some(k) = (-self).root_exponent() {
            return Ok(-Self::root(n, -(k as i64)));
        }
        // Solve (multiplication by self) · x = 1 in the power basis.
        let d = self.field.degree;
        let mut cols = Vec::with_capacity(d);
        for j in 0..d {
            cols.push(self.try_mul(&Self::root(n, j as i64))?.coeffs);
        }
        let mut m: Vec<Vec<Rational>> = (0..d)
            .map(|i| {
                let mut row: Vec<Rational> = (0..d).map(|j| cols[j][i].clone()).collect();
                row.push(if i == 0 { Rational::ONE } else { Rational::ZERO });
                row
            })
            .collect();
        for c in 0..d {
            let p = (c..d).find(|&r| !m[r][c].is_zero()).ok_or(ExactError::ZeroInverse)?;
            m.swap(c, p);
            let inv = m[c][c].recip()?;
            for v in m[c].iter_mut() {
                *v = &*v * &inv;
            }
            for r in 0..d {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c].clone();
                    for k in c..=d {
                        let t = &m[c][k] * &f;
                        m[r][k] -= &t;
                    }
                }
            }
        }
        Ok(Cyclotomic {
            field: self.field,
            coeffs: m.into_iter().map(|row| row[d].clone()).collect(),
        })
    }

    /// Re-expresses the element in Q(ζ_M) for a multiple M of the conductor.
    pub fn embed(&self, m: u32) -> Result<Self, ExactError> {
        let n = self.conductor();
        if m == 0 || !m.is_multiple_of(n) {
            return Err(ExactError::BadEmbedding { from: n, to: m });
        }
        let step = (m / n) as usize;
        let f = field(m);
        let mut out = vec![Rational::ZERO; f.degree];
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                add_power(&mut out, f, (k * step) % m as usize, c);
            }
        }
        Ok(Cyclotomic { field: f, coeffs: out })
    }

    /// Integer power (negative exponents invert).
    pub fn pow(&self, e: i64) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.conductor());
        let mut b = base;
        let mut k = e.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &b;
            }
            b = &b * &b;
            k >>= 1;
        }
        Ok(acc)
    }
}

fn add_power(out: &mut [Rational], f: &CycloField, e: usize, c: &Rational) {
    if e < f.degree {
        out[e] += c;
        return;
    }
    for (t, &p) in f.powers[e].iter().enumerate() {
        match p {
            0 => {}
            1 => out[t] += c,
            -1 => out[t] -= c,
            _ => out[t] += &(c * &Rational::from_int(p)),
        }
    }
}

/// Checked product: errors when the conductors differ.
pub fn cyclo_mul(a: &Cyclotomic, b: &Cyclotomic) -> Result<Cyclotomic, ExactError> {
    a.try_mul(b)
}

/// Checked inverse: errors on zero input.
pub fn cyclo_inverse(a: &Cyclotomic) -> Result<Cyclotomic, ExactError> {
    a.inverse()
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.signum() < 0;
            let mag = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "z{n}^{k}")?,
                (_, false) => write!(f, "{mag}*z{n}^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

// Operator forms panic on mismatched conductors; the `try_*` methods report it.
impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_add(rhs).expect("conductor mismatch")
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_add(&-rhs).expect("conductor mismatch")
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'a Cyclotomic) -> Cyclotomic {
        self.try_mul(rhs).expect("conductor mismatch")
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: self.field,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        &self + &rhs
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Cyclotomic) -> Cyclotomic {
        &self - &rhs
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        &self * &rhs
    }
}

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.field.conductor, rhs.field.conductor, "conductor mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        assert_eq!(self.field.conductor, rhs.field.conductor, "conductor mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            if !b.is_zero() {
                *a -= b;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn zeta4_squared_is_minus_one() {
        let z = Cyclotomic::root(4, 1);
        assert_eq!(cyclo_mul(&z, &z).unwrap(), Cyclotomic::from_int(4, -1));
    }

    #[test]
    fn zeta3_times_zeta3_squared_is_one() {
        let a = Cyclotomic::root(3, 1);
        let b = Cyclotomic::root(3, 2);
        assert!(cyclo_mul(&a, &b).unwrap().is_one());
    }

    #[test]
    fn vanishing_sum_of_fifth_roots() {
        let mut s = Cyclotomic::zero(5);
        for k in 0..5 {
            s += &Cyclotomic::root(5, k);
        }
        assert!(s.is_zero());
        assert!(cyclo_mul(&s, &Cyclotomic::root(5, 1)).unwrap().is_zero());
    }

    #[test]
    fn inverses() {
        let two = Cyclotomic::from_int(3, 2);
        assert_eq!(
            cyclo_inverse(&two).unwrap(),
            Cyclotomic::from_rational(3, Rational::from_pair(1, 2).unwrap())
        );
        assert_eq!(cyclo_inverse(&Cyclotomic::root(3, 1)).unwrap(), Cyclotomic::root(3, 2));
        let m1 = Cyclotomic::from_int(7, -1);
        assert_eq!(cyclo_inverse(&m1).unwrap(), m1);
        assert!(cyclo_inverse(&Cyclotomic::zero(5)).is_err());
        let x = &Cyclotomic::from_int(5, 3) + &Cyclotomic::root(5, 2);
        assert!((&x * &cyclo_inverse(&x).unwrap()).is_one());
    }

    #[test]
    fn mismatch_is_an_error() {
        assert!(matches!(
            cyclo_mul(&Cyclotomic::one(3), &Cyclotomic::one(4)),
            Err(ExactError::ConductorMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn embedding_preserves_products() {
        let a = &Cyclotomic::root(3, 1) + &Cyclotomic::from_int(3, 2);
        let b = Cyclotomic::root(3, 2);
        let ab = (&a * &b).embed(6).unwrap();
        let ab2 = &a.embed(6).unwrap() * &b.embed(6).unwrap();
        assert_eq!(ab, ab2);
        assert_eq!(Cyclotomic::root(2, 1).embed(4).unwrap(), Cyclotomic::root(4, 2));
        assert!(a.embed(4).is_err());
    }

    #[test]
    fn root_exponents() {
        for n in 1..13u32 {
            for k in 0..n {
                assert_eq!(Cyclotomic::root(n, k as i64).root_exponent(), Some(k));
            }
        }
    }
}
