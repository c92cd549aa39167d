//! Exact coefficients: rational functions in a formal indeterminate `q`
//! with integer coefficients, kept in a canonical reduced form.
//!
//! A [`Scalar`] is stored as `numerator / denominator` where both are
//! integer polynomials, their gcd over `Q[q]` is 1, their integer contents
//! are coprime and the denominator has a positive leading coefficient.
//! Structural equality is therefore mathematical equality.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Dense integer polynomial in `q`, coefficients indexed by ascending degree.
///
/// The highest stored coefficient is never zero; the zero polynomial is the
/// empty vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Poly::from_coeffs(vec![c.into()])
    }

    /// `c * q^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Poly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest power of `q` with a nonzero coefficient.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn is_monomial(&self) -> bool {
        match self.order() {
            Some(k) => k + 1 == self.coeffs.len(),
            None => false,
        }
    }

    /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    fn div_scalar_exact(&self, c: &BigInt) -> Poly {
        if c.is_one() {
            return self.clone();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / c).collect(),
        }
    }

    fn shift_down(&self, k: usize) -> Poly {
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    fn shift_up(&self, k: usize) -> Poly {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive_part(&self) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Pseudo-remainder of `self` by `d` (`lc(d)^k * self = Q d + R`).
    fn pseudo_rem(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("pseudo_rem by zero polynomial");
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            if t.is_zero() {
                r.pop();
                continue;
            }
            for c in r.iter_mut() {
                *c *= &lc;
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &t * dc;
            }
            r.pop();
        }
        Poly::from_coeffs(r)
    }

    /// Exact division; panics if `d` does not divide `self` over `Z[q]`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let dd = d.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Poly::zero();
        }
        if dd == 0 {
            return self.div_scalar_exact(&d.coeffs[0]);
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let n = r.len();
        assert!(n > dd, "inexact polynomial division");
        let mut quot = vec![BigInt::zero(); n - dd];
        for top in (dd..n).rev() {
            let t = &r[top];
            if t.is_zero() {
                continue;
            }
            let (qc, rem) = t.div_rem(lc);
            assert!(rem.is_zero(), "inexact polynomial division");
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] -= &qc * dc;
            }
            quot[shift] = qc;
        }
        assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
        Poly::from_coeffs(quot)
    }

    /// Greatest common divisor over `Z[q]`, normalized to a positive leading
    /// coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        if self.is_zero() {
            return other.abs_lc();
        }
        if other.is_zero() {
            return self.abs_lc();
        }
        let c = self.content().gcd(&other.content());
        if self.is_constant() || other.is_constant() {
            return Poly::constant(c);
        }
        // q is irreducible: split off the common power of q first.
        let (oa, ob) = (self.order().unwrap(), other.order().unwrap());
        let k = oa.min(ob);
        let a = self.shift_down(oa);
        let b = other.shift_down(ob);
        let core = if a.is_constant() || b.is_constant() {
            Poly::one()
        } else if a == b {
            a.primitive_part()
        } else {
            let (mut p, mut r) = if a.coeffs.len() >= b.coeffs.len() {
                (a.primitive_part(), b.primitive_part())
            } else {
                (b.primitive_part(), a.primitive_part())
            };
            while !r.is_zero() {
                let rem = p.pseudo_rem(&r);
                p = r;
                r = rem.primitive_part();
            }
            p.primitive_part()
        };
        core.scale(&c).shift_up(k)
    }

    fn abs_lc(&self) -> Poly {
        if self.leading().is_some_and(|l| l.is_negative()) {
            -self
        } else {
            self.clone()
        }
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

/// Ascending-degree rendering: `1+q+q^2`, `-2q^3`, `0`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    write!(f, "q")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.coeffs.iter_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(n, BigInt::zero());
        for (c, s) in coeffs.iter_mut().zip(&rhs.coeffs) {
            *c -= s;
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

/// Exact element of `Q(q)` in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Scalar::from_poly(Poly::constant(n))
    }

    pub fn from_poly(p: Poly) -> Self {
        Scalar {
            num: p,
            den: Poly::one(),
        }
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        if k >= 0 {
            Scalar::from_poly(Poly::monomial(1, k as usize))
        } else {
            Scalar {
                num: Poly::one(),
                den: Poly::monomial(1, k.unsigned_abs() as usize),
            }
        }
    }

    /// `c * q^k` with `k >= 0`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        Scalar::from_poly(Poly::monomial(c, k))
    }

    /// Canonical form of `num / den`.
    pub fn normalize(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Scalar::zero());
        }
        let (mut num, mut den) = if den.is_one() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g), den.div_exact(&g))
            }
        };
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Scalar { num, den })
    }

    fn from_parts_unchecked(num: Poly, den: Poly) -> Self {
        Scalar::normalize(num, den).expect("nonzero denominator")
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// Integer value, if this scalar is a constant integer.
    pub fn as_integer(&self) -> Option<BigInt> {
        if self.den.is_one() && self.num.is_constant() {
            Some(self.num.coeffs.first().cloned().unwrap_or_default())
        } else {
            None
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut num, mut den) = (self.den.clone(), self.num.clone());
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Scalar { num, den })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.inv()?)
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let e = e.unsigned_abs() as u32;
        Ok(Scalar {
            num: base.num.pow(e),
            den: base.den.pow(e),
        })
    }

    /// Exact value at a rational point `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            let factor = format!(
                "{}",
                Poly::from_coeffs(vec![-q0.numer().clone(), q0.denom().clone()])
            );
            return Err(Error::VanishingDenominator {
                factor,
                denominator: self.den.to_string(),
                at: q0.to_string(),
            });
        }
        Ok(self.num.eval(q0) / d)
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`, with `[0]_q = 1`.
pub fn qint(n: u32) -> Scalar {
    if n == 0 {
        return Scalar::one();
    }
    Scalar::from_poly(Poly::from_coeffs(vec![BigInt::one(); n as usize]))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn qfactorial(n: u32) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| &acc * &qint(k))
}

/// `[n]_s = 1 + s + ... + s^(n-1)` for an arbitrary scalar `s`, `[0]_s = 1`.
pub fn qint_at(n: u32, s: &Scalar) -> Scalar {
    if n == 0 {
        return Scalar::one();
    }
    let mut acc = Scalar::zero();
    let mut p = Scalar::one();
    for _ in 0..n {
        acc += &p;
        p = &p * s;
    }
    acc
}

pub fn qfactorial_at(n: u32, s: &Scalar) -> Scalar {
    (1..=n).fold(Scalar::one(), |acc, k| &acc * &qint_at(k, s))
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Poly> for Scalar {
    fn from(p: Poly) -> Self {
        Scalar::from_poly(p)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Scalar({self})")
    }
}

/// `num` when the denominator is 1, otherwise `(num)/(den)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Total order on canonical forms, used only for deterministic output.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        fn key(p: &Poly) -> (usize, &[BigInt]) {
            (p.coeffs.len(), &p.coeffs)
        }
        key(&self.num)
            .cmp(&key(&other.num))
            .then_with(|| key(&self.den).cmp(&key(&other.den)))
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num + &rhs.num);
        }
        if self.den == rhs.den {
            return Scalar::from_parts_unchecked(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let (b, d) = if g.is_one() {
            (self.den.clone(), rhs.den.clone())
        } else {
            (self.den.div_exact(&g), rhs.den.div_exact(&g))
        };
        let num = &(&self.num * &d) + &(&rhs.num * &b);
        let den = &b * &rhs.den;
        Scalar::from_parts_unchecked(num, den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        // Cross-cancel so the product is already reduced.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let a = self.num.div_exact(&g1);
        let d = rhs.den.div_exact(&g1);
        let c = rhs.num.div_exact(&g2);
        let b = self.den.div_exact(&g2);
        let mut num = &a * &c;
        let mut den = &b * &d;
        if den.leading().unwrap().is_negative() {
            num = -num;
            den = -den;
        }
        Scalar { num, den }
    }
}

/// Panics on division by zero; see [`Scalar::checked_div`].
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64s(c)
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (q^2 - 1) / (q - 1) = q + 1
        let s = Scalar::normalize(p(&[-1, 0, 1]), p(&[-1, 1])).unwrap();
        assert_eq!(s.numerator(), &p(&[1, 1]));
        assert!(s.denominator().is_one());
    }

    #[test]
    fn normalize_zero_and_sign() {
        let z = Scalar::normalize(Poly::zero(), p(&[0, 1])).unwrap();
        assert_eq!(z, Scalar::zero());
        assert!(z.denominator().is_one());
        // 2q / -2 = -q
        let s = Scalar::normalize(p(&[0, 2]), p(&[-2])).unwrap();
        assert_eq!(s.numerator(), &p(&[0, -1]));
        assert!(s.denominator().is_one());
        // 2q / 4 = q / 2 keeps an integer denominator
        let h = Scalar::normalize(p(&[0, 2]), p(&[4])).unwrap();
        assert_eq!(h.numerator(), &p(&[0, 1]));
        assert_eq!(h.denominator(), &p(&[2]));
    }

    #[test]
    fn normalize_rejects_zero_denominator() {
        let err = Scalar::normalize(p(&[1]), Poly::zero()).unwrap_err();
        assert_eq!(err.to_string(), "division by zero polynomial");
    }

    #[test]
    fn normalize_is_idempotent() {
        let s = Scalar::normalize(p(&[3, 0, -3]), p(&[6, -6])).unwrap();
        let t = Scalar::normalize(s.numerator().clone(), s.denominator().clone()).unwrap();
        assert_eq!(s, t);
        // (3 - 3q^2) / (6 - 6q) = (1 + q) / 2
        assert_eq!(s.numerator(), &p(&[1, 1]));
        assert_eq!(s.denominator(), &p(&[2]));
    }

    #[test]
    fn q_integers() {
        assert_eq!(qint(0), Scalar::one());
        assert_eq!(qint(1), Scalar::one());
        assert_eq!(qint(3), Scalar::from_poly(p(&[1, 1, 1])));
        for n in 1..12 {
            let lhs = qint(n).numerator() * &p(&[1, -1]);
            assert_eq!(lhs, &Poly::one() - &Poly::monomial(1, n as usize));
        }
    }

    #[test]
    fn q_factorials() {
        assert_eq!(qfactorial(0), Scalar::one());
        assert_eq!(qfactorial(2), Scalar::from_poly(p(&[1, 1])));
        // (1+q)(1+q+q^2) = 1 + 2q + 2q^2 + q^3
        assert_eq!(qfactorial(3), Scalar::from_poly(p(&[1, 2, 2, 1])));
        for n in 1..10 {
            assert_eq!(qfactorial(n), &qfactorial(n - 1) * &qint(n));
        }
    }

    #[test]
    fn qint_at_q_matches_qint() {
        for n in 0..8 {
            assert_eq!(qint_at(n, &Scalar::q()), qint(n));
        }
        // [2]_{q^2} = 1 + q^2
        assert_eq!(qint_at(2, &Scalar::q_pow(2)), Scalar::from_poly(p(&[1, 0, 1])));
    }

    #[test]
    fn gcd_examples() {
        let a = &p(&[-1, 0, 1]) * &p(&[0, 0, 2]);
        let b = &p(&[1, 1]) * &p(&[0, 4]);
        assert_eq!(a.gcd(&b), &p(&[1, 1]) * &p(&[0, 2]));
        assert_eq!(p(&[6]).gcd(&p(&[0, 4])), p(&[2]));
        assert_eq!(Poly::zero().gcd(&p(&[-3, -1])), p(&[3, 1]));
    }

    #[test]
    fn field_inverse() {
        let a = Scalar::normalize(p(&[1, 2, 3]), p(&[1, -1, 0, 1])).unwrap();
        assert_eq!(&a * &a.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_err());
        assert_eq!(Scalar::q_pow(-2), Scalar::q().pow(-2).unwrap());
    }

    #[test]
    fn addition_over_common_denominators() {
        // 1/(1-q) - q/(1-q) = 1
        let d = p(&[1, -1]);
        let a = Scalar::normalize(Poly::one(), d.clone()).unwrap();
        let b = Scalar::normalize(p(&[0, 1]), d).unwrap();
        assert_eq!(&a - &b, Scalar::one());
        // 1/(1-q) + 1/(1+q) = 2/(1-q^2)
        let c = Scalar::normalize(Poly::one(), p(&[1, 1])).unwrap();
        let expect = Scalar::normalize(p(&[2]), p(&[1, 0, -1])).unwrap();
        assert_eq!(&a + &c, expect);
    }

    #[test]
    fn evaluation() {
        let s = Scalar::normalize(p(&[1, 1]), p(&[1, 0, -1])).unwrap(); // 1/(1-q)
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(s.eval(&half).unwrap(), BigRational::from_integer(2.into()));
        let err = s.eval(&BigRational::one()).unwrap_err();
        assert!(err.to_string().contains("-1+q"), "{err}");
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_poly(p(&[1, 1])).to_string(), "1+q");
        assert_eq!(Scalar::from_poly(p(&[0, -2, 0, 1])).to_string(), "-2q+q^3");
        // canonical denominators have a positive top coefficient
        let s = Scalar::normalize(p(&[1, 1]), p(&[1, 0, -1])).unwrap();
        assert_eq!(s.to_string(), "(-1)/(-1+q)");
    }
}
