//! The exact scalar tower: rationals, Gaussian rationals, and rational
//! quaternions.
//!
//! Rationals embed into Gaussian rationals embed into quaternions; conjugation
//! is an anti-involution and the norm form is anisotropic, so each level is a
//! division algebra. All arithmetic normalizes fractions eagerly (lowest
//! terms, positive denominator), which `num_rational` guarantees on
//! construction.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rational = BigRational;

/// Build a rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rational {
    assert!(den != 0, "zero denominator");
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Build an integer rational.
pub fn rat_int(num: i64) -> Rational {
    BigRational::from_integer(BigInt::from(num))
}

/// Scalars every linear-algebra routine in this crate is generic over.
///
/// `inv` returns `None` exactly on zero. `conj` is the identity on `ℚ`,
/// complex conjugation on `ℚ[i]`, and quaternion conjugation on `ℍ(ℚ)`; it
/// satisfies `(λμ)* = μ*λ*`. `norm_sq` is the sum of squared rational
/// coordinates, zero only at zero.
pub trait ExactScalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn conj(&self) -> Self;
    fn norm_sq(&self) -> Rational;
    fn from_rational(q: Rational) -> Self;
    /// Whether multiplication commutes (false only for quaternions).
    const COMMUTATIVE: bool;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }
}

impl ExactScalar for Rational {
    fn zero() -> Self {
        <BigRational as Zero>::zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn norm_sq(&self) -> Rational {
        self * self
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    const COMMUTATIVE: bool = true;
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Gaussian {
    pub re: Rational,
    pub im: Rational,
}

impl Gaussian {
    pub fn new(re: Rational, im: Rational) -> Self {
        Gaussian { re, im }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Gaussian::new(rat(re_num, re_den), rat(im_num, im_den))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian::new(rat_int(0), rat_int(1))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Gaussian::new(&self.re * q, &self.im * q)
    }
}

impl fmt::Display for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if Zero::is_zero(&self.im) {
            write!(f, "{}", self.re)
        } else if Zero::is_zero(&self.re) {
            write!(f, "{}i", self.im)
        } else if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl From<Rational> for Gaussian {
    fn from(q: Rational) -> Self {
        Gaussian::new(q, rat_int(0))
    }
}

impl Add for Gaussian {
    type Output = Gaussian;
    fn add(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for Gaussian {
    type Output = Gaussian;
    fn sub(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for Gaussian {
    type Output = Gaussian;
    fn mul(self, rhs: Gaussian) -> Gaussian {
        Gaussian::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian::new(-self.re, -self.im)
    }
}

impl ExactScalar for Gaussian {
    fn zero() -> Self {
        Gaussian::new(rat_int(0), rat_int(0))
    }
    fn one() -> Self {
        Gaussian::new(rat_int(1), rat_int(0))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        let n_inv = n.recip();
        Some(Gaussian::new(&self.re * &n_inv, -(&self.im * &n_inv)))
    }
    fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
    fn norm_sq(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }
    fn from_rational(q: Rational) -> Self {
        Gaussian::from(q)
    }
    const COMMUTATIVE: bool = true;
}

/// Rational quaternion `w + x·i + y·j + z·k`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Quaternion {
    pub w: Rational,
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Quaternion {
    pub fn new(w: Rational, x: Rational, y: Rational, z: Rational) -> Self {
        Quaternion { w, x, y, z }
    }

    pub fn unit_i() -> Self {
        Quaternion::new(rat_int(0), rat_int(1), rat_int(0), rat_int(0))
    }

    pub fn unit_j() -> Self {
        Quaternion::new(rat_int(0), rat_int(0), rat_int(1), rat_int(0))
    }

    pub fn unit_k() -> Self {
        Quaternion::new(rat_int(0), rat_int(0), rat_int(0), rat_int(1))
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}+{}i+{}j+{}k", self.w, self.x, self.y, self.z)
    }
}

impl From<Rational> for Quaternion {
    fn from(q: Rational) -> Self {
        Quaternion::new(q, rat_int(0), rat_int(0), rat_int(0))
    }
}

impl From<Gaussian> for Quaternion {
    fn from(g: Gaussian) -> Self {
        Quaternion::new(g.re, g.im, rat_int(0), rat_int(0))
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
        )
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Quaternion) -> Quaternion {
        Quaternion::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
        )
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Quaternion) -> Quaternion {
        let (a, b, c, d) = (&self.w, &self.x, &self.y, &self.z);
        let (e, f, g, h) = (&rhs.w, &rhs.x, &rhs.y, &rhs.z);
        Quaternion::new(
            a * e - b * f - c * g - d * h,
            a * f + b * e + c * h - d * g,
            a * g - b * h + c * e + d * f,
            a * h + b * g - c * f + d * e,
        )
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl ExactScalar for Quaternion {
    fn zero() -> Self {
        Quaternion::from(rat_int(0))
    }
    fn one() -> Self {
        Quaternion::from(rat_int(1))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.w)
            && Zero::is_zero(&self.x)
            && Zero::is_zero(&self.y)
            && Zero::is_zero(&self.z)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if Zero::is_zero(&n) {
            return None;
        }
        let n_inv = n.recip();
        Some(Quaternion::new(
            &self.w * &n_inv,
            -(&self.x * &n_inv),
            -(&self.y * &n_inv),
            -(&self.z * &n_inv),
        ))
    }
    fn conj(&self) -> Self {
        Quaternion::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
        )
    }
    fn norm_sq(&self) -> Rational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }
    fn from_rational(q: Rational) -> Self {
        Quaternion::from(q)
    }
    const COMMUTATIVE: bool = false;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_inverse() {
        let g = Gaussian::from_parts(3, 1, -2, 1);
        let inv = g.inv().unwrap();
        assert_eq!(g * inv, Gaussian::one());
        assert!(Gaussian::zero().inv().is_none());
    }

    #[test]
    fn quaternion_relations() {
        let i = Quaternion::unit_i();
        let j = Quaternion::unit_j();
        let k = Quaternion::unit_k();
        assert_eq!(i.clone() * i.clone(), -Quaternion::one());
        assert_eq!(i.clone() * j.clone(), k);
        assert_eq!(j.clone() * i.clone(), -(i.clone() * j.clone()));
        let q = Quaternion::new(rat_int(1), rat_int(2), rat_int(-1), rat(1, 2));
        assert_eq!(q.clone() * q.inv().unwrap(), Quaternion::one());
    }

    #[test]
    fn conjugation_is_anti_involution() {
        let a = Quaternion::new(rat_int(1), rat_int(2), rat_int(3), rat_int(4));
        let b = Quaternion::new(rat(1, 2), rat_int(-1), rat_int(0), rat_int(5));
        let lhs = (a.clone() * b.clone()).conj();
        let rhs = b.conj() * a.conj();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn norm_is_anisotropic() {
        let q = Quaternion::new(rat_int(0), rat(1, 7), rat_int(0), rat_int(0));
        assert!(!Zero::is_zero(&q.norm_sq()));
        assert!(Zero::is_zero(&Quaternion::zero().norm_sq()));
    }
}
