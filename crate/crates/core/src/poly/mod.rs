//! Dense univariate polynomials over arbitrary-precision integers.
//!
//! Coefficients are stored low-to-high and kept canonical: the last stored
//! coefficient is nonzero and the zero polynomial has no coefficients.

mod kronecker;
mod matrix;
mod text;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use kronecker::mul_kronecker;
pub use matrix::PolyMatrix2;

/// Minimum operand length at which [`IntPolynomial::mul`] switches from the
/// schoolbook product to Kronecker substitution.
pub const DEFAULT_KRONECKER_CUTOFF: usize = 32;

/// Degree of a polynomial. The zero polynomial has degree `NegInfinity`,
/// which orders below every finite degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInfinity => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// True when `self <= bound`, where a negative bound admits only the zero polynomial.
    pub fn at_most(self, bound: i64) -> bool {
        match self {
            Degree::NegInfinity => true,
            Degree::Finite(d) => bound >= 0 && d as u64 <= bound as u64,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Builds a polynomial from low-to-high coefficients, trimming high zeros.
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate λ.
    pub fn lambda() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::zero(), BigInt::one()],
        }
    }

    /// `λ + c`.
    pub fn linear(c: BigInt) -> Self {
        Self::new(vec![c, BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of λᵏ (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            len => Degree::Finite(len - 1),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Largest bit length among the coefficient magnitudes (0 for the zero polynomial).
    pub fn max_bits(&self) -> u64 {
        self.coeffs.iter().map(|c| c.bits()).max().unwrap_or(0)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Horner evaluation at `x`.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Multiplication by λᵏ.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// Quadratic-time product; the reference for every faster path.
    pub fn mul_schoolbook(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.len() + other.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Product that uses Kronecker substitution once both operands have at
    /// least `cutoff` coefficients.
    pub fn mul_with_cutoff(&self, other: &Self, cutoff: usize) -> Self {
        if self.len().min(other.len()) < cutoff {
            self.mul_schoolbook(other)
        } else {
            mul_kronecker(self, other)
        }
    }

    fn add_signed(&self, other: &Self, negate_other: bool) -> Self {
        let len = self.len().max(other.len());
        let mut out = Vec::with_capacity(len);
        for k in 0..len {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            let v = match (a, b) {
                (Some(a), Some(b)) if negate_other => a - b,
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) if negate_other => -b,
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            out.push(v);
        }
        Self::new(out)
    }
}

impl From<BigInt> for IntPolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.add_signed(rhs, false)
    }
}

impl Add for IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: IntPolynomial) -> IntPolynomial {
        &self + &rhs
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.add_signed(rhs, true)
    }
}

impl Sub for IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: IntPolynomial) -> IntPolynomial {
        &self - &rhs
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(mut self) -> IntPolynomial {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        self.mul_with_cutoff(rhs, DEFAULT_KRONECKER_CUTOFF)
    }
}

impl Mul for IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: IntPolynomial) -> IntPolynomial {
        &self * &rhs
    }
}

/// Orders polynomials by degree, then coefficients from the top down.
impl PartialOrd for IntPolynomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IntPolynomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

/// Absolute value of the largest coefficient.
pub fn max_abs_coeff(p: &IntPolynomial) -> BigInt {
    p.coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn canonical_form_trims_high_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs().len(), 2);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[]).degree(), Degree::NegInfinity);
        assert_eq!(p(&[5]).degree(), Degree::Finite(0));
        assert!(Degree::NegInfinity < Degree::Finite(0));
    }

    #[test]
    fn add_examples() {
        assert_eq!(&p(&[-1, 0, 1]) + &p(&[1]), p(&[0, 0, 1]));
        let q = p(&[3, -4, 7]);
        assert_eq!(&IntPolynomial::zero() + &q, q);
        let sum = &p(&[1, 1]) + &p(&[-1, -1]);
        assert!(sum.is_zero());
        assert!(sum.coeffs().is_empty());
    }

    #[test]
    fn sub_and_neg() {
        let a = p(&[1, 2, 3]);
        assert!((&a - &a).is_zero());
        assert_eq!(-&a, p(&[-1, -2, -3]));
        assert_eq!(-a.clone(), p(&[-1, -2, -3]));
        assert_eq!(&p(&[1]) - &p(&[0, 0, 2]), p(&[1, 0, -2]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&p(&[1, 1]) * &p(&[1, -1]), p(&[1, 0, -1]));
        let q = p(&[4, 0, -9, 2]);
        assert!((&q * &IntPolynomial::zero()).is_zero());
        assert_eq!(&q * &IntPolynomial::one(), q);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p(&[-1, 0, 1]).eval(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(IntPolynomial::zero().eval(&BigInt::from(17)), BigInt::zero());
        assert_eq!(p(&[0, -1, 0, 2]).eval(&BigInt::from(-2)), BigInt::from(-14));
    }

    #[test]
    fn degree_bound_helper() {
        assert!(Degree::NegInfinity.at_most(-1));
        assert!(!Degree::Finite(0).at_most(-1));
        assert!(Degree::Finite(3).at_most(3));
        assert!(!Degree::Finite(4).at_most(3));
    }

    #[test]
    fn shift_and_scale() {
        assert_eq!(p(&[1, 2]).shift(2), p(&[0, 0, 1, 2]));
        assert!(IntPolynomial::zero().shift(3).is_zero());
        assert!(p(&[1, 2]).scale(&BigInt::zero()).is_zero());
        assert_eq!(p(&[1, -2]).scale(&BigInt::from(-3)), p(&[-3, 6]));
    }

    #[test]
    fn max_bits_and_abs() {
        assert_eq!(IntPolynomial::zero().max_bits(), 0);
        assert_eq!(p(&[-8, 3]).max_bits(), 4);
        assert_eq!(max_abs_coeff(&p(&[-8, 3])), BigInt::from(8));
    }
}
