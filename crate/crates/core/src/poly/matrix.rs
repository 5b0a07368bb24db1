use num_bigint::BigInt;
use super::{IntPolynomial, DEFAULT_KRONECKER_CUTOFF};

/// A 2×2 matrix of integer polynomials, indexed `e{row}{col}` from 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyMatrix2 {
    pub e11: IntPolynomial,
    pub e12: IntPolynomial,
    pub e21: IntPolynomial,
    pub e22: IntPolynomial,
}

impl PolyMatrix2 {
    pub fn new(e11: IntPolynomial, e12: IntPolynomial, e21: IntPolynomial, e22: IntPolynomial) -> Self {
        PolyMatrix2 { e11, e12, e21, e22 }
    }

    pub fn identity() -> Self {
        PolyMatrix2::new(
            IntPolynomial::one(),
            IntPolynomial::zero(),
            IntPolynomial::zero(),
            IntPolynomial::one(),
        )
    }

    pub fn from_i64s(m: [[&[i64]; 2]; 2]) -> Self {
        PolyMatrix2::new(
            IntPolynomial::from_i64s(m[0][0]),
            IntPolynomial::from_i64s(m[0][1]),
            IntPolynomial::from_i64s(m[1][0]),
            IntPolynomial::from_i64s(m[1][1]),
        )
    }

    pub fn entries(&self) -> [&IntPolynomial; 4] {
        [&self.e11, &self.e12, &self.e21, &self.e22]
    }

    pub fn is_identity(&self) -> bool {
        self.e11.is_monic()
            && self.e11.len() == 1
            && self.e22.is_monic()
            && self.e22.len() == 1
            && self.e12.is_zero()
            && self.e21.is_zero()
    }

    /// `self · rhs` with eight polynomial products.
    pub fn mul(&self, rhs: &PolyMatrix2) -> PolyMatrix2 {
        self.mul_with_cutoff(rhs, DEFAULT_KRONECKER_CUTOFF)
    }

    pub fn mul_with_cutoff(&self, rhs: &PolyMatrix2, cutoff: usize) -> PolyMatrix2 {
        if self.is_identity() {
            return rhs.clone();
        }
        if rhs.is_identity() {
            return self.clone();
        }
        let m = |a: &IntPolynomial, b: &IntPolynomial| a.mul_with_cutoff(b, cutoff);
        PolyMatrix2 {
            e11: &m(&self.e11, &rhs.e11) + &m(&self.e12, &rhs.e21),
            e12: &m(&self.e11, &rhs.e12) + &m(&self.e12, &rhs.e22),
            e21: &m(&self.e21, &rhs.e11) + &m(&self.e22, &rhs.e21),
            e22: &m(&self.e21, &rhs.e12) + &m(&self.e22, &rhs.e22),
        }
    }

    /// `self · (v.0, v.1)ᵀ`.
    pub fn apply(&self, v: (&IntPolynomial, &IntPolynomial)) -> (IntPolynomial, IntPolynomial) {
        (
            &(&self.e11 * v.0) + &(&self.e12 * v.1),
            &(&self.e21 * v.0) + &(&self.e22 * v.1),
        )
    }

    /// Entrywise evaluation at `x`.
    pub fn eval(&self, x: &BigInt) -> [[BigInt; 2]; 2] {
        [
            [self.e11.eval(x), self.e12.eval(x)],
            [self.e21.eval(x), self.e22.eval(x)],
        ]
    }
}

impl Default for PolyMatrix2 {
    fn default() -> Self {
        PolyMatrix2::identity()
    }
}

#[cfg(test)]
fn int_matmul2(a: &[[BigInt; 2]; 2], b: &[[BigInt; 2]; 2]) -> [[BigInt; 2]; 2] {
    use num_traits::Zero;
    let mut out: [[BigInt; 2]; 2] = Default::default();
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (0..2).fold(BigInt::zero(), |acc, k| acc + &a[i][k] * &b[k][j]);
        }
    }
    out
}
