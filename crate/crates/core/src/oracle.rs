//! Slow exact reference computations used to validate the fast algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::charpoly::charpoly_eval;
use crate::error::{Error, Result};
use crate::graph::ThresholdGraph;
use crate::poly::IntPolynomial;

/// Largest dimension the dense oracles accept unless told otherwise.
pub const DEFAULT_ORACLE_CAP: usize = 2048;

/// Square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseIntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl DenseIntMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n >= 1, "dense matrices have at least one row");
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                entries.push(f(r, c));
            }
        }
        DenseIntMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                row,
                len: r.len(),
            });
        }
        Ok(DenseIntMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64s(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |r, c| BigInt::from(u8::from(r == c)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 0-indexed `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &BigInt {
        &self.entries[row * self.n + col]
    }

    fn get_mut(&mut self, row: usize, col: usize) -> &mut BigInt {
        &mut self.entries[row * self.n + col]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn mul(&self, rhs: &DenseIntMatrix) -> DenseIntMatrix {
        assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = vec![BigInt::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    out[r * n + c] += a * rhs.get(k, c);
                }
            }
        }
        DenseIntMatrix { n, entries: out }
    }

    /// `x·I − self`.
    pub fn shifted_negation(&self, x: &BigInt) -> DenseIntMatrix {
        DenseIntMatrix::from_fn(self.n, |r, c| {
            let v = -self.get(r, c);
            if r == c {
                v + x
            } else {
                v
            }
        })
    }

    /// Principal submatrix on the given 0-indexed rows/columns.
    pub fn submatrix(&self, keep: &[usize]) -> DenseIntMatrix {
        DenseIntMatrix::from_fn(keep.len(), |r, c| self.get(keep[r], keep[c]).clone())
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn bareiss_det(m: &DenseIntMatrix) -> BigInt {
    let n = m.n();
    let mut a = m.clone();
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n.saturating_sub(1) {
        if a.get(k, k).is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.entries.swap(k * n + c, pivot * n + c);
            }
            negate = !negate;
        }
        let pivot = a.get(k, k).clone();
        for r in k + 1..n {
            let lead = a.get(r, k).clone();
            for c in k + 1..n {
                let num = a.get(r, c) * &pivot - &lead * a.get(k, c);
                let (q, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero(), "Bareiss division must be exact");
                *a.get_mut(r, c) = q;
            }
            *a.get_mut(r, k) = BigInt::zero();
        }
        prev = pivot;
    }
    let det = a.get(n - 1, n - 1).clone();
    if negate {
        -det
    } else {
        det
    }
}

fn exact_div(num: &BigInt, den: &BigInt, what: &str) -> Result<BigInt> {
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::NonIntegral(format!("{what}: {num} / {den}")));
    }
    Ok(q)
}

/// `det(λI − m)` by Faddeev–LeVerrier, for `n` up to [`DEFAULT_ORACLE_CAP`].
pub fn dense_charpoly(m: &DenseIntMatrix) -> Result<IntPolynomial> {
    dense_charpoly_capped(m, DEFAULT_ORACLE_CAP)
}

pub fn dense_charpoly_capped(m: &DenseIntMatrix, cap: usize) -> Result<IntPolynomial> {
    let n = m.n();
    if n > cap {
        return Err(Error::OracleCapExceeded { n, cap });
    }
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut aux = DenseIntMatrix::identity(n);
    for k in 1..=n {
        let mut product = m.mul(&aux);
        let c = exact_div(&-product.trace(), &BigInt::from(k), "Faddeev-LeVerrier trace")?;
        for i in 0..n {
            *product.get_mut(i, i) += &c;
        }
        coeffs[n - k] = c;
        aux = product;
    }
    Ok(IntPolynomial::new(coeffs))
}

/// χ(G) by evaluating at `0, 1, …, n` and Newton interpolation.
///
/// Newton coefficients over unit-spaced nodes are `Δᵏ y₀ / k!`, which is an
/// integer for any integer polynomial; a nonzero remainder is reported as
/// [`Error::NonIntegral`].
pub fn charpoly_interpolation(g: &ThresholdGraph) -> Result<IntPolynomial> {
    let n = g.n();
    let mut diffs: Vec<BigInt> = (0..=n).map(|x| charpoly_eval(g, &BigInt::from(x))).collect();

    let mut newton = Vec::with_capacity(n + 1);
    let mut factorial = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            factorial *= k;
        }
        newton.push(exact_div(&diffs[0], &factorial, "Newton coefficient")?);
        for i in 0..diffs.len() - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
        diffs.pop();
    }

    // a_0 + (λ−0)(a_1 + (λ−1)(a_2 + …))
    let mut p = IntPolynomial::constant(newton[n].clone());
    for k in (0..n).rev() {
        p = (&p * &IntPolynomial::linear(-BigInt::from(k))) + IntPolynomial::constant(newton[k].clone());
    }
    Ok(p)
}

/// Number of fixed-point-free permutations of `k` elements.
pub fn derangements(k: usize) -> BigInt {
    let (mut prev, mut cur) = (BigInt::one(), BigInt::zero());
    if k == 0 {
        return prev;
    }
    for i in 2..=k {
        let next = (i - 1) * (&cur + &prev);
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

/// Number of triangles of a simple graph given by a 0/1 adjacency matrix.
pub fn triangle_count(adj: &DenseIntMatrix) -> u64 {
    let n = adj.n();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            if adj.get(i, j).is_zero() {
                continue;
            }
            for k in j + 1..n {
                if !adj.get(i, k).is_zero() && !adj.get(j, k).is_zero() {
                    count += 1;
                }
            }
        }
    }
    count
}
