//! Determinants and characteristic polynomials of weighted threshold graph
//! matrices.
//!
//! A weighted threshold graph matrix of order `n` has diagonal `d_1 … d_n`
//! and entry `b_min(i,j)` off the diagonal. Expanding along the last row
//! after subtracting the penultimate row and column gives the two-term
//! recurrence
//!
//! ```text
//! D_0 = 1,  D_1 = d_1,
//! D_k = (d_k + d_{k-1} - 2 b_{k-1}) D_{k-1} - (b_{k-1} - d_{k-1})^2 D_{k-2}
//! ```
//!
//! which every routine here evaluates, either over integers or over
//! polynomials in λ.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::ThresholdGraph;
use crate::oracle::DenseIntMatrix;
use crate::poly::{IntPolynomial, PolyMatrix2, DEFAULT_KRONECKER_CUTOFF};

/// Vertex count below which [`charpoly_auto`] prefers the quadratic recurrence.
pub const DEFAULT_AUTO_CROSSOVER: usize = 512;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightedThresholdMatrix {
    b: Vec<BigInt>,
    d: Vec<BigInt>,
}

impl WeightedThresholdMatrix {
    pub fn new(b: Vec<BigInt>, d: Vec<BigInt>) -> Result<Self> {
        if d.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if b.len() + 1 != d.len() {
            return Err(Error::LengthMismatch {
                expected: d.len() - 1,
                diag: d.len(),
                got: b.len(),
            });
        }
        Ok(WeightedThresholdMatrix { b, d })
    }

    pub fn from_i64s(b: &[i64], d: &[i64]) -> Result<Self> {
        Self::new(
            b.iter().map(|&v| BigInt::from(v)).collect(),
            d.iter().map(|&v| BigInt::from(v)).collect(),
        )
    }

    /// The adjacency matrix of `g`: zero diagonal, 0/1 off-diagonal pattern.
    pub fn adjacency(g: &ThresholdGraph) -> Self {
        WeightedThresholdMatrix {
            b: g.sequence().bits().iter().map(|&bit| BigInt::from(u8::from(bit))).collect(),
            d: vec![BigInt::zero(); g.n()],
        }
    }

    pub fn n(&self) -> usize {
        self.d.len()
    }

    pub fn off_diagonal(&self) -> &[BigInt] {
        &self.b
    }

    pub fn diagonal(&self) -> &[BigInt] {
        &self.d
    }

    /// Entry `(i, j)`, 1-indexed.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        if i == j {
            &self.d[i - 1]
        } else {
            &self.b[i.min(j) - 1]
        }
    }

    pub fn to_dense(&self) -> DenseIntMatrix {
        DenseIntMatrix::from_fn(self.n(), |r, c| self.entry(r + 1, c + 1).clone())
    }
}

/// Determinant in O(n) big-integer operations.
pub fn det_weighted(m: &WeightedThresholdMatrix) -> BigInt {
    let (b, d) = (&m.b, &m.d);
    let mut older = BigInt::one();
    let mut newer = d[0].clone();
    for k in 1..d.len() {
        let diff = &b[k - 1] - &d[k - 1];
        let lead = &d[k] + &d[k - 1] - 2 * &b[k - 1];
        let next = lead * &newer - &diff * &diff * &older;
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

/// χ(G, x) = det(xI − A), from the recurrence with `b → −b` and `d → x`.
pub fn charpoly_eval(g: &ThresholdGraph, x: &BigInt) -> BigInt {
    // lead = 2x + 2b, square term = (x + b)^2 with b in {0, 1}.
    let x_plus_one = x + 1;
    let two_x = 2 * x;
    let two_x_plus_two = &two_x + 2;
    let sq0 = x * x;
    let sq1 = &x_plus_one * &x_plus_one;
    let mut older = BigInt::one();
    let mut newer = x.clone();
    for &bit in g.sequence().bits() {
        let (lead, sq) = if bit { (&two_x_plus_two, &sq1) } else { (&two_x, &sq0) };
        let next = lead * &newer - sq * &older;
        older = std::mem::replace(&mut newer, next);
    }
    newer
}

/// χ(G, λ) by running the recurrence over polynomials: O(n²) coefficient operations.
pub fn charpoly_quadratic(g: &ThresholdGraph) -> IntPolynomial {
    // D_k = (2λ + 2b) D_{k-1} - (λ + b)^2 D_{k-2}
    let mut older: Vec<BigInt> = vec![BigInt::one()];
    let mut newer: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    let zero = BigInt::zero();
    for &bit in g.sequence().bits() {
        let len = newer.len() + 1;
        let d1 = |j: usize| if j < newer.len() { &newer[j] } else { &zero };
        let d2 = |j: usize| if j < older.len() { &older[j] } else { &zero };
        let mut next = Vec::with_capacity(len);
        for j in 0..len {
            let mut v = BigInt::zero();
            if j >= 1 {
                v += d1(j - 1) * 2u32;
            }
            if j >= 2 {
                v -= d2(j - 2);
            }
            if bit {
                v += d1(j) * 2u32;
                v -= d2(j);
                if j >= 1 {
                    v -= d2(j - 1) * 2u32;
                }
            }
            next.push(v);
        }
        older = std::mem::replace(&mut newer, next);
    }
    IntPolynomial::new(newer)
}

/// Transition matrix taking `(D_i, D_{i-1})` to `(D_{i+1}, D_i)` for
/// `det(λI − M)`, where `M` has off-diagonal value `b_i` and diagonal
/// entries `d_i`, `d_{i+1}`.
///
/// Substituting `b → −b_i` and `d → λ − d` into the recurrence gives
///
/// ```text
/// [ 2λ − d_i − d_{i+1} + 2 b_i    −(λ − d_i + b_i)^2 ]
/// [ 1                              0                 ]
/// ```
pub fn weighted_factor(b_i: &BigInt, d_i: &BigInt, d_next: &BigInt) -> PolyMatrix2 {
    let c = b_i - d_i;
    let lead = IntPolynomial::new(vec![2 * b_i - d_i - d_next, BigInt::from(2)]);
    let square = IntPolynomial::new(vec![-(&c * &c), -2 * &c, -BigInt::one()]);
    PolyMatrix2::new(lead, square, IntPolynomial::one(), IntPolynomial::zero())
}

/// Transition factor for a graph bit: `[[2(λ + b), −(λ + b)²], [1, 0]]`.
pub fn build_factor(bit: bool) -> PolyMatrix2 {
    let b = BigInt::from(u8::from(bit));
    weighted_factor(&b, &BigInt::zero(), &BigInt::zero())
}

/// Factors `B_{n−1}, …, B_1` of `g` in product order.
pub fn graph_factors(g: &ThresholdGraph) -> Vec<PolyMatrix2> {
    g.sequence().bits().iter().rev().map(|&bit| build_factor(bit)).collect()
}

/// Factors `F_{n−1}, …, F_1` of `det(λI − m)` in product order.
pub fn weighted_factors(m: &WeightedThresholdMatrix) -> Vec<PolyMatrix2> {
    (0..m.b.len())
        .rev()
        .map(|i| weighted_factor(&m.b[i], &m.d[i], &m.d[i + 1]))
        .collect()
}

/// Tuning for the balanced product tree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BalancedOptions {
    /// Operand length at which polynomial products switch to Kronecker substitution.
    pub kronecker_cutoff: usize,
    /// Multiply the pairs of each round on the rayon pool.
    pub parallel: bool,
}

impl Default for BalancedOptions {
    fn default() -> Self {
        BalancedOptions {
            kronecker_cutoff: DEFAULT_KRONECKER_CUTOFF,
            parallel: true,
        }
    }
}

/// Ordered product of `factors` by rounds of adjacent pairwise multiplication.
///
/// The list is padded on the left with identities up to a power of two, so
/// each round halves it while keeping left-to-right order.
pub fn balanced_product(mut factors: Vec<PolyMatrix2>, opts: BalancedOptions) -> PolyMatrix2 {
    if factors.is_empty() {
        return PolyMatrix2::identity();
    }
    let padded = factors.len().next_power_of_two();
    let mut level: Vec<PolyMatrix2> = std::iter::repeat_with(PolyMatrix2::identity)
        .take(padded - factors.len())
        .collect();
    level.append(&mut factors);

    let cutoff = opts.kronecker_cutoff;
    while level.len() > 1 {
        let pair = |p: &[PolyMatrix2]| p[0].mul_with_cutoff(&p[1], cutoff);
        level = if opts.parallel && level.len() > 2 {
            level.par_chunks(2).map(pair).collect()
        } else {
            level.chunks(2).map(pair).collect()
        };
    }
    level.pop().expect("one matrix remains")
}

/// χ(G, λ) via the balanced product tree of the transition factors.
pub fn charpoly_balanced(g: &ThresholdGraph) -> IntPolynomial {
    charpoly_balanced_with(g, BalancedOptions::default())
}

pub fn charpoly_balanced_with(g: &ThresholdGraph, opts: BalancedOptions) -> IntPolynomial {
    let product = balanced_product(graph_factors(g), opts);
    let (top, _) = product.apply((&IntPolynomial::lambda(), &IntPolynomial::one()));
    top
}

/// `det(λI − m)` via the balanced product tree.
pub fn charpoly_weighted(m: &WeightedThresholdMatrix) -> IntPolynomial {
    charpoly_weighted_with(m, BalancedOptions::default())
}

pub fn charpoly_weighted_with(m: &WeightedThresholdMatrix, opts: BalancedOptions) -> IntPolynomial {
    let product = balanced_product(weighted_factors(m), opts);
    let base = IntPolynomial::linear(-&m.d[0]);
    let (top, _) = product.apply((&base, &IntPolynomial::one()));
    top
}

/// Quadratic recurrence below `crossover` vertices, balanced tree from there on.
pub fn charpoly_auto(g: &ThresholdGraph, crossover: usize) -> IntPolynomial {
    if g.n() < crossover {
        charpoly_quadratic(g)
    } else {
        charpoly_balanced(g)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{bareiss_det, dense_charpoly};
    use crate::poly::Degree;

    fn g(text: &str) -> ThresholdGraph {
        text.parse().unwrap()
    }

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    fn wm(b: &[i64], d: &[i64]) -> WeightedThresholdMatrix {
        WeightedThresholdMatrix::from_i64s(b, d).unwrap()
    }

    #[test]
    fn weighted_matrix_shape_errors() {
        assert_eq!(
            WeightedThresholdMatrix::from_i64s(&[1, 2], &[0, 0]),
            Err(Error::LengthMismatch { expected: 1, diag: 2, got: 2 })
        );
        assert_eq!(WeightedThresholdMatrix::from_i64s(&[], &[]), Err(Error::EmptyMatrix));
    }

    #[test]
    fn weighted_matrix_entries() {
        let m = wm(&[4, 5, 6], &[1, 2, 3, 7]);
        let dense = m.to_dense();
        let expected = DenseIntMatrix::from_i64s(&[
            &[1, 4, 4, 4],
            &[4, 2, 5, 5],
            &[4, 5, 3, 6],
            &[4, 5, 6, 7],
        ])
        .unwrap();
        assert_eq!(dense, expected);
    }

    #[test]
    fn det_examples() {
        assert_eq!(det_weighted(&wm(&[], &[7])), BigInt::from(7));
        assert_eq!(det_weighted(&wm(&[1], &[0, 0])), BigInt::from(-1));
        assert_eq!(det_weighted(&wm(&[1, 1], &[0, 0, 0])), BigInt::from(2));
        let m = wm(&[4, 5, 6], &[1, 2, 3, 7]);
        assert_eq!(det_weighted(&m), bareiss_det(&m.to_dense()));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(charpoly_eval(&g("1"), &BigInt::from(2)), BigInt::from(3));
        assert_eq!(charpoly_eval(&g("1"), &BigInt::from(1)), BigInt::zero());
        assert_eq!(charpoly_eval(&g(""), &BigInt::from(5)), BigInt::from(5));
    }

    #[test]
    fn eval_is_det_with_negated_pattern() {
        let h = g("1011001");
        for x in -5..=5 {
            let x = BigInt::from(x);
            let m = WeightedThresholdMatrix::new(
                h.sequence().bits().iter().map(|&b| -BigInt::from(u8::from(b))).collect(),
                vec![x.clone(); h.n()],
            )
            .unwrap();
            assert_eq!(charpoly_eval(&h, &x), det_weighted(&m));
        }
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(charpoly_quadratic(&g("")), p(&[0, 1]));
        assert_eq!(charpoly_quadratic(&g("0")), p(&[0, 0, 1]));
        assert_eq!(charpoly_quadratic(&g("11")), p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn factor_examples() {
        assert_eq!(build_factor(false), PolyMatrix2::from_i64s([[&[0, 2], &[0, 0, -1]], [&[1], &[]]]));
        assert_eq!(build_factor(true), PolyMatrix2::from_i64s([[&[2, 2], &[-1, -2, -1]], [&[1], &[]]]));
        for bit in [false, true] {
            let f = build_factor(bit);
            assert_eq!(f.e21, IntPolynomial::one());
            assert!(f.e22.is_zero());
            assert_eq!(f.e11.degree(), Degree::Finite(1));
            assert_eq!(f.e12.degree(), Degree::Finite(2));
        }
    }

    #[test]
    fn single_factor_applied_to_base_vector() {
        let (top, bottom) = build_factor(true).apply((&IntPolynomial::lambda(), &IntPolynomial::one()));
        assert_eq!(top, p(&[-1, 0, 1]));
        assert_eq!(bottom, IntPolynomial::lambda());
    }

    #[test]
    fn two_factor_product_for_k3() {
        // B = [[2(λ+1), −(λ+1)²], [1, 0]], so B² = [[3(λ+1)², −2(λ+1)³], [2(λ+1), −(λ+1)²]].
        let b = build_factor(true);
        let expected = PolyMatrix2::from_i64s([
            [&[3, 6, 3], &[-2, -6, -6, -2]],
            [&[2, 2], &[-1, -2, -1]],
        ]);
        assert_eq!(b.mul(&b), expected);
        let (top, _) = expected.apply((&IntPolynomial::lambda(), &IntPolynomial::one()));
        assert_eq!(top, p(&[-2, -3, 0, 1]));
    }

    #[test]
    fn balanced_examples() {
        assert_eq!(charpoly_balanced(&g("")), p(&[0, 1]));
        assert_eq!(charpoly_balanced(&g("1")), p(&[-1, 0, 1]));
        assert_eq!(charpoly_balanced(&g("101")), charpoly_quadratic(&g("101")));
    }

    #[test]
    fn balanced_product_keeps_order() {
        let factors = vec![
            PolyMatrix2::from_i64s([[&[1], &[1]], [&[0], &[1]]]),
            PolyMatrix2::from_i64s([[&[1], &[0]], [&[1], &[1]]]),
            PolyMatrix2::from_i64s([[&[2], &[0]], [&[0], &[1]]]),
        ];
        let sequential = factors.iter().fold(PolyMatrix2::identity(), |acc, f| acc.mul(f));
        assert_eq!(balanced_product(factors, BalancedOptions::default()), sequential);
        assert_eq!(balanced_product(Vec::new(), BalancedOptions::default()), PolyMatrix2::identity());
    }

    #[test]
    fn weighted_examples() {
        assert_eq!(charpoly_weighted(&wm(&[], &[5])), p(&[-5, 1]));
        assert_eq!(charpoly_weighted(&wm(&[0], &[2, 3])), p(&[6, -5, 1]));
        assert_eq!(charpoly_weighted(&wm(&[1], &[1, 1])), p(&[0, -2, 1]));
        let m = wm(&[4, -5, 6, 0], &[1, -2, 3, 7, -1]);
        assert_eq!(charpoly_weighted(&m), dense_charpoly(&m.to_dense()).unwrap());
    }

    #[test]
    fn weighted_on_adjacency_matches_graph_charpoly() {
        let h = g("0110100111");
        assert_eq!(
            charpoly_weighted(&WeightedThresholdMatrix::adjacency(&h)),
            charpoly_balanced(&h)
        );
    }

    #[test]
    fn auto_picks_by_size() {
        let h = g("110101");
        assert_eq!(charpoly_auto(&h, 2), charpoly_auto(&h, 100));
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let h: ThresholdGraph = "1101001110100101110001011".repeat(4).parse().unwrap();
        let seq = charpoly_balanced_with(&h, BalancedOptions { parallel: false, ..Default::default() });
        let par = charpoly_balanced_with(&h, BalancedOptions { parallel: true, ..Default::default() });
        assert_eq!(seq, par);
        for cutoff in [1, 2, 8, 1000] {
            let opts = BalancedOptions { kronecker_cutoff: cutoff, parallel: true };
            assert_eq!(charpoly_balanced_with(&h, opts), seq, "cutoff {cutoff}");
        }
    }
}
