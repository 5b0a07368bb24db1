use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thresh_core::{
    charpoly_balanced, charpoly_quadratic, derangements, poly::max_abs_coeff, CreationSequence,
    ThresholdGraph,
};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[test]
fn coefficients_are_bounded_by_n_factorial() {
    for n in 1..=12 {
        let bound = factorial(n);
        for mask in 0u32..1 << (n - 1) {
            let g = ThresholdGraph::new(CreationSequence::from_bools(
                (0..n - 1).map(|i| mask >> i & 1 == 1).collect(),
            ));
            assert!(max_abs_coeff(&charpoly_quadratic(&g)) <= bound);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    for n in 13..=20 {
        let bound = factorial(n);
        for _ in 0..200 {
            let g = ThresholdGraph::new(CreationSequence::from_bools((1..n).map(|_| rng.gen()).collect()));
            assert!(max_abs_coeff(&charpoly_balanced(&g)) <= bound);
        }
        assert!(max_abs_coeff(&charpoly_balanced(&ThresholdGraph::complete(n))) <= bound);
    }
}

// χ(K_n) = (λ - n + 1)(λ + 1)^(n-1), so the constant term is -(n-1). Its
// magnitude equals the derangement count only for n <= 3.
#[test]
fn complete_graph_constant_term_is_n_minus_one() {
    for n in 1..=60usize {
        let c0 = charpoly_balanced(&ThresholdGraph::complete(n)).coeff(0);
        assert_eq!(c0, -BigInt::from(n - 1));
        assert_eq!(c0.abs() == derangements(n), n <= 3, "n={n}");
    }
}

#[test]
fn derangements_approach_n_factorial_over_e() {
    // |D(k)·e − k!| < 1 for k >= 2, with e bracketed by truncated partial sums
    // of Σ 1/j! scaled by 2^100. At k = 1 the gap is exactly 1 (D(1) = 0).
    assert_eq!(derangements(1), BigInt::from(0));
    for k in 2..=20usize {
        let kf = factorial(k);
        let scale = BigInt::one() << 100u32;
        let mut e_scaled_low = BigInt::from(0);
        for j in 0..=k + 25 {
            e_scaled_low += &scale / factorial(j);
        }
        // e·2^100 lies in [low, low + k + 27] after truncating every term
        let e_scaled_high = &e_scaled_low + BigInt::from(k + 27);
        let d = derangements(k);
        let lo = (&d * &e_scaled_low) - (&kf * &scale);
        let hi = (&d * &e_scaled_high) - (&kf * &scale);
        assert!(lo.abs() < scale && hi.abs() < scale, "k={k}");
    }
}
