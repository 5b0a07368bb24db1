//! Polynomial multiplication by Kronecker substitution.
//!
//! Both operands are evaluated at 2^s for a slot width `s` wide enough that
//! every product coefficient fits in a slot with two bits of headroom, so a
//! single big-integer product carries the whole convolution. Signed
//! coefficients are recovered by adding 2^(s-1) to every slot before
//! unpacking and subtracting it again afterwards.
//!
//! The packed product is done with `malachite-nz`, whose multiplication is
//! FFT-based at the operand sizes the balanced product tree reaches.

use malachite_nz::integer::Integer;
use malachite_nz::natural::Natural;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::One;

use super::IntPolynomial;

fn ceil_log2(x: usize) -> u64 {
    debug_assert!(x > 0);
    (usize::BITS - (x - 1).leading_zeros()) as u64
}

/// Slot width for the product of `a` and `b`.
///
/// Each product coefficient is a sum of at most `min(len)` terms, each below
/// 2^(bits(a) + bits(b)), so it is bounded by 2^(s-2) in magnitude.
pub(crate) fn slot_width(a: &IntPolynomial, b: &IntPolynomial) -> u64 {
    let shorter = a.len().min(b.len()).max(1);
    a.max_bits() + b.max_bits() + ceil_log2(shorter) + 2
}

/// ORs `value` into `limbs` starting at bit `offset`. Target bits must be clear.
fn or_shifted(limbs: &mut [u64], value: &[u64], offset: u64) {
    let q = (offset / 64) as usize;
    let r = (offset % 64) as u32;
    if r == 0 {
        for (dst, &v) in limbs[q..].iter_mut().zip(value) {
            *dst |= v;
        }
        return;
    }
    for (j, &v) in value.iter().enumerate() {
        limbs[q + j] |= v << r;
        let hi = v >> (64 - r);
        if hi != 0 {
            limbs[q + j + 1] |= hi;
        }
    }
}

fn limbs_for_bits(bits: u64) -> usize {
    (bits / 64 + 2) as usize
}

/// Evaluates `p` at 2^`s`, packing positive and negative magnitudes separately.
fn pack(p: &IntPolynomial, s: u64) -> Integer {
    let len = limbs_for_bits(s * p.len() as u64);
    let mut pos = vec![0u64; len];
    let mut neg: Option<Vec<u64>> = None;
    for (k, c) in p.coeffs().iter().enumerate() {
        let (sign, digits) = c.to_u64_digits();
        match sign {
            Sign::Plus => or_shifted(&mut pos, &digits, s * k as u64),
            Sign::Minus => {
                let neg = neg.get_or_insert_with(|| vec![0u64; len]);
                or_shifted(neg, &digits, s * k as u64)
            }
            Sign::NoSign => {}
        }
    }
    let pos = Integer::from(Natural::from_owned_limbs_asc(pos));
    match neg {
        Some(neg) => pos - Integer::from(Natural::from_owned_limbs_asc(neg)),
        None => pos,
    }
}

/// `sum_{k < slots} 2^(s-1) * 2^(s k)`.
fn slot_offsets(s: u64, slots: usize) -> Natural {
    let mut limbs = vec![0u64; limbs_for_bits(s * slots as u64)];
    for k in 0..slots as u64 {
        let bit = s * k + s - 1;
        limbs[(bit / 64) as usize] |= 1 << (bit % 64);
    }
    Natural::from_owned_limbs_asc(limbs)
}

/// Reads bits `[start, start + width)` of the little-endian limb string.
fn extract_bits(limbs: &[u64], start: u64, width: u64) -> BigUint {
    let out_len = width.div_ceil(64) as usize;
    let q = (start / 64) as usize;
    let r = (start % 64) as u32;
    let limb = |i: usize| limbs.get(i).copied().unwrap_or(0);
    let mut out = Vec::with_capacity(2 * out_len);
    for j in 0..out_len {
        let lo = limb(q + j);
        let mut v = if r == 0 {
            lo
        } else {
            (lo >> r) | (limb(q + j + 1) << (64 - r))
        };
        if j + 1 == out_len && !width.is_multiple_of(64) {
            v &= (1u64 << (width % 64)) - 1;
        }
        out.push(v as u32);
        out.push((v >> 32) as u32);
    }
    BigUint::new(out)
}

/// Exact product of `a` and `b` via a single big-integer multiplication.
pub fn mul_kronecker(a: &IntPolynomial, b: &IntPolynomial) -> IntPolynomial {
    if a.is_zero() || b.is_zero() {
        return IntPolynomial::zero();
    }
    let s = slot_width(a, b);
    let slots = a.len() + b.len() - 1;

    let product = pack(a, s) * pack(b, s);
    let shifted = Natural::try_from(product + Integer::from(slot_offsets(s, slots)))
        .expect("offset packing leaves every slot non-negative");
    let limbs = shifted.to_limbs_asc();

    let half = BigInt::one() << (s - 1);
    let coeffs = (0..slots)
        .map(|k| {
            let digit = extract_bits(&limbs, s * k as u64, s);
            BigInt::from_biguint(Sign::Plus, digit) - &half
        })
        .collect();
    let out = IntPolynomial::new(coeffs);
    debug_assert_eq!(out.len(), slots);
    out
}
