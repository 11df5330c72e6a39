//! Minimal linear recurrences of integer sequences.
//!
//! Berlekamp-Massey over the rationals. For a prefix `s_0 .. s_{N-1}` it finds
//! the shortest connection polynomial `C(x) = 1 + c_1 x + ... + c_L x^L` with
//!
//! ```text
//! s_k + c_1 s_{k-1} + ... + c_L s_{k-L} = 0    for all L <= k < N.
//! ```
//!
//! When the prefix has at least `2L` terms the recurrence is unique, so a
//! recurrence of order at most `d` is certified by `2d` terms.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Connection polynomial and linear complexity of a sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct Recurrence {
    /// `c_0 = 1, c_1, ..., c_L`, possibly with trailing zeros.
    pub connection: Vec<BigRational>,
    pub order: usize,
}

pub fn berlekamp_massey(seq: &[BigInt]) -> Recurrence {
    let s: Vec<BigRational> = seq.iter().cloned().map(BigRational::from_integer).collect();

    let mut c = vec![BigRational::one()];
    let mut b = vec![BigRational::one()];
    let mut order = 0usize;
    let mut shift = 1usize;
    let mut last_discrepancy = BigRational::one();

    for k in 0..s.len() {
        let mut d = s[k].clone();
        for j in 1..c.len().min(k + 1) {
            d += &c[j] * &s[k - j];
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }

        let factor = &d / &last_discrepancy;
        let previous = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, BigRational::zero());
        }
        for (j, bj) in b.iter().enumerate() {
            c[j + shift] -= &factor * bj;
        }

        if 2 * order <= k {
            order = k + 1 - order;
            b = previous;
            last_discrepancy = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.truncate(order + 1);
    c.resize(order + 1, BigRational::zero());
    Recurrence { connection: c, order }
}

/// Minimal characteristic polynomial (with constant term 1) of an integer
/// sequence, certified against the whole prefix.
///
/// Requires at least 4 terms and at least `2L + 2` terms for a recurrence of
/// order `L`.
pub fn min_recurrence(seq: &[BigInt]) -> Result<IntPolynomial> {
    certified_recurrence(seq).map(|(poly, _)| poly)
}

/// [`min_recurrence`] together with the recurrence order `L`, which may
/// exceed the polynomial degree when the sequence starts irregularly.
pub fn certified_recurrence(seq: &[BigInt]) -> Result<(IntPolynomial, usize)> {
    if seq.len() < 4 {
        return Err(Error::NoCertifiedRecurrence(format!(
            "need at least 4 terms, got {}",
            seq.len()
        )));
    }
    let rec = berlekamp_massey(seq);
    if seq.len() < 2 * rec.order + 2 {
        return Err(Error::NoCertifiedRecurrence(format!(
            "order {} recurrence needs {} terms to certify, got {}",
            rec.order,
            2 * rec.order + 2,
            seq.len()
        )));
    }

    let coeffs = rec
        .connection
        .iter()
        .map(|c| {
            if c.is_integer() {
                Ok(c.to_integer())
            } else {
                Err(Error::NoCertifiedRecurrence(format!(
                    "non-integral recurrence coefficient {c}"
                )))
            }
        })
        .collect::<Result<Vec<_>>>()?;
    let poly = IntPolynomial::new(coeffs);

    if let Some(k) = first_violation(&poly, rec.order, seq) {
        return Err(Error::NoCertifiedRecurrence(format!(
            "recurrence {poly} fails at index {k}"
        )));
    }
    Ok((poly, rec.order))
}

/// First index `k >= start` where `sum_j c_j s_{k-j}` is nonzero.
fn first_violation(c: &IntPolynomial, start: usize, seq: &[BigInt]) -> Option<usize> {
    (start..seq.len()).find(|&k| {
        let acc: BigInt = c
            .coeffs()
            .iter()
            .enumerate()
            .take(k + 1)
            .map(|(j, cj)| cj * &seq[k - j])
            .sum();
        !acc.is_zero()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn g3_prefix() {
        let c = min_recurrence(&big(&[1, 4, 14, 48, 164, 560, 1912, 6528])).unwrap();
        assert_eq!(c, IntPolynomial::from_i64s(&[1, -4, 2]));
    }

    #[test]
    fn r3_prefix() {
        let c = min_recurrence(&big(&[1, 4, 10, 28, 76, 208, 568, 1552, 4240])).unwrap();
        assert_eq!(c, IntPolynomial::from_i64s(&[1, -2, -2]));
    }

    #[test]
    fn constant_sequence() {
        let c = min_recurrence(&big(&[1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(c, IntPolynomial::from_i64s(&[1, -1]));
    }

    #[test]
    fn zero_sequence_has_order_zero() {
        let c = min_recurrence(&big(&[0, 0, 0, 0])).unwrap();
        assert_eq!(c, IntPolynomial::one());
    }

    #[test]
    fn short_prefix_rejected() {
        assert!(matches!(
            min_recurrence(&big(&[1, 4, 14])),
            Err(Error::NoCertifiedRecurrence(_))
        ));
        // no recurrence short enough to be certified by 7 terms
        assert!(min_recurrence(&big(&[1, 2, 3, 5, 8, 13, 20])).is_err());
    }

    #[test]
    fn fibonacci_with_leading_irregularity() {
        // 5, then Fibonacci: the numerator degree exceeds the denominator's.
        let s = big(&[5, 1, 1, 2, 3, 5, 8, 13, 21, 34]);
        let rec = berlekamp_massey(&s);
        assert_eq!(rec.order, 3);
        let c = min_recurrence(&s).unwrap();
        assert!(first_violation(&c, 3, &s).is_none());
        assert_eq!(c, IntPolynomial::from_i64s(&[1, -1, -1]));
    }

    #[test]
    fn rational_intermediates() {
        // s_k = 2^k + 1; discrepancy ratios along the way are fractions.
        let s = big(&[2, 3, 5, 9, 17, 33, 65, 129]);
        let c = min_recurrence(&s).unwrap();
        assert_eq!(c, IntPolynomial::from_i64s(&[1, -3, 2]));
    }
}
