//! Generating functions, recurrences and closed forms for the counts.
//!
//! Generating functions are extracted from transfer data without symbolic
//! matrix inversion: the count series is run long enough (`2 * dim + 8`
//! terms) to pin down any recurrence the `dim x dim` matrix can produce, the
//! minimal recurrence gives the denominator, and the numerator falls out of
//! `series * den` truncated. The result is then re-expanded and checked
//! against the full series.

use std::ops::{Add, Mul, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graphs::Family;
use crate::poly::{IntPolynomial, RationalGF};
use crate::recurrence::certified_recurrence;
use crate::transfer::{build_transfer, count_series, BigCount};

pub use crate::recurrence::min_recurrence;

/// Taylor coefficients `0..=n_max` of a generating function.
pub fn series_of(gf: &RationalGF, n_max: usize) -> Result<Vec<BigInt>> {
    if !gf.den().coeff(0).is_one() {
        return Err(Error::InvalidArgument(format!(
            "denominator of {gf} does not have constant term 1"
        )));
    }
    Ok(gf.series(n_max))
}

/// Generating function of the count series, certified against the transfer
/// matrix.
pub fn gf_from_transfer(family: Family, ell: usize) -> Result<RationalGF> {
    let dim = build_transfer(family, ell)?.dim();
    let len = 2 * dim + 8;
    let series: Vec<BigInt> = count_series(family, ell, len - 1)?
        .into_iter()
        .map(BigInt::from)
        .collect();
    gf_from_series(&series)
}

/// Rational generating function of an integer sequence prefix whose
/// recurrence is certified by the prefix length.
pub fn gf_from_series(series: &[BigInt]) -> Result<RationalGF> {
    let (den, order) = certified_recurrence(series)?;
    // the numerator has degree below the recurrence order
    let num = (&IntPolynomial::new(series.to_vec()) * &den).truncate(order);
    let gf = RationalGF::new(num, den)?;
    if gf.series(series.len() - 1) != series {
        return Err(Error::NoCertifiedRecurrence(format!(
            "{gf} does not reproduce the {} given terms",
            series.len()
        )));
    }
    Ok(gf)
}

/// Numerator and denominator coefficient tables for the tabulated
/// generating functions, `ell = 3..=6`.
fn tabulated(family: Family, ell: usize) -> Option<(IntPolynomial, IntPolynomial)> {
    let p = IntPolynomial::from_i64s;
    let g3_den = p(&[1, -4, 2]);
    let den4 = p(&[1, -3, -14, 15, 7]);
    let den5 = p(&[1, -5, -30, 69, 31, -22]);
    let den6 = p(&[1, -8, -66, 280, 178, -532, -84, 108]);
    let entry = match (family, ell) {
        (Family::G, 3) | (Family::K, 3) => (p(&[1]), g3_den),
        (Family::G, 4) => (p(&[1, 4, -1, -2]), den4),
        (Family::G, 5) => (&p(&[1, 1]) * &p(&[1, 5, -8]), den5),
        (Family::G, 6) => (p(&[1, 10, -12, -50, 10, 20, -12]), den6),
        (Family::R, 3) => (p(&[1, 2]), p(&[1, -2, -2])),
        (Family::R, 4) => (p(&[1, 4, -4]), p(&[1, -3, -4, 4])),
        (Family::R, 5) => (p(&[1, 7, -6]), p(&[1, -4, -8, 6])),
        (Family::R, 6) => (
            p(&[1, 12, -24, 0, 8]),
            &p(&[1, -8, 4, 4]) * &p(&[1, 2, -2]),
        ),
        (Family::K, 4) => (p(&[1, 2, 3]), den4),
        (Family::K, 5) => (p(&[1, 1, 12, -8]), den5),
        (Family::K, 6) => (p(&[1, -1, 38, -72, -8, 30]), den6),
        _ => return None,
    };
    Some(entry)
}

/// The published generating function for a family, in canonical form.
///
/// Covers `G`, `R` and `K` for `ell` in `3..=6`, and `P` for every `ell >= 3`.
pub fn paper_gf(family: Family, ell: usize) -> Result<RationalGF> {
    if family == Family::P {
        return p_gf(ell);
    }
    let (num, den) = tabulated(family, ell).ok_or(Error::NotTabulated { family, ell })?;
    RationalGF::new(num, den)
}

/// `(1 + 2x) / (1 - (ell - 1) x - 2 x^2)`.
pub fn p_gf(ell: usize) -> Result<RationalGF> {
    if ell < 3 {
        return Err(Error::InvalidSpec(format!(
            "cycle size must be at least 3, got {ell}"
        )));
    }
    let ell = ell as i64;
    RationalGF::from_i64s(&[1, 2], &[1, -(ell - 1), -2])
}

/// Checks the first row of `(I - xP)^{-1}` for `P_ell` in closed form.
///
/// With `D = 1 - (ell-1)x - 2x^2`, the row is `e_1 = (1 - (ell-2)x) / D` and
/// `e_j = x / D` for the `ell` unit vectors. Returns whether
/// `(I - xP) e = (1, 0, ..., 0)` holds exactly and `sum e_i` equals
/// [`p_gf`].
pub fn verify_propp_row(ell: usize) -> Result<bool> {
    let p = build_transfer(Family::P, ell)?;
    let l = ell as i64;
    let den = [1, -(l - 1), -2];
    let e: Vec<RationalGF> = (0..p.dim())
        .map(|i| {
            if i == 0 {
                RationalGF::from_i64s(&[1, -(l - 2)], &den)
            } else {
                RationalGF::from_i64s(&[0, 1], &den)
            }
        })
        .collect::<Result<_>>()?;

    let x = RationalGF::polynomial(IntPolynomial::x());
    for r in 0..p.dim() {
        let row_sum = (0..p.dim())
            .filter(|&c| p.entry(r, c))
            .fold(RationalGF::zero(), |acc, c| &acc + &e[c]);
        let lhs = &e[r] - &(&x * &row_sum);
        let rhs = if r == 0 { RationalGF::one() } else { RationalGF::zero() };
        if lhs != rhs {
            return Ok(false);
        }
    }
    let total = e.iter().fold(RationalGF::zero(), |acc, ei| &acc + ei);
    Ok(total == p_gf(ell)?)
}

/// `a + b sqrt(2)` with rational `a`, `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadIrrational {
    pub a: BigRational,
    pub b: BigRational,
}

impl QuadIrrational {
    pub fn new(a: i64, b: i64) -> Self {
        QuadIrrational {
            a: BigRational::from_integer(a.into()),
            b: BigRational::from_integer(b.into()),
        }
    }

    pub fn one() -> Self {
        Self::new(1, 0)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Add for &QuadIrrational {
    type Output = QuadIrrational;

    fn add(self, rhs: &QuadIrrational) -> QuadIrrational {
        QuadIrrational {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Sub for &QuadIrrational {
    type Output = QuadIrrational;

    fn sub(self, rhs: &QuadIrrational) -> QuadIrrational {
        QuadIrrational {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
}

impl Mul for &QuadIrrational {
    type Output = QuadIrrational;

    fn mul(self, rhs: &QuadIrrational) -> QuadIrrational {
        let two = BigRational::from_integer(2.into());
        QuadIrrational {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

/// `((2 + sqrt 2)^(n+1) - (2 - sqrt 2)^(n+1)) / (2 sqrt 2)`, exactly.
pub fn g3_closed_form(n: usize) -> BigCount {
    let e = u32::try_from(n + 1).expect("exponent fits in u32");
    let plus = QuadIrrational::new(2, 1).pow(e);
    let minus = QuadIrrational::new(2, -1).pow(e);
    let diff = &plus - &minus;
    assert!(diff.a.is_zero(), "rational parts must cancel");
    let value = diff.b / BigRational::from_integer(2.into());
    assert!(value.is_integer());
    value
        .to_integer()
        .to_biguint()
        .expect("closed form is nonnegative")
}

const G3_SEED: [u32; 3] = [1, 4, 14];

/// `g_3(n) = 2 g_3(n-1) + 6 g_3(n-2) - 4 g_3(n-3)`.
pub fn g3_via_eq1(n: usize) -> BigCount {
    let mut g: Vec<BigInt> = G3_SEED.iter().map(|&v| BigInt::from(v)).collect();
    while g.len() <= n {
        let k = g.len();
        let next = 2 * &g[k - 1] + 6 * &g[k - 2] - 4 * &g[k - 3];
        g.push(next);
    }
    g[n].to_biguint().expect("counts are nonnegative")
}

/// `g_3(n) = 4 g_3(n-1) - 2 g_3(n-2)`.
pub fn g3_via_eq2(n: usize) -> BigCount {
    let (mut prev, mut cur) = (BigInt::from(G3_SEED[0]), BigInt::from(G3_SEED[1]));
    if n == 0 {
        return BigCount::one();
    }
    for _ in 1..n {
        let next = 4 * &cur - 2 * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur.to_biguint().expect("counts are nonnegative")
}

/// State of the auxiliary recursion at depth `n`.
///
/// `a`, `b`, `c` count labelings of `G_3^n` whose outer triangle carries one
/// 1 at a fixed corner, two 1s, and three 1s respectively (each up to
/// rotation).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Aux3State {
    pub n: usize,
    pub a: BigCount,
    pub b: BigCount,
    pub c: BigCount,
    /// `g_3(n)`
    pub g: BigCount,
    /// `g_3(n - 1)`
    pub g_prev: BigCount,
}

impl Aux3State {
    /// Depth 1: a single triangle.
    pub fn first() -> Self {
        Aux3State {
            n: 1,
            a: BigCount::one(),
            b: BigCount::zero(),
            c: BigCount::zero(),
            g: BigCount::from(4u32),
            g_prev: BigCount::one(),
        }
    }

    pub fn next(&self) -> Self {
        let a = &self.g_prev + &self.a;
        let b = self.g_prev.clone();
        let c = self.g_prev.clone();
        let g = &self.g + 3u32 * &a + 3u32 * &b + &c;
        Aux3State {
            n: self.n + 1,
            a,
            b,
            c,
            g,
            g_prev: self.g.clone(),
        }
    }
}

/// `g_3(n)` from `g_3(n) = g_3(n-1) + 3a_n + 3b_n + c_n` with
/// `a_n = g_3(n-2) + a_{n-1}` and `b_n = c_n = g_3(n-2)`.
pub fn g3_via_aux(n: usize) -> BigCount {
    if n == 0 {
        return BigCount::one();
    }
    let mut state = Aux3State::first();
    while state.n < n {
        state = state.next();
        debug_assert_eq!(state.b, state.c);
    }
    state.g
}

/// Pell numbers, `P_0 = 0`, `P_1 = 1`.
pub fn pell(n: usize) -> BigCount {
    linear2(n, 0u32, 1u32, 2u32)
}

/// Lucas numbers, `L_0 = 2`, `L_1 = 1`, `L_2 = 3`.
pub fn lucas(n: usize) -> BigCount {
    linear2(n, 2u32, 1u32, 1u32)
}

/// `x_k = m x_{k-1} + x_{k-2}`.
fn linear2(n: usize, x0: u32, x1: u32, m: u32) -> BigCount {
    let (mut a, mut b) = (BigUint::from(x0), BigUint::from(x1));
    for _ in 0..n {
        let next = m * &b + &a;
        a = std::mem::replace(&mut b, next);
    }
    a
}

/// `b_m = sum_k C(m, k) s_k`.
pub fn binomial_transform(seq: &[BigCount]) -> Vec<BigCount> {
    let mut out = Vec::with_capacity(seq.len());
    let mut row = vec![BigUint::one()];
    for m in 0..seq.len() {
        if m > 0 {
            let mut next = vec![BigUint::one(); m + 1];
            for k in 1..m {
                next[k] = &row[k - 1] + &row[k];
            }
            row = next;
        }
        out.push(row.iter().zip(seq).map(|(c, s)| c * s).sum());
    }
    out
}
