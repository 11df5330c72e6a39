//! Integer polynomials and rational generating functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::BigSeq;

/// A polynomial in `x` with arbitrary-precision integer coefficients.
///
/// `coeffs[d]` is the coefficient of `x^d`. There are never trailing zeros,
/// so the zero polynomial has no coefficients at all.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64s(&[0, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^d`, zero past the degree.
    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Keeps only the terms of degree `< len`.
    pub fn truncate(&self, len: usize) -> Self {
        Self::new(self.coeffs.iter().take(len).cloned().collect())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn to_rational(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Renders as e.g. `1-2x-2x^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
            f.write_str(sign)?;
            let abs = c.abs();
            if d == 0 || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            match d {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{d}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl FromStr for IntPolynomial {
    type Err = Error;

    /// Parses the text form produced by `Display` (whitespace is ignored).
    fn from_str(s: &str) -> Result<Self> {
        let bad = |why: &str| Error::InvalidArgument(format!("cannot parse polynomial `{s}`: {why}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad("empty"));
        }
        let mut coeffs: Vec<BigInt> = Vec::new();
        let mut rest = text.as_str();
        while !rest.is_empty() {
            let (negative, body) = match rest.as_bytes()[0] {
                b'-' => (true, &rest[1..]),
                b'+' => (false, &rest[1..]),
                _ if coeffs.is_empty() => (false, rest),
                _ => return Err(bad("missing sign between terms")),
            };
            if body.is_empty() {
                return Err(bad("dangling sign"));
            }
            let end = body[1..]
                .find(['+', '-'])
                .map_or(body.len(), |i| i + 1);
            let term = &body[..end];
            rest = &body[end..];

            let (digits, degree) = match term.find('x') {
                None => (term, 0usize),
                Some(i) => {
                    let power = &term[i + 1..];
                    let degree = if power.is_empty() {
                        1
                    } else {
                        power
                            .strip_prefix('^')
                            .and_then(|p| p.parse().ok())
                            .ok_or_else(|| bad("bad exponent"))?
                    };
                    (&term[..i], degree)
                }
            };
            let mut value = if digits.is_empty() {
                if degree == 0 {
                    return Err(bad("empty term"));
                }
                BigInt::one()
            } else {
                digits.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?
            };
            if negative {
                value = -value;
            }
            if coeffs.len() <= degree {
                coeffs.resize(degree + 1, BigInt::zero());
            }
            coeffs[degree] += value;
        }
        Ok(IntPolynomial::new(coeffs))
    }
}

/// Polynomial over the rationals; only used for exact gcd and division.
#[derive(Debug, Clone, PartialEq)]
struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    fn lead(&self) -> &BigRational {
        self.coeffs.last().expect("nonzero polynomial")
    }

    fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        if rem.len() < divisor.coeffs.len() {
            return (RatPoly::new(Vec::new()), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let q = &rem[shift + dd] / divisor.lead();
            if q.is_zero() {
                continue;
            }
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &q * c;
            }
            quot[shift] = q;
        }
        rem.truncate(dd);
        (RatPoly::new(quot), RatPoly::new(rem))
    }

    fn monic(&self) -> RatPoly {
        let lead = self.lead().clone();
        RatPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    fn gcd(&self, other: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }
}

/// A rational generating function `num / den` in canonical form.
///
/// Canonical means: `num` and `den` have no common factor of positive degree,
/// and `den(0) = 1`. Two canonical values are equal exactly when they denote
/// the same rational function.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalGF {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalGF {
    /// Reduces `num / den` to canonical form.
    ///
    /// Fails when the denominator vanishes at zero after reduction (no power
    /// series expansion) or when the reduced form needs non-integer
    /// coefficients.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::InvalidArgument("zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (n, d) = (num.to_rational(), den.to_rational());
        let g = n.gcd(&d);
        let (n, nr) = n.div_rem(&g);
        let (d, dr) = d.div_rem(&g);
        debug_assert!(nr.is_zero() && dr.is_zero());

        let d0 = d.coeffs[0].clone();
        if d0.is_zero() {
            return Err(Error::InvalidArgument(format!(
                "({num})/({den}) has no power series expansion at 0"
            )));
        }
        let to_int = |p: &RatPoly| -> Result<IntPolynomial> {
            p.coeffs
                .iter()
                .map(|c| {
                    let c = c / &d0;
                    if c.is_integer() {
                        Ok(c.to_integer())
                    } else {
                        Err(Error::InvalidArgument(format!(
                            "({num})/({den}) has non-integral canonical form"
                        )))
                    }
                })
                .collect::<Result<Vec<_>>>()
                .map(IntPolynomial::new)
        };
        Ok(RationalGF {
            num: to_int(&n)?,
            den: to_int(&d)?,
        })
    }

    pub fn from_i64s(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(IntPolynomial::from_i64s(num), IntPolynomial::from_i64s(den))
    }

    pub fn zero() -> Self {
        RationalGF {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        Self::polynomial(IntPolynomial::one())
    }

    pub fn polynomial(p: IntPolynomial) -> Self {
        RationalGF {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    /// First `n_max + 1` Taylor coefficients.
    pub fn series(&self, n_max: usize) -> Vec<BigInt> {
        let den = self.den.coeffs();
        let mut out: Vec<BigInt> = Vec::with_capacity(n_max + 1);
        for k in 0..=n_max {
            let mut s = self.num.coeff(k);
            for (j, c) in den.iter().enumerate().skip(1).take(k) {
                s -= c * &out[k - j];
            }
            out.push(s);
        }
        out
    }

    fn combine(&self, rhs: &RationalGF, op: fn(&IntPolynomial, &IntPolynomial) -> IntPolynomial) -> RationalGF {
        let num = op(&(&self.num * &rhs.den), &(&rhs.num * &self.den));
        RationalGF::new(num, &self.den * &rhs.den).expect("sum of power series")
    }
}

impl Add for &RationalGF {
    type Output = RationalGF;

    fn add(self, rhs: &RationalGF) -> RationalGF {
        self.combine(rhs, |a, b| a + b)
    }
}

impl Sub for &RationalGF {
    type Output = RationalGF;

    fn sub(self, rhs: &RationalGF) -> RationalGF {
        self.combine(rhs, |a, b| a - b)
    }
}

impl Mul for &RationalGF {
    type Output = RationalGF;

    fn mul(self, rhs: &RationalGF) -> RationalGF {
        RationalGF::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of power series")
    }
}

impl fmt::Display for RationalGF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl FromStr for RationalGF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("expected `(num)/(den)`, got `{s}`"));
        let s = s.trim();
        let (num, den) = s.split_once(")/(").ok_or_else(bad)?;
        let num = num.strip_prefix('(').ok_or_else(bad)?;
        let den = den.strip_suffix(')').ok_or_else(bad)?;
        RationalGF::new(num.parse()?, den.parse()?)
    }
}

/// Serializes as `{"num": [..], "den": [..]}`.
impl Serialize for RationalGF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("RationalGF", 2)?;
        st.serialize_field("num", &BigSeq(self.num.coeffs()))?;
        st.serialize_field("den", &BigSeq(self.den.coeffs()))?;
        st.end()
    }
}
