//! Dense univariate polynomials over the integers.
//!
//! Coefficients are stored as `i64` in ascending order of degree. Every
//! arithmetic operation is checked: a result that does not fit in an `i64`
//! yields [`Error::Overflow`] instead of wrapping.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A polynomial `a_0 + a_1 x + ... + a_d x^d` with exact integer coefficients.
///
/// The coefficient vector never has a trailing zero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// `c * x^degree`.
    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut coeffs = vec![0; degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = -1;
        coeffs[n] += 1;
        Self::new(coeffs)
    }

    /// The 0,1-polynomial `sum_{e in exponents} x^e`. Repeated exponents add up.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exponents: I) -> Self {
        let mut coeffs = Vec::new();
        for e in exponents {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += 1;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn leading_coeff(&self) -> Option<i64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    /// Maximum absolute value of a coefficient (0 for the zero polynomial).
    pub fn height(&self) -> u64 {
        self.coeffs.iter().map(|c| c.unsigned_abs()).max().unwrap_or(0)
    }

    /// True when every coefficient is 0 or 1.
    pub fn is_zero_one(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0 || c == 1)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect()
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).checked_add(other.coeff(i)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| self.coeff(i).checked_sub(other.coeff(i)).ok_or(Error::Overflow))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// Exact product by schoolbook convolution.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let mut out = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let term = a.checked_mul(b).ok_or(Error::Overflow)?;
                out[i + j] = out[i + j].checked_add(term).ok_or(Error::Overflow)?;
            }
        }
        Ok(Self::new(out))
    }

    /// Quotient and remainder by a monic divisor: `self = divisor * q + r`
    /// with `deg r < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        if !divisor.is_monic() {
            return Err(Error::NonMonicDivisor);
        }
        let Some(da) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if da < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0i64; da - dd + 1];
        for k in (0..=da - dd).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            quot[k] = c;
            for (j, &b) in divisor.coeffs.iter().enumerate() {
                let term = c.checked_mul(b).ok_or(Error::Overflow)?;
                rem[k + j] = rem[k + j].checked_sub(term).ok_or(Error::Overflow)?;
            }
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Remainder only; see [`IntPolynomial::divrem`].
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.divrem(divisor).map(|(_, r)| r)
    }

    /// Whether a monic `divisor` divides `self` exactly.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool> {
        Ok(self.rem(divisor)?.is_zero())
    }

    /// `f(x^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; (self.coeffs.len() - 1) * k + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c;
        }
        Self::new(coeffs)
    }

    /// `f(-x)`.
    pub fn negate_variable(&self) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 1 { c.checked_neg().ok_or(Error::Overflow) } else { Ok(c) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    /// `x^k * f(x)`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![0i64; k];
        coeffs.extend_from_slice(&self.coeffs);
        Self { coeffs }
    }
}

impl From<Vec<i64>> for IntPolynomial {
    fn from(coeffs: Vec<i64>) -> Self {
        Self::new(coeffs)
    }
}

/// Descending powers, explicit signs, `^` exponents, no spaces:
/// `x^8+x^7-x^5-x^4-x^3+x+1`. Coefficients other than ±1 are written `3*x^2`.
impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.unsigned_abs();
            match i {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != 1 {
                        write!(f, "{mag}*")?;
                    }
                    f.write_str("x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::new(c.to_vec())
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).coeffs(), &[1, 2]);
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(IntPolynomial::zero().degree(), None);
    }

    #[test]
    fn mul_examples() {
        // (x+1)(x-1) = x^2-1
        assert_eq!(p(&[1, 1]).checked_mul(&p(&[-1, 1])).unwrap(), p(&[-1, 0, 1]));
        // (x^2+x+1)(x-1) = x^3-1
        assert_eq!(p(&[1, 1, 1]).checked_mul(&p(&[-1, 1])).unwrap(), p(&[-1, 0, 0, 1]));
    }

    #[test]
    fn divrem_examples() {
        let (q, r) = IntPolynomial::x_pow_minus_one(6).divrem(&p(&[1, -1, 1])).unwrap();
        assert_eq!(q, p(&[-1, -1, 0, 1, 1]));
        assert!(r.is_zero());
        assert_eq!(q.checked_mul(&p(&[1, -1, 1])).unwrap(), IntPolynomial::x_pow_minus_one(6));

        let (q, r) = p(&[1, 0, 1]).divrem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));

        let (q, r) = IntPolynomial::zero().divrem(&p(&[1, 1])).unwrap();
        assert!(q.is_zero() && r.is_zero());
    }

    #[test]
    fn divrem_errors() {
        assert_eq!(p(&[1, 1]).divrem(&IntPolynomial::zero()), Err(Error::DivisionByZero));
        assert_eq!(p(&[1, 1]).divrem(&p(&[1, 2])), Err(Error::NonMonicDivisor));
    }

    #[test]
    fn overflow_is_reported() {
        let big = p(&[i64::MAX, 1]);
        assert_eq!(big.checked_mul(&big), Err(Error::Overflow));
        assert_eq!(big.checked_add(&p(&[1])), Err(Error::Overflow));
        assert_eq!(p(&[0, i64::MIN]).negate_variable(), Err(Error::Overflow));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, 1, 0, -1, -1, -1, 0, 1, 1]).to_string(), "x^8+x^7-x^5-x^4-x^3+x+1");
        assert_eq!(p(&[-1, 1]).to_string(), "x-1");
        assert_eq!(p(&[0, -2, 3]).to_string(), "3*x^2-2*x");
        assert_eq!(p(&[-5]).to_string(), "-5");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn substitutions() {
        let f = p(&[1, -1, 1]);
        assert_eq!(f.compose_power(3), p(&[1, 0, 0, -1, 0, 0, 1]));
        assert_eq!(f.negate_variable().unwrap(), p(&[1, 1, 1]));
        assert_eq!(f.shift(2), p(&[0, 0, 1, -1, 1]));
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..12).prop_map(IntPolynomial::new)
    }

    fn monic_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-50i64..50, 0..8).prop_map(|mut c| {
            c.push(1);
            IntPolynomial::new(c)
        })
    }

    proptest! {
        #[test]
        fn divrem_round_trip(a in small_poly(), b in monic_poly()) {
            let (q, r) = a.divrem(&b).unwrap();
            let back = b.checked_mul(&q).unwrap().checked_add(&r).unwrap();
            prop_assert_eq!(back, a);
            prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
        }

        #[test]
        fn mul_degree_adds(a in small_poly(), b in small_poly()) {
            let prod = a.checked_mul(&b).unwrap();
            match (a.degree(), b.degree()) {
                (Some(da), Some(db)) => prop_assert_eq!(prod.degree(), Some(da + db)),
                _ => prop_assert!(prod.is_zero()),
            }
        }
    }
}
