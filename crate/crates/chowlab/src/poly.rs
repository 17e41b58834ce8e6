//! Dense univariate polynomials with exact big-integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul};

use num::bigint::BigInt;
use num::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("polynomial is not palindromic (coefficient {0} differs from its mirror)")]
    NotPalindromic(usize),
    #[error("zero polynomial")]
    ZeroPolynomial,
}

/// Polynomial as a dense coefficient vector, index = degree.
///
/// Invariant: the trailing coefficient is nonzero; the zero polynomial is
/// the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The chain-sum factor for a rank gap `d`: the coefficient vector
    /// `(0, 1, 1, ..., 1)` of `t + t^2 + ... + t^(d-1)`, which is the
    /// division-free form of `t (t^(d-1) - 1) / (t - 1)`. A unit gap gives
    /// the zero polynomial.
    pub fn gap_factor(d: u64) -> Self {
        if d <= 1 {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::one(); d as usize];
        coeffs[0] = BigInt::zero();
        IntPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        Self::from_coeffs(coeffs)
    }

    pub fn add_assign_ref(&mut self, other: &IntPolynomial) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// `self += a * b`.
    pub fn add_mul_assign(&mut self, a: &IntPolynomial, b: &IntPolynomial) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        let deg = a.coeffs.len() + b.coeffs.len() - 1;
        if self.coeffs.len() < deg {
            self.coeffs.resize(deg, BigInt::zero());
        }
        for (i, ca) in a.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (j, cb) in b.coeffs.iter().enumerate() {
                if !cb.is_zero() {
                    self.coeffs[i + j] += ca * cb;
                }
            }
        }
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    /// Comma-separated coefficient row `h_0,h_1,...`.
    pub fn to_csv(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl AddAssign<&IntPolynomial> for IntPolynomial {
    fn add_assign(&mut self, rhs: &IntPolynomial) {
        self.add_assign_ref(rhs);
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        out.add_mul_assign(self, rhs);
        out
    }
}

impl fmt::Display for IntPolynomial {
    /// Human form like `1 + 4t + t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (i, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "t")?,
                (1, false) => write!(f, "{mag}t")?,
                (_, true) => write!(f, "t^{i}")?,
                (_, false) => write!(f, "{mag}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Row `k` of Pascal's triangle, i.e. the coefficients of `(1 + t)^k`.
pub fn binomial_row(k: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..k {
        let mut next = vec![BigInt::zero(); row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i] += c;
            next[i + 1] += c;
        }
        row = next;
    }
    row
}

/// Expands a palindromic polynomial of degree `d` in the basis
/// `t^i (1 + t)^(d - 2i)` and returns the coefficients
/// `gamma_0..gamma_{floor(d/2)}`. The expansion is unique; the input is
/// gamma-positive iff all entries are nonnegative.
pub fn gamma_vector(p: &IntPolynomial) -> Result<Vec<BigInt>, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let n = p.coeffs.len();
    if let Some(i) = (0..n / 2).find(|&i| p.coeffs[i] != p.coeffs[n - 1 - i]) {
        return Err(PolyError::NotPalindromic(i));
    }
    let d = n - 1;
    let mut rest = p.coeffs.clone();
    let mut gamma = Vec::with_capacity(d / 2 + 1);
    for i in 0..=d / 2 {
        let g = rest[i].clone();
        let basis = binomial_row(d - 2 * i);
        for (j, b) in basis.iter().enumerate() {
            rest[i + j] -= &g * b;
        }
        gamma.push(g);
    }
    debug_assert!(rest.iter().all(|c| c.is_zero()));
    Ok(gamma)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_factor_shapes() {
        assert!(IntPolynomial::gap_factor(1).is_zero());
        assert_eq!(IntPolynomial::gap_factor(2), IntPolynomial::from_i64s(&[0, 1]));
        assert_eq!(
            IntPolynomial::gap_factor(4),
            IntPolynomial::from_i64s(&[0, 1, 1, 1])
        );
    }

    #[test]
    fn mul_add() {
        let a = IntPolynomial::from_i64s(&[1, 1]);
        let sq = &a * &a;
        assert_eq!(sq, IntPolynomial::from_i64s(&[1, 2, 1]));
        let mut acc = IntPolynomial::one();
        acc.add_mul_assign(&a, &sq);
        assert_eq!(acc, IntPolynomial::from_i64s(&[2, 3, 3, 1]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(IntPolynomial::from_i64s(&[1, 4, 1]).to_string(), "1 + 4t + t^2");
        assert_eq!(IntPolynomial::from_i64s(&[1, 0, 1]).to_string(), "1 + t^2");
        assert_eq!(IntPolynomial::from_i64s(&[0, 1]).to_string(), "t");
        assert_eq!(IntPolynomial::from_i64s(&[1, -2]).to_string(), "1 - 2t");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn gamma_examples() {
        // (1,2,1) = (1+t)^2
        let g = gamma_vector(&IntPolynomial::from_i64s(&[1, 2, 1])).unwrap();
        assert_eq!(g, vec![BigInt::from(1), BigInt::from(0)]);
        // (1,4,1) = (1+t)^2 + 2t
        let g = gamma_vector(&IntPolynomial::from_i64s(&[1, 4, 1])).unwrap();
        assert_eq!(g, vec![BigInt::from(1), BigInt::from(2)]);
        // (1,0,1) = (1+t)^2 - 2t: not gamma-positive
        let g = gamma_vector(&IntPolynomial::from_i64s(&[1, 0, 1])).unwrap();
        assert_eq!(g, vec![BigInt::from(1), BigInt::from(-2)]);
        assert!(matches!(
            gamma_vector(&IntPolynomial::from_i64s(&[1, 2, 3])),
            Err(PolyError::NotPalindromic(0))
        ));
    }

    #[test]
    fn gamma_reconstructs() {
        // reconstruct sum gamma_i t^i (1+t)^(d-2i) and compare
        let p = IntPolynomial::from_i64s(&[1, 5, 7, 5, 1]);
        let gamma = gamma_vector(&p).unwrap();
        let d = p.degree().unwrap();
        let mut acc = IntPolynomial::zero();
        for (i, g) in gamma.iter().enumerate() {
            let mut term = vec![BigInt::zero(); i];
            term.push(g.clone());
            let shifted = IntPolynomial::from_coeffs(term);
            let basis = IntPolynomial::from_coeffs(binomial_row(d - 2 * i));
            acc.add_mul_assign(&shifted, &basis);
        }
        assert_eq!(acc, p);
    }
}
