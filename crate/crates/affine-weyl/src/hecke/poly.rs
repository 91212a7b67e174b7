//! Polynomials in `ξ = v − v⁻¹` and Laurent polynomials in `v`.

use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

/// A polynomial `Σ coeffs[k] ξᵏ` with integer coefficients, trimmed so the
/// last coefficient is nonzero. The zero polynomial has no coefficients and
/// degree `None` (−∞).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct XiPoly {
    coeffs: Vec<i64>,
}

impl XiPoly {
    /// Builds a polynomial from coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        XiPoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        XiPoly { coeffs: Vec::new() }
    }

    /// The constant 1.
    pub fn one() -> Self {
        XiPoly { coeffs: vec![1] }
    }

    /// `ξ`.
    pub fn xi() -> Self {
        XiPoly { coeffs: vec![0, 1] }
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient of `ξᵏ`.
    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Multiplication by `ξ`.
    pub fn times_xi(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = Vec::with_capacity(self.coeffs.len() + 1);
        c.push(0);
        c.extend_from_slice(&self.coeffs);
        XiPoly { coeffs: c }
    }

    /// Value at an integer `ξ`.
    pub fn eval(&self, xi: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * xi + c)
    }

    /// Expansion in `v`, substituting `ξ = v − v⁻¹`.
    pub fn to_laurent(&self) -> LaurentPoly {
        let base = LaurentPoly::monomial(1, 1).sub(&LaurentPoly::monomial(-1, 1));
        let mut acc = LaurentPoly::zero();
        let mut power = LaurentPoly::monomial(0, 1);
        for &c in &self.coeffs {
            acc = acc.add(&power.scale(c));
            power = power.mul(&base);
        }
        acc
    }
}

impl Add for &XiPoly {
    type Output = XiPoly;
    fn add(self, o: &XiPoly) -> XiPoly {
        let len = self.coeffs.len().max(o.coeffs.len());
        XiPoly::new((0..len).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Mul for &XiPoly {
    type Output = XiPoly;
    fn mul(self, o: &XiPoly) -> XiPoly {
        if self.is_zero() || o.is_zero() {
            return XiPoly::zero();
        }
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        XiPoly::new(c)
    }
}

impl fmt::Display for XiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| match k {
                0 => c.to_string(),
                1 if c == 1 => "ξ".to_string(),
                1 => format!("{c}ξ"),
                _ if c == 1 => format!("ξ^{k}"),
                _ => format!("{c}ξ^{k}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A Laurent polynomial `Σ coeffs[k] v^{low+k}` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<i64>,
}

impl LaurentPoly {
    fn normalized(mut low: i64, mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|&&c| c == 0).count();
        coeffs.drain(..lead);
        low += lead as i64;
        if coeffs.is_empty() {
            low = 0;
        }
        LaurentPoly { low, coeffs }
    }

    /// Zero.
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    /// `c vᵉ`.
    pub fn monomial(e: i64, c: i64) -> Self {
        Self::normalized(e, vec![c])
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `vᵉ`.
    pub fn coeff(&self, e: i64) -> i64 {
        let k = e - self.low;
        if k < 0 {
            0
        } else {
            self.coeffs.get(k as usize).copied().unwrap_or(0)
        }
    }

    /// `(exponent, coefficient)` pairs with nonzero coefficient.
    pub fn terms(&self) -> Vec<(i64, i64)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (self.low + k as i64, c))
            .collect()
    }

    /// Sum.
    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.low.min(o.low);
        let high = (self.low + self.coeffs.len() as i64).max(o.low + o.coeffs.len() as i64);
        Self::normalized(low, (low..high).map(|e| self.coeff(e) + o.coeff(e)).collect())
    }

    /// Difference.
    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(-1))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: i64) -> Self {
        Self::normalized(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Product.
    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::normalized(self.low + o.low, c)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .terms()
            .into_iter()
            .rev()
            .map(|(e, c)| match e {
                0 => c.to_string(),
                1 => format!("{c}v"),
                _ => format!("{c}v^{e}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xi_arithmetic() {
        let a = XiPoly::new(vec![1, 2]);
        let b = XiPoly::new(vec![0, 1, 1, 0]);
        assert_eq!(b.coeffs(), &[0, 1, 1]);
        assert_eq!((&a * &b).coeffs(), &[0, 1, 3, 2]);
        assert_eq!((&a + &b).coeffs(), &[1, 3, 1]);
        assert_eq!(XiPoly::zero().degree(), None);
        assert_eq!(b.times_xi().degree(), Some(3));
        assert_eq!(a.eval(0), 1);
    }

    #[test]
    fn laurent_expansion() {
        // ξ² = v² − 2 + v⁻²
        let sq = XiPoly::new(vec![0, 0, 1]).to_laurent();
        assert_eq!(sq.terms(), vec![(-2, 1), (0, -2), (2, 1)]);
        assert_eq!(XiPoly::xi().to_string(), "ξ");
    }
}
