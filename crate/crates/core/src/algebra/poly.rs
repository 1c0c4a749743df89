use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};

use super::ExactInt;

/// One-variable polynomial with exact integer coefficients.
///
/// Stored sparsely as `degree -> coefficient`; zero coefficients are never kept.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GradedPolynomial {
    coeffs: BTreeMap<usize, ExactInt>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, ExactInt::one())
    }

    pub fn monomial(degree: usize, coeff: ExactInt) -> Self {
        let mut p = Self::zero();
        p.add_term(degree, coeff);
        p
    }

    /// Builds `sum c_i t^i` from a dense coefficient list.
    pub fn from_coeffs<I, C>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<ExactInt>,
    {
        let mut p = Self::zero();
        for (deg, c) in coeffs.into_iter().enumerate() {
            p.add_term(deg, c.into());
        }
        p
    }

    pub fn add_term(&mut self, degree: usize, coeff: ExactInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(degree).or_insert_with(ExactInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.coeffs.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Highest degree with a non-zero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, degree: usize) -> ExactInt {
        self.coeffs
            .get(&degree)
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, &ExactInt)> {
        self.coeffs.iter().map(|(d, c)| (*d, c))
    }

    /// Dense coefficient vector `[c_0, ..., c_deg]`.
    pub fn to_dense(&self) -> Vec<ExactInt> {
        match self.degree() {
            None => Vec::new(),
            Some(top) => (0..=top).map(|d| self.coeff(d)).collect(),
        }
    }

    /// `P(t^power)`.
    pub fn substitute_power(&self, power: usize) -> Self {
        assert!(power >= 1, "substitution power must be at least 1");
        Self {
            coeffs: self
                .coeffs
                .iter()
                .map(|(d, c)| (d * power, c.clone()))
                .collect(),
        }
    }

    pub fn eval(&self, x: &ExactInt) -> ExactInt {
        // Horner from the top degree down.
        let Some(top) = self.degree() else {
            return ExactInt::zero();
        };
        let mut acc = ExactInt::zero();
        for d in (0..=top).rev() {
            acc = acc * x + self.coeff(d);
        }
        acc
    }

    pub fn scale(&self, factor: &ExactInt) -> Self {
        let mut out = Self::zero();
        for (d, c) in &self.coeffs {
            out.add_term(*d, c * factor);
        }
        out
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut result = Self::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Split into the even-degree and odd-degree parts.
    pub fn split_parity(&self) -> (Self, Self) {
        let mut even = Self::zero();
        let mut odd = Self::zero();
        for (d, c) in &self.coeffs {
            if d % 2 == 0 {
                even.add_term(*d, c.clone());
            } else {
                odd.add_term(*d, c.clone());
            }
        }
        (even, odd)
    }

    pub fn is_palindromic(&self) -> bool {
        match self.degree() {
            None => true,
            Some(top) => (0..=top).all(|d| self.coeff(d) == self.coeff(top - d)),
        }
    }

    pub fn has_non_negative_coeffs(&self) -> bool {
        self.coeffs.values().all(|c| !c.is_negative())
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (d, c) in &rhs.coeffs {
            out.add_term(*d, c.clone());
        }
        out
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;

    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (da, ca) in &self.coeffs {
            for (db, cb) in &rhs.coeffs {
                out.add_term(da + db, ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for GradedPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in &self.coeffs {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || *d == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match d {
                0 => {}
                1 => write!(f, "t")?,
                _ => write!(f, "t^{d}")?,
            }
        }
        Ok(())
    }
}

/// Serializes as `{"degree": "coefficient"}` with decimal-string coefficients.
impl Serialize for GradedPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = serializer.serialize_map(Some(self.coeffs.len()))?;
        for (d, c) in &self.coeffs {
            map.serialize_entry(&d.to_string(), &c.to_string())?;
        }
        map.end()
    }
}
