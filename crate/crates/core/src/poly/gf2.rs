//! Polynomials over the two-element field, packed 64 coefficients per word.

use std::fmt;
use std::ops::{Add, Mul};

use super::PolynomialError;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Polynomial {
    words: Vec<u64>,
}

impl Gf2Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Gf2Polynomial { words: vec![1] }
    }

    /// Builds from ascending coefficient bits.
    pub fn from_bits(bits: impl IntoIterator<Item = bool>) -> Self {
        let mut words = Vec::new();
        for (i, b) in bits.into_iter().enumerate() {
            if i % 64 == 0 {
                words.push(0);
            }
            if b {
                words[i / 64] |= 1 << (i % 64);
            }
        }
        Self::normalized(words)
    }

    fn normalized(mut words: Vec<u64>) -> Self {
        while words.last() == Some(&0) {
            words.pop();
        }
        Gf2Polynomial { words }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    pub fn bit(&self, i: usize) -> bool {
        self.words.get(i / 64).is_some_and(|w| w >> (i % 64) & 1 == 1)
    }

    /// Ascending coefficient bits up to the degree.
    pub fn bits(&self) -> Vec<bool> {
        self.degree().map(|d| (0..=d).map(|i| self.bit(i)).collect()).unwrap_or_default()
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
    }

    fn xor_shifted(&mut self, other: &Self, shift: usize) {
        if let Some(d) = other.degree() {
            for i in 0..=d {
                if other.bit(i) {
                    self.flip(i + shift);
                }
            }
        }
        *self = Self::normalized(std::mem::take(&mut self.words));
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self, PolynomialError> {
        let d_deg = divisor.degree().ok_or(PolynomialError::ZeroDivisor)?;
        let mut r = self.clone();
        while let Some(r_deg) = r.degree() {
            if r_deg < d_deg {
                break;
            }
            r.xor_shifted(divisor, r_deg - d_deg);
        }
        Ok(r)
    }

    /// `divisor | self` over the two-element field.
    pub fn is_divisible_by(&self, divisor: &Self) -> Result<bool, PolynomialError> {
        Ok(self.rem(divisor)?.is_zero())
    }
}

/// True iff `d` divides `a` over the two-element field.
pub fn gf2_divides(d: &Gf2Polynomial, a: &Gf2Polynomial) -> Result<bool, PolynomialError> {
    a.is_divisible_by(d)
}

impl Add for &Gf2Polynomial {
    type Output = Gf2Polynomial;
    fn add(self, rhs: Self) -> Gf2Polynomial {
        let n = self.words.len().max(rhs.words.len());
        let words =
            (0..n).map(|i| self.words.get(i).unwrap_or(&0) ^ rhs.words.get(i).unwrap_or(&0)).collect();
        Gf2Polynomial::normalized(words)
    }
}

impl Mul for &Gf2Polynomial {
    type Output = Gf2Polynomial;
    fn mul(self, rhs: Self) -> Gf2Polynomial {
        let mut out = Gf2Polynomial::zero();
        if let Some(d) = self.degree() {
            for i in (0..=d).filter(|&i| self.bit(i)) {
                out.xor_shifted(rhs, i);
            }
        }
        out
    }
}

impl fmt::Display for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return write!(f, "0");
        };
        let terms: Vec<String> = (0..=d)
            .filter(|&i| self.bit(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "y".to_string(),
                _ => format!("y^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Debug for Gf2Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Polynomial({self})")
    }
}
