//! 2x2 matrices over any [`Ring`].

use std::ops::Mul;

use num_traits::One;

use crate::scalar::Ring;

/// Row-major 2x2 matrix `[[a11, a12], [a21, a22]]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix2<T> {
    pub a11: T,
    pub a12: T,
    pub a21: T,
    pub a22: T,
}

impl<T: Ring> Matrix2<T> {
    pub fn new(a11: T, a12: T, a21: T, a22: T) -> Self {
        Matrix2 { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        Self::new(T::one(), T::zero(), T::zero(), T::one())
    }

    pub fn det(&self) -> T {
        self.a11.clone() * self.a22.clone() - self.a12.clone() * self.a21.clone()
    }

    pub fn trace(&self) -> T {
        self.a11.clone() + self.a22.clone()
    }

    /// Adjugate; equals the inverse when the determinant is one.
    pub fn adjugate(&self) -> Self {
        Self::new(self.a22.clone(), -self.a12.clone(), -self.a21.clone(), self.a11.clone())
    }

    pub fn entries(&self) -> [&T; 4] {
        [&self.a11, &self.a12, &self.a21, &self.a22]
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix2<U> {
        Matrix2::new(f(&self.a11), f(&self.a12), f(&self.a21), f(&self.a22))
    }
}

impl<T: Ring> Mul for &Matrix2<T> {
    type Output = Matrix2<T>;
    fn mul(self, rhs: Self) -> Matrix2<T> {
        let dot = |a: &T, b: &T, c: &T, d: &T| a.clone() * b.clone() + c.clone() * d.clone();
        Matrix2::new(
            dot(&self.a11, &rhs.a11, &self.a12, &rhs.a21),
            dot(&self.a11, &rhs.a12, &self.a12, &rhs.a22),
            dot(&self.a21, &rhs.a11, &self.a22, &rhs.a21),
            dot(&self.a21, &rhs.a12, &self.a22, &rhs.a22),
        )
    }
}

impl<T: Ring> Mul for Matrix2<T> {
    type Output = Matrix2<T>;
    fn mul(self, rhs: Self) -> Matrix2<T> {
        &self * &rhs
    }
}

impl Matrix2<num_complex::Complex64> {
    /// Largest absolute entry difference.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.entries().iter().zip(other.entries()).map(|(a, b)| (**a - b).norm()).fold(0.0, f64::max)
    }
}

impl<T: Ring> One for Matrix2<T> {
    fn one() -> Self {
        Self::identity()
    }
}

impl<T: Ring> Matrix2<T> {
    pub fn is_identity(&self) -> bool {
        self.a11.is_one() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_one()
    }
}
