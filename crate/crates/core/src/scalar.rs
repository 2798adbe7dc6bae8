//! Scalar traits shared by the exact and floating-point layers.
//!
//! Everything that multiplies 2x2 matrices or evaluates polynomials is
//! written against [`Ring`], so the same code runs over `BigInt`,
//! `BigRational`, integer polynomials, `f64` and `Complex<f64>`.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

/// Commutative ring with identity, by value arithmetic.
pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Ring for T where
    T: Clone
        + PartialEq
        + Debug
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Neg<Output = T>
{
}

/// A [`Ring`] whose `Div` is exact field division.
///
/// Implemented explicitly: `BigInt` also has a `Div`, but it truncates.
pub trait Field: Ring + Div<Output = Self> {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for Complex<f32> {}
impl Field for Complex<f64> {}
impl Field for Ratio<BigInt> {}
impl Field for Ratio<i64> {}
