//! Exact computations on 2-bridge knot groups.
//!
//! Starting from a normal form `(p, q)` the crate builds the two-generator
//! presentation of the knot group, the Riley polynomial `Λ(y)` whose roots
//! parametrize parabolic representations, the longitude translation
//! polynomial `g(y)`, and the Alexander polynomial. On top of these it
//! produces certificates that no parabolic representation kills the
//! longitude, and Alexander-polynomial obstructions to epimorphisms between
//! knot groups.
//!
//! The algebra is generic over the scalar ring (see [`scalar::Ring`]); the
//! aliases below fix the instances used throughout.

pub mod alexander;
pub mod matrix;
pub mod normal_form;
pub mod numeric;
pub mod obstruction;
pub mod poly;
pub mod presentation;
pub mod riley;
pub mod scalar;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;

pub use matrix::Matrix2;
pub use normal_form::{enumerate_forms, KnotClass, NormalFormError, TwoBridgeForm};
pub use poly::{Gf2Polynomial, Polynomial, PolynomialError};
pub use presentation::{GroupRingElement, GroupWord, LaurentPolynomial};

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPolynomial = Polynomial<BigInt>;
/// Polynomial over the rationals.
pub type RationalPolynomial = Polynomial<BigRational>;
/// 2x2 matrix over the integer polynomial ring.
pub type PolyMatrix2 = Matrix2<IntPolynomial>;
/// 2x2 matrix of complex doubles.
pub type ComplexMatrix2 = Matrix2<Complex64>;
/// 2x2 matrix of integers.
pub type IntMatrix2 = Matrix2<BigInt>;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");
