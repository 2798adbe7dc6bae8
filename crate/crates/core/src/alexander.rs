//! Alexander polynomials from Fox calculus, torus-knot closed forms, and the
//! finite list of torus knots whose Alexander polynomial divides a given one.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::normal_form::TwoBridgeForm;
use crate::poly::divides_up_to_units;
use crate::presentation::{build_relator, fox_derivative, Generator, LaurentPolynomial};
use crate::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlexanderError {
    #[error("torus parameters ({r}, {s}) are not coprime")]
    NotCoprime { r: u32, s: u32 },
    #[error("torus parameters ({r}, {s}) out of range: need 2 <= r < s")]
    OutOfRange { r: u32, s: u32 },
}

/// Alexander polynomial with lowest degree 0 and positive constant term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AlexanderPolynomial {
    poly: IntPolynomial,
}

impl AlexanderPolynomial {
    /// Normalizes away the units `±t^k`.
    pub fn from_poly(poly: &IntPolynomial) -> Self {
        let (_, mut poly) = poly.strip_low_degree();
        if poly.constant_term().is_negative() {
            poly = -poly;
        }
        AlexanderPolynomial { poly }
    }

    pub fn from_laurent(l: &LaurentPolynomial) -> Self {
        Self::from_poly(&l.poly)
    }

    pub fn poly(&self) -> &IntPolynomial {
        &self.poly
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn at(&self, t: i64) -> BigInt {
        self.poly.evaluate(&BigInt::from(t))
    }

    /// Coefficients read the same reversed, up to an overall sign.
    pub fn is_palindromic_up_to_sign(&self) -> bool {
        let rev = self.poly.reversed();
        rev == self.poly || rev == -self.poly.clone()
    }

    /// `self` divides `other` up to the units `±t^k`.
    pub fn divides(&self, other: &Self) -> bool {
        !self.is_zero() && divides_up_to_units(&self.poly, &other.poly).unwrap_or(false)
    }
}

impl fmt::Display for AlexanderPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly.display("t"))
    }
}

/// The abelianized Fox partials `(∂R/∂x1, ∂R/∂x2)` of the relator.
pub fn relator_partials(form: &TwoBridgeForm) -> (LaurentPolynomial, LaurentPolynomial) {
    let relator = build_relator(form);
    (
        fox_derivative(&relator, Generator::X1).abelianize(),
        fox_derivative(&relator, Generator::X2).abelianize(),
    )
}

/// Alexander polynomial from the `x1` Fox partial of the relator.
pub fn alexander_polynomial(form: &TwoBridgeForm) -> AlexanderPolynomial {
    let (d1, d2) = relator_partials(form);
    debug_assert_eq!(d1, d2.neg(), "Fox partials of {form} disagree");
    AlexanderPolynomial::from_laurent(&d1)
}

/// `(t^{rs} - 1)(t - 1) / ((t^r - 1)(t^s - 1))`.
pub fn torus_alexander(r: u32, s: u32) -> Result<AlexanderPolynomial, AlexanderError> {
    if r < 2 || s <= r {
        return Err(AlexanderError::OutOfRange { r, s });
    }
    if r.gcd(&s) != 1 {
        return Err(AlexanderError::NotCoprime { r, s });
    }
    let t_minus_one =
        |k: usize| &IntPolynomial::monomial(BigInt::from(1), k) - &IntPolynomial::constant(BigInt::from(1));
    let numerator = &t_minus_one(r as usize * s as usize) * &t_minus_one(1);
    let denominator = &t_minus_one(r as usize) * &t_minus_one(s as usize);
    let quotient = numerator
        .exact_quotient(&denominator)
        .expect("nonzero denominator")
        .expect("cyclotomic quotient is integral for coprime r, s");
    Ok(AlexanderPolynomial::from_poly(&quotient))
}

/// `|Δ(-1)|`; equals `p` for a 2-bridge knot.
pub fn knot_determinant(form: &TwoBridgeForm) -> BigInt {
    alexander_polynomial(form).at(-1).abs()
}

/// Every coprime `2 <= r < s` with `(r-1)(s-1) <= deg Δ` whose torus
/// Alexander polynomial divides `Δ`, ascending in `(r, s)`.
///
/// The degree bound makes the candidate list finite.
pub fn torus_targets(delta: &AlexanderPolynomial) -> Vec<(u32, u32)> {
    torus_candidates(delta.degree())
        .into_iter()
        .filter(|&(r, s)| torus_alexander(r, s).map(|t| t.divides(delta)).unwrap_or(false))
        .collect()
}

/// Coprime pairs `2 <= r < s` with `(r-1)(s-1) <= max_degree`.
pub fn torus_candidates(max_degree: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let bound = max_degree as u64;
    let mut r = 2u32;
    // smallest degree for this r is at s = r + 1
    while u64::from(r - 1) * u64::from(r) <= bound {
        let mut s = r + 1;
        while u64::from(r - 1) * u64::from(s - 1) <= bound {
            if r.gcd(&s) == 1 {
                out.push((r, s));
            }
            s += 1;
        }
        r += 1;
    }
    out
}
