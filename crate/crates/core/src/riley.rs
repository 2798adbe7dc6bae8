//! Parabolic representations of 2-bridge knot groups.
//!
//! The meridians go to `A = [[1, 1], [0, 1]]` and `B = [[1, 0], [-y, 1]]`.
//! The image `W` of the word `w` is a 2x2 matrix over `Z[y]`; its `(1,1)`
//! entry is the Riley polynomial `Λ(y)`, and at a root of `Λ` the longitude
//! commuting with `x1` maps to `[[1, -2g], [0, 1]]` with
//! `g = w12 w22 + σ`.
//!
//! The certificate that no parabolic representation kills the longitude
//! has two parts:
//!
//! * `gcd(Λ, g) = 1` over the rationals, so `Λ` and `g` share no root;
//! * `Λ mod 2` divides `(g mod 2) - 1`, so `g ≡ 1 (mod 2)` at every root.
//!   The second comes from comparing `W` with the matrix `W′` of the torus
//!   knot `(p, 1)`, built by the recursion `f_{j+1} = f_j + y g_j`,
//!   `g_{j+1} = f_{j+1} + g_j`, which agrees with `W` modulo 2.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use rayon::prelude::*;

use crate::normal_form::{KnotClass, TwoBridgeForm};
use crate::poly::{gcd_rational, gf2_divides, Gf2Polynomial};
use crate::presentation::{build_word, Generator, GroupWord};
use crate::scalar::Ring;
use crate::{IntPolynomial, Matrix2, PolyMatrix2};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RileyError {
    #[error("Riley polynomial of {form} has degree {found:?} and constant term {constant}; expected degree {expected} and constant term 1")]
    DegreeMismatch { form: TwoBridgeForm, expected: usize, found: Option<usize>, constant: BigInt },
    #[error("torus recursion needs n >= 1, got {0}")]
    InvalidLength(usize),
}

/// The parabolic image of a meridian letter, `y` being the representation parameter.
pub fn letter_matrix<T: Ring>(generator: Generator, exponent: i8, y: &T) -> Matrix2<T> {
    let (o, z) = (T::one(), T::zero());
    match (generator, exponent) {
        (Generator::X1, 1) => Matrix2::new(o.clone(), o.clone(), z, o),
        (Generator::X1, _) => Matrix2::new(o.clone(), -o.clone(), z, o),
        (Generator::X2, 1) => Matrix2::new(o.clone(), z, -y.clone(), o),
        (Generator::X2, _) => Matrix2::new(o.clone(), z, y.clone(), o),
    }
}

/// Product of the letter images along `word`, over any ring holding `y`.
pub fn holonomy<T: Ring>(word: &GroupWord, y: &T) -> Matrix2<T> {
    word.letters()
        .iter()
        .fold(Matrix2::identity(), |acc, l| &acc * &letter_matrix(l.generator, l.exponent, y))
}

/// Exact holonomy over `Z[y]`.
pub fn holonomy_matrix(word: &GroupWord) -> PolyMatrix2 {
    holonomy(word, &IntPolynomial::var())
}

/// `W` together with the quantities derived from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RileyData {
    pub form: TwoBridgeForm,
    pub w: PolyMatrix2,
    pub sigma: i64,
}

impl RileyData {
    pub fn compute(form: &TwoBridgeForm) -> Self {
        RileyData { form: *form, w: holonomy_matrix(&build_word(form)), sigma: form.sigma() }
    }

    /// `Λ(y) = w11`, checked for degree `(p-1)/2` and `Λ(0) = 1`.
    pub fn lambda(&self) -> Result<&IntPolynomial, RileyError> {
        let lambda = &self.w.a11;
        let expected = self.form.half_length();
        let constant = lambda.constant_term();
        if lambda.degree() != Some(expected) || !constant.is_one() {
            return Err(RileyError::DegreeMismatch {
                form: self.form,
                expected,
                found: lambda.degree(),
                constant,
            });
        }
        if let Some(lead) = lambda.leading_coefficient() {
            if !lead.abs().is_one() {
                log::warn!("Riley polynomial of {} has leading coefficient {lead}", self.form);
            }
        }
        Ok(lambda)
    }

    /// `g = w12 w22 + σ`.
    pub fn longitude_translation(&self) -> IntPolynomial {
        &(&self.w.a12 * &self.w.a22) + &IntPolynomial::constant(BigInt::from(self.sigma))
    }
}

pub fn riley_polynomial(form: &TwoBridgeForm) -> Result<IntPolynomial, RileyError> {
    RileyData::compute(form).lambda().cloned()
}

pub fn longitude_translation(form: &TwoBridgeForm) -> IntPolynomial {
    RileyData::compute(form).longitude_translation()
}

/// The sequences `f_0..f_n`, `g_0..g_n` and the matrix
/// `W′ = [[f_n, g_{n-1}], [y g_{n-1}, f_{n-1}]]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusRecursion {
    pub f: Vec<IntPolynomial>,
    pub g: Vec<IntPolynomial>,
    pub w_prime: PolyMatrix2,
}

pub fn torus_recursion(n: usize) -> Result<TorusRecursion, RileyError> {
    if n == 0 {
        return Err(RileyError::InvalidLength(n));
    }
    let y = IntPolynomial::var();
    let mut f = vec![IntPolynomial::one()];
    let mut g = vec![IntPolynomial::one()];
    for j in 0..n {
        let next_f = &f[j] + &(&y * &g[j]);
        let next_g = &next_f + &g[j];
        f.push(next_f);
        g.push(next_g);
    }
    let w_prime = Matrix2::new(f[n].clone(), g[n - 1].clone(), &y * &g[n - 1], f[n - 1].clone());
    Ok(TorusRecursion { f, g, w_prime })
}

fn reduce_matrix(m: &PolyMatrix2) -> [Gf2Polynomial; 4] {
    m.entries().map(IntPolynomial::reduce_mod2)
}

/// Entrywise comparison of `W` for `form` with `W′` for `(p, 1)` modulo 2.
pub fn mod2_congruence_check(form: &TwoBridgeForm) -> bool {
    let data = RileyData::compute(form);
    mod2_congruent(&data)
}

fn mod2_congruent(data: &RileyData) -> bool {
    let torus = torus_recursion(data.form.half_length()).expect("p >= 3 gives n >= 1");
    reduce_matrix(&data.w) == reduce_matrix(&torus.w_prime)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Certified,
    Failed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Certified => "Certified",
            Verdict::Failed => "Failed",
        }
    }
}

/// Evidence that no parabolic representation of the knot group sends the
/// longitude to the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyLCertificate {
    pub form: TwoBridgeForm,
    pub class: KnotClass,
    pub lambda: IntPolynomial,
    pub g: IntPolynomial,
    pub gcd_rational_result: IntPolynomial,
    /// `Λ mod 2` divides `(g mod 2) - 1`.
    pub gf2_divides_result: bool,
    /// `W ≡ W′ (mod 2)`, reported alongside; not part of the verdict.
    pub mod2_congruence: bool,
    pub verdict: Verdict,
}

impl PropertyLCertificate {
    pub fn gcd_is_one(&self) -> bool {
        self.gcd_rational_result.is_one()
    }

    /// Torus forms are certified too, but the result is informational.
    pub fn is_informational(&self) -> bool {
        self.class.is_torus()
    }
}

pub fn property_l_certificate(form: &TwoBridgeForm) -> Result<PropertyLCertificate, RileyError> {
    let data = RileyData::compute(form);
    let lambda = data.lambda()?.clone();
    let g = data.longitude_translation();
    let gcd = gcd_rational(&lambda, &g).expect("Λ(0) = 1 so Λ is nonzero");
    let g_minus_one = &g.reduce_mod2() + &Gf2Polynomial::one();
    let divides = gf2_divides(&lambda.reduce_mod2(), &g_minus_one)
        .expect("Λ has odd constant term so Λ mod 2 is nonzero");
    let verdict = if gcd.is_one() && divides { Verdict::Certified } else { Verdict::Failed };
    Ok(PropertyLCertificate {
        form: *form,
        class: form.classify(),
        mod2_congruence: mod2_congruent(&data),
        lambda,
        g,
        gcd_rational_result: gcd,
        gf2_divides_result: divides,
        verdict,
    })
}

/// Certificates for many forms, computed in parallel, in input order.
pub fn certify_batch(forms: &[TwoBridgeForm]) -> Vec<Result<PropertyLCertificate, RileyError>> {
    forms.par_iter().map(property_l_certificate).collect()
}
