//! Floating-point shadow of the exact layer: roots of `Λ`, numeric
//! parabolic representations at those roots, and checks of the group
//! relation and the longitude translation.
//!
//! Roots start from the eigenvalues of the companion matrix and are then
//! polished with simultaneous Newton steps (Aberth correction, so that two
//! starting points never collapse onto one root). Every polynomial value in
//! the polishing loop is computed exactly and rounded once, which keeps the
//! final roots accurate to about an ulp even for large coefficients.

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::normal_form::TwoBridgeForm;
use crate::presentation::{build_word, GroupWord};
use crate::riley::{holonomy, RileyData, RileyError};
use crate::{ComplexMatrix2, IntPolynomial};

/// Scaled residual a root must reach: `|Λ(y)| / Σ|c_i||y|^i`.
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;
/// Bound on matrix residuals such as `‖W A W⁻¹ - B‖`.
pub const DEFAULT_VERIFY_TOL: f64 = 1e-9;

const MAX_POLISH_ITERATIONS: usize = 200;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum NumericError {
    #[error("root polishing did not converge for a degree-{degree} polynomial: worst scaled residual {worst_residual:e} after {iterations} iterations")]
    DidNotConverge { degree: usize, iterations: usize, worst_residual: f64 },
    #[error("y = {y0} is not a root: scaled residual {residual:e} exceeds {tol:e}")]
    NotARoot { y0: Complex64, residual: f64, tol: f64 },
    #[error("polynomial has no roots (degree < 1)")]
    Constant,
    #[error(transparent)]
    Riley(#[from] RileyError),
}

/// `|poly(z)| / Σ|c_i||z|^i` with the numerator computed exactly.
pub fn scaled_residual(poly: &IntPolynomial, z: Complex64) -> f64 {
    let value = poly.evaluate_exact_complex(z).norm();
    let weight = poly.abs_weight(z.norm());
    if weight > 0.0 {
        value / weight
    } else {
        value
    }
}

fn companion_eigenvalues(poly: &IntPolynomial, degree: usize) -> Vec<Complex64> {
    let lead = poly.coeffs()[degree].to_f64().expect("nonzero leading coefficient");
    if degree == 1 {
        let c0 = poly.coeffs()[0].to_f64().unwrap_or(0.0);
        return vec![Complex64::new(-c0 / lead, 0.0)];
    }
    let mut m = DMatrix::<f64>::zeros(degree, degree);
    for i in 0..degree {
        if i + 1 < degree {
            m[(i + 1, i)] = 1.0;
        }
        m[(i, degree - 1)] = -poly.coeffs()[i].to_f64().unwrap_or(0.0) / lead;
    }
    m.complex_eigenvalues().iter().copied().collect()
}

/// Every complex root of `poly` with multiplicity, each with scaled
/// residual at most `tol`, sorted by real then imaginary part.
pub fn roots(poly: &IntPolynomial, tol: f64) -> Result<Vec<Complex64>, NumericError> {
    let degree = match poly.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(NumericError::Constant),
    };
    let derivative = poly.derivative();
    let mut z = companion_eigenvalues(poly, degree);
    // Non-finite starts (overflowing companion entries) restart on a circle.
    for (i, zi) in z.iter_mut().enumerate() {
        if !zi.re.is_finite() || !zi.im.is_finite() {
            let angle = 2.0 * std::f64::consts::PI * (i as f64 + 0.25) / degree as f64;
            *zi = Complex64::from_polar(1.0, angle);
        }
    }

    let mut iterations = 0;
    loop {
        let mut max_step = 0.0f64;
        for i in 0..degree {
            let value = poly.evaluate_exact_complex(z[i]);
            if value.is_zero() {
                continue;
            }
            let slope = derivative.evaluate_exact_complex(z[i]);
            let newton = value / slope;
            let repulsion: Complex64 = (0..degree).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let step = newton / (Complex64::new(1.0, 0.0) - newton * repulsion);
            if step.re.is_finite() && step.im.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        iterations += 1;
        let worst = z.iter().map(|&zi| scaled_residual(poly, zi)).fold(0.0, f64::max);
        if worst <= tol && max_step <= 1e-13 {
            break;
        }
        if iterations >= MAX_POLISH_ITERATIONS {
            if worst <= tol {
                break;
            }
            return Err(NumericError::DidNotConverge { degree, iterations, worst_residual: worst });
        }
    }

    for zi in z.iter_mut() {
        let snapped = Complex64::new(zi.re, 0.0);
        if zi.im != 0.0 && zi.im.abs() <= 1e-12 * zi.norm().max(1.0) && scaled_residual(poly, snapped) <= tol
        {
            *zi = snapped;
        }
    }
    z.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
    Ok(z)
}

/// A parabolic representation evaluated at one numeric root `y0`.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericRep {
    pub form: TwoBridgeForm,
    pub y0: Complex64,
    pub a: ComplexMatrix2,
    pub b: ComplexMatrix2,
    pub w: ComplexMatrix2,
    pub sigma: i64,
    /// Named nonnegative residuals: `lambda`, `relation`, `determinant`,
    /// `w11`, `trace_consistency`.
    pub residuals: BTreeMap<&'static str, f64>,
}

impl NumericRep {
    pub fn relation_residual(&self) -> f64 {
        self.residuals["relation"]
    }

    /// `g(y0) = w12 w22 + σ` from the numeric holonomy.
    pub fn longitude_translation(&self) -> Complex64 {
        self.w.a12 * self.w.a22 + Complex64::new(self.sigma as f64, 0.0)
    }

    /// `[[1, -2g], [0, 1]]`.
    pub fn longitude_image(&self) -> ComplexMatrix2 {
        let one = Complex64::new(1.0, 0.0);
        ComplexMatrix2::new(one, -2.0 * self.longitude_translation(), Complex64::zero(), one)
    }

    pub fn holonomy(&self, word: &GroupWord) -> ComplexMatrix2 {
        holonomy(word, &self.y0)
    }
}

pub fn instantiate_rep(form: &TwoBridgeForm, y0: Complex64, tol: f64) -> Result<NumericRep, NumericError> {
    instantiate_from(&RileyData::compute(form), y0, tol)
}

/// Like [`instantiate_rep`] but reuses an already computed `W`.
pub fn instantiate_from(data: &RileyData, y0: Complex64, tol: f64) -> Result<NumericRep, NumericError> {
    let lambda = data.lambda()?;
    let lambda_residual = scaled_residual(lambda, y0);
    if lambda_residual.is_nan() || lambda_residual > tol {
        return Err(NumericError::NotARoot { y0, residual: lambda_residual, tol });
    }
    let (one, zero) = (Complex64::new(1.0, 0.0), Complex64::zero());
    let a = ComplexMatrix2::new(one, one, zero, one);
    let b = ComplexMatrix2::new(one, zero, -y0, one);
    let w = holonomy(&build_word(&data.form), &y0);

    let conjugated = &(&w * &a) * &w.adjugate();
    let symbolic_trace = data.w.trace().evaluate_exact_complex(y0);
    let mut residuals = BTreeMap::new();
    residuals.insert("lambda", lambda_residual);
    residuals.insert("relation", conjugated.max_abs_diff(&b));
    residuals.insert("determinant", (w.det() - one).norm());
    residuals.insert("w11", w.a11.norm());
    residuals.insert("trace_consistency", (w.trace() - symbolic_trace).norm());
    Ok(NumericRep { form: data.form, y0, a, b, w, sigma: data.sigma, residuals })
}

/// `tr²(M) - 4`.
pub fn trace_function_of(m: &ComplexMatrix2) -> Complex64 {
    let t = m.trace();
    t * t - 4.0
}

/// `tr²(ρ(word)) - 4` at the representation.
pub fn trace_function(rep: &NumericRep, word: &GroupWord) -> Complex64 {
    trace_function_of(&rep.holonomy(word))
}

/// True iff the longitude image at `y0` is a nontrivial parabolic, i.e.
/// `|g(y0)| > tol`.
pub fn verify_longitude(form: &TwoBridgeForm, y0: Complex64, tol: f64) -> Result<bool, NumericError> {
    let rep = instantiate_rep(form, y0, tol)?;
    Ok(rep.longitude_translation().norm() > tol)
}

/// Numeric checks at every root of one form.
#[derive(Debug, Clone, PartialEq)]
pub struct FormVerification {
    pub form: TwoBridgeForm,
    pub reps: Vec<NumericRep>,
    pub verify_tol: f64,
}

impl FormVerification {
    pub fn max_relation_residual(&self) -> f64 {
        self.reps.iter().map(NumericRep::relation_residual).fold(0.0, f64::max)
    }

    pub fn min_longitude_translation(&self) -> f64 {
        self.reps.iter().map(|r| r.longitude_translation().norm()).fold(f64::INFINITY, f64::min)
    }

    /// Relation residual within tolerance and `|g| > tol` at every root.
    pub fn passed(&self) -> bool {
        self.reps.iter().all(|r| {
            r.relation_residual() <= self.verify_tol && r.longitude_translation().norm() > self.verify_tol
        })
    }
}

pub fn verify_form(
    form: &TwoBridgeForm,
    root_tol: f64,
    verify_tol: f64,
) -> Result<FormVerification, NumericError> {
    let data = RileyData::compute(form);
    let lambda = data.lambda()?;
    let reps = roots(lambda, root_tol)?
        .into_iter()
        .map(|y0| instantiate_from(&data, y0, root_tol))
        .collect::<Result<_, _>>()?;
    Ok(FormVerification { form: *form, reps, verify_tol })
}

/// [`verify_form`] over many forms in parallel, results in input order.
pub fn verify_batch(
    forms: &[TwoBridgeForm],
    root_tol: f64,
    verify_tol: f64,
) -> Vec<Result<FormVerification, NumericError>> {
    forms.par_iter().map(|f| verify_form(f, root_tol, verify_tol)).collect()
}
