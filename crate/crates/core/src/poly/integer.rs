use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Float, Signed, ToPrimitive, Zero};

use super::{Gf2Polynomial, PolynomialError};
use crate::{IntPolynomial, RationalPolynomial};

impl IntPolynomial {
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Nonnegative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// Divides out the content and fixes the leading coefficient positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut content = self.content();
        if self.coeffs.last().is_some_and(Signed::is_negative) {
            content = -content;
        }
        self.map(|c| c / &content)
    }

    pub fn to_rational(&self) -> RationalPolynomial {
        self.map(|c| BigRational::from(c.clone()))
    }

    /// Quotient `self / divisor` when it exists in the integer polynomial
    /// ring, `None` otherwise.
    pub fn exact_quotient(&self, divisor: &Self) -> Result<Option<Self>, PolynomialError> {
        let d_deg = divisor.degree().ok_or(PolynomialError::ZeroDivisor)?;
        if self.is_zero() {
            return Ok(Some(Self::zero()));
        }
        if self.coeffs.len() <= d_deg {
            return Ok(None);
        }
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - d_deg];
        for i in (0..quot.len()).rev() {
            let (c, r) = rem[i + d_deg].div_rem(lead);
            if !r.is_zero() {
                return Ok(None);
            }
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &c * dc;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Ok(None);
        }
        Ok(Some(Self::from_coeffs(quot)))
    }

    /// Coefficientwise parity.
    pub fn reduce_mod2(&self) -> Gf2Polynomial {
        Gf2Polynomial::from_bits(self.coeffs.iter().map(BigInt::is_odd))
    }

    pub fn evaluate_rational(&self, x: &BigRational) -> BigRational {
        self.evaluate_in(x, |c| BigRational::from(c.clone()))
    }

    /// Plain double-precision Horner evaluation.
    pub fn evaluate_complex(&self, z: Complex64) -> Complex64 {
        self.evaluate_in(&z, |c| Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0))
    }

    /// Evaluates exactly at the dyadic point `z` and rounds once at the end.
    ///
    /// Double-precision Horner loses all accuracy for the larger Riley
    /// polynomials; the rounded exact value stays accurate to an ulp.
    pub fn evaluate_exact_complex(&self, z: Complex64) -> Complex64 {
        let Some(d) = self.degree() else {
            return Complex64::new(0.0, 0.0);
        };
        // z = (a + bi) 2^-k; homogeneous Horner keeps everything integral:
        // acc_m = acc_{m-1} (a + bi) + c_{d-m} 2^{km}, value = acc_d 2^{-kd}.
        let (a, b, k) = dyadic_parts(z);
        let mut re = self.coeffs[d].clone();
        let mut im = BigInt::zero();
        for (m, c) in self.coeffs[..d].iter().rev().enumerate() {
            let scaled = c << (k * (m + 1));
            let next_re = &re * &a - &im * &b + scaled;
            im = &re * &b + &im * &a;
            re = next_re;
        }
        let e = -((k * d) as i64);
        Complex64::new(bigint_ldexp(&re, e), bigint_ldexp(&im, e))
    }

    /// Reference evaluation through `Complex<BigRational>`, kept for tests.
    #[cfg(test)]
    pub(crate) fn evaluate_rational_complex(&self, z: Complex64) -> Complex64 {
        let zq = exact_complex(z);
        let v = self.evaluate_in(&zq, |c| {
            num_complex::Complex::new(BigRational::from(c.clone()), BigRational::zero())
        });
        Complex64::new(ratio_to_f64(&v.re), ratio_to_f64(&v.im))
    }

    /// `sum |c_i| r^i`, the scale against which evaluation residuals are measured.
    pub fn abs_weight(&self, r: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.abs().to_f64().unwrap_or(f64::INFINITY))
    }
}

/// Writes finite `z` as `(a + bi) 2^-k` with integers `a`, `b` and `k >= 0`.
fn dyadic_parts(z: Complex64) -> (BigInt, BigInt, usize) {
    let decode = |x: f64| -> (BigInt, i32) {
        assert!(x.is_finite(), "evaluation point must be finite");
        let (mantissa, exponent, sign) = x.integer_decode();
        (BigInt::from(mantissa) * i64::from(sign), i32::from(exponent))
    };
    let (mut a, ea) = decode(z.re);
    let (mut b, eb) = decode(z.im);
    let e = ea.min(eb).min(0);
    a <<= (ea - e) as usize;
    b <<= (eb - e) as usize;
    (a, b, (-e) as usize)
}

/// `x 2^e` rounded to the nearest double (up to truncation in the low bits).
fn bigint_ldexp(x: &BigInt, mut e: i64) -> f64 {
    let bits = x.bits();
    let mut x = x.clone();
    if bits > 64 {
        let shift = bits - 64;
        x >>= shift;
        e += shift as i64;
    }
    let mut v = x.to_f64().unwrap_or(f64::NAN);
    while e != 0 && v != 0.0 && v.is_finite() {
        let step = e.clamp(-1000, 1000);
        v *= 2f64.powi(step as i32);
        e -= step;
    }
    v
}

#[cfg(test)]
fn exact_complex(z: Complex64) -> num_complex::Complex<BigRational> {
    let conv = |x: f64| BigRational::from_float(x).expect("finite evaluation point");
    num_complex::Complex::new(conv(z.re), conv(z.im))
}

#[cfg(test)]
fn ratio_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `a = ±d·h` for an integer polynomial `h`, after both sides are stripped of
/// powers of the variable. With minimal degree zero on both sides the only
/// remaining unit freedom is the sign, which division absorbs.
pub fn divides_up_to_units(d: &IntPolynomial, a: &IntPolynomial) -> Result<bool, PolynomialError> {
    if d.is_zero() {
        return Err(PolynomialError::ZeroDivisor);
    }
    let (_, d) = d.strip_low_degree();
    let (_, a) = a.strip_low_degree();
    Ok(a.exact_quotient(&d)?.is_some())
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    /// Independent route: division over the rationals, then an integrality
    /// check on the quotient.
    fn divides_by_rational_division(d: &IntPolynomial, a: &IntPolynomial) -> bool {
        let (_, d) = d.strip_low_degree();
        let (_, a) = a.strip_low_degree();
        let (q, r) = a.to_rational().div_rem(&d.to_rational()).unwrap();
        r.is_zero() && q.coeffs().iter().all(|c| c.is_integer())
    }

    #[test]
    fn divisibility_examples() {
        let trefoil = ip(&[1, -1, 1]);
        assert!(divides_up_to_units(&trefoil, &trefoil).unwrap());
        assert!(!divides_up_to_units(&trefoil, &ip(&[1, -3, 1])).unwrap());
        assert!(divides_up_to_units(&ip(&[1, 1]), &ip(&[1, 0, -1])).unwrap());
        assert_eq!(ip(&[1, 0, -1]).exact_quotient(&ip(&[1, 1])).unwrap(), Some(ip(&[1, -1])));
        assert_eq!(divides_up_to_units(&IntPolynomial::zero(), &trefoil), Err(PolynomialError::ZeroDivisor));
    }

    #[test]
    fn divisibility_needs_integral_quotient() {
        // 2 | 1 over the rationals but not over the integers.
        assert!(!divides_up_to_units(&ip(&[2]), &ip(&[1])).unwrap());
        assert!(divides_up_to_units(&ip(&[2]), &ip(&[2, 4])).unwrap());
        assert!(divides_up_to_units(&ip(&[-1, 1]), &ip(&[0, 0, 1, -1])).unwrap());
    }

    #[test]
    fn primitive_part_has_positive_lead() {
        assert_eq!(ip(&[4, -6, -2]).primitive_part(), ip(&[-2, 3, 1]));
        assert_eq!(ip(&[4, -6, -2]).content(), BigInt::from(2));
    }

    #[test]
    fn reduce_mod2_examples() {
        assert_eq!(ip(&[3, -1]).reduce_mod2(), Gf2Polynomial::from_bits([true, true]));
        assert_eq!(ip(&[0, -1, 1]).reduce_mod2(), Gf2Polynomial::from_bits([false, true, true]));
        assert!(ip(&[0, 0, 2]).reduce_mod2().is_zero());
    }

    #[test]
    fn exact_complex_evaluation_beats_horner() {
        // (y - 3)^20 near its root: double Horner is swamped by cancellation.
        let base = ip(&[-3, 1]);
        let p = (0..20).fold(IntPolynomial::one(), |acc, _| &acc * &base);
        let z = Complex64::new(3.0 + 1e-3, 0.0);
        let exact = p.evaluate_exact_complex(z);
        let expected = (z.re - 3.0).powi(20);
        assert!((exact.re - expected).abs() < 1e-12 * expected, "{exact}");
        assert!((p.evaluate_complex(z).re - expected).abs() > 1e3 * expected);
    }

    fn small_poly() -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn divisibility_matches_rational_oracle(d in small_poly(), a in small_poly(), h in small_poly()) {
            prop_assume!(!d.is_zero() && !d.constant_term().is_zero());
            prop_assume!(a.is_zero() || !a.constant_term().is_zero());
            prop_assert_eq!(divides_up_to_units(&d, &a).unwrap(), divides_by_rational_division(&d, &a));
            let product = &d * &h;
            prop_assert!(divides_up_to_units(&d, &product).unwrap());
        }

        #[test]
        fn dyadic_evaluation_matches_rational_route(
            a in small_poly(),
            re in -8.0f64..8.0,
            im in -8.0f64..8.0,
            tiny in any::<bool>(),
        ) {
            let z = if tiny { Complex64::new(re * 1e-9, im) } else { Complex64::new(re, im) };
            let fast = a.evaluate_exact_complex(z);
            let reference = a.evaluate_rational_complex(z);
            let scale = a.abs_weight(z.norm()).max(f64::MIN_POSITIVE);
            prop_assert!((fast - reference).norm() <= 1e-15 * scale, "{fast} vs {reference}");
        }

        #[test]
        fn mod2_is_a_ring_homomorphism(a in small_poly(), b in small_poly()) {
            prop_assert_eq!((&a * &b).reduce_mod2(), &a.reduce_mod2() * &b.reduce_mod2());
            prop_assert_eq!((&a + &b).reduce_mod2(), &a.reduce_mod2() + &b.reduce_mod2());
        }
    }
}
