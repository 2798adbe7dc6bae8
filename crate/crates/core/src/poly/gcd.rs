//! Gcd over the rationals via the primitive pseudo-remainder sequence.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::PolynomialError;
use crate::IntPolynomial;

impl IntPolynomial {
    /// Pseudo-remainder `prem(self, divisor)`: the remainder of
    /// `lc(divisor)^(deg self - deg divisor + 1) * self` by `divisor`,
    /// computed without leaving the integers.
    pub fn pseudo_rem(&self, divisor: &Self) -> Result<Self, PolynomialError> {
        let d_deg = divisor.degree().ok_or(PolynomialError::ZeroDivisor)?;
        let lead = &divisor.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        while rem.len() > d_deg {
            let top = rem.len() - 1;
            let c = rem[top].clone();
            let shift = top - d_deg;
            for x in rem.iter_mut() {
                *x *= lead;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * dc;
            }
            debug_assert!(rem[top].is_zero());
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        Ok(Self::from_coeffs(rem))
    }
}

/// Greatest common divisor in the rational polynomial ring, returned as a
/// primitive integer polynomial with positive leading coefficient.
pub fn gcd_rational(a: &IntPolynomial, b: &IntPolynomial) -> Result<IntPolynomial, PolynomialError> {
    if a.is_zero() && b.is_zero() {
        return Err(PolynomialError::BothZero);
    }
    let (mut u, mut v) = (a.primitive_part(), b.primitive_part());
    if u.degree() < v.degree() {
        std::mem::swap(&mut u, &mut v);
    }
    while !v.is_zero() {
        let r = u.pseudo_rem(&v)?;
        u = v;
        v = r.primitive_part();
    }
    if u.is_constant() {
        return Ok(IntPolynomial::constant(BigInt::from(1)));
    }
    debug_assert!(u.leading_coefficient().is_some_and(Signed::is_positive));
    Ok(u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::divides_up_to_units;
    use proptest::prelude::*;

    fn ip(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd_rational(&ip(&[1, 1, 1]), &ip(&[0, -1, 1])).unwrap(), ip(&[1]));
        assert_eq!(gcd_rational(&ip(&[4, 0, -6]), &IntPolynomial::zero()).unwrap(), ip(&[-2, 0, 3]));
        assert_eq!(gcd_rational(&ip(&[1, 0, 0, -1]), &ip(&[1, 1, 1])).unwrap(), ip(&[1, 1, 1]));
        assert_eq!(
            gcd_rational(&IntPolynomial::zero(), &IntPolynomial::zero()),
            Err(PolynomialError::BothZero)
        );
    }

    #[test]
    fn gcd_of_constants_is_one() {
        assert_eq!(gcd_rational(&ip(&[1, -1]), &ip(&[3])).unwrap(), ip(&[1]));
        assert_eq!(gcd_rational(&ip(&[6]), &ip(&[4])).unwrap(), ip(&[1]));
    }

    #[test]
    fn pseudo_remainder_by_hand() {
        // prem(y^2 + y + 1, y^2 - y) = (y^2 + y + 1) - (y^2 - y) = 2y + 1
        assert_eq!(ip(&[1, 1, 1]).pseudo_rem(&ip(&[0, -1, 1])).unwrap(), ip(&[1, 2]));
        // prem(y^2 + 1, 2y + 1) = 4(y^2+1) - (2y - 1)(2y + 1) = 5
        assert_eq!(ip(&[1, 0, 1]).pseudo_rem(&ip(&[1, 2])).unwrap(), ip(&[5]));
    }

    fn poly_upto(deg: usize) -> impl Strategy<Value = IntPolynomial> {
        prop::collection::vec(-9i64..=9, 0..=deg + 1).prop_map(|c| IntPolynomial::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn gcd_divides_both(a in poly_upto(12), b in poly_upto(12), common in poly_upto(3)) {
            prop_assume!(!common.is_zero());
            let (a, b) = (&a * &common, &b * &common);
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = gcd_rational(&a, &b).unwrap();
            // Work modulo powers of y, matching the divisibility contract.
            for x in [&a, &b] {
                if !x.is_zero() {
                    let (_, g) = g.strip_low_degree();
                    prop_assert!(divides_up_to_units(&g, x).unwrap());
                }
            }
            // The planted common factor divides the gcd over the rationals.
            let (_, common_pp) = common.primitive_part().strip_low_degree();
            let (_, g_stripped) = g.strip_low_degree();
            let (_, r) = g_stripped.to_rational().div_rem(&common_pp.to_rational()).unwrap();
            prop_assert!(r.is_zero());
        }
    }
}
