//! Exact rational coefficients.
//!
//! All coefficient arithmetic in the crate runs over arbitrary-precision
//! rationals kept in lowest terms with a positive denominator, so dimension
//! counts are never corrupted by rounding.

use num_bigint::BigInt;
use num_rational::BigRational;

/// The coefficient field: arbitrary-precision rationals.
pub type Rat = BigRational;

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` in lowest terms. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn lowest_terms_and_sign() {
        let r = rat(4, -6);
        assert_eq!(r, rat(-2, 3));
        assert!(r.denom() > &BigInt::zero());
        assert_eq!(rat(0, 5), rat_int(0));
    }
}
