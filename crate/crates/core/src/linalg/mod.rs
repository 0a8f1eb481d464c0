//! Exact rational linear algebra.
//!
//! Everything downstream (hom spaces, differentials, trace pairings) is a
//! [`RatMatrix`] over arbitrary-precision rationals. Elimination is
//! fraction-free on integer rows, so no rounding ever happens.

mod algebra;
mod echelon;
mod matrix;
mod span;

pub use algebra::{jacobson_radical, FdAlgebra};
pub use echelon::Echelon;
pub use matrix::RatMatrix;
pub use span::Span;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact element of the coefficient field ℚ, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `"n"` or `"p/q"`. Whitespace and a zero denominator are rejected.
pub fn parse_rational(text: &str) -> Result<Rational> {
    if text.is_empty() || text.trim() != text {
        return Err(Error::Schema(format!("malformed rational `{text}`")));
    }
    text.parse::<Rational>()
        .map_err(|_| Error::Schema(format!("malformed rational `{text}`")))
}

pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Dot product of two equal-length vectors.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).fold(zero(), |acc, (x, y)| acc + x * y)
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vector(len: usize, index: usize) -> Vec<Rational> {
    let mut v = vec![zero(); len];
    v[index] = one();
    v
}

pub fn axpy(acc: &mut [Rational], scale: &Rational, x: &[Rational]) {
    if scale.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        *a += scale * b;
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    m.kernel_basis()
}

/// Basis of the left radical `{x : xᵀG = 0}` of the bilinear form with Gram
/// matrix `G`.
pub fn pairing_radical(gram: &RatMatrix) -> Vec<Vec<Rational>> {
    gram.transpose().kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rat_frac(-3, 2));
        assert_eq!(format_rational(&rat_frac(-3, 2)), "-3/2");
        assert_eq!(format_rational(&rat(0)), "0");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational(" 1").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn radical_examples() {
        assert!(pairing_radical(&RatMatrix::identity(3)).is_empty());
        let g = RatMatrix::from_i64(&[&[1, 0], &[0, 0]]);
        let rad = pairing_radical(&g);
        assert_eq!(rad, vec![vec![rat(0), rat(1)]]);
    }

    #[test]
    fn radical_of_rectangular_gram() {
        let g = RatMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6]]);
        let rad = pairing_radical(&g);
        assert_eq!(rad.len(), 1);
        let x = &rad[0];
        for c in 0..3 {
            let col: Vec<Rational> = (0..2).map(|r| g[(r, c)].clone()).collect();
            assert!(dot(x, &col).is_zero());
        }
    }
}
