//! Polynomial evaluation and rational-bisection root refinement.
//!
//! This is the configurable-precision fallback for the one sub-search where
//! polynomial degree can exceed two (critical points along a single
//! indifference curve).  Instead of floating point it bisects with exact
//! rational midpoints down to a caller-chosen tolerance; any point it reports
//! is only an enclosure and must be re-verified by exact sign checks before
//! being used in an answer.

use num::rational::BigRational;
use num::Zero;

use crate::NumericError;

/// Evaluates `c[0] + c[1]·x + … + c[n]·xⁿ` exactly (Horner).
pub fn eval_poly(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Shrinks a sign-change bracket `[lo, hi]` of the polynomial to width at most
/// `tol` by bisection with exact rational midpoints.
///
/// Requires `poly(lo)` and `poly(hi)` to have strictly opposite signs (an
/// endpoint that is exactly a root is returned as a degenerate bracket).
pub fn refine_sign_change(
    coeffs: &[BigRational],
    lo: &BigRational,
    hi: &BigRational,
    tol: &BigRational,
) -> Result<(BigRational, BigRational), NumericError> {
    let mut lo = lo.clone();
    let mut hi = hi.clone();
    let f_lo = eval_poly(coeffs, &lo);
    let f_hi = eval_poly(coeffs, &hi);
    if f_lo.is_zero() {
        return Ok((lo.clone(), lo));
    }
    if f_hi.is_zero() {
        return Ok((hi.clone(), hi));
    }
    let neg_lo = f_lo < BigRational::zero();
    if neg_lo == (f_hi < BigRational::zero()) {
        return Err(NumericError::NoSignChange);
    }
    let half = BigRational::new(1.into(), 2.into());
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) * &half;
        let f_mid = eval_poly(coeffs, &mid);
        if f_mid.is_zero() {
            return Ok((mid.clone(), mid));
        }
        if (f_mid < BigRational::zero()) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi))
}
