//! Exact Gaussian elimination for the small square systems that arise from
//! indifference-plane intersections and kernel-game equalization.

use crate::{ExactScalar, NumericError};

/// Outcome of an exact linear solve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    /// The unique exact solution vector.
    Unique(Vec<ExactScalar>),
    /// The coefficient matrix is singular (the system may be inconsistent or
    /// underdetermined; callers that need the distinction re-derive it).
    Singular,
}

/// Solves the square system `rows · x = rhs` exactly.
///
/// Intended for systems up to 4×4 (plane intersections and kernel solves);
/// any square size is accepted.  Returns [`LinearSolution::Singular`] when the
/// matrix has no inverse and an error when the dimensions are inconsistent.
pub fn solve_linear_system(
    rows: &[Vec<ExactScalar>],
    rhs: &[ExactScalar],
) -> Result<LinearSolution, NumericError> {
    let n = rows.len();
    if rhs.len() != n {
        return Err(NumericError::DimensionMismatch(format!(
            "matrix has {n} rows but rhs has {} entries",
            rhs.len()
        )));
    }
    for (i, row) in rows.iter().enumerate() {
        if row.len() != n {
            return Err(NumericError::DimensionMismatch(format!(
                "row {i} has {} entries in a {n}×{n} system",
                row.len()
            )));
        }
    }

    // Augmented matrix, eliminated in place.
    let mut m: Vec<Vec<ExactScalar>> = rows
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();

    for col in 0..n {
        // Pivot: first row at or below `col` with a nonzero entry.
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Ok(LinearSolution::Singular);
        };
        m.swap(col, pivot);
        let inv = m[col][col].invert()?;
        for k in col..=n {
            m[col][k] = &m[col][k] * &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let factor = m[r][col].clone();
                for k in col..=n {
                    let delta = &factor * &m[col][k];
                    m[r][k] = &m[r][k] - &delta;
                }
            }
        }
    }

    Ok(LinearSolution::Unique(
        m.into_iter().map(|row| row[row.len() - 1].clone()).collect(),
    ))
}

/// Solves the quadratic `c2·x² + c1·x + c0 = 0` over the reals, exactly.
///
/// Coefficients must be rational scalars.  Returns the real roots sorted
/// ascending as `(root, multiplicity)` pairs; a negative discriminant yields
/// an empty result, a zero discriminant a single root of multiplicity two,
/// and a vanishing leading coefficient falls back to the linear case.
pub fn solve_quadratic(
    c2: &ExactScalar,
    c1: &ExactScalar,
    c0: &ExactScalar,
) -> Result<Vec<(ExactScalar, u32)>, NumericError> {
    let r2 = c2
        .as_rational()
        .ok_or_else(|| NumericError::DimensionMismatch("quadratic coefficients must be rational".into()))?;
    let r1 = c1
        .as_rational()
        .ok_or_else(|| NumericError::DimensionMismatch("quadratic coefficients must be rational".into()))?;
    let r0 = c0
        .as_rational()
        .ok_or_else(|| NumericError::DimensionMismatch("quadratic coefficients must be rational".into()))?;

    use num::Zero;
    if r2.is_zero() {
        if r1.is_zero() {
            // Constant equation: either no roots or the zero polynomial
            // (the latter is excluded by the caller contract).
            return Ok(Vec::new());
        }
        let root = ExactScalar::from_rational(-(r0 / r1));
        return Ok(vec![(root, 1)]);
    }

    let four = num::rational::BigRational::from_integer(4.into());
    let disc = r1 * r1 - four * r2 * r0;
    if disc < num::rational::BigRational::zero() {
        return Ok(Vec::new());
    }
    let two_a = num::rational::BigRational::from_integer(2.into()) * r2;
    let neg_b = -(r1 / &two_a);
    if disc.is_zero() {
        return Ok(vec![(ExactScalar::from_rational(neg_b), 2)]);
    }
    let sqrt_disc = ExactScalar::sqrt_rational(&disc)?;
    let offset = &sqrt_disc * &ExactScalar::from_rational(two_a.recip());
    let base = ExactScalar::from_rational(neg_b);
    let mut roots = vec![(&base - &offset, 1), (&base + &offset, 1)];
    roots.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(roots)
}
