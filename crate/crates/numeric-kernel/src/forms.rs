//! Linear and bilinear forms used by the equilibrium solvers.

use crate::ExactScalar;

/// The affine form `a + b·p00 + c·p01 + d·p10` over the players' joint-mixture
/// simplex with `p11` eliminated (`p11 = 1 − p00 − p01 − p10`).
///
/// Evaluation at any point of the simplex is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearForm3 {
    /// Constant term.
    pub a: ExactScalar,
    /// Coefficient of `p00`.
    pub b: ExactScalar,
    /// Coefficient of `p01`.
    pub c: ExactScalar,
    /// Coefficient of `p10`.
    pub d: ExactScalar,
}

impl LinearForm3 {
    /// The identically-zero form.
    pub fn zero() -> Self {
        LinearForm3 {
            a: ExactScalar::zero(),
            b: ExactScalar::zero(),
            c: ExactScalar::zero(),
            d: ExactScalar::zero(),
        }
    }

    /// Exact evaluation at `(p00, p01, p10)`.
    pub fn eval(&self, p00: &ExactScalar, p01: &ExactScalar, p10: &ExactScalar) -> ExactScalar {
        &self.a + &(&self.b * p00) + &(&self.c * p01) + &(&self.d * p10)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &LinearForm3) -> LinearForm3 {
        LinearForm3 {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            c: &self.c + &other.c,
            d: &self.d + &other.d,
        }
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &LinearForm3) -> LinearForm3 {
        LinearForm3 {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            c: &self.c - &other.c,
            d: &self.d - &other.d,
        }
    }
}

/// The bilinear form `a + b·p1 + c·p2 + d·p1·p2` over the product square
/// `[0,1]²` of the players' independent draw-on-5 probabilities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BilinearForm {
    /// Constant term.
    pub a: ExactScalar,
    /// Coefficient of `p1`.
    pub b: ExactScalar,
    /// Coefficient of `p2`.
    pub c: ExactScalar,
    /// Coefficient of `p1·p2`.
    pub d: ExactScalar,
}

impl BilinearForm {
    /// The identically-zero form.
    pub fn zero() -> Self {
        BilinearForm {
            a: ExactScalar::zero(),
            b: ExactScalar::zero(),
            c: ExactScalar::zero(),
            d: ExactScalar::zero(),
        }
    }

    /// Exact evaluation at `(p1, p2)`.
    pub fn eval(&self, p1: &ExactScalar, p2: &ExactScalar) -> ExactScalar {
        let p1p2 = p1 * p2;
        &self.a + &(&self.b * p1) + &(&self.c * p2) + &(&self.d * &p1p2)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            a: &self.a + &other.a,
            b: &self.b + &other.b,
            c: &self.c + &other.c,
            d: &self.d + &other.d,
        }
    }

    /// Coefficient-wise difference.
    pub fn sub(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            a: &self.a - &other.a,
            b: &self.b - &other.b,
            c: &self.c - &other.c,
            d: &self.d - &other.d,
        }
    }
}
