//! Exact number types and linear-algebra primitives for the baccara banque
//! solvers.
//!
//! Every quantity that appears in an equilibrium computation — stake ratios,
//! payoffs, mixing probabilities — is held either as an arbitrary-precision
//! rational or as an element `a + b·√d` of a real quadratic field.  All
//! comparisons are decided exactly (no floating point is consulted for any
//! final answer); a rational-bisection refinement utility stands in for a
//! high-precision float fallback where polynomial degrees exceed two, and any
//! point it produces must be re-verified by exact sign checks.
//!
//! The module also provides the two small "form" types used throughout the
//! solvers ([`LinearForm3`] over the players' joint-mixture simplex and
//! [`BilinearForm`] over the product square), an exact Gaussian-elimination
//! solver for systems up to 4×4, and an exact quadratic-equation solver whose
//! roots may live in a quadratic field.

mod forms;
mod linalg;
mod poly;
mod scalar;

pub use forms::{BilinearForm, LinearForm3};
pub use linalg::{solve_linear_system, solve_quadratic, LinearSolution};
pub use poly::{eval_poly, refine_sign_change};
pub use scalar::ExactScalar;

use thiserror::Error;

/// Errors raised by the exact-arithmetic layer.
#[derive(Debug, Error)]
pub enum NumericError {
    /// Arithmetic attempted between elements of distinct quadratic fields
    /// `Q(√d1)` and `Q(√d2)`; the result would leave degree 2.
    #[error("cannot combine quadratic elements with distinct radicands {0} and {1}")]
    MixedRadicands(String, String),
    /// Division by an exactly zero scalar.
    #[error("division by zero")]
    DivisionByZero,
    /// Square root of a negative quantity was requested.
    #[error("square root of negative value")]
    NegativeSqrt,
    /// A linear system was presented with inconsistent dimensions.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    /// Bisection refinement was asked for an interval without a sign change.
    #[error("no sign change on the given interval")]
    NoSignChange,
}
