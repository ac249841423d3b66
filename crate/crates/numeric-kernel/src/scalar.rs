//! The universal exact scalar: arbitrary-precision rationals, optionally
//! extended to a real quadratic field element `a + b·√d`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::bigint::{BigInt, Sign};
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::NumericError;

/// Trial-division bound used when extracting the square part of a radicand.
///
/// Discriminants arising from the game's quadratics are made square-free with
/// respect to all primes below this bound; a residual square factor beyond it
/// would leave `d` non-square-free, which affects only the printed form, not
/// correctness of arithmetic or comparisons (both work for any non-square d).
const SQUARE_EXTRACTION_BOUND: u64 = 100_000;

/// An exact real number: either a rational or an element `a + b·√d` of a real
/// quadratic field with `d` a positive non-square integer (square-free with
/// respect to primes below a fixed bound) and `b ≠ 0`.
///
/// Rationals are always stored in lowest terms with positive denominator
/// (enforced by the underlying [`BigRational`]); a quadratic element whose
/// irrational part cancels is normalized back to `Rational`.  The ordering is
/// total within a single field extension and agrees with real-number order;
/// the sign of `a + b·√d` is decided exactly by comparing `a²` with `b²·d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ExactScalar {
    /// An arbitrary-precision rational in lowest terms.
    Rational(BigRational),
    /// `a + b·√d` with `b ≠ 0` and `d > 1` a non-square positive integer.
    Quadratic {
        /// Rational part.
        a: BigRational,
        /// Coefficient of `√d`; never zero after normalization.
        b: BigRational,
        /// The radicand; positive, non-square.
        d: BigInt,
    },
}

impl ExactScalar {
    /// The exact zero.
    pub fn zero() -> Self {
        ExactScalar::Rational(BigRational::zero())
    }

    /// The exact one.
    pub fn one() -> Self {
        ExactScalar::Rational(BigRational::one())
    }

    /// Builds a scalar from an integer.
    pub fn from_int(n: i64) -> Self {
        ExactScalar::Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds the exact rational `num/den`.  Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        ExactScalar::Rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// Wraps a `BigRational`.
    pub fn from_rational(r: BigRational) -> Self {
        ExactScalar::Rational(r)
    }

    /// Builds `a + b·√d`, normalizing the radicand (square-part extraction)
    /// and collapsing to `Rational` when the irrational part vanishes.
    pub fn quadratic(a: BigRational, b: BigRational, d: BigInt) -> Result<Self, NumericError> {
        if d.sign() != Sign::Plus {
            return Err(NumericError::NegativeSqrt);
        }
        if b.is_zero() {
            return Ok(ExactScalar::Rational(a));
        }
        let (root, rem) = extract_square_part(&d);
        // d = root² · rem, so b·√d = (b·root)·√rem.
        let b = b * BigRational::from_integer(root);
        if rem.is_one() {
            return Ok(ExactScalar::Rational(a + b));
        }
        Ok(ExactScalar::Quadratic { a, b, d: rem })
    }

    /// The exact square root of a nonnegative rational; the result is rational
    /// when the input is a perfect square and quadratic otherwise.
    pub fn sqrt_rational(r: &BigRational) -> Result<Self, NumericError> {
        if r.is_negative() {
            return Err(NumericError::NegativeSqrt);
        }
        if r.is_zero() {
            return Ok(ExactScalar::zero());
        }
        // √(n/m) = √(n·m)/m.
        let n = r.numer();
        let m = r.denom();
        let radicand = n * m;
        let b = BigRational::new(BigInt::one(), m.clone());
        ExactScalar::quadratic(BigRational::zero(), b, radicand)
    }

    /// Returns the rational payload when this scalar is rational.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            ExactScalar::Rational(r) => Some(r),
            ExactScalar::Quadratic { .. } => None,
        }
    }

    /// True when the scalar is exactly zero.
    pub fn is_zero(&self) -> bool {
        match self {
            ExactScalar::Rational(r) => r.is_zero(),
            // A normalized Quadratic has b ≠ 0 and is therefore irrational.
            ExactScalar::Quadratic { .. } => false,
        }
    }

    /// Exact sign: −1, 0, or +1.
    pub fn signum(&self) -> i32 {
        match self {
            ExactScalar::Rational(r) => match r.numer().sign() {
                Sign::Minus => -1,
                Sign::NoSign => 0,
                Sign::Plus => 1,
            },
            ExactScalar::Quadratic { a, b, d } => {
                let sa = rational_sign(a);
                let sb = rational_sign(b);
                if sa == 0 {
                    return sb;
                }
                if sb == 0 || sa == sb {
                    return sa;
                }
                // Opposite signs: the sign is that of the dominant part,
                // decided by comparing a² with b²·d.
                let a2 = a * a;
                let b2d = b * b * BigRational::from_integer(d.clone());
                match a2.cmp(&b2d) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0, // impossible for non-square d; kept for totality
                }
            }
        }
    }

    /// Fallible addition; reports `MixedRadicands` instead of panicking.
    pub fn try_add(&self, rhs: &ExactScalar) -> Result<ExactScalar, NumericError> {
        self.combine(rhs, BinOp::Add)
    }

    /// Fallible multiplication; reports `MixedRadicands` instead of panicking.
    pub fn try_mul(&self, rhs: &ExactScalar) -> Result<ExactScalar, NumericError> {
        self.combine(rhs, BinOp::Mul)
    }

    /// Fallible division.
    pub fn try_div(&self, rhs: &ExactScalar) -> Result<ExactScalar, NumericError> {
        if rhs.is_zero() {
            return Err(NumericError::DivisionByZero);
        }
        let inv = rhs.invert()?;
        self.combine(&inv, BinOp::Mul)
    }

    /// Multiplicative inverse.
    pub fn invert(&self) -> Result<ExactScalar, NumericError> {
        match self {
            ExactScalar::Rational(r) => {
                if r.is_zero() {
                    Err(NumericError::DivisionByZero)
                } else {
                    Ok(ExactScalar::Rational(r.recip()))
                }
            }
            ExactScalar::Quadratic { a, b, d } => {
                // 1/(a+b√d) = (a−b√d)/(a²−b²d); the norm is nonzero because
                // d is non-square.
                let norm = a * a - b * b * BigRational::from_integer(d.clone());
                ExactScalar::quadratic(a / &norm, -(b / &norm), d.clone())
            }
        }
    }

    fn combine(&self, rhs: &ExactScalar, op: BinOp) -> Result<ExactScalar, NumericError> {
        use ExactScalar::*;
        match (self, rhs) {
            (Rational(x), Rational(y)) => Ok(Rational(match op {
                BinOp::Add => x + y,
                BinOp::Mul => x * y,
            })),
            (Rational(x), Quadratic { a, b, d }) => match op {
                BinOp::Add => ExactScalar::quadratic(x + a, b.clone(), d.clone()),
                BinOp::Mul => ExactScalar::quadratic(x * a, x * b, d.clone()),
            },
            (Quadratic { a, b, d }, Rational(y)) => match op {
                BinOp::Add => ExactScalar::quadratic(a + y, b.clone(), d.clone()),
                BinOp::Mul => ExactScalar::quadratic(a * y, b * y, d.clone()),
            },
            (
                Quadratic { a: a1, b: b1, d: d1 },
                Quadratic { a: a2, b: b2, d: d2 },
            ) => {
                if d1 != d2 {
                    return Err(NumericError::MixedRadicands(
                        d1.to_string(),
                        d2.to_string(),
                    ));
                }
                match op {
                    BinOp::Add => ExactScalar::quadratic(a1 + a2, b1 + b2, d1.clone()),
                    BinOp::Mul => {
                        // (a1+b1√d)(a2+b2√d) = a1a2+b1b2d + (a1b2+a2b1)√d.
                        let rat = a1 * a2 + b1 * b2 * BigRational::from_integer(d1.clone());
                        let irr = a1 * b2 + a2 * b1;
                        ExactScalar::quadratic(rat, irr, d1.clone())
                    }
                }
            }
        }
    }

    /// A `f64` approximation (for reporting only; never used in decisions).
    pub fn to_f64(&self) -> f64 {
        match self {
            ExactScalar::Rational(r) => rational_to_f64(r),
            ExactScalar::Quadratic { a, b, d } => {
                let df: f64 = rational_to_f64(&BigRational::from_integer(d.clone()));
                rational_to_f64(a) + rational_to_f64(b) * df.sqrt()
            }
        }
    }

    /// Renders the scalar as a decimal string with `digits` fractional digits,
    /// correctly rounded (half away from zero), computed exactly.
    pub fn decimal_string(&self, digits: u32) -> String {
        let scale = BigInt::from(10u32).pow(digits);
        // Find the integer nearest to self·10^digits via exact bounds.
        let scaled_lo_hi = self.scaled_bounds(&scale);
        let n = scaled_lo_hi;
        let negative = n.sign() == Sign::Minus;
        let mag = n.magnitude().clone();
        let int_part = &mag / scale.magnitude();
        let frac_part = &mag % scale.magnitude();
        let frac_str = format!("{:0>width$}", frac_part.to_string(), width = digits as usize);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{frac_str}")
        }
    }

    /// The integer nearest to `self · scale`, computed exactly.
    fn scaled_bounds(&self, scale: &BigInt) -> BigInt {
        match self {
            ExactScalar::Rational(r) => round_rational(&(r * BigRational::from_integer(scale.clone()))),
            ExactScalar::Quadratic { a, b, d } => {
                // Enclose b√d between rational bounds of width 10^-(digits+6)
                // and round; widen precision until both bounds round alike.
                let mut prec: u32 = 40;
                loop {
                    let (lo, hi) = sqrt_bounds(d, prec);
                    let s = BigRational::from_integer(scale.clone());
                    let (v_lo, v_hi) = if b.is_negative() {
                        ((a + b * &hi) * &s, (a + b * &lo) * &s)
                    } else {
                        ((a + b * &lo) * &s, (a + b * &hi) * &s)
                    };
                    let r_lo = round_rational(&v_lo);
                    let r_hi = round_rational(&v_hi);
                    if r_lo == r_hi {
                        return r_lo;
                    }
                    prec *= 2;
                    assert!(prec <= 1 << 16, "decimal rendering failed to converge");
                }
            }
        }
    }

    /// Renders the exact form: `num/den` for rationals, `a + b*sqrt(d)` for
    /// quadratic elements.
    pub fn exact_string(&self) -> String {
        match self {
            ExactScalar::Rational(r) => {
                if r.denom().is_one() {
                    r.numer().to_string()
                } else {
                    format!("{}/{}", r.numer(), r.denom())
                }
            }
            ExactScalar::Quadratic { a, b, d } => {
                let a_str = ExactScalar::Rational(a.clone()).exact_string();
                let b_str = ExactScalar::Rational(b.abs()).exact_string();
                let op = if b.is_negative() { "-" } else { "+" };
                format!("{a_str} {op} {b_str}*sqrt({d})")
            }
        }
    }

    fn compare(&self, other: &ExactScalar) -> Ordering {
        use ExactScalar::*;
        match (self, other) {
            (Rational(x), Rational(y)) => x.cmp(y),
            (Quadratic { a, b, d }, Rational(y)) => {
                // Sign of (a−y) + b√d.
                let diff = ExactScalar::Quadratic {
                    a: a - y,
                    b: b.clone(),
                    d: d.clone(),
                };
                sign_to_ordering(diff.signum())
            }
            (Rational(_), Quadratic { .. }) => other.compare(self).reverse(),
            (
                Quadratic { a: a1, b: b1, d: d1 },
                Quadratic { a: a2, b: b2, d: d2 },
            ) => {
                if d1 == d2 {
                    let diff = ExactScalar::quadratic(a1 - a2, b1 - b2, d1.clone())
                        .expect("same radicand");
                    return sign_to_ordering(diff.signum());
                }
                // Distinct fields: equality is decidable algebraically
                // (a1 = a2, sign b1 = sign b2, b1²d1 = b2²d2 — possible only
                // if d1·d2 is a perfect square); otherwise interval
                // refinement separates the two reals.
                if a1 == a2
                    && rational_sign(b1) == rational_sign(b2)
                    && b1 * b1 * BigRational::from_integer(d1.clone())
                        == b2 * b2 * BigRational::from_integer(d2.clone())
                {
                    return Ordering::Equal;
                }
                let mut prec: u32 = 40;
                loop {
                    let (lo1, hi1) = quadratic_bounds(a1, b1, d1, prec);
                    let (lo2, hi2) = quadratic_bounds(a2, b2, d2, prec);
                    if hi1 < lo2 {
                        return Ordering::Less;
                    }
                    if hi2 < lo1 {
                        return Ordering::Greater;
                    }
                    prec *= 2;
                    assert!(prec <= 1 << 16, "comparison across radicands failed to separate");
                }
            }
        }
    }
}

#[derive(Clone, Copy)]
enum BinOp {
    Add,
    Mul,
}

fn sign_to_ordering(s: i32) -> Ordering {
    match s {
        x if x < 0 => Ordering::Less,
        0 => Ordering::Equal,
        _ => Ordering::Greater,
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    use num::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Nearest integer to a rational (half away from zero).
fn round_rational(r: &BigRational) -> BigInt {
    if r.is_negative() {
        return -round_rational(&(-r));
    }
    // floor((2n + d)/(2d)) rounds half up for nonnegative r.
    let two = BigInt::from(2);
    (r.numer() * &two + r.denom()) / (r.denom() * &two)
}

/// Rational bounds `lo ≤ √d ≤ hi` with `hi − lo ≤ 2^−prec·√d` roughly;
/// computed from the integer square root of `d·4^prec`.
fn sqrt_bounds(d: &BigInt, prec: u32) -> (BigRational, BigRational) {
    let scale = BigInt::one() << prec; // 2^prec
    let scaled = d * &scale * &scale;
    let root = scaled.sqrt(); // floor square root
    let lo = BigRational::new(root.clone(), scale.clone());
    let hi = BigRational::new(root + BigInt::one(), scale);
    (lo, hi)
}

fn quadratic_bounds(
    a: &BigRational,
    b: &BigRational,
    d: &BigInt,
    prec: u32,
) -> (BigRational, BigRational) {
    let (lo, hi) = sqrt_bounds(d, prec);
    if b.is_negative() {
        (a + b * hi, a + b * lo)
    } else {
        (a + b * lo, a + b * hi)
    }
}

/// Splits `d = root² · rem` with `rem` free of square factors below the
/// extraction bound; returns `(root, rem)`.
fn extract_square_part(d: &BigInt) -> (BigInt, BigInt) {
    let mut rem = d.clone();
    let mut root = BigInt::one();
    // Fast path: d itself a perfect square.
    let s = rem.sqrt();
    if &s * &s == rem {
        return (s, BigInt::one());
    }
    let mut p: u64 = 2;
    while p <= SQUARE_EXTRACTION_BOUND {
        let p2 = BigInt::from(p) * BigInt::from(p);
        if &p2 > &rem {
            break;
        }
        while (&rem % &p2).is_zero() {
            rem /= &p2;
            root *= BigInt::from(p);
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    (root, rem)
}

impl PartialOrd for ExactScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.compare(other))
    }
}

impl Ord for ExactScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        self.compare(other)
    }
}

macro_rules! impl_binop {
    ($trait:ident, $method:ident, $imp:expr) => {
        impl $trait for &ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                let f: fn(&ExactScalar, &ExactScalar) -> Result<ExactScalar, NumericError> = $imp;
                f(self, rhs).expect("exact arithmetic on mixed radicands")
            }
        }
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                $trait::$method(&self, &rhs)
            }
        }
        impl $trait<&ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &ExactScalar) -> ExactScalar {
                $trait::$method(&self, rhs)
            }
        }
    };
}

impl_binop!(Add, add, |x, y| x.try_add(y));
impl_binop!(Mul, mul, |x, y| x.try_mul(y));
impl_binop!(Sub, sub, |x, y| x.try_add(&(-y)));
impl_binop!(Div, div, |x, y| x.try_div(y));

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        match self {
            ExactScalar::Rational(r) => ExactScalar::Rational(-r),
            ExactScalar::Quadratic { a, b, d } => ExactScalar::Quadratic {
                a: -a,
                b: -b,
                d: d.clone(),
            },
        }
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        -&self
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.exact_string())
    }
}
