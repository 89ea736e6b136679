//! Error type shared by every module of the kernel.
//!
//! All fallible operations return [`Result`]; nothing in this crate panics on
//! bad *input* (panics are reserved for violated internal invariants, e.g.
//! mixing radicands through the arithmetic operators instead of the checked
//! methods).

use core::fmt;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Everything that can go wrong in the exact kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Square root of a negative rational was requested.
    NegativeRadicand,
    /// A radicand survived square-free reduction but is too large to certify
    /// square-free with the built-in factor bound.
    RadicandTooLarge,
    /// Two quadratic numbers with distinct irrational radicands were combined.
    IncompatibleRadicands(u64, u64),
    /// Division by an exact zero.
    DivisionByZero,
    /// The (index, degree) pair is not in the rank-one Fano classification;
    /// the message names the violated clause.
    Classification(&'static str),
    /// beta-bar is undefined: zero rank together with zero first Chern degree.
    UndefinedBetaBar,
    /// A discriminant that must be nonnegative for the operation was negative.
    NegativeDiscriminant,
    /// All three leading character entries vanish, so no reduced point exists.
    UndefinedReducedPoint,
    /// An affine plane point was required but the point lies at infinity.
    PointAtInfinity,
    /// The plane point must lie strictly inside the cone `x^2 - 2y < 0`.
    OutsideCone,
    /// `alpha2` must be strictly positive.
    NonPositiveAlpha,
    /// The full-charge coefficients violate `a > alpha^2/6 + |b| alpha/2`.
    ChargeConstraint,
    /// The two characters span the same reduced point, so every kernel point
    /// is "on the wall" and no locus is defined.
    DegenerateWall,
    /// A module-specific precondition failed; the message names it.
    Precondition(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NegativeRadicand => write!(f, "square root of a negative rational"),
            Error::RadicandTooLarge => {
                write!(f, "radicand exceeds the certified square-free factor bound")
            }
            Error::IncompatibleRadicands(a, b) => {
                write!(f, "incompatible radicands sqrt({a}) and sqrt({b})")
            }
            Error::DivisionByZero => write!(f, "division by zero"),
            Error::Classification(clause) => write!(f, "not a rank-one Fano threefold: {clause}"),
            Error::UndefinedBetaBar => {
                write!(f, "beta-bar undefined: ch0 = 0 and H^2 ch1 = 0")
            }
            Error::NegativeDiscriminant => {
                write!(f, "discriminant is negative, no real beta-bar")
            }
            Error::UndefinedReducedPoint => {
                write!(f, "reduced point undefined: ch0, ch1, ch2 degrees all vanish")
            }
            Error::PointAtInfinity => write!(f, "point at infinity where an affine point is required"),
            Error::OutsideCone => {
                write!(f, "point does not lie strictly inside the cone x^2 - 2y < 0")
            }
            Error::NonPositiveAlpha => write!(f, "alpha2 must be strictly positive"),
            Error::ChargeConstraint => {
                write!(f, "coefficients violate a > alpha^2/6 + |b| alpha/2")
            }
            Error::DegenerateWall => {
                write!(f, "characters are proportional: wall is the whole parameter space")
            }
            Error::Precondition(what) => write!(f, "precondition failed: {what}"),
        }
    }
}
