//! Exact positivity certificates for polynomials on the nonnegative slice
//! of a level hypersurface.
//!
//! Fix a polynomial `r` with nonnegative coefficients that contains every
//! variable linearly, and a height `c > 0`. The slice is the set of points
//! `x >= 0` with `r(x) = c`. A certificate that `f` is strictly positive on
//! the slice is an exact identity
//!
//! ```text
//! f = q + h * (r - c)
//! ```
//!
//! where every coefficient of `q` is strictly positive and the support of
//! `q` is exactly the cumulative Newton support of `1, r, r^2, ..., r^N`.
//! On the slice the second summand vanishes, and the full support forces a
//! positive constant term, so `f = q > 0` there by inspection. The family is
//! complete: every `f` strictly positive on the slice admits such an
//! identity once the level `N` is large enough. Specializing to
//! `r = x1 + ... + xn`, `c = 1`, and homogeneous `f` recovers Polya's
//! classical theorem on forms positive over the standard simplex.
//!
//! The crate is organized as a pipeline:
//!
//! * [`poly`]: exact sparse polynomial arithmetic over arbitrary-precision
//!   rationals, including division with canonical remainders.
//! * [`parse`]: the text syntax used by the command line and by certificate
//!   files.
//! * [`support`]: Newton-support bookkeeping (log sets, Minkowski sums,
//!   cumulative supports, the unit-monomial precondition).
//! * [`lp`]: a two-phase exact rational simplex solver.
//! * [`cert`]: certificate search, verification, level minimization, the
//!   Polya expansion route, and serialization.
//! * [`falsify`]: a floating-point falsifier that hunts for points of the
//!   slice where `f` is nonpositive.
//! * [`cli`]: the command-line front end used by the `polycert` binary.
//!
//! Everything on the certificate path is exact. Floating point appears only
//! in the falsifier, whose output is a refutation witness, never a proof.

pub mod cert;
pub mod cli;
pub mod falsify;
pub mod lp;
pub mod parse;
pub mod poly;
pub mod support;

pub use cert::{
    build_g, cross_check_polya, find_min_level, polya_expand, polya_min_level,
    search_certificate, search_certificate_with, verify_certificate, Certificate,
    CertificateFile, LevelSearch, LpFormulation, PolyaCrossCheck, PolyaReport,
    ProblemInstance, SearchOutcome, VerificationReport,
};
pub use falsify::{falsify, ray_solve, Witness};
pub use lp::{LinearProgram, LpOutcome};
pub use parse::{format_rational, parse_polynomial, parse_rational, ParseError};
pub use poly::{rational, MultiIndex, Rational, SparsePolynomial};
pub use support::{
    check_precondition, cumulative_support, grade_slice, log_set, support_of,
    PreconditionReport, SupportSet,
};

/// Errors for data-dependent failures: malformed text, inputs that violate
/// the documented hypotheses, and out-of-range numeric parameters.
///
/// Violations of internal contracts (dimension mismatches between operands
/// built by the caller, division by the zero polynomial) panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("dimension must be at least 1")]
    InvalidDimension,

    #[error("dimension mismatch: expected {expected} variables, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("negative coefficient on {term}: log sets are defined for polynomials with nonnegative coefficients")]
    NegativeCoefficient { term: String },

    #[error("the level form must be a nonzero polynomial")]
    ZeroLevelForm,

    #[error("expected a nonzero polynomial")]
    ZeroPolynomial,

    #[error("{0}")]
    PreconditionFailed(support::PreconditionReport),

    #[error("height must be positive, got {0}")]
    InvalidHeight(Rational),

    #[error("expected a homogeneous polynomial")]
    NotHomogeneous,

    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),

    #[error("grid resolution must be at least 1")]
    InvalidGrid,

    #[error(transparent)]
    Parse(#[from] parse::ParseError),
}
