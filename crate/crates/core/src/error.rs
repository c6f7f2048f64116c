use std::fmt;

/// Errors surfaced by the library API.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input violated the Hermitian residual tolerance.
    NotHermitian { residual: f64, tol: f64 },
    /// Input violated the symmetric residual tolerance.
    NotSymmetric { residual: f64, tol: f64 },
    /// Input contained NaN or infinite entries.
    NonFinite,
    /// Malformed matrix text.
    Parse(String),
    /// Argument outside the supported range (kind/degree combinations,
    /// Bessel orders, ...).
    Unsupported(String),
    /// Bisection window does not bracket the tolerance level.
    NoSignChange {
        lo: f64,
        hi: f64,
        eps_lo: f64,
        eps_hi: f64,
    },
    /// Extended-precision series lost all significance.
    PrecisionExhausted,
    /// LU factorization hit a zero pivot.
    Singular,
    /// Symmetric QL iteration failed to converge.
    EigNoConvergence,
    /// Required squaring count exceeds the supported cap.
    ScalingOverflow { beta: f64, cap: u32 },
    /// Benchmark reference propagation failed its self-consistency check.
    ReferenceNotConverged { delta: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotHermitian { residual, tol } => write!(
                f,
                "matrix is not Hermitian: residual {residual:.3e} exceeds {tol:.3e} * max|A|"
            ),
            Error::NotSymmetric { residual, tol } => write!(
                f,
                "matrix is not symmetric: residual {residual:.3e} exceeds {tol:.3e} * max|A|"
            ),
            Error::NonFinite => write!(f, "matrix has non-finite entries"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported argument: {msg}"),
            Error::NoSignChange {
                lo,
                hi,
                eps_lo,
                eps_hi,
            } => write!(
                f,
                "no sign change on [{lo:.3e}, {hi:.3e}]: eps(lo)={eps_lo:.3e}, eps(hi)={eps_hi:.3e}"
            ),
            Error::PrecisionExhausted => {
                write!(f, "extended-precision series terms stopped decreasing")
            }
            Error::Singular => write!(f, "matrix is numerically singular"),
            Error::EigNoConvergence => write!(f, "QL eigenvalue iteration did not converge"),
            Error::ScalingOverflow { beta, cap } => write!(
                f,
                "norm {beta:.3e} would need more than {cap} squarings"
            ),
            Error::ReferenceNotConverged { delta } => write!(
                f,
                "reference solution changed by {delta:.3e} under step refinement"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
