use thiserror::Error;

/// Errors raised by the solver library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Operand dimensions do not agree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A matrix factorization hit an exactly zero pivot.
    #[error("singular matrix: zero pivot in column {column}")]
    Singular { column: usize },

    /// A step produced NaN or infinite values.
    #[error("numerical failure at t = {t}: non-finite value at index {index}")]
    NonFinite { t: f64, index: usize },

    /// The inverse Hopf-Cole transform met a non-positive heat-equation value.
    #[error("transform failure: psi[{index}] = {value:e} at x = {x} is not positive")]
    NonPositive { index: usize, x: f64, value: f64 },

    /// Adaptive quadrature could not reach the requested tolerance.
    #[error("quadrature did not converge: requested {requested:e}, achieved {achieved:e}")]
    Quadrature { requested: f64, achieved: f64 },

    /// A Fourier-series evaluation cannot be trusted.
    #[error("series evaluation failure: {0}")]
    Series(String),

    /// Polynomial root finding did not converge.
    #[error("root finder did not converge: residual {residual:e}")]
    RootFinding { residual: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
