use thiserror::Error;

/// Errors produced by the spin algebra, evolution and kernel routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("rotation axis must be a unit vector, got |m| = {norm}")]
    NonUnitAxis { norm: f64 },

    #[error("operator is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("basis is not orthonormal (max deviation {deviation:e})")]
    NotOrthonormal { deviation: f64 },

    #[error("state is not normalized (norm squared = {norm_sq})")]
    NotNormalized { norm_sq: f64 },

    #[error("J = 0: the field produces no oscillation, so periods and nodes are undefined")]
    NoOscillation,

    #[error("invalid parameter `{name}`: must be {requirement}, got {value}")]
    InvalidParameter {
        name: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("invalid Monte Carlo configuration: {0}")]
    InvalidMcConfig(&'static str),

    #[error(
        "quadrature did not converge: estimate {estimate:e}, error estimate {error_estimate:e} \
         after {intervals} subintervals"
    )]
    QuadratureNonConvergence {
        estimate: f64,
        error_estimate: f64,
        intervals: usize,
    },

    #[error("internal consistency check `{check}` failed: deviation {deviation:e}")]
    ConsistencyFailure { check: &'static str, deviation: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require(
    ok: bool,
    name: &'static str,
    requirement: &'static str,
    value: f64,
) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidParameter {
            name,
            requirement,
            value,
        })
    }
}
