use thiserror::Error;

/// Largest polynomial degree accepted by the explicit-sum evaluators.
pub const MAX_DEGREE: usize = 60;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("order parameter {0} is not admissible (need nu > -1)")]
    OrderDomain(f64),
    #[error("gamma argument {0} is outside the domain (need g > -1)")]
    GammaDomain(f64),
    #[error("degree {0} exceeds the cap of {MAX_DEGREE}")]
    IndexCap(usize),
    #[error("gaussian decay alpha = {0} must be strictly positive")]
    NonPositiveAlpha(f64),
    #[error("argument {name} = {value} is not finite")]
    NonFinite { name: &'static str, value: f64 },
    #[error("negative umbral exponent {0} cannot be reduced against the vacuum")]
    NegativeUmbralExponent(String),
    #[error("{0}")]
    InvalidRequest(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_degree(n: usize) -> Result<()> {
    if n > MAX_DEGREE {
        Err(Error::IndexCap(n))
    } else {
        Ok(())
    }
}
