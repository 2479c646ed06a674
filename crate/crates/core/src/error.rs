use thiserror::Error;

use crate::regime::BoundaryFlag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("leading coefficient is zero; not a cubic")]
    DegenerateLeadingCoefficient,

    #[error("coefficient `{0}` is not finite")]
    NonFinite(&'static str),

    #[error("invalid tolerance (rel = {rel}, abs = {abs}); need rel > 0 and abs >= 0")]
    InvalidTolerance { rel: f64, abs: f64 },

    #[error("free term {c} is not within {limit} of zero")]
    NotZeroFreeTerm { c: f64, limit: f64 },

    #[error("{0}")]
    NotApplicable(&'static str),

    #[error("free term is zero; route through the zero-root factorization")]
    ZeroFreeTerm,

    #[error(
        "sign classification disagrees: intervals give {from_intervals}, tables give {from_tables} (flags: {flags:?})"
    )]
    TableMismatch {
        from_intervals: String,
        from_tables: String,
        flags: Vec<BoundaryFlag>,
    },

    #[error("root refinement did not converge: {0}")]
    NonConvergence(String),

    #[error("invalid sweep configuration: {0}")]
    InvalidSweep(String),
}
