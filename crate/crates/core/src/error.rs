use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error at line {line}, byte {byte}: {message}")]
    Parse {
        line: usize,
        byte: usize,
        message: String,
    },

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// The graph has an isolated vertex, so no vertex can dominate a class from it.
    #[error("no total dominator coloring exists: vertex {vertex} is isolated")]
    NoTdcExists { vertex: usize },

    /// The search ran out of budget. `upper_bound` is the best value known to be attainable.
    #[error("search budget exceeded (best known upper bound {upper_bound})")]
    BudgetExceeded { upper_bound: usize },

    #[error("instance too large: {n} vertices exceeds the limit of {max}")]
    InstanceTooLarge { n: usize, max: usize },

    /// Asked for colorings with fewer classes than the optimum.
    #[error("no total dominator coloring with {k} classes (optimum is {optimum})")]
    EmptyStream { k: usize, optimum: usize },

    /// Class 2 could not be certified because the enumeration budget ran out.
    #[error("classification inconclusive after examining {colorings_examined} optimal colorings")]
    Inconclusive { colorings_examined: u64 },

    #[error("Mycielskian bound violated: chi_d_t(G) = {chi_g}, chi_d_t(M(G)) = {chi_m}")]
    BoundsViolated { chi_g: usize, chi_m: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
