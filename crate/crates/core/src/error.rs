use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{name} = {value} is outside its domain ({expected})")]
    Domain {
        name: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("invalid mode index {0}, expected 1 or 2")]
    InvalidMode(u8),

    #[error("unsupported state: {0}")]
    UnsupportedState(&'static str),

    #[error("non-physical covariance matrix: {0}")]
    NonPhysical(&'static str),

    #[error("shape mismatch: truncation {left} vs {right}")]
    ShapeMismatch { left: usize, right: usize },

    #[error("truncation tail {tail:.3e} exceeds tolerance {tolerance:.1e}; use d_max >= {suggested_d_max}")]
    TruncationTail {
        tail: f64,
        tolerance: f64,
        suggested_d_max: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure(ok: bool, name: &'static str, value: f64, expected: &'static str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Domain {
            name,
            value,
            expected,
        })
    }
}
