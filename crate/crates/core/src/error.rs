use thiserror::Error;

/// Errors shared across the laboratory.
#[derive(Debug, Error)]
pub enum Error {
    /// An argument fell outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A requested integral has a divergent tail under the profile's
    /// extension policy.
    #[error("divergent tail: {0}")]
    DivergentTail(String),

    /// A weight failed the defining integrability condition of its class;
    /// carries the offending ball as (center distance, radius).
    #[error("weight not in class: ball (d={0}, R={1}) has a divergent inverse-power average")]
    NotInClass(f64, f64),

    /// The eigensolver was asked for more modes than the mesh resolves.
    #[error("spectral resolution: {0}")]
    SpectralResolution(String),

    /// A greedy construction could not terminate at the sample resolution.
    #[error("resolution error: {0}")]
    Resolution(String),

    /// Input data unusable for a fit or statistic.
    #[error("data error: {0}")]
    Data(String),

    /// Scenario/config validation failures; one message per offending field.
    #[error("config error: {}", .0.join("; "))]
    Config(Vec<String>),

    /// Operator-norm estimation failed to stabilise.
    #[error("norm estimate failed: {0}")]
    NormEstimate(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
