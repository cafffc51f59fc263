use thiserror::Error;

#[derive(Debug, Error)]
pub enum DynError {
    #[error("unsupported family tag `{0}`")]
    UnsupportedFamily(String),
    #[error("unknown potential `{0}`; registered: none, harmonic, exponential, monomial")]
    UnknownPotential(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("evaluation produced a non-finite value in {0}")]
    NonFinite(String),
    #[error("trajectory blew up; last finite state at t = {t_last}")]
    BlowUp { t_last: f64 },
    #[error("explicit stepping unstable at t = {t}; rerun with the implicit scheme")]
    Unstable { t: f64 },
    #[error("deformation scale must be a whole number of double grid steps")]
    IncompatibleSpacing,
    #[error("operation needs a periodic grid")]
    NeedsPeriodic,
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
