use thiserror::Error;

/// Domain errors. `code()` gives the stable machine-readable tag used in JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("polynomial has degree {0}, expected 5 or 6")]
    BadDegree(usize),
    #[error("sextic has a repeated root")]
    NotSquarefree,
    #[error("J2 vanishes; compare moduli points instead")]
    J2Zero,
    #[error("reconstruction denominator vanishes")]
    DegenerateReconstruction,
    #[error("point is not in the {0} locus")]
    NotInLocus(&'static str),
    #[error("parameter t = {t} excluded: {reason}")]
    ExcludedParameter { t: String, reason: &'static str },
    #[error("degenerate parameter")]
    Degenerate,
    #[error("sextic is degenerate: {0} vanishes")]
    DegenerateSextic(&'static str),
    #[error("U2 undefined on 4u - v - 9 = 0")]
    U2Undefined,
    #[error("beta undefined: {0} vanishes")]
    BetaUndefined(&'static str),
    #[error("cubic is singular")]
    SingularCubic,
    #[error("fiber has {0} points, more than 4")]
    FiberOverflow(usize),
    #[error("elimination system is not zero-dimensional")]
    PositiveDimensional,
    #[error("no cover carries a rank-0 certificate")]
    InsufficientCertificates,
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::ZeroPolynomial => "zero-polynomial",
            Error::Parse(_) => "parse",
            Error::BadDegree(_) => "bad-degree",
            Error::NotSquarefree => "repeated-root",
            Error::J2Zero => "j2-zero",
            Error::DegenerateReconstruction => "degenerate-reconstruction",
            Error::NotInLocus("d8") => "not-in-d8-locus",
            Error::NotInLocus(_) => "not-in-d12-locus",
            Error::ExcludedParameter { .. } => "excluded-parameter",
            Error::Degenerate => "degenerate",
            Error::DegenerateSextic(_) => "degenerate-sextic",
            Error::U2Undefined => "u2-undefined",
            Error::BetaUndefined(_) => "beta-undefined",
            Error::SingularCubic => "singular-cubic",
            Error::FiberOverflow(_) => "fiber-overflow",
            Error::PositiveDimensional => "positive-dimensional",
            Error::InsufficientCertificates => "insufficient-certificates",
            Error::Invalid(_) => "invalid-input",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
