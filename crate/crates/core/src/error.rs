use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("q = {0} is not a prime power")]
    NonPrimePower(u64),
    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(u32),
    #[error("negative count at degree {degree}")]
    NegativeCount { degree: u32 },
    #[error("point count at degree {degree} violates the Weil-Serre interval")]
    WeilViolation { degree: u32 },
    #[error("point count at degree {degree} disagrees with the place counts")]
    InconsistentCounts { degree: u32 },
    #[error("place count of degree {0} is required but missing")]
    MissingDivisor(u32),
    #[error("Moebius inversion at degree {degree} is not a nonnegative integer")]
    NonIntegralPlaces { degree: u32 },
    #[error("truncation order must satisfy 1 <= N <= {max}, got {got}")]
    InvalidN { got: u32, max: u32 },
    #[error("point estimates do not cover degree {0}")]
    IncompleteEstimates(u32),
    #[error("genus {got} is below the minimum {needed} for this bound")]
    GenusTooSmall { got: u32, needed: u32 },
    #[error("hypothesis ({0}) of the selection is violated")]
    ConditionViolated(u8),
    #[error("(g+1)(q+1) - Phi_q must be positive")]
    NonpositivePrefactorDenominator,
    #[error("zeta numerator coefficient a_{0} is not an integer")]
    NonIntegralCoefficient(usize),
    #[error("P(1) is not positive; the counts are inconsistent")]
    NonpositiveClassNumber,
    #[error("expected {expected} leading point counts, got {got}")]
    WrongCountLength { expected: usize, got: usize },
    #[error("trace {trace} is outside [-{bound}, {bound}]")]
    TraceOutOfRange { trace: i64, bound: i64 },
    #[error("the curve is singular (zero discriminant)")]
    SingularCurve,
    #[error("{0} is not an odd prime below 1000")]
    NonPrimeField(u64),
    #[error("negative asymptotic place density at degree {0}")]
    NegativeDensity(u32),
    #[error("enclosure did not stabilise below {0} bits")]
    PrecisionExhausted(u32),
    #[error("invalid profile: {0}")]
    Profile(String),
}

pub type Result<T> = std::result::Result<T, Error>;
