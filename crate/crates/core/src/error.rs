use thiserror::Error;

/// Errors surfaced by the library. Every failure names the offending input;
/// integrality failures in particular point at wrong class-number inputs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{p} is not an odd prime greater than {min}")]
    NotAnOddPrime { p: u64, min: u64 },
    #[error("base {base} is divisible by {p}")]
    BaseDivisible { base: u64, p: u64 },
    #[error("numerator {m} is divisible by {p}")]
    NumeratorDivisible { m: u64, p: u64 },
    #[error("period length {len} is odd; parity split needs an even period")]
    OddPeriodLength { len: usize },
    #[error("base {base} is a quadratic non-residue mod {p}")]
    BaseNotResidue { base: u64, p: u64 },
    #[error("prime {p} must exceed the base {base}")]
    PrimeTooSmall { p: u64, base: u64 },
    #[error("{n} is not squarefree")]
    NotSquarefree { n: u64 },
    #[error("{d} is not a fundamental discriminant")]
    NotFundamental { d: i64 },
    #[error("{d} is not congruent to 0 or 1 mod 4")]
    InvalidDiscriminant { d: i64 },
    #[error("character sum {sum} is not an exact positive multiple of {den} for D = {d}")]
    InexactClassNumber { d: i64, sum: i64, den: i64 },
    #[error("delta_{k} = {value} is not an integer (check the class-number inputs)")]
    NonIntegralDelta { k: usize, value: String },
    #[error("digit count n_{k} = {value} is not a nonnegative integer")]
    InvalidCount { k: usize, value: String },
    #[error("prime {p} does not qualify: {reason}")]
    NotApplicable { p: u64, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
