use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus {0} is even")]
    EvenModulus(u64),
    #[error("{a} is not a quadratic residue modulo {p}")]
    NotQuadraticResidue { a: i64, p: u64 },
    #[error("{0} is not a prime congruent to 1 (mod 4)")]
    NotOneModFour(u64),
    #[error("{0} is not a prime congruent to 1 (mod 8)")]
    NotOneModEight(u64),
    #[error("{0} is neither 2 nor a prime congruent to 1 (mod 4)")]
    NoTwoSquares(u64),
    #[error("n must be positive")]
    Zero,
    #[error("{n} is not squarefree: {prime}^2 divides it")]
    NotSquarefree { n: u64, prime: u64 },
    #[error("l = {0} is not prime; l must be 2 or a prime ≡ 1 (mod 8)")]
    LNotPrime(u64),
    #[error(
        "l = {0} ≡ 5 (mod 8) is outside the supported theory (studied separately); \
         l must be 2 or a prime ≡ 1 (mod 8)"
    )]
    LDeferred(u64),
    #[error("l = {0} is a prime ≡ {r} (mod 8); l must be 2 or a prime ≡ 1 (mod 8)", r = .0 % 8)]
    LWrongClass(u64),
    #[error("n = {n} is not coprime to l = {l}")]
    NotCoprime { n: u64, l: u64 },
    #[error("n = {0} is even but l = 2")]
    EvenNWithLTwo(u64),
    #[error("conductor of n = {n}, l = {l} exceeds 128 bits")]
    ConductorOverflow { n: u64, l: u64 },
    #[error("no conductor case applies to a = {a}, b = {b}, l = {l}")]
    ConductorCase { a: u64, b: u64, l: u64 },
    #[error("continued fraction of sqrt({0}) produced a norm +1 unit before a norm -1 unit")]
    PellNormPlusOne(u64),
    #[error("symbol row {row} has an unresolved entry and no negative entry")]
    UnresolvedSymbol { row: &'static str },
    #[error("corpus line {line}: {msg}")]
    CorpusParse { line: usize, msg: String },
}
