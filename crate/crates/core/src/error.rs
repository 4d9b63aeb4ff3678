use thiserror::Error;

use crate::lattice::{MukaiVector, NumClass};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("surface type must be in 1..=7, got {0}")]
    InvalidSurfaceType(i64),

    #[error("torsion component {index} out of range: surface type {surface} has {count} component(s)")]
    InvalidComponent { surface: u8, index: usize, count: usize },

    #[error("polarization {0} is not ample (need a > 0 and b > 0)")]
    NotAmple(NumClass),

    #[error("polarization {0} is divisible in Num(S); use the divisible enumeration")]
    DivisiblePolarization(NumClass),

    #[error("Mukai vector {0} is not primitive")]
    NotPrimitive(MukaiVector),

    #[error("Mukai vector {0} is not isotropic (v^2 = {1})")]
    NotIsotropic(MukaiVector, i64),

    #[error("Mukai vector {0} has c1^2 = 0")]
    DegenerateFirstChern(MukaiVector),

    #[error("Mukai vector {v} has v^2 = {square} < 0")]
    NegativeSquare { v: MukaiVector, square: i64 },

    #[error("rank {rank} too small: {requirement}")]
    RankTooSmall { rank: i64, requirement: &'static str },

    #[error("gcd(r, c1) = gcd({rank}, {class}) = {gcd} != 1")]
    RankNotCoprimeToClass { rank: i64, class: NumClass, gcd: i64 },

    #[error("gcd(r, ord(omega_S)) = gcd({rank}, {order}) = {gcd} != 1")]
    RankNotCoprimeToCanonicalOrder { rank: i64, order: i64, gcd: i64 },

    #[error("discriminant c1^2 - 2rs = {0} is not positive")]
    NonPositiveDiscriminant(i64),

    #[error("polarization {polarization} is not generic for {v}: it lies on the wall xi = {wall}")]
    NotGeneric { polarization: NumClass, v: MukaiVector, wall: NumClass },

    #[error("index k = {k} outside [r, 2r] for rank r = {rank}")]
    IndexOutOfRange { rank: i64, k: i64 },

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("class {class} has square {square}, expected 12")]
    WrongDegree { class: NumClass, square: i64 },

    #[error("certificate check `{0}` failed")]
    CertificateCheckFailed(&'static str),

    #[error("negative cohomology dimension {0}")]
    NegativeDimension(i64),

    #[error("cannot parse `{input}` as {expected}")]
    Parse { input: String, expected: &'static str },
}
