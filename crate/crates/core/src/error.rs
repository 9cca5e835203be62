use core::fmt;

use crate::poly::RootSet;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Clone, Debug, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize))]
pub enum Error {
    /// A NaN or infinite value reached an operation.
    NonFinite,
    ZeroPolynomial,
    /// The (trimmed) degree is below what the operation needs.
    DegreeTooLow {
        required: usize,
        found: usize,
    },
    WrongDegree {
        expected: usize,
        found: usize,
    },
    /// Simultaneous iteration hit its cap; carries the last iterate.
    NoConvergence {
        iterations: usize,
        partial: RootSet,
    },
    CoincidentPoints,
    ZeroPoint,
    CollinearWithCenter,
    /// The segment between the two points meets the mirror circle.
    SegmentMeetsCircle,
    NotUnimodular,
    RadiantOnMirror,
    ParametricSingularity,
    DegenerateFoci,
    InvalidRadius,
    DegenerateConic,
    ConfocalDegeneracy,
    NoTangency,
    ImaginaryCircle,
    SourceOutsideDomain,
    InvalidLevel,
    InsufficientSamples,
    InvalidArgument(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFinite => f.write_str("non-finite input"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::DegreeTooLow { required, found } => {
                write!(f, "degree {found} below required {required}")
            }
            Error::WrongDegree { expected, found } => {
                write!(f, "expected degree {expected}, found {found}")
            }
            Error::NoConvergence { iterations, .. } => {
                write!(
                    f,
                    "root finder did not converge after {iterations} iterations"
                )
            }
            Error::CoincidentPoints => f.write_str("coincident points"),
            Error::ZeroPoint => f.write_str("zero input point"),
            Error::CollinearWithCenter => f.write_str("degenerate: collinear with center"),
            Error::SegmentMeetsCircle => f.write_str("segment meets the mirror circle"),
            Error::NotUnimodular => f.write_str("point is not on the unit circle"),
            Error::RadiantOnMirror => f.write_str("radiant on mirror"),
            Error::ParametricSingularity => f.write_str("parametric singularity"),
            Error::DegenerateFoci => f.write_str("degenerate: segment/rays"),
            Error::InvalidRadius => f.write_str("invalid focal radius"),
            Error::DegenerateConic => f.write_str("degenerate conic"),
            Error::ConfocalDegeneracy => f.write_str("confocal degeneracy"),
            Error::NoTangency => f.write_str("no tangency found"),
            Error::ImaginaryCircle => f.write_str("imaginary circle"),
            Error::SourceOutsideDomain => f.write_str("source outside domain"),
            Error::InvalidLevel => f.write_str("level must lie in (0, 1]"),
            Error::InsufficientSamples => f.write_str("insufficient samples"),
            Error::InvalidArgument(msg) => f.write_str(msg),
        }
    }
}

impl core::error::Error for Error {}
