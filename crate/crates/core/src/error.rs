use alloc::string::String;
use core::fmt;

/// Errors raised by the geometry, lattice and operator layers.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A vector or point had the wrong number of coordinates.
    DimensionMismatch { expected: usize, found: usize },
    /// The input is outside the supported desk-scale limits.
    TooLarge(String),
    /// The generator set is unusable (empty, degenerate, contains a line, ...).
    DegenerateCone(String),
    /// A rational literal could not be parsed.
    Parse(String),
    /// A point was required to lie in the interior of the cone.
    NotInterior(&'static str),
    /// The operation has no meaning in dimension one.
    DimensionOne(&'static str),
    /// A vector was not supported where the operator requires.
    Support(&'static str),
    /// Two modules were given over different cones.
    ConeMismatch,
    /// A module-level precondition failed.
    Module(String),
    /// Exponential of an inner product would leave double range.
    Overflow { norm_sqr: f64 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::TooLarge(msg) => write!(f, "input too large: {msg}"),
            Error::DegenerateCone(msg) => write!(f, "degenerate cone: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
            Error::NotInterior(msg) => f.write_str(msg),
            Error::DimensionOne(msg) => f.write_str(msg),
            Error::Support(msg) => f.write_str(msg),
            Error::ConeMismatch => f.write_str("modules are defined over different cones"),
            Error::Module(msg) => write!(f, "module error: {msg}"),
            Error::Overflow { norm_sqr } => write!(
                f,
                "squared norm {norm_sqr} exceeds 700; exponential would overflow"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T, E = Error> = core::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
