//! Error type shared by all modules of the crate.

/// Errors reported by fallible operations.
///
/// Operations that cannot fail on valid inputs simply return values; the
/// variants below correspond to genuine runtime conditions a caller can hit
/// with well-typed but invalid data.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// Division (or inversion) of the zero scalar.
    #[error("division by zero in Q(zeta_3)")]
    DivisionByZero,

    /// A projective point or line was built from the zero coordinate triple.
    #[error("cannot normalize the zero triple to a projective object")]
    ZeroTriple,

    /// `meet`/`join` called on two copies of the same line or point.
    #[error("meet/join requires two distinct projective inputs")]
    IdenticalInputs,

    /// Multilinearization requires degree at least 2.
    #[error("degree {got} is too small; need at least {min}")]
    DegreeTooSmall { got: usize, min: usize },

    /// A degree exceeded the configured cost bound.
    #[error("degree {got} exceeds the configured bound {max}; raise the bound to force the computation")]
    DegreeTooLarge { got: usize, max: usize },

    /// Component operations require equal numbers of factors.
    #[error("component length mismatch: {left} vs {right} factors")]
    LengthMismatch { left: usize, right: usize },

    /// A `WholePlane` factor appeared where only degree-1 schemes allow it.
    #[error("a whole-plane factor is only valid in the degree-1 scheme")]
    UnexpectedWholePlane,

    /// The relation set failed its structural validation.
    #[error("relation set failed validation: {0}")]
    InvalidRelations(String),

    /// A run configuration was out of range.
    #[error("invalid run configuration: {0}")]
    InvalidConfig(String),
}
