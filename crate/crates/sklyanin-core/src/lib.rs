//! Exact computations around the degenerate Sklyanin algebra S(1,1,1).
//!
//! The algebra S(1,1,1) = k<x,y,z> / (yz + zy + x², zx + xz + y², xy + yx + z²)
//! has a rich geometry of *truncated point schemes* V_d ⊂ (ℙ²)^d: the loci
//! parametrizing truncated point modules of length d + 1.  This crate computes
//! those schemes exactly over the cyclotomic field ℚ(ζ₃):
//!
//! * [`scalars`] — arithmetic in ℚ(ζ₃) and in the polynomial ring ℚ(ζ₃)[t],
//! * [`geometry`] — the projective plane ℙ², its special points and lines,
//! * [`relations`] — the quadratic relations, successor matrices and loci,
//! * [`quiver`] — the six-vertex quiver Q whose paths index components of V_d,
//! * [`scheme`] — building V_d and W_d as unions of product components,
//! * [`sections`] — graded dimensions of the point parameter rings B and P,
//! * [`hilbert`] — graded dimensions of S itself, via relation-span ranks,
//! * [`report`] — machine-readable reports and the self-verification suite.
//!
//! Everything is exact: no floating point is used anywhere.  All iteration
//! orders are deterministic, so reports and certificates are byte-reproducible.
//!
//! ```
//! use sklyanin_core::hilbert::dim_s;
//! use sklyanin_core::scheme::{truncated_scheme, limit_scheme};
//! use sklyanin_core::sections::{dim_b, dim_p};
//!
//! // The algebra has Hilbert series matching 3·2^(d-1) through degree 6 …
//! assert_eq!(dim_s(4).unwrap(), 24);
//! // … the degree-4 truncated scheme has twelve components, its limiting
//! // counterpart six …
//! assert_eq!(truncated_scheme(4).unwrap().len(), 12);
//! assert_eq!(limit_scheme(4).unwrap().len(), 6);
//! // … and the two point parameter rings first diverge in degree 4.
//! assert_eq!(dim_b(4).unwrap(), 24);
//! assert_eq!(dim_p(4).unwrap(), 18);
//! ```

pub mod error;
pub mod geometry;
pub mod hilbert;
pub mod linalg;
pub mod quiver;
pub mod relations;
pub mod report;
pub mod scalars;
pub mod scheme;
pub mod sections;

pub use error::Error;

/// Convenience alias used by all fallible operations in this crate.
pub type Result<T> = std::result::Result<T, Error>;
