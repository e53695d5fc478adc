//! Exact-arithmetic classification of unitarizable highest-weight modules
//! over the special linear Lie superalgebras sl(m|n).
//!
//! The crate decides, for a highest weight given in standard coordinates,
//! whether the corresponding simple highest-weight supermodule carries a
//! positive-definite contravariant form with respect to the real form
//! su(p,q|n). The classifier evaluates the Dirac-inequality criteria; an
//! independent brute-force oracle computes Shapovalov Gram matrices on
//! Verma weight spaces by PBW reduction and certifies positive
//! semidefiniteness in exact rational arithmetic.
//!
//! All arithmetic is over arbitrary-precision rationals; there is no
//! floating point anywhere in the crate.

pub mod algebra;
pub mod composition;
pub mod dirac;
mod error;
pub mod rat;
pub mod report;
pub mod shapovalov;
pub mod weights;

pub use algebra::{PositiveSystem, PositiveSystemKind, Root, RootParity, Signature};
pub use dirac::{classify, classify_fd, classify_ifd, Case, Reason, Thresholds, Verdict};
pub use error::Error;
pub use rat::Rat;
pub use shapovalov::{GramMatrix, OmegaVariant};
pub use weights::{FdFamily, IfdFamily, UnitarityReport, Weight};
