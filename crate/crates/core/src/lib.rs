//! Exact computations for G-structures on Riemannian manifolds.
//!
//! The crate classifies the intrinsic-torsion types of a G-structure as the
//! irreducible components of `ℝⁿ ⊗ 𝔪`, decides which types admit a metric
//! connection with totally skew-symmetric torsion, realizes the stabilizer
//! algebras of the classical defining tensors as explicit matrices, and
//! replays the rank/character search that isolates `Spin(7) ⊂ SO(8)`.
//!
//! All arithmetic is exact (arbitrary-precision rationals or integers).

pub mod error;
pub mod scalar;
pub mod tensor;
pub mod weights;
pub mod models;
pub mod catalog;
pub mod classify;

pub use error::{Error, Result};
pub use scalar::Scalar;
