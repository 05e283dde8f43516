//! Formal characters of compact Lie groups as weight multisets.
//!
//! Irreducible weight systems come from Freudenthal's formula, arbitrary
//! characters are split by highest-weight subtraction, and tensor products and
//! exterior powers act directly on the multisets.

mod character;
mod decompose;
mod irrep;
mod root_system;
mod weight;

pub use character::{char_equal, tensor_ms, wedge_power_ms, WeightMultiset};
pub use decompose::{decompose, Decomposition, RealSummand, Summand};
pub use irrep::{conjugate_weight, dominant_multiplicities, irrep_weights, weyl_dim, weyl_orbit, Irrep};
pub use root_system::{Family, PositiveRoot, RootSystem};
pub use weight::Weight;
