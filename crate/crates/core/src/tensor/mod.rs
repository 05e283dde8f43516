//! Exact multilinear algebra over the rationals.

pub mod linalg;
pub mod multivector;
pub mod skew;

pub use linalg::{exact_kernel, Kernel, LinearMap};
pub use multivector::{contract2, interior, monomials, wedge, Multivector};
pub use skew::{so_act, SkewEndo};
