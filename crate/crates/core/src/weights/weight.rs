use std::fmt;

use serde::{Deserialize, Serialize};

/// A weight in Dynkin-label coordinates, optionally followed by an abelian charge.
///
/// Labels of weights of genuine representations are integers; the charge is
/// normalized so that the defining representation of `U(m)` has charge 1,
/// which keeps every charge arising from tensor constructions integral.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}
