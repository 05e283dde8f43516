use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::character::WeightMultiset;
use super::irrep::{conjugate_weight, irrep_weights, Irrep};
use super::root_system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summand {
    pub irrep: Irrep,
    pub multiplicity: u64,
}

/// A character written as a sum of irreducibles.
///
/// Summands are kept sorted by dimension, then highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub root_system: String,
    pub summands: Vec<Summand>,
}

impl Decomposition {
    fn new(root_system: String, mut summands: Vec<Summand>) -> Self {
        summands.sort_by(|a, b| {
            (a.irrep.dim, &a.irrep.highest_weight).cmp(&(b.irrep.dim, &b.irrep.highest_weight))
        });
        Decomposition {
            root_system,
            summands,
        }
    }

    pub fn total_dim(&self) -> u64 {
        self.summands.iter().map(|s| s.multiplicity * s.irrep.dim).sum()
    }

    /// Dimensions, one entry per copy.
    pub fn dims(&self) -> Vec<u64> {
        let mut v: Vec<u64> = self
            .summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.irrep.dim, s.multiplicity as usize))
            .collect();
        v.sort_unstable();
        v
    }

    pub fn multiplicity_of(&self, hw: &Weight) -> u64 {
        self.summands
            .iter()
            .find(|s| &s.irrep.highest_weight == hw)
            .map_or(0, |s| s.multiplicity)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.summands.iter().all(|s| s.multiplicity == 1)
    }

    /// Rebuilds the character as a weight multiset.
    pub fn character(&self, rs: &Arc<RootSystem>) -> Result<WeightMultiset> {
        let mut out = WeightMultiset::empty(rs.clone());
        for s in &self.summands {
            let ir = irrep_weights(rs, &s.irrep.highest_weight)?;
            for _ in 0..s.multiplicity {
                out = out.add(&ir)?;
            }
        }
        Ok(out)
    }

    /// Groups complex summands with their conjugates into real summands.
    ///
    /// A self-conjugate summand is counted as one real summand of the same
    /// dimension; every summand met in the case studies is of real type.
    pub fn real_forms(&self, rs: &RootSystem) -> Result<Vec<RealSummand>> {
        let mut out = Vec::new();
        for s in &self.summands {
            let hw = &s.irrep.highest_weight;
            let conj = conjugate_weight(rs, hw);
            if &conj == hw {
                out.push(RealSummand {
                    highest_weight: hw.clone(),
                    conjugate: None,
                    real_dim: s.irrep.dim,
                    multiplicity: s.multiplicity,
                });
                continue;
            }
            let cm = self.multiplicity_of(&conj);
            if cm != s.multiplicity {
                return Err(Error::NotACharacter(format!(
                    "summand {hw} has multiplicity {} but its conjugate {conj} has {cm}",
                    s.multiplicity
                )));
            }
            // keep the pair once, under its lexicographically larger member
            if hw > &conj {
                out.push(RealSummand {
                    highest_weight: hw.clone(),
                    conjugate: Some(conj),
                    real_dim: 2 * s.irrep.dim,
                    multiplicity: s.multiplicity,
                });
            }
        }
        out.sort_by(|a, b| (a.real_dim, &a.highest_weight).cmp(&(b.real_dim, &b.highest_weight)));
        Ok(out)
    }
}

/// One real summand: either a self-conjugate irreducible or a pair `W ⊕ W̄`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealSummand {
    pub highest_weight: Weight,
    pub conjugate: Option<Weight>,
    pub real_dim: u64,
    pub multiplicity: u64,
}

impl RealSummand {
    pub fn contains(&self, hw: &Weight) -> bool {
        &self.highest_weight == hw || self.conjugate.as_ref() == Some(hw)
    }
}

/// Splits a character into irreducibles by repeatedly peeling off the
/// highest remaining weight (maximal height, ties broken lexicographically).
pub fn decompose(ms: &WeightMultiset) -> Result<Decomposition> {
    let rs = ms.root_system().clone();
    let mut rest = ms.clone();
    let mut found: Vec<Summand> = Vec::new();
    while !rest.is_empty() {
        let (top, mult) = rest
            .iter()
            .map(|(w, m)| (rs.height(w), w.clone(), m))
            .max_by(|a, b| (&a.0, &a.1).cmp(&(&b.0, &b.1)))
            .map(|(_, w, m)| (w, m))
            .expect("non-empty");
        if !rs.is_dominant(&top) {
            return Err(Error::NotACharacter(format!(
                "highest remaining weight {top} is not dominant"
            )));
        }
        let ir = irrep_weights(&rs, &top)?;
        for _ in 0..mult {
            rest = rest.sub(&ir)?;
        }
        found.push(Summand {
            irrep: Irrep::new(&rs, top)?,
            multiplicity: mult,
        });
    }
    Ok(Decomposition::new(rs.name(), found))
}
