use std::collections::BTreeMap;
use std::sync::Arc;

use super::root_system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

/// A formal character: weights with positive multiplicities over a fixed root system.
#[derive(Debug, Clone)]
pub struct WeightMultiset {
    rs: Arc<RootSystem>,
    weights: BTreeMap<Weight, u64>,
}

impl PartialEq for WeightMultiset {
    fn eq(&self, other: &Self) -> bool {
        self.rs.name() == other.rs.name() && self.weights == other.weights
    }
}

impl Eq for WeightMultiset {}

impl WeightMultiset {
    pub fn empty(rs: Arc<RootSystem>) -> Self {
        WeightMultiset {
            rs,
            weights: BTreeMap::new(),
        }
    }

    /// The one-dimensional character with weight `w`.
    pub fn singleton(rs: Arc<RootSystem>, w: Weight) -> Result<Self> {
        let mut m = Self::empty(rs);
        m.insert(w, 1)?;
        Ok(m)
    }

    pub fn trivial(rs: Arc<RootSystem>) -> Self {
        let z = rs.zero_weight();
        let mut m = Self::empty(rs);
        m.weights.insert(z, 1);
        m
    }

    pub fn root_system(&self) -> &Arc<RootSystem> {
        &self.rs
    }

    pub fn insert(&mut self, w: Weight, mult: u64) -> Result<()> {
        self.rs.check(&w)?;
        if mult > 0 {
            *self.weights.entry(w).or_insert(0) += mult;
        }
        Ok(())
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.weights.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.weights.iter().map(|(w, &m)| (w, m))
    }

    pub fn distinct(&self) -> usize {
        self.weights.len()
    }

    /// Total count with multiplicity, i.e. the dimension of the represented space.
    pub fn count(&self) -> u64 {
        self.weights.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    fn same_system(&self, other: &Self) -> Result<()> {
        if self.rs.name() != other.rs.name() {
            return Err(Error::RootSystemMismatch(self.rs.name(), other.rs.name()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_system(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.weights {
            *out.weights.entry(w.clone()).or_insert(0) += m;
        }
        Ok(out)
    }

    /// Multiset difference; fails if some multiplicity would go negative.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_system(other)?;
        let mut out = self.clone();
        for (w, &m) in &other.weights {
            let have = out.weights.get(w).copied().unwrap_or(0);
            if have < m {
                return Err(Error::NotACharacter(format!(
                    "weight {w} has multiplicity {have}, cannot remove {m}"
                )));
            }
            if have == m {
                out.weights.remove(w);
            } else {
                out.weights.insert(w.clone(), have - m);
            }
        }
        Ok(out)
    }

    /// Every weight scaled by `k` (the Adams operation `ψ^k`).
    pub fn adams(&self, k: i64) -> Self {
        let mut out = Self::empty(self.rs.clone());
        for (w, &m) in &self.weights {
            *out.weights.entry(w.scale(k)).or_insert(0) += m;
        }
        out
    }

    /// The contragredient character (all weights negated).
    pub fn dual(&self) -> Self {
        self.adams(-1)
    }

    pub fn is_weyl_invariant(&self) -> bool {
        self.weights.iter().all(|(w, &m)| {
            (0..self.rs.rank()).all(|i| self.multiplicity(&self.rs.reflect(w, i)) == m)
        })
    }
}

/// Tensor product of characters.
pub fn tensor_ms(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    a.same_system(b)?;
    let mut out = WeightMultiset::empty(a.rs.clone());
    for (wa, &ma) in &a.weights {
        for (wb, &mb) in &b.weights {
            *out.weights.entry(wa.add(wb)).or_insert(0) += ma * mb;
        }
    }
    Ok(out)
}

/// Exterior power `Λ^k` for `k ∈ {2, 3}` through Newton's identities.
pub fn wedge_power_ms(a: &WeightMultiset, k: usize) -> Result<WeightMultiset> {
    let mut signed: BTreeMap<Weight, i64> = BTreeMap::new();
    let mut acc = |ms: &WeightMultiset, coeff: i64| {
        for (w, &m) in &ms.weights {
            *signed.entry(w.clone()).or_insert(0) += coeff * m as i64;
        }
    };
    let denom = match k {
        2 => {
            acc(&tensor_ms(a, a)?, 1);
            acc(&a.adams(2), -1);
            2
        }
        3 => {
            let p1 = a;
            let p2 = a.adams(2);
            acc(&tensor_ms(&tensor_ms(p1, p1)?, p1)?, 1);
            acc(&tensor_ms(p1, &p2)?, -3);
            acc(&a.adams(3), 2);
            6
        }
        _ => {
            return Err(Error::Construction(format!(
                "exterior power of degree {k} is not supported"
            )))
        }
    };
    let context = format!("exterior power {k}");
    let mut out = WeightMultiset::empty(a.rs.clone());
    for (w, s) in signed {
        if s < 0 || s % denom != 0 {
            return Err(Error::NegativeMultiplicity {
                weight: w.to_string(),
                mult: s,
                context,
            });
        }
        if s > 0 {
            out.weights.insert(w, (s / denom) as u64);
        }
    }
    Ok(out)
}

/// Exact equality of formal characters.
pub fn char_equal(a: &WeightMultiset, b: &WeightMultiset) -> bool {
    a == b
}
