use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::sync::Arc;

use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::character::WeightMultiset;
use super::root_system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// An irreducible representation, identified by its dominant highest weight.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Irrep {
    pub highest_weight: Weight,
    pub dim: u64,
}

impl Irrep {
    pub fn new(rs: &RootSystem, hw: Weight) -> Result<Self> {
        let dim = weyl_dim(rs, &hw)?;
        Ok(Irrep {
            highest_weight: hw,
            dim,
        })
    }
}

fn require_dominant(rs: &RootSystem, hw: &Weight) -> Result<()> {
    rs.check(hw)?;
    if !rs.is_dominant(hw) {
        return Err(Error::NotDominant(hw.to_string()));
    }
    Ok(())
}

/// Weyl's dimension formula `∏_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dim(rs: &RootSystem, hw: &Weight) -> Result<u64> {
    require_dominant(rs, hw)?;
    let rho = rs.weyl_vector();
    let shifted = hw.add(&rho);
    let mut d = Scalar::one();
    for r in rs.positive_roots() {
        d *= rs.pair_root(&shifted, r) / rs.pair_root(&rho, r);
    }
    if !d.is_integer() {
        return Err(Error::Construction(format!("non-integral Weyl dimension {d}")));
    }
    d.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Construction("dimension overflow".into()))
}

/// Weyl orbit of `w`, generated by simple reflections.
pub fn weyl_orbit(rs: &RootSystem, w: &Weight) -> BTreeSet<Weight> {
    let mut seen: HashSet<Weight> = HashSet::new();
    let mut queue = VecDeque::from([w.clone()]);
    seen.insert(w.clone());
    while let Some(cur) = queue.pop_front() {
        for i in 0..rs.rank() {
            let next = rs.reflect(&cur, i);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// Dominant weights of `V(λ)` with their multiplicities (Freudenthal).
pub fn dominant_multiplicities(rs: &RootSystem, hw: &Weight) -> Result<BTreeMap<Weight, u64>> {
    require_dominant(rs, hw)?;
    let roots: Vec<Weight> = rs.positive_roots().iter().map(|r| rs.root_weight(r)).collect();

    // dominant weights λ − (sums of positive roots), found breadth first
    let mut dominant: HashSet<Weight> = HashSet::from([hw.clone()]);
    let mut queue = VecDeque::from([hw.clone()]);
    while let Some(cur) = queue.pop_front() {
        for a in &roots {
            let next = cur.sub(a);
            if rs.is_dominant(&next) && dominant.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    let mut order: Vec<(Scalar, Weight)> = dominant
        .into_iter()
        .map(|w| (rs.height(&hw.sub(&w)), w))
        .collect();
    order.sort();

    let rho = rs.weyl_vector();
    let top = {
        let s = hw.add(&rho);
        rs.inner(&s, &s)
    };
    let two = scalar::int(2);
    let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
    for (_, mu) in order {
        if &mu == hw {
            mult.insert(mu, 1);
            continue;
        }
        let mut sum = Scalar::zero();
        for (a, r) in roots.iter().zip(rs.positive_roots()) {
            let mut nu = mu.add(a);
            loop {
                let m = mult.get(&rs.dominant_conjugate(&nu)).copied().unwrap_or(0);
                if m == 0 {
                    break;
                }
                sum += scalar::int(m as i64) * rs.pair_root(&nu, r);
                nu = nu.add(a);
            }
        }
        let s = mu.add(&rho);
        let denom = &top - rs.inner(&s, &s);
        let m = &two * sum / denom;
        if !m.is_integer() || m < Scalar::zero() {
            return Err(Error::Construction(format!(
                "Freudenthal produced multiplicity {m} at {mu}"
            )));
        }
        let m = m.to_integer().to_u64().unwrap_or(0);
        if m > 0 {
            mult.insert(mu, m);
        }
    }
    Ok(mult)
}

/// The full weight system of `V(λ)` with multiplicities.
pub fn irrep_weights(rs: &Arc<RootSystem>, hw: &Weight) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::empty(rs.clone());
    for (mu, m) in dominant_multiplicities(rs, hw)? {
        for w in weyl_orbit(rs, &mu) {
            out.insert(w, m)?;
        }
    }
    Ok(out)
}

/// Highest weight of the dual representation.
pub fn conjugate_weight(rs: &RootSystem, hw: &Weight) -> Weight {
    rs.dominant_conjugate(&hw.neg())
}
