//! Root data for the simple types used by the case studies.
//!
//! Conventions follow Bourbaki numbering. Weights are written in the
//! fundamental-weight (Dynkin label) basis; the Cartan matrix entry
//! `a_ij = 2(α_i, α_j)/(α_j, α_j)` is the j-th Dynkin label of `α_i`.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::weight::Weight;
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::tensor::LinearMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    G,
    F,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PositiveRoot {
    /// Coordinates in the simple-root basis.
    pub simple: Vec<i64>,
    /// Dynkin labels.
    pub labels: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    charge: bool,
    cartan: Vec<Vec<i64>>,
    /// `(α_i, α_i)/2`
    half_norms: Vec<Scalar>,
    /// `(ω_i, ω_j)`
    gram: Vec<Vec<Scalar>>,
    /// inverse Cartan matrix, for simple-root coordinates of weights
    cartan_inv: Vec<Vec<Scalar>>,
    positive: Vec<PositiveRoot>,
}

impl RootSystem {
    pub fn a(rank: usize) -> Result<Self> {
        if rank == 0 {
            return Err(Error::UnsupportedFamily("A0".into()));
        }
        let mut c = vec![vec![0; rank]; rank];
        for i in 0..rank {
            c[i][i] = 2;
            if i + 1 < rank {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        Self::build(Family::A, c, vec![scalar::one(); rank], false)
    }

    /// `B_n`, `n ≥ 2`: long roots `α_1..α_{n-1}`, short root `α_n`.
    pub fn b(rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::UnsupportedFamily(format!("B{rank}")));
        }
        let mut c = vec![vec![0; rank]; rank];
        for i in 0..rank {
            c[i][i] = 2;
            if i + 1 < rank {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c[rank - 2][rank - 1] = -2;
        let mut half = vec![scalar::one(); rank];
        half[rank - 1] = scalar::frac(1, 2);
        Self::build(Family::B, c, half, false)
    }

    /// `G_2` with `α_1` short.
    pub fn g2() -> Result<Self> {
        Self::build(
            Family::G,
            vec![vec![2, -1], vec![-3, 2]],
            vec![scalar::frac(1, 3), scalar::one()],
            false,
        )
    }

    /// `F_4` with `α_1, α_2` long.
    pub fn f4() -> Result<Self> {
        Self::build(
            Family::F,
            vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -2, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            vec![
                scalar::one(),
                scalar::one(),
                scalar::frac(1, 2),
                scalar::frac(1, 2),
            ],
            false,
        )
    }

    /// Adds one abelian charge coordinate (reductive algebra `𝔤 ⊕ 𝔲(1)`).
    pub fn with_charge(mut self) -> Self {
        self.charge = true;
        self
    }

    fn build(family: Family, cartan: Vec<Vec<i64>>, half_norms: Vec<Scalar>, charge: bool) -> Result<Self> {
        let rank = cartan.len();
        let a = LinearMap::from_rows(
            rank,
            &cartan
                .iter()
                .map(|r| r.iter().map(|&x| scalar::int(x)).collect())
                .collect::<Vec<_>>(),
        )?;
        // rows of A⁻¹: solve Aᵀ-free by columns, then read (A⁻¹)_{ij}
        let mut cartan_inv = vec![vec![Scalar::zero(); rank]; rank];
        for j in 0..rank {
            let mut e = vec![Scalar::zero(); rank];
            e[j] = Scalar::one();
            let col = a
                .solve(&e)?
                .ok_or_else(|| Error::Construction("singular Cartan matrix".into()))?;
            for i in 0..rank {
                cartan_inv[i][j] = col[i].clone();
            }
        }
        // ω_k = Σ_j (A⁻¹)_{kj} α_j and (ω_i, α_j) = δ_ij d_j.
        let gram = (0..rank)
            .map(|k| {
                (0..rank)
                    .map(|i| &cartan_inv[k][i] * &half_norms[i])
                    .collect()
            })
            .collect();
        let positive = positive_roots(&cartan);
        Ok(RootSystem {
            family,
            rank,
            charge,
            cartan,
            half_norms,
            gram,
            cartan_inv,
            positive,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn has_charge(&self) -> bool {
        self.charge
    }

    /// Length of weight coordinate vectors (rank, plus one with a charge).
    pub fn coord_len(&self) -> usize {
        self.rank + usize::from(self.charge)
    }

    pub fn name(&self) -> String {
        let base = match self.family {
            Family::A => format!("A{}", self.rank),
            Family::B => format!("B{}", self.rank),
            Family::G => "G2".to_string(),
            Family::F => "F4".to_string(),
        };
        if self.charge {
            format!("{base}+u1")
        } else {
            base
        }
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn positive_roots(&self) -> &[PositiveRoot] {
        &self.positive
    }

    /// Number of positive roots predicted by the family.
    pub fn expected_positive_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B => n * n,
            Family::G => 6,
            Family::F => 24,
        }
    }

    /// Dimension of the (semisimple part of the) Lie algebra.
    pub fn algebra_dim(&self) -> usize {
        self.rank + 2 * self.positive.len()
    }

    /// Simple root `α_i` as a weight (charge 0).
    pub fn simple_root(&self, i: usize) -> Weight {
        let mut c: Vec<i64> = self.cartan[i].clone();
        if self.charge {
            c.push(0);
        }
        Weight::new(c)
    }

    pub fn root_weight(&self, r: &PositiveRoot) -> Weight {
        let mut c = r.labels.clone();
        if self.charge {
            c.push(0);
        }
        Weight::new(c)
    }

    pub fn weyl_vector(&self) -> Weight {
        let mut c = vec![1; self.rank];
        if self.charge {
            c.push(0);
        }
        Weight::new(c)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::new(vec![0; self.coord_len()])
    }

    /// Fundamental weight `ω_i` (0-based), with charge `q` when the system carries one.
    pub fn fundamental(&self, i: usize) -> Weight {
        let mut c = vec![0; self.coord_len()];
        c[i] = 1;
        Weight::new(c)
    }

    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.coords().len() != self.coord_len() {
            return Err(Error::DimensionMismatch(w.coords().len(), self.coord_len()));
        }
        Ok(())
    }

    /// Semisimple inner product `(μ, ν)`; the charge coordinate is ignored.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Scalar {
        let (a, b) = (a.coords(), b.coords());
        let mut s = Scalar::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    s += &self.gram[i][j] * scalar::int(a[i] * b[j]);
                }
            }
        }
        s
    }

    /// `(μ, α)` for a positive root.
    pub fn pair_root(&self, mu: &Weight, r: &PositiveRoot) -> Scalar {
        let m = mu.coords();
        (0..self.rank)
            .filter(|&j| r.simple[j] != 0 && m[j] != 0)
            .fold(Scalar::zero(), |acc, j| {
                acc + scalar::int(m[j] * r.simple[j]) * &self.half_norms[j]
            })
    }

    pub fn is_dominant(&self, w: &Weight) -> bool {
        w.coords()[..self.rank].iter().all(|&x| x >= 0)
    }

    /// Simple reflection `s_i`.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let mut c = w.coords().to_vec();
        let k = c[i];
        if k != 0 {
            for j in 0..self.rank {
                c[j] -= k * self.cartan[i][j];
            }
        }
        Weight::new(c)
    }

    /// The dominant weight in the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = (0..self.rank).find(|&i| cur.coords()[i] < 0) {
            cur = self.reflect(&cur, i);
        }
        cur
    }

    /// Height `Σ c_j` of `w = Σ c_j α_j` (rational for general weights).
    pub fn height(&self, w: &Weight) -> Scalar {
        let m = w.coords();
        let mut h = Scalar::zero();
        for i in 0..self.rank {
            if m[i] != 0 {
                for j in 0..self.rank {
                    h += scalar::int(m[i]) * &self.cartan_inv[i][j];
                }
            }
        }
        h
    }

    /// Orthogonal (`ε`-basis) coordinates for type B; `None` otherwise.
    pub fn to_orthogonal(&self, w: &Weight) -> Option<Vec<Scalar>> {
        if self.family != Family::B {
            return None;
        }
        let n = self.rank;
        let m = w.coords();
        let mut out = vec![Scalar::zero(); n];
        for (i, &mi) in m[..n].iter().enumerate() {
            let coeff = if i + 1 == n {
                scalar::frac(mi, 2)
            } else {
                scalar::int(mi)
            };
            for o in out.iter_mut().take(i + 1) {
                *o += &coeff;
            }
        }
        Some(out)
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// Positive roots by the string algorithm, ordered by height then lexicographically.
fn positive_roots(cartan: &[Vec<i64>]) -> Vec<PositiveRoot> {
    let n = cartan.len();
    let labels_of = |c: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|j| (0..n).map(|i| c[i] * cartan[i][j]).sum())
            .collect()
    };
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut c = vec![0; n];
            c[i] = 1;
            c
        })
        .collect();
    let mut level = roots.clone();
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in &level {
            let lab = labels_of(beta);
            for i in 0..n {
                // p = largest p with beta - p α_i a root
                let mut p = 0;
                loop {
                    let mut c = beta.clone();
                    c[i] -= p + 1;
                    if c.iter().all(|&x| x >= 0) && roots.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - lab[i];
                if q > 0 {
                    let mut c = beta.clone();
                    c[i] += 1;
                    if !next.contains(&c) && !roots.contains(&c) {
                        next.push(c);
                    }
                }
            }
        }
        roots.extend(next.iter().cloned());
        level = next;
    }
    roots.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    roots
        .into_iter()
        .map(|simple| PositiveRoot {
            labels: labels_of(&simple),
            simple,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all() -> Vec<RootSystem> {
        vec![
            RootSystem::a(1).unwrap(),
            RootSystem::a(2).unwrap(),
            RootSystem::b(3).unwrap(),
            RootSystem::b(4).unwrap(),
            RootSystem::g2().unwrap(),
            RootSystem::f4().unwrap(),
        ]
    }

    #[test]
    fn positive_root_counts() {
        for rs in all() {
            assert_eq!(rs.positive_roots().len(), rs.expected_positive_count(), "{rs}");
        }
    }

    #[test]
    fn algebra_dimensions() {
        let dims: Vec<usize> = all().iter().map(|r| r.algebra_dim()).collect();
        assert_eq!(dims, vec![3, 8, 21, 36, 14, 52]);
    }

    #[test]
    fn gram_matrix_symmetric() {
        for rs in all() {
            for i in 0..rs.rank() {
                for j in 0..rs.rank() {
                    assert_eq!(rs.gram[i][j], rs.gram[j][i], "{rs}");
                }
            }
        }
    }

    #[test]
    fn simple_roots_pair_with_fundamental_weights() {
        for rs in all() {
            for r in rs.positive_roots().iter().take(rs.rank()) {
                let i = r.simple.iter().position(|&x| x == 1).unwrap();
                let w = rs.fundamental(i);
                assert_eq!(rs.pair_root(&w, r), rs.half_norms[i].clone());
                // (α_i, α_i) from the gram matrix agrees with the declared length
                let aw = rs.simple_root(i);
                assert_eq!(rs.inner(&aw, &aw), &rs.half_norms[i] * scalar::int(2));
            }
        }
    }

    #[test]
    fn highest_root_heights() {
        // Coxeter number minus one
        let h: Vec<i64> = all()
            .iter()
            .map(|r| r.positive_roots().last().unwrap().simple.iter().sum())
            .collect();
        assert_eq!(h, vec![1, 2, 5, 7, 5, 11]);
    }

    #[test]
    fn spin_weight_orthogonal_coordinates() {
        let b3 = RootSystem::b(3).unwrap();
        let o = b3.to_orthogonal(&b3.fundamental(2)).unwrap();
        assert_eq!(o, vec![scalar::frac(1, 2); 3]);
        assert!(RootSystem::g2().unwrap().to_orthogonal(&Weight::new(vec![1, 0])).is_none());
    }
}
