//! Skew-symmetric endomorphisms of ℝⁿ and their action on forms.
//!
//! A skew matrix `Ω = (ω_ij)` is identified with the 2-form `Σ_{i<j} ω_ij e_i∧e_j`
//! and acts on vectors by `Ω e_i = Σ_j ω_ji e_j`. In particular `e_i∧e_j` sends
//! `e_i ↦ -e_j` and `e_j ↦ e_i`. Indices in the public API are 1-based.

use num_traits::Zero;

use super::multivector::{monomials, sort_sign, Multivector};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SkewEndo {
    dim: usize,
    entries: Vec<Scalar>,
}

impl SkewEndo {
    pub fn zero(dim: usize) -> Self {
        SkewEndo {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    /// Validates `Ω + Ωᵀ = 0` on a row-major n×n matrix.
    pub fn from_matrix(dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch(entries.len(), dim * dim));
        }
        for i in 0..dim {
            for j in 0..dim {
                if entries[i * dim + j] != -entries[j * dim + i].clone() {
                    return Err(Error::NotSkew);
                }
            }
        }
        Ok(SkewEndo { dim, entries })
    }

    pub fn from_int_matrix(rows: &[&[i64]]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            if r.len() != dim {
                return Err(Error::DimensionMismatch(r.len(), dim));
            }
            entries.extend(r.iter().map(|&v| scalar::int(v)));
        }
        Self::from_matrix(dim, entries)
    }

    /// Elementary rotation generator `e_i∧e_j` (1-based, i ≠ j).
    pub fn elementary(dim: usize, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > dim || j > dim || i == j {
            return Err(Error::InvalidMultivector(format!(
                "bad plane ({i},{j}) in dimension {dim}"
            )));
        }
        let mut s = Self::zero(dim);
        s.set(i, j, scalar::one());
        Ok(s)
    }

    /// Sets `ω_ij = v` and `ω_ji = -v` (1-based).
    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        let n = self.dim;
        self.entries[(j - 1) * n + (i - 1)] = -v.clone();
        self.entries[(i - 1) * n + (j - 1)] = v;
    }

    /// `ω_ij` (1-based).
    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Coordinates `(ω_ij)_{i<j}` in lexicographic order.
    pub fn to_coords(&self) -> Vec<Scalar> {
        monomials(self.dim, 2)
            .iter()
            .map(|p| self.get(p[0], p[1]).clone())
            .collect()
    }

    pub fn from_coords(dim: usize, coords: &[Scalar]) -> Result<Self> {
        let pairs = monomials(dim, 2);
        if pairs.len() != coords.len() {
            return Err(Error::DimensionMismatch(coords.len(), pairs.len()));
        }
        let mut s = Self::zero(dim);
        for (p, c) in pairs.iter().zip(coords) {
            s.set(p[0], p[1], c.clone());
        }
        Ok(s)
    }

    pub fn to_bivector(&self) -> Multivector {
        Multivector::from_terms(
            self.dim,
            2,
            monomials(self.dim, 2)
                .into_iter()
                .map(|p| {
                    let c = self.get(p[0], p[1]).clone();
                    (p, c)
                }),
        )
        .expect("valid pairs")
    }

    pub fn from_bivector(b: &Multivector) -> Result<Self> {
        if b.grade() != 2 {
            return Err(Error::GradeMismatch {
                expected: 2,
                found: b.grade(),
            });
        }
        let mut s = Self::zero(b.dim());
        for (idx, c) in b.terms() {
            s.set(idx[0], idx[1], c.clone());
        }
        Ok(s)
    }

    pub fn add(&self, other: &SkewEndo) -> Result<SkewEndo> {
        self.check_dim(other)?;
        Ok(SkewEndo {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &SkewEndo) -> Result<SkewEndo> {
        self.add(&other.scale(&-scalar::one()))
    }

    pub fn scale(&self, s: &Scalar) -> SkewEndo {
        SkewEndo {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * s).collect(),
        }
    }

    fn check_dim(&self, other: &SkewEndo) -> Result<()> {
        if self.dim != other.dim {
            Err(Error::DimensionMismatch(self.dim, other.dim))
        } else {
            Ok(())
        }
    }

    fn matmul(&self, other: &SkewEndo) -> Vec<Scalar> {
        let n = self.dim;
        let mut out = vec![Scalar::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Matrix commutator `[A, B] = AB - BA`.
    pub fn bracket(&self, other: &SkewEndo) -> Result<SkewEndo> {
        self.check_dim(other)?;
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        Ok(SkewEndo {
            dim: self.dim,
            entries: ab.into_iter().zip(ba).map(|(x, y)| x - y).collect(),
        })
    }

    /// `⟨A, B⟩ = -½ trace(AB)`; the generators `e_i∧e_j` are orthonormal.
    pub fn inner(&self, other: &SkewEndo) -> Result<Scalar> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut tr = Scalar::zero();
        for i in 0..n {
            for k in 0..n {
                tr += &self.entries[i * n + k] * &other.entries[k * n + i];
            }
        }
        Ok(-tr / scalar::int(2))
    }

    /// One `i j p/q` line per nonzero `ω_ij` with `i < j`.
    pub fn to_record(&self) -> String {
        let mut out = String::new();
        for p in monomials(self.dim, 2) {
            let c = self.get(p[0], p[1]);
            if !c.is_zero() {
                out.push_str(&format!("{} {} {}\n", p[0], p[1], scalar::to_record(c)));
            }
        }
        out
    }

    /// `Ω v` for a grade-1 multivector.
    pub fn apply_vector(&self, v: &Multivector) -> Result<Multivector> {
        so_act(self, v)
    }
}

/// Derivation action of `Ω ∈ 𝔰𝔬(n)` on forms: `Ω·(a∧b) = (Ω·a)∧b + a∧(Ω·b)`,
/// with `Ω e_i = Σ_j ω_ji e_j` on vectors.
pub fn so_act(omega: &SkewEndo, t: &Multivector) -> Result<Multivector> {
    let n = omega.dim;
    if n != t.dim() {
        return Err(Error::DimensionMismatch(n, t.dim()));
    }
    let mut out = Multivector::zero(t.dim(), t.grade())?;
    let mut idx = Vec::with_capacity(t.grade());
    for (mono, c) in t.terms() {
        for pos in 0..mono.len() {
            let i = mono[pos];
            for j in 1..=n {
                let w = omega.get(j, i);
                if w.is_zero() || (j != i && mono.contains(&j)) {
                    continue;
                }
                idx.clear();
                idx.extend_from_slice(mono);
                idx[pos] = j;
                if let Some((_, _)) = sort_sign(&idx) {
                    out.add_term(&idx, c * w)?;
                }
            }
        }
    }
    Ok(out)
}
