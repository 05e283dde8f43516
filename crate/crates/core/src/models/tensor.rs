//! Defining tensors whose stabilizers realize the subgroups `G ⊂ SO(n)`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::tensor::{monomials, wedge, Multivector, SkewEndo};

/// A fully symmetric 3-tensor on ℝⁿ, stored on sorted index triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymCubic {
    dim: usize,
    coeffs: BTreeMap<[usize; 3], Scalar>,
}

impl SymCubic {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &BTreeMap<[usize; 3], Scalar> {
        &self.coeffs
    }

    /// `c_{ijk}` for any index order (1-based).
    pub fn get(&self, i: usize, j: usize, k: usize) -> Scalar {
        let mut key = [i, j, k];
        key.sort_unstable();
        self.coeffs.get(&key).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Trace `Σ_i c_{iik}` for each `k`.
    pub fn traces(&self) -> Vec<Scalar> {
        (1..=self.dim)
            .map(|k| (1..=self.dim).map(|i| self.get(i, i, k)).sum())
            .collect()
    }

    /// Derivation action of `Ω`, with `Ω e_i = Σ_j ω_ji e_j` on each slot.
    pub fn act(&self, omega: &SkewEndo) -> SymCubic {
        let n = self.dim;
        let mut out = BTreeMap::new();
        for a in 1..=n {
            for b in a..=n {
                for c in b..=n {
                    let mut s = Scalar::zero();
                    for l in 1..=n {
                        let (wa, wb, wc) = (omega.get(a, l), omega.get(b, l), omega.get(c, l));
                        if !wa.is_zero() {
                            s += wa * self.get(l, b, c);
                        }
                        if !wb.is_zero() {
                            s += wb * self.get(a, l, c);
                        }
                        if !wc.is_zero() {
                            s += wc * self.get(a, b, l);
                        }
                    }
                    if !s.is_zero() {
                        out.insert([a, b, c], s);
                    }
                }
            }
        }
        SymCubic { dim: n, coeffs: out }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensorKind {
    Alternating2,
    Alternating3,
    Alternating4,
    SymmetricCubic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DefiningTensor {
    Form(Multivector),
    Cubic(SymCubic),
}

pub const TENSOR_NAMES: [&str; 4] = ["so3-cubic", "kaehler-2form", "g2-3form", "cayley-4form"];

impl DefiningTensor {
    pub fn kind(&self) -> TensorKind {
        match self {
            DefiningTensor::Form(f) => match f.grade() {
                2 => TensorKind::Alternating2,
                3 => TensorKind::Alternating3,
                _ => TensorKind::Alternating4,
            },
            DefiningTensor::Cubic(_) => TensorKind::SymmetricCubic,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            DefiningTensor::Form(f) => f.dim(),
            DefiningTensor::Cubic(c) => c.dim(),
        }
    }

    /// Coordinates of `Ω·𝒯` in a fixed monomial basis of the tensor space.
    pub fn act_coords(&self, omega: &SkewEndo) -> Result<Vec<Scalar>> {
        match self {
            DefiningTensor::Form(f) => Ok(crate::tensor::so_act(omega, f)?.to_coords()),
            DefiningTensor::Cubic(c) => {
                let moved = c.act(omega);
                let n = c.dim;
                let mut v = Vec::new();
                for a in 1..=n {
                    for b in a..=n {
                        for d in b..=n {
                            v.push(moved.coeffs.get(&[a, b, d]).cloned().unwrap_or_else(Scalar::zero));
                        }
                    }
                }
                Ok(v)
            }
        }
    }

    /// Dimension of the stabilizer predicted for the named tensors.
    pub fn expected_stabilizer_dim(&self) -> usize {
        match (self.kind(), self.dim()) {
            (TensorKind::SymmetricCubic, 5) => 3,
            (TensorKind::Alternating2, 6) => 9,
            (TensorKind::Alternating3, 7) => 14,
            (TensorKind::Alternating4, 8) => 21,
            _ => 0,
        }
    }
}

/// The associative 3-form `e127 + e135 − e146 − e236 − e245 + e347 + e567`.
pub fn g2_form() -> Multivector {
    Multivector::from_int_terms(
        7,
        3,
        &[
            (&[1, 2, 7], 1),
            (&[1, 3, 5], 1),
            (&[1, 4, 6], -1),
            (&[2, 3, 6], -1),
            (&[2, 4, 5], -1),
            (&[3, 4, 7], 1),
            (&[5, 6, 7], 1),
        ],
    )
    .expect("valid 3-form")
}

/// Hodge star on ℝⁿ with the standard orientation `e_1∧…∧e_n`.
fn hodge(f: &Multivector) -> Result<Multivector> {
    let n = f.dim();
    let k = f.grade();
    let vol = monomials(n, n).remove(0);
    let mut out = Multivector::zero(n, n - k)?;
    for (idx, c) in f.terms() {
        let rest: Vec<usize> = (1..=n).filter(|i| !idx.contains(i)).collect();
        let probe = wedge(&Multivector::basis(n, idx)?, &Multivector::basis(n, &rest)?)?;
        let sign = probe.coeff(&vol);
        out.add_term(&rest, c * sign)?;
    }
    Ok(out)
}

/// Embeds a form on ℝⁿ into ℝⁿ⁺¹ through the first `n` coordinates.
fn extend(f: &Multivector, dim: usize) -> Result<Multivector> {
    Multivector::from_terms(dim, f.grade(), f.terms().iter().map(|(k, v)| (k.clone(), v.clone())))
}

/// The Cayley 4-form `e_8∧ω + *ω` built from the associative 3-form.
pub fn cayley_form() -> Result<Multivector> {
    let phi = g2_form();
    let e8 = Multivector::basis(8, &[8])?;
    let a = wedge(&extend(&phi, 8)?, &e8)?;
    let b = extend(&hodge(&phi)?, 8)?;
    a.add(&b)
}

pub fn kaehler_form() -> Multivector {
    Multivector::from_int_terms(6, 2, &[(&[1, 2], 1), (&[3, 4], 1), (&[5, 6], 1)])
        .expect("valid 2-form")
}

/// Traceless symmetric 3×3 matrices, pairwise orthogonal with `tr(v²) = 6`.
const SO3_FRAME: [[[i64; 3]; 3]; 5] = [
    [[-2, 0, 0], [0, 1, 0], [0, 0, 1]],
    [[0, -1, -1], [-1, -1, 0], [-1, 0, 1]],
    [[0, 0, 1], [0, -1, -1], [1, -1, 1]],
    [[0, 1, 0], [1, -1, 1], [0, 1, 1]],
    [[0, -1, 1], [-1, 0, 1], [1, 1, 0]],
];

fn mat3_mul(a: &[[i64; 3]; 3], b: &[[i64; 3]; 3]) -> [[i64; 3]; 3] {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// `c_{ijk} = tr(v_i v_j v_k)` on ℝ⁵ ≅ traceless symmetric 3×3 matrices.
pub fn so3_cubic() -> SymCubic {
    let mut coeffs = BTreeMap::new();
    for i in 0..5 {
        for j in i..5 {
            let vij = mat3_mul(&SO3_FRAME[i], &SO3_FRAME[j]);
            for k in j..5 {
                let p = mat3_mul(&vij, &SO3_FRAME[k]);
                let tr = p[0][0] + p[1][1] + p[2][2];
                if tr != 0 {
                    coeffs.insert([i + 1, j + 1, k + 1], scalar::int(tr));
                }
            }
        }
    }
    SymCubic { dim: 5, coeffs }
}

pub fn defining_tensor(name: &str) -> Result<DefiningTensor> {
    Ok(match name {
        "g2-3form" => DefiningTensor::Form(g2_form()),
        "cayley-4form" => DefiningTensor::Form(cayley_form()?),
        "kaehler-2form" => DefiningTensor::Form(kaehler_form()),
        "so3-cubic" => DefiningTensor::Cubic(so3_cubic()),
        other => return Err(Error::UnknownTensor(other.to_string())),
    })
}
