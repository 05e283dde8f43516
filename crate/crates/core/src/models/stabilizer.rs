use num_traits::Zero;

use super::tensor::{defining_tensor, DefiningTensor};
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::tensor::{linalg::dot, LinearMap, SkewEndo};

/// Mutually orthogonal elements of 𝔰𝔬(n) with their squared norms.
///
/// Vectors are left unnormalized so that all arithmetic stays rational; the
/// orthonormal element is `v / ‖v‖`, and every projection divides by `‖v‖²`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrthoBasis {
    pub vectors: Vec<SkewEndo>,
    pub norms2: Vec<Scalar>,
}

impl OrthoBasis {
    /// Gram–Schmidt without normalization.
    pub fn orthogonalize(dim: usize, spanning: &[Vec<Scalar>]) -> Result<Self> {
        let mut vecs: Vec<Vec<Scalar>> = Vec::new();
        let mut norms2: Vec<Scalar> = Vec::new();
        for v in spanning {
            let mut w = v.clone();
            for (u, nu) in vecs.iter().zip(&norms2) {
                let c = dot(&w, u) / nu;
                if !c.is_zero() {
                    for (wi, ui) in w.iter_mut().zip(u) {
                        *wi -= &c * ui;
                    }
                }
            }
            let n2 = dot(&w, &w);
            if !n2.is_zero() {
                vecs.push(w);
                norms2.push(n2);
            }
        }
        let vectors = vecs
            .iter()
            .map(|c| SkewEndo::from_coords(dim, c))
            .collect::<Result<Vec<_>>>()?;
        Ok(OrthoBasis { vectors, norms2 })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Coefficients `⟨Ω, v_i⟩ / ‖v_i‖²`, so that the projection is `Σ c_i v_i`.
    pub fn coefficients(&self, omega: &SkewEndo) -> Result<Vec<Scalar>> {
        self.vectors
            .iter()
            .zip(&self.norms2)
            .map(|(v, n)| Ok(omega.inner(v)? / n))
            .collect()
    }

    pub fn combine(&self, dim: usize, coeffs: &[Scalar]) -> Result<SkewEndo> {
        if coeffs.len() != self.len() {
            return Err(Error::DimensionMismatch(coeffs.len(), self.len()));
        }
        let mut out = SkewEndo::zero(dim);
        for (v, c) in self.vectors.iter().zip(coeffs) {
            if !c.is_zero() {
                out = out.add(&v.scale(c))?;
            }
        }
        Ok(out)
    }

    pub fn project(&self, dim: usize, omega: &SkewEndo) -> Result<SkewEndo> {
        self.combine(dim, &self.coefficients(omega)?)
    }
}

/// An explicit splitting `𝔰𝔬(n) = 𝔤 ⊕ 𝔪` with 𝔤 the stabilizer of a tensor.
#[derive(Debug, Clone)]
pub struct StabilizerModel {
    pub name: String,
    pub n: usize,
    pub tensor: DefiningTensor,
    pub g: OrthoBasis,
    pub m: OrthoBasis,
    pub expected_dim_g: usize,
}

/// Matrix of `A ↦ A·𝒯` on the coordinates of 𝔰𝔬(n).
fn action_matrix(tensor: &DefiningTensor) -> Result<LinearMap> {
    let n = tensor.dim();
    let dim_so = n * (n - 1) / 2;
    let mut cols = Vec::with_capacity(dim_so);
    for i in 1..=n {
        for j in i + 1..=n {
            cols.push(tensor.act_coords(&SkewEndo::elementary(n, i, j)?)?);
        }
    }
    let rows = cols[0].len();
    LinearMap::from_columns(rows, &cols)
}

pub fn stabilizer_algebra(name: &str, tensor: DefiningTensor) -> Result<StabilizerModel> {
    let n = tensor.dim();
    let expected = tensor.expected_stabilizer_dim();
    let kernel = action_matrix(&tensor)?.kernel();
    if kernel.basis.len() != expected {
        return Err(Error::Construction(format!(
            "stabilizer of {name} has dimension {}, expected {expected}",
            kernel.basis.len()
        )));
    }
    let g = OrthoBasis::orthogonalize(n, &kernel.basis)?;
    let g_rows: Vec<Vec<Scalar>> = g.vectors.iter().map(|v| v.to_coords()).collect();
    let dim_so = n * (n - 1) / 2;
    let m_span = LinearMap::from_rows(dim_so, &g_rows)?.kernel().basis;
    let m = OrthoBasis::orthogonalize(n, &m_span)?;
    if g.len() + m.len() != dim_so {
        return Err(Error::Construction("g and m do not span so(n)".into()));
    }
    Ok(StabilizerModel {
        name: name.to_string(),
        n,
        tensor,
        g,
        m,
        expected_dim_g: expected,
    })
}

impl StabilizerModel {
    pub fn named(name: &str) -> Result<Self> {
        stabilizer_algebra(name, defining_tensor(name)?)
    }

    pub fn dim_g(&self) -> usize {
        self.g.len()
    }

    pub fn dim_m(&self) -> usize {
        self.m.len()
    }

    /// Splits `Ω = pr_𝔤 Ω + pr_𝔪 Ω`.
    pub fn pr_split(&self, omega: &SkewEndo) -> Result<(SkewEndo, SkewEndo)> {
        let gp = self.g.project(self.n, omega)?;
        let mp = omega.sub(&gp)?;
        Ok((gp, mp))
    }

    pub fn in_g(&self, omega: &SkewEndo) -> Result<bool> {
        Ok(self.pr_split(omega)?.1.is_zero())
    }

    pub fn in_m(&self, omega: &SkewEndo) -> Result<bool> {
        Ok(self.pr_split(omega)?.0.is_zero())
    }

    /// Center of 𝔤, as coordinates in the `g` basis.
    pub fn center(&self) -> Result<OrthoBasis> {
        let k = self.g.len();
        let mut rows: Vec<Vec<Scalar>> = Vec::new();
        // [X, g_j] = 0 for all j, X = Σ x_i g_i
        for gj in &self.g.vectors {
            let cols: Vec<Vec<Scalar>> = self
                .g
                .vectors
                .iter()
                .map(|gi| gi.bracket(gj).map(|b| b.to_coords()))
                .collect::<Result<_>>()?;
            let block = LinearMap::from_columns(cols[0].len(), &cols)?;
            for r in 0..block.rows() {
                rows.push(block.row(r).to_vec());
            }
        }
        let ker = LinearMap::from_rows(k, &rows)?.kernel();
        let spanning: Vec<Vec<Scalar>> = ker
            .basis
            .iter()
            .map(|x| self.g.combine(self.n, x).map(|s| s.to_coords()))
            .collect::<Result<_>>()?;
        OrthoBasis::orthogonalize(self.n, &spanning)
    }

    /// Orthogonal complement of the center inside 𝔤 (the derived algebra).
    pub fn derived(&self) -> Result<OrthoBasis> {
        let z = self.center()?;
        let mut spanning: Vec<Vec<Scalar>> = z.vectors.iter().map(|v| v.to_coords()).collect();
        spanning.extend(self.g.vectors.iter().map(|v| v.to_coords()));
        let full = OrthoBasis::orthogonalize(self.n, &spanning)?;
        Ok(OrthoBasis {
            vectors: full.vectors[z.len()..].to_vec(),
            norms2: full.norms2[z.len()..].to_vec(),
        })
    }

    /// Whether the span of `basis` is closed under brackets.
    pub fn is_subalgebra(basis: &[SkewEndo]) -> Result<bool> {
        if basis.is_empty() {
            return Ok(true);
        }
        let n = basis[0].dim();
        let span = OrthoBasis::orthogonalize(n, &basis.iter().map(|b| b.to_coords()).collect::<Vec<_>>())?;
        for (i, a) in basis.iter().enumerate() {
            for b in &basis[i + 1..] {
                let c = a.bracket(b)?;
                if !c.sub(&span.project(n, &c)?)?.is_zero() {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Gram matrix of `⟨A, B⟩ = -½ tr(AB)`.
pub fn gram(basis: &[SkewEndo]) -> Result<Vec<Vec<Scalar>>> {
    basis
        .iter()
        .map(|a| basis.iter().map(|b| a.inner(b)).collect())
        .collect()
}
