use num_traits::Zero;
use serde::Serialize;

use super::stabilizer::{OrthoBasis, StabilizerModel};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::tensor::{contract2, interior, monomials, LinearMap, Multivector, SkewEndo};

/// A 1-form with values in 𝔰𝔬(n): `values[a]` is the value on `e_{a+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaElement {
    pub values: Vec<SkewEndo>,
}

impl GammaElement {
    pub fn zero(n: usize) -> Self {
        GammaElement {
            values: vec![SkewEndo::zero(n); n],
        }
    }

    pub fn n(&self) -> usize {
        self.values.len()
    }

    /// Reads `dir i j p/q` lines (1-based), setting `Γ(e_dir)_{ij} = p/q`.
    pub fn parse_record(n: usize, text: &str) -> Result<Self> {
        let mut g = Self::zero(n);
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let parts: Vec<&str> = line.split_whitespace().collect();
            let err = |msg: String| Error::Parse { line: line_no, msg };
            if parts.len() != 4 {
                return Err(err(format!("expected 'dir i j p/q', got '{line}'")));
            }
            let mut idx = [0usize; 3];
            for (slot, p) in idx.iter_mut().zip(&parts[..3]) {
                *slot = p
                    .parse()
                    .map_err(|_| err(format!("bad index '{p}'")))?;
                if *slot == 0 || *slot > n {
                    return Err(err(format!("index {slot} outside 1..={n}")));
                }
            }
            let [dir, i, j] = idx;
            if i == j {
                return Err(err("diagonal entry of a skew matrix".into()));
            }
            let v = scalar::parse(parts[3]).ok_or_else(|| err(format!("bad rational '{}'", parts[3])))?;
            let cur = g.values[dir - 1].get(i, j).clone();
            g.values[dir - 1].set(i, j, cur + v);
        }
        Ok(g)
    }

    /// The record format read by `parse_record`, entries with `i < j`.
    pub fn to_record(&self) -> String {
        let mut s = String::new();
        let n = self.n();
        for (a, v) in self.values.iter().enumerate() {
            for p in monomials(n, 2) {
                let c = v.get(p[0], p[1]);
                if !c.is_zero() {
                    s.push_str(&format!("{} {} {} {}\n", a + 1, p[0], p[1], scalar::to_record(c)));
                }
            }
        }
        s
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(GammaElement {
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(a, b)| a.add(b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        GammaElement {
            values: self.values.iter().map(|v| v.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SkewEndo::is_zero)
    }

    /// Coordinates in `e_a ⊗ v_i`, index `a·|basis| + i`.
    pub fn coords(&self, basis: &OrthoBasis) -> Result<Vec<Scalar>> {
        let mut out = Vec::with_capacity(self.n() * basis.len());
        for v in &self.values {
            out.extend(basis.coefficients(v)?);
        }
        Ok(out)
    }

    pub fn from_coords(n: usize, basis: &OrthoBasis, coords: &[Scalar]) -> Result<Self> {
        let k = basis.len();
        if coords.len() != n * k {
            return Err(Error::DimensionMismatch(coords.len(), n * k));
        }
        Ok(GammaElement {
            values: (0..n)
                .map(|a| basis.combine(n, &coords[a * k..(a + 1) * k]))
                .collect::<Result<_>>()?,
        })
    }
}

/// `Σ_i (v_i ⌟ T) ⊗ v_i / ‖v_i‖²` for an orthogonal basis of a subspace.
pub fn theta_apply(basis: &OrthoBasis, t: &Multivector) -> Result<GammaElement> {
    let n = t.dim();
    let mut g = GammaElement::zero(n);
    for (v, n2) in basis.vectors.iter().zip(&basis.norms2) {
        let c = contract2(&v.to_bivector(), t)?;
        for (idx, x) in c.terms() {
            let a = idx[0] - 1;
            g.values[a] = g.values[a].add(&v.scale(&(x / n2)))?;
        }
    }
    Ok(g)
}

/// The model-independent contraction `e_a ↦ e_a ⌟ T` read as a 2-form.
pub fn full_contraction(t: &Multivector) -> Result<GammaElement> {
    let n = t.dim();
    let values = (1..=n)
        .map(|a| SkewEndo::from_bivector(&interior(&Multivector::basis(n, &[a])?, t)?))
        .collect::<Result<_>>()?;
    Ok(GammaElement { values })
}

fn theta_matrix(n: usize, basis: &OrthoBasis) -> Result<LinearMap> {
    let cols: Vec<Vec<Scalar>> = monomials(n, 3)
        .iter()
        .map(|mono| theta_apply(basis, &Multivector::basis(n, mono)?)?.coords(basis))
        .collect::<Result<_>>()?;
    LinearMap::from_columns(n * basis.len(), &cols)
}

#[derive(Debug, Clone)]
pub struct ThetaMaps {
    pub theta1: LinearMap,
    pub theta2: LinearMap,
    pub rank1: usize,
}

/// Θ₁ : Λ³ℝⁿ → ℝⁿ⊗𝔪 and Θ₂ : Λ³ℝⁿ → ℝⁿ⊗𝔤 in the monomial and `e_a⊗v_i` bases.
pub fn theta_maps(model: &StabilizerModel) -> Result<ThetaMaps> {
    let theta1 = theta_matrix(model.n, &model.m)?;
    let theta2 = theta_matrix(model.n, &model.g)?;
    let rank1 = theta1.rank();
    Ok(ThetaMaps {
        theta1,
        theta2,
        rank1,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TorsionSolution {
    NoSolution,
    Unique(Multivector),
    Family {
        particular: Multivector,
        kernel: Vec<Multivector>,
    },
}

impl TorsionSolution {
    pub fn particular(&self) -> Option<&Multivector> {
        match self {
            TorsionSolution::NoSolution => None,
            TorsionSolution::Unique(t) => Some(t),
            TorsionSolution::Family { particular, .. } => Some(particular),
        }
    }
}

/// Checks that every value of Γ lies in 𝔪.
pub fn check_gamma(model: &StabilizerModel, gamma: &GammaElement) -> Result<()> {
    if gamma.n() != model.n {
        return Err(Error::DimensionMismatch(gamma.n(), model.n));
    }
    for (a, v) in gamma.values.iter().enumerate() {
        if !model.in_m(v)? {
            return Err(Error::NotInComplement(format!("value on e_{}", a + 1)));
        }
    }
    Ok(())
}

/// Solves `Θ₁(T) = −2Γ` exactly.
pub fn solve_torsion(model: &StabilizerModel, gamma: &GammaElement) -> Result<TorsionSolution> {
    check_gamma(model, gamma)?;
    let maps = theta_maps(model)?;
    solve_with(model, &maps.theta1, gamma)
}

/// As `solve_torsion`, reusing an already assembled Θ₁.
pub fn solve_with(
    model: &StabilizerModel,
    theta1: &LinearMap,
    gamma: &GammaElement,
) -> Result<TorsionSolution> {
    let n = model.n;
    let b: Vec<Scalar> = gamma
        .coords(&model.m)?
        .into_iter()
        .map(|x| x * scalar::int(-2))
        .collect();
    let Some(x) = theta1.solve(&b)? else {
        return Ok(TorsionSolution::NoSolution);
    };
    let particular = Multivector::from_coords(n, 3, &x)?;
    let kernel: Vec<Multivector> = theta1
        .kernel()
        .basis
        .iter()
        .map(|k| Multivector::from_coords(n, 3, k))
        .collect::<Result<_>>()?;
    Ok(if kernel.is_empty() {
        TorsionSolution::Unique(particular)
    } else {
        TorsionSolution::Family { particular, kernel }
    })
}

/// Induced action of `X ∈ 𝔤` on ℝⁿ⊗𝔰𝔬(n): `(X·Γ)_b = Σ_a X_ba Γ_a + [X, Γ_b]`.
pub fn gamma_action(x: &SkewEndo, gamma: &GammaElement) -> Result<GammaElement> {
    let n = gamma.n();
    let mut values = Vec::with_capacity(n);
    for b in 1..=n {
        let mut v = x.bracket(&gamma.values[b - 1])?;
        for a in 1..=n {
            let c = x.get(b, a);
            if !c.is_zero() {
                v = v.add(&gamma.values[a - 1].scale(c))?;
            }
        }
        values.push(v);
    }
    Ok(GammaElement { values })
}

fn action_on_coords(model: &StabilizerModel, x: &SkewEndo) -> Result<LinearMap> {
    let n = model.n;
    let k = model.m.len();
    let mut cols = Vec::with_capacity(n * k);
    for a in 0..n {
        for i in 0..k {
            let mut e = vec![Scalar::zero(); n * k];
            e[a * k + i] = scalar::one();
            let g = GammaElement::from_coords(n, &model.m, &e)?;
            cols.push(gamma_action(x, &g)?.coords(&model.m)?);
        }
    }
    LinearMap::from_columns(n * k, &cols)
}

/// Casimir operator `-Σ ρ(μ)² / ‖μ‖²` of a subalgebra on ℝⁿ⊗𝔪, and its value on ℝⁿ.
///
/// The second component is `Some(c)` when the Casimir acts on ℝⁿ as the scalar `c`.
pub fn casimir(model: &StabilizerModel, algebra: &OrthoBasis) -> Result<(LinearMap, Option<Scalar>)> {
    let n = model.n;
    let dim = n * model.m.len();
    let mut total = LinearMap::zeros(dim, dim);
    let mut on_vectors = LinearMap::zeros(n, n);
    for (mu, n2) in algebra.vectors.iter().zip(&algebra.norms2) {
        let r = action_on_coords(model, mu)?;
        let r2 = r.compose(&r)?;
        let mu_m = LinearMap::new(
            n,
            n,
            (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .map(|(i, j)| mu.get(i, j).clone())
                .collect(),
        )?;
        let mu2 = mu_m.compose(&mu_m)?;
        for i in 0..dim {
            for j in 0..dim {
                let v = r2.get(i, j);
                if !v.is_zero() {
                    let cur = total.get(i, j).clone();
                    total.set(i, j, cur - v / n2);
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let cur = on_vectors.get(i, j).clone();
                on_vectors.set(i, j, cur - mu2.get(i, j) / n2);
            }
        }
    }
    let c = on_vectors.get(0, 0).clone();
    let scalar_on_vectors = (0..n).all(|i| {
        (0..n).all(|j| {
            let v = on_vectors.get(i, j);
            if i == j {
                *v == c
            } else {
                v.is_zero()
            }
        })
    });
    Ok((total, scalar_on_vectors.then_some(c)))
}

/// Eigenspace of `op` for the eigenvalue `lambda`.
pub fn eigenspace(op: &LinearMap, lambda: &Scalar) -> Vec<Vec<Scalar>> {
    let mut shifted = op.clone();
    for i in 0..op.rows() {
        let v = shifted.get(i, i) - lambda;
        shifted.set(i, i, v);
    }
    shifted.kernel().basis
}

/// Vectors of the `E⁸` summand of ℝ⁶⊗𝔪 for the `U(3)` model.
///
/// On ℂ³ the 𝔰𝔲(3) Casimir is `8/3` in the normalization where it is `6`
/// on the adjoint, so its eigenvalue on the adjoint-type summand is `9/4` of
/// its value on ℝ⁶; no other summand of ℝ⁶⊗𝔪 shares that value.
pub fn e8_component(model: &StabilizerModel) -> Result<Vec<GammaElement>> {
    let derived = model.derived()?;
    let (c, on_vectors) = casimir(model, &derived)?;
    let c1 = on_vectors.ok_or_else(|| Error::Construction("Casimir not scalar on R^n".into()))?;
    let target = c1 * scalar::frac(9, 4);
    eigenspace(&c, &target)
        .iter()
        .map(|v| GammaElement::from_coords(model.n, &model.m, v))
        .collect()
}

/// Rank of `Γ ↦ (Γ(e_a)·𝒯)_a` on ℝⁿ⊗𝔪.
pub fn tensor_map_rank(model: &StabilizerModel) -> Result<usize> {
    let n = model.n;
    let k = model.m.len();
    let blocks: Vec<Vec<Scalar>> = model
        .m
        .vectors
        .iter()
        .map(|v| model.tensor.act_coords(v))
        .collect::<Result<_>>()?;
    let h = blocks[0].len();
    let mut cols = Vec::with_capacity(n * k);
    for a in 0..n {
        for b in &blocks {
            let mut col = vec![Scalar::zero(); n * h];
            col[a * h..(a + 1) * h].clone_from_slice(b);
            cols.push(col);
        }
    }
    Ok(LinearMap::from_columns(n * h, &cols)?.rank())
}

#[derive(Debug, Clone, Serialize)]
pub struct ThetaSummary {
    pub model: String,
    pub n: usize,
    pub dim_g: usize,
    pub dim_m: usize,
    pub domain_dim: usize,
    pub codomain_dim: usize,
    pub rank1: usize,
    pub injective: bool,
    pub surjective: bool,
    pub tensor_map_rank: usize,
}

pub fn theta_summary(model: &StabilizerModel) -> Result<ThetaSummary> {
    let maps = theta_maps(model)?;
    let n = model.n;
    let domain_dim = n * (n - 1) * (n - 2) / 6;
    let codomain_dim = n * model.dim_m();
    Ok(ThetaSummary {
        model: model.name.clone(),
        n,
        dim_g: model.dim_g(),
        dim_m: model.dim_m(),
        domain_dim,
        codomain_dim,
        rank1: maps.rank1,
        injective: maps.rank1 == domain_dim,
        surjective: maps.rank1 == codomain_dim,
        tensor_map_rank: tensor_map_rank(model)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_record_round_trip() {
        let text = "1 2 3 1/2\n# comment\n\n4 1 5 -3\n";
        let g = GammaElement::parse_record(5, text).unwrap();
        assert_eq!(g.values[0].get(3, 2), &scalar::frac(-1, 2));
        let back = GammaElement::parse_record(5, &g.to_record()).unwrap();
        assert_eq!(back, g);
    }

    #[test]
    fn gamma_parse_errors_carry_line() {
        let err = GammaElement::parse_record(5, "1 2 3 1\n1 2 9 1\n").unwrap_err();
        assert_eq!(err, Error::Parse { line: 2, msg: "index 9 outside 1..=5".into() });
        assert!(matches!(GammaElement::parse_record(5, "1 2 2 1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn zero_gamma_spin7() {
        let m = StabilizerModel::named("cayley-4form").unwrap();
        let s = solve_torsion(&m, &GammaElement::zero(8)).unwrap();
        assert_eq!(s, TorsionSolution::Unique(Multivector::zero(8, 3).unwrap()));
    }

    #[test]
    fn gamma_outside_m_rejected() {
        let m = StabilizerModel::named("g2-3form").unwrap();
        let mut g = GammaElement::zero(7);
        g.values[0] = m.g.vectors[0].clone();
        assert!(matches!(solve_torsion(&m, &g), Err(Error::NotInComplement(_))));
    }

    #[test]
    fn theta_ranks() {
        for (name, r) in [("so3-cubic", 10), ("kaehler-2form", 20), ("g2-3form", 35)] {
            let m = StabilizerModel::named(name).unwrap();
            assert_eq!(theta_maps(&m).unwrap().rank1, r, "{name}");
        }
    }
}
