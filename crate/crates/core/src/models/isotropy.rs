use num_traits::Zero;
use serde::Serialize;

use super::stabilizer::{OrthoBasis, StabilizerModel};
use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};
use crate::tensor::{so_act, wedge, LinearMap, Multivector, SkewEndo};

/// Elements of `span(basis)` annihilating `t`.
pub fn isotropy_within(basis: &[SkewEndo], t: &Multivector) -> Result<Vec<SkewEndo>> {
    if basis.is_empty() {
        return Ok(Vec::new());
    }
    let n = basis[0].dim();
    let cols: Vec<Vec<Scalar>> = basis
        .iter()
        .map(|b| so_act(b, t).map(|m| m.to_coords()))
        .collect::<Result<_>>()?;
    let ker = LinearMap::from_columns(cols[0].len(), &cols)?.kernel();
    ker.basis.iter().map(|x| combine(n, basis, x)).collect()
}

fn combine(n: usize, basis: &[SkewEndo], coeffs: &[Scalar]) -> Result<SkewEndo> {
    let mut out = SkewEndo::zero(n);
    for (b, c) in basis.iter().zip(coeffs) {
        if !c.is_zero() {
            out = out.add(&b.scale(c))?;
        }
    }
    Ok(out)
}

/// The isotropy algebra `𝔤_T = {Ω ∈ 𝔤 : Ω·T = 0}`.
pub fn isotropy_algebra(model: &StabilizerModel, t: &Multivector) -> Result<Vec<SkewEndo>> {
    if t.dim() != model.n || t.grade() != 3 {
        return Err(Error::DimensionMismatch(t.dim(), model.n));
    }
    isotropy_within(&model.g.vectors, t)
}

/// `S_ij = Σ_{m,n} T_imn T_jmn` for the fully antisymmetric coefficients of `t`.
pub fn torsion_square(t: &Multivector) -> Vec<Vec<Scalar>> {
    let n = t.dim();
    let mut s = vec![vec![Scalar::zero(); n]; n];
    for i in 1..=n {
        for j in i..=n {
            let mut acc = Scalar::zero();
            for a in 1..=n {
                for b in 1..=n {
                    let x = t.component(&[i, a, b]);
                    if x.is_zero() {
                        continue;
                    }
                    acc += x * t.component(&[j, a, b]);
                }
            }
            s[i - 1][j - 1] = acc.clone();
            s[j - 1][i - 1] = acc;
        }
    }
    s
}

/// Equations `ΩᵀD + DΩ = 0` on the coordinates `(ω_ij)_{i<j}` of 𝔰𝔬(n).
pub fn so_invariance_constraints(n: usize, diagonals: &[Vec<Scalar>]) -> Result<LinearMap> {
    let mut basis = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            basis.push(SkewEndo::elementary(n, i, j)?);
        }
    }
    constraint_rows(n, &basis, diagonals)
}

/// The same equations, written on the coordinates of the model's 𝔤 basis.
pub fn invariance_constraints(model: &StabilizerModel, diagonals: &[Vec<Scalar>]) -> Result<LinearMap> {
    constraint_rows(model.n, &model.g.vectors, diagonals)
}

fn constraint_rows(n: usize, basis: &[SkewEndo], diagonals: &[Vec<Scalar>]) -> Result<LinearMap> {
    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for d in diagonals {
        if d.len() != n {
            return Err(Error::DimensionMismatch(d.len(), n));
        }
        // (ΩᵀD + DΩ)_ij = (d_i − d_j) ω_ij on a skew Ω
        for i in 1..=n {
            for j in i + 1..=n {
                let f = &d[i - 1] - &d[j - 1];
                if f.is_zero() {
                    continue;
                }
                rows.push(basis.iter().map(|b| &f * b.get(i, j)).collect());
            }
        }
    }
    let mut m = LinearMap::from_rows(basis.len(), &rows)?;
    if rows.is_empty() {
        m = LinearMap::zeros(0, basis.len());
    }
    Ok(m)
}

/// Solutions of the invariance constraints inside 𝔤.
pub fn invariant_subspace(model: &StabilizerModel, diagonals: &[Vec<Scalar>]) -> Result<Vec<SkewEndo>> {
    let eqs = invariance_constraints(model, diagonals)?;
    eqs.kernel()
        .basis
        .iter()
        .map(|x| combine(model.n, &model.g.vectors, x))
        .collect()
}

/// Lie derivative of a constant form along the linear vector field of `Ω`.
///
/// The flow of that field moves frames by `exp(-tΩ)` in the convention of
/// [`so_act`], so the derivative is `-Ω·T`.
pub fn lie_derivative(omega: &SkewEndo, t: &Multivector) -> Result<Multivector> {
    Ok(so_act(omega, t)?.scale(&scalar::int(-1)))
}

pub fn is_abelian(basis: &[SkewEndo]) -> Result<bool> {
    for (i, a) in basis.iter().enumerate() {
        for b in &basis[i + 1..] {
            if !a.bracket(b)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn in_span(basis: &[SkewEndo], x: &SkewEndo) -> Result<bool> {
    let span = OrthoBasis::orthogonalize(
        x.dim(),
        &basis.iter().map(|b| b.to_coords()).collect::<Vec<_>>(),
    )?;
    Ok(span.project(x.dim(), x)? == *x)
}

fn diag(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| scalar::int(x)).collect()
}

fn omega(m: &SkewEndo, i: usize, j: usize) -> Scalar {
    m.get(i, j).clone()
}

/// Torsion of the left-invariant cocalibrated G₂-structure on `H⁶ × ℝ`.
pub fn heisenberg_torsion() -> Result<Multivector> {
    let e = |i: usize| Multivector::basis(7, &[i]);
    let a = Multivector::from_int_terms(7, 2, &[(&[1, 3], 1), (&[6, 7], -1)])?;
    let b = Multivector::from_int_terms(7, 2, &[(&[3, 7], 1), (&[1, 6], 1)])?;
    wedge(&e(5)?, &a)?.add(&wedge(&e(4)?, &b)?)
}

pub const HEISENBERG_RICCI: [i64; 7] = [-2, 0, -2, 0, 0, -2, -2];
pub const HEISENBERG_SQUARE: [i64; 7] = [4, 0, 4, 4, 4, 4, 4];

/// `2ω₁₃(e147 − e346) + 2ω₁₆(e356 − e157) + 2ω₁₇(e357 + e156 + e134 − e467)`.
pub fn heisenberg_lie_formula(w13: &Scalar, w16: &Scalar, w17: &Scalar) -> Result<Multivector> {
    let two = scalar::int(2);
    let part = |c: &Scalar, terms: &[(&[usize], i64)]| -> Result<Multivector> {
        Ok(Multivector::from_int_terms(7, 3, terms)?.scale(&(&two * c)))
    };
    part(w13, &[(&[1, 4, 7], 1), (&[3, 4, 6], -1)])?
        .add(&part(w16, &[(&[3, 5, 6], 1), (&[1, 5, 7], -1)])?)?
        .add(&part(w17, &[(&[3, 5, 7], 1), (&[1, 5, 6], 1), (&[1, 3, 4], 1), (&[4, 6, 7], -1)])?)
}

#[derive(Debug, Clone, Serialize)]
pub struct HeisenbergReport {
    pub torsion: String,
    pub torsion_square_diagonal: Vec<String>,
    pub torsion_square_matches: bool,
    pub so_constraint_count: usize,
    pub free_parameters: Vec<String>,
    pub constrained_dim: usize,
    pub relations_hold: bool,
    pub lie_formula_matches: bool,
    pub dim_gt: usize,
    pub basis: Vec<String>,
    pub isotropy_relation_holds: bool,
    pub automorphism_bound: usize,
}

pub fn heisenberg_example(g2: &StabilizerModel) -> Result<HeisenbergReport> {
    let t = heisenberg_torsion()?;
    let s = torsion_square(&t);
    let sq: Vec<Scalar> = (0..7).map(|i| s[i][i].clone()).collect();
    let off_diag_zero = (0..7).all(|i| (0..7).all(|j| i == j || s[i][j].is_zero()));
    let diagonals = vec![diag(&HEISENBERG_RICCI), diag(&HEISENBERG_SQUARE)];

    let so_eqs = so_invariance_constraints(7, &diagonals)?;
    let free: Vec<String> = crate::tensor::monomials(7, 2)
        .into_iter()
        .filter(|p| {
            diagonals
                .iter()
                .all(|d| d[p[0] - 1] == d[p[1] - 1])
        })
        .map(|p| format!("w{}{}", p[0], p[1]))
        .collect();

    let family = invariant_subspace(g2, &diagonals)?;
    let relations_hold = family.iter().all(|m| {
        omega(m, 1, 3) == -omega(m, 6, 7)
            && omega(m, 1, 6) == omega(m, 3, 7)
            && (omega(m, 1, 7) + omega(m, 3, 6) + omega(m, 4, 5)).is_zero()
    });
    let lie_formula_matches = family
        .iter()
        .map(|m| {
            let expected = heisenberg_lie_formula(&omega(m, 1, 3), &omega(m, 1, 6), &omega(m, 1, 7))?;
            Ok(lie_derivative(m, &t)? == expected)
        })
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);

    let gt = isotropy_within(&family, &t)?;
    let isotropy_relation_holds = gt.iter().all(|m| {
        (omega(m, 3, 6) + omega(m, 4, 5)).is_zero()
            && !omega(m, 3, 6).is_zero()
            && [(1, 3), (1, 6), (1, 7), (3, 7), (6, 7)]
                .iter()
                .all(|&(i, j)| omega(m, i, j).is_zero())
    });
    Ok(HeisenbergReport {
        torsion: t.to_string(),
        torsion_square_diagonal: sq.iter().map(scalar::to_record).collect(),
        torsion_square_matches: off_diag_zero && sq == diag(&HEISENBERG_SQUARE),
        so_constraint_count: so_eqs.rank(),
        free_parameters: free,
        constrained_dim: family.len(),
        relations_hold,
        lie_formula_matches,
        dim_gt: gt.len(),
        basis: gt.iter().map(SkewEndo::to_record).collect(),
        isotropy_relation_holds,
        automorphism_bound: 7 + gt.len(),
    })
}

/// Torsion of the left-invariant cocalibrated G₂-structure on `N⁶ × ℝ`.
pub fn solvable_torsion() -> Result<Multivector> {
    Multivector::from_int_terms(7, 3, &[(&[2, 5, 6], 2), (&[2, 3, 4], -2)])
}

/// The two reference generators of the isotropy algebra of the solvable example.
pub fn solvable_reference_basis() -> Result<[SkewEndo; 2]> {
    let mut a = SkewEndo::zero(7);
    a.set(1, 7, scalar::int(-2));
    a.set(3, 6, scalar::int(1));
    a.set(4, 5, scalar::int(1));
    let mut b = SkewEndo::zero(7);
    b.set(3, 4, scalar::int(1));
    b.set(5, 6, scalar::int(-1));
    Ok([a, b])
}

#[derive(Debug, Clone, Serialize)]
pub struct SolvableReport {
    pub torsion: String,
    pub dim_gt: usize,
    pub basis: Vec<String>,
    pub abelian: bool,
    pub contains_reference_basis: bool,
    pub maximal_torus: bool,
    pub automorphism_bound: usize,
}

pub fn solvable_example(g2: &StabilizerModel) -> Result<SolvableReport> {
    let t = solvable_torsion()?;
    let gt = isotropy_algebra(g2, &t)?;
    let expected = solvable_reference_basis()?;
    let mut contains = true;
    for p in &expected {
        contains &= in_span(&gt, p)?;
    }
    let abelian = is_abelian(&gt)?;
    Ok(SolvableReport {
        torsion: t.to_string(),
        dim_gt: gt.len(),
        basis: gt.iter().map(SkewEndo::to_record).collect(),
        abelian,
        contains_reference_basis: contains,
        // rank of G₂ is 2
        maximal_torus: abelian && gt.len() == 2,
        automorphism_bound: 7 + gt.len(),
    })
}
