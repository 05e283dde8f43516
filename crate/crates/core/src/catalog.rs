//! The six case studies `G ⊂ SO(n)` and their torsion-type reports.

use std::sync::Arc;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::models::{theta_maps, StabilizerModel};
use crate::weights::{
    char_equal, decompose, irrep_weights, tensor_ms, wedge_power_ms, Decomposition, RealSummand,
    RootSystem, Weight, WeightMultiset,
};

pub const CASE_NAMES: [&str; 6] = [
    "SO3-in-SO5",
    "U3-in-SO6",
    "G2-in-SO7",
    "Spin7-in-SO8",
    "Spin9-in-SO16",
    "F4-in-SO26",
];

#[derive(Debug, Clone)]
pub struct CaseStudy {
    pub name: String,
    pub group: String,
    pub rs: Arc<RootSystem>,
    pub n: usize,
    /// Character of ℝⁿ (complexified).
    pub defining: WeightMultiset,
    /// Character of 𝔤 (complexified).
    pub adjoint: WeightMultiset,
    /// Matrix model realizing the embedding, where one exists.
    pub model: Option<&'static str>,
}

fn irreps(rs: &Arc<RootSystem>, hws: &[&[i64]]) -> Result<WeightMultiset> {
    let mut out = WeightMultiset::empty(rs.clone());
    for hw in hws {
        out = out.add(&irrep_weights(rs, &Weight::new(hw.to_vec()))?)?;
    }
    Ok(out)
}

pub fn build_case(name: &str) -> Result<CaseStudy> {
    let (group, rs, defining, adjoint, model): (&str, RootSystem, &[&[i64]], &[&[i64]], _) = match name {
        "SO3-in-SO5" => ("SO(3)", RootSystem::a(1)?, &[&[4]], &[&[2]], Some("so3-cubic")),
        // ℝ⁶ ⊗ ℂ = ℂ³ ⊕ (ℂ³)*, 𝔲(3) ⊗ ℂ = 𝔰𝔩(3) ⊕ ℂ
        "U3-in-SO6" => (
            "U(3)",
            RootSystem::a(2)?.with_charge(),
            &[&[1, 0, 1], &[0, 1, -1]],
            &[&[1, 1, 0], &[0, 0, 0]],
            Some("kaehler-2form"),
        ),
        "G2-in-SO7" => ("G2", RootSystem::g2()?, &[&[1, 0]], &[&[0, 1]], Some("g2-3form")),
        "Spin7-in-SO8" => ("Spin(7)", RootSystem::b(3)?, &[&[0, 0, 1]], &[&[0, 1, 0]], Some("cayley-4form")),
        "Spin9-in-SO16" => ("Spin(9)", RootSystem::b(4)?, &[&[0, 0, 0, 1]], &[&[0, 1, 0, 0]], None),
        "F4-in-SO26" => ("F4", RootSystem::f4()?, &[&[0, 0, 0, 1]], &[&[1, 0, 0, 0]], None),
        other => return Err(Error::UnknownCase(other.to_string())),
    };
    let rs = Arc::new(rs);
    let defining = irreps(&rs, defining)?;
    let adjoint = irreps(&rs, adjoint)?;
    let n = defining.count() as usize;
    Ok(CaseStudy {
        name: name.to_string(),
        group: group.to_string(),
        rs,
        n,
        defining,
        adjoint,
        model,
    })
}

impl CaseStudy {
    pub fn dim_g(&self) -> usize {
        self.adjoint.count() as usize
    }

    pub fn m_character(&self) -> Result<WeightMultiset> {
        wedge_power_ms(&self.defining, 2)?
            .sub(&self.adjoint)
            .map_err(|e| Error::Construction(format!("adjoint is not inside the 2-forms: {e}")))
    }

    pub fn gamma_character(&self) -> Result<WeightMultiset> {
        tensor_ms(&self.defining, &self.m_character()?)
    }

    pub fn lambda3_character(&self) -> Result<WeightMultiset> {
        wedge_power_ms(&self.defining, 3)
    }
}

pub fn complement_m(case: &CaseStudy) -> Result<Decomposition> {
    decompose(&case.m_character()?)
}

pub fn gamma_types(case: &CaseStudy) -> Result<Decomposition> {
    decompose(&case.gamma_character()?)
}

pub fn lambda3_types(case: &CaseStudy) -> Result<Decomposition> {
    decompose(&case.lambda3_character()?)
}

/// Summand of a report: a real irreducible type with its multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeEntry {
    pub dim: u64,
    pub highest_weight: Vec<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjugate: Option<Vec<i64>>,
    pub multiplicity: u64,
}

impl TypeEntry {
    fn from_real(r: &RealSummand) -> Self {
        TypeEntry {
            dim: r.real_dim,
            highest_weight: r.highest_weight.coords().to_vec(),
            conjugate: r.conjugate.as_ref().map(|c| c.coords().to_vec()),
            multiplicity: r.multiplicity,
        }
    }

    fn same_type(&self, other: &TypeEntry) -> bool {
        self.highest_weight == other.highest_weight
    }
}

/// Real summands of a decomposition, in report order.
pub fn real_types(case: &CaseStudy, d: &Decomposition) -> Result<Vec<TypeEntry>> {
    Ok(d.real_forms(&case.rs)?.iter().map(TypeEntry::from_real).collect())
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixCheck {
    pub model: String,
    pub theta1_rank: usize,
    pub kernel_dim: usize,
    pub admissible_dim: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct TorsionReport {
    pub case: String,
    pub group: String,
    pub n: usize,
    pub dim_g: usize,
    pub m: Vec<TypeEntry>,
    pub types: Vec<TypeEntry>,
    pub lambda3: Vec<TypeEntry>,
    pub admissible: Vec<TypeEntry>,
    pub excluded: Vec<TypeEntry>,
    /// Λ³ℝⁿ and ℝⁿ⊗𝔪 have equal formal characters.
    pub characters_equal: bool,
    pub unique_connection: bool,
    pub conformal_closed: bool,
    pub vector_type_present: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub matrix_check: Option<MatrixCheck>,
}

/// Admissibility report; with `use_model` the Θ₁ rank of the matrix model is
/// computed as well and enters `unique_connection`.
pub fn torsion_report_with(case: &CaseStudy, use_model: bool) -> Result<TorsionReport> {
    let m_dec = complement_m(case)?;
    let gamma_char = case.gamma_character()?;
    let l3_char = case.lambda3_character()?;
    let types = real_types(case, &decompose(&gamma_char)?)?;
    let lambda3 = real_types(case, &decompose(&l3_char)?)?;
    let m = real_types(case, &m_dec)?;

    let mut admissible = Vec::new();
    let mut excluded = Vec::new();
    let mut injective = true;
    for t in &types {
        let in_l3 = lambda3.iter().find(|l| l.same_type(t)).map_or(0, |l| l.multiplicity);
        let image = in_l3.min(t.multiplicity);
        if image > 0 {
            admissible.push(TypeEntry {
                multiplicity: image,
                ..t.clone()
            });
        } else {
            excluded.push(t.clone());
        }
    }
    for l in &lambda3 {
        let in_gamma = types.iter().find(|t| t.same_type(l)).map_or(0, |t| t.multiplicity);
        injective &= l.multiplicity <= in_gamma;
    }

    let matrix_check = match (use_model, case.model) {
        (true, Some(name)) => {
            let model = StabilizerModel::named(name)?;
            let maps = theta_maps(&model)?;
            let domain = case.n * (case.n - 1) * (case.n - 2) / 6;
            Some(MatrixCheck {
                model: name.to_string(),
                theta1_rank: maps.rank1,
                kernel_dim: domain - maps.rank1,
                admissible_dim: admissible.iter().map(|a| a.dim * a.multiplicity).sum(),
            })
        }
        _ => None,
    };
    if let Some(mc) = &matrix_check {
        if mc.theta1_rank as u64 != mc.admissible_dim {
            return Err(Error::Construction(format!(
                "Θ₁ rank {} disagrees with admissible dimension {}",
                mc.theta1_rank, mc.admissible_dim
            )));
        }
    }
    let unique_connection = injective && matrix_check.as_ref().is_none_or(|mc| mc.kernel_dim == 0);

    let defining_hw: Vec<Vec<i64>> = real_types(case, &decompose(&case.defining)?)?
        .into_iter()
        .map(|t| t.highest_weight)
        .collect();
    let has_defining = |list: &[TypeEntry]| {
        defining_hw
            .iter()
            .all(|hw| list.iter().any(|t| &t.highest_weight == hw))
    };

    Ok(TorsionReport {
        case: case.name.clone(),
        group: case.group.clone(),
        n: case.n,
        dim_g: case.dim_g(),
        m,
        conformal_closed: has_defining(&lambda3),
        vector_type_present: has_defining(&types),
        characters_equal: char_equal(&l3_char, &gamma_char),
        types,
        lambda3,
        admissible,
        excluded,
        unique_connection,
        matrix_check,
    })
}

pub fn torsion_report(case: &CaseStudy) -> Result<TorsionReport> {
    torsion_report_with(case, true)
}
