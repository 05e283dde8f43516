use std::fmt;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use skewtor::catalog::{self, build_case, torsion_report_with, CaseStudy, TypeEntry, CASE_NAMES};
use skewtor::classify::{
    self, enumerate_cases, involution_p, torus_bound, scan_family, spin7_centralizers, CardFamily,
    GroupCard, GroupFamily, EXCEPTIONAL,
};
use skewtor::models::{
    defining_tensor, heisenberg_example, is_abelian, isotropy_algebra, solvable_example, theta_apply,
    theta_summary, GammaElement, StabilizerModel, TorsionSolution, TENSOR_NAMES,
};
use skewtor::scalar;
use skewtor::tensor::{Multivector, SkewEndo};
use skewtor::weights::{self, irrep_weights, weyl_dim, Decomposition};
use skewtor::Error;

use crate::Example;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    Lib(Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) | CliError::Io(s) => f.write_str(s),
            CliError::Lib(e) if e.is_internal() => write!(f, "internal consistency failure: {e}"),
            CliError::Lib(e) => write!(f, "{e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Lib(e) if e.is_internal() => 3,
            _ => 2,
        }
    }
}

type Out = Result<Value, CliError>;

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable payload")
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))
}

fn model(name: &str) -> Result<StabilizerModel, CliError> {
    Ok(StabilizerModel::named(name)?)
}

/// `a + b + c` over real dimensions, with multiplicities written as `k*d`.
fn summary(types: &[TypeEntry]) -> String {
    types
        .iter()
        .map(|t| {
            if t.multiplicity == 1 {
                t.dim.to_string()
            } else {
                format!("{}*{}", t.multiplicity, t.dim)
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn dims(types: &[TypeEntry]) -> Vec<u64> {
    types.iter().map(|t| t.dim).collect()
}

pub fn cases() -> Out {
    let mut cases = Vec::new();
    for name in CASE_NAMES {
        let c = build_case(name)?;
        cases.push(json!({
            "name": name,
            "group": c.group,
            "root_system": c.rs.name(),
            "n": c.n,
            "dim_g": c.dim_g(),
            "model": c.model,
        }));
    }
    let mut models = Vec::new();
    for name in TENSOR_NAMES {
        let t = defining_tensor(name)?;
        models.push(json!({
            "name": name,
            "n": t.dim(),
            "kind": format!("{:?}", t.kind()),
            "dim_g": t.expected_stabilizer_dim(),
        }));
    }
    Ok(json!({ "cases": cases, "models": models }))
}

pub fn decompose(case: &str) -> Out {
    let c = build_case(case)?;
    let r = torsion_report_with(&c, false)?;
    Ok(json!({
        "case": r.case,
        "group": r.group,
        "n": r.n,
        "dim_g": r.dim_g,
        "summary": {
            "m": summary(&r.m),
            "types": summary(&r.types),
            "lambda3": summary(&r.lambda3),
        },
        "m": to_value(&r.m),
        "components": to_value(&r.types),
        "lambda3": to_value(&r.lambda3),
        "flags": {
            "admissible": dims(&r.admissible),
            "conformal_closed": r.conformal_closed,
            "vector_type_present": r.vector_type_present,
        },
    }))
}

pub fn torsion(case: &str) -> Out {
    let c = build_case(case)?;
    let r = catalog::torsion_report(&c)?;
    let mut v = to_value(&r);
    v["summary"] = json!({
        "types": summary(&r.types),
        "lambda3": summary(&r.lambda3),
        "admissible": summary(&r.admissible),
    });
    Ok(v)
}

pub fn theta_rank(name: &str) -> Out {
    Ok(to_value(&theta_summary(&model(name)?)?))
}

pub fn solve_torsion(name: &str, gamma_path: &Path) -> Out {
    let m = model(name)?;
    let gamma = GammaElement::parse_record(m.n, &read(gamma_path)?)?;
    let sol = skewtor::models::solve_torsion(&m, &gamma)?;
    let (status, kernel_dim) = match &sol {
        TorsionSolution::NoSolution => ("no-solution", 0),
        TorsionSolution::Unique(_) => ("unique", 0),
        TorsionSolution::Family { kernel, .. } => ("family", kernel.len()),
    };
    let mut out = json!({
        "model": name,
        "n": m.n,
        "status": status,
        "kernel_dim": kernel_dim,
    });
    if let Some(t) = sol.particular() {
        let back = theta_apply(&m.m, t)? == gamma.scale(&scalar::int(-2));
        out["torsion"] = Value::String(t.to_string());
        out["back_substitution"] = Value::Bool(back);
        if !back {
            return Err(Error::Construction("solution does not reproduce gamma".into()).into());
        }
    }
    Ok(out)
}

pub fn isotropy_example(e: Example) -> Out {
    let g2 = model("g2-3form")?;
    Ok(match e {
        Example::Heisenberg => {
            let mut v = to_value(&heisenberg_example(&g2)?);
            v["example"] = json!("heisenberg");
            v
        }
        Example::Solvable => {
            let mut v = to_value(&solvable_example(&g2)?);
            v["example"] = json!("solvable");
            v
        }
    })
}

pub fn isotropy_model(name: &str, torsion_path: &Path) -> Out {
    let m = model(name)?;
    let t = Multivector::parse_record(m.n, 3, &read(torsion_path)?)?;
    let gt = isotropy_algebra(&m, &t)?;
    Ok(json!({
        "model": name,
        "n": m.n,
        "torsion": t.to_string(),
        "dim_gt": gt.len(),
        "basis": gt.iter().map(SkewEndo::to_record).collect::<Vec<_>>(),
        "abelian": is_abelian(&gt)?,
        "subalgebra": StabilizerModel::is_subalgebra(&gt)?,
        "automorphism_bound": m.n + gt.len(),
    }))
}

pub fn classify(max_m: u64) -> Out {
    let e = enumerate_cases();
    let survivors: Vec<Value> = e
        .survivors()
        .iter()
        .map(|c| json!({ "t": c.t, "k": c.k, "n": c.n, "dim_g": c.g }))
        .collect();
    let bounds: Vec<Value> = EXCEPTIONAL
        .iter()
        .map(|&f| {
            let card = GroupCard::simple(f, 0).expect("exceptional card");
            let b = torus_bound(&card);
            json!({
                "group": card.label,
                "rank": card.rank,
                "dim": card.dim,
                "four_rank_squared": 4 * card.rank * card.rank,
                "bound4": b.bound4,
            })
        })
        .collect();
    let spin7: Vec<Value> = spin7_centralizers()
        .into_iter()
        .map(|z| to_value(&involution_p(21, z, 8)))
        .collect();
    let mut families = Vec::new();
    for f in [
        GroupFamily::SU,
        GroupFamily::SO,
        GroupFamily::Sp,
        GroupFamily::G2,
        GroupFamily::F4,
        GroupFamily::E6,
        GroupFamily::E7,
        GroupFamily::E8,
    ] {
        let scan = scan_family(f, max_m)?;
        let all_hold = scan.iter().all(|v| v.holds);
        // only groups with an integral √(3g+1) carry a nontrivial trace
        let nontrivial: Vec<Value> = scan.iter().filter(|v| v.n.is_some()).map(to_value).collect();
        families.push(json!({
            "family": format!("{f:?}"),
            "scanned": scan.len(),
            "property_holds": all_hold,
            "integral_cases": nontrivial,
        }));
    }
    let torus = GroupCard::torus(1);
    let e6 = GroupCard::simple(CardFamily::E6, 0)?;
    Ok(json!({
        "survivors": survivors,
        "max_rank": e.max_rank,
        "ranks": to_value(&e.ranks),
        "cases": to_value(&e.cases),
        "torus_bound": {
            "exceptional": bounds,
            "e6_dimension": e6.dim,
            "e6_note": "dim E6 = 78 <= 4·6² = 144",
            "product_example": to_value(&torus_bound(&GroupCard::product(&e6, &torus))),
        },
        "involution": {
            "su3": to_value(&involution_p(8, 4, 5)),
            "spin7": spin7,
            "families": families,
        },
        "character_constraint_g21": classify::character_constraint(21),
    }))
}

fn irrep_checks(c: &CaseStudy, decs: &[&Decomposition]) -> Result<Vec<Value>, CliError> {
    let mut seen = Vec::new();
    let mut out = Vec::new();
    for d in decs {
        for s in &d.summands {
            let hw = &s.irrep.highest_weight;
            if seen.contains(hw) {
                continue;
            }
            seen.push(hw.clone());
            let dim = weyl_dim(&c.rs, hw)?;
            let count = irrep_weights(&c.rs, hw)?.count();
            out.push(json!({
                "highest_weight": hw.coords(),
                "weyl_dim": dim,
                "weight_count": count,
                "agree": dim == count,
            }));
        }
    }
    Ok(out)
}

pub fn check_characters(case: &str) -> Out {
    let c = build_case(case)?;
    let m = c.m_character()?;
    let gamma = c.gamma_character()?;
    let l3 = c.lambda3_character()?;
    let (dm, dg, dl) = (weights::decompose(&m)?, weights::decompose(&gamma)?, weights::decompose(&l3)?);
    let n = c.n as u64;
    let g = c.dim_g() as u64;
    Ok(json!({
        "case": c.name,
        "n": n,
        "dim_g": g,
        "lambda3_count": l3.count(),
        "gamma_count": gamma.count(),
        "characters_equal": weights::char_equal(&l3, &gamma),
        "n_squared": n * n,
        "three_g_plus_one": 3 * g + 1,
        "weyl_invariant": {
            "defining": c.defining.is_weyl_invariant(),
            "adjoint": c.adjoint.is_weyl_invariant(),
            "m": m.is_weyl_invariant(),
            "lambda3": l3.is_weyl_invariant(),
            "gamma": gamma.is_weyl_invariant(),
        },
        "irreps": irrep_checks(&c, &[&dm, &dg, &dl])?,
    }))
}
