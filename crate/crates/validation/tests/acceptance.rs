//! Acceptance suite. Prints one PASS/FAIL line per criterion followed by
//! its individual checks, and exits non-zero if any criterion fails.
//! All comparisons are exact over ℚ.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewtor::catalog::{build_case, torsion_report, TorsionReport, CASE_NAMES};
use skewtor::classify::{enumerate_cases, involution_p, spin7_centralizers};
use skewtor::models::{
    full_contraction, heisenberg_example, heisenberg_torsion, isotropy_algebra, solvable_example,
    solvable_torsion, solve_with, theta_apply, theta_maps, GammaElement, StabilizerModel,
    TorsionSolution, TENSOR_NAMES,
};
use skewtor::scalar::{self, Scalar};
use skewtor::tensor::{monomials, Multivector, SkewEndo};
use skewtor::weights::{char_equal, decompose, irrep_weights, weyl_dim, RootSystem, Weight, WeightMultiset};

const RANDOM_PER_MODEL: usize = 50;

/// Case name, expected type dims and, where pinned, expected Λ³ dims.
type Table = (&'static str, &'static [u64], Option<&'static [u64]>);

struct Criterion {
    id: u32,
    title: &'static str,
    checks: Vec<(bool, String)>,
}

impl Criterion {
    fn new(id: u32, title: &'static str) -> Self {
        Criterion {
            id,
            title,
            checks: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, what: impl Into<String>) {
        self.checks.push((ok, what.into()));
    }

    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.0)
    }

    fn print(&self) {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        println!("{status} criterion {}: {} [tolerance: exact]", self.id, self.title);
        for (ok, what) in &self.checks {
            println!("    {} {what}", if *ok { "ok  " } else { "FAIL" });
        }
    }
}

fn dims(entries: &[skewtor::catalog::TypeEntry]) -> Vec<u64> {
    let mut v: Vec<u64> = entries
        .iter()
        .flat_map(|e| std::iter::repeat_n(e.dim, e.multiplicity as usize))
        .collect();
    v.sort_unstable();
    v
}

fn reports() -> Vec<TorsionReport> {
    CASE_NAMES
        .iter()
        .map(|c| torsion_report(&build_case(c).unwrap()).unwrap())
        .collect()
}

fn criterion1(reports: &[TorsionReport]) -> Criterion {
    let mut c = Criterion::new(1, "decomposition tables");
    let expect: [Table; 6] = [
        ("SO3-in-SO5", &[3, 5, 7, 9, 11], None),
        ("U3-in-SO6", &[2, 6, 12, 16], None),
        ("G2-in-SO7", &[1, 7, 14, 27], Some(&[1, 7, 27])),
        ("Spin7-in-SO8", &[8, 48], None),
        ("Spin9-in-SO16", &[16, 128, 432, 768], Some(&[128, 432])),
        ("F4-in-SO26", &[26, 52, 273, 324, 1053, 1274, 4096], Some(&[273, 1053, 1274])),
    ];
    for (r, (name, types, l3)) in reports.iter().zip(expect) {
        assert_eq!(r.case, name);
        let got = dims(&r.types);
        c.check(got == types, format!("{name}: types {got:?}, expected {types:?}"));
        if let Some(l3) = l3 {
            let got = dims(&r.lambda3);
            c.check(got == l3, format!("{name}: Λ³ types {got:?}, expected {l3:?}"));
        }
    }
    let spin7 = &reports[3];
    c.check(spin7.characters_equal, "Spin7-in-SO8: Λ³ character equals ℝ⁸⊗𝔪 character");
    let spin9 = &reports[4];
    let t = dims(&spin9.types);
    let rest: u64 = t.iter().filter(|&&d| d != 16).sum();
    let l3: u64 = dims(&spin9.lambda3).iter().sum();
    c.check(
        t.len() == 4 && t.iter().filter(|&&d| d == 16).count() == 1 && rest == 1328 && l3 == 560,
        format!("Spin9-in-SO16: {} summands, one of dim 16, rest sum {rest}, Λ³ sum {l3}", t.len()),
    );
    c
}

fn criterion2(reports: &[TorsionReport]) -> Criterion {
    let mut c = Criterion::new(2, "torsion admissibility flags");
    let unique: BTreeSet<&str> = reports
        .iter()
        .filter(|r| r.unique_connection)
        .map(|r| r.case.as_str())
        .collect();
    let want: BTreeSet<&str> = ["U3-in-SO6", "G2-in-SO7", "Spin7-in-SO8"].into();
    c.check(
        unique == want,
        format!("unique_connection true for {unique:?}, expected {want:?}"),
    );
    let not_closed: BTreeSet<&str> = reports
        .iter()
        .filter(|r| !r.conformal_closed)
        .map(|r| r.case.as_str())
        .collect();
    let want: BTreeSet<&str> = ["SO3-in-SO5", "Spin9-in-SO16", "F4-in-SO26"].into();
    c.check(
        not_closed == want,
        format!("conformal_closed false for {not_closed:?}, expected {want:?}"),
    );
    let adm: [(&str, &[u64], &[u64]); 3] = [
        ("U3-in-SO6", &[2, 6, 12], &[16]),
        ("G2-in-SO7", &[1, 7, 27], &[14]),
        ("Spin7-in-SO8", &[8, 48], &[]),
    ];
    for (name, a, e) in adm {
        let r = reports.iter().find(|r| r.case == name).unwrap();
        let (ga, ge) = (dims(&r.admissible), dims(&r.excluded));
        c.check(
            ga == a && ge == e,
            format!("{name}: admissible {ga:?}, excluded {ge:?}"),
        );
    }
    c
}

fn criterion3(models: &[StabilizerModel]) -> Criterion {
    let mut c = Criterion::new(3, "matrix-level ranks");
    let dims: Vec<usize> = models.iter().map(|m| m.dim_g()).collect();
    c.check(dims == [3, 9, 14, 21], format!("stabilizer dims {dims:?}"));
    for (model, want) in models.iter().zip([Some(10), None, Some(35), Some(56)]) {
        let Some(want) = want else { continue };
        let rank = theta_maps(model).unwrap().rank1;
        let mut what = format!("{}: Θ₁ rank {rank}, expected {want}", model.name);
        let mut ok = rank == want;
        if model.name == "cayley-4form" {
            let square = monomials(8, 3).len() == 56 && model.n * model.dim_m() == 56;
            ok &= square;
            what.push_str(" (square, hence bijective)");
        }
        c.check(ok, what);
    }
    c
}

fn criterion4(g2: &StabilizerModel) -> Criterion {
    let mut c = Criterion::new(4, "Heisenberg example");
    let r = heisenberg_example(g2).unwrap();
    c.check(
        r.torsion_square_matches,
        format!("torsion square diagonal {:?}", r.torsion_square_diagonal),
    );
    c.check(r.lie_formula_matches, "ℒ_Ω T matches the three-term formula on the family");
    c.check(r.dim_gt == 1, format!("isotropy dimension {}", r.dim_gt));
    c.check(r.isotropy_relation_holds, "isotropy satisfies ω36 + ω45 = 0");
    c
}

fn criterion5(g2: &StabilizerModel) -> Criterion {
    let mut c = Criterion::new(5, "solvable example");
    let r = solvable_example(g2).unwrap();
    c.check(r.dim_gt == 2, format!("isotropy dimension {}", r.dim_gt));
    c.check(r.abelian, "isotropy is abelian");
    c.check(r.contains_reference_basis, "span contains both reference matrices");
    c
}

fn criterion6() -> Criterion {
    let mut c = Criterion::new(6, "classification");
    let e = enumerate_cases();
    let s: Vec<(u64, u64, u64, u64)> = e.survivors().iter().map(|t| (t.t, t.k, t.n, t.g)).collect();
    c.check(s == [(3, 2, 8, 21)], format!("survivors (t,k,n,g) {s:?}"));
    let su3 = involution_p(8, 4, 5);
    c.check(su3.raw == [2, 3], format!("SU(3) roots before parity filter {:?}", su3.raw));
    for z in spin7_centralizers() {
        let r = involution_p(21, z, 8);
        c.check(
            r.candidates.is_empty(),
            format!("Spin(7) class z={z}: candidates {:?}", r.candidates),
        );
    }
    c
}

fn random_form(rng: &mut ChaCha8Rng, n: usize) -> Multivector {
    let c: Vec<Scalar> = (0..monomials(n, 3).len())
        .map(|_| scalar::frac(rng.gen_range(-4..5), rng.gen_range(1..4)))
        .collect();
    Multivector::from_coords(n, 3, &c).unwrap()
}

fn random_gamma(rng: &mut ChaCha8Rng, model: &StabilizerModel) -> GammaElement {
    let n = model.n;
    let values = (0..n)
        .map(|_| {
            let c: Vec<Scalar> = (0..n * (n - 1) / 2)
                .map(|_| scalar::int(rng.gen_range(-3..4)))
                .collect();
            let omega = SkewEndo::from_coords(n, &c).unwrap();
            model.pr_split(&omega).unwrap().1
        })
        .collect();
    GammaElement { values }
}

fn property_roundtrip(rng: &mut ChaCha8Rng) -> (usize, usize) {
    let systems: Vec<Arc<RootSystem>> = vec![
        Arc::new(RootSystem::a(1).unwrap()),
        Arc::new(RootSystem::a(2).unwrap().with_charge()),
        Arc::new(RootSystem::g2().unwrap()),
        Arc::new(RootSystem::b(3).unwrap()),
        Arc::new(RootSystem::b(4).unwrap()),
        Arc::new(RootSystem::f4().unwrap()),
    ];
    let mut ok = 0;
    let trials = 30;
    for i in 0..trials {
        let rs = &systems[i % systems.len()];
        let parts = rng.gen_range(1..=4);
        let mut ch = WeightMultiset::empty(rs.clone());
        let mut want = Vec::new();
        for _ in 0..parts {
            let mut c: Vec<i64> = vec![0; rs.rank()];
            if rs.rank() == 4 && rs.name() == "F4" {
                // keep F4 summands small
                c[rng.gen_range(2..4)] = rng.gen_range(0..2);
            } else {
                c.iter_mut().for_each(|x| *x = rng.gen_range(0..3));
            }
            if rs.has_charge() {
                c.push(rng.gen_range(-2..3));
            }
            let hw = Weight::new(c);
            ch = ch.add(&irrep_weights(rs, &hw).unwrap()).unwrap();
            want.push(hw);
        }
        let d = decompose(&ch).unwrap();
        let mut got: Vec<Weight> = d
            .summands
            .iter()
            .flat_map(|s| std::iter::repeat_n(s.irrep.highest_weight.clone(), s.multiplicity as usize))
            .collect();
        got.sort();
        want.sort();
        if got == want && char_equal(&d.character(rs).unwrap(), &ch) {
            ok += 1;
        }
    }
    (ok, trials)
}

fn criterion7(models: &[StabilizerModel]) -> Criterion {
    let mut c = Criterion::new(7, "property suites");
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce55);

    // Freudenthal weight counts against Weyl dimensions
    let mut irreps = 0;
    let mut bad = Vec::new();
    for name in CASE_NAMES {
        let case = build_case(name).unwrap();
        let mut hws: BTreeSet<Weight> = BTreeSet::new();
        for ch in [
            case.defining.clone(),
            case.adjoint.clone(),
            case.m_character().unwrap(),
            case.gamma_character().unwrap(),
            case.lambda3_character().unwrap(),
        ] {
            for s in decompose(&ch).unwrap().summands {
                hws.insert(s.irrep.highest_weight);
            }
        }
        for hw in hws {
            irreps += 1;
            let count = irrep_weights(&case.rs, &hw).unwrap().count();
            if count != weyl_dim(&case.rs, &hw).unwrap() {
                bad.push(format!("{name} {hw}"));
            }
        }
    }
    c.check(
        bad.is_empty(),
        format!("weight count equals Weyl dimension on {irreps} irreps {bad:?}"),
    );

    let (ok, trials) = property_roundtrip(&mut rng);
    c.check(ok == trials, format!("decompose round-trip {ok}/{trials} random sums of ≤4 irreps"));

    for model in models {
        let mut ok = 0;
        for _ in 0..RANDOM_PER_MODEL {
            let t = random_form(&mut rng, model.n);
            let sum = theta_apply(&model.m, &t)
                .unwrap()
                .add(&theta_apply(&model.g, &t).unwrap())
                .unwrap();
            ok += usize::from(sum == full_contraction(&t).unwrap());
        }
        c.check(
            ok == RANDOM_PER_MODEL,
            format!("{}: Θ₁ + Θ₂ = full contraction on {ok}/{RANDOM_PER_MODEL} random 3-forms", model.name),
        );
    }

    for model in models {
        let maps = theta_maps(model).unwrap();
        let mut ok = 0;
        for _ in 0..RANDOM_PER_MODEL {
            // Spin(7): every 𝔪-valued Γ is solvable; elsewhere draw Γ from the image of Θ₁
            let gamma = if model.name == "cayley-4form" {
                random_gamma(&mut rng, model)
            } else {
                theta_apply(&model.m, &random_form(&mut rng, model.n))
                    .unwrap()
                    .scale(&scalar::frac(-1, 2))
            };
            let good = match solve_with(model, &maps.theta1, &gamma).unwrap() {
                TorsionSolution::NoSolution => false,
                sol => {
                    let t = sol.particular().unwrap();
                    theta_apply(&model.m, t).unwrap() == gamma.scale(&scalar::int(-2))
                }
            };
            ok += usize::from(good);
        }
        c.check(
            ok == RANDOM_PER_MODEL,
            format!("{}: back-substitution 2Γ = −Θ₁(T) on {ok}/{RANDOM_PER_MODEL} random Γ", model.name),
        );
    }

    let g2 = &models[2];
    let mut outputs = vec![
        ("heisenberg", isotropy_algebra(g2, &heisenberg_torsion().unwrap()).unwrap()),
        ("solvable", isotropy_algebra(g2, &solvable_torsion().unwrap()).unwrap()),
    ];
    for model in models {
        for k in 0..5 {
            let mut t = Multivector::zero(model.n, 3).unwrap();
            for _ in 0..=k % 3 {
                let mut idx: Vec<usize> = rand::seq::index::sample(&mut rng, model.n, 3)
                    .into_iter()
                    .map(|i| i + 1)
                    .collect();
                idx.sort_unstable();
                t.add_term(&idx, scalar::int(1)).unwrap();
            }
            outputs.push(("random", isotropy_algebra(model, &t).unwrap()));
        }
    }
    let closed = outputs
        .iter()
        .filter(|(_, b)| StabilizerModel::is_subalgebra(b).unwrap())
        .count();
    c.check(
        closed == outputs.len(),
        format!("isotropy outputs closed under brackets {closed}/{}", outputs.len()),
    );
    c
}

fn main() -> ExitCode {
    let models: Vec<StabilizerModel> = TENSOR_NAMES
        .iter()
        .map(|n| StabilizerModel::named(n).unwrap())
        .collect();
    let reports = reports();
    let criteria = [
        criterion1(&reports),
        criterion2(&reports),
        criterion3(&models),
        criterion4(&models[2]),
        criterion5(&models[2]),
        criterion6(),
        criterion7(&models),
    ];
    for c in &criteria {
        c.print();
    }
    let failed: Vec<u32> = criteria.iter().filter(|c| !c.passed()).map(|c| c.id).collect();
    if failed.is_empty() {
        println!("acceptance: all {} criteria passed", criteria.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
