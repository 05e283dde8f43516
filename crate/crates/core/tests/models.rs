//! Stabilizer models, Θ maps and isotropy computations.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewtor::models::{
    full_contraction, gamma_action, isotropy_algebra, so_invariance_constraints, theta_apply,
    torsion_square, StabilizerModel, TENSOR_NAMES,
};
use skewtor::scalar::{self, Scalar};
use skewtor::tensor::{so_act, Multivector, SkewEndo};

fn random_form(rng: &mut ChaCha8Rng, n: usize, p: usize) -> Multivector {
    let len = skewtor::tensor::monomials(n, p).len();
    let c: Vec<Scalar> = (0..len).map(|_| scalar::int(rng.gen_range(-3..4))).collect();
    Multivector::from_coords(n, p, &c).unwrap()
}

fn random_skew(rng: &mut ChaCha8Rng, n: usize) -> SkewEndo {
    let c: Vec<Scalar> = (0..n * (n - 1) / 2)
        .map(|_| scalar::frac(rng.gen_range(-5..6), rng.gen_range(1..4)))
        .collect();
    SkewEndo::from_coords(n, &c).unwrap()
}

fn random_in_g(rng: &mut ChaCha8Rng, model: &StabilizerModel) -> SkewEndo {
    let c: Vec<Scalar> = (0..model.dim_g()).map(|_| scalar::int(rng.gen_range(-2..3))).collect();
    model.g.combine(model.n, &c).unwrap()
}

#[test]
fn pr_split_recombines_orthogonally() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for name in TENSOR_NAMES {
        let model = StabilizerModel::named(name).unwrap();
        for _ in 0..8 {
            let omega = random_skew(&mut rng, model.n);
            let (g, m) = model.pr_split(&omega).unwrap();
            assert_eq!(g.add(&m).unwrap(), omega, "{name}");
            assert!(g.inner(&m).unwrap().is_zero(), "{name}");
            assert!(model.in_g(&g).unwrap() && model.in_m(&m).unwrap(), "{name}");
            // pr_g Ω annihilates the defining tensor
            assert!(model.tensor.act_coords(&g).unwrap().iter().all(Zero::is_zero), "{name}");
        }
    }
}

#[test]
fn stabilizers_are_closed_under_brackets() {
    for name in TENSOR_NAMES {
        let model = StabilizerModel::named(name).unwrap();
        assert_eq!(model.dim_g(), model.expected_dim_g);
        assert!(StabilizerModel::is_subalgebra(&model.g.vectors).unwrap(), "{name}");
    }
}

#[test]
fn theta_maps_are_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for name in TENSOR_NAMES {
        let model = StabilizerModel::named(name).unwrap();
        for _ in 0..4 {
            let t = random_form(&mut rng, model.n, 3);
            let x = random_in_g(&mut rng, &model);
            let xt = so_act(&x, &t).unwrap();
            for basis in [&model.m, &model.g] {
                let lhs = theta_apply(basis, &xt).unwrap();
                let rhs = gamma_action(&x, &theta_apply(basis, &t).unwrap()).unwrap();
                assert_eq!(lhs, rhs, "{name}");
            }
        }
    }
}

#[test]
fn theta_parts_sum_to_full_contraction() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for name in TENSOR_NAMES {
        let model = StabilizerModel::named(name).unwrap();
        for _ in 0..5 {
            let t = random_form(&mut rng, model.n, 3);
            let sum = theta_apply(&model.m, &t)
                .unwrap()
                .add(&theta_apply(&model.g, &t).unwrap())
                .unwrap();
            assert_eq!(sum, full_contraction(&t).unwrap(), "{name}");
        }
    }
}

#[test]
fn torsion_square_of_a_single_monomial() {
    let t = Multivector::basis(7, &[1, 2, 3]).unwrap();
    let s = torsion_square(&t);
    let diag: Vec<i64> = (0..7).map(|i| scalar::as_i64(&s[i][i]).unwrap()).collect();
    assert_eq!(diag, vec![2, 2, 2, 0, 0, 0, 0]);
    assert!((0..7).all(|i| (0..7).all(|j| i == j || s[i][j].is_zero())));
}

#[test]
fn distinct_diagonal_forces_zero() {
    for n in 3..=8 {
        let d: Vec<Scalar> = (1..=n as i64).map(scalar::int).collect();
        let eqs = so_invariance_constraints(n, &[d]).unwrap();
        assert_eq!(eqs.kernel().basis.len(), 0, "n = {n}");
        let repeated = vec![scalar::one(); n];
        let free = so_invariance_constraints(n, &[repeated]).unwrap();
        assert_eq!(free.kernel().basis.len(), n * (n - 1) / 2);
    }
}

#[test]
fn isotropy_of_the_defining_form_is_everything() {
    let model = StabilizerModel::named("g2-3form").unwrap();
    let phi = skewtor::models::g2_form();
    assert_eq!(isotropy_algebra(&model, &phi).unwrap().len(), 14);
    let zero = Multivector::zero(7, 3).unwrap();
    assert_eq!(isotropy_algebra(&model, &zero).unwrap().len(), 14);
}

#[test]
fn isotropy_of_random_torsion_is_a_subalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for name in TENSOR_NAMES {
        let model = StabilizerModel::named(name).unwrap();
        for _ in 0..3 {
            // sparse forms have larger isotropy
            let mut t = Multivector::zero(model.n, 3).unwrap();
            for _ in 0..rng.gen_range(1..4) {
                let mut idx: Vec<usize> = rand::seq::index::sample(&mut rng, model.n, 3)
                    .into_iter()
                    .map(|i| i + 1)
                    .collect();
                idx.sort_unstable();
                t.add_term(&idx, scalar::int(rng.gen_range(1..3))).unwrap();
            }
            let gt = isotropy_algebra(&model, &t).unwrap();
            assert!(StabilizerModel::is_subalgebra(&gt).unwrap(), "{name}");
            for x in &gt {
                assert!(so_act(x, &t).unwrap().is_zero());
                assert!(model.in_g(x).unwrap());
            }
        }
    }
}
