//! Algebraic invariants of the exterior algebra and the so(n) action.

use proptest::prelude::*;
use skewtor::scalar::{self, Scalar};
use skewtor::tensor::{contract2, interior, monomials, so_act, wedge, Multivector, SkewEndo};

fn form(n: usize, p: usize, coeffs: &[i64]) -> Multivector {
    let c: Vec<Scalar> = coeffs.iter().map(|&x| scalar::int(x)).collect();
    Multivector::from_coords(n, p, &c).unwrap()
}

fn binom(n: usize, k: usize) -> usize {
    monomials(n, k).len()
}

fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-3i64..=3, len)
}

fn skew(n: usize, c: &[i64]) -> SkewEndo {
    let v: Vec<Scalar> = c.iter().map(|&x| scalar::int(x)).collect();
    SkewEndo::from_coords(n, &v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn wedge_is_graded_commutative(
        (p, q) in (1usize..=3, 1usize..=3),
        a in coeffs(binom(6, 3)),
        b in coeffs(binom(6, 3)),
    ) {
        let x = form(6, p, &a[..binom(6, p)]);
        let y = form(6, q, &b[..binom(6, q)]);
        let xy = wedge(&x, &y).unwrap();
        let yx = wedge(&y, &x).unwrap();
        let sign = if (p * q) % 2 == 0 { 1 } else { -1 };
        prop_assert_eq!(xy, yx.scale(&scalar::int(sign)));
    }

    #[test]
    fn wedge_is_associative(a in coeffs(6), b in coeffs(15), c in coeffs(6)) {
        let x = form(6, 1, &a);
        let y = form(6, 2, &b);
        let z = form(6, 1, &c);
        let l = wedge(&wedge(&x, &y).unwrap(), &z).unwrap();
        let r = wedge(&x, &wedge(&y, &z).unwrap()).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn so_act_is_a_lie_action(
        a in coeffs(21),
        b in coeffs(21),
        t in coeffs(35),
    ) {
        let (a, b, t) = (skew(7, &a), skew(7, &b), form(7, 3, &t));
        let lhs = so_act(&a.bracket(&b).unwrap(), &t).unwrap();
        let ab = so_act(&a, &so_act(&b, &t).unwrap()).unwrap();
        let ba = so_act(&b, &so_act(&a, &t).unwrap()).unwrap();
        prop_assert_eq!(lhs, ab.sub(&ba).unwrap());
    }

    #[test]
    fn so_act_preserves_the_inner_product(a in coeffs(21), s in coeffs(35), t in coeffs(35)) {
        let a = skew(7, &a);
        let (s, t) = (form(7, 3, &s), form(7, 3, &t));
        let l = so_act(&a, &s).unwrap().inner(&t).unwrap();
        let r = s.inner(&so_act(&a, &t).unwrap()).unwrap();
        prop_assert_eq!(l, -r);
    }

    #[test]
    fn so_act_on_vectors_is_matrix_multiplication(a in coeffs(15), v in coeffs(6)) {
        let a = skew(6, &a);
        let v = form(6, 1, &v);
        prop_assert_eq!(so_act(&a, &v).unwrap(), a.apply_vector(&v).unwrap());
    }

    #[test]
    fn contraction_is_adjoint_to_wedge(s in coeffs(21), v in coeffs(7), t in coeffs(35)) {
        let (s, v, t) = (form(7, 2, &s), form(7, 1, &v), form(7, 3, &t));
        let l = contract2(&s, &t).unwrap().inner(&v).unwrap();
        let r = wedge(&s, &v).unwrap().inner(&t).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn interior_is_adjoint_to_wedge(v in coeffs(6), s in coeffs(15), t in coeffs(20)) {
        let (v, s, t) = (form(6, 1, &v), form(6, 2, &s), form(6, 3, &t));
        let l = interior(&v, &t).unwrap().inner(&s).unwrap();
        let r = wedge(&v, &s).unwrap().inner(&t).unwrap();
        prop_assert_eq!(l, r);
    }

    #[test]
    fn bivector_roundtrip(a in coeffs(21)) {
        let a = skew(7, &a);
        prop_assert_eq!(SkewEndo::from_bivector(&a.to_bivector()).unwrap(), a);
    }

    #[test]
    fn record_roundtrip(t in coeffs(35)) {
        let t = form(7, 3, &t);
        let back = Multivector::parse_record(7, 3, &t.to_string()).unwrap();
        prop_assert_eq!(back, t);
    }
}
