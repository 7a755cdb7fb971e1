mod common;

use std::collections::HashMap;

use proptest::prelude::*;

use common::{int, vars};
use prelorentz::{Coeff, ExponentVector, MultiPoly, PolyDoc, VarList};

fn names() -> VarList {
    vars(&["u", "v", "w"])
}

prop_compose! {
    fn poly(max_deg: u32, max_terms: usize)
        (terms in prop::collection::vec(
            (prop::collection::vec(0..=max_deg, 3), -6i64..=6, 1i64..=3),
            0..=max_terms))
        -> MultiPoly
    {
        MultiPoly::from_terms(
            names(),
            terms.into_iter().map(|(e, p, q)| (ExponentVector(e), Coeff::new(p.into(), q.into()))),
        )
        .unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ring_axioms(p in poly(3, 5), q in poly(3, 5), r in poly(3, 5)) {
        let pq_r = p.mul(&q).unwrap().mul(&r).unwrap();
        let p_qr = p.mul(&q.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(pq_r, p_qr);
        let left = p.mul(&q.add(&r).unwrap()).unwrap();
        let right = p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn homogenize_then_dehomogenize(p in poly(4, 6)) {
        let h = p.homogenize("y").unwrap();
        prop_assert!(h.is_homogeneous());
        prop_assert_eq!(h.degree(), p.degree());
        prop_assert_eq!(h.specialize("y", &int(1)).unwrap(), p);
    }

    #[test]
    fn identify_commutes_with_mul(p in poly(3, 4), q in poly(3, 4)) {
        let target = vars(&["u", "w"]);
        let map = HashMap::from([("v".to_string(), "u".to_string())]);
        let lhs = p.mul(&q).unwrap().identify_variables(&map, &target).unwrap();
        let rhs = p.identify_variables(&map, &target).unwrap()
            .mul(&q.identify_variables(&map, &target).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multi_affine_part_idempotent_and_linear(p in poly(3, 6), q in poly(3, 6), c in -4i64..=4) {
        let m = p.multi_affine_part("u").unwrap();
        prop_assert_eq!(m.multi_affine_part("u").unwrap(), m.clone());
        let lin = p.scale(&int(c)).add(&q).unwrap().multi_affine_part("u").unwrap();
        let sum = m.scale(&int(c)).add(&q.multi_affine_part("u").unwrap()).unwrap();
        prop_assert_eq!(lin, sum);
    }

    #[test]
    fn multi_affine_part_is_a_truncation(p in poly(4, 6)) {
        let n = p.degree().max(0) as u32;
        let beta = ExponentVector(vec![1, n, n]);
        let t = p.power_truncation(&ExponentVector::zeros(3), &beta).unwrap();
        prop_assert_eq!(p.multi_affine_part("u").unwrap(), t);
    }

    #[test]
    fn truncation_matches_term_filter(p in poly(4, 8), a in prop::collection::vec(0u32..=2, 3), extra in prop::collection::vec(0u32..=3, 3)) {
        let alpha = ExponentVector(a.clone());
        let beta = ExponentVector(a.iter().zip(&extra).map(|(x, y)| x + y).collect());
        let t = p.power_truncation(&alpha, &beta).unwrap();
        let kept: Vec<(ExponentVector, Coeff)> = p.terms()
            .filter(|(g, _)| g.0.iter().zip(&alpha.0).all(|(x, y)| x >= y) && g.0.iter().zip(&beta.0).all(|(x, y)| x <= y))
            .map(|(g, c)| (g.clone(), c.clone()))
            .collect();
        prop_assert_eq!(t, MultiPoly::from_terms(names(), kept).unwrap());
    }

    #[test]
    fn partial_derivatives_commute(p in poly(4, 6)) {
        let uv = p.partial_derivative("u", 1).unwrap().partial_derivative("v", 2).unwrap();
        let vu = p.partial_derivative("v", 2).unwrap().partial_derivative("u", 1).unwrap();
        prop_assert_eq!(&uv, &vu);
        prop_assert_eq!(p.derivative(&ExponentVector(vec![1, 2, 0])).unwrap(), uv);
    }

    #[test]
    fn json_round_trip(p in poly(4, 6)) {
        let s = serde_json::to_string(&p.to_doc()).unwrap();
        let doc: PolyDoc = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(MultiPoly::from_doc(&doc).unwrap(), p);
    }
}

#[test]
fn truncation_examples() {
    let xy = vars(&["x", "y"]);
    let p = MultiPoly::from_terms(
        xy.clone(),
        [(vec![2, 0], 1), (vec![1, 1], 1), (vec![0, 2], 1)]
            .map(|(e, c)| (ExponentVector(e), int(c))),
    )
    .unwrap();
    let t = p.power_truncation(&ExponentVector(vec![0, 0]), &ExponentVector(vec![1, 1])).unwrap();
    assert_eq!(t.to_string(), "x*y");
    let big = ExponentVector(vec![99, 99]);
    assert_eq!(p.power_truncation(&ExponentVector(vec![0, 0]), &big).unwrap(), p);
    assert!(p.power_truncation(&ExponentVector(vec![2, 0]), &ExponentVector(vec![1, 5])).is_err());
}

#[test]
fn homogenize_examples() {
    let x = vars(&["x"]);
    let p = MultiPoly::from_terms(x, [(ExponentVector(vec![0]), int(1)), (ExponentVector(vec![1]), int(2))]).unwrap();
    assert_eq!(p.homogenize("y").unwrap().to_string(), "2*x + y");
    assert!(p.homogenize("x").is_err());
}
