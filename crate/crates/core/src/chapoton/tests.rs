use super::*;
use crate::exactalg::rat;
use crate::polytope::build_polytope;
use crate::qfield::{pole_orders, q_factorial};

fn poly(points: &[&[i64]]) -> Polytope {
    build_polytope(&points.iter().map(|p| RatVector::from_i64s(p)).collect::<Vec<_>>()).unwrap()
}

fn rpoly(points: &[&[(i64, i64)]]) -> Polytope {
    build_polytope(
        &points
            .iter()
            .map(|p| RatVector::new(p.iter().map(|&(n, d)| rat(n, d)).collect()))
            .collect::<Vec<_>>(),
    )
    .unwrap()
}

fn lp(c: &[i64]) -> QRatFn {
    QRatFn::from_laurent(LaurentPoly::from_i64s(c))
}

fn div(a: QRatFn, b: QRatFn) -> QRatFn {
    a.checked_div(&b).unwrap()
}

fn triangle() -> Polytope {
    poly(&[&[0, 0], &[1, 0], &[0, 1]])
}

fn cube(d: usize) -> Polytope {
    let pts: Vec<Vec<i64>> = (0..1usize << d)
        .map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect())
        .collect();
    poly(&pts.iter().map(Vec::as_slice).collect::<Vec<_>>())
}

fn staircase(d: usize) -> Polytope {
    let pts: Vec<Vec<i64>> = (0..=d)
        .map(|j| (0..d).map(|i| i64::from(i < j)).collect())
        .collect();
    poly(&pts.iter().map(Vec::as_slice).collect::<Vec<_>>())
}

fn ones(d: usize) -> IntegralForm {
    IntegralForm::new(IntVector::from_i64s(&vec![1; d]))
}

fn one_plus_qx() -> QXPoly {
    QXPoly::linear(QRatFn::q_pow(1), QRatFn::one())
}

#[test]
fn triangle_polynomial() {
    let c = chapoton_polynomial(&triangle(), &IntegralForm::from_i64s(&[1, 2])).unwrap();
    let expected = QXPoly::from_coeffs(vec![
        QRatFn::one(),
        div(lp(&[0, 1, 2]), lp(&[1, 1])),
        div(QRatFn::q_pow(3), lp(&[1, 1])),
    ]);
    assert_eq!(c.poly, expected);
    assert_eq!(c.render_text(), "q^3/(q + 1)*x^2 + (2*q^2 + q)/(q + 1)*x + 1");
    assert_eq!(c.degree(), 2);
    assert!(c.constant_term().is_one());
    // Leading coefficient is (q - 1)^2 times the transform at the top vertex.
    let top = &c.meta.vertex_data[triangle().vertex_index(&RatVector::from_i64s(&[0, 1])).unwrap()];
    assert_eq!(c.leading_coefficient(), &lp(&[-1, 1]).pow(2) * &top.rho);
}

#[test]
fn triangle_evaluations() {
    let c = chapoton_polynomial(&triangle(), &IntegralForm::from_i64s(&[1, 2])).unwrap();
    assert_eq!(c.evaluate(1), lp(&[1, 1, 1]));
    assert_eq!(c.evaluate(0), c.constant_term());
    let limit = c.evaluate_limit();
    assert_eq!(limit, div(QRatFn::one(), lp(&[1, -1]) * lp(&[1, 0, -1])));
    // 3T has one interior point, (1, 1), of weight q^3.
    assert_eq!(c.reciprocal().evaluate(3), QRatFn::q_pow(3));
    assert_eq!(c.reciprocal().reciprocal(), c);
}

#[test]
fn cube_is_power_of_one_plus_qx() {
    for d in 1..=3 {
        let c = chapoton_polynomial(&cube(d), &ones(d)).unwrap();
        assert_eq!(c.poly, one_plus_qx().pow(d as u32));
        assert_eq!(c.degree(), d);
        assert_eq!(c.evaluate_limit(), div(QRatFn::one(), lp(&[1, -1]).pow(d as u32)));
    }
    let c2 = chapoton_polynomial(&cube(2), &ones(2)).unwrap();
    assert_eq!(c2.render_text(), "q^2*x^2 + 2*q*x + 1");
    assert_eq!(c2.evaluate(2), lp(&[1, 1, 1]).pow(2));
}

#[test]
fn staircase_closed_form() {
    for d in 1..=3u32 {
        let c = chapoton_polynomial(&staircase(d as usize), &ones(d as usize)).unwrap();
        let mut expected = QXPoly::one();
        for j in 1..=d as i64 {
            expected = &expected * &QXPoly::linear(QRatFn::q_pow(j), q_bracket(j));
        }
        let fact = QRatFn::from_laurent(q_factorial(d));
        expected = expected.scale(&div(QRatFn::one(), fact));
        assert_eq!(c.poly, expected, "d = {d}");
    }
}

#[test]
fn segment_reciprocal() {
    let seg = poly(&[&[0], &[1]]);
    let c = chapoton_polynomial(&seg, &IntegralForm::from_i64s(&[1])).unwrap();
    assert_eq!(c.poly, one_plus_qx());
    let r = c.reciprocal();
    assert_eq!(r.poly, QXPoly::linear(QRatFn::one(), QRatFn::from_int(-1)));
    for t in 1..5 {
        assert_eq!(r.evaluate(t), &QRatFn::q_pow(1) * &q_bracket(t - 1));
    }
}

#[test]
fn limit_without_origin_vertex() {
    let moved = triangle().translate(&RatVector::from_i64s(&[1, 1]));
    let c = chapoton_polynomial(&moved, &IntegralForm::from_i64s(&[1, 2])).unwrap();
    assert!(c.evaluate_limit().is_zero());
}

#[test]
fn limit_collects_every_vertex_with_value_zero() {
    // No vertex at the origin, but lambda vanishes at the vertex (1, 1); the
    // limit keeps that vertex's transform.
    let p = poly(&[&[1, 1], &[2, 1], &[4, 2]]);
    let l = IntegralForm::from_i64s(&[1, -1]);
    let c = chapoton_polynomial(&p, &l).unwrap();
    let v = p.vertex_index(&RatVector::from_i64s(&[1, 1])).unwrap();
    let limit = c.evaluate_limit();
    assert!(!limit.is_zero());
    assert_eq!(limit, c.meta.vertex_data[v].rho);
}

#[test]
fn translation_changes_polynomial_but_not_q1_counts() {
    let l = IntegralForm::from_i64s(&[1, 2]);
    let a = chapoton_polynomial(&triangle(), &l).unwrap();
    let b = chapoton_polynomial(&triangle().translate(&RatVector::from_i64s(&[1, 0])), &l).unwrap();
    assert_ne!(a.poly, b.poly);
    for t in 0..6 {
        let va = a.evaluate(t).evaluate_at_q1().unwrap();
        let vb = b.evaluate(t).evaluate_at_q1().unwrap();
        assert_eq!(va, vb);
    }
}

#[test]
fn matches_oracle_on_small_polytopes() {
    let cases = [
        (triangle(), IntegralForm::from_i64s(&[1, 2])),
        (poly(&[&[0, 0], &[2, 1], &[1, 2]]), IntegralForm::from_i64s(&[1, 3])),
        (cube(2), IntegralForm::from_i64s(&[1, 2])),
        (poly(&[&[0, 1], &[1, 0], &[2, 1], &[1, 2]]), IntegralForm::from_i64s(&[2, 1])),
    ];
    for (p, l) in &cases {
        let c = chapoton_polynomial(p, l).unwrap();
        for t in 0..=4u64 {
            let o = oracle_count(p, l, t, false).unwrap();
            assert_eq!(c.evaluate(t as i64), QRatFn::from_laurent(o.sum.clone()));
            // At q = 1 the value is the plain lattice-point count.
            assert_eq!(c.evaluate(t as i64).evaluate_at_q1().unwrap(), Rational::from_integer(o.point_count.into()));
        }
        let bound = (0..p.num_vertices())
            .flat_map(|v| crate::polytope::vertex_cone(p, v).edge_labels(l))
            .map(|n| n.magnitude().to_u64().unwrap())
            .max()
            .unwrap();
        for a in c.coefficients() {
            assert!(pole_orders(a, bound).is_fully_cyclotomic(), "{a}");
        }
    }
}

#[test]
fn lattice_constituent_is_the_polynomial() {
    let l = IntegralForm::from_i64s(&[1, 2]);
    let cs = constituents(&triangle(), &l).unwrap();
    assert_eq!(cs.len(), 1);
    assert_eq!(cs[0].poly, chapoton_polynomial(&triangle(), &l).unwrap().poly);
}

#[test]
fn half_segment_constituents() {
    let seg = rpoly(&[&[(0, 1)], &[(1, 2)]]);
    let l = IntegralForm::from_i64s(&[1]);
    let cs = constituents(&seg, &l).unwrap();
    assert_eq!(cs.len(), 2);
    assert!(cs[0].constant_term().is_one());
    for k in 0..=4u64 {
        for r in 0..2u64 {
            let o = oracle_count(&seg, &l, 2 * k + r, false).unwrap();
            assert_eq!(cs[r as usize].evaluate(k as i64), QRatFn::from_laurent(o.sum));
        }
    }
    assert!(matches!(chapoton_polynomial(&seg, &l), Err(Error::NotLattice(_))));
}

#[test]
fn half_triangle_reciprocity() {
    let p = rpoly(&[&[(0, 1), (0, 1)], &[(1, 2), (0, 1)], &[(0, 1), (1, 2)]]);
    let l = IntegralForm::from_i64s(&[1, 2]);
    assert!(rational_reciprocity_check(&p, &l, 2, 1).unwrap());
    for k in 1..=2 {
        for r in 0..2 {
            assert!(rational_reciprocity_check(&p, &l, k, r).unwrap());
        }
    }
}

#[test]
fn rejects_non_generic_forms() {
    let sq = cube(2);
    assert!(matches!(
        chapoton_polynomial(&sq, &IntegralForm::from_i64s(&[1, 0])),
        Err(Error::NotGenericPositive(_))
    ));
    assert!(matches!(
        chapoton_polynomial(&sq, &IntegralForm::from_i64s(&[-1, 2])),
        Err(Error::NotGenericPositive(_))
    ));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let c = chapoton_polynomial(&triangle(), &IntegralForm::from_i64s(&[1, 2])).unwrap();
    let s = c.to_json_string();
    let back = ChapotonPolynomial::from_json_str(&s).unwrap();
    assert_eq!(back, c);
    assert_eq!(back.to_json_string(), s);
}

#[test]
fn latex_output() {
    let c = chapoton_polynomial(&triangle(), &IntegralForm::from_i64s(&[1, 2])).unwrap();
    assert_eq!(
        c.render_latex(),
        "\\frac{q^{3}}{q + 1} x^{2} + \\frac{2 q^{2} + q}{q + 1} x + 1"
    );
}
