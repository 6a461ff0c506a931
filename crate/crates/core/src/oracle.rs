//! Brute-force lattice-point enumeration of dilates, used as ground truth.
//!
//! Membership is decided point by point with exact LPs over the vertex
//! list; nothing here touches cones or generating functions.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exactalg::{ceil, floor, lp_feasible, IntVector, LinearSystem, RatVector, Rational, Relation};
use crate::polytope::{IntegralForm, Polytope};
use crate::qfield::LaurentPoly;

mod verify;

pub use verify::{pole_bound, verify_constituents, verify_constituents_capped, verify_polytope, CheckResult, VerifyReport};

/// Default cap on the number of candidate points in one enumeration box.
pub const DEFAULT_MAX_BOX: u64 = 10_000_000;

/// `sum q^lambda(m)` over the lattice points `m` of `tP` (or its relative
/// interior).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCount {
    pub t: u64,
    pub sum: LaurentPoly,
    pub point_count: u64,
}

/// Whether `x` is a convex combination of `points` with every weight positive.
pub fn in_relative_interior(x: &RatVector, points: &[RatVector]) -> bool {
    // Scaling the weights so the smallest is 1: x is in the relative
    // interior iff sum nu_u (u - x) = 0 for some nu >= 1. Substituting
    // nu = 1 + mu leaves a feasibility problem in mu >= 0.
    let n = points.len();
    if n == 0 {
        return false;
    }
    let mut sys = LinearSystem::nonnegative(n);
    for k in 0..x.len() {
        let row: Vec<Rational> = points.iter().map(|u| &u[k] - &x[k]).collect();
        let rhs = -row.iter().sum::<Rational>();
        sys.add_constraint(row, Relation::Eq, rhs);
    }
    lp_feasible(&sys)
}

fn in_hull(x: &RatVector, points: &[RatVector]) -> bool {
    let n = points.len();
    let mut sys = LinearSystem::nonnegative(n);
    sys.add_constraint(vec![Rational::one(); n], Relation::Eq, Rational::one());
    for k in 0..x.len() {
        sys.add_constraint(points.iter().map(|u| u[k].clone()).collect(), Relation::Eq, x[k].clone());
    }
    lp_feasible(&sys)
}

/// Lattice points of `tP` (or of its relative interior), sorted.
pub fn lattice_points(poly: &Polytope, t: u64, interior: bool, max_box: u64) -> Result<Vec<IntVector>> {
    let tr = Rational::from_integer(BigInt::from(t));
    let scaled: Vec<RatVector> = poly.vertices().iter().map(|v| v.scale(&tr)).collect();
    let d = poly.ambient_dim();
    let mut ranges = Vec::with_capacity(d);
    let mut volume = BigInt::one();
    for k in 0..d {
        let lo = scaled.iter().map(|v| ceil(&v[k])).min().expect("nonempty polytope");
        let hi = scaled.iter().map(|v| floor(&v[k])).max().expect("nonempty polytope");
        if hi < lo {
            return Ok(Vec::new());
        }
        volume *= &hi - &lo + 1;
        ranges.push((lo, hi));
    }
    if volume > BigInt::from(max_box) {
        return Err(Error::BoxTooLarge {
            volume: volume.to_string(),
            cap: max_box,
        });
    }
    let total = volume.to_u64().expect("volume below cap");
    let ranges: Vec<(i64, i64)> = ranges
        .iter()
        .map(|(lo, hi)| (lo.to_i64().expect("box fits i64"), hi.to_i64().expect("box fits i64")))
        .collect();

    let mut points: Vec<IntVector> = (0..total)
        .into_par_iter()
        .filter_map(|mut idx| {
            let mut coords = Vec::with_capacity(d);
            for &(lo, hi) in ranges.iter().rev() {
                let w = (hi - lo + 1) as u64;
                coords.push(lo + (idx % w) as i64);
                idx /= w;
            }
            coords.reverse();
            let m = IntVector::from_i64s(&coords);
            let x = m.to_rational();
            let inside = if interior {
                in_relative_interior(&x, &scaled)
            } else {
                in_hull(&x, &scaled)
            };
            inside.then_some(m)
        })
        .collect();
    points.sort();
    Ok(points)
}

/// Weighted count of `tP` (or its relative interior) with the default box cap.
pub fn oracle_count(poly: &Polytope, lambda: &IntegralForm, t: u64, interior: bool) -> Result<WeightedCount> {
    oracle_count_capped(poly, lambda, t, interior, DEFAULT_MAX_BOX)
}

pub fn oracle_count_capped(
    poly: &Polytope,
    lambda: &IntegralForm,
    t: u64,
    interior: bool,
    max_box: u64,
) -> Result<WeightedCount> {
    let points = lattice_points(poly, t, interior, max_box)?;
    let mut sum = LaurentPoly::zero();
    for m in &points {
        let e = lambda
            .at_int(m)
            .to_i64()
            .ok_or_else(|| Error::Validation("weight exponent out of range".into()))?;
        sum = sum + LaurentPoly::q_pow(e);
    }
    Ok(WeightedCount {
        t,
        sum,
        point_count: points.len() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use crate::exactalg::rat;
    use crate::polytope::build_polytope;
    use crate::qfield::q_bracket;

    fn poly(points: &[&[i64]]) -> Polytope {
        build_polytope(&points.iter().map(|p| RatVector::from_i64s(p)).collect::<Vec<_>>()).unwrap()
    }

    fn triangle() -> Polytope {
        poly(&[&[0, 0], &[1, 0], &[0, 1]])
    }

    #[test]
    fn triangle_counts() {
        let l = IntegralForm::from_i64s(&[1, 2]);
        let c = oracle_count(&triangle(), &l, 1, false).unwrap();
        assert_eq!(c.sum, LaurentPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(c.point_count, 3);
        let c0 = oracle_count(&triangle(), &l, 0, false).unwrap();
        assert_eq!(c0.sum, LaurentPoly::one());
        assert_eq!(c0.point_count, 1);
        // 3T has the single interior point (1, 1).
        let c3 = oracle_count(&triangle(), &l, 3, true).unwrap();
        assert_eq!(c3.sum, LaurentPoly::q_pow(3));
    }

    #[test]
    fn square_counts_are_bracket_squares() {
        let sq = poly(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let l = IntegralForm::from_i64s(&[1, 1]);
        let c = oracle_count(&sq, &l, 2, false).unwrap();
        let b = q_bracket(3).as_laurent().unwrap();
        assert_eq!(c.sum, &b * &b);
    }

    #[test]
    fn lower_dimensional_interior() {
        // Segment from (0,0,1) to (0,1,0): relative interior is nonempty.
        let seg = poly(&[&[0, 0, 1], &[0, 1, 0]]);
        let pts = lattice_points(&seg, 3, true, DEFAULT_MAX_BOX).unwrap();
        assert_eq!(pts, vec![IntVector::from_i64s(&[0, 1, 2]), IntVector::from_i64s(&[0, 2, 1])]);
        assert_eq!(lattice_points(&seg, 3, false, DEFAULT_MAX_BOX).unwrap().len(), 4);
    }

    #[test]
    fn rational_dilates() {
        let half = build_polytope(&[RatVector::new(vec![Rational::zero()]), RatVector::new(vec![rat(1, 2)])]).unwrap();
        let counts: Vec<u64> = (0..6)
            .map(|t| lattice_points(&half, t, false, DEFAULT_MAX_BOX).unwrap().len() as u64)
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 2, 3, 3]);
    }

    #[test]
    fn box_cap_is_enforced() {
        let big = poly(&[&[0, 0], &[100, 0], &[0, 100]]);
        assert!(matches!(
            lattice_points(&big, 1, false, 1000),
            Err(Error::BoxTooLarge { .. })
        ));
    }

    #[test]
    fn monotone_and_interior_bounded() {
        let p = poly(&[&[0, 0], &[2, 1], &[1, 2]]);
        let l = IntegralForm::from_i64s(&[1, 3]);
        let mut prev = 0;
        for t in 0..5 {
            let closed = oracle_count(&p, &l, t, false).unwrap();
            assert!(closed.point_count >= prev);
            assert_eq!(closed.sum.eval(&Rational::one()), Rational::from_integer(closed.point_count.into()));
            prev = closed.point_count;
            if t > 0 {
                let open = oracle_count(&p, &l, t, true).unwrap();
                assert!(open.point_count <= closed.point_count);
            }
        }
    }

    #[test]
    fn verify_triangle_and_cube() {
        let report = verify_polytope(&triangle(), &IntegralForm::from_i64s(&[1, 2]), 5).unwrap();
        assert!(report.passed(), "{}", report.render_text());
        let cube: Vec<Vec<i64>> = (0..8).map(|m| (0..3).map(|i| (m >> i) & 1).collect()).collect();
        let cube = poly(&cube.iter().map(Vec::as_slice).collect::<Vec<_>>());
        let report = verify_polytope(&cube, &IntegralForm::from_i64s(&[1, 2, 3]), 4).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }

    #[test]
    fn corrupted_coefficient_fails_at_named_dilation() {
        use crate::chapoton::{constituents, QXPoly};
        use crate::qfield::QRatFn;
        let l = IntegralForm::from_i64s(&[1, 2]);
        let mut cs = constituents(&triangle(), &l).unwrap();
        let mut coeffs = cs[0].coefficients().to_vec();
        coeffs[1] = &coeffs[1] + &QRatFn::one();
        cs[0].poly = QXPoly::from_coeffs(coeffs);
        let report = verify_constituents(&triangle(), &l, &cs, 5).unwrap();
        let fail = report.first_failure().unwrap();
        assert_eq!(fail.name, "closed counts");
        assert_eq!(fail.failing_t, Some(1));
    }

    #[test]
    fn verify_rational_triangle() {
        let p = build_polytope(&[
            RatVector::new(vec![Rational::zero(), Rational::zero()]),
            RatVector::new(vec![rat(1, 2), Rational::zero()]),
            RatVector::new(vec![Rational::zero(), rat(1, 2)]),
        ])
        .unwrap();
        let report = verify_polytope(&p, &IntegralForm::from_i64s(&[1, 2]), 8).unwrap();
        assert!(report.passed(), "{}", report.render_text());
    }
}
