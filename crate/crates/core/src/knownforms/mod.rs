//! Closed forms for classical families: cubes and the Carlitz identity,
//! standard and staircase simplices, and lecture hall simplices.

mod carlitz;
mod lecturehall;

use crate::chapoton::QXPoly;
use crate::exactalg::RatVector;
use crate::polytope::{build_polytope, Polytope};
use crate::qfield::{q_binomial, q_bracket, q_factorial, LaurentPoly, QRatFn};

pub use carlitz::{carlitz_check, carlitz_sides, PermStat};
pub use lecturehall::{
    lecture_hall_limit, lecture_hall_recursion_table, lecture_hall_simplex, q_difference_check,
    LectureHallFamily, LectureHallTable,
};

fn from_rows(rows: Vec<Vec<i64>>) -> Polytope {
    let pts: Vec<RatVector> = rows.iter().map(|r| RatVector::from_i64s(r)).collect();
    build_polytope(&pts).expect("well-formed vertex list")
}

/// `1 - q^n`
fn one_minus_q_pow(n: i64) -> QRatFn {
    QRatFn::from_laurent(LaurentPoly::one() - LaurentPoly::q_pow(n))
}

/// `(q - 1) x + 1`, the polynomial taking `[t]_q` to `q^t`.
fn q_to_the_t() -> QXPoly {
    QXPoly::linear(QRatFn::from_laurent(LaurentPoly::from_i64s(&[-1, 1])), QRatFn::one())
}

/// `[0,1]^d`
pub fn unit_cube(d: usize) -> Polytope {
    from_rows(
        (0..1usize << d)
            .map(|m| (0..d).map(|i| ((m >> i) & 1) as i64).collect())
            .collect(),
    )
}

/// Cube polynomial for a positive form, as a sum over subsets `I`:
/// `(-1)^|I| q^lambda_I ((q - 1) x + 1)^lambda_I / prod (1 - q^lambda_j)`.
pub fn cube_closed_form(lambda: &[i64]) -> QXPoly {
    assert!(lambda.iter().all(|&l| l > 0), "cube form must be positive");
    let denom = lambda.iter().fold(QRatFn::one(), |acc, &l| &acc * &one_minus_q_pow(l));
    let inv = QRatFn::one().checked_div(&denom).expect("nonzero");
    let y = q_to_the_t();
    let mut acc = QXPoly::zero();
    for mask in 0..1usize << lambda.len() {
        let size = mask.count_ones();
        let li: i64 = (0..lambda.len()).filter(|i| mask >> i & 1 == 1).map(|i| lambda[i]).sum();
        let mut c = &QRatFn::q_pow(li) * &inv;
        if size % 2 == 1 {
            c = -c;
        }
        acc = &acc + &y.pow(li as u32).scale(&c);
    }
    acc
}

/// `prod_j [t + 1]_{q^lambda_j}`, the weighted count of the dilated cube.
pub fn cube_count(lambda: &[i64], t: u64) -> LaurentPoly {
    lambda.iter().fold(LaurentPoly::one(), |acc, &l| {
        let b = q_bracket(t as i64 + 1)
            .as_laurent()
            .expect("bracket of a positive integer is a polynomial")
            .substitute_power(l);
        &acc * &b
    })
}

/// `(1 + q x)^d`
pub fn cube_all_ones(d: u32) -> QXPoly {
    QXPoly::linear(QRatFn::q_pow(1), QRatFn::one()).pow(d)
}

/// Convex hull of the unit vectors of `R^d` (dimension `d - 1`).
pub fn standard_simplex(d: usize) -> Polytope {
    from_rows((0..d).map(|j| (0..d).map(|i| i64::from(i == j)).collect()).collect())
}

/// `1 / prod_{k != j} (1 - q^(lambda_k - lambda_j))`, the transform at `e_j`.
pub fn standard_simplex_rho(lambda: &[i64], j: usize) -> QRatFn {
    let denom = (0..lambda.len())
        .filter(|&k| k != j)
        .fold(QRatFn::one(), |acc, k| &acc * &one_minus_q_pow(lambda[k] - lambda[j]));
    QRatFn::one().checked_div(&denom).expect("lambda entries distinct")
}

/// `sum_j rho_j ((q - 1) x + 1)^lambda_j` for distinct nonnegative `lambda`.
pub fn standard_simplex_closed_form(lambda: &[i64]) -> QXPoly {
    let y = q_to_the_t();
    (0..lambda.len()).fold(QXPoly::zero(), |acc, j| {
        &acc + &y.pow(lambda[j] as u32).scale(&standard_simplex_rho(lambda, j))
    })
}

/// `{0 <= x_1 <= ... <= x_d <= 1}`, with vertices `0` and the sums
/// `e_k + ... + e_d`.
pub fn staircase_simplex(d: usize) -> Polytope {
    from_rows((0..=d).map(|k| (0..d).map(|i| i64::from(i + k >= d)).collect()).collect())
}

/// `(1/[d]_q!) prod_{j=1..d} (q^j x + [j]_q)`
pub fn staircase_closed_form(d: u32) -> QXPoly {
    let mut p = QXPoly::one();
    for j in 1..=d as i64 {
        p = &p * &QXPoly::linear(QRatFn::q_pow(j), q_bracket(j));
    }
    let fact = QRatFn::from_laurent(q_factorial(d));
    p.scale(&QRatFn::one().checked_div(&fact).expect("nonzero"))
}

/// `[t + d choose d]_q`: partitions with at most `d` parts, each at most `t`.
pub fn staircase_count(d: u32, t: u64) -> LaurentPoly {
    q_binomial(t as i64 + d as i64, d as i64)
}

/// Transform at the vertex where `lambda` (all ones) takes the value `j`:
/// `1 / prod_{k != j, 0 <= k <= d} (1 - q^(k - j))`.
pub fn staircase_rho(d: u32, j: u32) -> QRatFn {
    let denom = (0..=d as i64)
        .filter(|&k| k != j as i64)
        .fold(QRatFn::one(), |acc, k| &acc * &one_minus_q_pow(k - j as i64));
    QRatFn::one().checked_div(&denom).expect("nonzero")
}

/// Checks the closed form against the Gaussian binomial for `t = 0..=t_max`.
pub fn staircase_check(d: u32, t_max: u64) -> bool {
    let c = staircase_closed_form(d);
    (0..=t_max).all(|t| c.evaluate(&q_bracket(t as i64)) == QRatFn::from_laurent(staircase_count(d, t)))
}
