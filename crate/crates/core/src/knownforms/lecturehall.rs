use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use super::q_to_the_t;
use crate::chapoton::{constituents, QXPoly};
use crate::error::{Error, Result};
use crate::exactalg::{rank, solve_exact, IntVector, RatMatrix, RatVector, Rational};
use crate::oracle::oracle_count;
use crate::polytope::{build_polytope, IntegralForm, Polytope};
use crate::qfield::{LaurentPoly, QRatFn};

/// Rows `(a, b)` of the system `a . x <= b` cutting out the simplex
/// `{x in [0,1]^n : x_1 <= x_2/2 <= ... <= x_n/n}`.
fn inequalities(n: usize) -> Vec<(RatVector, Rational)> {
    let mut rows = Vec::new();
    let unit = |i: usize, c: Rational| {
        let mut v = vec![Rational::zero(); n];
        v[i] = c;
        v
    };
    for i in 0..n {
        rows.push((RatVector::new(unit(i, -Rational::one())), Rational::zero()));
        rows.push((RatVector::new(unit(i, Rational::one())), Rational::one()));
    }
    for i in 0..n.saturating_sub(1) {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::new(BigInt::one(), BigInt::from(i + 1));
        v[i + 1] = -Rational::new(BigInt::one(), BigInt::from(i + 2));
        rows.push((RatVector::new(v), Rational::zero()));
    }
    rows
}

fn satisfies(x: &RatVector, rows: &[(RatVector, Rational)]) -> bool {
    rows.iter().all(|(a, b)| a.dot(x) <= *b)
}

/// Every vertex of the inequality system, by solving each square subsystem
/// of tight constraints.
fn enumerate_vertices(n: usize, rows: &[(RatVector, Rational)]) -> Vec<RatVector> {
    let mut out: Vec<RatVector> = Vec::new();
    for subset in (0..rows.len()).combinations(n) {
        let a = RatMatrix::new(subset.iter().map(|&i| rows[i].0.clone()).collect());
        if rank(&a) < n {
            continue;
        }
        let b = RatVector::new(subset.iter().map(|&i| rows[i].1.clone()).collect());
        let Ok(Some(x)) = solve_exact(&a, &b) else {
            continue;
        };
        if satisfies(&x, rows) && !out.contains(&x) {
            out.push(x);
        }
    }
    out.sort_by(|a, b| a.entries().cmp(b.entries()));
    out
}

/// The lecture hall simplex with vertices `v_k` (`k = 0..=n`) whose last
/// `k` coordinates are `x_i = i/n` and the rest zero.
///
/// The vertex list is checked against the inequalities: every candidate
/// must be feasible, the candidates must be exactly the vertices of the
/// system, and the hull must be an `n`-simplex with denominator `n`.
pub fn lecture_hall_simplex(n: usize) -> Result<Polytope> {
    if n == 0 {
        return Err(Error::Validation("lecture hall simplex needs n >= 1".into()));
    }
    let candidates: Vec<RatVector> = (0..=n)
        .map(|k| {
            RatVector::new(
                (1..=n)
                    .map(|i| {
                        if i > n - k {
                            Rational::new(BigInt::from(i), BigInt::from(n))
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect(),
            )
        })
        .collect();
    let rows = inequalities(n);
    if let Some(bad) = candidates.iter().find(|x| !satisfies(x, &rows)) {
        return Err(Error::Validation(format!("candidate vertex {bad} violates the inequalities")));
    }
    let mut sorted = candidates.clone();
    sorted.sort_by(|a, b| a.entries().cmp(b.entries()));
    let enumerated = enumerate_vertices(n, &rows);
    if enumerated != sorted {
        return Err(Error::Validation(format!(
            "vertex list mismatch: system has {} vertices, formula gives {}",
            enumerated.len(),
            sorted.len()
        )));
    }
    let poly = build_polytope(&candidates)?;
    if poly.num_vertices() != n + 1 || poly.dim() != n {
        return Err(Error::Validation(format!(
            "expected an {n}-simplex, found {} vertices in dimension {}",
            poly.num_vertices(),
            poly.dim()
        )));
    }
    if *poly.denominator() != BigInt::from(n) {
        return Err(Error::Validation(format!("denominator {} instead of {n}", poly.denominator())));
    }
    Ok(poly)
}

fn ones(n: usize) -> IntegralForm {
    IntegralForm::new(IntVector::from_i64s(&vec![1; n]))
}

/// `E_n(t)`: weighted counts of the dilates `t Delta_n` under the all-ones
/// form, built by the recursion
/// `E_n(jn + i) = E_n(jn + i - 1) + q^(jn+i) E_{n-1}(j(n-1) + i - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LectureHallTable {
    pub t_max: u64,
    /// `entries[n - 1][t]`
    pub entries: Vec<Vec<LaurentPoly>>,
}

impl LectureHallTable {
    pub fn get(&self, n: usize, t: u64) -> &LaurentPoly {
        &self.entries[n - 1][t as usize]
    }

    /// `E_n(jn + i)`
    pub fn at(&self, n: usize, j: u64, i: u64) -> &LaurentPoly {
        self.get(n, j * n as u64 + i)
    }
}

/// Builds the table for `1 <= n <= n_max` and `0 <= t <= t_max`, seeding
/// `n = 1` by enumeration and checking every recursively built entry
/// against enumeration.
pub fn lecture_hall_recursion_table(n_max: usize, t_max: u64) -> Result<LectureHallTable> {
    let mut entries: Vec<Vec<LaurentPoly>> = Vec::new();
    for n in 1..=n_max {
        let simplex = lecture_hall_simplex(n)?;
        let lambda = ones(n);
        let mut row = Vec::with_capacity(t_max as usize + 1);
        for t in 0..=t_max {
            let value = if n == 1 || t == 0 {
                oracle_count(&simplex, &lambda, t, false)?.sum
            } else {
                let nn = n as u64;
                let j = (t - 1) / nn;
                let i = t - j * nn;
                let lower = &entries[n - 2][(j * (nn - 1) + i - 1) as usize];
                &row[t as usize - 1] + &(&LaurentPoly::q_pow(t as i64) * lower)
            };
            if n > 1 && t > 0 {
                let direct = oracle_count(&simplex, &lambda, t, false)?.sum;
                if direct != value {
                    return Err(Error::Validation(format!(
                        "recursion disagrees with enumeration at n = {n}, t = {t}"
                    )));
                }
            }
            row.push(value);
        }
        entries.push(row);
    }
    Ok(LectureHallTable { t_max, entries })
}

/// The polynomials `chap_{n,i}`, `0 <= i <= n`, with
/// `chap_{n,i}([j]_q) = E_n(jn + i)` for `i >= 1` and
/// `chap_{n,n}(x) = chap_{n,0}(1 + qx)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LectureHallFamily {
    pub n: usize,
    pub constituents: Vec<QXPoly>,
}

fn one_plus_qx() -> QXPoly {
    QXPoly::linear(QRatFn::q_pow(1), QRatFn::one())
}

impl LectureHallFamily {
    /// Reads the family off the constituents of the simplex.
    pub fn from_constituents(n: usize) -> Result<Self> {
        let simplex = lecture_hall_simplex(n)?;
        let cs = constituents(&simplex, &ones(n))?;
        let mut chap: Vec<QXPoly> = cs.into_iter().map(|c| c.poly).collect();
        let last = chap[0].compose(&one_plus_qx());
        chap.push(last);
        Ok(LectureHallFamily { n, constituents: chap })
    }

    /// Builds the family from `chap_{1,0} = 1 + qx` alone: each `chap_{n,0}`
    /// solves the q-difference equation with `chap_{n,0}(0) = 1`, and the
    /// others follow from the recursion in `i`.
    pub fn from_seed(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Validation("family index must be at least 1".into()));
        }
        let first = one_plus_qx();
        let mut fam = LectureHallFamily {
            n: 1,
            constituents: vec![first.clone(), first.compose(&one_plus_qx())],
        };
        for m in 2..=n {
            let base = solve_q_difference(&q_difference_rhs(m, &fam))?;
            let mut chap = vec![base];
            for i in 1..=m {
                let next = &chap[i - 1] + &step_term(m, i, &fam.constituents[i - 1]);
                chap.push(next);
            }
            fam = LectureHallFamily { n: m, constituents: chap };
        }
        Ok(fam)
    }

    pub fn chap(&self, i: usize) -> &QXPoly {
        &self.constituents[i]
    }

    /// `chap_{n,n}(x) = chap_{n,0}(1 + qx)`
    pub fn symmetry_holds(&self) -> bool {
        self.constituents[self.n] == self.constituents[0].compose(&one_plus_qx())
    }

    /// `chap_{n,0}(0) = 1`
    pub fn normalization_holds(&self) -> bool {
        self.constituents[0].coeff(0).is_one()
    }

    /// `chap_{n,i} = chap_{n,i-1} + q^i ((q-1)x+1)^n chap_{n-1,i-1}` for all `i`.
    pub fn recursion_holds(&self, prev: &LectureHallFamily) -> bool {
        (1..=self.n).all(|i| {
            self.constituents[i] == &self.constituents[i - 1] + &step_term(self.n, i, &prev.constituents[i - 1])
        })
    }

    /// `chap_{n,i} = chap_{n,0} + ((q-1)x+1)^n sum_{j=1..i} q^j chap_{n-1,j-1}`.
    pub fn iterated_recursion_holds(&self, prev: &LectureHallFamily) -> bool {
        (1..=self.n).all(|i| {
            let sum = (1..=i).fold(QXPoly::zero(), |acc, j| {
                &acc + &prev.constituents[j - 1].scale(&QRatFn::q_pow(j as i64))
            });
            self.constituents[i] == &self.constituents[0] + &(&q_to_the_t().pow(self.n as u32) * &sum)
        })
    }
}

/// `q^i ((q-1)x+1)^n c`
fn step_term(n: usize, i: usize, c: &QXPoly) -> QXPoly {
    (&q_to_the_t().pow(n as u32) * c).scale(&QRatFn::q_pow(i as i64))
}

/// `((q-1)x+1)^n sum_{j=0..n-1} q^(j+1) chap_{n-1,j}`
fn q_difference_rhs(n: usize, prev: &LectureHallFamily) -> QXPoly {
    let sum = (0..n).fold(QXPoly::zero(), |acc, j| {
        &acc + &prev.constituents[j].scale(&QRatFn::q_pow(j as i64 + 1))
    });
    &q_to_the_t().pow(n as u32) * &sum
}

/// The unique `f` with `f(1 + qx) - f(x) = rhs` and `f(0) = 1`.
///
/// Writing `f = sum a_k x^k`, the coefficient of `x^m` on the left is
/// `sum_{k >= m} a_k (binom(k, m) q^m - [k = m])`, which is triangular with
/// diagonal `q^m - 1`; solve from the top down.
fn solve_q_difference(rhs: &QXPoly) -> Result<QXPoly> {
    let top = rhs.degree().unwrap_or(0);
    let mut a = vec![QRatFn::zero(); top + 1];
    a[0] = QRatFn::one();
    for m in (1..=top).rev() {
        let qm = QRatFn::q_pow(m as i64);
        let mut acc = rhs.coeff(m);
        for (k, ak) in a.iter().enumerate().skip(m + 1) {
            let c = binomial(BigInt::from(k), BigInt::from(m));
            acc = &acc - &(&(ak * &qm) * &QRatFn::constant(Rational::from_integer(c)));
        }
        a[m] = acc.checked_div(&(&qm - &QRatFn::one()))?;
    }
    let f = QXPoly::from_coeffs(a);
    if &f.compose(&one_plus_qx()) - &f != *rhs {
        return Err(Error::Validation("q-difference equation has no polynomial solution".into()));
    }
    Ok(f)
}

/// `chap_{n,0}(1 + qx) - chap_{n,0}(x)` against the right-hand side built
/// from the family one level down.
pub fn q_difference_check(fam: &LectureHallFamily, prev: &LectureHallFamily) -> bool {
    let f = &fam.constituents[0];
    &f.compose(&one_plus_qx()) - f == q_difference_rhs(fam.n, prev)
}

/// `chap_{n,0}(1/(1 - q))`
pub fn lecture_hall_limit(fam: &LectureHallFamily) -> QRatFn {
    let x = QRatFn::one()
        .checked_div(&QRatFn::from_laurent(LaurentPoly::from_i64s(&[1, -1])))
        .expect("nonzero");
    fam.constituents[0].evaluate(&x)
}
