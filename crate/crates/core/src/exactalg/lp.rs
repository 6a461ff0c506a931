//! Exact phase-I simplex for linear feasibility.
//!
//! Dense tableau over `Rational`, Bland's rule for both the entering and the
//! leaving variable, so the method terminates and is deterministic.

use num_traits::{One, Signed, Zero};

use super::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// A finite system of affine equalities and inequalities.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    num_vars: usize,
    nonneg: Vec<bool>,
    rows: Vec<(Vec<Rational>, Relation, Rational)>,
}

impl LinearSystem {
    /// System over `num_vars` free variables.
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            nonneg: vec![false; num_vars],
            rows: Vec::new(),
        }
    }

    /// System over `num_vars` variables, all constrained to be `>= 0`.
    pub fn nonnegative(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            nonneg: vec![true; num_vars],
            rows: Vec::new(),
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = true;
        self
    }

    pub fn add_constraint(&mut self, coeffs: Vec<Rational>, rel: Relation, rhs: Rational) -> &mut Self {
        assert_eq!(coeffs.len(), self.num_vars, "constraint length mismatch");
        self.rows.push((coeffs, rel, rhs));
        self
    }

    pub fn is_feasible(&self) -> bool {
        lp_feasible(self)
    }
}

/// True iff the system has a rational solution.
pub fn lp_feasible(system: &LinearSystem) -> bool {
    let m = system.rows.len();
    if m == 0 {
        return true;
    }

    // Structural columns: one per nonnegative variable, two per free one.
    let mut col_of: Vec<(usize, bool)> = Vec::new();
    for (v, &nn) in system.nonneg.iter().enumerate() {
        col_of.push((v, false));
        if !nn {
            col_of.push((v, true));
        }
    }
    let n_struct = col_of.len();
    let n_slack = system
        .rows
        .iter()
        .filter(|(_, rel, _)| *rel != Relation::Eq)
        .count();
    let n_cols = n_struct + n_slack + m;
    let rhs_col = n_cols;

    let mut tab: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n_cols + 1]; m];
    let mut basis = Vec::with_capacity(m);
    let mut slack = n_struct;
    for (i, (coeffs, rel, rhs)) in system.rows.iter().enumerate() {
        let row = &mut tab[i];
        for (c, &(v, neg)) in col_of.iter().enumerate() {
            row[c] = if neg { -&coeffs[v] } else { coeffs[v].clone() };
        }
        match rel {
            Relation::Le => {
                row[slack] = Rational::one();
                slack += 1;
            }
            Relation::Ge => {
                row[slack] = -Rational::one();
                slack += 1;
            }
            Relation::Eq => {}
        }
        row[rhs_col] = rhs.clone();
        if rhs.is_negative() {
            for e in row.iter_mut() {
                *e = -&*e;
            }
        }
        let art = n_struct + n_slack + i;
        row[art] = Rational::one();
        basis.push(art);
    }

    // Reduced costs of the phase-I objective (sum of artificials).
    let first_art = n_struct + n_slack;
    let mut cost = vec![Rational::zero(); n_cols + 1];
    for row in &tab {
        for (j, e) in row.iter().enumerate() {
            if j < first_art || j == rhs_col {
                cost[j] -= e;
            }
        }
    }

    while let Some(enter) = (0..n_cols).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for (i, row) in tab.iter().enumerate() {
            if !row[enter].is_positive() {
                continue;
            }
            let ratio = &row[rhs_col] / &row[enter];
            let better = match &leave {
                None => true,
                Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((r, _)) = leave else {
            // Phase-I objective is bounded below by zero.
            unreachable!("unbounded phase-I objective");
        };
        pivot(&mut tab, &mut cost, r, enter);
        basis[r] = enter;
    }

    cost[rhs_col].is_zero()
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let inv = tab[r][c].recip();
    for e in tab[r].iter_mut() {
        *e *= &inv;
    }
    let prow = tab[r].clone();
    for (i, row) in tab.iter_mut().enumerate() {
        if i == r || row[c].is_zero() {
            continue;
        }
        let f = row[c].clone();
        for (e, p) in row.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *e -= &f * p;
            }
        }
    }
    if !cost[c].is_zero() {
        let f = cost[c].clone();
        for (e, p) in cost.iter_mut().zip(&prow) {
            if !p.is_zero() {
                *e -= &f * p;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{int_rat, rat, solve_exact, RatMatrix, RatVector};
    use itertools::Itertools;
    use proptest::prelude::*;

    fn r(n: i64) -> Rational {
        int_rat(n)
    }

    #[test]
    fn interval_examples() {
        let mut s = LinearSystem::new(1);
        s.add_constraint(vec![r(1)], Relation::Ge, r(0))
            .add_constraint(vec![r(1)], Relation::Le, r(1));
        assert!(lp_feasible(&s));

        let mut s = LinearSystem::new(1);
        s.add_constraint(vec![r(1)], Relation::Ge, r(1))
            .add_constraint(vec![r(1)], Relation::Le, r(0));
        assert!(!lp_feasible(&s));

        assert!(lp_feasible(&LinearSystem::new(3)));
    }

    #[test]
    fn midpoint_not_in_top_edge() {
        // lambda >= 0, sum = 1, lambda_1 (1,1) + lambda_2 (0,1) = (1/2, 0)
        let mut s = LinearSystem::nonnegative(2);
        s.add_constraint(vec![r(1), r(1)], Relation::Eq, r(1))
            .add_constraint(vec![r(1), r(0)], Relation::Eq, rat(1, 2))
            .add_constraint(vec![r(1), r(1)], Relation::Eq, r(0));
        assert!(!lp_feasible(&s));
    }

    #[test]
    fn degenerate_system_terminates() {
        // Many redundant constraints through one point.
        let mut s = LinearSystem::nonnegative(3);
        for k in 1..8 {
            s.add_constraint(vec![r(k), r(1), r(-k)], Relation::Eq, r(0));
            s.add_constraint(vec![r(1), r(k), r(1)], Relation::Le, r(0));
        }
        assert!(lp_feasible(&s));
        s.add_constraint(vec![r(1), r(1), r(1)], Relation::Ge, r(1));
        assert!(!lp_feasible(&s));
    }

    /// Brute force: add a bounding box, then look for a feasible basic
    /// solution among all square subsystems of tight constraints.
    fn vertex_enumeration_feasible(rows: &[(Vec<i64>, Relation, i64)], n: usize, bound: i64) -> bool {
        let mut all: Vec<(Vec<Rational>, Relation, Rational)> = rows
            .iter()
            .map(|(c, rel, b)| (c.iter().map(|&x| r(x)).collect(), *rel, r(*b)))
            .collect();
        for i in 0..n {
            let mut e = vec![r(0); n];
            e[i] = r(1);
            all.push((e.clone(), Relation::Le, r(bound)));
            all.push((e, Relation::Ge, r(-bound)));
        }
        let satisfies = |x: &RatVector| {
            all.iter().all(|(c, rel, b)| {
                let v = RatVector::new(c.clone()).dot(x);
                match rel {
                    Relation::Le => v <= *b,
                    Relation::Ge => v >= *b,
                    Relation::Eq => v == *b,
                }
            })
        };
        for subset in (0..all.len()).combinations(n) {
            let a = RatMatrix::new(subset.iter().map(|&i| RatVector::new(all[i].0.clone())).collect());
            let b = RatVector::new(subset.iter().map(|&i| all[i].2.clone()).collect());
            if let Ok(Some(x)) = solve_exact(&a, &b) {
                if satisfies(&x) {
                    return true;
                }
            }
        }
        false
    }

    fn relation() -> impl Strategy<Value = Relation> {
        prop_oneof![Just(Relation::Le), Just(Relation::Ge), Just(Relation::Eq)]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn agrees_with_vertex_enumeration(
            n in 1usize..=3,
            rows in prop::collection::vec(
                (prop::collection::vec(-3i64..=3, 3), relation(), -4i64..=4), 0..5),
        ) {
            let rows: Vec<_> = rows.into_iter().map(|(c, rel, b)| (c[..n].to_vec(), rel, b)).collect();
            let bound = 50;
            let mut s = LinearSystem::new(n);
            for (c, rel, b) in &rows {
                s.add_constraint(c.iter().map(|&x| r(x)).collect(), *rel, r(*b));
            }
            for i in 0..n {
                let mut e = vec![r(0); n];
                e[i] = r(1);
                s.add_constraint(e.clone(), Relation::Le, r(bound));
                s.add_constraint(e, Relation::Ge, r(-bound));
            }
            prop_assert_eq!(lp_feasible(&s), vertex_enumeration_feasible(&rows, n, bound));
        }
    }
}
