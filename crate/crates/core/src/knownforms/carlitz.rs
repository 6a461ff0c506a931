use itertools::Itertools;

use crate::qfield::{q_bracket, LaurentPoly};

/// Descent number and major index of every permutation of `1..=n`, in
/// lexicographic order of the permutations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStat {
    pub n: usize,
    pub table: Vec<(u32, u32)>,
}

impl PermStat {
    pub fn new(n: usize) -> Self {
        let table = (1..=n)
            .permutations(n)
            .map(|p| {
                let descents = (1..n).filter(|&j| p[j - 1] > p[j]);
                descents.fold((0, 0), |(des, maj), j| (des + 1, maj + j as u32))
            })
            .collect();
        PermStat { n, table }
    }

    /// `sum_pi x^des q^maj`, as coefficients of `x^0, x^1, ...`.
    pub fn euler_mahonian(&self) -> Vec<LaurentPoly> {
        let top = self.table.iter().map(|&(d, _)| d as usize).max().unwrap_or(0);
        let mut out = vec![LaurentPoly::zero(); top + 1];
        for &(des, maj) in &self.table {
            out[des as usize] = &out[des as usize] + &LaurentPoly::q_pow(maj as i64);
        }
        out
    }
}

/// Product of two series in `x` truncated after `x^t_max`.
fn mul_trunc(a: &[LaurentPoly], b: &[LaurentPoly], t_max: usize) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::zero(); t_max + 1];
    for (i, ai) in a.iter().enumerate().take(t_max + 1) {
        for (j, bj) in b.iter().enumerate().take(t_max + 1 - i) {
            out[i + j] = &out[i + j] + &(ai * bj);
        }
    }
    out
}

/// Both sides of `sum_t [t+1]_q^n x^t = A_n(x, q) / prod_{j=0..n} (1 - x q^j)`
/// as series in `x` through `x^t_max`; the left side first.
pub fn carlitz_sides(n: usize, t_max: usize) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    let left: Vec<LaurentPoly> = (0..=t_max)
        .map(|t| {
            q_bracket(t as i64 + 1)
                .as_laurent()
                .expect("polynomial")
                .pow(n as u32)
        })
        .collect();
    let mut right = PermStat::new(n).euler_mahonian();
    right.resize(t_max + 1, LaurentPoly::zero());
    right.truncate(t_max + 1);
    for j in 0..=n as i64 {
        // 1 / (1 - x q^j) = sum_k q^(jk) x^k
        let geometric: Vec<LaurentPoly> = (0..=t_max as i64).map(|k| LaurentPoly::q_pow(j * k)).collect();
        right = mul_trunc(&right, &geometric, t_max);
    }
    (left, right)
}

pub fn carlitz_check(n: usize, t_max: usize) -> bool {
    let (l, r) = carlitz_sides(n, t_max);
    l == r
}
