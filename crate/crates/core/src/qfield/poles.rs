use num_bigint::BigInt;

use super::upoly;
use super::{LaurentPoly, QRatFn};
use crate::exactalg::Rational;

/// Cyclotomic factorization of a denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoleReport {
    /// `(n, multiplicity)` for each cyclotomic factor `Phi_n` found, `n` ascending.
    pub orders: Vec<(u64, u32)>,
    /// What is left of the denominator after removing the cyclotomic factors.
    pub remainder: LaurentPoly,
}

impl PoleReport {
    /// True when every pole is a root of unity of order at most the search bound.
    pub fn is_fully_cyclotomic(&self) -> bool {
        self.remainder.is_constant()
    }
}

/// Cyclotomic polynomials `Phi_1 .. Phi_max` (index 0 unused).
pub fn cyclotomic_polys(max: u64) -> Vec<Vec<Rational>> {
    let mut phis: Vec<Vec<Rational>> = vec![Vec::new()];
    for n in 1..=max {
        let mut p = vec![Rational::from_integer(BigInt::from(0)); n as usize + 1];
        p[0] = Rational::from_integer(BigInt::from(-1));
        p[n as usize] = Rational::from_integer(BigInt::from(1));
        for d in (1..n).filter(|d| n % d == 0) {
            p = upoly::exact_div(&p, &phis[d as usize]).expect("Phi_d divides q^n - 1");
        }
        phis.push(p);
    }
    phis
}

/// `Phi_n` as a polynomial in `q`.
pub fn cyclotomic(n: u64) -> LaurentPoly {
    assert!(n >= 1);
    let phis = cyclotomic_polys(n);
    LaurentPoly::from_coeffs(0, phis[n as usize].clone())
}

/// Trial-divides the denominator of `f` by `Phi_1 .. Phi_max_order`.
pub fn pole_orders(f: &QRatFn, max_order: u64) -> PoleReport {
    let phis = cyclotomic_polys(max_order);
    let mut rest = f.den().coeffs_raw().to_vec();
    let mut orders = Vec::new();
    for n in 1..=max_order {
        let phi = &phis[n as usize];
        let mut mult = 0;
        while rest.len() > 1 {
            match upoly::exact_div(&rest, phi) {
                Some(q) => {
                    rest = q;
                    mult += 1;
                }
                None => break,
            }
        }
        if mult > 0 {
            orders.push((n, mult));
        }
    }
    PoleReport {
        orders,
        remainder: LaurentPoly::from_coeffs(0, rest),
    }
}
