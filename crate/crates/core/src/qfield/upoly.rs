//! Dense univariate polynomials over the rationals, `p[i]` the coefficient of `q^i`.
//! Internal helpers for gcd and exact division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::exactalg::Rational;

pub(crate) fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = trim(a.to_vec());
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    let mut quot = vec![Rational::zero(); r.len() - db];
    while r.len() > db && !r.is_empty() {
        let shift = r.len() - 1 - db;
        let f = &r[r.len() - 1] * &lead_inv;
        for (i, c) in b.iter().enumerate() {
            if !c.is_zero() {
                r[shift + i] -= &f * c;
            }
        }
        quot[shift] = f;
        r.pop();
        r = trim(r);
    }
    (trim(quot), r)
}

/// `a / b` when `b` divides `a`, otherwise `None`.
pub(crate) fn exact_div(a: &[Rational], b: &[Rational]) -> Option<Vec<Rational>> {
    let (q, r) = divrem(a, b);
    r.is_empty().then_some(q)
}

fn trim_int(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

/// `p / content(p)`, with positive leading coefficient.
pub(crate) fn primitive_part(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = trim_int(p);
    let Some(lead) = p.last() else {
        return p;
    };
    let mut c = content(&p);
    if lead.is_negative() {
        c = -c;
    }
    if c.is_one() {
        return p;
    }
    p.into_iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = trim_int(a.to_vec());
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let lr = r.last().unwrap().clone();
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &lr * c;
        }
        r = trim_int(r);
    }
    r
}

/// Gcd of integer polynomials by the primitive remainder sequence; the
/// result is primitive with positive leading coefficient.
pub(crate) fn gcd_int(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut x = primitive_part(a.to_vec());
    let mut y = primitive_part(b.to_vec());
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        if y.len() == 1 {
            return vec![BigInt::one()];
        }
        let r = primitive_part(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    x
}

/// `a / b` over the integers when `b` divides `a` exactly.
pub(crate) fn exact_div_int(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let b = trim_int(b.to_vec());
    let mut r = trim_int(a.to_vec());
    let db = b.len().checked_sub(1)?;
    if r.len() < b.len() {
        return r.is_empty().then(Vec::new);
    }
    let mut quot = vec![BigInt::zero(); r.len() - db];
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let (f, rem) = r.last().unwrap().div_rem(&b[db]);
        if !rem.is_zero() {
            return None;
        }
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &f * c;
        }
        quot[shift] = f;
        r = trim_int(r);
    }
    r.is_empty().then(|| trim_int(quot))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::int_rat;

    fn p(c: &[i64]) -> Vec<Rational> {
        c.iter().map(|&x| int_rat(x)).collect()
    }

    fn z(c: &[i64]) -> Vec<BigInt> {
        c.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn integer_gcd_and_division() {
        // (2q - 1)(q + 3) and (2q - 1)(q^2 + 1)
        let a = z(&[-3, 5, 2]);
        let b = z(&[-1, 2, -1, 2]);
        assert_eq!(gcd_int(&a, &b), z(&[-1, 2]));
        assert_eq!(gcd_int(&z(&[2, 4]), &z(&[3])), z(&[1]));
        assert_eq!(exact_div_int(&a, &z(&[-1, 2])), Some(z(&[3, 1])));
        assert_eq!(exact_div_int(&a, &z(&[1, 1])), None);
    }

    #[test]
    fn division() {
        let (q, r) = divrem(&p(&[-1, 0, 0, 1]), &p(&[-1, 1]));
        assert_eq!(q, p(&[1, 1, 1]));
        assert!(r.is_empty());
        assert_eq!(exact_div(&p(&[1, 0, 1]), &p(&[1, 1])), None);
    }
}
