use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

use super::laurent::{render_terms, TermStyle};
use super::upoly;
use super::LaurentPoly;
use crate::error::{Error, Result};
use crate::exactalg::Rational;

/// Element of `Q(q)` in canonical form.
///
/// The value is `num / den` where `den` is a polynomial with nonzero
/// constant term and positive leading coefficient, every power of `q` lives
/// in `num`, both parts have integer coefficients with no common content,
/// and `num` and `den` are coprime. Structural equality is therefore
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QRatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// JSON form of a rational function: exponent -> coefficient string.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QRatFnJson {
    pub num: BTreeMap<i64, String>,
    pub den: BTreeMap<i64, String>,
}

impl QRatFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonical(num, den))
    }

    pub fn zero() -> Self {
        QRatFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        QRatFn {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// `q^e`
    pub fn q_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        canonical(p, LaurentPoly::one())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The Laurent polynomial equal to `self`, if the denominator is constant.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if !self.den.is_constant() {
            return None;
        }
        Some(self.num.scale(&self.den.coeff(0).recip()))
    }

    pub fn checked_div(&self, rhs: &QRatFn) -> Result<QRatFn> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(canonical(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<QRatFn> {
        QRatFn::one().checked_div(self)
    }

    pub fn pow(&self, e: u32) -> QRatFn {
        canonical(self.num.pow(e), self.den.pow(e))
    }

    /// Integer power; negative exponents require `self != 0`.
    pub fn powi(&self, e: i64) -> Result<QRatFn> {
        if e >= 0 {
            Ok(self.pow(e as u32))
        } else {
            self.inv().map(|i| i.pow((-e) as u32))
        }
    }

    /// `f(1/q)`
    pub fn substitute_q_inverse(&self) -> QRatFn {
        canonical(self.num.substitute_inverse(), self.den.substitute_inverse())
    }

    /// `f(q^k)` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> QRatFn {
        canonical(self.num.substitute_power(k), self.den.substitute_power(k))
    }

    /// Value (or removable limit) at `q = 1`.
    pub fn evaluate_at_q1(&self) -> Result<Rational> {
        let one = Rational::one();
        let d = self.den.eval(&one);
        if d.is_zero() {
            // Coprime canonical form: a root of den at 1 is a genuine pole.
            return Err(Error::PoleAtOne);
        }
        Ok(self.num.eval(&one) / d)
    }

    /// Power-series expansion around `q = 0`, truncated after `q^max_exp`.
    ///
    /// Always defined because the canonical denominator has a nonzero
    /// constant term.
    pub fn expand_series(&self, max_exp: i64) -> LaurentPoly {
        let Some(a) = self.num.low_exp() else {
            return LaurentPoly::zero();
        };
        if max_exp < a {
            return LaurentPoly::zero();
        }
        let n = (max_exp - a + 1) as usize;
        let num = self.num.coeffs_raw();
        let den = self.den.coeffs_raw();
        let d0_inv = den[0].recip();
        let mut s: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
            for i in 1..=k.min(den.len() - 1) {
                acc -= &den[i] * &s[k - i];
            }
            s.push(acc * &d0_inv);
        }
        LaurentPoly::from_coeffs(a, s)
    }

    pub fn render_text(&self) -> String {
        if self.den.is_one() {
            return self.num.render_text();
        }
        let wrap = |p: &LaurentPoly| {
            let s = p.render_text();
            if p.num_terms() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }

    pub fn render_latex(&self) -> String {
        if self.den.is_one() {
            return render_terms(&self.num, TermStyle::Latex);
        }
        format!(
            "\\frac{{{}}}{{{}}}",
            render_terms(&self.num, TermStyle::Latex),
            render_terms(&self.den, TermStyle::Latex)
        )
    }

    pub fn to_json(&self) -> QRatFnJson {
        QRatFnJson {
            num: self.num.to_json_map(),
            den: self.den.to_json_map(),
        }
    }

    pub fn from_json(j: &QRatFnJson) -> Result<QRatFn> {
        QRatFn::new(
            LaurentPoly::from_json_map(&j.num)?,
            LaurentPoly::from_json_map(&j.den)?,
        )
    }
}

fn to_ints(p: &[Rational]) -> Vec<BigInt> {
    p.iter().map(|c| c.to_integer()).collect()
}

fn from_ints(p: Vec<BigInt>) -> LaurentPoly {
    LaurentPoly::from_coeffs(0, p.into_iter().map(Rational::from_integer).collect())
}

/// `sum_k coeffs[k] x^k`, accumulated over a common denominator so that
/// only the final result is reduced.
pub fn eval_polynomial(coeffs: &[QRatFn], x: &QRatFn) -> QRatFn {
    let Some(m) = coeffs.len().checked_sub(1) else {
        return QRatFn::zero();
    };
    // Canonical denominators are integral polynomials with zero low exponent.
    let mut lcm = vec![BigInt::one()];
    for c in coeffs.iter().filter(|c| !c.is_zero()) {
        let d = to_ints(c.den.coeffs_raw());
        let g = upoly::gcd_int(&lcm, &d);
        let cofactor = upoly::exact_div_int(&d, &g).expect("gcd divides");
        lcm = to_ints((&from_ints(lcm) * &from_ints(cofactor)).coeffs_raw());
    }
    let lcm_poly = from_ints(lcm.clone());
    let scaled: Vec<LaurentPoly> = coeffs
        .iter()
        .map(|c| {
            if c.is_zero() {
                return LaurentPoly::zero();
            }
            let cof = upoly::exact_div_int(&lcm, &to_ints(c.den.coeffs_raw())).expect("lcm is a multiple");
            &c.num * &from_ints(cof)
        })
        .collect();
    let (a, b) = (&x.num, &x.den);
    let mut b_pow = LaurentPoly::one();
    let mut acc = scaled[m].clone();
    for k in (0..m).rev() {
        b_pow = &b_pow * b;
        acc = &(&acc * a) + &(&scaled[k] * &b_pow);
    }
    canonical(acc, &lcm_poly * &b_pow)
}

fn canonical(num: LaurentPoly, den: LaurentPoly) -> QRatFn {
    debug_assert!(!den.is_zero());
    if num.is_zero() {
        return QRatFn::zero();
    }
    let shift = num.low_raw() - den.low_raw();

    // Clear denominators jointly, so the ratio is unchanged.
    let l = num
        .coeffs_raw()
        .iter()
        .chain(den.coeffs_raw())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let to_int = |c: &Rational| (c * Rational::from_integer(l.clone())).to_integer();
    let mut n: Vec<BigInt> = num.coeffs_raw().iter().map(to_int).collect();
    let mut d: Vec<BigInt> = den.coeffs_raw().iter().map(to_int).collect();

    if d.len() > 1 && n.len() > 1 {
        let g = upoly::gcd_int(&n, &d);
        if g.len() > 1 {
            n = upoly::exact_div_int(&n, &g).expect("gcd divides numerator");
            d = upoly::exact_div_int(&d, &g).expect("gcd divides denominator");
        }
    }

    let mut g = upoly::content(&n).gcd(&upoly::content(&d));
    if d.last().unwrap().is_negative() {
        g = -g;
    }
    let scale = |v: Vec<BigInt>| -> Vec<Rational> { v.into_iter().map(|c| Rational::from_integer(c / &g)).collect() };
    let n = scale(n);
    let d = scale(d);

    QRatFn {
        num: LaurentPoly::from_coeffs(shift, n),
        den: LaurentPoly::from_coeffs(0, d),
    }
}

impl From<LaurentPoly> for QRatFn {
    fn from(p: LaurentPoly) -> Self {
        QRatFn::from_laurent(p)
    }
}

impl Add for &QRatFn {
    type Output = QRatFn;
    fn add(self, rhs: &QRatFn) -> QRatFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return canonical(&self.num + &rhs.num, self.den.clone());
        }
        canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Neg for &QRatFn {
    type Output = QRatFn;
    fn neg(self) -> QRatFn {
        QRatFn {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for QRatFn {
    type Output = QRatFn;
    fn neg(self) -> QRatFn {
        -&self
    }
}

impl Sub for &QRatFn {
    type Output = QRatFn;
    fn sub(self, rhs: &QRatFn) -> QRatFn {
        self + &(-rhs)
    }
}

impl Mul for &QRatFn {
    type Output = QRatFn;
    fn mul(self, rhs: &QRatFn) -> QRatFn {
        if self.is_zero() || rhs.is_zero() {
            return QRatFn::zero();
        }
        canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for QRatFn {
            type Output = QRatFn;
            fn $m(self, rhs: QRatFn) -> QRatFn {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&QRatFn> for QRatFn {
            type Output = QRatFn;
            fn $m(self, rhs: &QRatFn) -> QRatFn {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Sum for QRatFn {
    fn sum<I: Iterator<Item = QRatFn>>(iter: I) -> QRatFn {
        iter.fold(QRatFn::zero(), |a, b| a + b)
    }
}

impl fmt::Display for QRatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}
