use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::exactalg::{format_rational, Rational};

/// Finitely supported Laurent polynomial in `q` with rational coefficients.
///
/// Stored densely from the lowest exponent; the first and last stored
/// coefficients are nonzero, and zero is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly {
            low: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// `q^exp`
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(Rational::one(), exp)
    }

    /// Coefficients `coeffs[i]` of `q^(low + i)`, trimmed on both ends.
    pub fn from_coeffs(low: i64, mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        LaurentPoly {
            low: low + lead as i64,
            coeffs,
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let mut map: BTreeMap<i64, Rational> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        let Some((&lo, _)) = map.iter().next() else {
            return Self::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in map {
            coeffs[(e - lo) as usize] = c;
        }
        Self::from_coeffs(lo, coeffs)
    }

    /// Polynomial with integer coefficients given from `q^0` upward.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(0, coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// True when there are no negative exponents.
    pub fn is_polynomial(&self) -> bool {
        self.is_zero() || self.low >= 0
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn coeff(&self, exp: i64) -> Rational {
        if exp < self.low {
            return Rational::zero();
        }
        self.coeffs
            .get((exp - self.low) as usize)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        let low = self.low;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (low + i as i64, c))
    }

    pub(crate) fn low_raw(&self) -> i64 {
        self.low
    }

    pub(crate) fn coeffs_raw(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of the highest exponent.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(1/q)`
    pub fn substitute_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly {
            low: -self.high_exp().unwrap(),
            coeffs,
        }
    }

    /// `f(q^k)` for a nonzero integer `k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        assert!(k != 0, "substitution q -> q^0 is not invertible");
        Self::from_terms(self.terms().map(|(e, c)| (e * k, c.clone())))
    }

    /// Evaluation at a rational point; `q = 0` requires no negative exponents.
    pub fn eval(&self, q: &Rational) -> Rational {
        if self.is_zero() {
            return Rational::zero();
        }
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c;
        }
        if self.low >= 0 {
            acc * q.pow(self.low as i32)
        } else {
            assert!(!q.is_zero(), "negative exponent evaluated at q = 0");
            acc / q.pow((-self.low) as i32)
        }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Terms of exponent at most `max_exp`.
    pub fn truncate(&self, max_exp: i64) -> Self {
        Self::from_terms(self.terms().filter(|(e, _)| *e <= max_exp).map(|(e, c)| (e, c.clone())))
    }

    pub fn render_text(&self) -> String {
        render_terms(self, TermStyle::Text)
    }

    pub fn render_latex(&self) -> String {
        render_terms(self, TermStyle::Latex)
    }

    /// Exponent -> coefficient string, for the JSON form.
    pub fn to_json_map(&self) -> BTreeMap<i64, String> {
        self.terms().map(|(e, c)| (e, format_rational(c))).collect()
    }

    pub fn from_json_map(map: &BTreeMap<i64, String>) -> crate::Result<Self> {
        let terms = map
            .iter()
            .map(|(e, c)| crate::exactalg::parse_rational(c).map(|c| (*e, c)))
            .collect::<crate::Result<Vec<_>>>()?;
        Ok(Self::from_terms(terms))
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::constant(Rational::from_integer(c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_exp().unwrap().max(rhs.high_exp().unwrap());
        let mut coeffs = vec![Rational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - low) as usize + i] += c;
        }
        LaurentPoly::from_coeffs(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            low: self.low,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_coeffs(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

#[derive(Clone, Copy)]
pub(crate) enum TermStyle {
    Text,
    Latex,
}

fn render_power(e: i64, style: TermStyle) -> String {
    match (e, style) {
        (1, _) => "q".to_string(),
        (_, TermStyle::Text) => format!("q^{e}"),
        (_, TermStyle::Latex) => format!("q^{{{e}}}"),
    }
}

fn render_coeff(c: &Rational, style: TermStyle) -> String {
    match style {
        TermStyle::Text => format_rational(c),
        TermStyle::Latex if c.is_integer() => c.numer().to_string(),
        TermStyle::Latex => format!("\\tfrac{{{}}}{{{}}}", c.numer(), c.denom()),
    }
}

/// One term with a nonnegative coefficient magnitude.
fn render_term(e: i64, c: &Rational, style: TermStyle) -> String {
    if e == 0 {
        return render_coeff(c, style);
    }
    let p = render_power(e, style);
    if c.is_one() {
        p
    } else {
        match style {
            TermStyle::Text => format!("{}*{}", render_coeff(c, style), p),
            TermStyle::Latex => format!("{} {}", render_coeff(c, style), p),
        }
    }
}

/// Expanded form, exponents descending, e.g. `2*q^2 + q - 1`.
pub(crate) fn render_terms(p: &LaurentPoly, style: TermStyle) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (e, c)) in p.terms().rev().enumerate() {
        let neg = c.is_negative();
        let body = render_term(e, &c.abs(), style);
        match (i, neg) {
            (0, false) => out.push_str(&body),
            (0, true) => {
                out.push('-');
                out.push_str(&body);
            }
            (_, false) => {
                out.push_str(" + ");
                out.push_str(&body);
            }
            (_, true) => {
                out.push_str(" - ");
                out.push_str(&body);
            }
        }
    }
    out
}
