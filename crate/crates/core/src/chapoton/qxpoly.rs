use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::qfield::{eval_polynomial, LaurentPoly, QRatFn};

/// Polynomial in `x` with coefficients in `Q(q)`, stored densely from `x^0`
/// upward with no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QXPoly {
    coeffs: Vec<QRatFn>,
}

impl QXPoly {
    pub fn zero() -> Self {
        QXPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QXPoly::constant(QRatFn::one())
    }

    pub fn constant(c: QRatFn) -> Self {
        QXPoly::from_coeffs(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        QXPoly::from_coeffs(vec![QRatFn::zero(), QRatFn::one()])
    }

    /// `a x + b`
    pub fn linear(a: QRatFn, b: QRatFn) -> Self {
        QXPoly::from_coeffs(vec![b, a])
    }

    pub fn from_coeffs(mut coeffs: Vec<QRatFn>) -> Self {
        while coeffs.last().is_some_and(QRatFn::is_zero) {
            coeffs.pop();
        }
        QXPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QRatFn] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> QRatFn {
        self.coeffs.get(k).cloned().unwrap_or_else(QRatFn::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &QRatFn) -> QXPoly {
        QXPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn map_coeffs(&self, f: impl Fn(usize, &QRatFn) -> QRatFn) -> QXPoly {
        QXPoly::from_coeffs(self.coeffs.iter().enumerate().map(|(k, c)| f(k, c)).collect())
    }

    pub fn pow(&self, mut e: u32) -> QXPoly {
        let mut base = self.clone();
        let mut acc = QXPoly::one();
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

    /// `self(inner(x))`
    pub fn compose(&self, inner: &QXPoly) -> QXPoly {
        self.coeffs
            .iter()
            .rev()
            .fold(QXPoly::zero(), |acc, c| &(&acc * inner) + &QXPoly::constant(c.clone()))
    }

    pub fn evaluate(&self, x: &QRatFn) -> QRatFn {
        eval_polynomial(&self.coeffs, x)
    }

    /// Text form with descending powers of `x`, e.g.
    /// `q^3/(q + 1)*x^2 + (2*q^2 + q)/(q + 1)*x + 1`.
    pub fn render_text(&self) -> String {
        self.render(Style::Text)
    }

    pub fn render_latex(&self) -> String {
        self.render(Style::Latex)
    }

    fn render(&self, style: Style) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (neg, body) = render_coeff_term(c, k, style);
            match (out.is_empty(), neg) {
                (true, false) => {}
                (true, true) => out.push('-'),
                (false, false) => out.push_str(" + "),
                (false, true) => out.push_str(" - "),
            }
            out.push_str(&body);
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Style {
    Text,
    Latex,
}

fn x_power(k: usize, style: Style) -> String {
    match (k, style) {
        (1, _) => "x".to_string(),
        (_, Style::Text) => format!("x^{k}"),
        (_, Style::Latex) => format!("x^{{{k}}}"),
    }
}

/// A single-term numerator with negative sign is pulled out so the term can
/// be joined with ` - `.
fn render_coeff_term(c: &QRatFn, k: usize, style: Style) -> (bool, String) {
    let neg = c.num().num_terms() == 1 && c.num().leading_coeff().is_some_and(|a| a.is_negative());
    let c = if neg { -c } else { c.clone() };
    let text = match style {
        Style::Text => c.render_text(),
        Style::Latex => c.render_latex(),
    };
    if k == 0 {
        return (neg, text);
    }
    let xp = x_power(k, style);
    if c.is_one() {
        return (neg, xp);
    }
    let is_sum = c.den().is_one() && c.num().num_terms() > 1;
    let body = match (style, is_sum) {
        (Style::Text, true) => format!("({text})*{xp}"),
        (Style::Text, false) => format!("{text}*{xp}"),
        (Style::Latex, true) => format!("\\left({text}\\right) {xp}"),
        (Style::Latex, false) => format!("{text} {xp}"),
    };
    (neg, body)
}

impl fmt::Display for QXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

impl From<QRatFn> for QXPoly {
    fn from(c: QRatFn) -> Self {
        QXPoly::constant(c)
    }
}

impl From<LaurentPoly> for QXPoly {
    fn from(c: LaurentPoly) -> Self {
        QXPoly::constant(QRatFn::from_laurent(c))
    }
}

impl Add for &QXPoly {
    type Output = QXPoly;
    fn add(self, rhs: &QXPoly) -> QXPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QXPoly::from_coeffs((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &QXPoly {
    type Output = QXPoly;
    fn sub(self, rhs: &QXPoly) -> QXPoly {
        self + &(-rhs)
    }
}

impl Neg for &QXPoly {
    type Output = QXPoly;
    fn neg(self) -> QXPoly {
        QXPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &QXPoly {
    type Output = QXPoly;
    fn mul(self, rhs: &QXPoly) -> QXPoly {
        if self.is_zero() || rhs.is_zero() {
            return QXPoly::zero();
        }
        let mut out = vec![QRatFn::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        QXPoly::from_coeffs(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for QXPoly {
            type Output = QXPoly;
            fn $m(self, rhs: QXPoly) -> QXPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for QXPoly {
    type Output = QXPoly;
    fn neg(self) -> QXPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qfield::q_bracket;

    fn lp(c: &[i64]) -> QRatFn {
        QRatFn::from_laurent(LaurentPoly::from_i64s(c))
    }

    #[test]
    fn arithmetic() {
        // (1 + q x)^2
        let p = QXPoly::linear(lp(&[0, 1]), QRatFn::one()).pow(2);
        assert_eq!(p.coeffs(), &[lp(&[1]), lp(&[0, 2]), lp(&[0, 0, 1])]);
        assert_eq!(p.degree(), Some(2));
        assert!((&p - &p).is_zero());
        assert_eq!(p.evaluate(&q_bracket(2)), lp(&[1, 1, 1]).pow(2));
    }

    #[test]
    fn composition() {
        let p = QXPoly::from_coeffs(vec![lp(&[1]), lp(&[0, 1])]); // 1 + q x
        let inner = QXPoly::linear(lp(&[0, 1]), QRatFn::one()); // 1 + q x
        let c = p.compose(&inner);
        assert_eq!(c.coeffs(), &[lp(&[1, 1]), lp(&[0, 0, 1])]);
        for t in 0..4 {
            assert_eq!(c.evaluate(&q_bracket(t)), p.evaluate(&q_bracket(t + 1)));
        }
    }

    #[test]
    fn text() {
        let q3 = QRatFn::q_pow(3).checked_div(&lp(&[1, 1])).unwrap();
        let mid = lp(&[0, 1, 2]).checked_div(&lp(&[1, 1])).unwrap();
        let p = QXPoly::from_coeffs(vec![QRatFn::one(), mid, q3]);
        assert_eq!(p.render_text(), "q^3/(q + 1)*x^2 + (2*q^2 + q)/(q + 1)*x + 1");
        let cube = QXPoly::from_coeffs(vec![lp(&[1]), lp(&[0, 2]), lp(&[0, 0, 1])]);
        assert_eq!(cube.render_text(), "q^2*x^2 + 2*q*x + 1");
        let signs = QXPoly::from_coeffs(vec![lp(&[-1]), lp(&[1, 1]), lp(&[-1])]);
        assert_eq!(signs.render_text(), "-x^2 + (q + 1)*x - 1");
        assert_eq!(QXPoly::zero().render_text(), "0");
    }

    #[test]
    fn latex() {
        let q3 = QRatFn::q_pow(3).checked_div(&lp(&[1, 1])).unwrap();
        let p = QXPoly::from_coeffs(vec![QRatFn::one(), lp(&[1, 1]), q3]);
        assert_eq!(p.render_latex(), "\\frac{q^{3}}{q + 1} x^{2} + \\left(q + 1\\right) x + 1");
    }
}
