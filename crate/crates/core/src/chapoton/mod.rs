//! Assembly of the polynomial `C(q, x)` with `C(q, [t]_q) = sum_{m in tP} q^lambda(m)`
//! from the vertex-cone transforms, plus its structural checks.

mod qxpoly;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::conezeta::rho;
use crate::error::{Error, Result};
use crate::exactalg::{format_rational, parse_rational, IntVector, RatVector, Rational};
use crate::oracle::oracle_count;
use crate::polytope::{check_generic_positive, IntegralForm, Polytope};
use crate::qfield::{q_bracket, LaurentPoly, QRatFn, QRatFnJson};

pub use qxpoly::QXPoly;

/// Per-vertex data the polynomial was assembled from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexDatum {
    pub vertex: RatVector,
    /// `lambda(p v)`
    pub value: BigInt,
    /// Transform of the vertex cone shifted by `r v`.
    pub rho: QRatFn,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChapotonMeta {
    pub lambda: IntegralForm,
    pub dim: usize,
    pub period: u64,
    pub residue: u64,
    /// Set on the polynomial produced by [`ChapotonPolynomial::reciprocal`].
    pub interior: bool,
    pub vertex_data: Vec<VertexDatum>,
}

/// A polynomial in `x` over `Q(q)` together with the data it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChapotonPolynomial {
    pub poly: QXPoly,
    pub meta: ChapotonMeta,
}

fn vertex_data(poly: &Polytope, lambda: &IntegralForm, r: u64) -> Result<Vec<VertexDatum>> {
    (0..poly.num_vertices())
        .into_par_iter()
        .map(|v| {
            Ok(VertexDatum {
                vertex: poly.vertex(v).clone(),
                value: lambda.at_int(&poly.scaled_vertex(v)),
                rho: rho(poly, v, lambda, r)?,
            })
        })
        .collect()
}

fn period_of(poly: &Polytope) -> Result<u64> {
    poly.denominator()
        .to_u64()
        .ok_or_else(|| Error::Validation(format!("denominator {} too large", poly.denominator())))
}

fn exponent_u32(n: &BigInt) -> Result<u32> {
    n.to_u32()
        .ok_or_else(|| Error::Validation(format!("vertex value {n} is not a small nonnegative integer")))
}

/// `(q - 1)`
fn q_minus_one() -> QRatFn {
    QRatFn::from_laurent(LaurentPoly::from_i64s(&[-1, 1]))
}

/// `(q - 1) x + 1`
fn shifted_x() -> QXPoly {
    QXPoly::linear(q_minus_one(), QRatFn::one())
}

/// The polynomial of a lattice polytope, with coefficient of `x^k` equal to
/// `(q - 1)^k sum_v binom(lambda(v), k) rho_v(q)`.
pub fn chapoton_polynomial(poly: &Polytope, lambda: &IntegralForm) -> Result<ChapotonPolynomial> {
    if !poly.is_lattice() {
        return Err(Error::NotLattice(poly.denominator().to_string()));
    }
    check_generic_positive(poly, lambda).into_result()?;
    let data = vertex_data(poly, lambda, 0)?;
    let m = data.iter().map(|d| d.value.clone()).max().unwrap_or_else(BigInt::zero);
    let m = exponent_u32(&m)?;
    let coeffs = (0..=m)
        .map(|k| {
            let kb = BigInt::from(k);
            let sum: QRatFn = data
                .iter()
                .filter(|d| d.value >= kb)
                .map(|d| &d.rho * &QRatFn::constant(Rational::from_integer(binomial(d.value.clone(), kb.clone()))))
                .sum();
            &q_minus_one().pow(k) * &sum
        })
        .collect();
    Ok(ChapotonPolynomial {
        poly: QXPoly::from_coeffs(coeffs),
        meta: ChapotonMeta {
            lambda: lambda.clone(),
            dim: poly.dim(),
            period: 1,
            residue: 0,
            interior: false,
            vertex_data: data,
        },
    })
}

/// The `p` constituents `C^r = sum_v rho_r(v) ((q - 1) x + 1)^lambda(p v)`,
/// `r = 0..p`, with `C^r(q, [k]_q)` the weighted count of `(kp + r) P`.
pub fn constituents(poly: &Polytope, lambda: &IntegralForm) -> Result<Vec<ChapotonPolynomial>> {
    check_generic_positive(poly, lambda).into_result()?;
    let p = period_of(poly)?;
    let base = shifted_x();
    (0..p)
        .map(|r| {
            let data = vertex_data(poly, lambda, r)?;
            let mut acc = QXPoly::zero();
            for d in &data {
                acc = &acc + &base.pow(exponent_u32(&d.value)?).scale(&d.rho);
            }
            Ok(ChapotonPolynomial {
                poly: acc,
                meta: ChapotonMeta {
                    lambda: lambda.clone(),
                    dim: poly.dim(),
                    period: p,
                    residue: r,
                    interior: false,
                    vertex_data: data,
                },
            })
        })
        .collect()
}

/// Checks `(-1)^dim C^r(1/q, -q [k]_q)` against the brute-force interior
/// count of `(kp - r) P`.
pub fn rational_reciprocity_check(poly: &Polytope, lambda: &IntegralForm, k: u64, r: u64) -> Result<bool> {
    let cs = constituents(poly, lambda)?;
    let p = cs.len() as u64;
    if k == 0 || r >= p {
        return Err(Error::Validation(format!("need k > 0 and 0 <= r < {p}")));
    }
    let value = cs[r as usize].reciprocal().evaluate(k as i64);
    let oracle = oracle_count(poly, lambda, k * p - r, true)?;
    Ok(value == QRatFn::from_laurent(oracle.sum))
}

impl ChapotonPolynomial {
    pub fn coefficients(&self) -> &[QRatFn] {
        self.poly.coeffs()
    }

    pub fn coefficient(&self, k: usize) -> QRatFn {
        self.poly.coeff(k)
    }

    pub fn degree(&self) -> usize {
        self.poly.degree().unwrap_or(0)
    }

    pub fn leading_coefficient(&self) -> QRatFn {
        self.poly.coeffs().last().cloned().unwrap_or_else(QRatFn::zero)
    }

    pub fn constant_term(&self) -> QRatFn {
        self.poly.coeff(0)
    }

    /// Value at `x = [t]_q`; negative `t` is allowed.
    pub fn evaluate(&self, t: i64) -> QRatFn {
        self.poly.evaluate(&q_bracket(t))
    }

    /// Value at `x = 1/(1 - q)`, the formal limit `t -> infinity` of `[t]_q`.
    pub fn evaluate_limit(&self) -> QRatFn {
        let x = QRatFn::one()
            .checked_div(&QRatFn::from_laurent(LaurentPoly::from_i64s(&[1, -1])))
            .expect("1 - q is nonzero");
        self.poly.evaluate(&x)
    }

    /// `(-1)^dim C(1/q, -q x)`: the polynomial of the relative interior.
    pub fn reciprocal(&self) -> ChapotonPolynomial {
        let odd = self.meta.dim % 2 == 1;
        let poly = self.poly.map_coeffs(|k, c| {
            let mut v = &c.substitute_q_inverse() * &QRatFn::q_pow(k as i64);
            if odd != (k % 2 == 1) {
                v = -v;
            }
            v
        });
        let mut meta = self.meta.clone();
        meta.interior = !meta.interior;
        ChapotonPolynomial { poly, meta }
    }

    pub fn render_text(&self) -> String {
        self.poly.render_text()
    }

    pub fn render_latex(&self) -> String {
        self.poly.render_latex()
    }

    pub fn to_json(&self) -> ChapotonJson {
        ChapotonJson {
            coefficients: self.poly.coeffs().iter().map(QRatFn::to_json).collect(),
            meta: MetaJson {
                lambda: self.meta.lambda.coeffs().iter().map(|c| c.to_string()).collect(),
                dim: self.meta.dim,
                period: self.meta.period,
                residue: self.meta.residue,
                interior: self.meta.interior,
                vertex_data: self
                    .meta
                    .vertex_data
                    .iter()
                    .map(|d| VertexJson {
                        vertex: d.vertex.iter().map(format_rational).collect(),
                        value: d.value.to_string(),
                        rho: d.rho.to_json(),
                    })
                    .collect(),
            },
        }
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("serializable")
    }

    pub fn from_json(j: &ChapotonJson) -> Result<ChapotonPolynomial> {
        let coeffs = j.coefficients.iter().map(QRatFn::from_json).collect::<Result<Vec<_>>>()?;
        let lambda = j
            .meta
            .lambda
            .iter()
            .map(|s| parse_integer(s))
            .collect::<Result<Vec<_>>>()?;
        let vertex_data = j
            .meta
            .vertex_data
            .iter()
            .map(|d| {
                Ok(VertexDatum {
                    vertex: RatVector::new(d.vertex.iter().map(|s| parse_rational(s)).collect::<Result<_>>()?),
                    value: parse_integer(&d.value)?,
                    rho: QRatFn::from_json(&d.rho)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ChapotonPolynomial {
            poly: QXPoly::from_coeffs(coeffs),
            meta: ChapotonMeta {
                lambda: IntegralForm::new(IntVector::new(lambda)),
                dim: j.meta.dim,
                period: j.meta.period,
                residue: j.meta.residue,
                interior: j.meta.interior,
                vertex_data,
            },
        })
    }

    pub fn from_json_str(s: &str) -> Result<ChapotonPolynomial> {
        let j: ChapotonJson = serde_json::from_str(s).map_err(|e| Error::Validation(e.to_string()))?;
        ChapotonPolynomial::from_json(&j)
    }
}

fn parse_integer(s: &str) -> Result<BigInt> {
    let r = parse_rational(s)?;
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::ParseRational(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChapotonJson {
    pub coefficients: Vec<QRatFnJson>,
    pub meta: MetaJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetaJson {
    pub lambda: Vec<String>,
    pub dim: usize,
    pub period: u64,
    pub residue: u64,
    pub interior: bool,
    pub vertex_data: Vec<VertexJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexJson {
    pub vertex: Vec<String>,
    pub value: String,
    pub rho: QRatFnJson,
}

#[cfg(test)]
mod tests;
