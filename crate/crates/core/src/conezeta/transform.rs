use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::halfopen::{half_open_decompose, ConeDecomposition, HalfOpenSimplicialCone};
use super::triangulate::triangulate;
use crate::error::{Error, Result};
use crate::exactalg::{ceil, floor, IntVector, RatVector, Rational};
use crate::polytope::{vertex_cone, IntegralForm, Polytope};
use crate::qfield::{LaurentPoly, QRatFn};

/// A cone transform evaluated at `z_i = q^{lambda_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializedTransform {
    pub value: QRatFn,
    /// `lambda(g)` for each generator, i.e. the factor `1 - q^n` before
    /// normalization.
    pub denominator_factors: Vec<i64>,
}

/// Lattice points of the half-open fundamental parallelepiped of `c`,
/// sorted lexicographically.
pub fn parallelepiped_points(c: &HalfOpenSimplicialCone) -> Vec<IntVector> {
    if c.generators.is_empty() {
        return c.shift.to_integer().into_iter().collect();
    }
    let (chart, inv) = c.coordinates_solver();
    let ranges: Vec<std::ops::RangeInclusive<i64>> = chart
        .iter()
        .map(|&j| {
            let mut lo = c.shift[j].clone();
            let mut hi = c.shift[j].clone();
            for g in &c.generators {
                let x = Rational::from_integer(g[j].clone());
                if x.is_negative() {
                    lo += x;
                } else {
                    hi += x;
                }
            }
            let lo = ceil(&lo).to_i64().expect("box bound fits in i64");
            let hi = floor(&hi).to_i64().expect("box bound fits in i64");
            lo..=hi
        })
        .collect();

    let mut out = Vec::new();
    for y in ranges.into_iter().multi_cartesian_product() {
        // Only the chart coordinates are enumerated; the rest of the point
        // is fixed by the coefficients and checked for integrality below.
        let rel = RatVector::new(
            chart
                .iter()
                .zip(&y)
                .map(|(&j, &yj)| Rational::from_integer(BigInt::from(yj)) - &c.shift[j])
                .collect(),
        );
        let a = inv.mul_vec(&rel);
        let in_range = a.iter().zip(&c.open).all(|(ai, &open)| {
            if open {
                ai.is_positive() && *ai <= Rational::one()
            } else {
                !ai.is_negative() && *ai < Rational::one()
            }
        });
        if !in_range {
            continue;
        }
        let mut m = c.shift.clone();
        for (ai, g) in a.iter().zip(&c.generators) {
            m = &m + &g.to_rational().scale(ai);
        }
        if let Some(m) = m.to_integer() {
            out.push(m);
        }
    }
    out.sort();
    out
}

fn exponent(n: &BigInt) -> Result<i64> {
    n.to_i64()
        .ok_or_else(|| Error::Validation(format!("exponent {n} out of range")))
}

/// `(sum q^{lambda(m)}) / prod (1 - q^{lambda(g)})` over the parallelepiped
/// points `m` and generators `g` of `c`.
pub fn specialize(c: &HalfOpenSimplicialCone, lambda: &IntegralForm) -> Result<SpecializedTransform> {
    let mut factors = Vec::with_capacity(c.generators.len());
    for g in &c.generators {
        let n = lambda.at_int(g);
        if n.is_zero() {
            return Err(Error::NonGenericGenerator(g.to_string()));
        }
        factors.push(exponent(&n)?);
    }
    let mut numerator = LaurentPoly::zero();
    for m in parallelepiped_points(c) {
        numerator = numerator + LaurentPoly::q_pow(exponent(&lambda.at_int(&m))?);
    }
    let mut value = QRatFn::from_laurent(numerator);
    for &n in &factors {
        let factor = QRatFn::from_laurent(LaurentPoly::one() - LaurentPoly::q_pow(n));
        value = value.checked_div(&factor)?;
    }
    Ok(SpecializedTransform {
        value,
        denominator_factors: factors,
    })
}

/// Half-open decomposition of the cone of edge directions at vertex `v`,
/// with apex at the origin.
pub fn decompose_vertex_cone(poly: &Polytope, v: usize) -> Result<ConeDecomposition> {
    let cone = vertex_cone(poly, v);
    let pieces = triangulate(&cone.generators)?;
    let mut dec = half_open_decompose(&cone.generators, &pieces);
    if cone.generators.is_empty() {
        dec.pieces = vec![HalfOpenSimplicialCone::closed(Vec::new(), poly.ambient_dim())];
    }
    Ok(dec)
}

/// Transform of the vertex cone at `v` translated by `r * v`, specialized
/// along `lambda`. With `r = 0` this is the plain vertex-cone transform.
pub fn rho(poly: &Polytope, v: usize, lambda: &IntegralForm, r: u64) -> Result<QRatFn> {
    let dec = decompose_vertex_cone(poly, v)?;
    let shift = poly.vertex(v).scale(&Rational::from_integer(BigInt::from(r)));
    let mut total = QRatFn::zero();
    for piece in dec.shifted(&shift).pieces {
        total = total + specialize(&piece, lambda)?.value;
    }
    Ok(total)
}

/// Transform of the relative interior of the vertex cone at `v`.
pub fn rho_open(poly: &Polytope, v: usize, lambda: &IntegralForm) -> Result<QRatFn> {
    let closed = rho(poly, v, lambda, 0)?;
    let flipped = closed.substitute_q_inverse();
    Ok(if poly.dim() % 2 == 1 { -flipped } else { flipped })
}
