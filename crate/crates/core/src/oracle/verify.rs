use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{oracle_count_capped, DEFAULT_MAX_BOX};
use crate::chapoton::{constituents, ChapotonPolynomial};
use crate::error::Result;
use crate::polytope::{vertex_cone, IntegralForm, Polytope};
use crate::qfield::{pole_orders, LaurentPoly, QRatFn};

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    /// Dilation at which the check first failed, when it is indexed by one.
    pub failing_t: Option<u64>,
    pub detail: String,
}

impl CheckResult {
    fn pass(name: &str, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: true,
            failing_t: None,
            detail: detail.into(),
        }
    }

    fn fail(name: &str, t: Option<u64>, detail: impl Into<String>) -> Self {
        CheckResult {
            name: name.to_string(),
            passed: false,
            failing_t: t,
            detail: detail.into(),
        }
    }

    fn from_bool(name: &str, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            CheckResult::pass(name, detail)
        } else {
            CheckResult::fail(name, None, detail)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{status}  {}: {}\n", c.name, c.detail));
        }
        out
    }
}

/// Computes the constituents and runs [`verify_constituents`] on them.
pub fn verify_polytope(poly: &Polytope, lambda: &IntegralForm, t_max: u64) -> Result<VerifyReport> {
    let cs = constituents(poly, lambda)?;
    verify_constituents(poly, lambda, &cs, t_max)
}

/// Largest `|lambda(g)|` over the primitive edge directions `g`.
pub fn pole_bound(poly: &Polytope, lambda: &IntegralForm) -> u64 {
    (0..poly.num_vertices())
        .flat_map(|v| vertex_cone(poly, v).edge_labels(lambda))
        .map(|n| n.abs().to_u64().unwrap_or(u64::MAX))
        .max()
        .unwrap_or(1)
        .max(1)
}

/// Runs the structural checks and the oracle comparisons on supplied
/// constituents (index = residue of the dilation mod the period).
pub fn verify_constituents(
    poly: &Polytope,
    lambda: &IntegralForm,
    cs: &[ChapotonPolynomial],
    t_max: u64,
) -> Result<VerifyReport> {
    verify_constituents_capped(poly, lambda, cs, t_max, DEFAULT_MAX_BOX)
}

/// [`verify_constituents`] with an explicit cap on the oracle box volume.
pub fn verify_constituents_capped(
    poly: &Polytope,
    lambda: &IntegralForm,
    cs: &[ChapotonPolynomial],
    t_max: u64,
    max_box: u64,
) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let p = cs.len() as u64;
    let values: Vec<BigInt> = (0..poly.num_vertices())
        .map(|v| lambda.at_int(&poly.scaled_vertex(v)))
        .collect();
    let m = values.iter().max().cloned().unwrap_or_else(BigInt::zero);

    let degree_ok = cs.iter().all(|c| {
        BigInt::from(c.degree()) == m && !c.leading_coefficient().is_zero()
    });
    checks.push(CheckResult::from_bool(
        "degree",
        degree_ok,
        format!("expected max vertex value {m} for every constituent"),
    ));

    let argmax: Vec<usize> = (0..values.len()).filter(|&i| values[i] == m).collect();
    let leading_ok = argmax.len() == 1
        && cs.iter().all(|c| {
            let rho = &c.meta.vertex_data[argmax[0]].rho;
            let q1 = QRatFn::from_laurent(LaurentPoly::from_i64s(&[-1, 1]));
            let m = m.to_u32().unwrap_or(0);
            c.leading_coefficient() == &q1.pow(m) * rho
        });
    checks.push(CheckResult::from_bool(
        "leading coefficient",
        leading_ok,
        format!("unique maximizing vertex, {} found", argmax.len()),
    ));

    let constant_ok = cs.first().is_some_and(|c| c.constant_term().is_one());
    checks.push(CheckResult::from_bool("constant term", constant_ok, "residue 0 constant term is 1"));

    let bound = pole_bound(poly, lambda);
    let poles_ok = cs
        .iter()
        .flat_map(|c| c.coefficients())
        .all(|a| pole_orders(a, bound).is_fully_cyclotomic());
    checks.push(CheckResult::from_bool(
        "cyclotomic poles",
        poles_ok,
        format!("denominators divide products of Phi_n, n <= {bound}"),
    ));

    let mut closed = CheckResult::pass("closed counts", format!("t = 0..={t_max}"));
    for t in 0..=t_max {
        let c = &cs[(t % p) as usize];
        let value = c.evaluate((t / p) as i64);
        let oracle = oracle_count_capped(poly, lambda, t, false, max_box)?;
        if value != QRatFn::from_laurent(oracle.sum.clone()) {
            closed = CheckResult::fail(
                "closed counts",
                Some(t),
                format!("t = {t}: polynomial gives {value}, enumeration gives {}", oracle.sum),
            );
            break;
        }
    }
    checks.push(closed);

    let mut open = CheckResult::pass("interior counts", format!("t = 1..={t_max}"));
    for t in 1..=t_max {
        let k = t.div_ceil(p);
        let r = k * p - t;
        let value = cs[r as usize].reciprocal().evaluate(k as i64);
        let oracle = oracle_count_capped(poly, lambda, t, true, max_box)?;
        if value != QRatFn::from_laurent(oracle.sum.clone()) {
            open = CheckResult::fail(
                "interior counts",
                Some(t),
                format!("t = {t}: reciprocal gives {value}, enumeration gives {}", oracle.sum),
            );
            break;
        }
    }
    checks.push(open);

    let involution_ok = cs.iter().all(|c| c.reciprocal().reciprocal() == *c);
    checks.push(CheckResult::from_bool("reciprocal involution", involution_ok, "applying the reciprocal twice"));

    Ok(VerifyReport { checks })
}
