use std::path::Path;

use qehrhart::polytope::build_polytope_with_edges;
use qehrhart::{build_polytope, parse_rational, IntVector, IntegralForm, Polytope, RatVector, Rational};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

/// Polytope input file. Coordinates are rational strings such as `"1/2"`;
/// plain JSON integers are accepted too, floats never are.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeDocument {
    pub vertices: Vec<Vec<Value>>,
    pub lambda: Vec<Value>,
    #[serde(default)]
    pub edges: Option<Vec<[usize; 2]>>,
    #[serde(default)]
    pub name: Option<String>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub struct Parsed {
    pub name: String,
    pub polytope: Polytope,
    pub lambda: IntegralForm,
}

fn exact_number(v: &Value, what: &str) -> Result<Rational, CliError> {
    match v {
        Value::String(s) => parse_rational(s).map_err(|e| CliError::Parse(format!("{what}: {e}"))),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|e| CliError::Parse(format!("{what}: {e}")))
        }
        Value::Number(n) => Err(CliError::Parse(format!(
            "{what}: {n} is a float; write rationals as strings like \"1/2\""
        ))),
        other => Err(CliError::Parse(format!("{what}: expected a rational string, found {other}"))),
    }
}

impl PolytopeDocument {
    pub fn from_json_str(s: &str) -> Result<Self, CliError> {
        serde_json::from_str(s).map_err(|e| CliError::Parse(e.to_string()))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json_str(&text)
    }

    pub fn parse(&self) -> Result<Parsed, CliError> {
        let first = self
            .vertices
            .first()
            .ok_or_else(|| CliError::Parse("vertex list is empty".into()))?;
        let d = first.len();
        let mut points = Vec::with_capacity(self.vertices.len());
        for (i, row) in self.vertices.iter().enumerate() {
            if row.len() != d {
                return Err(CliError::Parse(format!(
                    "vertex {i} has {} coordinates, expected {d}",
                    row.len()
                )));
            }
            let coords = row
                .iter()
                .enumerate()
                .map(|(j, v)| exact_number(v, &format!("vertex {i} coordinate {j}")))
                .collect::<Result<Vec<_>, _>>()?;
            points.push(RatVector::new(coords));
        }
        if self.lambda.len() != d {
            return Err(CliError::Parse(format!(
                "lambda has {} entries but the vertices live in dimension {d}",
                self.lambda.len()
            )));
        }
        let mut coeffs = Vec::with_capacity(d);
        for (i, v) in self.lambda.iter().enumerate() {
            let r = exact_number(v, &format!("lambda entry {i}"))?;
            if !r.is_integer() {
                return Err(CliError::Parse(format!("lambda entry {i} is not an integer")));
            }
            coeffs.push(r.to_integer());
        }
        let polytope = match &self.edges {
            Some(edges) => {
                let pairs: Vec<(usize, usize)> = edges.iter().map(|&[a, b]| (a, b)).collect();
                build_polytope_with_edges(&points, &pairs)?
            }
            None => build_polytope(&points)?,
        };
        Ok(Parsed {
            name: self.name.clone().unwrap_or_else(|| "polytope".into()),
            polytope,
            lambda: IntegralForm::new(IntVector::new(coeffs)),
        })
    }
}
