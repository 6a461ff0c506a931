//! Command implementations behind the `qehrhart` binary. Each command
//! returns the text to print and an exit code, so tests can drive them
//! without spawning a process.

mod document;
mod examples;

use std::fmt::Write as _;
use std::path::Path;

use num_bigint::BigInt;
use qehrhart::oracle::{pole_bound, verify_constituents_capped, DEFAULT_MAX_BOX};
use qehrhart::polytope::check_generic_positive;
use qehrhart::qfield::pole_orders;
use qehrhart::{constituents, ChapotonPolynomial, Error};
use thiserror::Error;

pub use document::{Parsed, PolytopeDocument};
pub use examples::{cmd_examples, ExampleFilter, Family};

/// Exit code for a successful run.
pub const EXIT_OK: i32 = 0;
/// Malformed input or a failed edge validation.
pub const EXIT_INPUT: i32 = 1;
/// The form is not generic and positive on the polytope.
pub const EXIT_NOT_GENERIC: i32 = 2;
/// A verification or example check failed.
pub const EXIT_CHECK_FAILED: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Library(#[from] Error),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Library(Error::NotGenericPositive(_) | Error::NonGenericGenerator(_)) => EXIT_NOT_GENERIC,
            _ => EXIT_INPUT,
        }
    }
}

/// Output of a command that ran to completion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Latex,
    Json,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ComputeOptions {
    pub format: Format,
    pub constituents: bool,
    pub limit: bool,
    pub poles: bool,
}

/// Oracle box cap from `QEHRHART_MAX_BOX`, falling back to the library default.
pub fn max_box_from_env() -> Result<u64, CliError> {
    match std::env::var("QEHRHART_MAX_BOX") {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("QEHRHART_MAX_BOX must be a positive integer, got {s:?}"))),
        Err(_) => Ok(DEFAULT_MAX_BOX),
    }
}

fn render(c: &ChapotonPolynomial, format: Format) -> String {
    match format {
        Format::Latex => c.render_latex(),
        _ => c.render_text(),
    }
}

fn pole_line(c: &ChapotonPolynomial, k: usize, bound: u64) -> String {
    let report = pole_orders(&c.coefficient(k), bound);
    let mut factors: Vec<String> = report
        .orders
        .iter()
        .map(|&(n, m)| if m == 1 { format!("Phi_{n}") } else { format!("Phi_{n}^{m}") })
        .collect();
    if factors.is_empty() {
        factors.push("none".into());
    }
    let mut line = format!("  x^{k}: {}", factors.join(" "));
    if !report.is_fully_cyclotomic() {
        write!(line, " (non-cyclotomic remainder {})", report.remainder).unwrap();
    }
    line
}

/// Prints the polynomial, or every constituent when the polytope is not a
/// lattice polytope or `constituents` is set.
pub fn cmd_compute(doc: &Parsed, opts: &ComputeOptions) -> Result<Outcome, CliError> {
    let cs = constituents(&doc.polytope, &doc.lambda)?;
    let many = opts.constituents || cs.len() > 1;
    if opts.format == Format::Json {
        if opts.limit || opts.poles {
            return Err(CliError::Usage("--limit and --poles need text or latex output".into()));
        }
        let body = if many {
            let values: Vec<_> = cs.iter().map(|c| c.to_json()).collect();
            serde_json::to_string_pretty(&values).expect("serializable")
        } else {
            cs[0].to_json_string()
        };
        return Ok(Outcome::ok(body + "\n"));
    }

    let mut out = String::new();
    for (r, c) in cs.iter().enumerate() {
        if many {
            writeln!(out, "C^{r} = {}", render(c, opts.format)).unwrap();
        } else {
            writeln!(out, "{}", render(c, opts.format)).unwrap();
        }
    }
    if opts.limit {
        for (r, c) in cs.iter().enumerate() {
            let value = c.evaluate_limit();
            let shown = match opts.format {
                Format::Latex => value.render_latex(),
                _ => value.render_text(),
            };
            if many {
                writeln!(out, "limit C^{r} at x = 1/(1 - q): {shown}").unwrap();
            } else {
                writeln!(out, "limit at x = 1/(1 - q): {shown}").unwrap();
            }
        }
    }
    if opts.poles {
        let bound = pole_bound(&doc.polytope, &doc.lambda);
        for (r, c) in cs.iter().enumerate() {
            writeln!(out, "poles of C^{r} (cyclotomic orders <= {bound}):").unwrap();
            for k in 0..=c.degree() {
                out.push_str(&pole_line(c, k, bound));
                out.push('\n');
            }
        }
    }
    Ok(Outcome::ok(out))
}

/// Reads polynomial JSON as written by `compute --format json`: one object,
/// or an array of constituents.
pub fn parse_polynomial_json(text: &str) -> Result<Vec<ChapotonPolynomial>, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    let items = match value {
        serde_json::Value::Array(items) => items,
        single => vec![single],
    };
    items
        .into_iter()
        .map(|v| {
            let j = serde_json::from_value(v).map_err(|e| CliError::Parse(e.to_string()))?;
            Ok(ChapotonPolynomial::from_json(&j)?)
        })
        .collect()
}

/// Runs the full check battery. When `supplied` is given those constituents
/// are checked instead of freshly computed ones.
pub fn cmd_verify(
    doc: &Parsed,
    t_max: u64,
    supplied: Option<Vec<ChapotonPolynomial>>,
    max_box: u64,
) -> Result<Outcome, CliError> {
    check_generic_positive(&doc.polytope, &doc.lambda).into_result()?;
    let cs = match supplied {
        Some(cs) => {
            let p = doc.polytope.denominator();
            if *p != BigInt::from(cs.len()) {
                return Err(CliError::Usage(format!(
                    "the polytope has period {p} but {} constituents were supplied",
                    cs.len()
                )));
            }
            cs
        }
        None => constituents(&doc.polytope, &doc.lambda)?,
    };
    let report = verify_constituents_capped(&doc.polytope, &doc.lambda, &cs, t_max, max_box)?;
    let mut out = format!("verify {} (period {}, t <= {t_max})\n", doc.name, cs.len());
    out.push_str(&report.render_text());
    let code = match report.first_failure() {
        None => {
            out.push_str("all checks passed\n");
            EXIT_OK
        }
        Some(f) => {
            match f.failing_t {
                Some(t) => writeln!(out, "verification failed: {} at t = {t}", f.name).unwrap(),
                None => writeln!(out, "verification failed: {}", f.name).unwrap(),
            }
            EXIT_CHECK_FAILED
        }
    };
    Ok(Outcome { stdout: out, code })
}

/// Loads and validates a document file.
pub fn load(path: &Path) -> Result<Parsed, CliError> {
    PolytopeDocument::read(path)?.parse()
}
