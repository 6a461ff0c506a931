use std::fmt::Write as _;

use clap::ValueEnum;
use qehrhart::conezeta::rho;
use qehrhart::knownforms::{
    carlitz_check, cube_all_ones, cube_closed_form, lecture_hall_limit, lecture_hall_recursion_table,
    lecture_hall_simplex, q_difference_check, standard_simplex, standard_simplex_closed_form,
    standard_simplex_rho, staircase_check, staircase_closed_form, staircase_simplex, unit_cube,
    LectureHallFamily,
};
use qehrhart::{chapoton_polynomial, IntVector, IntegralForm, RatVector, Result};

use crate::{Outcome, EXIT_CHECK_FAILED, EXIT_OK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Cube,
    Simplex,
    Carlitz,
    Lecturehall,
}

impl Family {
    fn label(self) -> &'static str {
        match self {
            Family::Cube => "cube",
            Family::Simplex => "simplex",
            Family::Carlitz => "carlitz",
            Family::Lecturehall => "lecturehall",
        }
    }

    fn default_max(self) -> usize {
        match self {
            Family::Cube | Family::Simplex => 4,
            Family::Carlitz => 5,
            Family::Lecturehall => 3,
        }
    }

    fn min(self) -> usize {
        match self {
            Family::Carlitz => 0,
            _ => 1,
        }
    }
}

/// Which part of the corpus to run. `n` caps the size parameter of every
/// selected family.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExampleFilter {
    pub only: Option<Family>,
    pub n: Option<usize>,
}

struct Row {
    family: &'static str,
    size: usize,
    check: &'static str,
    outcome: Result<bool>,
}

fn form(l: &[i64]) -> IntegralForm {
    IntegralForm::new(IntVector::from_i64s(l))
}

fn cube_rows(d: usize, rows: &mut Vec<Row>) {
    let ones = vec![1; d];
    let ramp: Vec<i64> = (1..=d as i64).collect();
    let push = |rows: &mut Vec<Row>, check, outcome| rows.push(Row { family: "cube", size: d, check, outcome });
    push(rows, "all-ones = (1 + qx)^d", chapoton_polynomial(&unit_cube(d), &form(&ones)).map(|c| c.poly == cube_all_ones(d as u32)));
    push(rows, "subset-sum closed form", chapoton_polynomial(&unit_cube(d), &form(&ramp)).map(|c| c.poly == cube_closed_form(&ramp)));
    push(rows, "closed forms agree on all-ones", Ok(cube_closed_form(&ones) == cube_all_ones(d as u32)));
}

fn simplex_rows(d: usize, rows: &mut Vec<Row>) {
    let push = |rows: &mut Vec<Row>, check, outcome| rows.push(Row { family: "simplex", size: d, check, outcome });
    let ones = vec![1; d];
    push(rows, "staircase q-binomial counts", Ok(staircase_check(d as u32, 6)));
    push(
        rows,
        "staircase product formula",
        chapoton_polynomial(&staircase_simplex(d), &form(&ones)).map(|c| c.poly == staircase_closed_form(d as u32)),
    );
    let lam: Vec<i64> = (1..=d as i64).map(|i| 2 * i - 1).collect();
    let p = standard_simplex(d);
    let rho_ok = (|| {
        for j in 0..d {
            let v = p.vertex_index(&IntVector::unit(d, j).to_rational()).expect("unit vector is a vertex");
            if rho(&p, v, &form(&lam), 0)? != standard_simplex_rho(&lam, j) {
                return Ok(false);
            }
        }
        Ok(true)
    })();
    push(rows, "standard simplex vertex transforms", rho_ok);
    push(
        rows,
        "standard simplex closed form",
        chapoton_polynomial(&p, &form(&lam)).map(|c| c.poly == standard_simplex_closed_form(&lam)),
    );
}

fn lecture_hall_rows(n: usize, prev: &mut Option<LectureHallFamily>, rows: &mut Vec<Row>) {
    let push = |rows: &mut Vec<Row>, check, outcome| rows.push(Row { family: "lecturehall", size: n, check, outcome });
    let fam = match LectureHallFamily::from_constituents(n) {
        Ok(f) => f,
        Err(e) => {
            push(rows, "constituents", Err(e));
            return;
        }
    };
    push(rows, "recursion table vs enumeration", lecture_hall_recursion_table(n, 9).map(|_| true));
    push(rows, "seed construction", LectureHallFamily::from_seed(n).map(|f| f == fam));
    push(rows, "symmetry", Ok(fam.symmetry_holds()));
    push(rows, "normalization", Ok(fam.normalization_holds()));
    if let Some(p) = prev.as_ref() {
        push(rows, "recursion in i", Ok(fam.recursion_holds(p)));
        push(rows, "iterated recursion", Ok(fam.iterated_recursion_holds(p)));
        push(rows, "q-difference equation", Ok(q_difference_check(&fam, p)));
    }
    let limit = lecture_hall_simplex(n).and_then(|s| {
        let origin = s.vertex_index(&RatVector::zeros(n)).expect("origin is a vertex");
        rho(&s, origin, &form(&vec![1; n]), 0)
    });
    push(rows, "limit equals origin transform", limit.map(|r| r == lecture_hall_limit(&fam)));
    *prev = Some(fam);
}

/// Runs the closed-form corpus and prints one line per check.
pub fn cmd_examples(filter: &ExampleFilter) -> Outcome {
    let families = [Family::Cube, Family::Simplex, Family::Carlitz, Family::Lecturehall];
    let mut rows = Vec::new();
    for fam in families.into_iter().filter(|f| filter.only.is_none_or(|o| o == *f)) {
        let max = filter.n.unwrap_or(fam.default_max());
        let mut prev = None;
        // Lecture hall always starts at 1: each member is checked against the previous one.
        for size in fam.min()..=max {
            match fam {
                Family::Cube => cube_rows(size, &mut rows),
                Family::Simplex => simplex_rows(size, &mut rows),
                Family::Carlitz => rows.push(Row {
                    family: fam.label(),
                    size,
                    check: "Carlitz identity to x^8",
                    outcome: Ok(carlitz_check(size, 8)),
                }),
                Family::Lecturehall => lecture_hall_rows(size, &mut prev, &mut rows),
            }
        }
    }

    let mut out = String::new();
    let mut failures = 0;
    for r in &rows {
        let status = match &r.outcome {
            Ok(true) => "pass".to_string(),
            Ok(false) => {
                failures += 1;
                "FAIL".to_string()
            }
            Err(e) => {
                failures += 1;
                format!("FAIL ({e})")
            }
        };
        writeln!(out, "{:<12} n={:<2} {:<36} {status}", r.family, r.size, r.check).unwrap();
    }
    writeln!(out, "{} checks, {failures} failed", rows.len()).unwrap();
    Outcome {
        stdout: out,
        code: if failures == 0 { EXIT_OK } else { EXIT_CHECK_FAILED },
    }
}
