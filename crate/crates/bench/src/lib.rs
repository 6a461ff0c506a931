//! Benchmark fixtures shared by the criterion targets.

use qehrhart::knownforms::{lecture_hall_simplex, unit_cube};
use qehrhart::{build_polytope, IntVector, IntegralForm, Polytope, RatVector};

pub struct Fixture {
    pub name: &'static str,
    pub polytope: Polytope,
    pub lambda: IntegralForm,
}

fn form(l: &[i64]) -> IntegralForm {
    IntegralForm::new(IntVector::from_i64s(l))
}

/// A handful of lattice polytopes of increasing cost.
pub fn lattice_fixtures() -> Vec<Fixture> {
    let pts = |rows: &[&[i64]]| -> Polytope {
        build_polytope(&rows.iter().map(|r| RatVector::from_i64s(r)).collect::<Vec<_>>()).expect("valid points")
    };
    vec![
        Fixture {
            name: "triangle",
            polytope: pts(&[&[0, 0], &[1, 0], &[0, 1]]),
            lambda: form(&[1, 2]),
        },
        Fixture {
            name: "wide triangle",
            polytope: pts(&[&[0, 0], &[2, 1], &[1, 2]]),
            lambda: form(&[3, 1]),
        },
        Fixture {
            name: "cube3",
            polytope: unit_cube(3),
            lambda: form(&[1, 2, 3]),
        },
        Fixture {
            name: "cross3",
            polytope: pts(&[&[2, 1, 1], &[0, 1, 1], &[1, 2, 1], &[1, 0, 1], &[1, 1, 2], &[1, 1, 0]]),
            lambda: form(&[1, 2, 3]),
        },
    ]
}

/// Lecture hall simplex `n` with the all-ones form.
pub fn lecture_hall_fixture(n: usize) -> Fixture {
    Fixture {
        name: "lecture hall",
        polytope: lecture_hall_simplex(n).expect("valid lecture hall simplex"),
        lambda: form(&vec![1; n]),
    }
}
