use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::exactalg::{pivot_columns, IntVector, RatMatrix, RatVector, Rational};

/// Simplicial cone `shift + {sum a_i g_i}` with `a_i >= 0` on closed facets
/// and `a_i > 0` where the facet opposite `g_i` is open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfOpenSimplicialCone {
    pub generators: Vec<IntVector>,
    /// `open[i]` excludes the facet opposite `generators[i]`.
    pub open: Vec<bool>,
    pub shift: RatVector,
}

impl HalfOpenSimplicialCone {
    pub fn closed(generators: Vec<IntVector>, ambient_dim: usize) -> Self {
        let k = generators.len();
        HalfOpenSimplicialCone {
            generators,
            open: vec![false; k],
            shift: RatVector::zeros(ambient_dim),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.shift.len()
    }

    pub fn with_shift(&self, shift: RatVector) -> Self {
        assert_eq!(shift.len(), self.ambient_dim(), "shift length mismatch");
        HalfOpenSimplicialCone {
            generators: self.generators.clone(),
            open: self.open.clone(),
            shift,
        }
    }

    /// Coordinate chart and inverse generator matrix on it, used to read
    /// off the coefficients `a` of a point in the affine span.
    pub(crate) fn coordinates_solver(&self) -> (Vec<usize>, RatMatrix) {
        let rows: Vec<RatVector> = self.generators.iter().map(IntVector::to_rational).collect();
        if rows.is_empty() {
            return (Vec::new(), RatMatrix::new(Vec::new()));
        }
        let chart = pivot_columns(&RatMatrix::new(rows.clone()));
        assert_eq!(chart.len(), rows.len(), "generators not independent");
        // Column c of the chart matrix is generator c restricted to the chart.
        let cols: Vec<RatVector> = rows
            .iter()
            .map(|g| RatVector::new(chart.iter().map(|&i| g[i].clone()).collect()))
            .collect();
        let inv = RatMatrix::from_columns(&cols, chart.len())
            .inverse()
            .expect("chart minor is nonsingular");
        (chart, inv)
    }

    /// Coefficients of `x - shift` in the generator basis, if `x` lies in the
    /// affine span.
    pub fn coefficients(&self, x: &RatVector) -> Option<Vec<Rational>> {
        let (chart, inv) = self.coordinates_solver();
        coefficients_with(&self.generators, &self.shift, &chart, &inv, x)
    }

    /// Membership of a point in the half-open cone.
    pub fn contains(&self, x: &RatVector) -> bool {
        match self.coefficients(x) {
            None => false,
            Some(a) => a
                .iter()
                .zip(&self.open)
                .all(|(ai, &open)| if open { ai.is_positive() } else { !ai.is_negative() }),
        }
    }
}

fn coefficients_with(
    generators: &[IntVector],
    shift: &RatVector,
    chart: &[usize],
    inv: &RatMatrix,
    x: &RatVector,
) -> Option<Vec<Rational>> {
    let rel = x - shift;
    if generators.is_empty() {
        return rel.is_zero().then(Vec::new);
    }
    let y = RatVector::new(chart.iter().map(|&i| rel[i].clone()).collect());
    let a = inv.mul_vec(&y);
    let mut back = RatVector::zeros(x.len());
    for (ai, g) in a.iter().zip(generators) {
        back = &back + &g.to_rational().scale(ai);
    }
    (back == rel).then(|| a.entries().to_vec())
}

/// A disjoint cover of a cone by half-open simplicial cones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDecomposition {
    pub pieces: Vec<HalfOpenSimplicialCone>,
}

impl ConeDecomposition {
    pub fn shifted(&self, shift: &RatVector) -> ConeDecomposition {
        ConeDecomposition {
            pieces: self.pieces.iter().map(|p| p.with_shift(shift.clone())).collect(),
        }
    }
}

/// Opens facets of a triangulation so that the pieces partition the cone.
///
/// The reference point is the sum of the distinct generators, perturbed by
/// `eps h_1 + eps^2 h_2 + ...` with `h_j` the generators in lexicographic
/// order. A facet is open exactly when the perturbed reference point lies
/// strictly on the far side of it; the perturbation resolves every tie.
pub fn half_open_decompose(generators: &[IntVector], pieces: &[Vec<usize>]) -> ConeDecomposition {
    let d = generators.first().map_or(0, IntVector::len);
    let mut distinct: Vec<&IntVector> = generators.iter().collect();
    distinct.sort();
    distinct.dedup();
    let mut xi = RatVector::zeros(d);
    for g in &distinct {
        xi = &xi + &g.to_rational();
    }
    let mut probes = vec![xi];
    probes.extend(distinct.iter().map(|g| g.to_rational()));

    let out = pieces
        .iter()
        .map(|piece| {
            let gens: Vec<IntVector> = piece.iter().map(|&i| generators[i].clone()).collect();
            let mut cone = HalfOpenSimplicialCone::closed(gens, d);
            if cone.generators.is_empty() {
                return cone;
            }
            let (chart, inv) = cone.coordinates_solver();
            let coords: Vec<Vec<Rational>> = probes
                .iter()
                .map(|p| {
                    coefficients_with(&cone.generators, &cone.shift, &chart, &inv, p)
                        .expect("probe lies in the span of the cone")
                })
                .collect();
            for i in 0..cone.generators.len() {
                let sign = coords
                    .iter()
                    .map(|c| c[i].cmp(&Rational::zero()))
                    .find(|o| *o != Ordering::Equal)
                    .expect("perturbation is total");
                cone.open[i] = sign == Ordering::Less;
            }
            cone
        })
        .collect();
    ConeDecomposition { pieces: out }
}
