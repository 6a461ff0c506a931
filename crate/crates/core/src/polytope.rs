//! V-representation polytopes: extremal vertices, affine dimension,
//! denominator, edge graph, vertex cones, and the generic/positive test for
//! an integral form.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{
    format_rational, lp_feasible, primitive, rank, IntVector, LinearSystem, RatMatrix, RatVector,
    Rational, Relation,
};

/// Linear form `m -> lambda . m` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntegralForm(IntVector);

impl IntegralForm {
    pub fn new(coeffs: IntVector) -> Self {
        IntegralForm(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        IntegralForm(IntVector::from_i64s(coeffs))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeffs(&self) -> &IntVector {
        &self.0
    }

    pub fn at_int(&self, m: &IntVector) -> BigInt {
        self.0.dot(m)
    }

    pub fn at(&self, x: &RatVector) -> Rational {
        self.0.to_rational().dot(x)
    }
}

impl fmt::Display for IntegralForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Convex polytope given by its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polytope {
    vertices: Vec<RatVector>,
    ambient_dim: usize,
    dim: usize,
    denominator: BigInt,
    /// Sorted pairs `(i, j)` with `i < j`.
    edges: Vec<(usize, usize)>,
}

impl Polytope {
    pub fn vertices(&self) -> &[RatVector] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> &RatVector {
        &self.vertices[i]
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Smallest positive `p` with `p P` a lattice polytope.
    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn is_lattice(&self) -> bool {
        self.denominator.is_one()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.edges.binary_search(&key).is_ok()
    }

    /// Indices of the vertices adjacent to `v`, ascending.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn vertex_index(&self, x: &RatVector) -> Option<usize> {
        self.vertices.iter().position(|v| v == x)
    }

    /// `p v` as an integer vector.
    pub fn scaled_vertex(&self, i: usize) -> IntVector {
        self.vertices[i]
            .scale(&Rational::from_integer(self.denominator.clone()))
            .to_integer()
            .expect("denominator clears every vertex")
    }

    /// The translate `P + shift`; the edge graph is reused.
    pub fn translate(&self, shift: &RatVector) -> Polytope {
        let vertices: Vec<RatVector> = self.vertices.iter().map(|v| v + shift).collect();
        Polytope {
            denominator: denominator_of(&vertices),
            vertices,
            ambient_dim: self.ambient_dim,
            dim: self.dim,
            edges: self.edges.clone(),
        }
    }

    /// Whether `x` lies in the convex hull of the vertices.
    pub fn contains(&self, x: &RatVector) -> bool {
        let refs: Vec<&RatVector> = self.vertices.iter().collect();
        in_convex_hull(x, &refs)
    }
}

fn denominator_of(vertices: &[RatVector]) -> BigInt {
    vertices
        .iter()
        .fold(BigInt::one(), |l, v| l.lcm(&v.denominator_lcm()))
}

/// Exact LP test: is `x` a convex combination of `points`?
pub fn in_convex_hull(x: &RatVector, points: &[&RatVector]) -> bool {
    if points.is_empty() {
        return false;
    }
    let d = x.len();
    let n = points.len();
    let mut sys = LinearSystem::nonnegative(n);
    sys.add_constraint(vec![Rational::one(); n], Relation::Eq, Rational::one());
    for k in 0..d {
        sys.add_constraint(
            points.iter().map(|p| p[k].clone()).collect(),
            Relation::Eq,
            x[k].clone(),
        );
    }
    lp_feasible(&sys)
}

/// `{v_i, v_j}` spans an edge iff the midpoint has no convex representation
/// that puts positive weight on some third vertex.
///
/// The strict condition is homogenized: with weights `nu >= 0`, the others
/// summing to 1, ask for `sum nu_u u = (1 + nu_i + nu_j) m`.
fn is_edge(vertices: &[RatVector], i: usize, j: usize) -> bool {
    let n = vertices.len();
    if n == 2 {
        return true;
    }
    let d = vertices[0].len();
    let two = Rational::from_integer(BigInt::from(2));
    let mid = (&vertices[i] + &vertices[j]).scale(&two.recip());
    let mut sys = LinearSystem::nonnegative(n);
    sys.add_constraint(
        (0..n)
            .map(|u| {
                if u == i || u == j {
                    Rational::zero()
                } else {
                    Rational::one()
                }
            })
            .collect(),
        Relation::Eq,
        Rational::one(),
    );
    for k in 0..d {
        let coeffs = (0..n)
            .map(|u| {
                let c = vertices[u][k].clone();
                if u == i || u == j {
                    c - &mid[k]
                } else {
                    c
                }
            })
            .collect();
        sys.add_constraint(coeffs, Relation::Eq, mid[k].clone());
    }
    !lp_feasible(&sys)
}

fn check_dims(points: &[RatVector]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::EmptyInput);
    };
    let d = first.len();
    if let Some(bad) = points.iter().find(|p| p.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            found: bad.len(),
        });
    }
    Ok(d)
}

/// Indices (into `points`) of the extremal points, first occurrence of
/// duplicates kept, input order preserved.
fn extremal_indices(points: &[RatVector]) -> Vec<usize> {
    let mut distinct: Vec<usize> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        if !distinct.iter().any(|&j| points[j] == *p) {
            distinct.push(i);
        }
    }
    distinct
        .iter()
        .copied()
        .filter(|&i| {
            let others: Vec<&RatVector> = distinct
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| &points[j])
                .collect();
            !in_convex_hull(&points[i], &others)
        })
        .collect()
}

/// Builds a polytope from an arbitrary point set.
pub fn build_polytope(points: &[RatVector]) -> Result<Polytope> {
    let ambient_dim = check_dims(points)?;
    let keep = extremal_indices(points);
    let vertices: Vec<RatVector> = keep.iter().map(|&i| points[i].clone()).collect();
    Ok(assemble(vertices, ambient_dim))
}

/// Like [`build_polytope`], but checks a caller-supplied edge list (indices
/// into `points`) against the computed edge graph.
pub fn build_polytope_with_edges(points: &[RatVector], edges: &[(usize, usize)]) -> Result<Polytope> {
    let ambient_dim = check_dims(points)?;
    let keep = extremal_indices(points);
    let vertices: Vec<RatVector> = keep.iter().map(|&i| points[i].clone()).collect();
    let poly = assemble(vertices, ambient_dim);

    let mut supplied = BTreeSet::new();
    for &(a, b) in edges {
        if a >= points.len() || b >= points.len() {
            return Err(Error::EdgeValidation(format!(
                "edge ({a}, {b}) references a point outside 0..{}",
                points.len()
            )));
        }
        let map = |x: usize| {
            keep.iter().position(|&k| k == x).ok_or_else(|| {
                Error::EdgeValidation(format!("point {x} is not a vertex"))
            })
        };
        let (ma, mb) = (map(a)?, map(b)?);
        if ma == mb {
            return Err(Error::EdgeValidation(format!("degenerate edge ({a}, {b})")));
        }
        supplied.insert((ma.min(mb), ma.max(mb)));
    }
    let computed: BTreeSet<(usize, usize)> = poly.edges.iter().copied().collect();
    if supplied != computed {
        let name = |&(a, b): &(usize, usize)| format!("({}, {})", keep[a], keep[b]);
        let extra: Vec<String> = supplied.difference(&computed).map(name).collect();
        let missing: Vec<String> = computed.difference(&supplied).map(name).collect();
        return Err(Error::EdgeValidation(format!(
            "not edges: [{}]; missing edges: [{}]",
            extra.join(", "),
            missing.join(", ")
        )));
    }
    Ok(poly)
}

fn assemble(vertices: Vec<RatVector>, ambient_dim: usize) -> Polytope {
    let dim = if vertices.len() <= 1 {
        0
    } else {
        let diffs: Vec<RatVector> = vertices[1..].iter().map(|v| v - &vertices[0]).collect();
        rank(&RatMatrix::new(diffs))
    };
    let n = vertices.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if is_edge(&vertices, i, j) {
                edges.push((i, j));
            }
        }
    }
    Polytope {
        denominator: denominator_of(&vertices),
        vertices,
        ambient_dim,
        dim,
        edges,
    }
}

/// The cone at a vertex spanned by its primitive integer edge directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    pub vertex: usize,
    pub apex: RatVector,
    /// `g(p (w - v))` for each neighbor `w`, in neighbor order.
    pub generators: Vec<IntVector>,
}

impl VertexCone {
    /// `lambda(g)` for every generator.
    pub fn edge_labels(&self, lambda: &IntegralForm) -> Vec<BigInt> {
        self.generators.iter().map(|g| lambda.at_int(g)).collect()
    }
}

pub fn vertex_cone(poly: &Polytope, v: usize) -> VertexCone {
    let apex = poly.vertex(v).clone();
    let generators = poly
        .neighbors(v)
        .into_iter()
        .map(|w| {
            let dir = (poly.vertex(w) - &apex).clear_denominators();
            primitive(&dir).expect("distinct vertices")
        })
        .collect();
    VertexCone {
        vertex: v,
        apex,
        generators,
    }
}

/// Why a form fails to be generic and positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GenericityViolation {
    /// Adjacent vertices with the same value.
    EqualOnEdge {
        v: usize,
        w: usize,
        vertex_v: RatVector,
        vertex_w: RatVector,
        value: Rational,
    },
    /// A vertex with negative value.
    NegativeVertex {
        v: usize,
        vertex: RatVector,
        value: Rational,
    },
}

impl fmt::Display for GenericityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenericityViolation::EqualOnEdge {
                v,
                w,
                vertex_v,
                vertex_w,
                value,
            } => write!(
                f,
                "adjacent vertices {v} {vertex_v} and {w} {vertex_w} share the value {}",
                format_rational(value)
            ),
            GenericityViolation::NegativeVertex { v, vertex, value } => write!(
                f,
                "vertex {v} {vertex} has negative value {}",
                format_rational(value)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericityReport {
    pub violation: Option<GenericityViolation>,
}

impl GenericityReport {
    pub fn is_ok(&self) -> bool {
        self.violation.is_none()
    }

    pub fn into_result(self) -> Result<()> {
        match self.violation {
            None => Ok(()),
            Some(v) => Err(Error::NotGenericPositive(v.to_string())),
        }
    }
}

/// Checks `lambda(v) != lambda(w)` on every edge and `lambda(v) >= 0` on
/// every vertex. Edges are checked first.
pub fn check_generic_positive(poly: &Polytope, lambda: &IntegralForm) -> GenericityReport {
    assert_eq!(lambda.len(), poly.ambient_dim(), "form length mismatch");
    let values: Vec<Rational> = poly.vertices().iter().map(|v| lambda.at(v)).collect();
    for &(v, w) in poly.edges() {
        if values[v] == values[w] {
            return GenericityReport {
                violation: Some(GenericityViolation::EqualOnEdge {
                    v,
                    w,
                    vertex_v: poly.vertex(v).clone(),
                    vertex_w: poly.vertex(w).clone(),
                    value: values[v].clone(),
                }),
            };
        }
    }
    if let Some(v) = values.iter().position(|x| x.is_negative()) {
        return GenericityReport {
            violation: Some(GenericityViolation::NegativeVertex {
                v,
                vertex: poly.vertex(v).clone(),
                value: values[v].clone(),
            }),
        };
    }
    GenericityReport { violation: None }
}

/// Vertices attaining the maximum of `lambda`.
pub fn argmax_vertices(poly: &Polytope, lambda: &IntegralForm) -> Vec<usize> {
    let values: Vec<Rational> = poly.vertices().iter().map(|v| lambda.at(v)).collect();
    let max = values.iter().max().cloned().unwrap_or_else(Rational::zero);
    (0..values.len()).filter(|&i| values[i] == max).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rat;

    pub(crate) fn pts(v: &[&[i64]]) -> Vec<RatVector> {
        v.iter().map(|p| RatVector::from_i64s(p)).collect()
    }

    fn square() -> Polytope {
        build_polytope(&pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]])).unwrap()
    }

    #[test]
    fn triangle() {
        let t = build_polytope(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert_eq!(t.dim(), 2);
        assert!(t.is_lattice());
        assert_eq!(t.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn interior_point_dropped() {
        let mut p = pts(&[&[0, 0], &[1, 0], &[0, 1]]);
        p.push(RatVector::new(vec![rat(1, 2), rat(1, 4)]));
        p.push(RatVector::from_i64s(&[1, 0]));
        let t = build_polytope(&p).unwrap();
        assert_eq!(t.num_vertices(), 3);
        assert_eq!(t.denominator(), &BigInt::one());
    }

    #[test]
    fn square_has_no_diagonals() {
        let s = square();
        assert_eq!(s.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn kite_diagonal_is_not_an_edge() {
        // The long diagonal's midpoint (5,0) is not in the hull of the two
        // other vertices, yet the diagonal is not an edge.
        let k = build_polytope(&pts(&[&[0, 0], &[10, 0], &[1, 1], &[1, -1]])).unwrap();
        assert!(!k.are_adjacent(0, 1));
        assert!(!k.are_adjacent(2, 3));
        assert_eq!(k.edges().len(), 4);
    }

    #[test]
    fn cross_polytope_edges() {
        let c = build_polytope(&pts(&[
            &[1, 0, 0],
            &[-1, 0, 0],
            &[0, 1, 0],
            &[0, -1, 0],
            &[0, 0, 1],
            &[0, 0, -1],
        ]))
        .unwrap();
        assert_eq!(c.edges().len(), 12);
        assert!(!c.are_adjacent(0, 1));
        assert!(c.are_adjacent(0, 2));
    }

    #[test]
    fn lower_dimensional_and_rational() {
        let s = build_polytope(&pts(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap();
        assert_eq!(s.dim(), 2);
        assert_eq!(s.ambient_dim(), 3);
        assert_eq!(s.edges().len(), 3);
        let h = build_polytope(&[
            RatVector::from_i64s(&[0, 0]),
            RatVector::new(vec![rat(1, 2), rat(0, 1)]),
            RatVector::new(vec![rat(0, 1), rat(1, 3)]),
        ])
        .unwrap();
        assert_eq!(h.denominator(), &BigInt::from(6));
        let pt = build_polytope(&pts(&[&[2, 3], &[2, 3]])).unwrap();
        assert_eq!(pt.num_vertices(), 1);
        assert_eq!(pt.dim(), 0);
        assert!(pt.edges().is_empty());
    }

    #[test]
    fn errors() {
        assert_eq!(build_polytope(&[]), Err(Error::EmptyInput));
        let bad = vec![RatVector::from_i64s(&[0, 0]), RatVector::from_i64s(&[1])];
        assert!(matches!(build_polytope(&bad), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn supplied_edges_are_validated() {
        let p = pts(&[&[0, 0], &[1, 0], &[1, 1], &[0, 1]]);
        assert!(build_polytope_with_edges(&p, &[(0, 1), (1, 2), (2, 3), (3, 0)]).is_ok());
        let err = build_polytope_with_edges(&p, &[(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap_err();
        assert!(matches!(err, Error::EdgeValidation(_)));
        assert!(err.to_string().starts_with("edge validation failed"));
    }

    #[test]
    fn vertex_cones() {
        let t = build_polytope(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        let c = vertex_cone(&t, 1);
        assert_eq!(
            c.generators,
            vec![IntVector::from_i64s(&[-1, 0]), IntVector::from_i64s(&[-1, 1])]
        );
        let cube = build_polytope(&pts(&[
            &[0, 0, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1],
            &[1, 1, 0], &[1, 0, 1], &[0, 1, 1], &[1, 1, 1],
        ]))
        .unwrap();
        let mut g = vertex_cone(&cube, 0).generators;
        g.sort();
        assert_eq!(
            g,
            vec![
                IntVector::from_i64s(&[0, 0, 1]),
                IntVector::from_i64s(&[0, 1, 0]),
                IntVector::from_i64s(&[1, 0, 0])
            ]
        );
        let seg = build_polytope(&pts(&[&[0], &[1]])).unwrap();
        assert_eq!(vertex_cone(&seg, 0).generators, vec![IntVector::from_i64s(&[1])]);
        // rational: (1/2, 0) -> (0, 1/3) clears to (-3, 2)
        let h = build_polytope(&[
            RatVector::from_i64s(&[0, 0]),
            RatVector::new(vec![rat(1, 2), rat(0, 1)]),
            RatVector::new(vec![rat(0, 1), rat(1, 3)]),
        ])
        .unwrap();
        assert_eq!(
            vertex_cone(&h, 1).generators,
            vec![IntVector::from_i64s(&[-1, 0]), IntVector::from_i64s(&[-3, 2])]
        );
    }

    #[test]
    fn generic_positive_examples() {
        let t = build_polytope(&pts(&[&[0, 0], &[1, 0], &[0, 1]])).unwrap();
        assert!(check_generic_positive(&t, &IntegralForm::from_i64s(&[1, 2])).is_ok());
        let s = square();
        let r = check_generic_positive(&s, &IntegralForm::from_i64s(&[1, -1]));
        assert!(matches!(r.violation, Some(GenericityViolation::NegativeVertex { v: 3, .. })));
        // (1,0) and (0,1) tie at 1 but are not adjacent.
        assert!(check_generic_positive(&s, &IntegralForm::from_i64s(&[1, 1])).is_ok());
        let r = check_generic_positive(&s, &IntegralForm::from_i64s(&[1, 0]));
        assert!(matches!(r.violation, Some(GenericityViolation::EqualOnEdge { v: 0, w: 3, .. })));
    }

    #[test]
    fn lambda_values() {
        let l = IntegralForm::from_i64s(&[1, 2]);
        assert_eq!(l.at_int(&IntVector::from_i64s(&[3, 4])), BigInt::from(11));
        assert_eq!(l.at_int(&IntVector::from_i64s(&[0, 0])), BigInt::zero());
        let l3 = IntegralForm::from_i64s(&[1, 1, 1]);
        assert_eq!(l3.at(&RatVector::new(vec![rat(1, 2), rat(1, 2), rat(0, 1)])), rat(1, 1));
    }

    #[test]
    fn rebuild_is_idempotent() {
        let mut p = pts(&[&[0, 0], &[2, 1], &[1, 2], &[1, 1], &[0, 0]]);
        p.push(RatVector::new(vec![rat(1, 2), rat(1, 2)]));
        let a = build_polytope(&p).unwrap();
        let b = build_polytope(a.vertices()).unwrap();
        assert_eq!(a, b);
    }
}
