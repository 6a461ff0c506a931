//! Integer-point transforms of rational cones, specialized along an
//! integral form.
//!
//! A vertex cone is triangulated without new rays, the simplicial pieces
//! are made disjoint by opening some of their facets, and each half-open
//! piece contributes `(sum over parallelepiped points q^lambda(m)) /
//! prod (1 - q^lambda(g))`.

mod halfopen;
mod transform;
mod triangulate;

pub use halfopen::{half_open_decompose, ConeDecomposition, HalfOpenSimplicialCone};
pub use transform::{
    decompose_vertex_cone, parallelepiped_points, rho, rho_open, specialize, SpecializedTransform,
};
pub use triangulate::triangulate;
