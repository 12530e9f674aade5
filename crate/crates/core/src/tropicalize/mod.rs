//! Embeddings of affine schemes into toric-like monoid schemes, their
//! scheme-theoretic tropicalizations, valuation points and limits.

pub mod algebra;
pub mod embedding;
pub mod limits;
pub mod linalg;
pub mod points;
pub mod poly;
pub mod universal;

pub use algebra::{AffineAlgebra, AlgElem, PolyQuotient};
pub use embedding::{
    check_commutes, default_degree, eval_relation, ideal_circuits, induced_map, push_forward,
    settheoretic_member, trop_ideal_truncated, trop_ideal_truncated_capped, trop_of_poly,
    trop_presentation, Embedding, InducedMap, PushedGenerator, TPoint, TropPresentation,
    DEFAULT_SUBSET_CAP,
};
pub use limits::{
    default_grid, limit_points, node_basis, solve_points, valuation_candidates, DiagramEdge,
    Family, LimitOptions, LimitResult, NodePoints, PointSet, DEFAULT_NODE_CAP,
};
pub use points::{
    default_sample, is_valuation_point, pi_map, AlgebraPoint, PointReport, PointSample,
};
pub use poly::{parse_poly, parse_scalar, CoeffField, KPoly};
pub use universal::{
    element_monomial, rational_element, universal_embedding, universal_kernel_generators,
    universal_monoid, universal_trop, Sample,
};
