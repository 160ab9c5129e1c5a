//! Exact-arithmetic classification of smooth rational surfaces in `P^4`
//! that are ruled by low-degree rational curves or embedded by linear systems
//! with simple base points on a Hirzebruch surface.
//!
//! Everything is integer arithmetic with checked overflow; no floating point
//! or square roots appear in any decision.

mod arith;
pub mod bounds;
pub mod error;
pub mod fn_systems;
pub mod invariants;
pub mod lattice;
pub mod oracle;
pub mod quadratic;
pub mod reason;
pub mod ruled;
pub mod verify;

pub use bounds::{acm_exclusion, castelnuovo_p3, max_genus_g, strict_eighth_bound, BoundVerdict};
pub use error::{Error, Result};
pub use fn_systems::{
    classify_fn_systems, f_a, lemma8_verify, lemma9_candidates, lemma9_divisibility, solve_b,
    theorem10_analysis, FnCandidate, FnClassification, FnOptions, FnVerdict,
};
pub use invariants::{
    adjunction_genus, degree, double_point_residual, sectional_genus, NumericalInvariants, RATIONAL_CHI,
};
pub use lattice::{canonical_class, intersect, DivisorClass, SurfaceModel};
pub use oracle::{cross_validate, oracle_enumerate, CrossValidation, OracleTuple, SearchBox, Status};
pub use reason::Reason;
pub use ruled::{
    classify_ruled, corollary3_degree_range, corollary3_genus, corollary3_refined_range, CandidateRecord,
    Verdict, NONDEGENERATE_FIBER_MAX_DEGREE,
};
pub use verify::{verify_paper, verify_paper_with, Targets, VerificationReport};
