//! Flat model on `ℝ^m`: the projective action of `sl(m+1)` by polynomial
//! vector fields, weighted tensor sections, the Casimir operator and the
//! construction of equivariant quantizations.

pub mod casimir;
pub mod field;
pub mod lift;
pub mod operator;
pub mod poly;
pub mod quantize;
pub mod section;

pub use casimir::{classical_casimir, CasimirOperator};
pub use field::{killing_dual_basis, proj_embedding, Grade, PolyVectorField, BRACKET_SIGN};
pub use lift::{lift_plan, LiftNode, LiftPlan};
pub use operator::DiffOperator;
pub use poly::Poly;
pub use quantize::{
    quantization_coefficients, quantize_densities, symbolic_quantization, verify_equivariance, GradeResidual,
    QuantCoefficients, SymbolicQuantization,
};
pub use section::{Fiber, WeightedSection};
