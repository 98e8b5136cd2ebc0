//! Representation-theoretic machinery for projectively equivariant quantization.
//!
//! The crate covers Young-diagram labels of irreducible `GL(m)` representations,
//! the `GL(m) ⊂ GL(m+1)` branching law, Casimir eigenvalues and their resonant
//! weights, tensor-product decompositions, and a flat-model engine on `ℝ^m` that
//! checks the eigenvalue formula against an explicit Casimir operator and builds
//! `sl(m+1)`-equivariant quantizations for density-valued symbols.
//!
//! All arithmetic is exact over `ℚ`.

pub mod branching;
pub mod casimir;
pub mod diagrams;
pub mod error;
pub mod flatmodel;
pub mod linalg;
pub mod rational;
pub mod tensor;

pub use branching::BranchLabel;
pub use casimir::EigenvaluePoly;
pub use diagrams::{IrrepLabel, YoungDiagram};
pub use error::{Error, Result};
pub use rational::Rational;
pub use tensor::Decomposition;
