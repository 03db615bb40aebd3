//! L2-Betti numbers of Coxeter systems read off from their labeled nerves,
//! and non-planarity certificates for metric flag complexes.
//!
//! The pipeline runs from a [`CoxeterSpec`] (a Coxeter matrix) through its
//! [`Nerve`] to exact orbifold Euler characteristics and a rule engine that
//! fills in L2-Betti numbers wherever a vanishing or product theorem applies.
//! The [`planarity`] module turns a positive lower bound on `beta_2` into a
//! certificate that the underlying graph does not embed in the 2-sphere.

pub mod classify;
pub mod cli;
pub mod coxeter;
pub mod error;
pub mod fixtures;
pub mod l2;
pub mod nerve;
pub mod planarity;
pub mod rational;
pub mod word_oracle;

pub use classify::{classify, cosine_matrix_test, diagram_components, FiniteKind, SphericalVerdict};
pub use coxeter::{parse_spec, CoxeterSpec, Label, VertexSubset};
pub use error::{Error, Result};
pub use l2::{atiyah_check, betti, betti_lower_bound_dim2, chi_orb, chi_orb_chain_sum, BettiVector, RuleContext};
pub use nerve::{build_nerve, cone2, detect_join2, full_subcomplex, join2, link, Nerve, SphereKind};
pub use planarity::{brute_force_planar, certify_nonplanar, cone_construction, trace_vanishing, Certificate, RotationSystem};
pub use rational::ExactRational;
pub use word_oracle::{enumerate_order, verify_classification, EnumerationResult};
