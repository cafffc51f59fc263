//! Numeric toolkit built on the exact engine: deformed phase-space
//! realizations, conserved-quantity certification, Hamiltonian integration
//! and lattice evolution for the discretized wave operator.
//!
//! The crate has two halves. The classical half realizes the deformed
//! symmetry generators as functions on N-particle phase space (exactly, via
//! closed-form composition rules), builds Hamiltonians from them, certifies
//! that the hierarchy of two-body invariants Poisson-commutes, and
//! integrates the resulting flows while monitoring conservation. The
//! lattice half discretizes the deformed wave operator on a uniform grid,
//! evolves it with explicit or unconditionally stable implicit schemes,
//! runs refinement studies against the continuum flow, and certifies the
//! generator algebra of the discrete system in exact rational arithmetic.

pub mod bracket;
pub mod error;
pub mod hamiltonian;
pub mod integrate;
pub mod lattice;
pub mod opalg;
pub mod realize;
pub mod scalar;
pub mod symmetry;

pub use bracket::{gradient, poisson_bracket, poisson_bracket_scaled, BracketValue};
pub use error::DynError;
pub use hamiltonian::{
    certify_closed_forms, certify_closure, certify_involution, ClosedFormCertificate,
    ClosureCertificate, HamiltonianSystem, InvolutionCertificate, PairResidual, Potential,
};
pub use integrate::{
    integrate, integrate_batch, integrate_batch_seq, ConservationReport, Method, Trajectory,
};
pub use lattice::{
    heat_refinement_study, solve_hse, Boundary, Grid, HseConfig, HseRun, PdeMode, RefinementStudy,
    Scheme,
};
pub use opalg::{GridOp, OpIdentity, WaveAlgebra, XtPoly};
pub use realize::{
    DeformParams, PhaseRealization, PoissonFamily, MASS_SERIES_THRESHOLD,
};
pub use scalar::{Dual, Scalar, Smooth1D};
pub use symmetry::{verify_symmetry, GeneratorDeviation, SymmetryReport};
