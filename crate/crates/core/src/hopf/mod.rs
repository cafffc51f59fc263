//! Quantum (deformed Hopf) layer: coproducts and antipodes over the PBW
//! algebra, the matrix-exponential construction, the four assembled
//! families with their central elements, structural verification, and the
//! universal exchange matrices.

pub mod coproduct;
pub mod lm;
pub mod quantum;
pub mod rmatrix;
pub mod verify;

pub use coproduct::Coproduct;
pub use lm::LmMatrix;
pub use quantum::{ib_coproduct_completion, QTag, QuantumFamily};
pub use rmatrix::{lowest_nonzero_order, nonstandard_stages, UniversalR};
pub use verify::{check_family, FamilyChecks};
