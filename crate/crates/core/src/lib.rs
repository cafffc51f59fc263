//! Exact symbolic engine for a four-generator kinematical Lie algebra, its
//! Lie bialgebra structures, quantum deformations and R-matrices.
//!
//! Everything here is computed over arbitrary-precision rationals in a
//! truncated power-series ring on a fixed set of deformation symbols, so
//! every reported identity is exact up to the stated truncation order.

pub mod bialgebra;
pub mod element;
pub mod error;
pub mod family;
pub mod generator;
pub mod hopf;
pub mod linalg;
pub mod par;
pub mod param;
pub mod series;
pub mod table;
pub mod tensor;

pub use bialgebra::{Automorphism, Cocommutator, RMatrixCandidate, YbClass};
pub use hopf::{Coproduct, QTag, QuantumFamily, UniversalR};
pub use element::Element;
pub use error::CoreError;
pub use family::{Family, ParamPoint};
pub use generator::{Gen, Word};
pub use param::{Exponents, Param, PARAM_COUNT};
pub use series::{Q, Series};
pub use table::CommutationTable;
pub use tensor::{schouten, wedge, Tensor2, Tensor3};
