//! Exact computation of the bigraded Chen-Ruan orbifold cohomology of a
//! Calabi-Yau hypersurface quotient and of the bigraded state space of the
//! associated Landau-Ginzburg orbifold, together with the transpose-polynomial
//! mirror construction and verifiers for both correspondences.
//!
//! Everything is carried out in exact arithmetic: weights and degrees as
//! integers, gradings and group elements as rationals, character sums as
//! integer combinations of roots of unity.

pub mod cli;
pub mod diagram;
pub mod error;
pub mod linalg;
pub mod milnor;
pub mod mirror;
pub mod parse;
pub mod poly;
pub mod rat;
pub mod report;
pub mod state;
pub mod svg;
pub mod symmetry;

pub use error::{Error, Result};
pub use poly::{AtomicDecomposition, ChargeData, ExponentMatrix, PolyData};
pub use rat::Rat;
pub use state::{BigradedDims, Sector, StateSpace};
pub use symmetry::{PhaseVector, SymmetryGroup};
