//! Exact verification of Rota-Baxter operators, O-operators, their deformation
//! complexes, and the graded/homotopy generalizations together with the
//! induced pre-Lie and pre-Lie∞ structures.
//!
//! All arithmetic is over exact rationals; every check is a zero-tolerance
//! comparison.

pub mod catalog;
pub mod deformation;
pub mod error;
pub mod graded;
pub mod homotopy;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod perm;
pub mod prelie;
pub mod random;
pub mod report;
pub mod scalar;

pub use deformation::{AltMap, DeformationComplex, MC_SIGN};
pub use error::{Error, Result};
pub use graded::{GradedRepresentation, GradedVectorSpace, Sgla};
pub use homotopy::{GradedCochain, GradedSymMap, HomotopyOperator, PreLieInfinity};
pub use lie::{LieAlgebra, LinearOperator, Representation, Space};
pub use linalg::{Matrix, Vector};
pub use perm::{DegreeVector, Permutation};
pub use prelie::{HookedMap, PreLieProduct, CIRC_SIGN};
pub use report::{Report, Witness};
pub use scalar::Rational;
