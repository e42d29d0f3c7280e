//! Exact computation of depth invariants for subgroup pairs and Hopf subalgebra pairs.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactalg`]: cyclotomic scalars, dense exact matrices, kernels, minimal polynomials.
//! * [`permgroup`]: permutation groups by full enumeration, classes, cores, double cosets.
//! * [`chartab`]: exact character tables (Dixon–Schneider), class fusion, inclusion matrices.
//! * [`depthmat`]: depth and h-depth from the inclusion matrix, McKay quivers.
//! * [`mackey`]: Mackey decompositions of coset modules and Hecke algebras.
//! * [`hopfcore`]: Hopf algebras by structure constants, quotient modules, integrals, ideals.
//! * [`corpus`]: the built-in catalogue of small permutation groups.

pub mod chartab;
pub mod corpus;
pub mod depthmat;
pub mod error;
pub mod exactalg;
pub mod hopfcore;
pub mod mackey;
pub mod permgroup;

pub use error::{Error, Result};
