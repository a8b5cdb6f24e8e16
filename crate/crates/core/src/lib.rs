//! Weight posets of weight-multiplicity-free representations and gradings of
//! simple Lie algebras.

pub mod catalog;
pub mod error;
pub mod gradings;
pub mod iso;
pub mod models;
pub mod report;
pub mod root_system;
pub mod verify;
pub mod weight_poset;

pub use error::{Error, Result};
pub use root_system::{CartanMatrix, Family, Root, RootSystem, SimpleType, Weight};
pub use weight_poset::{CoveringPolynomial, Direction, Edge, IrrepLabel, WeightPoset};
