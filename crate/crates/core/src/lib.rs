//! Exact verification and construction of symplectic pairs, contact-symplectic
//! pairs and contact pairs on Lie algebras and on coordinate charts.

#![allow(clippy::needless_range_loop)]

pub mod boothby_wang;
pub mod cli;
pub mod coordforms;
pub mod error;
pub mod exterior;
pub mod form;
pub mod fourman;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod pairs;
pub mod poly;
pub mod reproduce;
pub mod sampling;
pub mod scalar;
pub mod search;

pub use error::{Error, Result};
pub use exterior::ExteriorForm;
pub use form::{Blade, Coefficient, Form};
pub use lie::{LieAlgebra, StructureConstants};
pub use linalg::Subspace;
pub use scalar::Scalar;
