//! Exact lattice-cone geometry and symbolic shift and CCR calculus for
//! multiparameter isometric representations of `P ∩ Z^d`.
//!
//! Everything here is `no_std` and allocates through `alloc`.

#![no_std]

extern crate alloc;

pub mod certificate;
pub mod cone;
pub mod error;
pub mod fock;
pub mod lattice;
pub mod lp;
pub mod module;
pub mod opposite_rep;
pub mod rational;
pub mod sparse;

pub use cone::Cone;
pub use error::{Error, Result};
pub use lattice::{Point, Window};
pub use module::{ConeModule, Decision, ModuleExpr};
pub use sparse::{RepContext, SparseVector};
