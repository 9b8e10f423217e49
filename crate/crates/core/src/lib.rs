//! Exact twisted Hochschild and cyclic homology of the quantised coordinate
//! ring of SL(2).

pub mod algebra;
pub mod catalog;
pub mod complexes;
pub mod cyclic;
pub mod error;
pub mod field;
pub mod hopf;
pub mod poly;
pub mod products;
pub mod scalar;
pub mod solver;
pub mod tensor;
pub mod text;
pub mod verify;

pub use algebra::{Aut, Elem, Gen, Word};
pub use complexes::{Chain, Cochain, Functional, Trace};
pub use error::{Error, Result};
pub use field::Field;
pub use scalar::Scalar;
