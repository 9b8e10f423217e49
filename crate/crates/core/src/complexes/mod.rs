//! Twisted Hochschild chains, cochains and trace functionals.

mod chain;
mod cochain;
mod functional;

pub use chain::Chain;
pub use cochain::Cochain;
pub use functional::{Functional, Trace};
