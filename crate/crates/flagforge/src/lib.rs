//! Fock-Goncharov coordinates of flag configurations, cluster-quiver diagonal
//! flips, the tropical scaled-limit calculus for tree-type coordinate
//! sequences, the preferred-lamination construction, and totally positive
//! holonomy with Hilbert-length asymptotics.

pub mod bigfloat;
pub mod chart;
pub mod holonomy;
pub mod error;
pub mod flags;
pub mod matrix;
pub mod polygon;
pub mod quiver;
pub mod scalar;
pub mod surface;
pub mod sym;
pub mod tropical;

pub use error::{Error, Result};
