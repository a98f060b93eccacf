//! Explicit symplectomorphisms between cotangent bundles of spheres, products of
//! spheres, quadrics and projective spaces, with numerical and exact checks of the
//! Lagrangians and invariants built from them.

pub mod atlas;
pub mod calculus;
pub mod error;
pub mod floerdata;
pub mod geomcore;
pub mod invariants;
pub mod lagrangians;
pub mod par;
pub mod tolerances;

pub use error::{GeomError, Result};
