//! Orbit representatives for the action of `PGL_2(F_q)` on places and
//! effective divisors of the projective line over a finite field.

pub mod arith;
pub mod ctx;
pub mod enum_divisors;
pub mod enum_places;
pub mod error;
pub mod format;
pub mod frobmap;
pub mod gfield;
pub mod polyfactor;
pub mod oracle;
pub mod orbits;
pub mod projgeom;
pub mod stream;
pub mod upoly;
pub mod verify;

pub use ctx::Ctx;
pub use error::{Error, Result};
