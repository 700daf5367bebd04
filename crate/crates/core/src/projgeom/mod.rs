//! Forms, points, places and divisors of the projective line, and the
//! action of `PGL_2` on them.

mod divisor;
mod hompoly;
mod pgl2;

pub use divisor::{
    divisor_of_poly, galois_type_and_support, place_of_point, place_points, poly_of_divisor,
    rational_point, Divisor, GaloisType,
};
pub use hompoly::HomPoly;
pub use pgl2::{Mat2, Pgl2, ProjPoint};
pub(crate) use pgl2::substitute;
