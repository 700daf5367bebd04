//! `PGL_2` machinery: the group, maps between divisors and stabilizers,
//! coset representatives over `F_{q^2}`, and complete orbit invariants.

mod cosets;
mod group;
mod invariants;
mod mappings;

pub use cosets::{CosetReps, QuadExt};
pub use group::enumerate_group;
pub use invariants::{cross_key, cross_polynomial, lambda_invariant, residue_field, CrossPoly};
pub(crate) use invariants::lambda_unchecked;
pub use mappings::{
    canonical_quadratic, frobenius_points, mappings, same_orbit, same_orbit_same_support,
    stabilizer, stabilizer_of_divisor, table_stabilizer, GeomDivisor, GeomPlace, SmallSupport,
};
