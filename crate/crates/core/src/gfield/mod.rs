//! Finite field arithmetic: the base field `F_q` (table driven), its
//! extensions `F_{q^i}` with explicit bases over `F_q`, and the tower that
//! ties the extension levels together by compatible embeddings.

mod gf;
mod level;
mod tower;

pub use gf::{Gf, PrimeField};
pub(crate) use gf::smallest_irreducible;
pub use level::{ExtElem, Level};
pub use tower::{element_key, FieldInvariants, Tower};

use rand::RngCore;
use std::fmt::Debug;
use std::hash::Hash;

/// Largest base field handled by the table-driven representation.
pub const MAX_TABLE_FIELD: u64 = 1 << 22;

/// A finite field with elements of type `Elem`.
///
/// `Ord` on elements is the canonical element ordering: `0` is minimal and
/// `from_index` enumerates the field in increasing order.
pub trait Field {
    type Elem: Clone + Eq + Ord + Hash + Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; panics on zero.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// Number of elements.
    fn size(&self) -> u128;
    fn characteristic(&self) -> u32;
    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;
    /// The `i`-th element in canonical order, `0 <= i < size`.
    fn from_index(&self, i: u128) -> Self::Elem;
    /// Image of the integer `c` under `Z -> F`.
    fn from_int(&self, c: u64) -> Self::Elem;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.mul(a, &self.inv(b))
    }

    fn pow(&self, a: &Self::Elem, mut e: u128) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }

    /// Product of two coefficient lists (untrimmed).
    fn poly_mul(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        crate::upoly::mul_schoolbook(self, a, b)
    }

    /// Monic gcd (empty when both are zero).
    fn poly_gcd(&self, a: &[Self::Elem], b: &[Self::Elem]) -> Vec<Self::Elem> {
        crate::upoly::gcd_euclid(self, a, b)
    }

    /// Quotient and remainder, both trimmed; `b` nonzero.
    fn poly_divrem(
        &self,
        a: &[Self::Elem],
        b: &[Self::Elem],
    ) -> (Vec<Self::Elem>, Vec<Self::Elem>) {
        crate::upoly::divrem_schoolbook(self, a, b)
    }

    /// `log_p(size)`.
    fn prime_degree(&self) -> u32 {
        let p = self.characteristic() as u128;
        let mut n = self.size();
        let mut k = 0;
        while n > 1 {
            n /= p;
            k += 1;
        }
        k
    }
}
