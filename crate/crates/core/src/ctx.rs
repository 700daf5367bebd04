//! Shared read-only data for one enumeration over a fixed ground field.

use crate::arith;
use crate::error::{Error, Result};
use crate::gfield::{Field, Gf, Level, Tower};
use crate::projgeom::HomPoly;
use std::sync::{Arc, OnceLock};

/// Base lists computed once per context and shared by every stream.
#[derive(Debug, Default)]
pub(crate) struct BaseCache {
    pub quartics: OnceLock<Vec<HomPoly>>,
    pub quadratic_partners: OnceLock<Vec<HomPoly>>,
}

/// Ground field, extension tower and factorization seed.
#[derive(Clone, Debug)]
pub struct Ctx {
    pub field: Arc<Gf>,
    pub tower: Tower,
    pub seed: u64,
    pub(crate) cache: Arc<BaseCache>,
}

impl Ctx {
    /// Context over `F_q` with levels `1..=max_level`.
    pub fn new(q: u64, max_level: usize, seed: u64) -> Result<Self> {
        let (p, e) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
        let field = Arc::new(Gf::new(p, e)?);
        Self::with_field(field, 1..=max_level.max(1), seed)
    }

    pub fn with_field(
        field: Arc<Gf>,
        levels: impl IntoIterator<Item = usize>,
        seed: u64,
    ) -> Result<Self> {
        let tower = Tower::new(field.clone(), levels)?;
        Ok(Ctx { field, tower, seed, cache: Arc::default() })
    }

    pub fn q(&self) -> u32 {
        self.field.q()
    }

    pub fn f(&self) -> &Gf {
        &self.field
    }

    pub fn level(&self, d: usize) -> Result<&Arc<Level>> {
        self.tower.level(d)
    }

    /// Order of `PGL_2(F_q)`.
    pub fn group_order(&self) -> u64 {
        let q = self.q() as u64;
        q * q * q - q
    }

    /// Smallest nonsquare (odd `q`).
    pub fn nonsquare(&self) -> Option<u32> {
        (1..self.q()).find(|&a| !self.field.is_square(a))
    }

    /// Smallest element with nonzero absolute trace.
    pub fn trace_nonzero(&self) -> u32 {
        (1..self.q())
            .find(|&a| self.field.absolute_trace(a) != 0)
            .expect("the trace map is onto")
    }

    /// Smallest element with absolute trace 1.
    pub fn trace_one(&self) -> u32 {
        (1..self.q())
            .find(|&a| self.field.absolute_trace(a) == 1)
            .expect("the trace map is onto")
    }

    /// Sizes of the cached base lists (quartic representatives, partners of
    /// the canonical quadratic); zero until first used.
    pub fn base_list_sizes(&self) -> (usize, usize) {
        let len = |c: &OnceLock<Vec<HomPoly>>| c.get().map_or(0, Vec::len);
        (len(&self.cache.quartics), len(&self.cache.quadratic_partners))
    }

    /// Representatives of `F_q^x / (F_q^x)^3`: `{1}` or `{1, z, z^2}` with `z`
    /// the canonical generator.
    pub fn cube_classes(&self) -> Vec<u32> {
        let f = self.f();
        if (self.q() - 1).is_multiple_of(3) {
            let z = f.generator();
            vec![1, z, f.mul(&z, &z)]
        } else {
            vec![1]
        }
    }
}
