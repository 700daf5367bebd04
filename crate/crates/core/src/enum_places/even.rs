//! Places of even degree `n >= 6`, from places of degree `n/2` over
//! `F_{q^2}` moved around by coset representatives.

use super::{walk_places, PlaceSink};
use crate::ctx::Ctx;
use crate::error::Error;
use crate::orbits::{cross_key, mappings, GeomDivisor, QuadExt};
use crate::projgeom::{Divisor, HomPoly};
use crate::stream::{Cursor, Walk};

pub(super) fn walk_even(ctx: &Ctx, n: usize, cur: &mut Cursor, sink: &mut PlaceSink) -> Walk {
    let m = n / 2;
    let ext = QuadExt::new(ctx.field.clone())?;
    let big = Ctx::with_field(ext.big.clone(), 1..=m, ctx.seed)?;
    let b = big.f();
    walk_places(&big, m, cur, &mut |cur, p| {
        let pq = ext.conj_poly(&p);
        let (cp, cpq) = (cross_key(&big.field, &p)?, cross_key(&big.field, &pq)?);
        if cpq < cp {
            return Ok(());
        }
        let gp = GeomDivisor::new(&big, &Divisor::reduced(vec![p.clone()]))?;
        let stab = mappings(&big, &gp, &gp)?;
        let to_conj = if cpq == cp {
            let gpq = GeomDivisor::new(&big, &Divisor::reduced(vec![pq.clone()]))?;
            mappings(&big, &gp, &gpq)?
        } else {
            Vec::new()
        };
        cur.range(ext.coset_count(), |cur, i| {
            let g = ext.coset_rep(i).expect("index below the coset count");
            let label = ext.orbit_label(&g);
            if stab.iter().any(|psi| ext.orbit_label(&g.compose(b, psi)) < label) {
                return Ok(());
            }
            let gq = ext.conj_mat(&g);
            if to_conj.iter().any(|psi| ext.orbit_label(&gq.compose(b, psi)) < label) {
                return Ok(());
            }
            let gf = g.act_on_poly(b, &p)?;
            if ext.restrict_poly(&gf).is_some() {
                return Ok(());
            }
            let prod = gf.mul(b, &ext.conj_poly(&gf));
            let out: HomPoly = ext
                .restrict_poly(&prod)
                .ok_or_else(|| Error::InvalidArgument("product is not rational".into()))?;
            sink(cur, out)
        })
    })
}
