//! Orbit representatives of places.

mod even;
mod odd;

use crate::ctx::Ctx;
use crate::enum_divisors::{place_at, place_index_count};
use crate::error::{Error, Result};
use crate::frobmap::ff1_representatives;
use crate::orbits::{canonical_quadratic, cross_polynomial};
use crate::projgeom::HomPoly;
use crate::stream::{collect, drive, Cursor, ResumeState, Walk};
use std::collections::HashSet;

pub type PlaceSink<'a> = dyn FnMut(&mut Cursor, HomPoly) -> Walk + 'a;

/// Walks orbit representatives of the degree-`n` places.
pub fn walk_places(ctx: &Ctx, n: usize, cur: &mut Cursor, sink: &mut PlaceSink) -> Walk {
    match n {
        0 => Err(Error::InvalidDegree("place degree must be at least 1".into()).into()),
        1 => sink(cur, HomPoly::y()),
        2 => sink(cur, canonical_quadratic(ctx.f())),
        3 => {
            let reps = ff1_representatives(ctx, 3)?;
            cur.each(&reps, |cur, p| sink(cur, p.clone()))
        }
        4 => cur.each(quartics(ctx)?, |cur, p| sink(cur, p.clone())),
        _ if n % 2 == 1 => odd::walk_odd(ctx, n, cur, sink),
        _ => even::walk_even(ctx, n, cur, sink),
    }
}

/// Irreducible quartics in `poly_key` order, one per cross polynomial.
pub fn quartics(ctx: &Ctx) -> Result<&[HomPoly]> {
    if let Some(v) = ctx.cache.quartics.get() {
        return Ok(v);
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for i in 0..place_index_count(ctx.q(), 4) {
        if let Some(p) = place_at(ctx, 4, i) {
            if seen.insert(cross_polynomial(&ctx.field, &p)?) {
                out.push(p);
            }
        }
    }
    Ok(ctx.cache.quartics.get_or_init(|| out))
}

/// All place representatives of degree `n`.
pub fn places_up_to_pgl2(ctx: &Ctx, n: usize) -> Result<Vec<HomPoly>> {
    collect(|cur, sink| walk_places(ctx, n, cur, sink))
}

/// Streams place representatives from `state` (see [`drive`]).
pub fn stream_places(
    ctx: &Ctx,
    n: usize,
    state: &mut ResumeState,
    limit: Option<u64>,
    emit: impl FnMut(&HomPoly) -> Result<()>,
) -> Result<bool> {
    check_state(ctx, state, "places", n)?;
    drive(state, limit, |cur, sink| walk_places(ctx, n, cur, sink), emit)
}

pub(crate) fn check_state(ctx: &Ctx, state: &ResumeState, kind: &str, n: usize) -> Result<()> {
    if state.kind != kind || state.q != ctx.q() as u64 || state.n as usize != n {
        return Err(Error::State(format!(
            "state is for {} q={} n={}, not {kind} q={} n={n}",
            state.kind,
            state.q,
            state.n,
            ctx.q()
        )));
    }
    Ok(())
}
