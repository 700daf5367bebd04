//! Places of odd degree `n >= 5`, anchored on the fixed-point divisor of
//! their Frobenius function.

use super::PlaceSink;
use crate::ctx::Ctx;
use crate::enum_divisors::walk_divisors;
use crate::error::Result;
use crate::frobmap::{
    ff1_representatives, places_with_frobenius_function, FixedPointFamily, RationalMap, Route,
};
use crate::orbits::{cross_key, stabilizer_of_divisor};
use crate::projgeom::{divisor_of_poly, HomPoly};
use crate::stream::{Cursor, Walk};

/// Maps standing for the stabilizer classes of maps fixing `3 P_inf`,
/// `2 P_inf + P_0` (degree five only) and `4 P_inf` (degree seven only),
/// or `None` when the generic stabilizer filter applies.
fn special_maps(ctx: &Ctx, n: usize, d: &HomPoly) -> Result<Option<Vec<RationalMap>>> {
    let f = ctx.f();
    let q = ctx.q();
    let y3 = HomPoly(vec![1, 0, 0, 0]);
    let xy2 = HomPoly(vec![0, 1, 0, 0]);
    let y4 = HomPoly(vec![1, 0, 0, 0, 0]);
    let map = |g: Vec<u32>, h: Vec<u32>| RationalMap::new(f, HomPoly(g), HomPoly(h));
    let mut out = Vec::new();
    if *d == y3 && (n == 5 || n == 7) {
        // (x^2 + c y^2)/(x y), c running over the square classes
        out.push(map(vec![1, 0, 1], vec![0, 1, 0])?);
        if let Some(nu) = ctx.nonsquare() {
            out.push(map(vec![nu, 0, 1], vec![0, 1, 0])?);
        }
    } else if *d == xy2 && n == 5 {
        // (x^2 + s x y)/(x y + y^2) with s != 1
        for s in (0..q).filter(|&s| s != 1) {
            out.push(map(vec![0, s, 1], vec![1, 1, 0])?);
        }
    } else if *d == y4 && n == 7 {
        if q % 2 == 1 {
            for r in 1..q {
                out.push(map(vec![r, r, 0, 1], vec![r, 0, 1, 0])?);
            }
        } else {
            for r in [0, ctx.trace_one()] {
                for s in 1..q {
                    out.push(map(vec![s, r, 1, 1], vec![r, 1, 1, 0])?);
                }
            }
        }
        for r in ctx.cube_classes() {
            out.push(map(vec![r, 0, 0, 1], vec![0, 0, 1, 0])?);
        }
    } else {
        return Ok(None);
    }
    Ok(Some(out))
}

/// Places of degree `n` with Frobenius function `m`, one per cross
/// polynomial, smallest form first.
fn places_for_map(ctx: &Ctx, m: &RationalMap, n: usize) -> Result<Vec<HomPoly>> {
    let route = Route::cheaper(ctx.q(), m.degree(), n);
    let mut l = Vec::new();
    for p in places_with_frobenius_function(ctx, m, n, route)? {
        l.push((cross_key(&ctx.field, &p)?, p));
    }
    l.sort();
    l.dedup_by(|b, a| a.0 == b.0);
    Ok(l.into_iter().map(|(_, p)| p).collect())
}

pub(super) fn walk_odd(ctx: &Ctx, n: usize, cur: &mut Cursor, sink: &mut PlaceSink) -> Walk {
    let f = ctx.f();
    cur.range(2, |cur, phase| {
        if phase == 0 {
            let reps = ff1_representatives(ctx, n)?;
            return cur.each(&reps, |cur, p| sink(cur, p.clone()));
        }
        cur.range((n.div_ceil(2) - 2) as u64, |cur, k| {
            let deg = 3 + k as usize;
            walk_divisors(ctx, deg, cur, &mut |cur, dp| {
                let emit = |cur: &mut Cursor, m: &RationalMap, sink: &mut PlaceSink| -> Walk {
                    let ps = places_for_map(ctx, m, n)?;
                    cur.each(&ps, |cur, p| sink(cur, p.clone()))
                };
                if let Some(maps) = special_maps(ctx, n, &dp)? {
                    return cur.each(&maps, |cur, m| emit(cur, m, sink));
                }
                let d = divisor_of_poly(ctx, &dp)?;
                let stab = stabilizer_of_divisor(ctx, &d)?;
                let fam = FixedPointFamily::new(f, &d)?;
                cur.range(fam.len(), |cur, i| {
                    let Some(m) = fam.get(f, i) else { return Ok(()) };
                    if stab.iter().any(|g| m.conjugate_by(f, g) < m) {
                        return Ok(());
                    }
                    emit(cur, &m, sink)
                })
            })
        })
    })
}
