//! Orbit representatives of reduced divisors of a fixed Galois type.

use super::all::{place_at, place_index_count, walk_reduced_all};
use crate::ctx::Ctx;
use crate::enum_places::walk_places;
use crate::error::{Error, Result};
use crate::orbits::{
    canonical_quadratic, cross_key, lambda_unchecked, mappings, table_stabilizer, GeomDivisor,
    SmallSupport,
};
use crate::projgeom::{rational_point, Divisor, HomPoly, Pgl2, ProjPoint};
use crate::stream::{Cursor, Walk};
use std::collections::HashSet;

pub type DivisorSink<'a> = dyn FnMut(&mut Cursor, Divisor) -> Walk + 'a;

fn check_type(m: &[usize]) -> Result<()> {
    if m.is_empty() || m.contains(&0) || m.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::MalformedType(m.to_vec()));
    }
    Ok(())
}

/// Is `f` the smallest of the forms `Gamma(D)` for the given `Gamma`?
fn is_minimal(ctx: &Ctx, d: &Divisor, f: &HomPoly, gammas: &[Pgl2]) -> bool {
    gammas.iter().all(|g| d.act(ctx.f(), g).poly(ctx.f()) >= *f)
}

/// Walks orbit representatives of reduced divisors of Galois type `m`.
pub fn walk_reduced(ctx: &Ctx, m: &[usize], cur: &mut Cursor, sink: &mut DivisorSink) -> Walk {
    check_type(m)?;
    let f = ctx.f();
    let ones = m.iter().filter(|&&d| d == 1).count();
    match m {
        [1] => sink(cur, Divisor::reduced(vec![HomPoly::y()])),
        [1, 1] => sink(cur, Divisor::reduced(vec![HomPoly::y(), HomPoly::x()])),
        [2] => sink(cur, Divisor::reduced(vec![canonical_quadratic(f)])),
        [2, 1] => sink(cur, Divisor::reduced(vec![HomPoly::y(), canonical_quadratic(f)])),
        [2, 1, 1] => walk_211(ctx, cur, sink),
        _ if m[0] >= 3 => walk_cross_anchored(ctx, m, cur, sink),
        _ if m[1] == 2 => walk_lambda_anchored(ctx, m, cur, sink),
        _ if ones >= 3 => walk_three_points(ctx, m, cur, sink),
        _ => Err(Error::MalformedType(m.to_vec()).into()),
    }
}

/// `y x p` with `p` an irreducible quadratic that is smallest under the
/// stabilizer of `{inf, 0}`.
fn walk_211(ctx: &Ctx, cur: &mut Cursor, sink: &mut DivisorSink) -> Walk {
    let f = ctx.f();
    let stab = table_stabilizer(f, &SmallSupport::InfZero);
    cur.range(place_index_count(ctx.q(), 2), |cur, i| {
        let Some(p) = place_at(ctx, 2, i) else { return Ok(()) };
        if stab.iter().all(|g| g.act_on_poly(f, &p).expect("nonzero") >= p) {
            sink(cur, Divisor::reduced(vec![HomPoly::y(), HomPoly::x(), p]))?;
        }
        Ok(())
    })
}

fn walk_cross_anchored(ctx: &Ctx, m: &[usize], cur: &mut Cursor, sink: &mut DivisorSink) -> Walk {
    let m1 = m[0];
    let rest = &m[1..];
    walk_places(ctx, m1, cur, &mut |cur, p1| {
        let chi = cross_key(&ctx.field, &p1)?;
        let g1 = GeomDivisor::new(ctx, &Divisor::reduced(vec![p1.clone()]))?;
        let exclude = [p1.clone()];
        walk_reduced_all(ctx, rest, &exclude, cur, &mut |cur, others| {
            let mut same: Vec<&HomPoly> = vec![&p1];
            for p in others.iter().filter(|p| p.degree() == m1) {
                let c = cross_key(&ctx.field, p)?;
                if c < chi {
                    return Ok(());
                }
                if c == chi {
                    same.push(p);
                }
            }
            let mut places = others.to_vec();
            places.push(p1.clone());
            let d = Divisor::reduced(places);
            let fd = d.poly(ctx.f());
            for p in same {
                let src = GeomDivisor::new(ctx, &Divisor::reduced(vec![p.clone()]))?;
                if !is_minimal(ctx, &d, &fd, &mappings(ctx, &src, &g1)?) {
                    return Ok(());
                }
            }
            sink(cur, d)
        })
    })
}

/// Partners `P2` of the canonical quadratic, one for each value of `lambda`.
pub(crate) fn quadratic_partners(ctx: &Ctx) -> &[HomPoly] {
    ctx.cache.quadratic_partners.get_or_init(|| {
        let f = ctx.f();
        let p1 = canonical_quadratic(f);
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for i in 0..place_index_count(ctx.q(), 2) {
            if let Some(p2) = place_at(ctx, 2, i) {
                if p2 != p1 && seen.insert(lambda_unchecked(f, &p1, &p2)) {
                    out.push(p2);
                }
            }
        }
        out
    })
}

fn walk_lambda_anchored(ctx: &Ctx, m: &[usize], cur: &mut Cursor, sink: &mut DivisorSink) -> Walk {
    let f = ctx.f();
    let p1 = canonical_quadratic(f);
    let rest = &m[2..];
    let partners = quadratic_partners(ctx);
    cur.each(partners, |cur, p2| {
        let chi = lambda_unchecked(f, &p1, p2);
        let anchor = GeomDivisor::new(ctx, &Divisor::reduced(vec![p1.clone(), p2.clone()]))?;
        let exclude = [p1.clone(), p2.clone()];
        walk_reduced_all(ctx, rest, &exclude, cur, &mut |cur, others| {
            let mut places = others.to_vec();
            places.push(p1.clone());
            places.push(p2.clone());
            let quads: Vec<&HomPoly> = places.iter().filter(|p| p.degree() == 2).collect();
            let mut pairs = Vec::new();
            for (i, a) in quads.iter().enumerate() {
                for b in &quads[i + 1..] {
                    let l = lambda_unchecked(f, a, b);
                    if l < chi {
                        return Ok(());
                    }
                    if l == chi {
                        pairs.push(((*a).clone(), (*b).clone()));
                    }
                }
            }
            let d = Divisor::reduced(places);
            let fd = d.poly(f);
            for (a, b) in pairs {
                let src = GeomDivisor::new(ctx, &Divisor::reduced(vec![a, b]))?;
                if !is_minimal(ctx, &d, &fd, &mappings(ctx, &src, &anchor)?) {
                    return Ok(());
                }
            }
            sink(cur, d)
        })
    })
}

fn walk_three_points(ctx: &Ctx, m: &[usize], cur: &mut Cursor, sink: &mut DivisorSink) -> Walk {
    let f = ctx.f();
    let rest = &m[..m.len() - 3];
    let d0 = [HomPoly::y(), HomPoly::x(), HomPoly::linear(f, 1)];
    let targets = [ProjPoint::Inf, ProjPoint::Fin(0), ProjPoint::Fin(1)];
    walk_reduced_all(ctx, rest, &d0, cur, &mut |cur, others| {
        let mut places = others.to_vec();
        places.extend(d0.iter().cloned());
        let d = Divisor::reduced(places);
        let fd = d.poly(f);
        let pts: Vec<ProjPoint<u32>> = d.places().filter_map(|p| rational_point(f, p)).collect();
        let mut gammas = Vec::new();
        for (i, a) in pts.iter().enumerate() {
            for (j, b) in pts.iter().enumerate() {
                for (k, c) in pts.iter().enumerate() {
                    if i != j && j != k && i != k {
                        gammas.push(Pgl2::mapping_triples(
                            f,
                            [a, b, c],
                            [&targets[0], &targets[1], &targets[2]],
                        )?);
                    }
                }
            }
        }
        if is_minimal(ctx, &d, &fd, &gammas) {
            sink(cur, d)?;
        }
        Ok(())
    })
}
