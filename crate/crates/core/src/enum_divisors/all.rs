//! Every place of a given degree, and every reduced divisor of a given
//! Galois type, in `poly_key` order (no group action involved).

use crate::ctx::Ctx;
use crate::projgeom::HomPoly;
use crate::stream::{Cursor, Walk};
use crate::upoly;

/// Size of the index space scanned for places of degree `m`.
pub fn place_index_count(q: u32, m: usize) -> u64 {
    if m == 1 {
        q as u64 + 1
    } else {
        (q as u64).pow(m as u32)
    }
}

/// The candidate form at index `i` (indices follow `poly_key` order), or
/// `None` if it is reducible.
pub fn place_at(ctx: &Ctx, m: usize, i: u64) -> Option<HomPoly> {
    let q = ctx.q() as u64;
    if m == 1 {
        return Some(if i == 0 { HomPoly::y() } else { HomPoly(vec![(i - 1) as u32, 1]) });
    }
    let mut r = i;
    let mut c: Vec<u32> = (0..m)
        .map(|_| {
            let d = (r % q) as u32;
            r /= q;
            d
        })
        .collect();
    c.push(1);
    upoly::is_irreducible(ctx.f(), &c).then_some(HomPoly(c))
}

/// Runs `body` on every reduced divisor of Galois type `types` (given as a
/// non-increasing list) avoiding the places in `exclude`. Places of equal
/// degree appear in increasing order.
pub fn walk_reduced_all(
    ctx: &Ctx,
    types: &[usize],
    exclude: &[HomPoly],
    cur: &mut Cursor,
    body: &mut dyn FnMut(&mut Cursor, &[HomPoly]) -> Walk,
) -> Walk {
    let mut chosen: Vec<HomPoly> = Vec::with_capacity(types.len());
    let mut last = vec![0u64; types.len()];
    rec(ctx, types, exclude, 0, &mut chosen, &mut last, cur, body)
}

#[allow(clippy::too_many_arguments)]
fn rec(
    ctx: &Ctx,
    types: &[usize],
    exclude: &[HomPoly],
    j: usize,
    chosen: &mut Vec<HomPoly>,
    last: &mut Vec<u64>,
    cur: &mut Cursor,
    body: &mut dyn FnMut(&mut Cursor, &[HomPoly]) -> Walk,
) -> Walk {
    if j == types.len() {
        return body(cur, chosen);
    }
    let m = types[j];
    let lo = if j > 0 && types[j - 1] == m { last[j - 1] + 1 } else { 0 };
    cur.range_in(lo, place_index_count(ctx.q(), m), |cur, i| {
        let Some(p) = place_at(ctx, m, i) else { return Ok(()) };
        if exclude.contains(&p) {
            return Ok(());
        }
        last[j] = i;
        chosen.push(p);
        let r = rec(ctx, types, exclude, j + 1, chosen, last, cur, body);
        chosen.pop();
        r
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_of_reduced_divisors() {
        let ctx = Ctx::new(3, 2, 1).unwrap();
        let mut n = 0;
        walk_reduced_all(&ctx, &[1, 1], &[], &mut Cursor::new(), &mut |_, _| {
            n += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(n, 6);
        let mut n = 0;
        walk_reduced_all(&ctx, &[2, 1], &[HomPoly::y()], &mut Cursor::new(), &mut |_, _| {
            n += 1;
            Ok(())
        })
        .unwrap();
        assert_eq!(n, 3 * 3);
    }
}
