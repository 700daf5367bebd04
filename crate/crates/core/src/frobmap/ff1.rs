use crate::arith::gcd;
use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::gfield::{Field, Tower};
use crate::projgeom::HomPoly;

fn exponents(n: usize) -> impl Iterator<Item = usize> {
    (1..=n / 2).filter(move |&i| gcd(i as u64, n as u64) == 1)
}

/// Orbit representatives of the degree-`n` places (odd `n > 1`) whose
/// Frobenius function has degree one, sorted.
pub fn ff1_representatives(ctx: &Ctx, n: usize) -> Result<Vec<HomPoly>> {
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidDegree(format!("expected odd n > 1, got {n}")));
    }
    let f = ctx.f();
    let q = ctx.q() as u64;
    let nn = n as u64;
    let mut out = Vec::new();
    if nn == f.p() as u64 {
        let mut c = vec![0u32; n + 1];
        c[0] = f.neg(&ctx.trace_nonzero());
        c[1] = f.neg(&1);
        c[n] = 1;
        out.push(HomPoly(c));
    } else if (q - 1).is_multiple_of(nn) {
        let z = f.generator();
        for i in exponents(n) {
            let mut c = vec![0u32; n + 1];
            c[0] = f.neg(&f.pow(&z, i as u128));
            c[n] = 1;
            out.push(HomPoly(c));
        }
    } else if (q + 1).is_multiple_of(nn) {
        let local;
        let tower = if ctx.tower.has_level(2 * n) {
            &ctx.tower
        } else {
            local = Tower::new(ctx.field.clone(), [2, 2 * n])?;
            &local
        };
        let big = tower.level(2 * n)?;
        let s = tower.embed(&tower.level(2)?.generator_s(), 2, 2 * n)?;
        let sq = big.frobenius(&s);
        let xi = big.find_element_of_order(nn * (q + 1))?;
        for i in exponents(n) {
            let b = big.pow(&xi, i as u128);
            let num = big.add(&big.mul(&s, &b), &sq);
            let den = big.add(&b, &big.one());
            let alpha = big.div(&num, &den);
            let m = big.invariants(&alpha).minpoly;
            debug_assert_eq!(m.len(), n + 1);
            out.push(HomPoly(m));
        }
    }
    out.sort();
    Ok(out)
}
