//! Orbit representatives of effective divisors.

mod all;
mod reduced;

pub use all::{place_at, place_index_count, walk_reduced_all};
pub use reduced::{walk_reduced, DivisorSink};

use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::orbits::same_orbit_same_support;
use crate::projgeom::{Divisor, GaloisType, HomPoly};
use crate::stream::{collect, drive, Cursor, ResumeState, Walk};

/// Galois types of degree `1..=n`, lexicographically decreasing.
pub fn galois_types(n: usize) -> Vec<GaloisType> {
    fn parts(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<GaloisType>) {
        if rem == 0 {
            out.push(cur.clone());
            return;
        }
        for d in (1..=rem.min(max)).rev() {
            cur.push(d);
            parts(rem - d, d, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    for k in 1..=n {
        parts(k, k, &mut Vec::new(), &mut out);
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

/// Every divisor of degree `n` with support `s`.
pub fn multiplicity_assignments(s: &Divisor, n: usize) -> Vec<Divisor> {
    let places: Vec<&HomPoly> = s.places().collect();
    let mut out = Vec::new();
    let mut mult = Vec::with_capacity(places.len());
    fn rec(places: &[&HomPoly], rem: usize, mult: &mut Vec<u32>, out: &mut Vec<Divisor>) {
        let j = mult.len();
        if j == places.len() {
            if rem == 0 {
                let parts = places.iter().zip(mult.iter()).map(|(p, &m)| ((*p).clone(), m));
                out.push(Divisor::new(parts.collect()));
            }
            return;
        }
        let d = places[j].degree();
        let tail: usize = places[j + 1..].iter().map(|p| p.degree()).sum();
        let mut m = 1;
        while m * d + tail <= rem {
            mult.push(m as u32);
            rec(places, rem - m * d, mult, out);
            mult.pop();
            m += 1;
        }
    }
    rec(&places, n, &mut mult, &mut out);
    out
}

/// The `poly_key`-smallest member of each orbit among divisors sharing one
/// support, sorted.
pub fn orbit_minima(ctx: &Ctx, divisors: Vec<Divisor>) -> Result<Vec<HomPoly>> {
    let f = ctx.f();
    let shape = |d: &Divisor| {
        let mut s: Vec<(usize, u32)> = d.parts().iter().map(|(p, m)| (p.degree(), *m)).collect();
        s.sort_unstable();
        s
    };
    let mut classes: Vec<(Divisor, HomPoly)> = Vec::new();
    'next: for d in divisors {
        let fd = d.poly(f);
        for (rep, best) in classes.iter_mut() {
            if shape(rep) == shape(&d) && same_orbit_same_support(ctx, rep, &d)? {
                if fd < *best {
                    *best = fd;
                }
                continue 'next;
            }
        }
        classes.push((d, fd));
    }
    let mut out: Vec<HomPoly> = classes.into_iter().map(|(_, f)| f).collect();
    out.sort();
    Ok(out)
}

/// Walks orbit representatives of degree-`n` effective divisors, given by
/// their monic forms.
pub fn walk_divisors(
    ctx: &Ctx,
    n: usize,
    cur: &mut Cursor,
    sink: &mut dyn FnMut(&mut Cursor, HomPoly) -> Walk,
) -> Walk {
    if n == 0 {
        return Err(Error::InvalidDegree("divisor degree must be at least 1".into()).into());
    }
    let types = galois_types(n);
    cur.each(&types, |cur, m| {
        walk_reduced(ctx, m, cur, &mut |cur, s| {
            let reps = orbit_minima(ctx, multiplicity_assignments(&s, n))?;
            cur.each(&reps, |cur, f| sink(cur, f.clone()))
        })
    })
}

/// All divisor representatives of degree `n`.
pub fn divisors_up_to_pgl2(ctx: &Ctx, n: usize) -> Result<Vec<HomPoly>> {
    collect(|cur, sink| walk_divisors(ctx, n, cur, sink))
}

/// All reduced divisor representatives of Galois type `m`.
pub fn reduced_divisors_of_type(ctx: &Ctx, m: &[usize]) -> Result<Vec<Divisor>> {
    collect(|cur, sink| walk_reduced(ctx, m, cur, sink))
}

/// Streams divisor representatives (as monic forms) from `state`.
pub fn stream_divisors(
    ctx: &Ctx,
    n: usize,
    state: &mut ResumeState,
    limit: Option<u64>,
    emit: impl FnMut(&HomPoly) -> Result<()>,
) -> Result<bool> {
    crate::enum_places::check_state(ctx, state, "divisors", n)?;
    drive(state, limit, |cur, sink| walk_divisors(ctx, n, cur, sink), emit)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn types_are_partitions_in_decreasing_order() {
        let t = galois_types(3);
        assert_eq!(t, vec![vec![3], vec![2, 1], vec![2], vec![1, 1, 1], vec![1, 1], vec![1]]);
        assert_eq!(galois_types(5).iter().filter(|m| m.iter().sum::<usize>() == 5).count(), 7);
    }

    #[test]
    fn assignments() {
        let p = HomPoly::y();
        let s = Divisor::reduced(vec![p.clone()]);
        assert_eq!(multiplicity_assignments(&s, 3), vec![Divisor::new(vec![(p.clone(), 3)])]);
        let s = Divisor::reduced(vec![p.clone(), HomPoly::x()]);
        assert_eq!(multiplicity_assignments(&s, 3).len(), 2);
        let s = Divisor::reduced(vec![p, HomPoly(vec![1, 0, 1])]);
        assert_eq!(multiplicity_assignments(&s, 4).len(), 1);
        assert_eq!(multiplicity_assignments(&s, 5).len(), 2);
    }
}
