use p1orbits::enum_divisors::*;
use p1orbits::oracle::{brute_force_divisor_orbits, Orbit};
use p1orbits::orbits::lambda_invariant;
use p1orbits::projgeom::HomPoly;
use p1orbits::Ctx;
use std::collections::{BTreeMap, BTreeSet};

/// Index of the orbit of each representative; panics unless every orbit is
/// hit exactly once.
fn assert_hits_each_orbit_once(orbits: &[Orbit], reps: &[HomPoly], what: &str) {
    let mut index = BTreeMap::new();
    for (k, o) in orbits.iter().enumerate() {
        for m in &o.members {
            index.insert(m.clone(), k);
        }
    }
    let mut hit = vec![0usize; orbits.len()];
    for r in reps {
        let k = *index.get(r).unwrap_or_else(|| panic!("{what}: {r:?} is not in any orbit"));
        hit[k] += 1;
    }
    for (k, h) in hit.iter().enumerate() {
        assert_eq!(*h, 1, "{what}: orbit of {:?} hit {h} times", orbits[k].least());
    }
}

#[test]
fn divisors_match_oracle_small() {
    for q in [2u64, 3, 4, 5] {
        for n in 1..=5usize {
            let ctx = Ctx::new(q, n, 1).unwrap();
            let reps = divisors_up_to_pgl2(&ctx, n).unwrap();
            let orbits = brute_force_divisor_orbits(q, n as u32).unwrap();
            assert_hits_each_orbit_once(&orbits, &reps, &format!("q={q} n={n}"));
        }
    }
}

#[test]
fn divisor_representatives_are_orbit_minima_within_support() {
    let ctx = Ctx::new(3, 3, 1).unwrap();
    let reps = divisors_up_to_pgl2(&ctx, 2).unwrap();
    assert_eq!(reps.len(), 3);
    assert_eq!(divisors_up_to_pgl2(&ctx, 1).unwrap(), vec![HomPoly::y()]);
}

#[test]
fn reduced_types() {
    for q in [2u64, 3, 4, 5, 7] {
        let ctx = Ctx::new(q, 3, 1).unwrap();
        let d = reduced_divisors_of_type(&ctx, &[1, 1, 1]).unwrap();
        assert_eq!(d.len(), 1);
        assert!(reduced_divisors_of_type(&ctx, &[1, 2]).is_err());
    }
    let ctx = Ctx::new(5, 4, 1).unwrap();
    let f = ctx.f();
    let d = reduced_divisors_of_type(&ctx, &[2, 2]).unwrap();
    let lambdas: BTreeSet<u32> = d
        .iter()
        .map(|x| {
            let p: Vec<&HomPoly> = x.places().collect();
            lambda_invariant(f, p[0], p[1]).unwrap()
        })
        .collect();
    assert_eq!(lambdas.len(), d.len());
    let orbits: Vec<Orbit> = brute_force_divisor_orbits(5, 4)
        .unwrap()
        .into_iter()
        .filter(|o| {
            let ctx = &ctx;
            let dv = p1orbits::projgeom::divisor_of_poly(ctx, o.least()).unwrap();
            dv.is_reduced() && dv.galois_type() == vec![2, 2]
        })
        .collect();
    assert_eq!(orbits.len(), d.len());
}
