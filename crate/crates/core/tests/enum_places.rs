use p1orbits::enum_places::places_up_to_pgl2;
use p1orbits::oracle::{brute_force_place_orbits, Orbit};
use p1orbits::projgeom::HomPoly;
use p1orbits::Ctx;
use std::collections::BTreeMap;

fn orbit_hits(orbits: &[Orbit], reps: &[HomPoly]) -> Result<(), String> {
    let mut index = BTreeMap::new();
    for (k, o) in orbits.iter().enumerate() {
        for m in &o.members {
            index.insert(m.clone(), k);
        }
    }
    let mut hit = vec![0usize; orbits.len()];
    for r in reps {
        let k = *index.get(r).ok_or_else(|| format!("{r:?} is not a place"))?;
        hit[k] += 1;
    }
    let bad: Vec<_> = hit.iter().enumerate().filter(|(_, h)| **h != 1).collect();
    if bad.is_empty() {
        Ok(())
    } else {
        Err(format!("{} of {} orbits hit wrongly, e.g. {:?} hit {}", bad.len(), orbits.len(), orbits[bad[0].0].least(), bad[0].1))
    }
}

#[test]
fn places_match_oracle() {
    let grid: &[(u64, usize)] = &[
        (2, 1), (3, 1), (2, 2), (3, 2), (4, 2),
        (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
        (3, 3), (3, 4), (3, 5), (3, 6),
        (3, 7), (4, 4), (4, 5), (4, 6), (5, 4), (5, 5), (5, 6), (7, 4), (7, 5),
    ];
    let mut failures = Vec::new();
    for &(q, n) in grid {
        let t = std::time::Instant::now();
        let ctx = Ctx::new(q, n, 1).unwrap();
        let reps = places_up_to_pgl2(&ctx, n).unwrap();
        let orbits = brute_force_place_orbits(q, n as u32).unwrap();
        let r = orbit_hits(&orbits, &reps);
        eprintln!("q={q} n={n}: {} reps, {} orbits, {:?} {:?}", reps.len(), orbits.len(), t.elapsed(), r);
        if let Err(e) = r {
            failures.push(format!("q={q} n={n}: {e}"));
        }
    }
    assert!(failures.is_empty(), "{failures:#?}");
}

fn full(ctx: &Ctx, kind: &str, n: usize) -> Vec<HomPoly> {
    let mut st = p1orbits::stream::ResumeState::new(kind, ctx.q() as u64, n as u32, ctx.seed);
    let mut out = Vec::new();
    let done = run(ctx, kind, n, &mut st, None, &mut out);
    assert!(done);
    out
}

fn run(
    ctx: &Ctx,
    kind: &str,
    n: usize,
    st: &mut p1orbits::stream::ResumeState,
    limit: Option<u64>,
    out: &mut Vec<HomPoly>,
) -> bool {
    let emit = |p: &HomPoly| {
        out.push(p.clone());
        Ok(())
    };
    if kind == "places" {
        p1orbits::enum_places::stream_places(ctx, n, st, limit, emit).unwrap()
    } else {
        p1orbits::enum_divisors::stream_divisors(ctx, n, st, limit, emit).unwrap()
    }
}

#[test]
fn interrupted_streams_resume_exactly() {
    use p1orbits::stream::ResumeState;
    for (kind, q, n) in [("places", 3u64, 6usize), ("places", 3, 7), ("places", 4, 5), ("divisors", 3, 5), ("divisors", 2, 4)] {
        let ctx = Ctx::new(q, n, 1).unwrap();
        let all = full(&ctx, kind, n);
        for chunk in [1u64, 2, 5] {
            let mut st = ResumeState::new(kind, q, n as u32, 1);
            let mut got = Vec::new();
            loop {
                let bytes = st.to_bytes();
                st = ResumeState::from_bytes(&bytes).unwrap();
                if run(&ctx, kind, n, &mut st, Some(chunk), &mut got) {
                    break;
                }
            }
            assert_eq!(got, all, "{kind} q={q} n={n} chunk={chunk}");
            assert_eq!(st.emitted as usize, all.len());
        }
    }
}

#[test]
fn streams_do_not_depend_on_the_factoring_seed() {
    for (q, n) in [(2u64, 7usize), (3, 6), (4, 5), (5, 6), (7, 5)] {
        let a = places_up_to_pgl2(&Ctx::new(q, n, 1).unwrap(), n).unwrap();
        let b = places_up_to_pgl2(&Ctx::new(q, n, 99).unwrap(), n).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn wrong_state_is_refused() {
    let ctx = Ctx::new(3, 5, 1).unwrap();
    let mut st = p1orbits::stream::ResumeState::new("divisors", 3, 5, 1);
    assert!(p1orbits::enum_places::stream_places(&ctx, 5, &mut st, None, |_| Ok(())).is_err());
}
