use p1orbits::frobmap::*;
use p1orbits::gfield::{Field, Gf};
use p1orbits::orbits::enumerate_group;
use p1orbits::projgeom::{divisor_of_poly, Divisor, HomPoly, Pgl2};
use p1orbits::{upoly, Ctx};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

fn monic_forms(q: u32, n: usize) -> impl Iterator<Item = HomPoly> {
    (0..(q as u64).pow(n as u32)).map(move |mut i| {
        let mut c: Vec<u32> = (0..n)
            .map(|_| {
                let d = (i % q as u64) as u32;
                i /= q as u64;
                d
            })
            .collect();
        c.push(1);
        HomPoly(c)
    })
}

fn places(f: &Gf, n: usize) -> Vec<HomPoly> {
    monic_forms(f.q(), n).filter(|p| upoly::is_irreducible(f, &p.0)).collect()
}

#[test]
fn frobenius_functions_of_quintics() {
    for q in [2u64, 3, 4] {
        let ctx = Ctx::new(q, 5, 7).unwrap();
        let f = &ctx.field;
        for p in places(f, 5) {
            let m = frobenius_function(f, &p).unwrap();
            assert!(m.degree() <= 2 && m.degree() >= 1);
            assert!(is_frobenius_function_for(f, &m, &p).unwrap());
            let d = fixed_point_divisor(&ctx, &m).unwrap();
            assert_eq!(d.degree(), m.degree() + 1);
            let fam = functions_with_fixed_divisor(f, &d).unwrap();
            assert!(fam.iter(f).any(|x| x == m));
        }
    }
}

#[test]
fn fixed_point_examples() {
    let ctx = Ctx::new(5, 2, 1).unwrap();
    let f = ctx.f();
    // (x^2 + r x y + s y^2)/(x y + r y^2)
    let (r, s) = (2, 3);
    let m = RationalMap::new(f, HomPoly(vec![s, r, 1]), HomPoly(vec![r, 1, 0])).unwrap();
    let d = fixed_point_divisor(&ctx, &m).unwrap();
    assert_eq!(d.parts(), &[(HomPoly::y(), 3)]);
    let m = RationalMap::new(f, HomPoly(vec![0, 3]), HomPoly::y()).unwrap();
    let d = fixed_point_divisor(&ctx, &m).unwrap();
    assert_eq!(d, Divisor::reduced(vec![HomPoly::y(), HomPoly::x()]));
    assert!(fixed_point_divisor(&ctx, &RationalMap::identity()).is_err());
}

#[test]
fn small_families_have_expected_sizes() {
    for q in [3u64, 4, 5, 7] {
        let ctx = Ctx::new(q, 1, 1).unwrap();
        let f = ctx.f();
        let two_inf = Divisor::new(vec![(HomPoly::y(), 2)]);
        assert_eq!(functions_with_fixed_divisor(f, &two_inf).unwrap().iter(f).count() as u64, q - 1);
        let inf_zero = Divisor::reduced(vec![HomPoly::y(), HomPoly::x()]);
        assert_eq!(functions_with_fixed_divisor(f, &inf_zero).unwrap().iter(f).count() as u64, q - 2);
    }
}

/// Every map of degree `r <= 2` over `F_3`, grouped by fixed-point divisor,
/// against the indexed families.
#[test]
fn families_match_exhaustive_maps() {
    let ctx = Ctx::new(3, 3, 1).unwrap();
    let f = ctx.f();
    for r in 1..=2usize {
        let mut by_div: BTreeMap<HomPoly, BTreeSet<RationalMap>> = BTreeMap::new();
        let all_forms: Vec<HomPoly> = (0..3u64.pow(r as u32 + 1))
            .map(|mut i| {
                HomPoly(
                    (0..=r)
                        .map(|_| {
                            let d = (i % 3) as u32;
                            i /= 3;
                            d
                        })
                        .collect(),
                )
            })
            .filter(|g| !g.is_zero())
            .collect();
        for g in &all_forms {
            for h in &all_forms {
                if g.gcd(f, h).degree() > 0 {
                    continue;
                }
                let m = RationalMap::new(f, g.clone(), h.clone()).unwrap();
                if m.is_identity() || m.degree() != r {
                    continue;
                }
                let d = fixed_point_divisor(&ctx, &m).unwrap();
                by_div.entry(d.poly(f)).or_default().insert(m);
            }
        }
        for d_poly in monic_forms_all(3, r + 1) {
            let d = divisor_of_poly(&ctx, &d_poly).unwrap();
            let fam: BTreeSet<RationalMap> =
                functions_with_fixed_divisor(f, &d).unwrap().iter(f).collect();
            assert!(fam.len() as u64 <= 3u64.pow(r as u32));
            assert_eq!(fam, by_div.remove(&d_poly).unwrap_or_default(), "divisor {d_poly:?}");
        }
    }
}

/// Monic forms of degree `n` including those divisible by `y`.
fn monic_forms_all(q: u32, n: usize) -> Vec<HomPoly> {
    (0..=n)
        .flat_map(|j| {
            monic_forms(q, n - j).map(move |u| {
                u.times_y_pow(j)
            })
        })
        .collect()
}

#[test]
fn round_trip_over_f3_up_to_degree_four() {
    let ctx = Ctx::new(3, 4, 1).unwrap();
    let f = ctx.f();
    for n in 2..=4 {
        for p in monic_forms_all(3, n) {
            let d = divisor_of_poly(&ctx, &p).unwrap();
            for m in functions_with_fixed_divisor(f, &d).unwrap().iter(f) {
                assert_eq!(fixed_point_divisor(&ctx, &m).unwrap(), d);
            }
        }
    }
}

#[test]
fn iteration() {
    let f = Gf::new(5, 1).unwrap();
    let t = RationalMap::new(&f, HomPoly(vec![1, 1]), HomPoly::y()).unwrap();
    assert_eq!(iterate_map(&f, &t, 2), RationalMap::new(&f, HomPoly(vec![2, 1]), HomPoly::y()).unwrap());
    let ctx = Ctx::new(4, 5, 3).unwrap();
    let fa = &ctx.field;
    let l = ctx.level(5).unwrap();
    for p in places(fa, 5).into_iter().take(40) {
        let m = frobenius_function(fa, &p).unwrap();
        let a = m.iterate(fa, 2);
        let b = m.iterate(fa, 3);
        assert_eq!(m.iterate(fa, 5), a.compose(fa, &b));
        let u: Vec<_> = p.0.iter().map(|&c| l.from_base(c)).collect();
        let alpha = p1orbits::polyfactor::roots(l.as_ref(), &u, 1)[0].clone();
        let pt = p1orbits::projgeom::ProjPoint::Fin(alpha.clone());
        let mut img = pt.clone();
        for _ in 0..5 {
            img = m.eval(l, &img);
        }
        assert_eq!(m.iterate(fa, 5).eval(l, &pt), img);
        assert_eq!(img, pt);
    }
}

#[test]
fn equivariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for q in [3u64, 4, 5] {
        let ctx = Ctx::new(q, 5, 1).unwrap();
        let f = ctx.f();
        let fa = &ctx.field;
        let group: Vec<Pgl2> = enumerate_group(f).collect();
        let ps = places(f, 5);
        for _ in 0..30 {
            let p = &ps[rng.gen_range(0..ps.len())];
            let g = &group[rng.gen_range(0..group.len())];
            let m = frobenius_function(fa, p).unwrap();
            let gp = g.act_on_poly(f, p).unwrap();
            let conj = m.conjugate_by(f, g);
            assert_eq!(frobenius_function(fa, &gp).unwrap(), conj);
            let d = fixed_point_divisor(&ctx, &m).unwrap();
            assert_eq!(fixed_point_divisor(&ctx, &conj).unwrap(), d.act(f, g));
        }
    }
}

#[test]
fn routes_agree() {
    for q in [2u64, 3, 4] {
        let ctx = Ctx::new(q, 5, 1).unwrap();
        let fa = &ctx.field;
        let mut maps = BTreeSet::new();
        for p in places(fa, 5) {
            maps.insert(frobenius_function(fa, &p).unwrap());
        }
        for m in maps.iter().filter(|m| m.degree() == 2) {
            let a = places_with_frobenius_function(&ctx, m, 5, Route::Iterate).unwrap();
            let b = places_with_frobenius_function(&ctx, m, 5, Route::Relation).unwrap();
            assert!(!a.is_empty());
            assert_eq!(a, b);
        }
    }
}

#[test]
fn unique_frobenius_function_over_f2() {
    let ctx = Ctx::new(2, 5, 1).unwrap();
    let fa = &ctx.field;
    let f = ctx.f();
    for p in places(f, 5) {
        let mut hits = 0;
        for dp in (2..=3).flat_map(|k| monic_forms_all(2, k)) {
            let d = divisor_of_poly(&ctx, &dp).unwrap();
            for m in functions_with_fixed_divisor(f, &d).unwrap().iter(f) {
                if is_frobenius_function_for(fa, &m, &p).unwrap() {
                    hits += 1;
                }
            }
        }
        assert_eq!(hits, 1);
    }
}

#[test]
fn ff1_cases() {
    let ctx = Ctx::new(7, 3, 1).unwrap();
    let f = ctx.f();
    let t = ff1_representatives(&ctx, 3).unwrap();
    let z = f.generator();
    assert_eq!(t, vec![HomPoly(vec![f.neg(&z), 0, 0, 1])]);
    assert!(ff1_representatives(&Ctx::new(3, 5, 1).unwrap(), 5).unwrap().is_empty());
    let ctx = Ctx::new(4, 5, 1).unwrap();
    let t = ff1_representatives(&ctx, 5).unwrap();
    assert_eq!(t.len(), 2);
    for p in &t {
        assert!(upoly::is_irreducible(ctx.f(), &p.0));
        assert_eq!(frobenius_function(&ctx.field, p).unwrap().degree(), 1);
    }
    let ctx = Ctx::new(5, 5, 1).unwrap();
    let t = ff1_representatives(&ctx, 5).unwrap();
    assert_eq!(t.len(), 1);
    assert_eq!(frobenius_function(&Arc::clone(&ctx.field), &t[0]).unwrap().degree(), 1);
}
