//! Group elements carrying one divisor to another.

use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::gfield::{smallest_irreducible, ExtElem, Field, Gf, Level};
use crate::projgeom::{
    place_points, rational_point, Divisor, HomPoly, Mat2, Pgl2, ProjPoint,
};

/// A place with its multiplicity and its geometric points, listed in
/// Frobenius order `alpha, alpha^q, ...` inside the level of its degree.
#[derive(Clone, Debug)]
pub struct GeomPlace {
    pub poly: HomPoly,
    pub mult: u32,
    pub points: Vec<ProjPoint<ExtElem>>,
}

impl GeomPlace {
    pub fn degree(&self) -> usize {
        self.poly.degree()
    }
}

/// A divisor together with the geometric points of its places.
#[derive(Clone, Debug)]
pub struct GeomDivisor {
    pub divisor: Divisor,
    pub places: Vec<GeomPlace>,
}

impl GeomDivisor {
    pub fn new(ctx: &Ctx, d: &Divisor) -> Result<Self> {
        let mut places = Vec::new();
        for (p, m) in d.parts() {
            places.push(GeomPlace { poly: p.clone(), mult: *m, points: frobenius_points(ctx, p)? });
        }
        Ok(GeomDivisor { divisor: d.clone(), places })
    }

    fn signature(&self) -> Vec<(usize, u32)> {
        let mut s: Vec<(usize, u32)> = self.places.iter().map(|p| (p.degree(), p.mult)).collect();
        s.sort_unstable();
        s
    }

    /// Number of geometric points of the support.
    pub fn support_degree(&self) -> usize {
        self.places.iter().map(|p| p.degree()).sum()
    }
}

/// Geometric points of a place in Frobenius order.
pub fn frobenius_points(ctx: &Ctx, p: &HomPoly) -> Result<Vec<ProjPoint<ExtElem>>> {
    let d = p.degree();
    let pts = place_points(ctx, p)?;
    if d == 1 {
        return Ok(match &pts[0] {
            ProjPoint::Inf => vec![ProjPoint::Inf],
            ProjPoint::Fin(a) => vec![ProjPoint::Fin(ExtElem(smallvec::smallvec![a.0[0]]))],
        });
    }
    let l = ctx.level(d)?;
    let ProjPoint::Fin(a) = &pts[0] else { unreachable!("finite roots") };
    Ok(l.conjugates(a).into_iter().map(ProjPoint::Fin).collect())
}

fn lift_point(l: &Level, p: &ProjPoint<ExtElem>) -> ProjPoint<ExtElem> {
    match p {
        ProjPoint::Inf => ProjPoint::Inf,
        ProjPoint::Fin(a) if a.0.len() == l.degree() => ProjPoint::Fin(a.clone()),
        ProjPoint::Fin(a) => {
            assert_eq!(a.0.len(), 1, "only rational points are lifted");
            ProjPoint::Fin(l.from_base(a.0[0]))
        }
    }
}

fn rational(l: &Level, m: &Mat2<ExtElem>) -> Option<Pgl2> {
    let e = m.entries();
    Some(Mat2([l.to_base(&e[0])?, l.to_base(&e[1])?, l.to_base(&e[2])?, l.to_base(&e[3])?]))
}

fn verified(f: &Gf, g: Pgl2, src: &GeomDivisor, dst: &GeomDivisor) -> Option<Pgl2> {
    (src.divisor.act(f, &g) == dst.divisor).then_some(g)
}

/// All `Gamma` in `PGL_2(F_q)` with `Gamma(src) = dst`, sorted.
pub fn mappings(ctx: &Ctx, src: &GeomDivisor, dst: &GeomDivisor) -> Result<Vec<Pgl2>> {
    let f = ctx.f();
    if src.signature() != dst.signature() {
        return Ok(vec![]);
    }
    let mut out = Vec::new();
    let same_class = |p: &GeomPlace, q: &GeomPlace| p.degree() == q.degree() && p.mult == q.mult;
    if let Some(anchor) = src.places.iter().find(|p| p.degree() >= 3) {
        let d = anchor.degree();
        let l = ctx.level(d)?;
        let a = &anchor.points;
        for target in dst.places.iter().filter(|q| same_class(anchor, q)) {
            let b = &target.points;
            for j in 0..d {
                let m = Mat2::mapping_triples(
                    l.as_ref(),
                    [&a[0], &a[1], &a[2]],
                    [&b[j], &b[(j + 1) % d], &b[(j + 2) % d]],
                )?;
                if let Some(g) = rational(l, &m).and_then(|g| verified(f, g, src, dst)) {
                    out.push(g);
                }
            }
        }
    } else if src.support_degree() >= 3 && src.places.iter().any(|p| p.degree() == 2) {
        let l = ctx.level(2)?;
        let anchor = src.places.iter().find(|p| p.degree() == 2).expect("checked");
        let other = src.places.iter().find(|p| p.poly != anchor.poly).expect("support degree >= 3");
        let a0 = lift_point(l, &anchor.points[0]);
        let a1 = lift_point(l, &anchor.points[1]);
        let c = lift_point(l, &other.points[0]);
        for target in dst.places.iter().filter(|q| same_class(anchor, q)) {
            for q2 in dst.places.iter().filter(|q| same_class(other, q) && q.poly != target.poly) {
                for j in 0..2 {
                    let b0 = lift_point(l, &target.points[j]);
                    let b1 = lift_point(l, &target.points[1 - j]);
                    for dp in &q2.points {
                        let dp = lift_point(l, dp);
                        let m = Mat2::mapping_triples(l.as_ref(), [&a0, &a1, &c], [&b0, &b1, &dp])?;
                        if let Some(g) = rational(l, &m).and_then(|g| verified(f, g, src, dst)) {
                            out.push(g);
                        }
                    }
                }
            }
        }
    } else if src.support_degree() >= 3 {
        let pt = |p: &GeomPlace| rational_point(f, &p.poly).expect("degree-1 place");
        let s: Vec<&GeomPlace> = src.places.iter().take(3).collect();
        let sp: Vec<ProjPoint<u32>> = s.iter().map(|p| pt(p)).collect();
        for t0 in dst.places.iter().filter(|q| q.mult == s[0].mult) {
            for t1 in dst.places.iter().filter(|q| q.mult == s[1].mult && q.poly != t0.poly) {
                for t2 in dst
                    .places
                    .iter()
                    .filter(|q| q.mult == s[2].mult && q.poly != t0.poly && q.poly != t1.poly)
                {
                    let g = Pgl2::mapping_triples(
                        f,
                        [&sp[0], &sp[1], &sp[2]],
                        [&pt(t0), &pt(t1), &pt(t2)],
                    )?;
                    if let Some(g) = verified(f, g, src, dst) {
                        out.push(g);
                    }
                }
            }
        }
    } else {
        let (ns, s0) = normalizer(ctx, src)?;
        let (nd, _) = normalizer(ctx, dst)?;
        let nd_inv = nd.inverse(f);
        for h in table_stabilizer(f, &s0) {
            let g = nd_inv.compose(f, &h.compose(f, &ns));
            if let Some(g) = verified(f, g, src, dst) {
                out.push(g);
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Normal forms for supports with at most two geometric points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SmallSupport {
    /// `P_inf`
    Inf,
    /// `P_inf + P_0`
    InfZero,
    /// the canonical quadratic place `x^2 - u x y + v y^2`
    Quadratic { u: u32, v: u32 },
}

/// The smallest monic irreducible quadratic form.
pub fn canonical_quadratic(f: &Gf) -> HomPoly {
    HomPoly(smallest_irreducible(f, 2))
}

/// A rational `N` moving the support of `d` to its normal form.
fn normalizer(ctx: &Ctx, d: &GeomDivisor) -> Result<(Pgl2, SmallSupport)> {
    let f = ctx.f();
    match d.places.as_slice() {
        [p] if p.degree() == 1 => {
            let g = match rational_point(f, &p.poly).expect("rational") {
                ProjPoint::Inf => Pgl2::identity(f),
                ProjPoint::Fin(a) => Pgl2::new(f, 0, 1, 1, f.neg(&a)).expect("invertible"),
            };
            Ok((g, SmallSupport::Inf))
        }
        [p, q] if p.degree() == 1 && q.degree() == 1 => {
            let a = rational_point(f, &p.poly).expect("rational");
            let b = rational_point(f, &q.poly).expect("rational");
            let c = (0..f.q())
                .map(ProjPoint::Fin)
                .find(|c| *c != a && *c != b)
                .expect("at least three rational points");
            let g = Pgl2::mapping_triples(
                f,
                [&a, &b, &c],
                [&ProjPoint::Inf, &ProjPoint::Fin(0), &ProjPoint::Fin(1)],
            )?;
            Ok((g, SmallSupport::InfZero))
        }
        [p] if p.degree() == 2 => {
            let q2 = canonical_quadratic(f);
            let ProjPoint::Fin(alpha) = &p.points[0] else { unreachable!("finite") };
            let ProjPoint::Fin(beta) = &frobenius_points(ctx, &q2)?[0] else { unreachable!() };
            // beta = u + v alpha with u, v rational: x -> v x + u
            let v = f.div(&beta.0[1], &alpha.0[1]);
            let u = f.sub(&beta.0[0], &f.mul(&v, &alpha.0[0]));
            let g = Pgl2::new(f, v, u, 0, 1).expect("v is nonzero");
            debug_assert_eq!(g.act_on_poly(f, &p.poly).ok(), Some(q2.clone()));
            Ok((g, SmallSupport::Quadratic { u: f.neg(&q2.0[1]), v: q2.0[0] }))
        }
        _ => Err(Error::InvalidArgument("support has more than two points".into())),
    }
}

/// Stabilizer of a normal-form support (as a set of places).
pub fn table_stabilizer(f: &Gf, s: &SmallSupport) -> Vec<Pgl2> {
    let q = f.q();
    let mut out = Vec::new();
    match s {
        SmallSupport::Inf => {
            for a in 1..q {
                for b in 0..q {
                    out.push(Mat2([a, b, 0, 1]));
                }
            }
        }
        SmallSupport::InfZero => {
            for a in 1..q {
                out.push(Mat2([a, 0, 0, 1]));
                out.push(Mat2::new(f, 0, a, 1, 0).expect("invertible"));
            }
        }
        SmallSupport::Quadratic { u, v } => {
            let pts = std::iter::once((1u32, 0u32)).chain((0..q).map(|a| (a, 1)));
            for (a, b) in pts {
                let bv = f.mul(&b, v);
                let bu = f.mul(&b, u);
                if let Some(m) = Pgl2::new(f, a, f.neg(&bv), b, f.sub(&a, &bu)) {
                    out.push(m);
                }
                let au = f.mul(&a, u);
                if let Some(m) = Pgl2::new(f, a, f.sub(&bv, &au), b, f.neg(&a)) {
                    out.push(m);
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// `PGL_2(F_q)`-stabilizer of a divisor.
pub fn stabilizer(ctx: &Ctx, d: &GeomDivisor) -> Result<Vec<Pgl2>> {
    mappings(ctx, d, d)
}

pub fn stabilizer_of_divisor(ctx: &Ctx, d: &Divisor) -> Result<Vec<Pgl2>> {
    stabilizer(ctx, &GeomDivisor::new(ctx, d)?)
}

/// Whether two divisors lie in the same orbit.
pub fn same_orbit(ctx: &Ctx, a: &GeomDivisor, b: &GeomDivisor) -> Result<bool> {
    Ok(!mappings(ctx, a, b)?.is_empty())
}

/// The orbit test for divisors with equal support.
pub fn same_orbit_same_support(ctx: &Ctx, a: &Divisor, b: &Divisor) -> Result<bool> {
    if a.support() != b.support() {
        return Err(Error::SupportMismatch);
    }
    same_orbit(ctx, &GeomDivisor::new(ctx, a)?, &GeomDivisor::new(ctx, b)?)
}
