use super::{HomPoly, Pgl2, ProjPoint};
use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::gfield::{ExtElem, Field, Gf};
use crate::polyfactor;
use serde::{Deserialize, Serialize};

/// Non-increasing list of place degrees of a reduced divisor.
pub type GaloisType = Vec<usize>;

/// Effective divisor as `(monic irreducible form, multiplicity)` pairs,
/// sorted by `poly_key` of the place.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct Divisor {
    parts: Vec<(HomPoly, u32)>,
}

impl Divisor {
    /// Builds a divisor from places and multiplicities (merging repeats).
    pub fn new(mut parts: Vec<(HomPoly, u32)>) -> Self {
        parts.retain(|(_, m)| *m > 0);
        parts.sort();
        let mut merged: Vec<(HomPoly, u32)> = Vec::with_capacity(parts.len());
        for (p, m) in parts {
            match merged.last_mut() {
                Some((q, k)) if *q == p => *k += m,
                _ => merged.push((p, m)),
            }
        }
        Divisor { parts: merged }
    }

    pub fn reduced(places: Vec<HomPoly>) -> Self {
        Divisor::new(places.into_iter().map(|p| (p, 1)).collect())
    }

    pub fn parts(&self) -> &[(HomPoly, u32)] {
        &self.parts
    }

    pub fn places(&self) -> impl Iterator<Item = &HomPoly> {
        self.parts.iter().map(|(p, _)| p)
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().map(|(p, m)| p.degree() * *m as usize).sum()
    }

    pub fn is_reduced(&self) -> bool {
        self.parts.iter().all(|(_, m)| *m == 1)
    }

    pub fn support(&self) -> Divisor {
        Divisor { parts: self.parts.iter().map(|(p, _)| (p.clone(), 1)).collect() }
    }

    /// Galois type of the support.
    pub fn galois_type(&self) -> GaloisType {
        let mut t: Vec<usize> = self.parts.iter().map(|(p, _)| p.degree()).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn multiplicity(&self, p: &HomPoly) -> u32 {
        self.parts.iter().find(|(q, _)| q == p).map_or(0, |(_, m)| *m)
    }

    /// The monic form with this divisor.
    pub fn poly(&self, f: &Gf) -> HomPoly {
        self.parts
            .iter()
            .fold(HomPoly::one(), |acc, (p, m)| acc.mul(f, &p.pow(f, *m as usize)))
    }

    pub fn act(&self, f: &Gf, g: &Pgl2) -> Divisor {
        Divisor::new(
            self.parts
                .iter()
                .map(|(p, m)| (g.act_on_poly(f, p).expect("nonzero place"), *m))
                .collect(),
        )
    }
}

/// `Div f`.
pub fn divisor_of_poly(ctx: &Ctx, g: &HomPoly) -> Result<Divisor> {
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = ctx.f();
    let k = g.y_multiplicity() as u32;
    let u = g.dehomogenize();
    let mut parts = vec![(HomPoly::y(), k)];
    if u.len() > 1 {
        let (_, facs) = polyfactor::factor(f, &u, ctx.seed);
        for (h, m) in facs {
            let d = h.len() - 1;
            parts.push((HomPoly::from_univariate(&h, d), m));
        }
    }
    Ok(Divisor::new(parts))
}

/// Monic form of a divisor.
pub fn poly_of_divisor(f: &Gf, d: &Divisor) -> HomPoly {
    d.poly(f)
}

pub fn galois_type_and_support(d: &Divisor) -> (GaloisType, Divisor) {
    (d.galois_type(), d.support())
}

/// Geometric points of a place, in its own level, sorted.
pub fn place_points(ctx: &Ctx, p: &HomPoly) -> Result<Vec<ProjPoint<ExtElem>>> {
    let d = p.degree();
    if p.0[d] == 0 {
        return if d == 1 { Ok(vec![ProjPoint::Inf]) } else { Err(Error::Reducible) };
    }
    let l = ctx.level(d)?;
    let u: Vec<ExtElem> = p.0.iter().map(|&c| l.from_base(c)).collect();
    let roots = polyfactor::roots(l.as_ref(), &u, ctx.seed);
    if roots.len() != d {
        return Err(Error::Reducible);
    }
    Ok(roots.into_iter().map(ProjPoint::Fin).collect())
}

/// Is the place rational over the ground field, and if so which point.
pub fn rational_point(f: &Gf, p: &HomPoly) -> Option<ProjPoint<u32>> {
    match p.0.as_slice() {
        [1, 0] => Some(ProjPoint::Inf),
        [c, 1] => Some(ProjPoint::Fin(f.neg(c))),
        _ => None,
    }
}

/// Place of a rational point.
pub fn place_of_point(f: &Gf, p: &ProjPoint<u32>) -> HomPoly {
    match p {
        ProjPoint::Inf => HomPoly::y(),
        ProjPoint::Fin(a) => HomPoly::linear(f, *a),
    }
}
