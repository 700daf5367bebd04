use super::HomPoly;
use crate::error::{Error, Result};
use crate::gfield::{ExtElem, Field, Gf, Level};
use serde::{Deserialize, Serialize};

/// A point of the projective line over some field.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ProjPoint<E> {
    Inf,
    Fin(E),
}

impl<E> ProjPoint<E> {
    /// Homogeneous coordinates `[alpha : beta]`.
    pub fn coords<F: Field<Elem = E> + ?Sized>(&self, f: &F) -> (E, E)
    where
        E: Clone,
    {
        match self {
            ProjPoint::Inf => (f.one(), f.zero()),
            ProjPoint::Fin(a) => (a.clone(), f.one()),
        }
    }

    pub fn from_coords<F: Field<Elem = E> + ?Sized>(f: &F, a: E, b: E) -> Self {
        if f.is_zero(&b) {
            ProjPoint::Inf
        } else {
            ProjPoint::Fin(f.div(&a, &b))
        }
    }
}

/// Element of `PGL_2` as a matrix `[[a, b], [c, d]]` stored row-major and
/// scaled so that the first nonzero entry is `1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Mat2<E>(pub [E; 4]);

/// `PGL_2` over the ground field.
pub type Pgl2 = Mat2<u32>;

impl<E: Clone + Eq> Mat2<E> {
    /// Canonically scaled matrix; `None` if singular.
    pub fn new<F: Field<Elem = E> + ?Sized>(f: &F, a: E, b: E, c: E, d: E) -> Option<Self> {
        let det = f.sub(&f.mul(&a, &d), &f.mul(&b, &c));
        if f.is_zero(&det) {
            return None;
        }
        let m = [a, b, c, d];
        let lead = m.iter().find(|x| !f.is_zero(x)).expect("nonsingular").clone();
        let inv = f.inv(&lead);
        Some(Mat2(m.map(|x| f.mul(&x, &inv))))
    }

    pub fn identity<F: Field<Elem = E> + ?Sized>(f: &F) -> Self {
        Mat2([f.one(), f.zero(), f.zero(), f.one()])
    }

    pub fn entries(&self) -> &[E; 4] {
        &self.0
    }

    pub fn compose<F: Field<Elem = E> + ?Sized>(&self, f: &F, o: &Self) -> Self {
        let [a, b, c, d] = &self.0;
        let [e, g, h, k] = &o.0;
        let m = |x: &E, y: &E, z: &E, w: &E| f.add(&f.mul(x, y), &f.mul(z, w));
        Mat2::new(f, m(a, e, b, h), m(a, g, b, k), m(c, e, d, h), m(c, g, d, k))
            .expect("product of invertible matrices")
    }

    pub fn inverse<F: Field<Elem = E> + ?Sized>(&self, f: &F) -> Self {
        let [a, b, c, d] = self.0.clone();
        Mat2::new(f, d, f.neg(&b), f.neg(&c), a).expect("invertible")
    }

    pub fn apply<F: Field<Elem = E> + ?Sized>(&self, f: &F, p: &ProjPoint<E>) -> ProjPoint<E> {
        let [a, b, c, d] = &self.0;
        let (al, be) = p.coords(f);
        let num = f.add(&f.mul(a, &al), &f.mul(b, &be));
        let den = f.add(&f.mul(c, &al), &f.mul(d, &be));
        ProjPoint::from_coords(f, num, den)
    }

    /// The element sending `inf, 0, 1` to `p, q, r` (pairwise distinct).
    pub fn from_triple<F: Field<Elem = E> + ?Sized>(
        f: &F,
        p: &ProjPoint<E>,
        q: &ProjPoint<E>,
        r: &ProjPoint<E>,
    ) -> Result<Self> {
        let (p0, p1) = p.coords(f);
        let (q0, q1) = q.coords(f);
        let (r0, r1) = r.coords(f);
        let det = f.sub(&f.mul(&p0, &q1), &f.mul(&p1, &q0));
        if f.is_zero(&det) {
            return Err(Error::InvalidArgument("points are not distinct".into()));
        }
        let lam = f.div(&f.sub(&f.mul(&r0, &q1), &f.mul(&r1, &q0)), &det);
        let mu = f.div(&f.sub(&f.mul(&p0, &r1), &f.mul(&p1, &r0)), &det);
        Mat2::new(f, f.mul(&lam, &p0), f.mul(&mu, &q0), f.mul(&lam, &p1), f.mul(&mu, &q1))
            .ok_or_else(|| Error::InvalidArgument("points are not distinct".into()))
    }

    /// The element sending `src[i]` to `dst[i]` for `i = 0, 1, 2`.
    pub fn mapping_triples<F: Field<Elem = E> + ?Sized>(
        f: &F,
        src: [&ProjPoint<E>; 3],
        dst: [&ProjPoint<E>; 3],
    ) -> Result<Self> {
        let a = Mat2::from_triple(f, src[0], src[1], src[2])?;
        let b = Mat2::from_triple(f, dst[0], dst[1], dst[2])?;
        Ok(b.compose(f, &a.inverse(f)))
    }

    /// Images of `inf, 0, 1`.
    pub fn triple<F: Field<Elem = E> + ?Sized>(&self, f: &F) -> [ProjPoint<E>; 3] {
        [
            self.apply(f, &ProjPoint::Inf),
            self.apply(f, &ProjPoint::Fin(f.zero())),
            self.apply(f, &ProjPoint::Fin(f.one())),
        ]
    }

    pub fn map_entries<T: Clone + Eq>(&self, m: impl Fn(&E) -> T) -> Mat2<T> {
        let [a, b, c, d] = &self.0;
        Mat2([m(a), m(b), m(c), m(d)])
    }
}

impl Mat2<u32> {
    /// Lift to a level as constants.
    pub fn lift(&self, l: &Level) -> Mat2<ExtElem> {
        self.map_entries(|&c| l.from_base(c))
    }

    /// Applies a ground-field element to a point of a level.
    pub fn apply_in(&self, l: &Level, p: &ProjPoint<ExtElem>) -> ProjPoint<ExtElem> {
        self.lift(l).apply(l, p)
    }

    /// `Gamma(f)`: the monic form of `f(d x - b y, -c x + a y)`.
    pub fn act_on_poly(&self, f: &Gf, g: &HomPoly) -> Result<HomPoly> {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        substitute(f, g, self).monic(f)
    }
}

/// `g(d x - b y, -c x + a y)` without normalization.
pub(crate) fn substitute(f: &Gf, g: &HomPoly, m: &Pgl2) -> HomPoly {
    let [a, b, c, d] = m.0;
    let n = g.degree();
    let xs = HomPoly(vec![f.neg(&b), d]);
    let ys = HomPoly(vec![a, f.neg(&c)]);
    let mut ypow = vec![HomPoly::one()];
    for i in 1..=n {
        ypow.push(ypow[i - 1].mul(f, &ys));
    }
    // Horner in X with Y powers: acc_i = acc_{i+1} X + c_i Y^{n-i}
    let mut acc = HomPoly(vec![g.0[n]]);
    for i in (0..n).rev() {
        acc = acc.mul(f, &xs).add(f, &ypow[n - i].scale(f, g.0[i]));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_example() {
        let f = Gf::new(5, 1).unwrap();
        let s = Pgl2::new(&f, 0, 1, 1, 0).unwrap();
        let g = HomPoly(vec![3, 0, 1]);
        assert_eq!(s.act_on_poly(&f, &g).unwrap(), HomPoly(vec![2, 0, 1]));
    }

    #[test]
    fn translation_moves_zero() {
        let f = Gf::new(3, 1).unwrap();
        let t = Pgl2::new(&f, 1, 1, 0, 1).unwrap();
        assert_eq!(t.apply(&f, &ProjPoint::Fin(0)), ProjPoint::Fin(1));
    }

    #[test]
    fn triples_round_trip() {
        let f = Gf::new(7, 1).unwrap();
        let pts = [ProjPoint::Fin(3), ProjPoint::Inf, ProjPoint::Fin(5)];
        let m = Pgl2::from_triple(&f, &pts[0], &pts[1], &pts[2]).unwrap();
        assert_eq!(m.triple(&f), pts);
    }

    #[test]
    fn action_is_compatible_with_composition() {
        let f = Gf::new(2, 2).unwrap();
        let g = HomPoly(vec![1, 2, 0, 3, 1]);
        let group: Vec<Pgl2> = (0..256u32)
            .filter_map(|i| Pgl2::new(&f, i & 3, (i >> 2) & 3, (i >> 4) & 3, i >> 6))
            .collect();
        for a in group.iter().step_by(7) {
            for b in group.iter().step_by(5) {
                let ab = a.compose(&f, b);
                let lhs = ab.act_on_poly(&f, &g).unwrap();
                let rhs = a.act_on_poly(&f, &b.act_on_poly(&f, &g).unwrap()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }
}
