use crate::ctx::Ctx;
use crate::error::{Error, Result};
use crate::gfield::{ExtElem, Field, Gf, Level};
use crate::orbits::residue_field;
use crate::projgeom::{divisor_of_poly, substitute, Divisor, HomPoly, Pgl2, ProjPoint};
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::sync::Arc;

/// A rational map `g/h` of the projective line: coprime forms of equal
/// degree with `h` monic.
///
/// Ordered by `map_key`: degree, then numerator, then denominator.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct RationalMap {
    pub g: HomPoly,
    pub h: HomPoly,
}

impl Ord for RationalMap {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.g.cmp(&other.g))
            .then_with(|| self.h.cmp(&other.h))
    }
}

impl PartialOrd for RationalMap {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl RationalMap {
    /// Reduces `g/h` to canonical form.
    pub fn new(f: &Gf, g: HomPoly, h: HomPoly) -> Result<Self> {
        if g.degree() != h.degree() {
            return Err(Error::InvalidDegree("numerator and denominator degrees differ".into()));
        }
        if h.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.is_zero() {
            return Ok(RationalMap { g: HomPoly(vec![0]), h: HomPoly::one() });
        }
        let d = g.gcd(f, &h);
        let (g, h) = if d.degree() > 0 { (g.div_exact(f, &d), h.div_exact(f, &d)) } else { (g, h) };
        Ok(Self::scaled(f, g, h))
    }

    /// Canonical scaling of forms already known to be coprime.
    fn scaled(f: &Gf, g: HomPoly, h: HomPoly) -> Self {
        if g.is_zero() {
            return RationalMap { g: HomPoly(vec![0]), h: HomPoly::one() };
        }
        let lead = *h.0.iter().rev().find(|&&c| c != 0).expect("nonzero");
        let inv = f.inv(&lead);
        RationalMap { g: g.scale(f, inv), h: h.scale(f, inv) }
    }

    pub fn identity() -> Self {
        RationalMap { g: HomPoly::x(), h: HomPoly::y() }
    }

    pub fn degree(&self) -> usize {
        self.g.degree()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    /// `self o other`.
    pub fn compose(&self, f: &Gf, other: &RationalMap) -> RationalMap {
        let (g2, h2) = (&other.g, &other.h);
        let eval = |p: &HomPoly| -> HomPoly {
            // p(g2, h2) by Horner on the coefficients of p
            let n = p.degree();
            let mut hp = vec![HomPoly::one()];
            for i in 1..=n {
                hp.push(hp[i - 1].mul(f, h2));
            }
            let mut acc = HomPoly(vec![p.0[n]]);
            for i in (0..n).rev() {
                acc = acc.mul(f, g2).add(f, &hp[n - i].scale(f, p.0[i]));
            }
            acc
        };
        // substituting coprime forms into coprime forms keeps them coprime
        Self::scaled(f, eval(&self.g), eval(&self.h))
    }

    /// `F^(n)`.
    pub fn iterate(&self, f: &Gf, n: usize) -> RationalMap {
        let mut acc = RationalMap::identity();
        for _ in 0..n {
            acc = self.compose(f, &acc);
        }
        acc
    }

    /// `Gamma o F o Gamma^{-1}`.
    pub fn conjugate_by(&self, f: &Gf, m: &Pgl2) -> RationalMap {
        let [a, b, c, d] = m.0;
        let g1 = substitute(f, &self.g, m);
        let h1 = substitute(f, &self.h, m);
        let num = g1.scale(f, a).add(f, &h1.scale(f, b));
        let den = g1.scale(f, c).add(f, &h1.scale(f, d));
        Self::scaled(f, num, den)
    }

    /// `x h - y g`.
    pub fn fixed_point_form(&self, f: &Gf) -> HomPoly {
        self.h.times_x_pow(1).sub(f, &self.g.times_y_pow(1))
    }

    /// Value at a point of a level.
    pub fn eval(&self, l: &Level, p: &ProjPoint<ExtElem>) -> ProjPoint<ExtElem> {
        match p {
            ProjPoint::Inf => {
                let r = self.degree();
                ProjPoint::from_coords(l, l.from_base(self.g.0[r]), l.from_base(self.h.0[r]))
            }
            ProjPoint::Fin(a) => ProjPoint::from_coords(l, self.g.eval(l, a), self.h.eval(l, a)),
        }
    }
}

/// `Phi(F) = Div(x h - y g)`.
pub fn fixed_point_divisor(ctx: &Ctx, m: &RationalMap) -> Result<Divisor> {
    let form = m.fixed_point_form(ctx.f());
    if form.is_zero() {
        return Err(Error::IdentityMap);
    }
    divisor_of_poly(ctx, &form)
}

/// A vector spanning part of the kernel of an `rows x cols` matrix with
/// `rows < cols`.
fn kernel_vector(f: &Gf, mut m: Vec<Vec<u32>>, cols: usize) -> Vec<u32> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(pr) = (row..m.len()).find(|&r| m[r][col] != 0) else { continue };
        m.swap(row, pr);
        let inv = f.inv(&m[row][col]);
        for c in 0..cols {
            m[row][c] = f.mul(&m[row][c], &inv);
        }
        for r in 0..m.len() {
            if r != row && m[r][col] != 0 {
                let k = m[r][col];
                for c in 0..cols {
                    let t = f.mul(&k, &m[row][c]);
                    m[r][c] = f.sub(&m[r][c], &t);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).expect("more columns than rows");
    let mut v = vec![0u32; cols];
    v[free] = 1;
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = f.neg(&m[r][free]);
    }
    v
}

fn check_odd_place(field: &Gf, p: &HomPoly) -> Result<usize> {
    let n = p.degree();
    if n < 3 || n.is_multiple_of(2) {
        return Err(Error::InvalidDegree(format!("Frobenius functions need odd degree >= 3, got {n}")));
    }
    if p.0[n] == 0 || !crate::upoly::is_irreducible(field, &p.0) {
        return Err(Error::Reducible);
    }
    Ok(n)
}

/// The Frobenius function of an irreducible form of odd degree `n >= 3`.
pub fn frobenius_function(field: &Arc<Gf>, p: &HomPoly) -> Result<RationalMap> {
    let n = check_odd_place(field, p)?;
    let r = (n - 1) / 2;
    let l = residue_field(field, p)?;
    let alpha = l.generator_s();
    let beta = l.frobenius(&alpha);
    let mut cols: Vec<ExtElem> = Vec::with_capacity(n + 1);
    let mut pw = l.one();
    let mut pws = Vec::new();
    for _ in 0..=r {
        pws.push(pw.clone());
        pw = l.mul(&pw, &alpha);
    }
    cols.extend(pws.iter().cloned());
    cols.extend(pws.iter().map(|x| l.neg(&l.mul(x, &beta))));
    let f = field.as_ref();
    let rows: Vec<Vec<u32>> = (0..n).map(|i| cols.iter().map(|c| c.0[i]).collect()).collect();
    let v = kernel_vector(f, rows, n + 1);
    let g = HomPoly(v[..=r].to_vec());
    let h = HomPoly(v[r + 1..].to_vec());
    RationalMap::new(f, g, h)
}

/// Whether `m` maps every root of `p` to its `q`-th power.
pub fn is_frobenius_function_for(field: &Arc<Gf>, m: &RationalMap, p: &HomPoly) -> Result<bool> {
    let n = check_odd_place(field, p)?;
    if m.degree() > (n - 1) / 2 {
        return Ok(false);
    }
    let l = residue_field(field, p)?;
    let alpha = l.generator_s();
    let hv = m.h.eval(&l, &alpha);
    if l.is_zero(&hv) {
        return Ok(false);
    }
    Ok(m.g.eval(&l, &alpha) == l.mul(&l.frobenius(&alpha), &hv))
}
