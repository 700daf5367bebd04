//! Complete orbit invariants: cross polynomials of places and the `lambda`
//! value of a pair of quadratic places.

use crate::error::{Error, Result};
use crate::gfield::{Field, Gf, Level};
use crate::projgeom::HomPoly;
use crate::upoly;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::sync::Arc;

/// Monic polynomial over `F_q`, low-to-high, ordered like forms (degree,
/// then coefficients from the top down).
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct CrossPoly(pub Vec<u32>);

impl Ord for CrossPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        upoly::key_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for CrossPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The residue field `F_q[x]/(f(x, 1))` of a finite place, with `x` as the
/// distinguished root.
pub fn residue_field(field: &Arc<Gf>, p: &HomPoly) -> Result<Level> {
    let u = p.dehomogenize();
    if u.len() != p.0.len() || u.len() < 2 {
        return Err(Error::InvalidArgument("place at infinity has no finite root".into()));
    }
    Ok(Level::with_modulus(field.clone(), upoly::monic(field.as_ref(), &u)))
}

/// `Cross(f)` for an irreducible form of degree at least 4.
pub fn cross_polynomial(field: &Arc<Gf>, p: &HomPoly) -> Result<CrossPoly> {
    let n = p.degree();
    if n < 4 {
        return Err(Error::InvalidDegree(format!("cross polynomial needs degree >= 4, got {n}")));
    }
    if !upoly::is_irreducible(field.as_ref(), &p.dehomogenize()) || p.0[n] == 0 {
        return Err(Error::Reducible);
    }
    let l = residue_field(field, p)?;
    let a = l.conjugates(&l.generator_s());
    let num = l.mul(&l.sub(&a[3], &a[1]), &l.sub(&a[2], &a[0]));
    let den = l.mul(&l.sub(&a[3], &a[0]), &l.sub(&a[2], &a[1]));
    let chi = l.div(&num, &den);
    Ok(CrossPoly(l.charpoly(&chi)))
}

/// Sort key used wherever places of degree `>= 3` are ordered by cross
/// polynomial; all cubic places share one key (they form a single orbit).
pub fn cross_key(field: &Arc<Gf>, p: &HomPoly) -> Result<CrossPoly> {
    if p.degree() == 3 {
        Ok(CrossPoly(vec![]))
    } else {
        cross_polynomial(field, p)
    }
}

/// `lambda(f1 f2)` for distinct monic irreducible quadratics.
pub fn lambda_invariant(f: &Gf, f1: &HomPoly, f2: &HomPoly) -> Result<u32> {
    if f1 == f2 {
        return Err(Error::InvalidArgument("lambda needs distinct quadratics".into()));
    }
    for g in [f1, f2] {
        if g.degree() != 2 || g.0[2] != 1 || !upoly::is_irreducible(f, &g.0) {
            return Err(Error::Reducible);
        }
    }
    Ok(lambda_unchecked(f, f1, f2))
}

pub(crate) fn lambda_unchecked(f: &Gf, f1: &HomPoly, f2: &HomPoly) -> u32 {
    let (t, s) = (f1.0[0], f1.0[1]);
    let (v, u) = (f2.0[0], f2.0[1]);
    let four = f.from_int(4);
    let a = f.mul(&f.sub(&s, &u), &f.sub(&f.mul(&s, &v), &f.mul(&t, &u)));
    let tv = f.sub(&t, &v);
    let num = f.add(&a, &f.mul(&tv, &tv));
    let d1 = f.sub(&f.mul(&s, &s), &f.mul(&four, &t));
    let d2 = f.sub(&f.mul(&u, &u), &f.mul(&four, &v));
    f.div(&num, &f.mul(&d1, &d2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_is_symmetric() {
        let f = Gf::new(5, 1).unwrap();
        let quads: Vec<HomPoly> = (0..25u32)
            .map(|i| HomPoly(vec![i % 5, i / 5, 1]))
            .filter(|g| upoly::is_irreducible(&f, &g.0))
            .collect();
        for a in &quads {
            for b in &quads {
                if a != b {
                    assert_eq!(
                        lambda_invariant(&f, a, b).unwrap(),
                        lambda_invariant(&f, b, a).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn cross_needs_degree_four() {
        let f = Arc::new(Gf::new(2, 1).unwrap());
        assert!(cross_polynomial(&f, &HomPoly(vec![1, 1, 0, 1])).is_err());
        let c = cross_polynomial(&f, &HomPoly(vec![1, 1, 0, 0, 1])).unwrap();
        assert_eq!(c.0.len(), 5);
    }
}
