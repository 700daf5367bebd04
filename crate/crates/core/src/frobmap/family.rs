use super::RationalMap;
use crate::error::{Error, Result};
use crate::gfield::{Field, Gf};
use crate::projgeom::{Divisor, HomPoly};

/// The maps `F` of degree `r` with `Phi(F) = D` for an effective divisor of
/// degree `r + 1 >= 2`, addressable by index so enumeration can resume.
///
/// Indices whose candidate fails the coprimality conditions yield `None`.
#[derive(Clone, Debug)]
pub struct FixedPointFamily {
    p: HomPoly,
    r: usize,
    q: u64,
    len: u64,
    y_divides: bool,
}

impl FixedPointFamily {
    pub fn new(f: &Gf, d: &Divisor) -> Result<Self> {
        let p = d.poly(f);
        let n = p.degree();
        if n < 2 {
            return Err(Error::InvalidDegree(format!("fixed-point divisor of degree {n}")));
        }
        let r = n - 1;
        let q = f.q() as u64;
        let y_divides = p.0[n] == 0;
        let len = if y_divides {
            // monic forms of degree r - 1, times a scalar
            let forms = (q.pow(r as u32) - 1) / (q - 1);
            forms * (q - 1)
        } else {
            q.pow(r as u32)
        };
        Ok(FixedPointFamily { p, r, q, len, y_divides })
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn form(&self) -> &HomPoly {
        &self.p
    }

    /// Digits of `i` in base `q`, `k` of them.
    fn digits(&self, mut i: u64, k: usize) -> Vec<u32> {
        (0..k)
            .map(|_| {
                let d = (i % self.q) as u32;
                i /= self.q;
                d
            })
            .collect()
    }

    /// The `i`-th monic form of degree `k`: `y^j u(x, y)` with `u` monic of
    /// degree `k - j`, grouped by `j` from `0` up.
    fn monic_form(&self, mut i: u64, k: usize) -> HomPoly {
        for j in 0..=k {
            let count = self.q.pow((k - j) as u32);
            if i < count {
                let mut c = self.digits(i, k - j);
                c.push(1);
                return HomPoly(c).times_y_pow(j);
            }
            i -= count;
        }
        unreachable!("index below the number of monic forms")
    }

    pub fn get(&self, f: &Gf, i: u64) -> Option<RationalMap> {
        if i >= self.len {
            return None;
        }
        let (p, r) = (&self.p, self.r);
        let (h, c) = if self.y_divides {
            let (hi, ci) = (i / (self.q - 1), i % (self.q - 1));
            let h = self.monic_form(hi, r - 1).times_y_pow(1);
            let c = ci as u32 + 1;
            // need c p_r != h_{r-1}
            if f.mul(&c, &p.0[r]) == h.0[r - 1] {
                return None;
            }
            // gcd(h, p) = y: no common place besides y, and not both divisible by y^2
            if h.y_multiplicity() >= 2 && p.y_multiplicity() >= 2 {
                return None;
            }
            let hu = h.div_exact(f, &HomPoly::y());
            let pu = p.div_exact(f, &HomPoly::y());
            if hu.gcd(f, &pu).degree() > 0 {
                return None;
            }
            (h, c)
        } else {
            let mut hc = self.digits(i, r);
            hc.push(1);
            let h = HomPoly(hc);
            if h.gcd(f, p).degree() > 0 {
                return None;
            }
            (h, 1)
        };
        let num = h.times_x_pow(1).sub(f, &p.scale(f, c));
        let g = num.div_exact(f, &HomPoly::y());
        RationalMap::new(f, g, h).ok().filter(|m| m.degree() == r)
    }

    pub fn iter<'a>(&'a self, f: &'a Gf) -> impl Iterator<Item = RationalMap> + 'a {
        (0..self.len).filter_map(move |i| self.get(f, i))
    }
}
