use crate::error::{Error, Result};
use crate::gfield::{ExtElem, Field, Gf, Level};
use crate::upoly;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

/// Homogeneous polynomial `sum c_i x^i y^{n-i}` over the ground field,
/// stored as the coefficient codes `c_0..c_n`.
///
/// Ordered by `poly_key`: degree, then coefficients from `c_n` down.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HomPoly(pub Vec<u32>);

impl Ord for HomPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        upoly::key_cmp(&self.0, &other.0)
    }
}

impl PartialOrd for HomPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl HomPoly {
    pub fn new(coeffs: Vec<u32>) -> Self {
        assert!(!coeffs.is_empty(), "a form has at least one coefficient");
        HomPoly(coeffs)
    }

    pub fn y() -> Self {
        HomPoly(vec![1, 0])
    }

    pub fn x() -> Self {
        HomPoly(vec![0, 1])
    }

    pub fn one() -> Self {
        HomPoly(vec![1])
    }

    /// `x - a y`.
    pub fn linear(f: &Gf, a: u32) -> Self {
        HomPoly(vec![f.neg(&a), 1])
    }

    /// Homogenizes a univariate polynomial to degree `n >= deg u`.
    pub fn from_univariate(u: &[u32], n: usize) -> Self {
        assert!(u.len() <= n + 1);
        let mut c = u.to_vec();
        c.resize(n + 1, 0);
        HomPoly(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len() - 1
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// `f(x, 1)` with trailing zeros removed.
    pub fn dehomogenize(&self) -> Vec<u32> {
        let mut u = self.0.clone();
        while u.last() == Some(&0) {
            u.pop();
        }
        u
    }

    /// Multiplicity of `y` as a factor (for nonzero forms).
    pub fn y_multiplicity(&self) -> usize {
        let top = self.0.iter().rposition(|&c| c != 0).expect("nonzero form");
        self.degree() - top
    }

    pub fn is_monic(&self) -> bool {
        self.0.iter().rev().find(|&&c| c != 0) == Some(&1)
    }

    pub fn monic(&self, f: &Gf) -> Result<Self> {
        let lead = *self.0.iter().rev().find(|&&c| c != 0).ok_or(Error::ZeroPolynomial)?;
        let inv = f.inv(&lead);
        Ok(HomPoly(self.0.iter().map(|c| f.mul(c, &inv)).collect()))
    }

    pub fn scale(&self, f: &Gf, c: u32) -> Self {
        HomPoly(self.0.iter().map(|a| f.mul(a, &c)).collect())
    }

    pub fn mul(&self, f: &Gf, other: &Self) -> Self {
        HomPoly(conv(f, &self.0, &other.0))
    }

    pub fn add(&self, f: &Gf, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "forms of different degree");
        HomPoly(self.0.iter().zip(&other.0).map(|(a, b)| f.add(a, b)).collect())
    }

    pub fn sub(&self, f: &Gf, other: &Self) -> Self {
        assert_eq!(self.0.len(), other.0.len(), "forms of different degree");
        HomPoly(self.0.iter().zip(&other.0).map(|(a, b)| f.sub(a, b)).collect())
    }

    pub fn pow(&self, f: &Gf, e: usize) -> Self {
        (0..e).fold(HomPoly::one(), |acc, _| acc.mul(f, self))
    }

    /// Multiplies by `y^k`.
    pub fn times_y_pow(&self, k: usize) -> Self {
        let mut c = self.0.clone();
        c.extend(std::iter::repeat_n(0, k));
        HomPoly(c)
    }

    /// Multiplies by `x^k`.
    pub fn times_x_pow(&self, k: usize) -> Self {
        let mut c = vec![0; k];
        c.extend_from_slice(&self.0);
        HomPoly(c)
    }

    /// Exact division by another form (panics when inexact).
    pub fn div_exact(&self, f: &Gf, d: &Self) -> Self {
        let n = self.degree() - d.degree();
        let ky = d.y_multiplicity();
        let kx = self.y_multiplicity();
        assert!(kx >= ky, "inexact division");
        let qt = upoly::div_exact(f, &self.dehomogenize(), &d.dehomogenize());
        HomPoly::from_univariate(&qt, n)
    }

    /// Monic homogeneous gcd.
    pub fn gcd(&self, f: &Gf, other: &Self) -> Self {
        let k = self.y_multiplicity().min(other.y_multiplicity());
        let g = upoly::gcd(f, &self.dehomogenize(), &other.dehomogenize());
        HomPoly::from_univariate(&g, g.len() - 1 + k)
    }

    /// `f(alpha, 1)` in a level.
    pub fn eval(&self, l: &Level, alpha: &ExtElem) -> ExtElem {
        self.0
            .iter()
            .rev()
            .fold(l.zero(), |acc, c| l.add(&l.mul(&acc, alpha), &l.from_base(*c)))
    }

    /// `f(a, b)` over the ground field.
    pub fn eval_pair(&self, f: &Gf, a: u32, b: u32) -> u32 {
        let n = self.degree();
        let mut acc = 0;
        let mut bp = vec![1u32; n + 1];
        for i in 1..=n {
            bp[i] = f.mul(&bp[i - 1], &b);
        }
        for (i, c) in self.0.iter().enumerate().rev() {
            acc = f.add(&f.mul(&acc, &a), &f.mul(c, &bp[n - i]));
        }
        acc
    }

    /// Applies a map to every coefficient.
    pub fn map_coeffs(&self, m: impl Fn(u32) -> u32) -> Self {
        HomPoly(self.0.iter().map(|&c| m(c)).collect())
    }
}

/// Product of coefficient vectors of forms (degrees add; no trimming).
pub(crate) fn conv(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    f.convolve(a, b)
}
