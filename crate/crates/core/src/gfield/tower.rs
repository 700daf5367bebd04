use super::{ExtElem, Field, Gf, Level};
use crate::arith;
use crate::error::{Error, Result};
use crate::{polyfactor, upoly};
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// Norm, trace and polynomials of an element relative to `F_q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldInvariants {
    pub norm: u32,
    pub trace: u32,
    /// Absolute trace to `F_p`, as a base-field code.
    pub absolute_trace: u32,
    /// Characteristic polynomial over `F_q` of multiplication by the
    /// element, low-to-high.
    pub charpoly: Vec<u32>,
    pub minpoly: Vec<u32>,
}

/// The levels `F_{q^i}` for a divisor-closed set of degrees, together with
/// mutually compatible embeddings between them.
#[derive(Clone, Debug)]
pub struct Tower {
    base: Arc<Gf>,
    levels: BTreeMap<usize, Arc<Level>>,
    // (d, m) -> images in level m of s_d^j, 0 <= j < d
    emb: HashMap<(usize, usize), Vec<ExtElem>>,
}

fn proper_divisors(m: usize) -> Vec<usize> {
    (1..m).filter(|d| m.is_multiple_of(*d)).collect()
}

impl Tower {
    /// Levels `1..=max_degree` over `F_{p^e}`.
    pub fn build(p: u32, e: u32, max_degree: usize) -> Result<Self> {
        let base = Arc::new(Gf::new(p, e)?);
        Self::new(base, 1..=max_degree)
    }

    /// Levels for the given degrees and all their divisors.
    pub fn new(base: Arc<Gf>, degrees: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut want: Vec<usize> = Vec::new();
        for d in degrees {
            if d == 0 {
                return Err(Error::InvalidDegree("level degree 0".into()));
            }
            (base.q() as u128)
                .checked_pow(d as u32)
                .filter(|s| *s < 1u128 << 126)
                .ok_or_else(|| Error::ResourceLimit(format!("level {d} over F_{}", base.q())))?;
            for c in (1..=d).filter(|c| d % c == 0) {
                want.push(c);
            }
        }
        want.push(1);
        want.sort_unstable();
        want.dedup();
        let mut t = Tower { base, levels: BTreeMap::new(), emb: HashMap::new() };
        for m in want {
            let lvl = Arc::new(Level::new(t.base.clone(), m));
            t.levels.insert(m, lvl.clone());
            t.emb.insert((m, m), basis_powers(&lvl, &lvl.generator_s(), m));
            for d in proper_divisors(m) {
                let img = t.choose_embedding(d, &lvl)?;
                let dl = t.levels[&d].degree();
                t.emb.insert((d, m), basis_powers(&lvl, &img, dl));
            }
        }
        Ok(t)
    }

    fn choose_embedding(&self, d: usize, target: &Level) -> Result<ExtElem> {
        let m = target.degree();
        if d == 1 {
            return Ok(target.one());
        }
        let src = &self.levels[&d];
        let poly: Vec<ExtElem> = src.modulus().iter().map(|&c| target.from_base(c)).collect();
        let candidates = polyfactor::roots(target, &poly, (d * 1000 + m) as u64);
        for r in candidates {
            let img = basis_powers(target, &r, d);
            let ok = proper_divisors(d).into_iter().filter(|&c| c > 1).all(|c| {
                let via = apply(target, &img, &self.emb[&(c, d)][1]);
                via == self.emb[&(c, m)][1]
            });
            if ok {
                return Ok(r);
            }
        }
        Err(Error::InvalidArgument(format!("no compatible embedding of level {d} into {m}")))
    }

    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }

    pub fn level(&self, d: usize) -> Result<&Arc<Level>> {
        self.levels.get(&d).ok_or(Error::MissingLevel(d))
    }

    pub fn has_level(&self, d: usize) -> bool {
        self.levels.contains_key(&d)
    }

    pub fn degrees(&self) -> impl Iterator<Item = usize> + '_ {
        self.levels.keys().copied()
    }

    /// Image of `x` (an element of level `d`) in level `m`.
    pub fn embed(&self, x: &ExtElem, d: usize, m: usize) -> Result<ExtElem> {
        if !m.is_multiple_of(d) {
            return Err(Error::NotSubfield { d, m });
        }
        let target = self.level(m)?;
        let img = self.emb.get(&(d, m)).ok_or(Error::MissingLevel(d))?;
        Ok(apply(target, img, x))
    }

    /// `x^{q^j}`, for `x` in the level matching its coordinate count.
    pub fn frobenius_power(&self, x: &ExtElem, j: usize) -> Result<ExtElem> {
        Ok(self.level(x.0.len())?.frobenius_power(x, j))
    }

    pub fn invariants(&self, x: &ExtElem) -> Result<FieldInvariants> {
        Ok(self.level(x.0.len())?.invariants(x))
    }

    pub fn find_element_of_order(&self, i: usize, m: u64) -> Result<ExtElem> {
        self.level(i)?.find_element_of_order(m)
    }
}

fn basis_powers(l: &Level, r: &ExtElem, d: usize) -> Vec<ExtElem> {
    let mut out = Vec::with_capacity(d);
    let mut acc = l.one();
    for _ in 0..d {
        out.push(acc.clone());
        acc = l.mul(&acc, r);
    }
    out
}

fn apply(target: &Level, img: &[ExtElem], x: &ExtElem) -> ExtElem {
    let mut out = target.zero();
    for (c, b) in x.0.iter().zip(img) {
        if *c != 0 {
            out = target.add(&out, &target.mul(&target.from_base(*c), b));
        }
    }
    out
}

impl Level {
    /// Characteristic polynomial over `F_q` of multiplication by `x`.
    pub fn charpoly(&self, x: &ExtElem) -> Vec<u32> {
        let cp = upoly::from_roots(self, &self.conjugates(x));
        cp.iter().map(|c| self.to_base(c).expect("rational")).collect()
    }

    pub fn invariants(&self, x: &ExtElem) -> FieldInvariants {
        let base = self.base().as_ref();
        let conj = self.conjugates(x);
        let norm = conj.iter().fold(self.one(), |a, c| self.mul(&a, c));
        let trace = conj.iter().fold(self.zero(), |a, c| self.add(&a, c));
        let cp = upoly::from_roots(self, &conj);
        let charpoly: Vec<u32> = cp.iter().map(|c| self.to_base(c).expect("rational")).collect();
        let dx = self.element_degree(x);
        let mp = upoly::from_roots(self, &conj[..dx]);
        let minpoly: Vec<u32> = mp.iter().map(|c| self.to_base(c).expect("rational")).collect();
        let trace = self.to_base(&trace).expect("rational");
        FieldInvariants {
            norm: self.to_base(&norm).expect("rational"),
            trace,
            absolute_trace: base.absolute_trace(trace),
            charpoly,
            minpoly,
        }
    }

    /// An element of multiplicative order exactly `m`: `x^{(N-1)/m}` for the
    /// first `x` in element order for which this has order `m`.
    pub fn find_element_of_order(&self, m: u64) -> Result<ExtElem> {
        let n1 = self.size() - 1;
        if m == 0 || !n1.is_multiple_of(m as u128) {
            return Err(Error::BadOrder { m: m as u128 });
        }
        if m == 1 {
            return Ok(self.one());
        }
        let primes: Vec<u64> = arith::factorize(m).into_iter().map(|(l, _)| l).collect();
        let e = n1 / m as u128;
        for i in 1..self.size() {
            let y = self.pow(&self.from_index(i), e);
            if primes.iter().all(|&l| self.pow(&y, (m / l) as u128) != self.one()) {
                return Ok(y);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    /// Smallest element, in element order, that generates the multiplicative
    /// group.
    pub fn canonical_generator(&self) -> Result<ExtElem> {
        let n1 = u64::try_from(self.size() - 1)
            .map_err(|_| Error::ResourceLimit("group order exceeds 64 bits".into()))?;
        let primes: Vec<u64> = arith::factorize(n1).into_iter().map(|(l, _)| l).collect();
        for i in 1..self.size() {
            let x = self.from_index(i);
            if primes.iter().all(|&l| self.pow(&x, (n1 / l) as u128) != self.one()) {
                return Ok(x);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    /// Serialization as `e*i` integers in `[0, p)`, basis index major.
    pub fn to_ints(&self, x: &ExtElem) -> Vec<u32> {
        x.0.iter().flat_map(|&c| self.base().digits(c)).collect()
    }

    pub fn from_ints(&self, v: &[u32]) -> Result<ExtElem> {
        let k = self.base().k() as usize;
        if v.len() != k * self.degree() {
            return Err(Error::Parse(format!("expected {} integers", k * self.degree())));
        }
        Ok(ExtElem(
            v.chunks(k)
                .map(|ch| self.base().from_digits(ch))
                .collect::<Result<_>>()?,
        ))
    }
}

/// Sort key of an element: coordinates from the highest basis index down.
pub fn element_key(x: &ExtElem) -> Vec<u32> {
    x.0.iter().rev().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embeddings_compose() {
        let t = Tower::build(2, 1, 12).unwrap();
        for (d, e, m) in [(2, 4, 12), (2, 6, 12), (3, 6, 12), (4, 12, 12), (1, 2, 4)] {
            let l = t.level(d).unwrap();
            let s = l.generator_s();
            let two_step = t.embed(&t.embed(&s, d, e).unwrap(), e, m).unwrap();
            assert_eq!(two_step, t.embed(&s, d, m).unwrap(), "{d} {e} {m}");
        }
    }

    #[test]
    fn embedding_is_homomorphism() {
        let t = Tower::build(3, 1, 6).unwrap();
        let l2 = t.level(2).unwrap();
        let l6 = t.level(6).unwrap();
        for a in l2.elements() {
            for b in l2.elements() {
                let ea = t.embed(&a, 2, 6).unwrap();
                let eb = t.embed(&b, 2, 6).unwrap();
                assert_eq!(t.embed(&l2.mul(&a, &b), 2, 6).unwrap(), l6.mul(&ea, &eb));
            }
        }
    }

    #[test]
    fn orders() {
        let t = Tower::build(7, 1, 1).unwrap();
        let g = t.find_element_of_order(1, 6).unwrap();
        assert!(g.0[0] == 3 || g.0[0] == 5);
        let t = Tower::build(2, 1, 6).unwrap();
        let l6 = t.level(6).unwrap();
        let x = t.find_element_of_order(6, 9).unwrap();
        assert_eq!(l6.pow(&x, 9), l6.one());
        assert_ne!(l6.pow(&x, 3), l6.one());
    }

    #[test]
    fn invariants_of_generator() {
        let t = Tower::build(3, 1, 2).unwrap();
        let l = t.level(2).unwrap();
        let s = l.generator_s();
        let inv = l.invariants(&s);
        assert_eq!(inv.charpoly, l.modulus());
        assert_eq!(inv.minpoly, l.modulus());
        let one = l.invariants(&l.one());
        assert_eq!(one.charpoly, vec![1, 1, 1]); // (X - 1)^2 over F_3
        assert_eq!(one.minpoly, vec![2, 1]);
    }
}
