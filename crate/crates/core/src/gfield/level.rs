use super::gf::smallest_irreducible;
use super::{Field, Gf};
use rand::RngCore;
use smallvec::{smallvec, SmallVec};
use std::cmp::Ordering;
use std::sync::Arc;

/// Element of a level `F_{q^i}`: coordinates on the basis `1, s, ..., s^{i-1}`
/// over `F_q`, each coordinate a base-field code.
///
/// Ordered lexicographically from the highest basis index down, so `0` is
/// the minimum and elements of `F_q` precede everything else.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExtElem(pub Coords);

/// Coordinate storage; inline for levels up to 8.
pub type Coords = SmallVec<[u32; 8]>;

impl Ord for ExtElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.iter().rev().cmp(other.0.iter().rev()))
    }
}

impl PartialOrd for ExtElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl ExtElem {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }
}

/// A model of `F_{q^i}` as `F_q[s]/(m(s))`, `m` the smallest monic
/// irreducible of degree `i` over `F_q`.
#[derive(Clone, Debug)]
pub struct Level {
    base: Arc<Gf>,
    degree: usize,
    modulus: Vec<u32>,
    // s^{i+j} mod m for 0 <= j < i - 1: the basis multiplication table
    reduce: Vec<Vec<u32>>,
    // (s^j)^q mod m
    frob: Vec<Vec<u32>>,
    size: u128,
}

impl Level {
    pub fn new(base: Arc<Gf>, degree: usize) -> Self {
        assert!(degree >= 1);
        let modulus = smallest_irreducible(base.as_ref(), degree);
        Self::with_modulus(base, modulus)
    }

    /// `F_q[s]/(m(s))` for a monic irreducible `m` (not checked).
    pub fn with_modulus(base: Arc<Gf>, modulus: Vec<u32>) -> Self {
        assert!(modulus.len() >= 2 && modulus.last() == Some(&1), "monic modulus expected");
        let degree = modulus.len() - 1;
        let size = (base.q() as u128).pow(degree as u32);
        let mut lvl = Level { base, degree, modulus, reduce: vec![], frob: vec![], size };
        let f = lvl.base.clone();
        let m = lvl.modulus.clone();
        let mut reduce = Vec::new();
        for j in 0..degree.saturating_sub(1) {
            let mut xp = vec![0u32; degree + j + 1];
            xp[degree + j] = 1;
            reduce.push(lvl.pad(crate::upoly::rem(f.as_ref(), &xp, &m)));
        }
        lvl.reduce = reduce;
        let sq = ExtElem(Coords::from_vec(lvl.pad(crate::upoly::x_pow_mod(f.as_ref(), f.q() as u128, &m))));
        let mut frob = Vec::with_capacity(degree);
        let mut acc = lvl.one();
        for _ in 0..degree {
            frob.push(acc.0.to_vec());
            acc = lvl.mul(&acc, &sq);
        }
        lvl.frob = frob;
        lvl
    }

    fn pad(&self, mut v: Vec<u32>) -> Vec<u32> {
        v.resize(self.degree, 0);
        v
    }

    pub fn base(&self) -> &Arc<Gf> {
        &self.base
    }
    pub fn degree(&self) -> usize {
        self.degree
    }
    /// Defining polynomial over `F_q`, low-to-high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// Products of basis elements `s^a * s^b` with `a + b >= i`, as rows.
    pub fn multiplication_table(&self) -> &[Vec<u32>] {
        &self.reduce
    }

    /// The basis element `s` (or `1` when `i = 1`... coordinates `[0]`).
    pub fn generator_s(&self) -> ExtElem {
        if self.degree == 1 {
            // root of the degree-1 modulus x + c0
            return ExtElem(smallvec![self.base.neg(&self.modulus[0])]);
        }
        let mut c: Coords = smallvec![0u32; self.degree];
        c[1] = 1;
        ExtElem(c)
    }

    pub fn from_base(&self, c: u32) -> ExtElem {
        let mut v: Coords = smallvec![0u32; self.degree];
        v[0] = c;
        ExtElem(v)
    }

    /// The base-field value if `a` lies in `F_q`.
    pub fn to_base(&self, a: &ExtElem) -> Option<u32> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }

    /// `a^q`.
    pub fn frobenius(&self, a: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        let mut out: Coords = smallvec![0u32; self.degree];
        for (j, c) in a.0.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.frob[j]) {
                *o = f.add(o, &f.mul(c, r));
            }
        }
        ExtElem(out)
    }

    pub fn frobenius_power(&self, a: &ExtElem, j: usize) -> ExtElem {
        let mut x = a.clone();
        for _ in 0..j % self.degree {
            x = self.frobenius(&x);
        }
        x
    }

    /// Conjugates `a, a^q, ..., a^{q^{i-1}}`.
    pub fn conjugates(&self, a: &ExtElem) -> Vec<ExtElem> {
        let mut out = Vec::with_capacity(self.degree);
        let mut x = a.clone();
        for _ in 0..self.degree {
            out.push(x.clone());
            x = self.frobenius(&x);
        }
        out
    }

    /// Degree over `F_q` of the subfield generated by `a`.
    pub fn element_degree(&self, a: &ExtElem) -> usize {
        let mut x = self.frobenius(a);
        let mut d = 1;
        while &x != a {
            x = self.frobenius(&x);
            d += 1;
        }
        d
    }

    pub fn elements(&self) -> impl Iterator<Item = ExtElem> + '_ {
        (0..self.size).map(move |i| self.from_index(i))
    }
}

impl Level {
    // odd prime base: integer accumulation, one reduction per coordinate
    fn mul_wide(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        let i = self.degree;
        let mut prod = vec![0u64; 2 * i - 1];
        for (j, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (o, &y) in prod[j..].iter_mut().zip(&b.0) {
                *o += x as u64 * y as u64;
            }
        }
        for v in &mut prod[i..] {
            *v = f.reduce_wide(*v) as u64;
        }
        let (low, high) = prod.split_at_mut(i);
        for (j, &c) in high.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, &r) in low.iter_mut().zip(&self.reduce[j]) {
                *o += c * r as u64;
            }
        }
        ExtElem(low.iter().map(|&v| f.reduce_wide(v)).collect())
    }
}

impl Field for Level {
    type Elem = ExtElem;

    fn zero(&self) -> ExtElem {
        ExtElem(smallvec![0; self.degree])
    }
    fn one(&self) -> ExtElem {
        self.from_base(1)
    }
    fn is_zero(&self, a: &ExtElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
    fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| f.add(x, y)).collect())
    }
    fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        ExtElem(a.0.iter().zip(&b.0).map(|(x, y)| f.sub(x, y)).collect())
    }
    fn neg(&self, a: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        ExtElem(a.0.iter().map(|x| f.neg(x)).collect())
    }
    fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let f = self.base.as_ref();
        let i = self.degree;
        if i == 1 {
            return ExtElem(smallvec![f.mul(&a.0[0], &b.0[0])]);
        }
        if f.k() == 1 && f.p() != 2 {
            return self.mul_wide(a, b);
        }
        let mut prod = vec![0u32; 2 * i - 1];
        for (j, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (k, y) in b.0.iter().enumerate() {
                if *y != 0 {
                    prod[j + k] = f.add(&prod[j + k], &f.mul(x, y));
                }
            }
        }
        let (low, high) = prod.split_at(i);
        let mut out = Coords::from_slice(low);
        for (j, c) in high.iter().enumerate() {
            if *c == 0 {
                continue;
            }
            for (o, r) in out.iter_mut().zip(&self.reduce[j]) {
                *o = f.add(o, &f.mul(c, r));
            }
        }
        ExtElem(out)
    }
    fn inv(&self, a: &ExtElem) -> ExtElem {
        assert!(!self.is_zero(a), "inverse of zero");
        if self.degree == 1 {
            return ExtElem(smallvec![self.base.inv(&a.0[0])]);
        }
        // a^{-1} = a^{r-1} * N(a)^{-1} with r = 1 + q + ... + q^{i-1}
        let mut conj_prod = self.one();
        let mut x = self.frobenius(a);
        for _ in 1..self.degree {
            conj_prod = self.mul(&conj_prod, &x);
            x = self.frobenius(&x);
        }
        let norm = self.mul(&conj_prod, a);
        let n = self.to_base(&norm).expect("norm lies in the base field");
        let ninv = self.base.inv(&n);
        let f = self.base.as_ref();
        ExtElem(conj_prod.0.iter().map(|c| f.mul(c, &ninv)).collect())
    }
    fn size(&self) -> u128 {
        self.size
    }
    fn characteristic(&self) -> u32 {
        self.base.p()
    }
    fn random(&self, rng: &mut dyn RngCore) -> ExtElem {
        ExtElem((0..self.degree).map(|_| self.base.random(rng)).collect())
    }
    fn from_index(&self, i: u128) -> ExtElem {
        let q = self.base.q() as u128;
        let mut rest = i;
        ExtElem(
            (0..self.degree)
                .map(|_| {
                    let d = (rest % q) as u32;
                    rest /= q;
                    d
                })
                .collect(),
        )
    }
    fn from_int(&self, c: u64) -> ExtElem {
        self.from_base(self.base.from_int(c))
    }
    fn prime_degree(&self) -> u32 {
        self.base.k() * self.degree as u32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f4_as_level_two_over_f2() {
        let base = Arc::new(Gf::new(2, 1).unwrap());
        let l = Level::new(base, 2);
        assert_eq!(l.modulus(), &[1, 1, 1]);
        let t = l.generator_s();
        let one_t = l.add(&l.one(), &t);
        assert_eq!(l.mul(&one_t, &one_t), t);
        let mut all: Vec<ExtElem> = l.elements().collect();
        all.sort();
        let want: Vec<ExtElem> = [[0, 0], [1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|c| ExtElem(Coords::from_slice(c)))
            .collect();
        assert_eq!(all, want);
    }

    #[test]
    fn level_axioms_sampled() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for (p, k, i) in [(2, 1, 5), (3, 1, 4), (2, 2, 3), (5, 1, 3), (3, 2, 2)] {
            let base = Arc::new(Gf::new(p, k).unwrap());
            let l = Level::new(base, i);
            for _ in 0..300 {
                let a = l.random(&mut rng);
                let b = l.random(&mut rng);
                let c = l.random(&mut rng);
                assert_eq!(l.mul(&a, &l.mul(&b, &c)), l.mul(&l.mul(&a, &b), &c));
                assert_eq!(
                    l.mul(&a, &l.add(&b, &c)),
                    l.add(&l.mul(&a, &b), &l.mul(&a, &c))
                );
                assert_eq!(l.frobenius(&a), Field::pow(&l, &a, l.base().q() as u128));
                if !l.is_zero(&a) {
                    assert_eq!(l.mul(&a, &l.inv(&a)), l.one());
                }
            }
        }
    }

    #[test]
    fn multiplication_table_commutes() {
        let base = Arc::new(Gf::new(3, 1).unwrap());
        let l = Level::new(base, 4);
        for a in 0..4 {
            for b in 0..4 {
                let mut ea = vec![0; 4];
                ea[a] = 1;
                let mut eb = vec![0; 4];
                eb[b] = 1;
                let (ea, eb) = (ExtElem(ea.into()), ExtElem(eb.into()));
                assert_eq!(l.mul(&ea, &eb), l.mul(&eb, &ea));
            }
        }
    }
}
