use super::{Field, MAX_TABLE_FIELD};
use crate::arith;
use crate::error::{Error, Result};
use crate::upoly;
use rand::RngCore;
use std::collections::HashSet;

/// The prime field `F_p` with plain modular arithmetic.
#[derive(Clone, Debug)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u32) -> Result<Self> {
        if !arith::is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        Ok(PrimeField { p })
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn add(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + *b as u64) % self.p as u64) as u32
    }
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 + self.p as u64 - *b as u64) % self.p as u64) as u32
    }
    fn neg(&self, a: &u32) -> u32 {
        (self.p - a) % self.p
    }
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        self.pow(a, self.p as u128 - 2)
    }
    fn size(&self) -> u128 {
        self.p as u128
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        (rng.next_u64() % self.p as u64) as u32
    }
    fn from_index(&self, i: u128) -> u32 {
        i as u32
    }
    fn from_int(&self, c: u64) -> u32 {
        (c % self.p as u64) as u32
    }
}

/// `F_q` for `q = p^k`, elements encoded as integers `sum d_j p^j` where
/// `d_j` are the coordinates on the power basis `1, t, ..., t^{k-1}`.
///
/// Multiplication goes through discrete log tables built from the canonical
/// generator; addition is XOR (p = 2), modular (k = 1) or Zech logarithms.
#[derive(Clone, Debug)]
pub struct Gf {
    p: u32,
    k: u32,
    q: u32,
    modulus: Vec<u32>,
    generator: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    zech: Vec<u32>,
    minus_one: u32,
    // floor(2^64 / p), for Barrett reduction
    recip: u64,
}

const NONE: u32 = u32::MAX;

impl Gf {
    /// Builds `F_{p^k}`.
    pub fn new(p: u32, k: u32) -> Result<Self> {
        let fp = PrimeField::new(p)?;
        if k == 0 {
            return Err(Error::InvalidArgument("extension degree must be positive".into()));
        }
        let q = (p as u64)
            .checked_pow(k)
            .filter(|&q| q <= MAX_TABLE_FIELD)
            .ok_or_else(|| Error::ResourceLimit(format!("{p}^{k} exceeds the table bound")))?
            as u32;
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            smallest_irreducible(&fp, k as usize)
        };
        let slow = SlowArith { fp: &fp, modulus: &modulus, k: k as usize };
        let order = (q - 1) as u64;
        let primes: Vec<u64> = arith::factorize(order).into_iter().map(|(l, _)| l).collect();
        let generator = (1..q)
            .find(|&g| primes.iter().all(|&l| slow.pow(g, order / l) != 1))
            .expect("multiplicative group is cyclic");
        let n = (q - 1) as usize;
        let mut exp = vec![0u32; 2 * n.max(1)];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..n {
            exp[i] = x;
            log[x as usize] = i as u32;
            x = slow.mul(x, generator);
        }
        for i in n..2 * n {
            exp[i] = exp[i - n];
        }
        let mut zech = Vec::new();
        if p != 2 && k > 1 {
            zech = (0..n)
                .map(|d| {
                    let s = slow.add(1, exp[d]);
                    if s == 0 {
                        NONE
                    } else {
                        log[s as usize]
                    }
                })
                .collect();
        }
        let minus_one = if p == 2 { 1 } else { exp[n / 2] };
        let recip = (u64::MAX / p as u64) + u64::from(u64::MAX % p as u64 == p as u64 - 1);
        Ok(Gf { p, k, q, modulus, generator, exp, log, zech, minus_one, recip })
    }

    pub fn p(&self) -> u32 {
        self.p
    }
    pub fn k(&self) -> u32 {
        self.k
    }
    pub fn q(&self) -> u32 {
        self.q
    }
    /// Defining polynomial of `F_q` over `F_p`, low-to-high.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }
    /// Smallest element (in code order) generating `F_q^x`.
    pub fn generator(&self) -> u32 {
        self.generator
    }

    #[inline]
    pub(crate) fn exp_of(&self, e: u64) -> u32 {
        self.exp[(e % (self.q as u64 - 1).max(1)) as usize]
    }

    /// `a^(p^j)`.
    pub fn frobenius_p(&self, a: u32, j: u32) -> u32 {
        if a == 0 {
            return 0;
        }
        let e = (self.log[a as usize] as u64) * (self.p as u64).pow(j % self.k);
        self.exp_of(e)
    }

    /// Coordinates over `F_p`, little-endian.
    /// Odd prime fields, where sums of products are formed as integers and
    /// reduced once.
    #[inline]
    fn wide(&self) -> bool {
        self.k == 1 && self.p != 2
    }

    /// Product of coefficient lists (untrimmed).
    pub fn convolve(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        if a.is_empty() || b.is_empty() {
            return vec![];
        }
        if self.p == 2 {
            let mut acc = vec![0u32; a.len() + b.len() - 1];
            for (i, x) in a.iter().enumerate() {
                if *x == 0 {
                    continue;
                }
                for (o, y) in acc[i..].iter_mut().zip(b) {
                    *o ^= self.mul(x, y);
                }
            }
            return acc;
        }
        if !self.wide() {
            return upoly::mul_schoolbook(self, a, b);
        }
        let terms = a.len().min(b.len()) as u64;
        let pm = self.p as u64 - 1;
        if pm * pm * terms < 1 << 32 {
            let mut acc = vec![0u32; a.len() + b.len() - 1];
            for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (o, &y) in acc[i..].iter_mut().zip(b) {
                    *o += x * y;
                }
            }
            for v in acc.iter_mut() {
                *v = self.reduce_wide(*v as u64);
            }
            return acc;
        }
        let mut acc = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let x = x as u64;
            for (o, &y) in acc[i..].iter_mut().zip(b) {
                *o += x * y as u64;
            }
        }
        acc.into_iter().map(|v| self.reduce_wide(v)).collect()
    }

    /// `v mod p` for any `u64`.
    #[inline(always)]
    pub(crate) fn reduce_wide(&self, v: u64) -> u32 {
        let est = ((v as u128 * self.recip as u128) >> 64) as u64;
        let mut r = v - est * self.p as u64;
        while r >= self.p as u64 {
            r -= self.p as u64;
        }
        r as u32
    }

    /// Euclid with remainders kept as unreduced integers: only the leading
    /// coefficient is reduced at each step.
    fn gcd_wide(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p = self.p as u64;
        let mut a: Vec<u64> = a.iter().map(|&x| x as u64).collect();
        let mut b: Vec<u64> = b.iter().map(|&x| x as u64).collect();
        let settle = |v: &mut Vec<u64>| {
            while let Some(&t) = v.last() {
                if self.reduce_wide(t) != 0 {
                    break;
                }
                v.pop();
            }
            for x in v.iter_mut() {
                *x = self.reduce_wide(*x) as u64;
            }
        };
        settle(&mut a);
        settle(&mut b);
        while !b.is_empty() {
            let db = b.len() - 1;
            let inv = self.inv(&(b[db] as u32)) as u64;
            while a.len() > db {
                let top = self.reduce_wide(a.pop().expect("nonempty")) as u64;
                if top != 0 {
                    let c = p - self.reduce_wide(top * inv) as u64;
                    let shift = a.len() - db;
                    for (x, &y) in a[shift..].iter_mut().zip(&b[..db]) {
                        *x += c * y;
                    }
                }
                while a.last().is_some_and(|&t| self.reduce_wide(t) == 0) {
                    a.pop();
                }
            }
            settle(&mut a);
            std::mem::swap(&mut a, &mut b);
        }
        let out: Vec<u32> = a.into_iter().map(|x| x as u32).collect();
        upoly::monic(self, &out)
    }

    fn divrem_wide(&self, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        if a.len() < b.len() {
            return (vec![], a.to_vec());
        }
        let p = self.p as u64;
        let db = b.len() - 1;
        let lead_inv = self.inv(&b[db]) as u64;
        let mut r: Vec<u64> = a.iter().map(|&x| x as u64).collect();
        let mut qt = vec![0u32; a.len() - db];
        for i in (0..qt.len()).rev() {
            let c = self.reduce_wide(self.reduce_wide(r[i + db]) as u64 * lead_inv) as u64;
            if c == 0 {
                continue;
            }
            let nc = p - c;
            for (o, &bj) in r[i..i + db].iter_mut().zip(&b[..db]) {
                *o += nc * bj as u64;
            }
            qt[i] = c as u32;
        }
        let mut rem: Vec<u32> = r[..db].iter().map(|&v| self.reduce_wide(v)).collect();
        upoly::trim(self, &mut rem);
        upoly::trim(self, &mut qt);
        (qt, rem)
    }

    #[inline(never)]
    fn add_zech(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let n = self.q - 1;
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let d = if lb >= la { lb - la } else { lb + n - la };
        let z = self.zech[d as usize];
        if z == NONE {
            0
        } else {
            self.exp[(la + z) as usize]
        }
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut a = a;
        (0..self.k)
            .map(|_| {
                let d = a % self.p;
                a /= self.p;
                d
            })
            .collect()
    }

    pub fn from_digits(&self, d: &[u32]) -> Result<u32> {
        if d.len() != self.k as usize || d.iter().any(|&x| x >= self.p) {
            return Err(Error::Parse(format!("bad field element coordinates {d:?}")));
        }
        Ok(d.iter().rev().fold(0u32, |acc, &x| acc * self.p + x))
    }

    /// Absolute trace `F_q -> F_p`.
    pub fn absolute_trace(&self, a: u32) -> u32 {
        let mut acc = 0;
        for j in 0..self.k {
            acc = self.add(&acc, &self.frobenius_p(a, j));
        }
        acc
    }

    pub fn is_square(&self, a: u32) -> bool {
        a == 0 || self.p == 2 || self.log[a as usize].is_multiple_of(2)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.q
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u32) -> u64 {
        let n = self.q as u64 - 1;
        let l = self.log[a as usize] as u64;
        n / arith::gcd(l, n)
    }
}

impl Field for Gf {
    type Elem = u32;

    fn poly_mul(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        self.convolve(a, b)
    }

    fn poly_gcd(&self, a: &[u32], b: &[u32]) -> Vec<u32> {
        let p2 = (self.p as u128).pow(2);
        if self.wide() && (a.len().max(b.len()) as u128 + 1) * p2 < 1 << 63 {
            self.gcd_wide(a, b)
        } else {
            upoly::gcd_euclid(self, a, b)
        }
    }

    fn poly_divrem(&self, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
        // integer sums stay below 2^63 when (terms + 1) * p^2 does
        let p2 = (self.p as u128).pow(2);
        if self.wide() && (a.len() as u128 + 1) * p2 < 1 << 63 {
            self.divrem_wide(a, b)
        } else {
            upoly::divrem_schoolbook(self, a, b)
        }
    }

    #[inline]
    fn zero(&self) -> u32 {
        0
    }
    #[inline]
    fn one(&self) -> u32 {
        1
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline(always)]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a, *b);
        if self.p == 2 {
            return a ^ b;
        }
        if self.k == 1 {
            let s = a + b;
            return if s >= self.p { s - self.p } else { s };
        }
        self.add_zech(a, b)
    }
    #[inline(always)]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let (a, b) = (*a, *b);
        if self.p == 2 {
            a ^ b
        } else if self.k == 1 {
            if a >= b {
                a - b
            } else {
                a + self.p - b
            }
        } else {
            self.add(&a, &self.neg(&b))
        }
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if self.p == 2 || *a == 0 {
            *a
        } else if self.k == 1 {
            self.p - a
        } else {
            self.mul(a, &self.minus_one)
        }
    }
    #[inline(always)]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        if *a == 0 || *b == 0 {
            0
        } else {
            self.exp[(self.log[*a as usize] + self.log[*b as usize]) as usize]
        }
    }
    #[inline]
    fn inv(&self, a: &u32) -> u32 {
        assert!(*a != 0, "inverse of zero");
        let n = self.q - 1;
        self.exp[((n - self.log[*a as usize]) % n.max(1)) as usize]
    }
    fn pow(&self, a: &u32, e: u128) -> u32 {
        if e == 0 {
            return 1;
        }
        if *a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u128;
        let l = (self.log[*a as usize] as u128 * (e % n.max(1))) % n.max(1);
        self.exp[l as usize]
    }
    fn size(&self) -> u128 {
        self.q as u128
    }
    fn characteristic(&self) -> u32 {
        self.p
    }
    fn random(&self, rng: &mut dyn RngCore) -> u32 {
        (rng.next_u64() % self.q as u64) as u32
    }
    fn from_index(&self, i: u128) -> u32 {
        i as u32
    }
    fn from_int(&self, c: u64) -> u32 {
        (c % self.p as u64) as u32
    }
    fn prime_degree(&self) -> u32 {
        self.k
    }
}

/// Digit-level arithmetic used only while building the tables.
struct SlowArith<'a> {
    fp: &'a PrimeField,
    modulus: &'a [u32],
    k: usize,
}

impl SlowArith<'_> {
    fn to_poly(&self, a: u32) -> Vec<u32> {
        let p = self.fp.characteristic();
        let mut a = a;
        let mut v: Vec<u32> = (0..self.k)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect();
        upoly::trim(self.fp, &mut v);
        v
    }
    fn from_poly(&self, v: &[u32]) -> u32 {
        let p = self.fp.characteristic();
        v.iter().rev().fold(0u32, |acc, &x| acc * p + x)
    }
    fn mul(&self, a: u32, b: u32) -> u32 {
        let prod = upoly::mul(self.fp, &self.to_poly(a), &self.to_poly(b));
        self.from_poly(&upoly::rem(self.fp, &prod, self.modulus))
    }
    fn add(&self, a: u32, b: u32) -> u32 {
        self.from_poly(&upoly::add(self.fp, &self.to_poly(a), &self.to_poly(b)))
    }
    fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut acc = 1u32;
        let mut b = a;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, b);
            }
            b = self.mul(b, b);
            e >>= 1;
        }
        acc
    }
}

/// Smallest monic irreducible polynomial of degree `k` over `f`, in the
/// order that compares coefficients from `x^{k-1}` down to `x^0`, each by
/// the field's element order.
pub(crate) fn smallest_irreducible<F: Field>(f: &F, k: usize) -> Vec<F::Elem> {
    if k == 1 {
        return vec![f.zero(), f.one()];
    }
    let size = f.size();
    let elems: Vec<F::Elem> = (0..size).map(|i| f.from_index(i)).collect();
    let mut high: u128 = 0;
    loop {
        // candidates differ only in the constant term within a block; those
        // with a root have c0 = -m0(a) for some a
        let mut coeffs: Vec<F::Elem> = Vec::with_capacity(k + 1);
        coeffs.push(f.zero());
        let mut rest = high;
        for _ in 1..k {
            coeffs.push(f.from_index(rest % size));
            rest /= size;
        }
        coeffs.push(f.one());
        let rooted: HashSet<F::Elem> =
            elems.iter().map(|a| f.neg(&upoly::eval(f, &coeffs, a))).collect();
        for c0 in &elems {
            if rooted.contains(c0) {
                continue;
            }
            coeffs[0] = c0.clone();
            if upoly::is_irreducible(f, &coeffs) {
                return coeffs;
            }
        }
        high += 1;
    }
}
