//! Factorization over finite fields: squarefree decomposition, distinct-degree
//! splitting and Cantor–Zassenhaus equal-degree splitting.
//!
//! Randomness only decides how a product is split, never what is returned:
//! every list is sorted before it leaves this module.

use crate::gfield::Field;
use crate::upoly::{self, Poly};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pth_root<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    let p = f.characteristic() as usize;
    let e = f.size() / p as u128;
    let mut out: Poly<F::Elem> = a.iter().step_by(p).map(|c| f.pow(c, e)).collect();
    upoly::trim(f, &mut out);
    out
}

/// Squarefree decomposition of a nonconstant polynomial: pairwise coprime
/// squarefree monic parts `a_i` with `monic(a) = prod a_i^{m_i}`.
pub fn squarefree_decomposition<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
) -> Vec<(Poly<F::Elem>, u32)> {
    let mut out = Vec::new();
    sff_rec(f, &upoly::monic(f, a), 1, &mut out);
    out
}

fn sff_rec<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    mult: u32,
    out: &mut Vec<(Poly<F::Elem>, u32)>,
) {
    if a.len() <= 1 {
        return;
    }
    let d = upoly::derivative(f, a);
    let mut c = upoly::gcd(f, a, &d);
    let mut w = upoly::div_exact(f, a, &c);
    let mut i = 1;
    while !upoly::is_one(f, &w) {
        let y = upoly::gcd(f, &w, &c);
        let fac = upoly::div_exact(f, &w, &y);
        if fac.len() > 1 {
            out.push((fac, i * mult));
        }
        w = y;
        c = upoly::div_exact(f, &c, &w);
        i += 1;
    }
    if c.len() > 1 {
        let p = f.characteristic();
        sff_rec(f, &pth_root(f, &c), mult * p, out);
    }
}

/// Product of the distinct monic irreducible factors.
pub fn radical<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    squarefree_decomposition(f, a)
        .into_iter()
        .fold(vec![f.one()], |acc, (g, _)| upoly::mul(f, &acc, &g))
}

/// Distinct-degree splitting of a squarefree monic polynomial, stopping after
/// degree `max_degree`. Returns `(product of the degree-d factors, d)`.
pub fn distinct_degree<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    max_degree: usize,
) -> Vec<(Poly<F::Elem>, usize)> {
    let mut out = Vec::new();
    let mut rest = a.to_vec();
    let x = upoly::x(f);
    // h = x^{N^i} mod a; every factor of `rest` divides `a`
    let frob = upoly::FrobeniusMatrix::new(f, a);
    let mut h = upoly::rem(f, &x, a);
    let mut i = 1;
    while i <= max_degree && rest.len() > 2 * i {
        h = frob.apply(f, &h);
        let g = upoly::gcd(f, &upoly::sub(f, &h, &x), &rest);
        if g.len() > 1 {
            rest = upoly::div_exact(f, &rest, &g);
            out.push((g, i));
        }
        i += 1;
    }
    let d = rest.len().saturating_sub(1);
    if d >= 1 && d <= max_degree && rest.len() <= 2 * i {
        out.push((rest, d));
    }
    out
}

fn random_poly<F: Field + ?Sized>(f: &F, len: usize, rng: &mut dyn RngCore) -> Poly<F::Elem> {
    let mut r: Poly<F::Elem> = (0..len).map(|_| f.random(rng)).collect();
    upoly::trim(f, &mut r);
    r
}

/// Splits a squarefree monic product of degree-`d` irreducibles.
pub fn equal_degree<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    d: usize,
    rng: &mut dyn RngCore,
) -> Vec<Poly<F::Elem>> {
    let mut out = Vec::new();
    let mut stack = vec![a.to_vec()];
    let even = f.characteristic() == 2;
    while let Some(a) = stack.pop() {
        let n = a.len() - 1;
        if n == d {
            out.push(a);
            continue;
        }
        let frob = (!even && d > 1).then(|| upoly::FrobeniusMatrix::new(f, &a));
        loop {
            let r = random_poly(f, n, rng);
            if r.len() <= 1 {
                continue;
            }
            let w = if even {
                let k = f.prime_degree() as usize * d;
                let mut t = r.clone();
                let mut s = r;
                for _ in 1..k {
                    t = upoly::mulmod(f, &t, &t, &a);
                    s = upoly::add(f, &s, &t);
                }
                s
            } else {
                let mut t = r.clone();
                let mut b = r;
                for _ in 1..d {
                    t = frob.as_ref().expect("odd characteristic").apply(f, &t);
                    b = upoly::mulmod(f, &b, &t, &a);
                }
                let b = upoly::powmod(f, &b, (f.size() - 1) / 2, &a);
                upoly::sub(f, &b, &[f.one()])
            };
            let g = upoly::gcd(f, &w, &a);
            if g.len() > 1 && g.len() < a.len() {
                stack.push(upoly::div_exact(f, &a, &g));
                stack.push(g);
                break;
            }
        }
    }
    out
}

/// Complete factorization of a nonzero polynomial into monic irreducibles
/// with multiplicities, sorted by the canonical polynomial order. The
/// leading coefficient is returned separately.
pub fn factor<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    seed: u64,
) -> (F::Elem, Vec<(Poly<F::Elem>, u32)>) {
    let lead = a.last().cloned().expect("zero polynomial");
    let mut rng = rng_from_seed(seed);
    let mut out = Vec::new();
    for (part, m) in squarefree_decomposition(f, a) {
        for (block, d) in distinct_degree(f, &part, usize::MAX) {
            for g in equal_degree(f, &block, d, &mut rng) {
                out.push((g, m));
            }
        }
    }
    out.sort_by(|x, y| upoly::key_cmp(&x.0, &y.0));
    (lead, out)
}

/// The distinct monic irreducible factors of degree exactly `n`, sorted.
pub fn factors_of_degree<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    n: usize,
    seed: u64,
) -> Vec<Poly<F::Elem>> {
    if n == 0 || a.len() <= n {
        return vec![];
    }
    let rad = radical(f, a);
    let Some((block, _)) = distinct_degree(f, &rad, n).into_iter().find(|(_, d)| *d == n) else {
        return vec![];
    };
    let mut rng = rng_from_seed(seed);
    let mut out = equal_degree(f, &block, n, &mut rng);
    out.sort_by(|x, y| upoly::key_cmp(x, y));
    out
}

/// All roots in the field, sorted by element order, without multiplicity.
pub fn roots<F: Field + ?Sized>(f: &F, a: &[F::Elem], seed: u64) -> Vec<F::Elem> {
    let mut out: Vec<F::Elem> = factors_of_degree(f, a, 1, seed)
        .into_iter()
        .map(|g| f.neg(&g[0]))
        .collect();
    out.sort();
    out
}
