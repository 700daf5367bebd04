//! Dense univariate polynomials over any [`Field`], stored low-to-high with
//! no trailing zeros (the zero polynomial is the empty vector).

use crate::gfield::Field;

pub type Poly<E> = Vec<E>;

pub fn trim<F: Field + ?Sized>(f: &F, a: &mut Poly<F::Elem>) {
    while a.last().is_some_and(|c| f.is_zero(c)) {
        a.pop();
    }
}

pub fn degree<E>(a: &[E]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub fn constant<F: Field + ?Sized>(f: &F, c: F::Elem) -> Poly<F::Elem> {
    if f.is_zero(&c) {
        vec![]
    } else {
        vec![c]
    }
}

pub fn x<F: Field + ?Sized>(f: &F) -> Poly<F::Elem> {
    vec![f.zero(), f.one()]
}

pub fn is_one<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> bool {
    a.len() == 1 && a[0] == f.one()
}

pub fn add<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out: Vec<F::Elem> = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o = f.add(o, s);
    }
    trim(f, &mut out);
    out
}

pub fn sub<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let n = a.len().max(b.len());
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let x = a.get(i).cloned().unwrap_or_else(|| f.zero());
        let y = b.get(i).cloned().unwrap_or_else(|| f.zero());
        out.push(f.sub(&x, &y));
    }
    trim(f, &mut out);
    out
}

pub fn neg<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    a.iter().map(|c| f.neg(c)).collect()
}

pub fn scale<F: Field + ?Sized>(f: &F, a: &[F::Elem], c: &F::Elem) -> Poly<F::Elem> {
    if f.is_zero(c) {
        return vec![];
    }
    a.iter().map(|x| f.mul(x, c)).collect()
}

pub fn mul<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = f.poly_mul(a, b);
    trim(f, &mut out);
    out
}

pub(crate) fn mul_schoolbook<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![f.zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if f.is_zero(x) {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            let t = f.mul(x, y);
            out[i + j] = f.add(&out[i + j], &t);
        }
    }
    out
}

/// Quotient and remainder; panics if `b` is zero.
pub fn divrem<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    f.poly_divrem(a, b)
}

pub(crate) fn divrem_schoolbook<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
) -> (Poly<F::Elem>, Poly<F::Elem>) {
    if a.len() < b.len() {
        return (vec![], a.to_vec());
    }
    let db = b.len() - 1;
    let lead_inv = f.inv(&b[db]);
    let mut r = a.to_vec();
    let mut qt = vec![f.zero(); a.len() - db];
    for i in (0..qt.len()).rev() {
        let c = f.mul(&r[i + db], &lead_inv);
        if f.is_zero(&c) {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            let t = f.mul(&c, bj);
            r[i + j] = f.sub(&r[i + j], &t);
        }
        qt[i] = c;
    }
    r.truncate(db);
    trim(f, &mut r);
    trim(f, &mut qt);
    (qt, r)
}

pub fn rem<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    divrem(f, a, b).1
}

pub fn div_exact<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let (qt, r) = divrem(f, a, b);
    debug_assert!(r.is_empty(), "inexact division");
    qt
}

pub fn monic<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    match a.last() {
        None => vec![],
        Some(l) => scale(f, a, &f.inv(l)),
    }
}

/// Monic gcd (zero if both inputs are zero).
pub fn gcd<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    f.poly_gcd(a, b)
}

pub(crate) fn gcd_euclid<F: Field + ?Sized>(f: &F, a: &[F::Elem], b: &[F::Elem]) -> Poly<F::Elem> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(f, &mut a);
    trim(f, &mut b);
    while !b.is_empty() {
        // a <- a mod b, in place
        let db = b.len() - 1;
        let inv = f.inv(&b[db]);
        while a.len() > db {
            let top = a.pop().expect("nonempty");
            if !f.is_zero(&top) {
                let c = f.mul(&top, &inv);
                let shift = a.len() - db;
                for (x, y) in a[shift..].iter_mut().zip(&b[..db]) {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
            trim(f, &mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    monic(f, &a)
}

pub fn derivative<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> Poly<F::Elem> {
    let mut out: Vec<F::Elem> = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| f.mul(c, &f.from_int(i as u64)))
        .collect();
    trim(f, &mut out);
    out
}

pub fn mulmod<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Poly<F::Elem> {
    rem(f, &mul(f, a, b), m)
}

pub fn powmod<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    e: u128,
    m: &[F::Elem],
) -> Poly<F::Elem> {
    let base = rem(f, a, m);
    if e == 0 {
        return rem(f, &[f.one()], m);
    }
    if base.len() == 2 && f.is_zero(&base[0]) && base[1] == f.one() {
        return x_pow_mod(f, e, m);
    }
    // left-to-right sliding window over odd powers base^1, base^3, ...
    let bits = 128 - e.leading_zeros() as usize;
    let w = match bits {
        0..=8 => 1,
        9..=24 => 2,
        25..=80 => 3,
        _ => 4,
    };
    let sq = mulmod(f, &base, &base, m);
    let mut odd = vec![base];
    for i in 1..(1usize << (w - 1)) {
        let next = mulmod(f, &odd[i - 1], &sq, m);
        odd.push(next);
    }
    let bit = |i: usize| (e >> i) & 1 == 1;
    let mut acc: Option<Poly<F::Elem>> = None;
    let mut i = bits as isize - 1;
    while i >= 0 {
        if !bit(i as usize) {
            acc = acc.map(|a| mulmod(f, &a, &a, m));
            i -= 1;
            continue;
        }
        let mut lo = (i - w as isize + 1).max(0);
        while !bit(lo as usize) {
            lo += 1;
        }
        let len = (i - lo + 1) as usize;
        let v = ((e >> lo) & ((1u128 << len) - 1)) as usize;
        acc = Some(match acc {
            None => odd[v >> 1].clone(),
            Some(mut a) => {
                for _ in 0..len {
                    a = mulmod(f, &a, &a, m);
                }
                mulmod(f, &a, &odd[v >> 1], m)
            }
        });
        i = lo - 1;
    }
    acc.expect("nonzero exponent")
}

/// `x^e mod m`; multiplying by `x` is a shift followed by one reduction step.
pub fn x_pow_mod<F: Field + ?Sized>(f: &F, e: u128, m: &[F::Elem]) -> Poly<F::Elem> {
    let d = m.len() - 1;
    let lead_inv = f.inv(&m[d]);
    let mut acc = rem(f, &[f.one()], m);
    for i in (0..128 - e.leading_zeros()).rev() {
        acc = mulmod(f, &acc, &acc, m);
        if (e >> i) & 1 == 1 {
            acc.insert(0, f.zero());
            if acc.len() > d {
                let c = f.mul(&acc[d], &lead_inv);
                for (j, mj) in m.iter().enumerate() {
                    acc[j] = f.sub(&acc[j], &f.mul(&c, mj));
                }
                acc.truncate(d);
                trim(f, &mut acc);
            }
        }
    }
    acc
}

/// `a -> a^N mod m` (`N = |F|`) as a linear map: row `i` holds
/// `x^{N i} mod m`, so applying it costs one pass over the coefficients.
pub struct FrobeniusMatrix<E> {
    rows: Vec<Poly<E>>,
}

impl<E: Clone> FrobeniusMatrix<E> {
    pub fn new<F: Field<Elem = E> + ?Sized>(f: &F, m: &[E]) -> Self {
        Self::from_image_of_x(f, m, &x_pow_mod(f, f.size(), m))
    }

    /// The same map given `xq = x^N mod m`.
    pub fn from_image_of_x<F: Field<Elem = E> + ?Sized>(f: &F, m: &[E], xq: &[E]) -> Self {
        let d = m.len() - 1;
        let mut rows = Vec::with_capacity(d);
        let mut acc = rem(f, &[f.one()], m);
        for i in 0..d {
            if i > 0 {
                acc = mulmod(f, &acc, xq, m);
            }
            rows.push(acc.clone());
        }
        FrobeniusMatrix { rows }
    }

    /// `a^N mod m` for `a` already reduced mod `m`.
    pub fn apply<F: Field<Elem = E> + ?Sized>(&self, f: &F, a: &[E]) -> Poly<E> {
        let d = self.rows.len();
        let mut out = vec![f.zero(); d];
        for (c, row) in a.iter().zip(&self.rows) {
            if f.is_zero(c) {
                continue;
            }
            for (o, r) in out.iter_mut().zip(row) {
                *o = f.add(o, &f.mul(c, r));
            }
        }
        trim(f, &mut out);
        out
    }
}

pub fn eval<F: Field + ?Sized>(f: &F, a: &[F::Elem], x: &F::Elem) -> F::Elem {
    a.iter()
        .rev()
        .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
}

/// `a(b) mod m`.
pub fn compose_mod<F: Field + ?Sized>(
    f: &F,
    a: &[F::Elem],
    b: &[F::Elem],
    m: &[F::Elem],
) -> Poly<F::Elem> {
    let mut acc: Poly<F::Elem> = vec![];
    for c in a.iter().rev() {
        acc = mulmod(f, &acc, b, m);
        acc = add(f, &acc, &constant(f, c.clone()));
    }
    rem(f, &acc, m)
}

/// Deterministic irreducibility test: `deg a >= 1` and
/// `gcd(x^{N^i} - x, a) = 1` for `1 <= i <= deg a / 2`, `N = |F|`.
pub fn is_irreducible<F: Field + ?Sized>(f: &F, a: &[F::Elem]) -> bool {
    let Some(n) = degree(a) else { return false };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    if f.is_zero(&a[0]) {
        return false;
    }
    let m = monic(f, a);
    let xx = x(f);
    // most candidates have a root; reject those before building the matrix
    let mut h = x_pow_mod(f, f.size(), &m);
    if gcd(f, &sub(f, &h, &xx), &m).len() > 1 {
        return false;
    }
    let frob = FrobeniusMatrix::from_image_of_x(f, &m, &h);
    for _ in 1..n / 2 {
        h = frob.apply(f, &h);
        let g = gcd(f, &sub(f, &h, &xx), &m);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// Product of `(X - r)` over the given roots.
pub fn from_roots<F: Field + ?Sized>(f: &F, roots: &[F::Elem]) -> Poly<F::Elem> {
    let mut acc = vec![f.one()];
    for r in roots {
        acc = mul(f, &acc, &[f.neg(r), f.one()]);
    }
    acc
}

/// Canonical polynomial order: by degree, then coefficients from the top
/// down under the field's element order.
pub fn key_cmp<E: Ord>(a: &[E], b: &[E]) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.iter().rev().cmp(b.iter().rev()))
}

/// `a^N mod m` where `N` is the field size, i.e. the Frobenius image.
pub fn frobenius_mod<F: Field + ?Sized>(f: &F, a: &[F::Elem], m: &[F::Elem]) -> Poly<F::Elem> {
    powmod(f, a, f.size(), m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gfield::PrimeField;

    #[test]
    fn powers_agree_with_repeated_multiplication() {
        let f = PrimeField::new(7).unwrap();
        let m = vec![3, 1, 0, 5, 2, 1];
        for a in [vec![0, 1], vec![2, 5, 1], vec![4]] {
            let mut naive = rem(&f, &[1], &m);
            for e in 0..300u128 {
                assert_eq!(powmod(&f, &a, e, &m), naive, "a={a:?} e={e}");
                naive = mulmod(&f, &naive, &a, &m);
            }
        }
        assert_eq!(x_pow_mod(&f, 1, &[1, 1]), vec![6]);
        let fm = FrobeniusMatrix::new(&f, &m);
        for a in [vec![0, 1], vec![2, 5, 1, 0, 3], vec![4]] {
            assert_eq!(fm.apply(&f, &a), frobenius_mod(&f, &a, &m));
        }
    }

    #[test]
    fn divrem_identity() {
        let f = PrimeField::new(5).unwrap();
        let a = vec![1, 2, 3, 4, 1];
        let b = vec![2, 0, 1];
        let (q, r) = divrem(&f, &a, &b);
        assert_eq!(add(&f, &mul(&f, &q, &b), &r), a);
        assert!(r.len() < b.len());
    }

    #[test]
    fn irreducibility_over_f2() {
        let f = PrimeField::new(2).unwrap();
        assert!(is_irreducible(&f, &[1, 1, 1]));
        assert!(!is_irreducible(&f, &[1, 0, 1]));
        assert!(is_irreducible(&f, &[1, 1, 0, 1]));
        // exactly 6 irreducible quintics over F_2
        let count = (0u32..32)
            .filter(|c| {
                let mut p: Vec<u32> = (0..5).map(|i| (c >> i) & 1).collect();
                p.push(1);
                is_irreducible(&f, &p)
            })
            .count();
        assert_eq!(count, 6);
    }

    #[test]
    fn gcd_is_monic() {
        let f = PrimeField::new(7).unwrap();
        let a = mul(&f, &[1, 1], &[3, 0, 2]);
        let b = mul(&f, &[1, 1], &[5, 1]);
        assert_eq!(gcd(&f, &a, &b), vec![1, 1]);
    }
}
