//! Brute-force references: orbit partitions computed by closing every form
//! under the whole group, and closed-form counts.
//!
//! Nothing here calls the enumerators, the factoring code or the group
//! machinery of the other modules; only the ground-field tables are shared.

use crate::arith;
use crate::error::{Error, Result};
use crate::gfield::{Field, Gf};
use crate::projgeom::HomPoly;

/// Work budget in elementary steps (`q^{n+3}` for places).
pub const ORACLE_BUDGET: u64 = 1_000_000_000;

/// One orbit: its members sorted by `poly_key`, and `|G| / |orbit|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    pub members: Vec<HomPoly>,
    pub stabilizer_order: u64,
}

impl Orbit {
    /// The `poly_key`-smallest member.
    pub fn least(&self) -> &HomPoly {
        &self.members[0]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Counts {
    /// Monic irreducible forms of degree `n` (places), `q + 1` when `n = 1`.
    pub places: u64,
    /// Effective divisors of degree `n`.
    pub divisors: u64,
    pub group_order: u64,
    /// `[PGL_2(F_{q^2}) : PGL_2(F_q)]`.
    pub coset_index: u64,
}

pub fn counting_formulas(q: u64, n: u32) -> Counts {
    let places = if n == 1 {
        q + 1
    } else {
        let s: i128 = arith::divisors(n as u64)
            .into_iter()
            .map(|d| arith::mobius(d) as i128 * (q as i128).pow(n / d as u32))
            .sum();
        (s / n as i128) as u64
    };
    Counts {
        places,
        divisors: (q.pow(n + 1) - 1) / (q - 1),
        group_order: q * q * q - q,
        coset_index: q * q * q + q,
    }
}

fn field(q: u64) -> Result<Gf> {
    let (p, e) = arith::prime_power(q).ok_or(Error::NotPrimePower(q))?;
    Gf::new(p, e)
}

fn group(f: &Gf) -> Vec<[u32; 4]> {
    let q = f.q();
    let mut g = Vec::new();
    for b in 0..q {
        for c in 0..q {
            for d in 0..q {
                if d != f.mul(&b, &c) {
                    g.push([1, b, c, d]);
                }
            }
        }
    }
    for c in 1..q {
        for d in 0..q {
            g.push([0, 1, c, d]);
        }
    }
    g
}

fn poly_mul(f: &Gf, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.add(&out[i + j], &f.mul(x, y));
        }
    }
    out
}

/// `g(d x - b y, -c x + a y)` scaled so its top nonzero coefficient is one.
fn act(f: &Gf, m: &[u32; 4], g: &[u32]) -> Vec<u32> {
    let [a, b, c, d] = *m;
    let n = g.len() - 1;
    let xs = [f.neg(&b), d];
    let ys = [a, f.neg(&c)];
    let mut xp = vec![vec![1u32]];
    let mut yp = vec![vec![1u32]];
    for i in 1..=n {
        xp.push(poly_mul(f, &xp[i - 1], &xs));
        yp.push(poly_mul(f, &yp[i - 1], &ys));
    }
    let mut out = vec![0u32; n + 1];
    for (i, ci) in g.iter().enumerate() {
        if *ci == 0 {
            continue;
        }
        let t = poly_mul(f, &xp[i], &yp[n - i]);
        for (k, tk) in t.iter().enumerate() {
            out[k] = f.add(&out[k], &f.mul(ci, tk));
        }
    }
    let lead = *out.iter().rev().find(|&&c| c != 0).expect("invertible substitution");
    let inv = f.inv(&lead);
    out.iter().map(|c| f.mul(c, &inv)).collect()
}

fn code(q: u64, c: &[u32]) -> usize {
    c.iter().rev().fold(0u64, |acc, &x| acc * q + x as u64) as usize
}

fn decode(q: u64, n: usize, mut i: u64) -> Vec<u32> {
    (0..=n)
        .map(|_| {
            let d = (i % q) as u32;
            i /= q;
            d
        })
        .collect()
}

/// Partition a list of monic forms of one degree into orbits.
fn partition(f: &Gf, n: usize, forms: Vec<Vec<u32>>) -> Vec<Orbit> {
    let q = f.q() as u64;
    let g = group(f);
    let mut seen = vec![false; q.pow(n as u32 + 1) as usize];
    let mut out = Vec::new();
    for p in forms {
        if seen[code(q, &p)] {
            continue;
        }
        let mut members = Vec::new();
        for m in &g {
            let img = act(f, m, &p);
            let k = code(q, &img);
            if !seen[k] {
                seen[k] = true;
                members.push(HomPoly(img));
            }
        }
        members.sort();
        let stabilizer_order = g.len() as u64 / members.len() as u64;
        out.push(Orbit { members, stabilizer_order });
    }
    out.sort_by(|a, b| a.least().cmp(b.least()));
    out
}

/// All monic forms of degree `n` (top nonzero coefficient one).
fn monic_forms(q: u64, n: usize) -> Vec<Vec<u32>> {
    (0..q.pow(n as u32 + 1))
        .map(|i| decode(q, n, i))
        .filter(|c| c.iter().rev().find(|&&x| x != 0) == Some(&1))
        .collect()
}

/// Monic irreducible forms of degree `n`: `y` when `n = 1`, otherwise the
/// forms with nonzero top coefficient that are not products of two monic
/// polynomials of positive degree.
fn irreducible_forms(f: &Gf, n: usize) -> Vec<Vec<u32>> {
    let q = f.q() as u64;
    let polys = |k: usize| -> Vec<Vec<u32>> {
        (0..q.pow(k as u32))
            .map(|i| {
                let mut c = decode(q, k - 1, i);
                c.push(1);
                c
            })
            .collect()
    };
    let mut reducible = vec![false; q.pow(n as u32) as usize];
    for a in 1..=n / 2 {
        let (pa, pb) = (polys(a), polys(n - a));
        for u in &pa {
            for v in &pb {
                let w = poly_mul(f, u, v);
                reducible[code(q, &w[..n])] = true;
            }
        }
    }
    let mut out: Vec<Vec<u32>> = (0..q.pow(n as u32))
        .filter(|&i| !reducible[i as usize])
        .map(|i| {
            let mut c = decode(q, n - 1, i);
            c.push(1);
            c
        })
        .collect();
    if n == 1 {
        out.push(vec![1, 0]);
    }
    out
}

fn check_budget(work: u128) -> Result<()> {
    if work > ORACLE_BUDGET as u128 {
        return Err(Error::ResourceLimit(format!("oracle work {work} exceeds {ORACLE_BUDGET}")));
    }
    Ok(())
}

/// Orbits of the degree-`n` places.
pub fn brute_force_place_orbits(q: u64, n: u32) -> Result<Vec<Orbit>> {
    check_budget((q as u128).pow(n + 3))?;
    let f = field(q)?;
    let forms = irreducible_forms(&f, n as usize);
    Ok(partition(&f, n as usize, forms))
}

/// Orbits of the effective divisors of degree `n`, each divisor given by
/// its monic form.
pub fn brute_force_divisor_orbits(q: u64, n: u32) -> Result<Vec<Orbit>> {
    check_budget((q as u128).pow(n + 1) * (q as u128).pow(3))?;
    let f = field(q)?;
    let forms = monic_forms(q, n as usize);
    Ok(partition(&f, n as usize, forms))
}

/// `|Stab(f)|` by testing every group element.
pub fn brute_force_stabilizer_order(q: u64, form: &HomPoly) -> Result<u64> {
    let f = field(q)?;
    let target = form.0.clone();
    let lead = *target.iter().rev().find(|&&c| c != 0).ok_or(Error::ZeroPolynomial)?;
    if lead != 1 {
        return Err(Error::InvalidArgument("form is not monic".into()));
    }
    Ok(group(&f).iter().filter(|m| act(&f, m, &target) == target).count() as u64)
}
