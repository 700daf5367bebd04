//! Frobenius functions of places of odd degree, maps with a prescribed
//! fixed-point divisor, and the degree-one case.

mod family;
mod ff1;
mod map;

pub use family::FixedPointFamily;
pub use ff1::ff1_representatives;
pub use map::{fixed_point_divisor, frobenius_function, is_frobenius_function_for, RationalMap};

use crate::ctx::Ctx;
use crate::error::Result;
use crate::{polyfactor, upoly};
use crate::projgeom::HomPoly;

/// How candidate places for a given map are located.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// Fixed points of `F^(n)`: the form `x H - y G` where `F^(n) = G/H`.
    Iterate,
    /// Roots of `x^q h(x, 1) - g(x, 1)`.
    Relation,
}

impl Route {
    /// The route expected to be faster. The iterate route factors only a
    /// gcd after one Frobenius power modulo a form of degree `r^n + 1`; the
    /// relation route runs distinct-degree splitting on degree `q + r`.
    pub fn cheaper(q: u32, r: usize, n: usize) -> Route {
        let iterate_degree = (r as f64).powi(n as i32) + 1.0;
        if iterate_degree <= 3.0 * (q as usize + r) as f64 {
            Route::Iterate
        } else {
            Route::Relation
        }
    }
}

/// Degree-`n` places whose Frobenius function is `m`, sorted.
pub fn places_with_frobenius_function(
    ctx: &Ctx,
    m: &RationalMap,
    n: usize,
    route: Route,
) -> Result<Vec<HomPoly>> {
    let f = ctx.f();
    let mut u = Vec::new();
    if route == Route::Relation {
        let q = ctx.q() as usize;
        let mut xh = vec![0u32; q];
        xh.extend_from_slice(&m.h.dehomogenize());
        u = upoly::sub(f, &xh, &m.g.dehomogenize());
    }
    if route == Route::Relation && u.is_empty() {
        // F = x^q/y^q: F(alpha) = alpha^q for every alpha, so every place of
        // degree n qualifies if F is small enough to be a Frobenius function
        if 2 * m.degree() + 1 > n {
            return Ok(vec![]);
        }
        let count = crate::enum_divisors::place_index_count(ctx.q(), n);
        return Ok((0..count).filter_map(|i| crate::enum_divisors::place_at(ctx, n, i)).collect());
    }
    if route == Route::Iterate {
        u = m.iterate(f, n).fixed_point_form(f).dehomogenize();
        // keep only the roots with alpha^q = F(alpha)
        let xq = upoly::frobenius_mod(f, &upoly::x(f), &u);
        let rel = upoly::sub(f, &upoly::mul(f, &xq, &m.h.dehomogenize()), &m.g.dehomogenize());
        let rel = upoly::rem(f, &rel, &u);
        if !rel.is_empty() {
            u = upoly::gcd(f, &u, &rel);
        }
    }
    let mut out = Vec::new();
    for fac in polyfactor::factors_of_degree(f, &u, n, ctx.seed) {
        let p = HomPoly::from_univariate(&fac, n);
        if is_frobenius_function_for(&ctx.field, m, &p)? {
            out.push(p);
        }
    }
    out.sort();
    Ok(out)
}

/// The maps of degree `deg D - 1` whose fixed-point divisor is `D`.
pub fn functions_with_fixed_divisor(
    f: &crate::gfield::Gf,
    d: &crate::projgeom::Divisor,
) -> Result<FixedPointFamily> {
    FixedPointFamily::new(f, d)
}

pub fn iterate_map(f: &crate::gfield::Gf, m: &RationalMap, n: usize) -> RationalMap {
    m.iterate(f, n)
}
