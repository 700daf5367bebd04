use crate::gfield::Gf;
use crate::projgeom::{Mat2, Pgl2};

/// All `q^3 - q` elements of `PGL_2(F_q)` in canonical form: first the
/// matrices `[[1, b], [c, d]]` with `d != bc`, then `[[0, 1], [c, d]]` with
/// `c != 0`.
pub fn enumerate_group(f: &Gf) -> impl Iterator<Item = Pgl2> + '_ {
    let q = f.q();
    let top = (0..q).flat_map(move |b| {
        (0..q).flat_map(move |c| {
            (0..q).filter_map(move |d| Pgl2::new(f, 1, b, c, d))
        })
    });
    let bottom = (1..q).flat_map(move |c| (0..q).map(move |d| Mat2([0, 1, c, d])));
    top.chain(bottom)
}
