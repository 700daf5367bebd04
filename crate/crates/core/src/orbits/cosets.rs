//! `F_{q^2}` over `F_q`, coset representatives of `PGL_2(F_q)` in
//! `PGL_2(F_{q^2})`, and orbit labels separating the cosets.

use crate::error::{Error, Result};
use crate::gfield::{Field, Gf};
use crate::projgeom::{HomPoly, Mat2, ProjPoint};
use crate::{polyfactor, upoly};
use std::sync::Arc;

type Pt = ProjPoint<u32>;

/// `F_{q^2}` as a table field together with its subfield `F_q`.
#[derive(Clone, Debug)]
pub struct QuadExt {
    pub small: Arc<Gf>,
    pub big: Arc<Gf>,
    embed: Vec<u32>,
    restrict: Vec<u32>,
    omega: u32,
    omega_q: u32,
}

const NOT_RATIONAL: u32 = u32::MAX;

impl QuadExt {
    pub fn new(small: Arc<Gf>) -> Result<Self> {
        let big = Arc::new(Gf::new(small.p(), 2 * small.k())?);
        let q = small.q();
        // image of the generator t of F_q over F_p: the smallest root in F_{q^2}
        // of the defining polynomial of F_q
        let embed = if small.k() == 1 {
            (0..q).collect::<Vec<u32>>()
        } else {
            let m: Vec<u32> = small.modulus().to_vec();
            let r = polyfactor::roots(big.as_ref(), &m, 1)
                .into_iter()
                .next()
                .ok_or_else(|| Error::InvalidArgument("no subfield embedding".into()))?;
            (0..q)
                .map(|c| {
                    let d = small.digits(c);
                    upoly::eval(big.as_ref(), &d, &r)
                })
                .collect()
        };
        let mut restrict = vec![NOT_RATIONAL; big.q() as usize];
        for (c, &e) in embed.iter().enumerate() {
            restrict[e as usize] = c as u32;
        }
        let omega = (0..big.q()).find(|&x| restrict[x as usize] == NOT_RATIONAL).expect("q^2 > q");
        let omega_q = big.pow(&omega, q as u128);
        Ok(QuadExt { small, big, embed, restrict, omega, omega_q })
    }

    pub fn q(&self) -> u32 {
        self.small.q()
    }
    pub fn omega(&self) -> u32 {
        self.omega
    }
    pub fn generator(&self) -> u32 {
        self.big.generator()
    }

    pub fn embed(&self, c: u32) -> u32 {
        self.embed[c as usize]
    }

    /// The `F_q` element, if `x` lies in the subfield.
    pub fn restrict(&self, x: u32) -> Option<u32> {
        let r = self.restrict[x as usize];
        (r != NOT_RATIONAL).then_some(r)
    }

    pub fn is_rational(&self, x: u32) -> bool {
        self.restrict[x as usize] != NOT_RATIONAL
    }

    pub fn conj(&self, x: u32) -> u32 {
        self.big.frobenius_p(x, self.small.k())
    }

    pub fn norm(&self, x: u32) -> u32 {
        self.restrict(self.big.mul(&x, &self.conj(x))).expect("norm is rational")
    }

    /// `(c, d)` in `F_q` with `x = c omega + d`.
    pub fn decompose(&self, x: u32) -> (u32, u32) {
        let b = self.big.as_ref();
        let den = b.sub(&self.omega, &self.omega_q);
        let c = b.div(&b.sub(&x, &self.conj(x)), &den);
        let d = b.sub(&x, &b.mul(&c, &self.omega));
        (self.restrict(c).expect("rational"), self.restrict(d).expect("rational"))
    }

    pub fn embed_poly(&self, p: &HomPoly) -> HomPoly {
        p.map_coeffs(|c| self.embed(c))
    }

    /// The form over `F_q` if every coefficient is rational.
    pub fn restrict_poly(&self, p: &HomPoly) -> Option<HomPoly> {
        let c: Option<Vec<u32>> = p.0.iter().map(|&c| self.restrict(c)).collect();
        c.map(HomPoly)
    }

    pub fn conj_poly(&self, p: &HomPoly) -> HomPoly {
        p.map_coeffs(|c| self.conj(c))
    }

    pub fn conj_mat(&self, g: &Mat2<u32>) -> Mat2<u32> {
        g.map_entries(|&c| self.conj(c))
    }

    fn pt_rational(&self, p: &Pt) -> bool {
        match p {
            Pt::Inf => true,
            Pt::Fin(a) => self.is_rational(*a),
        }
    }

    fn b_point(&self, i: u32) -> Pt {
        let b = self.big.as_ref();
        let gi = b.pow(&self.generator(), i as u128);
        let num = b.add(&b.mul(&self.omega, &gi), &self.omega_q);
        let den = b.add(&gi, &1);
        Pt::from_coords(b, num, den)
    }

    /// The `q^3 + q` coset representatives, family by family.
    pub fn coset_reps(&self) -> CosetReps<'_> {
        CosetReps { ext: self, pos: 0 }
    }

    /// Number of coset representatives, `q^3 + q`.
    pub fn coset_count(&self) -> u64 {
        let q = self.q() as u64;
        q * q * q + q
    }

    /// The `i`-th coset representative.
    pub fn coset_rep(&self, i: u64) -> Option<Mat2<u32>> {
        let q = self.q() as u64;
        let q2 = q * q;
        let b = self.big.as_ref();
        let w = Pt::Fin(self.omega);
        let triple = |z: &Pt, e: &Pt, t: &Pt| Mat2::from_triple(b, z, e, t).expect("distinct");
        let mut i = i;
        if i == 0 {
            return Some(Mat2::identity(b));
        }
        i -= 1;
        if i < q {
            let t = b.add(&self.omega, &self.embed(i as u32));
            return Some(triple(&Pt::Inf, &Pt::Fin(0), &Pt::Fin(t)));
        }
        i -= q;
        if i < q2 - 1 {
            // theta ranges over F_{q^2} minus omega
            let mut t = i as u32;
            if t >= self.omega {
                t += 1;
            }
            return Some(triple(&Pt::Inf, &w, &Pt::Fin(t)));
        }
        i -= q2 - 1;
        if i < q - 1 {
            let theta = self.b_point(i as u32);
            return Some(triple(&w, &Pt::Fin(self.omega_q), &theta));
        }
        i -= q - 1;
        if i < (q - 1) * (q2 - 1) {
            let (ei, ti) = (i / (q2 - 1), i % (q2 - 1));
            let eta = self.b_point(ei as u32);
            // theta ranges over P^1(F_{q^2}) minus {omega, eta}
            let mut pts = (0..=q2).map(|k| if k == q2 { Pt::Inf } else { Pt::Fin(k as u32) });
            let theta = pts.nth_where(ti as usize, |p| *p != w && *p != eta);
            return Some(triple(&w, &eta, &theta));
        }
        None
    }

    /// The orbit label of an element of `PGL_2(F_{q^2})`.
    pub fn orbit_label(&self, g: &Mat2<u32>) -> [u32; 3] {
        let b = self.big.as_ref();
        let [z0, e0, t0] = g.triple(b);
        let (rz, re, rt) = (self.pt_rational(&z0), self.pt_rational(&e0), self.pt_rational(&t0));
        if rz && re && rt {
            return [0, 0, 1];
        }
        if rz {
            let to_inf = self.move_to_inf(&z0);
            if re {
                let e1 = to_inf.apply(b, &e0);
                let shift = match e1 {
                    Pt::Fin(a) => Mat2([1, b.neg(&a), 0, 1]),
                    Pt::Inf => unreachable!("distinct points"),
                };
                let m = shift.compose(b, &to_inf);
                let Pt::Fin(th) = m.apply(b, &t0) else { unreachable!("theta is not rational") };
                let (c, d) = self.decompose(th);
                let s = self.small.as_ref();
                return [0, 0, b.add(&self.omega, &self.embed(s.div(&d, &c)))];
            }
            let Pt::Fin(e1) = to_inf.apply(b, &e0) else { unreachable!("eta is not rational") };
            let m = self.affine_to_omega(e1).compose(b, &to_inf);
            let Pt::Fin(th) = m.apply(b, &t0) else { unreachable!("theta is finite") };
            return [0, self.omega, th];
        }
        let Pt::Fin(z) = z0 else { unreachable!("infinity is rational") };
        let m = self.affine_to_omega(z);
        let eta = m.apply(b, &e0);
        let theta = m.apply(b, &t0);
        if eta == Pt::Fin(self.omega_q) {
            return [1, 0, self.norm(self.phi(&theta))];
        }
        let pe = self.phi(&eta);
        [1, self.norm(pe), b.div(&self.phi(&theta), &pe)]
    }

    fn move_to_inf(&self, z: &Pt) -> Mat2<u32> {
        let b = self.big.as_ref();
        match z {
            Pt::Inf => Mat2::identity(b),
            Pt::Fin(a) => Mat2::new(b, 0, 1, 1, b.neg(a)).expect("invertible"),
        }
    }

    /// `x -> (x - d)/c` where `z = c omega + d`.
    fn affine_to_omega(&self, z: u32) -> Mat2<u32> {
        let b = self.big.as_ref();
        let (c, d) = self.decompose(z);
        Mat2::new(b, 1, b.neg(&self.embed(d)), 0, self.embed(c)).expect("c is nonzero")
    }

    fn phi(&self, z: &Pt) -> u32 {
        let b = self.big.as_ref();
        match z {
            Pt::Inf => b.neg(&1),
            Pt::Fin(x) => b.div(&b.sub(&self.omega_q, x), &b.sub(x, &self.omega)),
        }
    }
}

trait NthWhere: Iterator {
    fn nth_where(&mut self, n: usize, pred: impl Fn(&Self::Item) -> bool) -> Self::Item
    where
        Self: Sized,
    {
        self.filter(|x| pred(x)).nth(n).expect("index in range")
    }
}

impl<I: Iterator> NthWhere for I {}

/// Cursor over the coset representatives.
pub struct CosetReps<'a> {
    ext: &'a QuadExt,
    pos: u64,
}

impl Iterator for CosetReps<'_> {
    type Item = Mat2<u32>;
    fn next(&mut self) -> Option<Mat2<u32>> {
        let r = self.ext.coset_rep(self.pos)?;
        self.pos += 1;
        Some(r)
    }
}
