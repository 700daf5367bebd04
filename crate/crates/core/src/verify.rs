//! Checks of the enumerators against the brute-force oracle, the mass
//! formulas and the coset machinery. Each check returns a report listing
//! the mismatches found; resource refusals come back as errors.

use crate::enum_divisors::divisors_up_to_pgl2;
use crate::enum_places::places_up_to_pgl2;
use crate::error::Result;
use crate::gfield::Gf;
use crate::oracle::{
    brute_force_divisor_orbits, brute_force_place_orbits, brute_force_stabilizer_order,
    counting_formulas, Orbit,
};
use crate::orbits::{enumerate_group, QuadExt};
use crate::projgeom::{HomPoly, Mat2};
use crate::Ctx;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

/// Grid of the place oracle check.
pub const PLACE_ORACLE_GRID: &[(u64, u32)] = &[
    (2, 3), (2, 4), (2, 5), (2, 6), (2, 7),
    (3, 3), (3, 4), (3, 5), (3, 6), (3, 7),
    (4, 4), (4, 5), (4, 6),
    (5, 4), (5, 5), (5, 6),
    (7, 4), (7, 5),
];
pub const DIVISOR_ORACLE_QS: &[u64] = &[2, 3, 4, 5];
pub const DIVISOR_ORACLE_NS: &[u32] = &[3, 4, 5];
pub const PLACE_MASS_QS: &[u64] = &[2, 3, 4, 5, 7, 8, 9];
pub const PLACE_MASS_NS: &[u32] = &[4, 5, 6, 7];
pub const DIVISOR_MASS_QS: &[u64] = &[2, 3, 4, 5, 7];
pub const DIVISOR_MASS_NS: &[u32] = &[1, 2, 3, 4, 5];
pub const COSET_QS: &[u64] = &[2, 3, 4, 5, 7, 8, 9];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Places,
    Divisors,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Places => "places",
            Kind::Divisors => "divisors",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub name: String,
    /// One line per disagreement.
    pub mismatches: Vec<String>,
    pub summary: String,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "ok" } else { "MISMATCH" };
        write!(f, "{} {}: {}", status, self.name, self.summary)?;
        for m in &self.mismatches {
            write!(f, "\n  {m}")?;
        }
        Ok(())
    }
}

/// The enumerated representatives, using a context built with `seed`.
pub fn representatives(kind: Kind, q: u64, n: u32, seed: u64) -> Result<Vec<HomPoly>> {
    let ctx = Ctx::new(q, n as usize, seed)?;
    match kind {
        Kind::Places => places_up_to_pgl2(&ctx, n as usize),
        Kind::Divisors => divisors_up_to_pgl2(&ctx, n as usize),
    }
}

/// Disagreements between `reps` and the orbit partition `orbits`.
pub fn orbit_hits(orbits: &[Orbit], reps: &[HomPoly]) -> Vec<String> {
    let index: HashMap<&HomPoly, usize> =
        orbits.iter().enumerate().flat_map(|(k, o)| o.members.iter().map(move |m| (m, k))).collect();
    let mut hits: Vec<Vec<&HomPoly>> = vec![Vec::new(); orbits.len()];
    let mut out = Vec::new();
    for r in reps {
        match index.get(r) {
            Some(&k) => hits[k].push(r),
            None => out.push(format!("+ {:?} lies in no orbit", r.0)),
        }
    }
    for (o, h) in orbits.iter().zip(&hits) {
        match h.len() {
            1 => {}
            0 => out.push(format!("- orbit of {:?} (size {}) missed", o.least().0, o.members.len())),
            k => out.push(format!(
                "* orbit of {:?} hit {k} times: {:?}",
                o.least().0,
                h.iter().map(|p| &p.0).collect::<Vec<_>>()
            )),
        }
    }
    out
}

pub fn oracle_check(kind: Kind, q: u64, n: u32, seed: u64) -> Result<Report> {
    let orbits = match kind {
        Kind::Places => brute_force_place_orbits(q, n)?,
        Kind::Divisors => brute_force_divisor_orbits(q, n)?,
    };
    let reps = representatives(kind, q, n, seed)?;
    Ok(Report {
        name: format!("oracle {kind} q={q} n={n}"),
        mismatches: orbit_hits(&orbits, &reps),
        summary: format!("{} representatives, {} orbits", reps.len(), orbits.len()),
    })
}

/// Sum of `|G| / |Stab|` over the representatives against the total count.
pub fn mass_check(kind: Kind, q: u64, n: u32, seed: u64) -> Result<Report> {
    let reps = representatives(kind, q, n, seed)?;
    let g = q * q * q - q;
    let mut mass = 0u64;
    for r in &reps {
        mass += g / brute_force_stabilizer_order(q, r)?;
    }
    let c = counting_formulas(q, n);
    let expected = match kind {
        Kind::Places => c.places,
        Kind::Divisors => c.divisors,
    };
    let mismatches =
        if mass == expected { vec![] } else { vec![format!("mass {mass}, formula {expected}")] };
    Ok(Report {
        name: format!("mass {kind} q={q} n={n}"),
        mismatches,
        summary: format!("{} representatives, mass {mass}", reps.len()),
    })
}

fn is_rational(ext: &QuadExt, m: &Mat2<u32>) -> bool {
    m.entries().iter().all(|&c| ext.is_rational(c))
}

/// Coset representatives of `PGL_2(F_q)` in `PGL_2(F_{q^2})`: count and
/// distinct labels, label invariance under `samples` random left
/// multiplications and, if `exhaustive`, that every element of the big
/// group shares its label exactly with the representative of its coset.
pub fn coset_check(q: u64, samples: usize, exhaustive: bool, seed: u64) -> Result<Report> {
    let ctx = Ctx::new(q, 1, seed)?;
    let ext = QuadExt::new(Arc::clone(&ctx.field))?;
    let big: &Gf = ext.big.as_ref();
    let mut mismatches = Vec::new();
    let reps: Vec<Mat2<u32>> = ext.coset_reps().collect();
    if reps.len() as u64 != q * q * q + q {
        mismatches.push(format!("{} representatives, expected {}", reps.len(), q * q * q + q));
    }
    let mut by_label: BTreeMap<[u32; 3], usize> = BTreeMap::new();
    for (i, g) in reps.iter().enumerate() {
        if let Some(j) = by_label.insert(ext.orbit_label(g), i) {
            mismatches.push(format!("representatives {j} and {i} share a label"));
        }
    }
    let small: Vec<Mat2<u32>> = enumerate_group(ctx.f()).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let h = small[rng.gen_range(0..small.len())].map_entries(|&c| ext.embed(c));
        let g = &reps[rng.gen_range(0..reps.len())];
        if ext.orbit_label(&h.compose(big, g)) != ext.orbit_label(g) {
            mismatches.push(format!("label of {:?} changes under {:?}", g.entries(), h.entries()));
        }
    }
    let mut checked = 0u64;
    if exhaustive {
        for g in enumerate_group(big) {
            checked += 1;
            match by_label.get(&ext.orbit_label(&g)) {
                None => mismatches.push(format!("{:?} has a label outside the list", g.entries())),
                Some(&i) => {
                    if !is_rational(&ext, &g.compose(big, &reps[i].inverse(big))) {
                        mismatches.push(format!("{:?} labelled like a foreign coset", g.entries()));
                    }
                }
            }
            if mismatches.len() > 20 {
                break;
            }
        }
    }
    Ok(Report {
        name: format!("cosets q={q}"),
        mismatches,
        summary: format!(
            "{} representatives, {samples} random translates, {checked} elements separated",
            reps.len()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_checks_pass() {
        assert!(oracle_check(Kind::Places, 2, 3, 1).unwrap().passed());
        assert!(oracle_check(Kind::Divisors, 3, 3, 1).unwrap().passed());
        assert!(mass_check(Kind::Places, 3, 4, 1).unwrap().passed());
        assert!(coset_check(2, 20, true, 1).unwrap().passed());
    }

    #[test]
    fn hits_report_missing_and_extra() {
        let orbits = brute_force_place_orbits(2, 3).unwrap();
        assert_eq!(orbit_hits(&orbits, &[]).len(), 1);
        let two = vec![orbits[0].members[0].clone(), orbits[0].members[1].clone()];
        assert_eq!(orbit_hits(&orbits, &two).len(), 1);
        assert_eq!(orbit_hits(&orbits, &[HomPoly(vec![0, 0, 0, 1])]).len(), 2);
    }
}
