use p1orbits::enum_divisors::divisors_up_to_pgl2;
use p1orbits::enum_places::places_up_to_pgl2;
use p1orbits::oracle::{brute_force_stabilizer_order, counting_formulas};
use p1orbits::Ctx;

#[test]
fn place_mass_formula() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 4..=7usize {
            let t = std::time::Instant::now();
            let ctx = Ctx::new(q, n, 1).unwrap();
            let reps = places_up_to_pgl2(&ctx, n).unwrap();
            let te = t.elapsed();
            let g = q * q * q - q;
            let mass: u64 = reps.iter().map(|f| g / brute_force_stabilizer_order(q, f).unwrap()).sum();
            eprintln!("q={q} n={n}: {} reps enum {:?} total {:?}", reps.len(), te, t.elapsed());
            assert_eq!(mass, counting_formulas(q, n as u32).places, "q={q} n={n}");
        }
    }
}

#[test]
fn divisor_mass_formula() {
    for q in [2u64, 3, 4, 5, 7] {
        for n in 1..=5usize {
            let ctx = Ctx::new(q, n, 1).unwrap();
            let reps = divisors_up_to_pgl2(&ctx, n).unwrap();
            let g = q * q * q - q;
            let mass: u64 = reps.iter().map(|f| g / brute_force_stabilizer_order(q, f).unwrap()).sum();
            assert_eq!(mass, counting_formulas(q, n as u32).divisors, "q={q} n={n}");
        }
    }
}
