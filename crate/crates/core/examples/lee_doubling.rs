//! Doubling distance-4 diameter perfect Lee codes: two length-n codes and a
//! permutation of their 2n even translates give a length-2n code.

use perfect_lee::codes::{even_translates, ModularCode};
use perfect_lee::constructions::base::{diameter4_lattice, seed_2484};
use perfect_lee::constructions::product::{
    identity_schedule, iterate_lee_double, lee_double, PermutationPlan,
};
use perfect_lee::error::Limits;
use perfect_lee::verify::{is_diameter_perfect, Mode};

fn report(name: &str, code: &ModularCode, limits: &Limits) -> perfect_lee::error::Result<()> {
    let cert = is_diameter_perfect(code, 4, Mode::Auto, limits)?;
    println!(
        "{name}: n={} m={} size={} min_distance={:?} pass={} (cover checked: {:?})",
        code.n(),
        code.m(),
        code.len(),
        cert.min_distance,
        cert.pass,
        cert.cover_checked
    );
    Ok(())
}

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    let seed = seed_2484(&limits)?;
    let family = even_translates(&seed)?;
    println!("even translates of {seed}:");
    for (v, t) in family.vectors().iter().zip(0..) {
        println!("  {:?} -> {} words", v.coords(), family.translate(t).len());
    }

    for pi in PermutationPlan::all_fixing_first(4) {
        let code = lee_double(&seed, &seed, &pi, &limits)?;
        report(&format!("pi={:?}", pi.to_one_based()), &code, &limits)?;
    }

    let code = iterate_lee_double(&seed, &identity_schedule(2, 2), &limits)?;
    report("two levels", &code, &limits)?;

    let g3 = diameter4_lattice(3)?.reduce_to_modular(&limits)?.quotient;
    let doubled = lee_double(&g3, &g3, &PermutationPlan::identity(6), &limits)?;
    report("G_3 doubled", &doubled, &limits)?;
    Ok(())
}
