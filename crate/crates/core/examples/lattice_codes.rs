//! Lattice codes: Hermite normal form, volume, period, minimum Manhattan
//! distance and the quotient code over Z_m^n.

use perfect_lee::constructions::base::{diameter4_lattice, minkowski_code};
use perfect_lee::error::Limits;
use perfect_lee::lattice::Lattice;
use perfect_lee::verify::{is_diameter_perfect, Mode};

fn show(name: &str, lattice: &Lattice, d: u64, limits: &Limits) -> perfect_lee::error::Result<()> {
    let code = lattice.reduce_to_modular(limits)?;
    let params = code.parameters(limits)?;
    println!(
        "{name}: (n, d, v, m) = ({}, {}, {}, {})",
        params.n, params.d, params.v, params.m
    );
    for row in lattice.hermite_form() {
        println!("  {row:?}");
    }
    let cert = is_diameter_perfect(&code.quotient, d, Mode::Formula, limits)?;
    println!(
        "  {} codewords over Z_{}; diameter perfect for d={d}: {} (anticode size {})",
        code.size(),
        code.period,
        cert.pass,
        cert.shape_size.unwrap_or_default()
    );
    Ok(())
}

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    for n in [2, 3, 6] {
        show(&format!("G_{n}"), &diameter4_lattice(n)?, 4, &limits)?;
    }
    show("Minkowski", &minkowski_code(), 6, &limits)?;

    let g = diameter4_lattice(3)?;
    for x in [[3, 5, 0], [1, 0, 3], [1, 1, 1]] {
        println!(
            "{x:?} in G_3: {}, coset leader {:?}",
            g.contains(&x),
            g.coset_representative(&x)
        );
    }
    Ok(())
}
