//! Sizes of Lee spheres and maximum anticodes in Z^n, counted by brute
//! force and compared with the closed forms.

use perfect_lee::error::Limits;
use perfect_lee::metrics::{
    anticode_size, enumerate_anticode, enumerate_sphere, hamming_sphere_size, lee_sphere_size,
    AnticodeSpec, Metric,
};
use perfect_lee::word::Word;

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    println!(" n  R  |S_n,R|  enumerated  |S'_n,R|  enumerated");
    for n in 1..=4usize {
        let origin = Word::unbounded(vec![0; n])?;
        for r in 0..=4u64 {
            let ball = enumerate_sphere(&origin, r, Metric::Manhattan, &limits)?;
            let anti = enumerate_anticode(&AnticodeSpec::odd(n, r), &origin, &limits)?;
            println!(
                "{n:2} {r:2}  {:>7}  {:>10}  {:>8}  {:>10}",
                lee_sphere_size(n as u64, r),
                ball.len(),
                anticode_size(n as u64, r),
                anti.len()
            );
        }
    }

    // The two-dimensional odd anticode of radius 2 (diameter 5).
    let anti = enumerate_anticode(
        &AnticodeSpec::odd(2, 2),
        &Word::unbounded(vec![0, 0])?,
        &limits,
    )?;
    for y in (-2..=2).rev() {
        let row: String = (-2..=3)
            .map(|x| {
                if anti.iter().any(|w| w.coords() == [x, y]) {
                    '#'
                } else {
                    '.'
                }
            })
            .collect();
        println!("{row}");
    }

    println!(
        "binary Hamming sphere, n=7, R=1: {}",
        hamming_sphere_size(7, 1, 2)?
    );
    Ok(())
}
