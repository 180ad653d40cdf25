//! Perfect Lee codes: the two-dimensional lattice codes of any radius and
//! the radius-1 codes of any length.

use perfect_lee::constructions::base::{golomb_welch_2d, lee_single_error_code};
use perfect_lee::error::Limits;
use perfect_lee::metrics::lee_sphere_size;
use perfect_lee::verify::{is_perfect, Mode};

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    for r in 1..=4 {
        let code = golomb_welch_2d(r, &limits)?;
        let cert = is_perfect(&code.quotient, r, Mode::Exhaustive, &limits)?;
        println!(
            "R={r}: basis {:?}, Z_{}, {} codewords, perfect={} ({} points checked)",
            code.lattice.rows(),
            code.period,
            code.size(),
            cert.pass,
            cert.points_checked
        );
    }

    // The R=2 code over Z_13, codewords marked 'o'.
    let code = golomb_welch_2d(2, &limits)?.quotient;
    for y in (0..13).rev() {
        let row: String = (0..13)
            .map(|x| {
                if code.word_set().contains(&[x, y]) {
                    'o'
                } else {
                    '.'
                }
            })
            .collect();
        println!("  {row}");
    }

    for n in 2..=5 {
        let code = lee_single_error_code(n, 1, &limits)?;
        let cert = is_perfect(&code, 1, Mode::Exhaustive, &limits)?;
        println!(
            "n={n}: Z_{}, {} codewords x sphere {} = {}, perfect={}",
            code.m(),
            code.len(),
            lee_sphere_size(n as u64, 1),
            cert.space_size,
            cert.pass
        );
    }
    Ok(())
}
