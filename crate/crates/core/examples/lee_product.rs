//! Perfect single-error-correcting Lee codes built from an inner perfect
//! Lee code and an outer Hamming code over GF(2n+1).

use perfect_lee::constructions::base::{lee_single_error_code, HammingCode};
use perfect_lee::constructions::field::FieldTable;
use perfect_lee::constructions::product::{lee_product, PermutationPlan};
use perfect_lee::error::Limits;
use perfect_lee::verify::{is_perfect, local_cover_check, sample_points, Mode};

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();

    // q = 3: the inner code is {0} in Z_3, the outer code is the ternary
    // Hamming code of length 4.
    let inner = lee_single_error_code(1, 1, &limits)?;
    let outer = HammingCode::new(FieldTable::new(3)?, 2)?;
    for perms in [
        vec![PermutationPlan::identity(3); 4],
        vec![
            PermutationPlan::identity(3),
            PermutationPlan::transposition(3, 1, 2)?,
            PermutationPlan::identity(3),
            PermutationPlan::identity(3),
        ],
    ] {
        let product = lee_product(&inner, outer.clone(), perms, &limits)?;
        let code = product.materialize(&limits)?;
        let cert = is_perfect(&code, 1, Mode::Exhaustive, &limits)?;
        println!("q=3: {code} perfect={}", cert.pass);
    }

    // q = 5: inner perfect code of length 2 over Z_5, outer Hamming code of
    // length 6 over GF(5); 5^12 points are sampled rather than enumerated.
    let inner = lee_single_error_code(2, 1, &limits)?;
    let outer = HammingCode::new(FieldTable::new(5)?, 2)?;
    let product = lee_product(
        &inner,
        outer,
        vec![PermutationPlan::identity(5); 6],
        &limits,
    )?;
    let points = sample_points(product.len(), 5, 10_000, 2024);
    let cert = local_cover_check(&product, &points, 1, Some(2024))?;
    println!(
        "q=5: length {}, {} codewords, {} sampled balls, pass={}",
        product.len(),
        product.size(),
        cert.points_checked,
        cert.pass
    );
    Ok(())
}
