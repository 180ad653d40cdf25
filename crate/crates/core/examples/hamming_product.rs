//! Hamming codes over small fields, the q-ary block product, and the
//! binary doubling of a perfect code.

use perfect_lee::constructions::base::{hamming_code, HammingCode};
use perfect_lee::constructions::field::FieldTable;
use perfect_lee::constructions::product::{phelps_double, qary_product};
use perfect_lee::error::Limits;
use perfect_lee::verify::{is_perfect, local_cover_check, sample_points, Mode};

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    for (q, r) in [(2, 3), (3, 2), (4, 2), (5, 2)] {
        let code = hamming_code(q, r, &limits)?;
        let cert = is_perfect(&code, 1, Mode::Auto, &limits)?;
        println!(
            "Hamming q={q} r={r}: n={}, {} words, perfect={}",
            code.n(),
            code.len(),
            cert.pass
        );
    }

    // Inner binary Hamming code of length 3, outer Hamming code of length 5
    // over GF(4): a binary perfect code of length 3 * 5 = 15.
    let inner = hamming_code(2, 2, &limits)?;
    let outer = HammingCode::new(FieldTable::new(4)?, 2)?;
    let product = qary_product(&inner, outer, &limits)?;
    let code = product.materialize(&limits)?;
    let cert = is_perfect(&code, 1, Mode::Exhaustive, &limits)?;
    println!(
        "q-ary product: length {}, {} words, perfect={}",
        code.n(),
        code.len(),
        cert.pass
    );

    let doubled = phelps_double(&hamming_code(2, 3, &limits)?, &limits)?;
    let cert = is_perfect(&doubled, 1, Mode::Exhaustive, &limits)?;
    println!(
        "doubled Hamming(7,4): length {}, {} words, perfect={}, linear={}",
        doubled.n(),
        doubled.len(),
        cert.pass,
        doubled.is_linear()
    );

    // A product too large to list, checked through its membership oracle.
    let inner = hamming_code(2, 2, &limits)?;
    let outer = HammingCode::new(FieldTable::new(4)?, 3)?;
    let big = qary_product(&inner, outer, &limits)?;
    let points = sample_points(big.len(), 2, 2000, 11);
    let cert = local_cover_check(&big, &points, 1, Some(11))?;
    println!(
        "length {} product with 2^{} words: {} sampled points, pass={}",
        big.len(),
        big.size().bits() - 1,
        cert.points_checked,
        cert.pass
    );
    Ok(())
}
