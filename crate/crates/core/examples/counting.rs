//! How many distinct diameter perfect codes iterated doubling produces.

use perfect_lee::constructions::base::{diameter4_lattice, seed_2484};
use perfect_lee::enumeration::{
    count_by_tree, count_distinct_diameter_perfect, enumerate_doubled_codes,
};
use perfect_lee::error::Limits;

fn main() -> perfect_lee::error::Result<()> {
    let limits = Limits::default();
    for (r, p) in [(1, 3), (2, 3), (1, 5), (3, 3)] {
        let count = count_distinct_diameter_perfect(r, p)?;
        assert_eq!(count, count_by_tree(r, p)?);
        println!(
            "length {} over Z_{}: {} codes ({} digits)",
            (1 << r) * p,
            4 * p,
            count,
            count.to_string().len()
        );
    }

    let seed = seed_2484(&limits)?;
    let rep = enumerate_doubled_codes(&seed, &seed, usize::MAX, &limits)?;
    println!(
        "(2,4,8,4) seeds: {} permutations, {} distinct codes, all verified={}",
        rep.examined, rep.distinct, rep.all_verified
    );

    let g3 = diameter4_lattice(3)?.reduce_to_modular(&limits)?.quotient;
    let rep = enumerate_doubled_codes(&g3, &g3, 24, &limits)?;
    println!(
        "G_3 seeds: first {} of {} permutations give {} distinct codes (truncated={})",
        rep.examined, rep.total_permutations, rep.distinct, rep.truncated
    );
    Ok(())
}
