//! Counting the distinct codes produced by iterated doubling, and small
//! exhaustive confirmations of distinctness.

use num_bigint::BigUint;
use num_traits::One;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::ModularCode;
use crate::constructions::product::{lee_double, schedule_shape, PermutationPlan};
use crate::error::{Error, Limits, Result};
use crate::lattice::prime_factors;
use crate::verify::{self, Mode};

pub const FACTORIAL_CACHE_MAX: usize = 10_000;

/// `k!` for `k <= FACTORIAL_CACHE_MAX`, grown on demand.
#[derive(Debug, Clone)]
pub struct FactorialCache {
    table: Vec<BigUint>,
}

impl Default for FactorialCache {
    fn default() -> Self {
        FactorialCache {
            table: vec![BigUint::one()],
        }
    }
}

impl FactorialCache {
    pub fn get(&mut self, k: usize) -> Result<&BigUint> {
        if k > FACTORIAL_CACHE_MAX {
            return Err(Error::cap(
                "factorial",
                k as u64,
                FACTORIAL_CACHE_MAX as u64,
            ));
        }
        while self.table.len() <= k {
            let next = self.table.last().expect("0! is present") * BigUint::from(self.table.len());
            self.table.push(next);
        }
        Ok(&self.table[k])
    }
}

fn check_rp(r: u32, p: u64) -> Result<()> {
    if r == 0 {
        return Err(Error::param("r must be at least 1"));
    }
    if p < 3 || prime_factors(p) != [p] {
        return Err(Error::param(format!("p = {p} must be an odd prime")));
    }
    Ok(())
}

/// `∏_{i=1}^{r} ((2^i p - 1)!)^{2^{r-i}}`: the number of distinct diameter
/// perfect codes of length `2^r p` over `Z_{4p}` reachable by doubling
/// `Λ(G_p)` quotients.
pub fn count_distinct_diameter_perfect(r: u32, p: u64) -> Result<BigUint> {
    check_rp(r, p)?;
    let mut cache = FactorialCache::default();
    let mut total = BigUint::one();
    for i in 1..=r {
        let k = usize::try_from(p << i).map_err(|_| Error::Overflow("2^i p"))? - 1;
        total *= cache.get(k)?.pow(1u32 << (r - i));
    }
    Ok(total)
}

/// Same count, obtained by walking the doubling tree: a level-`i` code has
/// two independently chosen level-`(i-1)` halves and one permutation of its
/// `2^i p` even translates that fixes the first.
pub fn count_by_tree(r: u32, p: u64) -> Result<BigUint> {
    check_rp(r, p)?;
    let mut cache = FactorialCache::default();
    let mut per_code = BigUint::one();
    for (_, size) in schedule_shape(p as usize, r as usize) {
        per_code = &per_code * &per_code * cache.get(size - 1)?;
    }
    Ok(per_code)
}

#[derive(Debug, Clone, Serialize)]
pub struct EnumerationReport {
    #[serde(skip)]
    pub codes: Vec<ModularCode>,
    pub distinct: usize,
    pub examined: usize,
    pub total_permutations: String,
    pub truncated: bool,
    pub all_verified: bool,
}

/// Applies `lee_double(c1, c2, π)` for up to `limit` permutations `π` fixing
/// the first translate, in lexicographic order, and returns the distinct
/// codeword sets in canonical order.
pub fn enumerate_doubled_codes(
    c1: &ModularCode,
    c2: &ModularCode,
    limit: usize,
    limits: &Limits,
) -> Result<EnumerationReport> {
    let size = 2 * c1.n();
    let mut cache = FactorialCache::default();
    let total = cache.get(size - 1)?.clone();
    let plans: Vec<PermutationPlan> = PermutationPlan::all_fixing_first(size)
        .take(limit)
        .collect();
    let examined = plans.len();
    let mut codes = plans
        .par_iter()
        .map(|pi| {
            let code = lee_double(c1, c2, pi, limits)?;
            let ok = verify::is_diameter_perfect(&code, 4, Mode::Formula, limits)?.pass;
            Ok((code, ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let all_verified = codes.iter().all(|(_, ok)| *ok);
    codes.sort_by(|a, b| a.0.packed().cmp(b.0.packed()));
    codes.dedup_by(|a, b| a.0 == b.0);
    let codes: Vec<ModularCode> = codes.into_iter().map(|(c, _)| c).collect();
    Ok(EnumerationReport {
        distinct: codes.len(),
        codes,
        examined,
        truncated: BigUint::from(examined) < total,
        total_permutations: total.to_string(),
        all_verified,
    })
}
