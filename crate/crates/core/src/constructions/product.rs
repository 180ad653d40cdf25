//! Product and doubling constructions: binary doubling with and without a
//! permutation, the block product of a perfect inner code with a perfect
//! outer code (Hamming and Lee variants), and the Lee doubling of two
//! distance-4 diameter perfect codes.

use num_bigint::BigUint;
use rayon::prelude::*;

use super::base::HammingCode;
use crate::codes::{
    even_translates, extend_binary, unit_translate_family, Membership, ModularCode, TranslateFamily,
};
use crate::error::{Error, Limits, Result};
use crate::metrics::Metric;
use crate::tilings::CenterSet;
use crate::verify::{self, Mode};
use crate::word::Space;

/// A permutation of `0..size` that fixes 0.
///
/// Serialized files and user-facing text use 1-based indices, where the
/// fixed point is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationPlan {
    map: Vec<usize>,
    inverse: Vec<usize>,
}

impl PermutationPlan {
    pub fn new(map: Vec<usize>) -> Result<Self> {
        if map.is_empty() {
            return Err(Error::param("a permutation needs size >= 1"));
        }
        let mut inverse = vec![usize::MAX; map.len()];
        for (i, &v) in map.iter().enumerate() {
            if v >= map.len() || inverse[v] != usize::MAX {
                return Err(Error::param(format!(
                    "{:?} is not a bijection",
                    one_based(&map)
                )));
            }
            inverse[v] = i;
        }
        if map[0] != 0 {
            return Err(Error::param(format!(
                "permutation must fix the first index (map[0] = 1), got map[0] = {}",
                map[0] + 1
            )));
        }
        Ok(PermutationPlan { map, inverse })
    }

    pub fn from_one_based(size: usize, map: &[u64]) -> Result<Self> {
        if map.len() != size {
            return Err(Error::param(format!(
                "permutation declares size {size} but lists {} entries",
                map.len()
            )));
        }
        let map = map
            .iter()
            .map(|&v| {
                v.checked_sub(1)
                    .map(|v| v as usize)
                    .ok_or_else(|| Error::param("permutation entries are 1-based"))
            })
            .collect::<Result<Vec<_>>>()?;
        PermutationPlan::new(map)
    }

    pub fn identity(size: usize) -> Self {
        PermutationPlan::new((0..size).collect()).expect("identity is a valid plan")
    }

    /// Swaps the 0-based indices `a` and `b`, neither of which may be 0.
    pub fn transposition(size: usize, a: usize, b: usize) -> Result<Self> {
        let mut map: Vec<usize> = (0..size).collect();
        if a >= size || b >= size {
            return Err(Error::param("transposition index out of range"));
        }
        map.swap(a, b);
        PermutationPlan::new(map)
    }

    /// Every plan of the given size, in lexicographic order (identity first).
    pub fn all_fixing_first(size: usize) -> impl Iterator<Item = PermutationPlan> {
        use itertools::Itertools;
        (1..size).permutations(size.saturating_sub(1)).map(|tail| {
            let mut map = Vec::with_capacity(tail.len() + 1);
            map.push(0);
            map.extend(tail);
            PermutationPlan::new(map).expect("tail permutation fixes 0")
        })
    }

    pub fn size(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn invert(&self, k: usize) -> usize {
        self.inverse[k]
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn to_one_based(&self) -> Vec<u64> {
        one_based(&self.map)
    }
}

fn one_based(map: &[usize]) -> Vec<u64> {
    map.iter().map(|&v| v as u64 + 1).collect()
}

/// Concatenations `(x, y)` with `x` in translate `i` of the first family and
/// `y` in translate `pair(i)` of the second.
fn paired_words(
    first: &[Vec<u64>],
    second: &[Vec<u64>],
    second_space: Space,
    pair: impl Fn(usize) -> usize + Sync,
) -> Vec<u64> {
    let shift = second_space.size();
    let mut words: Vec<u64> = (0..first.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let ys = &second[pair(i)];
            first[i]
                .iter()
                .flat_map(move |&x| ys.iter().map(move |&y| x * shift + y))
        })
        .collect();
    words.par_sort_unstable();
    words
}

fn check_binary_perfect(code: &ModularCode, limits: &Limits) -> Result<usize> {
    let n = code.n();
    if code.m() != 2 || code.metric() != Metric::Hamming {
        return Err(Error::param(
            "doubling needs a binary code in the Hamming metric",
        ));
    }
    if !(n + 1).is_power_of_two() || n < 1 {
        return Err(Error::param(format!(
            "length {n} is not of the form 2^r - 1"
        )));
    }
    if !verify::is_perfect(code, 1, Mode::Formula, limits)?.pass {
        return Err(Error::Structural("input code is not perfect".into()));
    }
    Ok(n)
}

/// The translates `C^i` (unit vectors, `C` first) and the matching even
/// translates `C_e^i` of the extension, ordered so that `C_e^i` is the
/// extension of `C^i`.
fn doubling_families(
    code: &ModularCode,
    limits: &Limits,
) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>)> {
    let n = code.n();
    let family = unit_translate_family(code, limits)?;
    let extended = extend_binary(code)?;
    let ext_space = extended.space();
    let plain: Vec<Vec<u64>> = (0..family.len())
        .map(|i| family.translate(i).packed().to_vec())
        .collect();
    let even: Vec<Vec<u64>> = (0..family.len())
        .map(|i| {
            let mut v = vec![0i64; n + 1];
            if i > 0 {
                v[i - 1] = 1;
                v[n] = 1;
            }
            let mut t = extended.word_set().translated_packed(&v);
            t.sort_unstable();
            t
        })
        .collect();
    debug_assert!(even
        .iter()
        .all(|t| t.iter().all(|&w| w.count_ones() % 2 == 0)));
    debug_assert_eq!(ext_space.n(), n + 1);
    Ok((plain, even))
}

/// `{(x, y) : x ∈ C_e^i, y ∈ C^i}`, a perfect code of length `2n + 1`.
pub fn phelps_double(code: &ModularCode, limits: &Limits) -> Result<ModularCode> {
    let n = check_binary_perfect(code, limits)?;
    let (plain, even) = doubling_families(code, limits)?;
    let space = Space::new(2 * n + 1, 2)?;
    limits.check("doubled code", (code.len() * code.len() * (n + 1)) as u64)?;
    let words = paired_words(&even, &plain, code.space(), |i| i);
    ModularCode::from_packed(space, Metric::Hamming, words)
}

/// `{(x, y) : x ∈ B_e^i, y ∈ C_e^{π(i)}}`, an extended perfect code of
/// length `2(n + 1)` and minimum distance 4.
pub fn phelps_double_permuted(
    b: &ModularCode,
    c: &ModularCode,
    pi: &PermutationPlan,
    limits: &Limits,
) -> Result<ModularCode> {
    let n = check_binary_perfect(b, limits)?;
    if check_binary_perfect(c, limits)? != n {
        return Err(Error::dim("both codes must have the same length"));
    }
    if pi.size() != n + 1 {
        return Err(Error::param(format!(
            "permutation has size {}, need {}",
            pi.size(),
            n + 1
        )));
    }
    let (_, be) = doubling_families(b, limits)?;
    let (_, ce) = doubling_families(c, limits)?;
    let space = Space::new(2 * (n + 1), 2)?;
    limits.check("doubled code", (b.len() * c.len() * (n + 1)) as u64)?;
    let words = paired_words(&be, &ce, Space::new(n + 1, 2)?, |i| pi.apply(i));
    ModularCode::from_packed(space, Metric::Hamming, words)
}

/// An outer code for the block products: explicit, or a Hamming code known
/// only through its parity checks.
#[derive(Debug, Clone)]
pub enum Outer {
    Explicit(ModularCode),
    Hamming(HammingCode),
}

impl Outer {
    fn len_big(&self) -> BigUint {
        match self {
            Outer::Explicit(c) => BigUint::from(c.len()),
            Outer::Hamming(h) => h.size(),
        }
    }
}

impl From<ModularCode> for Outer {
    fn from(c: ModularCode) -> Self {
        Outer::Explicit(c)
    }
}

impl From<HammingCode> for Outer {
    fn from(h: HammingCode) -> Self {
        Outer::Hamming(h)
    }
}

impl Membership for Outer {
    fn n(&self) -> usize {
        match self {
            Outer::Explicit(c) => c.n(),
            Outer::Hamming(h) => Membership::n(h),
        }
    }

    fn modulus(&self) -> u64 {
        match self {
            Outer::Explicit(c) => c.m(),
            Outer::Hamming(h) => h.q(),
        }
    }

    fn contains(&self, coords: &[i64]) -> bool {
        match self {
            Outer::Explicit(c) => Membership::contains(c, coords),
            Outer::Hamming(h) => Membership::contains(h, coords),
        }
    }
}

/// `{(x_1, …, x_ℓ) : x_t ∈ C1^{π_t(i_t)}, (i_1, …, i_ℓ) ∈ C2}`.
///
/// Symbol `j` of the outer code selects translate `j` of the inner code's
/// unit-vector family (translate 0 is the inner code itself). Membership
/// decodes each block to its translate index, undoes `π_t` and tests the
/// index vector against the outer code.
#[derive(Debug, Clone)]
pub struct BlockProduct {
    inner: TranslateFamily,
    outer: Outer,
    perms: Vec<PermutationPlan>,
}

/// The q-ary Hamming product: a perfect code of length `n·ℓ` over `q`
/// letters from a perfect inner code of length `n` whose `q^r` translates
/// match the outer alphabet.
pub fn qary_product(
    inner: &ModularCode,
    outer: impl Into<Outer>,
    limits: &Limits,
) -> Result<BlockProduct> {
    if inner.metric() != Metric::Hamming {
        return Err(Error::param(
            "the inner code of the q-ary product uses the Hamming metric",
        ));
    }
    let outer = outer.into();
    let ell = outer.n();
    BlockProduct::build(
        inner,
        outer,
        vec![PermutationPlan::identity(1); ell],
        limits,
        true,
    )
}

/// The Lee product: a perfect single-error-correcting Lee code of length
/// `n·ℓ` over `Z_{τ(2n+1)}`. `perms` holds one plan per outer coordinate,
/// each of size `2n + 1`; the first must be the identity.
pub fn lee_product(
    inner: &ModularCode,
    outer: impl Into<Outer>,
    perms: Vec<PermutationPlan>,
    limits: &Limits,
) -> Result<BlockProduct> {
    if inner.metric() != Metric::Lee {
        return Err(Error::param(
            "the inner code of the Lee product uses the Lee metric",
        ));
    }
    let outer = outer.into();
    if outer.modulus() % 2 == 0 {
        return Err(Error::param(format!(
            "the Lee product needs an odd outer alphabet q^r, got {}",
            outer.modulus()
        )));
    }
    if perms.len() != outer.n() {
        return Err(Error::param(format!(
            "need {} permutations (one per outer coordinate), got {}",
            outer.n(),
            perms.len()
        )));
    }
    if !perms[0].is_identity() {
        return Err(Error::param("the first permutation must be the identity"));
    }
    BlockProduct::build(inner, outer, perms, limits, false)
}

impl BlockProduct {
    fn build(
        inner: &ModularCode,
        outer: Outer,
        perms: Vec<PermutationPlan>,
        limits: &Limits,
        identity_perms: bool,
    ) -> Result<Self> {
        let family = unit_translate_family(inner, limits)?;
        if !family.is_partition() {
            return Err(Error::Structural("the inner code is not perfect".into()));
        }
        let q_r = outer.modulus() as usize;
        if family.len() != q_r {
            return Err(Error::param(format!(
                "inner code has {} translates but the outer alphabet has {q_r} symbols",
                family.len()
            )));
        }
        if let Outer::Explicit(c) = &outer {
            if c.metric() != Metric::Hamming {
                return Err(Error::param("the outer code uses the Hamming metric"));
            }
            if !verify::is_perfect(c, 1, Mode::Formula, limits)?.pass {
                return Err(Error::Structural("the outer code is not perfect".into()));
            }
        }
        let perms = if identity_perms {
            vec![PermutationPlan::identity(q_r); outer.n()]
        } else {
            if let Some(p) = perms.iter().find(|p| p.size() != q_r) {
                return Err(Error::param(format!(
                    "permutation of size {} for {q_r} translates",
                    p.size()
                )));
            }
            perms
        };
        Ok(BlockProduct {
            inner: family,
            outer,
            perms,
        })
    }

    pub fn inner(&self) -> &TranslateFamily {
        &self.inner
    }

    pub fn outer(&self) -> &Outer {
        &self.outer
    }

    pub fn permutations(&self) -> &[PermutationPlan] {
        &self.perms
    }

    /// Number of blocks `ℓ`.
    pub fn blocks(&self) -> usize {
        self.outer.n()
    }

    pub fn block_len(&self) -> usize {
        self.inner.base().n()
    }

    pub fn len(&self) -> usize {
        self.block_len() * self.blocks()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn m(&self) -> u64 {
        self.inner.base().m()
    }

    /// `|C2| · |C1|^ℓ`.
    pub fn size(&self) -> BigUint {
        self.outer.len_big() * BigUint::from(self.inner.base().len()).pow(self.blocks() as u32)
    }

    /// Outer-code symbols `(i_1, …, i_ℓ)` of a word, before the outer
    /// membership test.
    pub fn index_vector(&self, coords: &[i64]) -> Option<Vec<i64>> {
        let b = self.block_len();
        coords
            .chunks(b)
            .zip(&self.perms)
            .map(|(block, p)| self.inner.locate(block).map(|k| p.invert(k) as i64))
            .collect()
    }

    pub fn materialize(&self, limits: &Limits) -> Result<ModularCode> {
        let count = crate::metrics::to_u64_capped(&self.size(), "block product", limits)?;
        let outer = match &self.outer {
            Outer::Explicit(c) => c.clone(),
            Outer::Hamming(h) => h.materialize(limits)?,
        };
        let space = Space::new(self.len(), self.m())?;
        let block_space = self.inner.base().space();
        let translates: Vec<Vec<u64>> = (0..self.inner.len())
            .map(|i| self.inner.translate(i).packed().to_vec())
            .collect();
        let shift = block_space.size();
        let outer_space = outer.space();
        let mut words: Vec<u64> = outer
            .packed()
            .par_iter()
            .flat_map_iter(|&sym| {
                let symbols = outer_space.unpack(sym);
                let mut acc = vec![0u64];
                for (t, &s) in symbols.iter().enumerate() {
                    let block = &translates[self.perms[t].apply(s as usize)];
                    acc = acc
                        .iter()
                        .flat_map(|&a| block.iter().map(move |&x| a * shift + x))
                        .collect();
                }
                acc
            })
            .collect();
        debug_assert_eq!(words.len() as u64, count);
        words.par_sort_unstable();
        ModularCode::from_packed(space, self.inner.base().metric(), words)
    }
}

impl Membership for BlockProduct {
    fn n(&self) -> usize {
        self.len()
    }

    fn modulus(&self) -> u64 {
        self.m()
    }

    fn contains(&self, coords: &[i64]) -> bool {
        coords.len() == self.len()
            && self
                .index_vector(coords)
                .is_some_and(|v| self.outer.contains(&v))
    }
}

/// `{(x, y) : x ∈ C1^i, y ∈ C2^{π(i)}}` over the `2n` even translates of
/// two `(n, 4, 4n, m)` diameter perfect codes.
pub fn lee_double(
    c1: &ModularCode,
    c2: &ModularCode,
    pi: &PermutationPlan,
    limits: &Limits,
) -> Result<ModularCode> {
    if c1.space() != c2.space() {
        return Err(Error::dim(format!(
            "both codes must share length and alphabet: Z_{}^{} vs Z_{}^{}",
            c1.m(),
            c1.n(),
            c2.m(),
            c2.n()
        )));
    }
    let n = c1.n();
    if pi.size() != 2 * n {
        return Err(Error::param(format!(
            "permutation has size {}, need 2n = {}",
            pi.size(),
            2 * n
        )));
    }
    for c in [c1, c2] {
        if !verify::is_diameter_perfect(c, 4, Mode::Formula, limits)?.pass {
            return Err(Error::Structural(
                "input is not a distance-4 diameter perfect code".into(),
            ));
        }
    }
    let space = Space::new(2 * n, c1.m())?;
    limits.check("doubled code", space.size() / (8 * n as u64))?;
    let f1 = even_translates(c1)?;
    let f2 = even_translates(c2)?;
    let t1: Vec<Vec<u64>> = (0..f1.len()).map(|i| f1.translate_packed(i)).collect();
    let t2: Vec<Vec<u64>> = (0..f2.len()).map(|i| f2.translate_packed(i)).collect();
    let words = paired_words(&t1, &t2, c2.space(), |i| pi.apply(i));
    ModularCode::from_packed(space, Metric::Lee, words)
}

/// The doubling over `Z^n`: `{(x, y) : x ∈ C1^i, y ∈ C2^{π(i)}}` where the
/// `C^i` are the even translates of two distance-4 diameter perfect Manhattan
/// codes given as center sets.
pub fn manhattan_double(c1: CenterSet, c2: CenterSet, pi: PermutationPlan) -> Result<CenterSet> {
    CenterSet::product(c1, c2, pi)
}

/// Plans per doubling level for `r` levels: level `i` (1-based) has
/// `2^{r-i}` doublings, each of size `2^i·n0`.
pub fn schedule_shape(n0: usize, r: usize) -> Vec<(usize, usize)> {
    (1..=r).map(|i| (1 << (r - i), (1 << i) * n0)).collect()
}

pub fn identity_schedule(n0: usize, r: usize) -> Vec<Vec<PermutationPlan>> {
    schedule_shape(n0, r)
        .into_iter()
        .map(|(count, size)| vec![PermutationPlan::identity(size); count])
        .collect()
}

/// Applies `lee_double` along a complete binary tree whose `2^r` leaves are
/// copies of `base`; `schedule[i]` supplies the plans for level `i + 1`,
/// left to right.
pub fn iterate_lee_double(
    base: &ModularCode,
    schedule: &[Vec<PermutationPlan>],
    limits: &Limits,
) -> Result<ModularCode> {
    let r = schedule.len();
    let shape = schedule_shape(base.n(), r);
    for (level, ((count, size), plans)) in shape.iter().zip(schedule).enumerate() {
        if plans.len() != *count || plans.iter().any(|p| p.size() != *size) {
            return Err(Error::param(format!(
                "level {} needs {count} plans of size {size}",
                level + 1
            )));
        }
    }
    let mut codes = vec![base.clone(); 1 << r];
    for plans in schedule {
        codes = codes
            .chunks(2)
            .zip(plans)
            .map(|(pair, pi)| lee_double(&pair[0], &pair[1], pi, limits))
            .collect::<Result<Vec<_>>>()?;
    }
    Ok(codes.pop().expect("one code remains"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base::{
        diameter4_lattice, hamming_code, lee_single_error_code, seed_2484,
    };
    use crate::constructions::field::FieldTable;
    use crate::metrics::{hamming_distance, lee_distance};
    use crate::word::Word;

    fn limits() -> Limits {
        Limits::default()
    }

    fn brute_min_distance(code: &ModularCode, metric: Metric) -> u64 {
        let words: Vec<Word> = code.words().collect();
        let mut best = u64::MAX;
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let d = match metric {
                    Metric::Hamming => hamming_distance(a, b).unwrap(),
                    _ => lee_distance(a, b).unwrap(),
                };
                best = best.min(d);
            }
        }
        best
    }

    #[test]
    fn permutation_plans() {
        let p = PermutationPlan::from_one_based(4, &[1, 3, 2, 4]).unwrap();
        assert_eq!(p.apply(1), 2);
        assert_eq!(p.invert(2), 1);
        assert_eq!(p.to_one_based(), vec![1, 3, 2, 4]);
        assert!(PermutationPlan::from_one_based(3, &[2, 1, 3]).is_err());
        assert!(PermutationPlan::from_one_based(3, &[1, 1, 3]).is_err());
        assert!(PermutationPlan::from_one_based(3, &[1, 2]).is_err());
        let all: Vec<_> = PermutationPlan::all_fixing_first(4).collect();
        assert_eq!(all.len(), 6);
        assert!(all[0].is_identity());
        assert_eq!(PermutationPlan::all_fixing_first(1).count(), 1);
    }

    #[test]
    fn binary_doubling() {
        let h = hamming_code(2, 3, &limits()).unwrap();
        let d = phelps_double(&h, &limits()).unwrap();
        assert_eq!((d.n(), d.len()), (15, 2048));
        assert!(
            verify::is_perfect(&d, 1, Mode::Exhaustive, &limits())
                .unwrap()
                .pass
        );

        let zero =
            ModularCode::from_packed(Space::new(1, 2).unwrap(), Metric::Hamming, vec![0]).unwrap();
        let d3 = phelps_double(&zero, &limits()).unwrap();
        assert_eq!((d3.n(), d3.len()), (3, 2));
        assert!(
            verify::is_perfect(&d3, 1, Mode::Exhaustive, &limits())
                .unwrap()
                .pass
        );
    }

    #[test]
    fn permuted_doubling() {
        let h = hamming_code(2, 3, &limits()).unwrap();
        let id = PermutationPlan::identity(8);
        let ext = phelps_double_permuted(&h, &h, &id, &limits()).unwrap();
        let direct = extend_binary(&phelps_double(&h, &limits()).unwrap()).unwrap();
        assert_eq!(ext, direct);

        let c3 = hamming_code(2, 2, &limits()).unwrap();
        let mut seen = Vec::new();
        for pi in PermutationPlan::all_fixing_first(4) {
            let c = phelps_double_permuted(&c3, &c3, &pi, &limits()).unwrap();
            assert_eq!(c.n(), 8);
            assert!(c.packed().iter().all(|w| w.count_ones() % 2 == 0));
            assert!(c.packed().contains(&0));
            assert_eq!(brute_min_distance(&c, Metric::Hamming), 4);
            seen.push(c);
        }
        let t = PermutationPlan::transposition(4, 1, 2).unwrap();
        let a = phelps_double_permuted(&c3, &c3, &PermutationPlan::identity(4), &limits()).unwrap();
        let b = phelps_double_permuted(&c3, &c3, &t, &limits()).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn qary_product_desk_case() {
        let c1 = hamming_code(2, 2, &limits()).unwrap();
        let c2 = hamming_code(4, 2, &limits()).unwrap();
        let p = qary_product(&c1, c2.clone(), &limits()).unwrap();
        assert_eq!(p.len(), 15);
        assert_eq!(p.size(), BigUint::from(2048u32));
        let code = p.materialize(&limits()).unwrap();
        assert_eq!(code.len(), 2048);
        assert!(
            verify::is_perfect(&code, 1, Mode::Exhaustive, &limits())
                .unwrap()
                .pass
        );
        for w in code.words().take(200) {
            assert!(p.contains(w.coords()));
        }
        // Parity-check-only outer code gives the same oracle.
        let q = qary_product(
            &c1,
            HammingCode::new(FieldTable::new(4).unwrap(), 2).unwrap(),
            &limits(),
        )
        .unwrap();
        assert_eq!(q.materialize(&limits()).unwrap(), code);
        assert!(qary_product(&c1, hamming_code(2, 3, &limits()).unwrap(), &limits()).is_err());
    }

    #[test]
    fn block_product_case_analysis() {
        let c1 = hamming_code(2, 2, &limits()).unwrap();
        let c2 = hamming_code(4, 2, &limits()).unwrap();
        let p = qary_product(&c1, c2, &limits()).unwrap();
        let words: Vec<Word> = p
            .materialize(&limits())
            .unwrap()
            .words()
            .step_by(7)
            .collect();
        for (i, a) in words.iter().enumerate() {
            let ia = p.index_vector(a.coords()).unwrap();
            for b in &words[i + 1..] {
                let ib = p.index_vector(b.coords()).unwrap();
                let differing_blocks = a
                    .coords()
                    .chunks(3)
                    .zip(b.coords().chunks(3))
                    .filter(|(x, y)| x != y)
                    .count();
                if ia == ib {
                    assert!(hamming_distance(a, b).unwrap() >= 3);
                } else {
                    assert!(differing_blocks >= 3);
                }
            }
        }
    }

    #[test]
    fn lee_product_ternary_case() {
        let c1 = lee_single_error_code(1, 1, &limits()).unwrap();
        let c2 = hamming_code(3, 2, &limits()).unwrap();
        let ident = vec![PermutationPlan::identity(3); 4];
        let p = lee_product(&c1, c2.clone(), ident.clone(), &limits()).unwrap();
        let code = p.materialize(&limits()).unwrap();
        assert_eq!((code.n(), code.m(), code.len()), (4, 3, 9));
        assert!(
            verify::is_perfect(&code, 1, Mode::Exhaustive, &limits())
                .unwrap()
                .pass
        );

        let mut perms = ident.clone();
        perms[1] = PermutationPlan::transposition(3, 1, 2).unwrap();
        let q = lee_product(&c1, c2.clone(), perms, &limits()).unwrap();
        let other = q.materialize(&limits()).unwrap();
        assert_ne!(code, other);
        assert!(
            verify::is_perfect(&other, 1, Mode::Exhaustive, &limits())
                .unwrap()
                .pass
        );

        let mut bad = ident;
        bad[0] = PermutationPlan::transposition(3, 1, 2).unwrap();
        assert!(lee_product(&c1, c2, bad, &limits()).is_err());
    }

    #[test]
    fn lee_product_quinary_case() {
        let c1 = lee_single_error_code(2, 1, &limits()).unwrap();
        let c2 = hamming_code(5, 2, &limits()).unwrap();
        let perms = vec![PermutationPlan::identity(5); 6];
        let p = lee_product(&c1, c2, perms, &limits()).unwrap();
        assert_eq!(p.len(), 12);
        assert_eq!(p.size() * BigUint::from(25u32), BigUint::from(5u32).pow(12));
        let pts = verify::sample_points(12, 5, 2000, 11);
        assert!(
            verify::local_cover_check(&p, &pts, 1, Some(11))
                .unwrap()
                .pass
        );
    }

    #[test]
    fn lee_doubling_of_seeds() {
        let seed = seed_2484(&limits()).unwrap();
        let mut codes = Vec::new();
        for pi in PermutationPlan::all_fixing_first(4) {
            let c = lee_double(&seed, &seed, &pi, &limits()).unwrap();
            assert_eq!((c.n(), c.m(), c.len()), (4, 4, 16));
            assert_eq!(brute_min_distance(&c, Metric::Lee), 4);
            assert!(
                verify::is_diameter_perfect(&c, 4, Mode::Exhaustive, &limits())
                    .unwrap()
                    .pass
            );
            codes.push(c);
        }
        assert_eq!(codes.len(), 6);
    }

    #[test]
    fn lee_doubling_case_analysis() {
        let g3 = diameter4_lattice(3)
            .unwrap()
            .reduce_to_modular(&limits())
            .unwrap()
            .quotient;
        let pi = PermutationPlan::from_one_based(6, &[1, 3, 2, 5, 6, 4]).unwrap();
        let c = lee_double(&g3, &g3, &pi, &limits()).unwrap();
        assert_eq!((c.n(), c.m(), c.len()), (6, 12, 124_416));
        let f = even_translates(&g3).unwrap();
        let words: Vec<Word> = c.words().step_by(997).collect();
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                let (a1, a2) = a.coords().split_at(3);
                let (b1, b2) = b.coords().split_at(3);
                let (ia, ib) = (f.locate(a1).unwrap(), f.locate(b1).unwrap());
                let half = |x: &[i64], y: &[i64]| {
                    lee_distance(
                        &Word::modular(x.to_vec(), 12).unwrap(),
                        &Word::modular(y.to_vec(), 12).unwrap(),
                    )
                    .unwrap()
                };
                if ia != ib {
                    assert!(half(a1, b1) >= 2 && half(a2, b2) >= 2);
                } else {
                    assert!(half(a1, b1) >= 4 || half(a2, b2) >= 4);
                }
            }
        }
    }

    #[test]
    fn iterated_doubling() {
        let seed = seed_2484(&limits()).unwrap();
        assert_eq!(iterate_lee_double(&seed, &[], &limits()).unwrap(), seed);
        let c = iterate_lee_double(&seed, &identity_schedule(2, 2), &limits()).unwrap();
        assert_eq!((c.n(), c.len()), (8, 2048));
        assert_eq!(schedule_shape(2, 2), vec![(2, 4), (1, 8)]);
        assert!(
            iterate_lee_double(&seed, &[vec![PermutationPlan::identity(6)]], &limits()).is_err()
        );
        assert!(
            iterate_lee_double(&seed, &[vec![PermutationPlan::identity(4); 2]], &limits()).is_err()
        );
    }

    #[test]
    fn lee_double_rejects_bad_inputs() {
        let seed = seed_2484(&limits()).unwrap();
        assert!(lee_double(&seed, &seed, &PermutationPlan::identity(3), &limits()).is_err());
        let odd = lee_single_error_code(2, 1, &limits()).unwrap();
        assert!(lee_double(&odd, &odd, &PermutationPlan::identity(4), &limits()).is_err());
    }

    fn lattice_centers(l: crate::lattice::Lattice) -> CenterSet {
        let n = l.n();
        CenterSet::from_lattice(l, crate::metrics::AnticodeSpec::odd(n, 1)).unwrap()
    }

    #[test]
    fn manhattan_double_lifts_lee_double() {
        use crate::constructions::base::diameter_2d_family;
        use crate::tilings::Window;
        let seed = seed_2484(&limits()).unwrap();
        for pi in PermutationPlan::all_fixing_first(4) {
            let modular = lee_double(&seed, &seed, &pi, &limits()).unwrap();
            let c = lattice_centers(diameter_2d_family(1, 0).unwrap());
            let lifted = manhattan_double(c.clone(), c, pi.clone()).unwrap();
            let window = Window::cube(4, -5, 5).unwrap();
            for p in window.points() {
                let reduced: Vec<i64> = p.iter().map(|x| x.rem_euclid(4)).collect();
                assert_eq!(
                    lifted.contains(&p).unwrap(),
                    Membership::contains(&modular, &reduced),
                    "{p:?}"
                );
            }
        }
    }

    #[test]
    fn manhattan_double_density_and_tiling() {
        use crate::constructions::base::diameter_2d_family;
        use crate::tilings::{verify_window_tiling, Window};
        let c = lattice_centers(diameter_2d_family(1, 0).unwrap());
        let d = manhattan_double(c.clone(), c, PermutationPlan::identity(4)).unwrap();
        let window = Window::cube(4, 0, 16).unwrap();
        let centers = d.centers_in(&window, &limits()).unwrap();
        assert_eq!(centers.len() as u64 * 16, window.volume());
        assert!(
            verify_window_tiling(&d, &window, &limits())
                .unwrap()
                .exact_cover
        );
    }

    #[test]
    fn manhattan_double_of_a_strip_set() {
        use crate::constructions::base::diameter_2d_family;
        use crate::tilings::{
            axis_period_probe, strip_set_for_window, tiling_periodicity_probe,
            verify_window_tiling, SequenceGenerator, Window,
        };
        let plane = Window::cube(2, -20, 84).unwrap();
        let strips = strip_set_for_window(SequenceGenerator::Fibonacci, 1, &plane).unwrap();
        let c2 = lattice_centers(diameter_2d_family(1, 0).unwrap());
        let pi = PermutationPlan::transposition(4, 1, 2).unwrap();
        let d = manhattan_double(strips, c2, pi).unwrap();
        let window = Window::cube(4, 0, 12).unwrap();
        assert!(
            verify_window_tiling(&d, &window, &limits())
                .unwrap()
                .exact_cover
        );

        // The lattice half keeps its axis periods; the strip half has none.
        let wide = Window::new(vec![0, 0, 0, 0], vec![64, 64, 9, 9]).unwrap();
        let axis = axis_period_probe(&d, &wide, 4, &limits()).unwrap();
        assert!(axis.survivors.contains(&vec![0, 0, 4, 0]));
        assert!(axis.survivors.iter().all(|v| v[0] == 0 && v[1] == 0));
        // In the strip coordinates only the diagonal step survives.
        let rep =
            tiling_periodicity_probe(&d, &Window::cube(4, 0, 9).unwrap(), 4, &limits()).unwrap();
        assert!(rep.survivors.contains(&vec![2, 2, 0, 0]));
        assert!(
            rep.survivors.iter().all(|v| v[0] == v[1]),
            "{:?}",
            rep.survivors
        );
    }
}
