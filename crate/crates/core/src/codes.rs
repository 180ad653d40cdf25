//! Explicit codes over `Z_m^n`, their translates and cosets, parity
//! classification of translates, and the binary extend/puncture maps.

use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Limits, Result};
use crate::metrics::{self, AnticodeSpec, Metric};
use crate::word::{Space, Word};

/// A set of words of `Z_m^n`, stored as sorted packed indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WordSet {
    space: Space,
    words: Vec<u64>,
}

impl WordSet {
    pub fn new(space: Space, mut words: Vec<u64>) -> Self {
        words.sort_unstable();
        words.dedup();
        WordSet { space, words }
    }

    pub fn from_words(space: Space, words: &[Word]) -> Result<Self> {
        let packed = words
            .iter()
            .map(|w| space.check_word(w).map(|_| space.pack(w.coords())))
            .collect::<Result<Vec<_>>>()?;
        Ok(WordSet::new(space, packed))
    }

    pub fn space(&self) -> Space {
        self.space
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn packed(&self) -> &[u64] {
        &self.words
    }

    pub fn contains_packed(&self, index: u64) -> bool {
        self.words.binary_search(&index).is_ok()
    }

    /// Membership of reduced coordinates; out-of-range input is never a member.
    pub fn contains(&self, coords: &[i64]) -> bool {
        coords.len() == self.space.n()
            && coords
                .iter()
                .all(|&c| c >= 0 && (c as u64) < self.space.m())
            && self.contains_packed(self.space.pack(coords))
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().map(move |&i| self.space.word(i))
    }

    /// `{v + c mod m : c ∈ self}`.
    pub fn translate(&self, v: &Word) -> Result<WordSet> {
        self.space.check_word(v)?;
        Ok(WordSet::new(self.space, self.translated_packed(v.coords())))
    }

    pub(crate) fn translated_packed(&self, offset: &[i64]) -> Vec<u64> {
        let mut scratch = vec![0i64; self.space.n()];
        self.words
            .iter()
            .map(|&w| self.space.add_offset(w, offset, &mut scratch))
            .collect()
    }
}

/// A membership predicate over `Z_m^n`.
///
/// Implemented by explicit codes and by the product constructions, which are
/// often far too large to materialize.
pub trait Membership: Sync {
    fn n(&self) -> usize;
    fn modulus(&self) -> u64;
    /// `coords` must be reduced into `0..m`.
    fn contains(&self, coords: &[i64]) -> bool;
}

/// An explicit code over `Z_m^n` that contains the all-zero word.
#[derive(Debug, Clone)]
pub struct ModularCode {
    set: WordSet,
    metric: Metric,
    linear: bool,
}

impl PartialEq for ModularCode {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set && self.metric == other.metric
    }
}

impl Eq for ModularCode {}

/// Codes larger than this are not tested for linearity when parsed.
const LINEARITY_PROBE_LIMIT: usize = 2_000_000;

impl ModularCode {
    /// Builds a code from packed words; linearity is detected by building the
    /// subgroup the words generate.
    pub fn from_packed(space: Space, metric: Metric, words: Vec<u64>) -> Result<Self> {
        let set = WordSet::new(space, words);
        if !set.contains_packed(0) {
            return Err(Error::Structural(
                "a code must contain the all-zero word".into(),
            ));
        }
        let linear = set.len() <= LINEARITY_PROBE_LIMIT && generates_itself(&set);
        Ok(ModularCode {
            set,
            metric,
            linear,
        })
    }

    /// For constructions that are linear by definition: skips detection.
    pub(crate) fn from_linear_words(space: Space, metric: Metric, words: Vec<u64>) -> Result<Self> {
        let set = WordSet::new(space, words);
        if !set.contains_packed(0) {
            return Err(Error::Structural(
                "a code must contain the all-zero word".into(),
            ));
        }
        Ok(ModularCode {
            set,
            metric,
            linear: true,
        })
    }

    pub fn from_words(space: Space, metric: Metric, words: &[Word]) -> Result<Self> {
        let set = WordSet::from_words(space, words)?;
        ModularCode::from_packed(space, metric, set.words)
    }

    pub fn space(&self) -> Space {
        self.set.space
    }

    pub fn n(&self) -> usize {
        self.set.space.n()
    }

    pub fn m(&self) -> u64 {
        self.set.space.m()
    }

    pub fn metric(&self) -> Metric {
        self.metric
    }

    /// Closed under coordinate-wise addition mod `m`.
    pub fn is_linear(&self) -> bool {
        self.linear
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    pub fn word_set(&self) -> &WordSet {
        &self.set
    }

    pub fn packed(&self) -> &[u64] {
        &self.set.words
    }

    pub fn words(&self) -> impl Iterator<Item = Word> + '_ {
        self.set.words()
    }

    pub fn contains_word(&self, w: &Word) -> bool {
        self.set.space.check_word(w).is_ok() && self.set.contains(w.coords())
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    /// Minimum distance in the code's own metric; `None` for a one-word code.
    pub fn min_distance(&self) -> Option<u64> {
        if self.len() < 2 {
            return None;
        }
        let space = self.space();
        let (n, m) = (space.n(), space.m());
        if self.linear {
            return self
                .set
                .words
                .par_iter()
                .filter(|&&w| w != 0)
                .map_init(
                    || vec![0i64; n],
                    |buf, &w| {
                        space.unpack_into(w, buf);
                        metrics::weight_of(self.metric, buf, m)
                    },
                )
                .min();
        }
        if self.len() <= 2500 {
            let words: Vec<Vec<i64>> = self.set.words.iter().map(|&w| space.unpack(w)).collect();
            return words
                .par_iter()
                .enumerate()
                .flat_map_iter(|(i, a)| {
                    words[i + 1..].iter().map(move |b| {
                        let diff: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - y).collect();
                        metrics::weight_of(self.metric, &diff, m)
                    })
                })
                .min();
        }
        let lookup = Lookup::new(&self.set);
        let max_weight = match self.metric {
            Metric::Hamming => n as u64,
            _ => n as u64 * (m / 2),
        };
        for r in 1..=max_weight {
            let layer = match self.metric {
                Metric::Hamming => metrics::hamming_ball_words(n, m, r, r),
                _ => metrics::modular_lee_ball_words(n, m, r, r),
            };
            let hit = self.set.words.par_iter().any(|&w| {
                let mut scratch = vec![0i64; n];
                layer
                    .iter()
                    .any(|off| lookup.contains(space.add_offset(w, off, &mut scratch)))
            });
            if hit {
                return Some(r);
            }
        }
        None
    }

    /// Counts of codewords with even and odd Lee weight.
    pub fn lee_parity_census(&self) -> (usize, usize) {
        parity_census(self.space(), &self.set.words)
    }
}

impl Membership for ModularCode {
    fn n(&self) -> usize {
        self.set.space.n()
    }

    fn modulus(&self) -> u64 {
        self.set.space.m()
    }

    fn contains(&self, coords: &[i64]) -> bool {
        self.set.contains(coords)
    }
}

impl fmt::Display for ModularCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "code of length {} over Z_{} with {} words",
            self.n(),
            self.m(),
            self.len()
        )
    }
}

/// Dense bitmap for small spaces, binary search otherwise.
pub(crate) enum Lookup<'a> {
    Bits(Vec<u64>),
    Sorted(&'a [u64]),
}

impl<'a> Lookup<'a> {
    pub(crate) fn new(set: &'a WordSet) -> Self {
        let size = set.space.size();
        if size <= 1 << 31 {
            let mut bits = vec![0u64; size.div_ceil(64) as usize];
            for &w in &set.words {
                bits[(w / 64) as usize] |= 1 << (w % 64);
            }
            Lookup::Bits(bits)
        } else {
            Lookup::Sorted(&set.words)
        }
    }

    #[inline]
    pub(crate) fn contains(&self, index: u64) -> bool {
        match self {
            Lookup::Bits(bits) => bits[(index / 64) as usize] >> (index % 64) & 1 == 1,
            Lookup::Sorted(words) => words.binary_search(&index).is_ok(),
        }
    }
}

fn generates_itself(set: &WordSet) -> bool {
    let space = set.space;
    let n = space.n();
    let mut span: Vec<u64> = vec![0];
    let mut a = vec![0i64; n];
    let mut b = vec![0i64; n];
    for &c in &set.words {
        if span.binary_search(&c).is_ok() {
            continue;
        }
        let generator = space.unpack(c);
        let mut next = span.clone();
        let mut multiple = generator.clone();
        while multiple.iter().any(|&x| x != 0) {
            for &s in &span {
                space.unpack_into(s, &mut a);
                for ((ai, bi), mi) in a.iter().zip(b.iter_mut()).zip(&multiple) {
                    *bi = ai + mi;
                }
                let t = space.pack(&b);
                if !set.contains_packed(t) {
                    return false;
                }
                next.push(t);
            }
            for (mi, gi) in multiple.iter_mut().zip(&generator) {
                *mi = (*mi + gi).rem_euclid(space.m() as i64);
            }
        }
        next.sort_unstable();
        next.dedup();
        if next.len() > set.len() {
            return false;
        }
        span = next;
    }
    span.len() == set.len()
}

fn parity_census(space: Space, words: &[u64]) -> (usize, usize) {
    let (n, m) = (space.n(), space.m());
    let odd = words
        .par_iter()
        .map_init(
            || vec![0i64; n],
            |buf, &w| {
                space.unpack_into(w, buf);
                (metrics::lee_weight_of(buf, m) % 2) as usize
            },
        )
        .sum::<usize>();
    (words.len() - odd, odd)
}

/// Parity class of a set of words under the Lee weight.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    fn from_census(even: usize, odd: usize) -> Parity {
        match (even, odd) {
            (_, 0) => Parity::Even,
            (0, _) => Parity::Odd,
            _ => Parity::Mixed,
        }
    }

    fn flip(self) -> Parity {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::Mixed => Parity::Mixed,
        }
    }
}

/// EVEN if every word has even Lee weight, ODD if every word is odd.
pub fn parity_of_translate(set: &WordSet) -> Parity {
    let (even, odd) = parity_census(set.space, &set.words);
    Parity::from_census(even, odd)
}

/// How a translate family was built.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    Cosets,
    UnitVectors,
    Anticode,
    EvenAnticode,
}

/// An ordered list of translates `v_i + C` of a base code; `v_0 = 0`.
#[derive(Debug, Clone)]
pub struct TranslateFamily {
    base: ModularCode,
    kind: FamilyKind,
    vectors: Vec<Word>,
    parities: Vec<Parity>,
    partition: bool,
}

impl TranslateFamily {
    fn build(base: ModularCode, kind: FamilyKind, vectors: Vec<Word>, partition: bool) -> Self {
        debug_assert!(vectors[0].is_zero());
        let space = base.space();
        let parities = if space.m().is_multiple_of(2) {
            // For even m the Lee weight of a symbol has the parity of its
            // residue, so parity(v + c) = parity(v) + parity(c).
            let base_parity = parity_of_translate(base.word_set());
            vectors
                .iter()
                .map(|v| {
                    if metrics::lee_weight(v).is_multiple_of(2) {
                        base_parity
                    } else {
                        base_parity.flip()
                    }
                })
                .collect()
        } else {
            vectors
                .par_iter()
                .map(|v| {
                    let words = base.word_set().translated_packed(v.coords());
                    let (e, o) = parity_census(space, &words);
                    Parity::from_census(e, o)
                })
                .collect()
        };
        TranslateFamily {
            base,
            kind,
            vectors,
            parities,
            partition,
        }
    }

    pub fn base(&self) -> &ModularCode {
        &self.base
    }

    pub fn kind(&self) -> FamilyKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[Word] {
        &self.vectors
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// Whether the translates are known to partition `Z_m^n`.
    pub fn is_partition(&self) -> bool {
        self.partition
    }

    pub fn translate(&self, i: usize) -> WordSet {
        WordSet::new(
            self.base.space(),
            self.base
                .word_set()
                .translated_packed(self.vectors[i].coords()),
        )
    }

    pub(crate) fn translate_packed(&self, i: usize) -> Vec<u64> {
        let mut words = self
            .base
            .word_set()
            .translated_packed(self.vectors[i].coords());
        words.sort_unstable();
        words
    }

    /// Index of the first translate containing `coords` (reduced).
    pub fn locate(&self, coords: &[i64]) -> Option<usize> {
        let m = self.base.m() as i64;
        let mut y = vec![0i64; coords.len()];
        self.vectors.iter().position(|v| {
            for ((yi, xi), vi) in y.iter_mut().zip(coords).zip(v.coords()) {
                *yi = (xi - vi).rem_euclid(m);
            }
            self.base.word_set().contains(&y)
        })
    }

    /// `(even, odd, mixed)` counts.
    pub fn parity_census(&self) -> (usize, usize, usize) {
        self.parities
            .iter()
            .fold((0, 0, 0), |(e, o, x), p| match p {
                Parity::Even => (e + 1, o, x),
                Parity::Odd => (e, o + 1, x),
                Parity::Mixed => (e, o, x + 1),
            })
    }

    /// Explicit disjointness and cover check over the whole space.
    pub fn check_partition(&self, limits: &Limits) -> Result<PartitionOutcome> {
        let space = self.base.space();
        limits.check("partition check", space.size())?;
        let total = self.base.len() as u64 * self.len() as u64;
        limits.check("partition check", total)?;
        let mut owner: Vec<u32> = vec![u32::MAX; space.size() as usize];
        for i in 0..self.len() {
            for w in self
                .base
                .word_set()
                .translated_packed(self.vectors[i].coords())
            {
                let slot = &mut owner[w as usize];
                if *slot != u32::MAX {
                    return Ok(PartitionOutcome::Collision {
                        first: *slot as usize,
                        second: i,
                        word: space.word(w),
                    });
                }
                *slot = i as u32;
            }
        }
        match owner.iter().position(|&o| o == u32::MAX) {
            Some(idx) => Ok(PartitionOutcome::Uncovered(space.word(idx as u64))),
            None => Ok(PartitionOutcome::Partition),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionOutcome {
    Partition,
    Collision {
        first: usize,
        second: usize,
        word: Word,
    },
    Uncovered(Word),
}

pub fn translate(code: &ModularCode, v: &Word) -> Result<WordSet> {
    code.word_set().translate(v)
}

/// All cosets of a linear code, each represented by its canonical leader:
/// the lexicographically least word of minimum weight. Cosets are ordered by
/// leader weight, then lexicographically, so the code itself comes first.
pub fn cosets(code: &ModularCode, limits: &Limits) -> Result<TranslateFamily> {
    if !code.is_linear() {
        return Err(Error::Structural(
            "cosets need a linear code; use translates for nonlinear codes".into(),
        ));
    }
    let space = code.space();
    let (n, m) = (space.n(), space.m());
    let count = space.size() / code.len() as u64;
    limits.check("coset enumeration", count)?;
    let mut leaders: Vec<Vec<i64>> = Vec::with_capacity(count as usize);
    let mut labels: Option<Vec<bool>> =
        (space.size() <= limits.max_points).then(|| vec![false; space.size() as usize]);
    let max_weight = match code.metric() {
        Metric::Hamming => n as u64,
        _ => n as u64 * (m / 2),
    };
    let mut diff = vec![0i64; n];
    'layers: for w in 0..=max_weight {
        let layer = match code.metric() {
            Metric::Hamming => metrics::hamming_ball_words(n, m, w, w),
            _ => metrics::modular_lee_ball_words(n, m, w, w),
        };
        for cand in layer {
            let seen = match &labels {
                Some(lab) => lab[space.pack(&cand) as usize],
                None => leaders.iter().any(|l| {
                    for ((d, c), li) in diff.iter_mut().zip(&cand).zip(l) {
                        *d = (c - li).rem_euclid(m as i64);
                    }
                    code.word_set().contains(&diff)
                }),
            };
            if seen {
                continue;
            }
            if let Some(lab) = labels.as_mut() {
                for t in code.word_set().translated_packed(&cand) {
                    lab[t as usize] = true;
                }
            }
            leaders.push(cand);
            if leaders.len() as u64 == count {
                break 'layers;
            }
        }
    }
    let vectors = leaders
        .into_iter()
        .map(|l| Word::modular(l, m))
        .collect::<Result<Vec<_>>>()?;
    Ok(TranslateFamily::build(
        code.clone(),
        FamilyKind::Cosets,
        vectors,
        true,
    ))
}

/// The code and its translates by unit vectors.
///
/// Lee codes use `[0, +e_1, -e_1, ..., +e_n, -e_n]`; Hamming codes use every
/// nonzero multiple `a·e_i`, coordinate-major. The partition flag is checked
/// explicitly when the space fits the cap, otherwise it is derived from the
/// size identity together with minimum distance 3.
pub fn unit_translate_family(code: &ModularCode, limits: &Limits) -> Result<TranslateFamily> {
    let space = code.space();
    let (n, m) = (space.n(), space.m());
    let mut vectors = vec![Word::zero(n, crate::word::Modulus::Mod(m))];
    for i in 0..n {
        let scalars: Vec<i64> = match code.metric() {
            Metric::Hamming => (1..m as i64).collect(),
            _ => vec![1, m as i64 - 1],
        };
        for a in scalars {
            let mut v = vec![0; n];
            v[i] = a;
            let w = Word::modular(v, m)?;
            if !vectors.contains(&w) {
                vectors.push(w);
            }
        }
    }
    let mut family = TranslateFamily::build(code.clone(), FamilyKind::UnitVectors, vectors, false);
    family.partition = if space.size() <= limits.max_points {
        family.check_partition(limits)? == PartitionOutcome::Partition
    } else {
        code.len() as u64 * family.len() as u64 == space.size()
            && code.min_distance().is_some_and(|d| d >= 3)
    };
    Ok(family)
}

/// Translates of a code by every point of the odd anticode `S'_{n,R}`
/// anchored at the origin. For a code of minimum Lee distance `2R + 2` these
/// are pairwise disjoint, and they partition the space exactly when the code
/// is diameter perfect.
pub fn anticode_translate_family(
    code: &ModularCode,
    radius: u64,
    axis: usize,
    limits: &Limits,
) -> Result<TranslateFamily> {
    let vectors = anticode_vectors(code, radius, axis)?;
    let space = code.space();
    let mut family = TranslateFamily::build(code.clone(), FamilyKind::Anticode, vectors, false);
    family.partition = if space.size() <= limits.max_points {
        family.check_partition(limits)? == PartitionOutcome::Partition
    } else {
        code.len() as u64 * family.len() as u64 == space.size()
            && code.min_distance().is_some_and(|d| d >= 2 * radius + 2)
    };
    Ok(family)
}

fn anticode_vectors(code: &ModularCode, radius: u64, axis: usize) -> Result<Vec<Word>> {
    let m = code.m();
    if m < 2 * radius + 2 {
        return Err(Error::param(format!(
            "S'_{{n,{radius}}} does not embed in Z_{m}: need m >= {}",
            2 * radius + 2
        )));
    }
    let spec = AnticodeSpec::odd(code.n(), radius).with_axis(axis);
    metrics::anticode_offsets(&spec)?
        .iter()
        .map(|v| Word::reduced(v, m))
        .collect()
}

/// The `2n` even translates of a distance-4 diameter perfect code, in the
/// order of their offsets in `S'_{n,1}` (the code itself first).
///
/// Checks that the code has the size `m^n / 4n`, that every one of the `4n`
/// anticode translates is purely even or purely odd, and that the two
/// classes have equal size. Minimum distance is the caller's responsibility
/// (see `verify::is_diameter_perfect`).
pub fn even_translates(code: &ModularCode) -> Result<TranslateFamily> {
    let (n, m) = (code.n(), code.m());
    if n < 2 {
        return Err(Error::param(
            "even translates are defined for diameter perfect codes of length n >= 2",
        ));
    }
    if m % 2 != 0 {
        return Err(Error::Structural(format!(
            "an even-distance diameter perfect code needs an even alphabet, got Z_{m}"
        )));
    }
    let space = code.space();
    if code.len() as u64 * 4 * n as u64 != space.size() {
        return Err(Error::Structural(format!(
            "size {} is not m^n/4n = {}/{}",
            code.len(),
            space.size(),
            4 * n
        )));
    }
    let all = anticode_vectors(code, 1, 0)?;
    let family = TranslateFamily::build(code.clone(), FamilyKind::Anticode, all, false);
    let (even, odd, mixed) = family.parity_census();
    if mixed > 0 || even != odd {
        return Err(Error::Structural(format!(
            "translate parity census even={even} odd={odd} mixed={mixed}"
        )));
    }
    if family.parities[0] != Parity::Even {
        return Err(Error::Structural(
            "the code itself is not an even translate".into(),
        ));
    }
    let (vectors, parities): (Vec<Word>, Vec<Parity>) = family
        .vectors
        .into_iter()
        .zip(family.parities)
        .filter(|(_, p)| *p == Parity::Even)
        .unzip();
    Ok(TranslateFamily {
        base: family.base,
        kind: FamilyKind::EvenAnticode,
        vectors,
        parities,
        partition: false,
    })
}

/// Appends a parity bit to every codeword of a binary code.
pub fn extend_binary(code: &ModularCode) -> Result<ModularCode> {
    if code.m() != 2 {
        return Err(Error::param(format!(
            "extension needs a binary code, got Z_{}",
            code.m()
        )));
    }
    let space = Space::new(code.n() + 1, 2)?;
    let words = code
        .packed()
        .iter()
        .map(|&w| (w << 1) | u64::from(w.count_ones() % 2 == 1))
        .collect();
    ModularCode::from_packed(space, code.metric(), words)
}

/// Drops the last coordinate of an even-weight binary code.
pub fn puncture_binary(code: &ModularCode) -> Result<ModularCode> {
    if code.m() != 2 {
        return Err(Error::param(format!(
            "puncturing needs a binary code, got Z_{}",
            code.m()
        )));
    }
    if code.n() < 2 {
        return Err(Error::param("cannot puncture a length-1 code"));
    }
    if let Some(&w) = code.packed().iter().find(|w| w.count_ones() % 2 == 1) {
        return Err(Error::Structural(format!(
            "codeword {} has odd weight",
            code.space().word(w)
        )));
    }
    let space = Space::new(code.n() - 1, 2)?;
    let words = code.packed().iter().map(|&w| w >> 1).collect();
    ModularCode::from_packed(space, code.metric(), words)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, m: u64, words: &[&[i64]], metric: Metric) -> ModularCode {
        let space = Space::new(n, m).unwrap();
        let words: Vec<Word> = words
            .iter()
            .map(|w| Word::modular(w.to_vec(), m).unwrap())
            .collect();
        ModularCode::from_words(space, metric, &words).unwrap()
    }

    fn seed_2484() -> ModularCode {
        code(2, 4, &[&[0, 0], &[2, 2]], Metric::Lee)
    }

    fn hamming_7_4() -> ModularCode {
        // Parity-check columns 1..7 in binary.
        let space = Space::new(7, 2).unwrap();
        let words = (0..128u64)
            .filter(|&w| {
                let mut s = 0;
                for bit in 0..7 {
                    if w >> (6 - bit) & 1 == 1 {
                        s ^= bit + 1;
                    }
                }
                s == 0
            })
            .collect();
        ModularCode::from_packed(space, Metric::Hamming, words).unwrap()
    }

    #[test]
    fn codes_must_contain_zero() {
        let space = Space::new(2, 4).unwrap();
        let w = vec![Word::modular(vec![1, 1], 4).unwrap()];
        assert!(ModularCode::from_words(space, Metric::Lee, &w).is_err());
    }

    #[test]
    fn linearity_detection() {
        assert!(seed_2484().is_linear());
        assert!(hamming_7_4().is_linear());
        let nonlinear = code(2, 4, &[&[0, 0], &[1, 2]], Metric::Lee);
        assert!(!nonlinear.is_linear());
        let nonlinear = code(2, 6, &[&[0, 0], &[2, 2], &[3, 0]], Metric::Lee);
        assert!(!nonlinear.is_linear());
    }

    #[test]
    fn translate_examples() {
        let c = seed_2484();
        let zero = Word::modular(vec![0, 0], 4).unwrap();
        assert_eq!(&translate(&c, &zero).unwrap(), c.word_set());
        let inside = Word::modular(vec![2, 2], 4).unwrap();
        assert_eq!(&translate(&c, &inside).unwrap(), c.word_set());
        let t = translate(&c, &Word::modular(vec![1, 0], 4).unwrap()).unwrap();
        let got: Vec<Vec<i64>> = t.words().map(Word::into_coords).collect();
        assert_eq!(got, vec![vec![1, 0], vec![3, 2]]);
        assert!(translate(&c, &Word::modular(vec![1, 0, 0], 4).unwrap()).is_err());
    }

    #[test]
    fn cosets_of_small_codes() {
        let limits = Limits::default();
        let full =
            ModularCode::from_packed(Space::new(2, 3).unwrap(), Metric::Lee, (0..9).collect())
                .unwrap();
        assert_eq!(cosets(&full, &limits).unwrap().len(), 1);
        let fam = cosets(&seed_2484(), &limits).unwrap();
        assert_eq!(fam.len(), 8);
        assert_eq!(
            fam.check_partition(&limits).unwrap(),
            PartitionOutcome::Partition
        );
        // Canonical leaders: lexicographically least minimum-weight members.
        for (i, leader) in fam.vectors().iter().enumerate() {
            let best = fam
                .translate(i)
                .words()
                .min_by_key(|w| (metrics::lee_weight(w), w.clone()))
                .unwrap();
            assert_eq!(leader, &best);
        }
    }

    #[test]
    fn cosets_reject_nonlinear_codes() {
        let nonlinear = code(2, 4, &[&[0, 0], &[1, 2]], Metric::Lee);
        assert!(cosets(&nonlinear, &Limits::default()).is_err());
    }

    #[test]
    fn unit_translates() {
        let limits = Limits::default();
        let fam = unit_translate_family(&hamming_7_4(), &limits).unwrap();
        assert_eq!(fam.len(), 8);
        assert!(fam.is_partition());
        let lee5 = code(
            2,
            5,
            &[&[0, 0], &[1, 2], &[2, 4], &[3, 1], &[4, 3]],
            Metric::Lee,
        );
        let fam = unit_translate_family(&lee5, &limits).unwrap();
        assert_eq!(fam.len(), 5);
        assert!(fam.is_partition());
        let not_perfect = code(2, 5, &[&[0, 0], &[1, 2]], Metric::Lee);
        assert!(!unit_translate_family(&not_perfect, &limits)
            .unwrap()
            .is_partition());
    }

    #[test]
    fn parity_examples() {
        let c = seed_2484();
        assert_eq!(parity_of_translate(c.word_set()), Parity::Even);
        let t = translate(&c, &Word::modular(vec![1, 0], 4).unwrap()).unwrap();
        assert_eq!(parity_of_translate(&t), Parity::Odd);
        let full = WordSet::new(Space::new(1, 4).unwrap(), (0..4).collect());
        assert_eq!(parity_of_translate(&full), Parity::Mixed);
    }

    #[test]
    fn family_parity_labels_match_enumeration() {
        let fam = cosets(&seed_2484(), &Limits::default()).unwrap();
        for i in 0..fam.len() {
            assert_eq!(fam.parities()[i], parity_of_translate(&fam.translate(i)));
        }
        let lee5 = code(
            2,
            5,
            &[&[0, 0], &[1, 2], &[2, 4], &[3, 1], &[4, 3]],
            Metric::Lee,
        );
        let fam = unit_translate_family(&lee5, &Limits::default()).unwrap();
        for i in 0..fam.len() {
            assert_eq!(fam.parities()[i], parity_of_translate(&fam.translate(i)));
        }
    }

    #[test]
    fn even_translates_of_seed() {
        let fam = even_translates(&seed_2484()).unwrap();
        assert_eq!(fam.len(), 4);
        assert_eq!(
            fam.vectors()[0],
            Word::zero(2, crate::word::Modulus::Mod(4))
        );
        assert!(fam.parities().iter().all(|&p| p == Parity::Even));
        let lone = code(1, 8, &[&[0], &[4]], Metric::Lee);
        assert!(even_translates(&lone).is_err());
    }

    #[test]
    fn locate_finds_the_translate() {
        let fam = unit_translate_family(&hamming_7_4(), &Limits::default()).unwrap();
        for x in 0..128u64 {
            let coords = Space::new(7, 2).unwrap().unpack(x);
            let i = fam.locate(&coords).unwrap();
            assert!(fam.translate(i).contains(&coords));
        }
    }

    #[test]
    fn extension_and_puncturing() {
        let h = hamming_7_4();
        let e = extend_binary(&h).unwrap();
        assert_eq!(e.n(), 8);
        assert_eq!(e.len(), 16);
        assert_eq!(e.min_distance(), Some(4));
        assert!(e.packed().iter().all(|w| w.count_ones() % 2 == 0));
        assert_eq!(puncture_binary(&e).unwrap(), h);
        let p = puncture_binary(&e).unwrap();
        assert_eq!(p.min_distance(), Some(3));

        let zero =
            ModularCode::from_packed(Space::new(4, 2).unwrap(), Metric::Hamming, vec![0]).unwrap();
        let ez = extend_binary(&zero).unwrap();
        assert_eq!((ez.n(), ez.len()), (5, 1));
        assert_eq!(puncture_binary(&ez).unwrap(), zero);

        let odd = code(3, 2, &[&[0, 0, 0], &[1, 0, 0]], Metric::Hamming);
        let eo = extend_binary(&odd).unwrap();
        assert!(eo.contains_word(&Word::modular(vec![1, 0, 0, 1], 2).unwrap()));
        assert!(puncture_binary(&odd).is_err());
        assert!(extend_binary(&seed_2484()).is_err());
    }

    #[test]
    fn min_distance_routes_agree() {
        let c = code(
            3,
            6,
            &[&[0, 0, 0], &[2, 2, 0], &[3, 1, 5], &[1, 4, 2]],
            Metric::Lee,
        );
        assert!(!c.is_linear());
        let mut best = u64::MAX;
        let words: Vec<Word> = c.words().collect();
        for a in &words {
            for b in &words {
                if a != b {
                    best = best.min(metrics::lee_distance(a, b).unwrap());
                }
            }
        }
        assert_eq!(c.min_distance(), Some(best));
        assert_eq!(seed_2484().min_distance(), Some(4));
    }
}
