//! Center sets in `Z^n`, window checks that their anticodes tile, the
//! diagonal-strip construction of non-periodic 2-D tilings, and
//! periodicity probes.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::constructions::product::PermutationPlan;
use crate::error::{Error, Limits, Result};
use crate::lattice::Lattice;
use crate::metrics::{self, AnticodeSpec, DiameterParity};

/// Values `s_i ∈ Z_{R+1}` for `start <= i < start + values.len()`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, serde::Deserialize)]
pub struct StripSequence {
    pub radius: u64,
    pub start: i64,
    pub values: Vec<u64>,
}

impl StripSequence {
    pub fn new(radius: u64, start: i64, values: Vec<u64>) -> Result<Self> {
        if radius == 0 {
            return Err(Error::param("strip sequences need R >= 1"));
        }
        if let Some(v) = values.iter().find(|&&v| v > radius) {
            return Err(Error::param(format!(
                "sequence value {v} is not in Z_{}",
                radius + 1
            )));
        }
        Ok(StripSequence {
            radius,
            start,
            values,
        })
    }

    pub fn end(&self) -> i64 {
        self.start + self.values.len() as i64
    }

    pub fn get(&self, i: i64) -> Result<u64> {
        if i < self.start || i >= self.end() {
            return Err(Error::SequenceRange {
                index: i,
                start: self.start,
                end: self.end(),
            });
        }
        Ok(self.values[(i - self.start) as usize])
    }

    /// Adds `rho` to every value, mod `R + 1`.
    pub fn shifted(&self, rho: u64) -> StripSequence {
        let k = self.radius + 1;
        StripSequence {
            radius: self.radius,
            start: self.start,
            values: self.values.iter().map(|v| (v + rho) % k).collect(),
        }
    }
}

/// Named sequence generators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SequenceGenerator {
    Constant(u64),
    /// `s_i = i mod 2`.
    Alternating,
    /// The Fibonacci word `s_i = ⌊(i+1)φ⌋ - ⌊iφ⌋ - 1`, a Sturmian sequence.
    Fibonacci,
    Random(u64),
}

impl SequenceGenerator {
    pub fn parse(name: &str, seed: u64) -> Result<Self> {
        let (head, arg) = name.split_once(':').unwrap_or((name, ""));
        match head {
            "constant" => Ok(SequenceGenerator::Constant(if arg.is_empty() {
                0
            } else {
                arg.parse().map_err(|_| Error::Parse(format!("bad constant value {arg:?}")))?
            })),
            "alternating" => Ok(SequenceGenerator::Alternating),
            "fibonacci" | "sturmian" => Ok(SequenceGenerator::Fibonacci),
            "random" => Ok(SequenceGenerator::Random(seed)),
            _ => Err(Error::Parse(format!(
                "unknown sequence generator {name:?}; expected constant[:c], alternating, fibonacci, sturmian or random"
            ))),
        }
    }

    pub fn generate(&self, radius: u64, start: i64, len: usize) -> Result<StripSequence> {
        let k = radius + 1;
        let values = (start..start + len as i64)
            .map(|i| match *self {
                SequenceGenerator::Constant(c) => c % k,
                SequenceGenerator::Alternating => i.rem_euclid(2) as u64 % k,
                SequenceGenerator::Fibonacci => (floor_phi(i + 1) - floor_phi(i) - 1) as u64,
                SequenceGenerator::Random(seed) => {
                    // One stream per index keeps values independent of the window.
                    let mut rng = ChaCha8Rng::seed_from_u64(seed);
                    rng.set_stream(i as u64);
                    rng.gen_range(0..k)
                }
            })
            .collect();
        StripSequence::new(radius, start, values)
    }
}

/// `⌊iφ⌋` in exact integer arithmetic.
pub fn floor_phi(i: i64) -> i64 {
    let a = i.unsigned_abs() as u128;
    // 5a² is never a perfect square for a > 0, so iφ is irrational.
    let f = ((a + (5 * a * a).isqrt()) / 2) as i64;
    if i >= 0 {
        f
    } else {
        -f - 1
    }
}

#[derive(Debug, Clone)]
pub enum Backing {
    Lattice(Lattice),
    /// The set `T` built from a strip sequence.
    Sequence(StripSequence),
    /// `{(x, y) : x ∈ C1^i, y ∈ C2^{π(i)}}` over even anticode translates.
    Product {
        first: Box<CenterSet>,
        second: Box<CenterSet>,
        perm: PermutationPlan,
    },
}

/// A subset of `Z^n` used as the centers (anchor points `α`) of anticodes.
#[derive(Debug, Clone)]
pub struct CenterSet {
    n: usize,
    backing: Backing,
    anticode: AnticodeSpec,
    even_vectors: Vec<Vec<i64>>,
}

impl CenterSet {
    fn assemble(n: usize, backing: Backing, anticode: AnticodeSpec) -> Result<Self> {
        let even_vectors = metrics::anticode_offsets(&anticode)?
            .into_iter()
            .filter(|v| v.iter().map(|c| c.abs()).sum::<i64>() % 2 == 0)
            .collect();
        Ok(CenterSet {
            n,
            backing,
            anticode,
            even_vectors,
        })
    }

    pub fn from_lattice(lattice: Lattice, anticode: AnticodeSpec) -> Result<Self> {
        if anticode.n != lattice.n() {
            return Err(Error::dim("anticode and lattice dimensions differ"));
        }
        CenterSet::assemble(lattice.n(), Backing::Lattice(lattice), anticode)
    }

    pub(crate) fn product(
        first: CenterSet,
        second: CenterSet,
        perm: PermutationPlan,
    ) -> Result<Self> {
        if first.n != second.n {
            return Err(Error::dim("both codes must have the same length"));
        }
        for c in [&first, &second] {
            if c.anticode.parity != DiameterParity::Odd || c.anticode.radius != 1 {
                return Err(Error::param(
                    "the doubling needs distance-4 codes (anticode S'_{n,1})",
                ));
            }
        }
        if perm.size() != 2 * first.n {
            return Err(Error::param(format!(
                "permutation has size {}, need 2n = {}",
                perm.size(),
                2 * first.n
            )));
        }
        let n = 2 * first.n;
        let backing = Backing::Product {
            first: Box::new(first),
            second: Box::new(second),
            perm,
        };
        CenterSet::assemble(n, backing, AnticodeSpec::odd(n, 1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn anticode(&self) -> &AnticodeSpec {
        &self.anticode
    }

    pub fn backing(&self) -> &Backing {
        &self.backing
    }

    pub fn contains(&self, x: &[i64]) -> Result<bool> {
        if x.len() != self.n {
            return Err(Error::dim(format!(
                "point of length {} for a length-{} set",
                x.len(),
                self.n
            )));
        }
        match &self.backing {
            Backing::Lattice(l) => Ok(l.contains(x)),
            Backing::Sequence(s) => {
                let k = s.radius as i64 + 1;
                let diff = x[0] - x[1];
                if diff.rem_euclid(2 * k) != 0 {
                    return Ok(false);
                }
                let s_i = s.get(diff.div_euclid(2 * k))? as i64;
                Ok((x[1] - s_i).rem_euclid(k) == 0)
            }
            Backing::Product {
                first,
                second,
                perm,
            } => {
                let (a, b) = x.split_at(first.n);
                let (Some(i), Some(j)) = (
                    first.even_translate_index(a)?,
                    second.even_translate_index(b)?,
                ) else {
                    return Ok(false);
                };
                Ok(perm.apply(i) == j)
            }
        }
    }

    /// Even-weight anticode offsets, in `(weight, lexicographic)` order, so
    /// the set itself comes first.
    pub fn even_translate_vectors(&self) -> &[Vec<i64>] {
        &self.even_vectors
    }

    /// Index of the even translate containing `x`, or `None` for a point of
    /// an odd translate.
    pub fn even_translate_index(&self, x: &[i64]) -> Result<Option<usize>> {
        let mut y = vec![0i64; x.len()];
        for (k, a) in self.even_vectors.iter().enumerate() {
            for ((yi, xi), ai) in y.iter_mut().zip(x).zip(a) {
                *yi = xi - ai;
            }
            if self.contains(&y)? {
                return Ok(Some(k));
            }
        }
        Ok(None)
    }

    pub fn centers_in(&self, window: &Window, limits: &Limits) -> Result<Vec<Vec<i64>>> {
        limits.check("window center scan", window.volume())?;
        window
            .points()
            .par_bridge()
            .map(|p| Ok(self.contains(&p)?.then_some(p)))
            .collect::<Result<Vec<Option<Vec<i64>>>>>()
            .map(|v| {
                let mut v: Vec<Vec<i64>> = v.into_iter().flatten().collect();
                v.sort();
                v
            })
    }

    /// Indices `i` of the strips that can meet `window` grown by `margin`.
    pub fn strip_index_range(radius: u64, window: &Window, margin: i64) -> (i64, i64) {
        let k2 = 2 * (radius as i64 + 1);
        let lo = window.lo[0] - margin - (window.hi[1] + margin);
        let hi = window.hi[0] + margin - (window.lo[1] - margin);
        (lo.div_euclid(k2) - 1, hi.div_euclid(k2) + 2)
    }
}

/// The diagonal-strip center set `T` for a sequence over `Z_{R+1}`, with the
/// anticode `S'_{2,R}` oriented along the first axis.
pub fn build_center_set(seq: StripSequence) -> Result<CenterSet> {
    let radius = seq.radius;
    let axis = strip_orientation(radius)?;
    CenterSet::assemble(
        2,
        Backing::Sequence(seq),
        AnticodeSpec::odd(2, radius).with_axis(axis),
    )
}

/// The first axis along which the seed pair of `S'_{2,R}` makes the
/// constant-sequence center set an exact tiling.
pub fn strip_orientation(radius: u64) -> Result<usize> {
    let side = 4 * (radius as i64 + 1);
    let window = Window::new(vec![0, 0], vec![side, side])?;
    let margin = 2 * (radius as i64 + 1);
    let (lo, hi) = CenterSet::strip_index_range(radius, &window, margin);
    let seq = StripSequence::new(radius, lo, vec![0; (hi - lo) as usize])?;
    for axis in 0..2 {
        let set = CenterSet::assemble(
            2,
            Backing::Sequence(seq.clone()),
            AnticodeSpec::odd(2, radius).with_axis(axis),
        )?;
        if verify_window_tiling(&set, &window, &Limits::default())?.exact_cover {
            return Ok(axis);
        }
    }
    Err(Error::Structural(format!(
        "no anticode orientation tiles the constant strip set for R={radius}"
    )))
}

/// A half-open box `lo <= x < hi` in `Z^n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Window {
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

impl Window {
    pub fn new(lo: Vec<i64>, hi: Vec<i64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() {
            return Err(Error::dim(
                "window bounds must be non-empty and of equal length",
            ));
        }
        if lo.iter().zip(&hi).any(|(a, b)| a >= b) {
            return Err(Error::param("window must have lo < hi on every axis"));
        }
        Ok(Window { lo, hi })
    }

    pub fn cube(n: usize, lo: i64, hi: i64) -> Result<Self> {
        Window::new(vec![lo; n], vec![hi; n])
    }

    pub fn n(&self) -> usize {
        self.lo.len()
    }

    pub fn sides(&self) -> Vec<u64> {
        self.lo
            .iter()
            .zip(&self.hi)
            .map(|(a, b)| (b - a) as u64)
            .collect()
    }

    pub fn volume(&self) -> u64 {
        self.sides().iter().product()
    }

    pub fn grown(&self, margin: i64) -> Window {
        Window {
            lo: self.lo.iter().map(|a| a - margin).collect(),
            hi: self.hi.iter().map(|b| b + margin).collect(),
        }
    }

    pub fn contains(&self, p: &[i64]) -> bool {
        p.iter()
            .zip(&self.lo)
            .zip(&self.hi)
            .all(|((x, a), b)| a <= x && x < b)
    }

    /// Row-major index, last coordinate fastest.
    pub fn index(&self, p: &[i64]) -> usize {
        p.iter()
            .zip(&self.lo)
            .zip(self.sides())
            .fold(0usize, |acc, ((x, a), s)| {
                acc * s as usize + (x - a) as usize
            })
    }

    pub fn point(&self, mut idx: usize) -> Vec<i64> {
        let sides = self.sides();
        let mut p = vec![0i64; self.n()];
        for k in (0..self.n()).rev() {
            p[k] = self.lo[k] + (idx % sides[k] as usize) as i64;
            idx /= sides[k] as usize;
        }
        p
    }

    pub fn points(&self) -> impl Iterator<Item = Vec<i64>> + Send + '_ {
        (0..self.volume() as usize).map(move |i| self.point(i))
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WindowReport {
    pub window: Window,
    /// Centers are collected from the window grown by this much on every side.
    pub margin: i64,
    pub anticode: AnticodeSpec,
    pub centers: u64,
    /// Multiplicity -> number of window points covered that many times.
    pub histogram: BTreeMap<u64, u64>,
    pub exact_cover: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_defect: Option<Vec<i64>>,
    #[serde(skip)]
    pub multiplicity: Vec<u32>,
}

/// Places the anticode at every center near the window and records how often
/// each window point is covered.
pub fn verify_window_tiling(
    set: &CenterSet,
    window: &Window,
    limits: &Limits,
) -> Result<WindowReport> {
    let radius = set.anticode.radius as i64;
    if window.n() != set.n {
        return Err(Error::dim("window and center set dimensions differ"));
    }
    if window.sides().iter().any(|&s| s < 4 * (radius as u64 + 1)) {
        return Err(Error::param(format!(
            "window sides must be at least 4(R+1) = {}",
            4 * (radius + 1)
        )));
    }
    let margin = 2 * (radius + 1);
    let centers = set.centers_in(&window.grown(margin), limits)?;
    let mut report = cover_window(&centers, &set.anticode, window, limits)?;
    report.margin = margin;
    Ok(report)
}

/// Window cover check for an explicit list of centers.
pub fn cover_window(
    centers: &[Vec<i64>],
    anticode: &AnticodeSpec,
    window: &Window,
    limits: &Limits,
) -> Result<WindowReport> {
    limits.check("window multiplicity map", window.volume())?;
    let offsets = metrics::anticode_offsets(anticode)?;
    let mut multiplicity = vec![0u32; window.volume() as usize];
    let mut p = vec![0i64; window.n()];
    for c in centers {
        for off in &offsets {
            for ((pi, ci), oi) in p.iter_mut().zip(c).zip(off) {
                *pi = ci + oi;
            }
            if window.contains(&p) {
                multiplicity[window.index(&p)] += 1;
            }
        }
    }
    let mut histogram = BTreeMap::new();
    for &k in &multiplicity {
        *histogram.entry(k as u64).or_insert(0) += 1;
    }
    let first_defect = multiplicity
        .iter()
        .position(|&k| k != 1)
        .map(|i| window.point(i));
    Ok(WindowReport {
        window: window.clone(),
        margin: 0,
        anticode: *anticode,
        centers: centers.len() as u64,
        exact_cover: first_defect.is_none(),
        histogram,
        first_defect,
        multiplicity,
    })
}

/// Binary PGM (P5) image of a 2-D report's multiplicities, top row = largest
/// second coordinate.
pub fn pgm_bytes(report: &WindowReport) -> Result<Vec<u8>> {
    if report.window.n() != 2 {
        return Err(Error::dim("PGM output needs a 2-D window"));
    }
    let sides = report.window.sides();
    let (w, h) = (sides[0] as usize, sides[1] as usize);
    let max = report
        .multiplicity
        .iter()
        .copied()
        .max()
        .unwrap_or(0)
        .clamp(1, 255);
    let mut out = format!("P5\n{w} {h}\n{max}\n").into_bytes();
    for row in (0..h).rev() {
        for col in 0..w {
            out.push(report.multiplicity[col * h + row].min(255) as u8);
        }
    }
    Ok(out)
}

/// Indicator of a center set over a window.
pub fn membership_bitmap(set: &CenterSet, window: &Window, limits: &Limits) -> Result<Vec<bool>> {
    limits.check("membership bitmap", window.volume())?;
    (0..window.volume() as usize)
        .into_par_iter()
        .map(|i| set.contains(&window.point(i)))
        .collect()
}

/// Vectors `v` with `‖v‖∞ <= max` (and `v ≠ 0`) such that
/// `b(p + v) = a(p)` for every `p` with both `p` and `p + v` in the window.
pub fn translation_probe(
    a: &[bool],
    b: &[bool],
    window: &Window,
    candidates: &[Vec<i64>],
) -> Vec<Vec<i64>> {
    let sides: Vec<i64> = window.sides().iter().map(|&s| s as i64).collect();
    let n = sides.len();
    let mut strides = vec![1i64; n];
    for k in (0..n.saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * sides[k + 1];
    }
    candidates
        .par_iter()
        .filter(|v| {
            // Overlap region in window coordinates.
            let lo: Vec<i64> = v.iter().map(|&c| (-c).max(0)).collect();
            let hi: Vec<i64> = v.iter().zip(&sides).map(|(&c, &s)| s - c.max(0)).collect();
            if lo.iter().zip(&hi).any(|(l, h)| l >= h) {
                return false;
            }
            let shift: i64 = v.iter().zip(&strides).map(|(c, s)| c * s).sum();
            let mut p = lo.clone();
            let mut idx: i64 = p.iter().zip(&strides).map(|(c, s)| c * s).sum();
            loop {
                if a[idx as usize] != b[(idx + shift) as usize] {
                    return false;
                }
                let mut k = n;
                loop {
                    if k == 0 {
                        return true;
                    }
                    k -= 1;
                    p[k] += 1;
                    idx += strides[k];
                    if p[k] < hi[k] {
                        break;
                    }
                    idx -= (p[k] - lo[k]) * strides[k];
                    p[k] = lo[k];
                }
            }
        })
        .cloned()
        .collect()
}

fn box_candidates(n: usize, max: i64) -> Vec<Vec<i64>> {
    let w = Window::cube(n, -max, max + 1).expect("non-empty box");
    w.points().filter(|v| v.iter().any(|&c| c != 0)).collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct ProbeReport {
    pub window: Window,
    pub max_period: u64,
    pub candidates: u64,
    pub survivors: Vec<Vec<i64>>,
}

/// Every nonzero `v` with `‖v‖∞ <= max_period` under which the center set
/// agrees with its own translate on the overlap with the window.
///
/// The window must be longer than `2·max_period` on every axis so each
/// candidate is compared on a region at least half the window wide.
pub fn tiling_periodicity_probe(
    set: &CenterSet,
    window: &Window,
    max_period: u64,
    limits: &Limits,
) -> Result<ProbeReport> {
    check_probe_window(window, max_period)?;
    let bits = membership_bitmap(set, window, limits)?;
    let candidates = box_candidates(set.n, max_period as i64);
    let survivors = translation_probe(&bits, &bits, window, &candidates);
    Ok(ProbeReport {
        window: window.clone(),
        max_period,
        candidates: candidates.len() as u64,
        survivors,
    })
}

/// Like `tiling_periodicity_probe`, restricted to axis-aligned vectors
/// `k·e_i`, `1 <= k <= max_period`.
pub fn axis_period_probe(
    set: &CenterSet,
    window: &Window,
    max_period: u64,
    limits: &Limits,
) -> Result<ProbeReport> {
    check_probe_window(window, max_period)?;
    let bits = membership_bitmap(set, window, limits)?;
    let candidates: Vec<Vec<i64>> = (0..set.n)
        .flat_map(|i| {
            (1..=max_period as i64).map(move |k| {
                let mut v = vec![0; set.n];
                v[i] = k;
                v
            })
        })
        .collect();
    let survivors = translation_probe(&bits, &bits, window, &candidates);
    Ok(ProbeReport {
        window: window.clone(),
        max_period,
        candidates: candidates.len() as u64,
        survivors,
    })
}

/// Vectors `v` with `‖v‖∞ <= max` such that `b ∩ window` equals `(a + v)`
/// on the overlap.
pub fn find_translations(
    a: &CenterSet,
    b: &CenterSet,
    window: &Window,
    max: u64,
    limits: &Limits,
) -> Result<Vec<Vec<i64>>> {
    check_probe_window(window, max)?;
    let ba = membership_bitmap(a, window, limits)?;
    let bb = membership_bitmap(b, window, limits)?;
    Ok(translation_probe(
        &ba,
        &bb,
        window,
        &box_candidates(a.n, max as i64),
    ))
}

fn check_probe_window(window: &Window, max_period: u64) -> Result<()> {
    if window.sides().iter().any(|&s| s <= 2 * max_period) {
        return Err(Error::param(format!(
            "probe window must be longer than 2 x {max_period} on every axis"
        )));
    }
    Ok(())
}

/// A shift pair `(τ, ρ)` with `s_i = s_{i+τ} + ρ (mod R+1)` throughout the
/// window.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ShiftWitness {
    pub tau: i64,
    pub rho: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SequenceReport {
    /// No witness with `τ ≠ 0` and any `ρ`.
    pub nonperiodic: bool,
    /// No witness with `ρ ≢ 0`, the quantifier exactly as worded.
    pub nonperiodic_literal: bool,
    pub max_shift: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<ShiftWitness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness_literal: Option<ShiftWitness>,
}

/// Searches shifts `1 <= τ <= L/4` over the index window `[lo, hi)` of
/// length `L`, so every candidate is compared on at least `3L/4` indices.
pub fn sequence_report(seq: &StripSequence, lo: i64, hi: i64) -> Result<SequenceReport> {
    if hi <= lo {
        return Err(Error::param("empty index window"));
    }
    let values: Vec<u64> = (lo..hi).map(|i| seq.get(i)).collect::<Result<_>>()?;
    let k = seq.radius + 1;
    let len = values.len() as i64;
    let max_shift = (len / 4).max(1).min(len - 1);
    let mut witness = None;
    let mut witness_literal = None;
    for tau in 1..=max_shift {
        let t = tau as usize;
        let rho = (values[0] + k - values[t]) % k;
        let holds = values
            .iter()
            .zip(&values[t..])
            .all(|(a, b)| (a + k - b) % k == rho);
        if holds {
            let w = ShiftWitness { tau, rho };
            witness.get_or_insert(w);
            if rho != 0 {
                witness_literal.get_or_insert(w);
            }
        }
        if witness.is_some() && witness_literal.is_some() {
            break;
        }
    }
    Ok(SequenceReport {
        nonperiodic: witness.is_none(),
        nonperiodic_literal: witness_literal.is_none(),
        max_shift,
        witness,
        witness_literal,
    })
}

/// True when no shift pair `(τ ≠ 0, ρ)` fits the window.
pub fn sequence_nonperiodic(seq: &StripSequence, lo: i64, hi: i64) -> Result<bool> {
    Ok(sequence_report(seq, lo, hi)?.nonperiodic)
}

/// The strip center set for `generator` with enough indices to cover
/// `window` (grown by the verification margin).
pub fn strip_set_for_window(
    generator: SequenceGenerator,
    radius: u64,
    window: &Window,
) -> Result<CenterSet> {
    let margin = 2 * (radius as i64 + 1);
    let (lo, hi) = CenterSet::strip_index_range(radius, window, margin);
    build_center_set(generator.generate(radius, lo, (hi - lo) as usize)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::base::diameter_2d_family;

    fn limits() -> Limits {
        Limits::default()
    }

    /// `⌊iφ⌋` through a 30-digit fixed-point expansion of φ.
    fn floor_phi_reference(i: i64) -> i64 {
        let phi_scaled: i128 = 1_618_033_988_749_894_848_204_586_834_366; // φ·10^30
        let scale: i128 = 1_000_000_000_000_000_000_000_000_000_000;
        (i as i128 * phi_scaled).div_euclid(scale) as i64
    }

    #[test]
    fn exact_golden_floor() {
        for i in -2000..2000 {
            assert_eq!(floor_phi(i), floor_phi_reference(i), "i = {i}");
        }
    }

    #[test]
    fn fibonacci_word_prefix() {
        let s = SequenceGenerator::Fibonacci.generate(1, 1, 13).unwrap();
        // Fibonacci word 0100101001001 (with 1 <-> 0 per the floor formula).
        let word: String = s.values.iter().map(|v| v.to_string()).collect();
        let expected: String = (1..14)
            .map(|i| (floor_phi(i + 1) - floor_phi(i) - 1).to_string())
            .collect();
        assert_eq!(word, expected);
        assert_eq!(&word[..8], "10110101");
    }

    #[test]
    fn constant_sequence_gives_the_strip_lattice() {
        for r in 1..=3u64 {
            let k = r as i64 + 1;
            let window = Window::cube(2, -10, 10).unwrap();
            let set = strip_set_for_window(SequenceGenerator::Constant(0), r, &window).unwrap();
            let lattice = Lattice::new(vec![vec![k, k], vec![2 * k, 0]]).unwrap();
            for p in window.points() {
                assert_eq!(set.contains(&p).unwrap(), lattice.contains(&p), "{p:?}");
            }
        }
    }

    #[test]
    fn strips_lie_on_diagonals() {
        let window = Window::cube(2, -30, 30).unwrap();
        let set = strip_set_for_window(SequenceGenerator::Random(3), 2, &window).unwrap();
        let centers = set.centers_in(&window, &limits()).unwrap();
        let mut by_strip: BTreeMap<i64, Vec<&Vec<i64>>> = BTreeMap::new();
        for c in &centers {
            by_strip
                .entry((c[0] - c[1]).div_euclid(6))
                .or_default()
                .push(c);
        }
        for pts in by_strip.values() {
            let d = pts[0][0] - pts[0][1];
            assert!(pts.iter().all(|p| p[0] - p[1] == d));
        }
    }

    #[test]
    fn sequence_range_errors() {
        let seq = StripSequence::new(1, 0, vec![0, 1, 0]).unwrap();
        let set = build_center_set(seq).unwrap();
        assert!(matches!(
            set.contains(&[100, 0]),
            Err(Error::SequenceRange { .. })
        ));
        assert!(StripSequence::new(1, 0, vec![2]).is_err());
    }

    #[test]
    fn window_tilings() {
        let window = Window::cube(2, 0, 100).unwrap();
        let set = strip_set_for_window(SequenceGenerator::Constant(0), 1, &window).unwrap();
        let report = verify_window_tiling(&set, &window, &limits()).unwrap();
        assert!(report.exact_cover);
        assert_eq!(report.histogram.get(&1), Some(&10_000));
        for r in 1..=3 {
            let window = Window::cube(2, -20, 40).unwrap();
            let set = strip_set_for_window(SequenceGenerator::Fibonacci, r, &window).unwrap();
            assert!(
                verify_window_tiling(&set, &window, &limits())
                    .unwrap()
                    .exact_cover
            );
        }
    }

    #[test]
    fn lattice_family_tiles() {
        for r in 1..=4u64 {
            for i in 0..=r {
                let l = diameter_2d_family(r, i).unwrap();
                let set = CenterSet::from_lattice(l, AnticodeSpec::odd(2, r)).unwrap();
                let window = Window::cube(2, -12, 12).unwrap();
                let report = verify_window_tiling(&set, &window, &limits()).unwrap();
                assert!(report.exact_cover, "R={r} i={i}: {:?}", report.histogram);
            }
        }
    }

    #[test]
    fn corrupted_center_is_reported() {
        let window = Window::cube(2, 0, 24).unwrap();
        let set = strip_set_for_window(SequenceGenerator::Alternating, 1, &window).unwrap();
        let mut centers = set.centers_in(&window.grown(4), &limits()).unwrap();
        let target = centers.iter().position(|c| window.contains(c)).unwrap();
        centers[target][0] += 1;
        let report = cover_window(&centers, set.anticode(), &window, &limits()).unwrap();
        assert!(!report.exact_cover);
        assert!(report.histogram.keys().any(|&k| k != 1));
    }

    #[test]
    fn sequence_periodicity_readings() {
        let constant = SequenceGenerator::Constant(0).generate(1, 0, 100).unwrap();
        let rep = sequence_report(&constant, 0, 100).unwrap();
        assert!(!rep.nonperiodic);
        assert!(rep.nonperiodic_literal);
        assert_eq!(rep.witness, Some(ShiftWitness { tau: 1, rho: 0 }));

        let fib = SequenceGenerator::Fibonacci.generate(1, 0, 1000).unwrap();
        for len in [10, 100, 1000] {
            assert!(sequence_nonperiodic(&fib, 0, len).unwrap());
        }

        // s_{i+2} = s_i + 1 over Z_3.
        let values: Vec<u64> = (0..60).map(|i| (i / 2) % 3).collect();
        let climbing = StripSequence::new(2, 0, values).unwrap();
        let rep = sequence_report(&climbing, 0, 60).unwrap();
        assert!(!rep.nonperiodic && !rep.nonperiodic_literal);
        assert_eq!(rep.witness_literal, Some(ShiftWitness { tau: 2, rho: 2 }));
    }

    #[test]
    fn probes() {
        let window = Window::cube(2, 0, 40).unwrap();
        let lat = CenterSet::from_lattice(
            Lattice::new(vec![vec![2, 2], vec![0, 4]]).unwrap(),
            AnticodeSpec::odd(2, 1),
        )
        .unwrap();
        let rep = tiling_periodicity_probe(&lat, &window, 4, &limits()).unwrap();
        assert!(rep.survivors.contains(&vec![2, 2]));
        assert!(rep.survivors.contains(&vec![0, 4]));
        assert!(rep.survivors.iter().all(|v| lat.contains(v).unwrap()));

        for r in 1..=2u64 {
            let k = r as i64 + 1;
            let c = strip_set_for_window(SequenceGenerator::Constant(0), r, &window).unwrap();
            let rep = tiling_periodicity_probe(&c, &window, 6, &limits()).unwrap();
            assert!(rep.survivors.contains(&vec![k, k]));
            let f = strip_set_for_window(SequenceGenerator::Fibonacci, r, &window).unwrap();
            assert!(axis_period_probe(&f, &window, 19, &limits())
                .unwrap()
                .survivors
                .is_empty());
            // Every strip set is invariant along its own diagonal.
            let rep = tiling_periodicity_probe(&f, &window, 6, &limits()).unwrap();
            assert!(rep.survivors.iter().all(|v| v[0] == v[1] && v[0] % k == 0));
        }
    }

    #[test]
    fn shifted_sequence_translates_the_tiling() {
        let window = Window::cube(2, 0, 40).unwrap();
        let (lo, hi) = CenterSet::strip_index_range(2, &window, 6);
        let seq = SequenceGenerator::Fibonacci
            .generate(2, lo, (hi - lo) as usize)
            .unwrap();
        let a = build_center_set(seq.clone()).unwrap();
        let b = build_center_set(seq.shifted(1)).unwrap();
        let found = find_translations(&a, &b, &window, 4, &limits()).unwrap();
        assert!(found.contains(&vec![1, 1]));
        assert!(
            verify_window_tiling(&b, &window, &limits())
                .unwrap()
                .exact_cover
        );
    }

    #[test]
    fn pgm_output() {
        let window = Window::cube(2, 0, 8).unwrap();
        let set = strip_set_for_window(SequenceGenerator::Constant(0), 1, &window).unwrap();
        let report = verify_window_tiling(&set, &window, &limits()).unwrap();
        let bytes = pgm_bytes(&report).unwrap();
        assert!(bytes.starts_with(b"P5\n8 8\n1\n"));
        assert_eq!(bytes.len(), b"P5\n8 8\n1\n".len() + 64);
    }
}
