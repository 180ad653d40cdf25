//! Distances, weights, sphere and anticode sizes, and the enumerators that
//! materialize spheres and anticodes as explicit point sets.
//!
//! All size formulas are evaluated in exact big-integer arithmetic.

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Limits, Result};
use crate::word::{symbol_lee_weight, Modulus, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Lee,
    Manhattan,
    Hamming,
}

pub fn lee_distance(x: &Word, y: &Word) -> Result<u64> {
    x.same_shape(y)?;
    match x.modulus() {
        Modulus::Mod(m) => Ok(x
            .coords()
            .iter()
            .zip(y.coords())
            .map(|(a, b)| symbol_lee_weight(a - b, m))
            .sum()),
        Modulus::Unbounded => manhattan_distance(x, y),
    }
}

pub fn manhattan_distance(x: &Word, y: &Word) -> Result<u64> {
    if x.len() != y.len() {
        return Err(Error::dim(format!("lengths {} and {}", x.len(), y.len())));
    }
    Ok(x.coords()
        .iter()
        .zip(y.coords())
        .map(|(a, b)| a.abs_diff(*b))
        .sum())
}

pub fn hamming_distance(x: &Word, y: &Word) -> Result<u64> {
    x.same_shape(y)?;
    Ok(x.coords()
        .iter()
        .zip(y.coords())
        .filter(|(a, b)| a != b)
        .count() as u64)
}

pub fn distance(metric: Metric, x: &Word, y: &Word) -> Result<u64> {
    match metric {
        Metric::Lee => lee_distance(x, y),
        Metric::Manhattan => manhattan_distance(x, y),
        Metric::Hamming => hamming_distance(x, y),
    }
}

/// Lee weight; for words over `Z` this is the Manhattan weight.
pub fn lee_weight(x: &Word) -> u64 {
    match x.modulus() {
        Modulus::Mod(m) => x.coords().iter().map(|&c| symbol_lee_weight(c, m)).sum(),
        Modulus::Unbounded => manhattan_weight(x),
    }
}

pub fn manhattan_weight(x: &Word) -> u64 {
    x.coords().iter().map(|c| c.unsigned_abs()).sum()
}

pub fn hamming_weight(x: &Word) -> u64 {
    x.coords().iter().filter(|&&c| c != 0).count() as u64
}

pub(crate) fn lee_weight_of(coords: &[i64], m: u64) -> u64 {
    coords.iter().map(|&c| symbol_lee_weight(c, m)).sum()
}

pub(crate) fn weight_of(metric: Metric, coords: &[i64], m: u64) -> u64 {
    match metric {
        Metric::Lee => lee_weight_of(coords, m),
        Metric::Manhattan => coords.iter().map(|c| c.unsigned_abs()).sum(),
        Metric::Hamming => coords.iter().filter(|&&c| c != 0).count() as u64,
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Size of a Hamming sphere of radius `radius` in an `m`-ary space of length `n`.
/// Radii beyond `n` saturate at `n`.
pub fn hamming_sphere_size(n: u64, radius: u64, m: u64) -> Result<BigUint> {
    if m < 2 {
        return Err(Error::param(
            "Hamming spheres need an alphabet of size >= 2",
        ));
    }
    let radius = radius.min(n);
    let base = BigUint::from(m - 1);
    Ok((0..=radius)
        .map(|i| binomial(n, i) * num_traits::pow(base.clone(), i as usize))
        .sum())
}

/// `|S_{n,R}|`: points of `Z^n` within Manhattan distance `R` of a center.
pub fn lee_sphere_size(n: u64, radius: u64) -> BigUint {
    (0..=n.min(radius))
        .map(|i| (BigUint::one() << i as usize) * binomial(n, i) * binomial(radius, i))
        .sum()
}

/// `|S'_{n,R}|`: the odd-diameter anticode of diameter `2R + 1` in `Z^n`.
pub fn anticode_size(n: u64, radius: u64) -> BigUint {
    if n == 0 {
        return BigUint::zero();
    }
    (0..=(n - 1).min(radius))
        .map(|i| {
            (BigUint::one() << (i + 1) as usize) * binomial(n - 1, i) * binomial(radius + 1, i + 1)
        })
        .sum()
}

/// Exact size of the Lee ball of radius `radius` in `Z_m^n`, valid for any `m`.
pub fn modular_lee_ball_size(n: usize, m: u64, radius: u64) -> BigUint {
    let r = radius as usize;
    let mut per_symbol = vec![0u64; r + 1];
    for v in 0..m {
        let w = symbol_lee_weight(v as i64, m) as usize;
        if w <= r {
            per_symbol[w] += 1;
        }
    }
    let mut counts = vec![BigUint::zero(); r + 1];
    counts[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); r + 1];
        for (w, c) in counts.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (dw, &k) in per_symbol.iter().enumerate() {
                if w + dw <= r && k > 0 {
                    next[w + dw] += c * k;
                }
            }
        }
        counts = next;
    }
    counts.into_iter().sum()
}

pub(crate) fn to_u64_capped(value: &BigUint, what: &str, limits: &Limits) -> Result<u64> {
    match value.to_u64() {
        Some(v) => {
            limits.check(what, v)?;
            Ok(v)
        }
        None => Err(Error::cap(what, value, limits.max_points)),
    }
}

/// Whether an anticode has even diameter `2R` (a sphere) or odd diameter `2R + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiameterParity {
    Even,
    Odd,
}

/// Shape of a maximum anticode. `axis` is the 0-based coordinate along which
/// the seed pair of an odd anticode lies; it is ignored for even anticodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AnticodeSpec {
    pub n: usize,
    pub radius: u64,
    pub parity: DiameterParity,
    pub axis: usize,
}

impl AnticodeSpec {
    pub fn odd(n: usize, radius: u64) -> Self {
        AnticodeSpec {
            n,
            radius,
            parity: DiameterParity::Odd,
            axis: 0,
        }
    }

    pub fn even(n: usize, radius: u64) -> Self {
        AnticodeSpec {
            n,
            radius,
            parity: DiameterParity::Even,
            axis: 0,
        }
    }

    pub fn with_axis(mut self, axis: usize) -> Self {
        self.axis = axis;
        self
    }

    pub fn diameter(&self) -> u64 {
        match self.parity {
            DiameterParity::Even => 2 * self.radius,
            DiameterParity::Odd => 2 * self.radius + 1,
        }
    }

    /// Size of the anticode in `Z^n`.
    pub fn size(&self) -> BigUint {
        match self.parity {
            DiameterParity::Even => lee_sphere_size(self.n as u64, self.radius),
            DiameterParity::Odd => anticode_size(self.n as u64, self.radius),
        }
    }
}

/// All signed offset vectors of length `n` with Manhattan weight `<= radius`.
pub(crate) fn manhattan_ball_offsets(n: usize, radius: u64) -> Vec<Vec<i64>> {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for v in -left..=left {
            cur[i] = v;
            rec(i + 1, left - v.abs(), cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(0, radius as i64, &mut vec![0; n], &mut out);
    out
}

/// Reduced vectors of `Z_m^n` with Lee weight in `min_weight..=max_weight`.
pub(crate) fn modular_lee_ball_words(
    n: usize,
    m: u64,
    min_weight: u64,
    max_weight: u64,
) -> Vec<Vec<i64>> {
    let symbols: Vec<(i64, u64)> = (0..m as i64)
        .map(|v| (v, symbol_lee_weight(v, m)))
        .filter(|&(_, w)| w <= max_weight)
        .collect();
    fn rec(
        i: usize,
        used: u64,
        min_weight: u64,
        max_weight: u64,
        symbols: &[(i64, u64)],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == cur.len() {
            if used >= min_weight {
                out.push(cur.clone());
            }
            return;
        }
        for &(v, w) in symbols {
            if used + w <= max_weight {
                cur[i] = v;
                rec(i + 1, used + w, min_weight, max_weight, symbols, cur, out);
            }
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(
        0,
        0,
        min_weight,
        max_weight,
        &symbols,
        &mut vec![0; n],
        &mut out,
    );
    out
}

/// Offsets of `Z_m^n` with Hamming weight in `min_weight..=max_weight`.
pub(crate) fn hamming_ball_words(
    n: usize,
    m: u64,
    min_weight: u64,
    max_weight: u64,
) -> Vec<Vec<i64>> {
    fn rec(
        i: usize,
        used: u64,
        bounds: (u64, u64),
        m: i64,
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        if i == cur.len() {
            if used >= bounds.0 {
                out.push(cur.clone());
            }
            return;
        }
        cur[i] = 0;
        rec(i + 1, used, bounds, m, cur, out);
        if used < bounds.1 {
            for v in 1..m {
                cur[i] = v;
                rec(i + 1, used + 1, bounds, m, cur, out);
            }
            cur[i] = 0;
        }
    }
    let mut out = Vec::new();
    rec(
        0,
        0,
        (min_weight, max_weight),
        m as i64,
        &mut vec![0; n],
        &mut out,
    );
    out
}

/// Offset vectors (relative to the center) of every word in a ball of the
/// given metric. For Lee and Hamming the offsets are reduced mod `m`.
pub(crate) fn ball_offsets(metric: Metric, n: usize, m: u64, radius: u64) -> Vec<Vec<i64>> {
    match metric {
        Metric::Lee => modular_lee_ball_words(n, m, 0, radius),
        Metric::Hamming => hamming_ball_words(n, m, 0, radius.min(n as u64)),
        Metric::Manhattan => manhattan_ball_offsets(n, radius),
    }
}

pub(crate) fn predicted_ball_size(
    metric: Metric,
    n: usize,
    m: Option<u64>,
    radius: u64,
) -> BigUint {
    match (metric, m) {
        (Metric::Lee, Some(m)) => modular_lee_ball_size(n, m, radius),
        (Metric::Hamming, Some(m)) => {
            hamming_sphere_size(n as u64, radius, m.max(2)).unwrap_or_else(|_| BigUint::one())
        }
        _ => lee_sphere_size(n as u64, radius),
    }
}

/// The exact set of words within distance `radius` of `center`, sorted.
///
/// Lee spheres need a modular center; for `m < 2R + 1` the result is the true
/// modular ball, which is smaller than `S_{n,R}`.
pub fn enumerate_sphere(
    center: &Word,
    radius: u64,
    metric: Metric,
    limits: &Limits,
) -> Result<Vec<Word>> {
    let n = center.len();
    let m = match (metric, center.modulus()) {
        (Metric::Manhattan, Modulus::Unbounded) => None,
        (Metric::Manhattan, Modulus::Mod(_)) => {
            return Err(Error::dim(
                "Manhattan spheres live in Z^n; got a modular center",
            ))
        }
        (_, Modulus::Mod(m)) => Some(m),
        (Metric::Lee, Modulus::Unbounded) => None,
        (Metric::Hamming, Modulus::Unbounded) => {
            return Err(Error::dim("Hamming spheres need a finite alphabet"))
        }
    };
    let predicted = predicted_ball_size(metric, n, m, radius);
    to_u64_capped(&predicted, "sphere enumeration", limits)?;
    let offsets = match m {
        Some(m) => ball_offsets(metric, n, m, radius),
        None => manhattan_ball_offsets(n, radius),
    };
    let mut words: Vec<Word> = offsets
        .into_iter()
        .map(|off| {
            let coords: Vec<i64> = center
                .coords()
                .iter()
                .zip(&off)
                .map(|(c, o)| match m {
                    Some(m) => (c + o).rem_euclid(m as i64),
                    None => c + o,
                })
                .collect();
            match m {
                Some(m) => Word::modular(coords, m),
                None => Word::unbounded(coords),
            }
        })
        .collect::<Result<_>>()?;
    words.sort();
    Ok(words)
}

/// Materializes an anticode anchored at `anchor`.
///
/// Even parity yields the Lee sphere of radius `R` around the anchor. Odd
/// parity starts from the adjacent pair `{anchor, anchor + e_axis}` and adds
/// every neighbour of the current set `R` times.
pub fn enumerate_anticode(
    spec: &AnticodeSpec,
    anchor: &Word,
    limits: &Limits,
) -> Result<Vec<Word>> {
    if anchor.len() != spec.n {
        return Err(Error::dim(format!(
            "anchor length {} for an anticode in dimension {}",
            anchor.len(),
            spec.n
        )));
    }
    to_u64_capped(&spec.size(), "anticode enumeration", limits)?;
    match spec.parity {
        DiameterParity::Even => enumerate_sphere(anchor, spec.radius, Metric::Lee, limits),
        DiameterParity::Odd => {
            if spec.axis >= spec.n {
                return Err(Error::param(format!(
                    "axis {} out of range for dimension {}",
                    spec.axis, spec.n
                )));
            }
            let modulus = anchor.modulus();
            let normalize = |mut v: Vec<i64>| {
                if let Modulus::Mod(m) = modulus {
                    for c in v.iter_mut() {
                        *c = c.rem_euclid(m as i64);
                    }
                }
                v
            };
            let alpha = anchor.coords().to_vec();
            let mut beta = alpha.clone();
            beta[spec.axis] += 1;
            let mut set: HashSet<Vec<i64>> = HashSet::new();
            let mut frontier = vec![normalize(alpha), normalize(beta)];
            set.extend(frontier.iter().cloned());
            for _ in 0..spec.radius {
                let mut next = Vec::new();
                for p in &frontier {
                    for axis in 0..spec.n {
                        for step in [-1, 1] {
                            let mut q = p.clone();
                            q[axis] += step;
                            let q = normalize(q);
                            if set.insert(q.clone()) {
                                next.push(q);
                            }
                        }
                    }
                }
                frontier = next;
            }
            let mut words: Vec<Word> = set
                .into_iter()
                .map(|c| match modulus {
                    Modulus::Mod(m) => Word::modular(c, m),
                    Modulus::Unbounded => Word::unbounded(c),
                })
                .collect::<Result<_>>()?;
            words.sort();
            Ok(words)
        }
    }
}

/// Signed offsets of the anticode anchored at the origin of `Z^n`, ordered by
/// Manhattan weight and then lexicographically. The origin comes first.
pub fn anticode_offsets(spec: &AnticodeSpec) -> Result<Vec<Vec<i64>>> {
    let origin = Word::zero(spec.n, Modulus::Unbounded);
    let mut offsets: Vec<Vec<i64>> = enumerate_anticode(spec, &origin, &Limits::default())?
        .into_iter()
        .map(Word::into_coords)
        .collect();
    offsets.sort_by_key(|v| (v.iter().map(|c| c.unsigned_abs()).sum::<u64>(), v.clone()));
    Ok(offsets)
}
