//! Perfectness, diameter perfectness, partition and local cover checks.
//! Every check returns a serializable certificate.

use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes::{
    anticode_translate_family, Membership, ModularCode, PartitionOutcome, TranslateFamily,
};
use crate::error::{Error, Limits, Result};
use crate::metrics::{self, Metric};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Exhaustive when the space fits the cap, formula otherwise.
    Auto,
    Exhaustive,
    Formula,
    Sampled,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Perfect,
    DiameterPerfect,
    LocalCover,
    Partition,
}

/// A point where a check failed, with the number of codewords (or
/// translates) that covered it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub point: Vec<i64>,
    pub multiplicity: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Certificate {
    pub property: Property,
    pub mode: Mode,
    pub pass: bool,
    pub n: usize,
    pub m: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub metric: Option<Metric>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub code_size: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub radius: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub distance: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_distance: Option<u64>,
    /// Sphere or anticode size, as a decimal string.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shape_size: Option<String>,
    pub space_size: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub size_identity: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_weights: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cover_checked: Option<bool>,
    pub points_checked: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<Violation>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub elapsed_ms: u64,
}

impl Certificate {
    fn new(property: Property, mode: Mode, n: usize, m: u64) -> Self {
        Certificate {
            property,
            mode,
            pass: false,
            n,
            m,
            metric: None,
            code_size: None,
            radius: None,
            distance: None,
            min_distance: None,
            shape_size: None,
            space_size: BigUint::from(m).pow(n as u32).to_string(),
            size_identity: None,
            even_weights: None,
            cover_checked: None,
            points_checked: 0,
            violation: None,
            seed: None,
            elapsed_ms: 0,
        }
    }

    fn finish(mut self, start: Instant) -> Self {
        self.elapsed_ms = start.elapsed().as_millis() as u64;
        self
    }
}

fn resolve(mode: Mode, space_size: u64, limits: &Limits) -> Mode {
    match mode {
        Mode::Auto if space_size <= limits.max_points => Mode::Exhaustive,
        Mode::Auto => Mode::Formula,
        other => other,
    }
}

/// Whether the radius-`R` balls (in the code's metric) around the
/// codewords partition `Z_m^n`.
pub fn is_perfect(
    code: &ModularCode,
    radius: u64,
    mode: Mode,
    limits: &Limits,
) -> Result<Certificate> {
    let start = Instant::now();
    let space = code.space();
    let (n, m) = (space.n(), space.m());
    if code.metric() == Metric::Manhattan {
        return Err(Error::param(
            "modular codes are checked in the Lee or Hamming metric",
        ));
    }
    let mode = resolve(mode, space.size(), limits);
    let mut cert = Certificate::new(Property::Perfect, mode, n, m);
    cert.metric = Some(code.metric());
    cert.code_size = Some(code.len() as u64);
    cert.radius = Some(radius);
    let ball = metrics::predicted_ball_size(code.metric(), n, Some(m), radius);
    let identity = BigUint::from(code.len()) * &ball == BigUint::from(space.size());
    cert.shape_size = Some(ball.to_string());
    cert.size_identity = Some(identity);
    match mode {
        Mode::Exhaustive => {
            limits.check("exhaustive cover check", space.size())?;
            let offsets = metrics::ball_offsets(code.metric(), n, m, radius);
            let (pass, checked, violation) = cover_multiplicities(code, &offsets)?;
            cert.pass = pass;
            cert.points_checked = checked;
            cert.violation = violation;
            cert.cover_checked = Some(true);
        }
        Mode::Formula => {
            let d = code.min_distance();
            cert.min_distance = d;
            cert.pass = identity && d.map_or(code.len() == 1, |d| d > 2 * radius);
        }
        Mode::Sampled | Mode::Auto => {
            return Err(Error::param(
                "is_perfect supports exhaustive and formula modes",
            ))
        }
    }
    Ok(cert.finish(start))
}

/// Places every ball and counts coverage of each point of the space.
fn cover_multiplicities(
    code: &ModularCode,
    offsets: &[Vec<i64>],
) -> Result<(bool, u64, Option<Violation>)> {
    let space = code.space();
    let n = space.n();
    let mut counts = vec![0u8; space.size() as usize];
    let mut scratch = vec![0i64; n];
    for &c in code.packed() {
        for off in offsets {
            let idx = space.add_offset(c, off, &mut scratch) as usize;
            counts[idx] = counts[idx].saturating_add(1);
        }
    }
    let bad = counts.par_iter().position_first(|&k| k != 1);
    let violation = bad.map(|i| Violation {
        point: space.unpack(i as u64),
        multiplicity: counts[i] as u64,
    });
    Ok((violation.is_none(), space.size(), violation))
}

/// Diameter perfectness for even `d = 2R + 2` against the anticode
/// `S'_{n,R}` of diameter `d - 1`.
///
/// Exhaustive mode computes the minimum distance directly and, when the
/// space fits the cap, also checks that the anticode translates of the code
/// tile `Z_m^n`. Both modes check that every codeword has even Lee weight.
pub fn is_diameter_perfect(
    code: &ModularCode,
    d: u64,
    mode: Mode,
    limits: &Limits,
) -> Result<Certificate> {
    let start = Instant::now();
    let space = code.space();
    let (n, m) = (space.n(), space.m());
    if d < 2 || !d.is_multiple_of(2) {
        return Err(Error::param(format!(
            "diameter perfectness is checked for even d >= 2, got {d}"
        )));
    }
    if m % 2 != 0 {
        return Err(Error::Structural(format!(
            "an even-distance diameter perfect Lee code needs an even alphabet, got Z_{m}"
        )));
    }
    let radius = (d - 2) / 2;
    if m < d {
        return Err(Error::param(format!(
            "S'_{{{n},{radius}}} does not embed in Z_{m}; need m >= {d}"
        )));
    }
    let mode = resolve(mode, space.size(), limits);
    let mut cert = Certificate::new(Property::DiameterPerfect, mode, n, m);
    cert.metric = Some(Metric::Lee);
    cert.code_size = Some(code.len() as u64);
    cert.distance = Some(d);
    cert.radius = Some(radius);
    let anticode = metrics::anticode_size(n as u64, radius);
    let identity = BigUint::from(code.len()) * &anticode == BigUint::from(space.size());
    cert.shape_size = Some(anticode.to_string());
    cert.size_identity = Some(identity);
    let (_, odd) = code.lee_parity_census();
    cert.even_weights = Some(odd == 0);
    let lee = code.clone().with_metric(Metric::Lee);
    let min_d = lee.min_distance();
    cert.min_distance = min_d;
    let distance_ok = min_d.is_some_and(|x| x >= d);
    let mut pass = identity && distance_ok && odd == 0;
    match mode {
        Mode::Exhaustive if pass && space.size() <= limits.max_points => {
            let family = anticode_translate_family(&lee, radius, 0, limits)?;
            let outcome = family.check_partition(limits)?;
            cert.cover_checked = Some(true);
            cert.points_checked = space.size();
            if let Some(v) = outcome_violation(&outcome) {
                cert.violation = Some(v);
                pass = false;
            }
        }
        Mode::Exhaustive => cert.cover_checked = Some(false),
        Mode::Formula => {}
        Mode::Sampled | Mode::Auto => {
            return Err(Error::param(
                "is_diameter_perfect supports exhaustive and formula modes",
            ))
        }
    }
    cert.pass = pass;
    Ok(cert.finish(start))
}

fn outcome_violation(outcome: &PartitionOutcome) -> Option<Violation> {
    match outcome {
        PartitionOutcome::Partition => None,
        PartitionOutcome::Collision { word, .. } => Some(Violation {
            point: word.coords().to_vec(),
            multiplicity: 2,
        }),
        PartitionOutcome::Uncovered(word) => Some(Violation {
            point: word.coords().to_vec(),
            multiplicity: 0,
        }),
    }
}

/// Seeded uniform points of `Z_m^n`.
pub fn sample_points(n: usize, m: u64, count: usize, seed: u64) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..n).map(|_| rng.gen_range(0..m) as i64).collect())
        .collect()
}

/// For each point, exactly one member of its radius-`R` Lee ball must
/// satisfy the oracle. A failure falsifies perfectness; a pass is evidence.
pub fn local_cover_check(
    oracle: &dyn Membership,
    points: &[Vec<i64>],
    radius: u64,
    seed: Option<u64>,
) -> Result<Certificate> {
    let start = Instant::now();
    let (n, m) = (oracle.n(), oracle.modulus());
    if let Some(p) = points.iter().find(|p| p.len() != n) {
        return Err(Error::dim(format!(
            "sample point of length {} for length-{n} code",
            p.len()
        )));
    }
    let offsets = metrics::modular_lee_ball_words(n, m, 0, radius);
    let failure = points
        .par_iter()
        .map(|x| {
            let mut y = vec![0i64; n];
            let hits = offsets
                .iter()
                .filter(|off| {
                    for ((yi, xi), oi) in y.iter_mut().zip(x).zip(off.iter()) {
                        *yi = (xi + oi).rem_euclid(m as i64);
                    }
                    oracle.contains(&y)
                })
                .count() as u64;
            (x, hits)
        })
        .find_first(|&(_, hits)| hits != 1);
    let mut cert = Certificate::new(Property::LocalCover, Mode::Sampled, n, m);
    cert.metric = Some(Metric::Lee);
    cert.radius = Some(radius);
    cert.shape_size = Some(offsets.len().to_string());
    cert.points_checked = points.len() as u64;
    cert.seed = seed;
    cert.violation = failure.map(|(x, hits)| Violation {
        point: x.clone(),
        multiplicity: hits,
    });
    cert.pass = cert.violation.is_none();
    Ok(cert.finish(start))
}

/// Explicit disjointness and cover check of a translate family.
pub fn partition_check(family: &TranslateFamily, limits: &Limits) -> Result<Certificate> {
    let start = Instant::now();
    let base = family.base();
    let mut cert = Certificate::new(Property::Partition, Mode::Exhaustive, base.n(), base.m());
    cert.metric = Some(base.metric());
    cert.code_size = Some(base.len() as u64);
    let outcome = family.check_partition(limits)?;
    cert.points_checked = base.space().size();
    cert.cover_checked = Some(true);
    cert.violation = outcome_violation(&outcome);
    cert.pass = cert.violation.is_none();
    Ok(cert.finish(start))
}
