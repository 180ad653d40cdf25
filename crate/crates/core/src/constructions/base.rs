//! The non-product constructions: Golomb–Welch codes, the parity-check
//! perfect Lee codes, the `Λ(G_n)` family, the 2-D even-distance family, the
//! Minkowski lattice, q-ary Hamming codes and the `(2,4,8,4)` seed.

use num_bigint::BigUint;

use super::field::FieldTable;
use crate::codes::{Membership, ModularCode};
use crate::error::{Error, Limits, Result};
use crate::lattice::{prime_factors, Lattice, LatticeCode};
use crate::metrics::Metric;
use crate::verify::{self, Mode};
use crate::word::Space;

/// `{x ∈ Z_m^n : Σ i·x_i ≡ 0 mod 2n+1}` with `m = τ(2n+1)`.
///
/// Every residue class of the check sum is hit by exactly one of the
/// `2n + 1` unit translates, so these are perfect single-error-correcting
/// codes for every `τ`.
pub fn lee_single_error_code(n: usize, tau: u64, limits: &Limits) -> Result<ModularCode> {
    if n == 0 || tau == 0 {
        return Err(Error::param(
            "lee_single_error_code needs n >= 1 and tau >= 1",
        ));
    }
    let p = 2 * n as u64 + 1;
    let m = tau * p;
    let space = Space::new(n, m)?;
    limits.check("lee_single_error_code", space.size() / p)?;
    let prefix = Space::new(n, m)?.size() / m;
    // n is invertible mod 2n+1: n·(-2) = -2n ≡ 1.
    let inv_n = p - 2;
    let mut words = Vec::with_capacity((space.size() / p) as usize);
    let mut coords = vec![0i64; n];
    for head in 0..prefix {
        let mut rest = head;
        let mut check = 0u64;
        for i in (0..n - 1).rev() {
            coords[i] = (rest % m) as i64;
            rest /= m;
            check = (check + (i as u64 + 1) * coords[i] as u64) % p;
        }
        let last = (p - check) % p * inv_n % p;
        for k in 0..tau {
            coords[n - 1] = (last + k * p) as i64;
            words.push(space.pack(&coords));
        }
    }
    ModularCode::from_linear_words(space, Metric::Lee, words)
}

/// Product of the distinct prime factors of `2n + 1`.
pub fn smallest_perfect_alphabet(n: u64) -> u64 {
    prime_factors(2 * n + 1).into_iter().product()
}

/// The perfect `R`-error-correcting Lee code of length 2 over
/// `Z_{2R²+2R+1}`, checked by a full cover of the space.
pub fn golomb_welch_2d(radius: u64, limits: &Limits) -> Result<LatticeCode> {
    if radius == 0 {
        return Err(Error::param("golomb_welch_2d needs R >= 1"));
    }
    let r = radius as i64;
    let lattice = Lattice::new(vec![vec![r + 1, r], vec![-r, r + 1]])?;
    let code = lattice.reduce_to_modular(limits)?;
    let cert = verify::is_perfect(&code.quotient, radius, Mode::Exhaustive, limits)?;
    if !cert.pass {
        return Err(Error::Structural(format!(
            "Golomb-Welch lattice for R={radius} failed its cover check"
        )));
    }
    Ok(code)
}

/// `Λ(G_n)`: `[I_{n-1} | (3,5,…,2n-1)^T ; 0 … 0 4n]`.
pub fn diameter4_lattice(n: usize) -> Result<Lattice> {
    if n < 2 {
        return Err(Error::param("diameter4_lattice needs n >= 2"));
    }
    let mut rows = vec![vec![0i64; n]; n];
    for (i, row) in rows.iter_mut().enumerate().take(n - 1) {
        row[i] = 1;
        row[n - 1] = 2 * i as i64 + 3;
    }
    rows[n - 1][n - 1] = 4 * n as i64;
    Lattice::new(rows)
}

/// `[[R+1+i, R+1-i], [i, 2(R+1)-i]]`, a diameter perfect code of minimum
/// distance `2(R+1)` against `S'_{2,R}`.
pub fn diameter_2d_family(radius: u64, i: u64) -> Result<Lattice> {
    if radius == 0 || i > radius {
        return Err(Error::param(format!(
            "diameter_2d_family needs R >= 1 and 0 <= i <= R, got R={radius}, i={i}"
        )));
    }
    let (r, i) = (radius as i64 + 1, i as i64);
    Lattice::new(vec![vec![r + i, r - i], vec![i, 2 * r - i]])
}

pub fn minkowski_code() -> Lattice {
    Lattice::new(vec![vec![1, -2, 3], vec![-2, 3, 1], vec![3, 1, -2]])
        .expect("Minkowski matrix is nonsingular")
}

/// The `(2,4,8,4)` code `{(0,0),(2,2)}` over `Z_4`.
pub fn seed_2484(limits: &Limits) -> Result<ModularCode> {
    Ok(diameter_2d_family(1, 0)?
        .reduce_to_modular(limits)?
        .quotient)
}

/// The q-ary Hamming code of redundancy `r` over `GF(q)`.
///
/// Parity-check columns are the vectors of `GF(q)^r` whose first nonzero
/// entry is 1, in increasing base-q order. Symbols are field element
/// indices, so the code is `GF(q)`-linear but, for prime powers, not closed
/// under addition mod `q`.
#[derive(Debug, Clone)]
pub struct HammingCode {
    field: FieldTable,
    r: usize,
    columns: Vec<Vec<u8>>,
}

impl HammingCode {
    /// `r = 1` gives the length-1 code `{0}`, which is trivially perfect.
    pub fn new(field: FieldTable, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::param("Hamming codes need r >= 1"));
        }
        let q = field.order();
        let total = q
            .checked_pow(r as u32)
            .filter(|&t| t < 1 << 40)
            .ok_or(Error::Overflow("q^r"))?;
        let columns = (1..total)
            .map(|mut v| {
                let mut col = vec![0u8; r];
                for slot in col.iter_mut().rev() {
                    *slot = (v % q) as u8;
                    v /= q;
                }
                col
            })
            .filter(|col| col.iter().find(|&&c| c != 0) == Some(&1))
            .collect();
        Ok(HammingCode { field, r, columns })
    }

    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.order()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    /// `(q^r - 1) / (q - 1)`.
    pub fn n(&self) -> usize {
        self.columns.len()
    }

    /// `q^{n-r}`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q()).pow((self.n() - self.r) as u32)
    }

    pub fn syndrome(&self, x: &[i64]) -> Vec<u8> {
        let mut s = vec![0u8; self.r];
        for (col, &xi) in self.columns.iter().zip(x) {
            if xi != 0 {
                for (sk, &ck) in s.iter_mut().zip(col) {
                    *sk = self.field.add(*sk, self.field.mul(ck, xi as u8));
                }
            }
        }
        s
    }

    pub fn materialize(&self, limits: &Limits) -> Result<ModularCode> {
        let (n, r, q) = (self.n(), self.r, self.q());
        let space = Space::new(n, q)?;
        let count = crate::metrics::to_u64_capped(&self.size(), "Hamming code", limits)?;
        let unit_pos: Vec<usize> = (0..r)
            .map(|k| {
                self.columns
                    .iter()
                    .position(|c| c.iter().enumerate().all(|(j, &v)| v == u8::from(j == k)))
                    .expect("unit columns are present")
            })
            .collect();
        let info: Vec<usize> = (0..n).filter(|j| !unit_pos.contains(j)).collect();
        let mut words = Vec::with_capacity(count as usize);
        let mut x = vec![0i64; n];
        for mut idx in 0..count {
            for &j in info.iter().rev() {
                x[j] = (idx % q) as i64;
                idx /= q;
            }
            for &p in &unit_pos {
                x[p] = 0;
            }
            let s = self.syndrome(&x);
            for (k, &p) in unit_pos.iter().enumerate() {
                x[p] = self.field.neg(s[k]) as i64;
            }
            debug_assert!(self.syndrome(&x).iter().all(|&v| v == 0));
            words.push(space.pack(&x));
        }
        ModularCode::from_packed(space, Metric::Hamming, words)
    }
}

impl Membership for HammingCode {
    fn n(&self) -> usize {
        self.columns.len()
    }

    fn modulus(&self) -> u64 {
        self.q()
    }

    fn contains(&self, coords: &[i64]) -> bool {
        self.syndrome(coords).iter().all(|&s| s == 0)
    }
}

/// `hamming_code(GF(q), r)` materialized.
pub fn hamming_code(q: u64, r: usize, limits: &Limits) -> Result<ModularCode> {
    HammingCode::new(FieldTable::new(q)?, r)?.materialize(limits)
}
