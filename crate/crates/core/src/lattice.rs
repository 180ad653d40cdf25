//! Sublattices of `Z^n` given by an integer generator matrix, viewed as
//! linear codes in the Manhattan metric, and their reduction to Lee codes
//! over `Z_m` once a period `m` is known.
//!
//! Every query goes through the row Hermite normal form of the generator,
//! computed once in exact `i128` arithmetic when the lattice is built.

use crate::codes::ModularCode;
use crate::error::{Error, Limits, Result};
use crate::metrics::Metric;
use crate::word::{Space, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    rows: Vec<Vec<i64>>,
    /// Upper triangular, positive pivots, entries above each pivot reduced
    /// into `0..pivot`.
    hnf: Vec<Vec<i128>>,
}

impl Lattice {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::dim("generator matrix must have at least one row"));
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::dim(format!(
                "generator matrix must be square: row of length {} with {n} rows",
                bad.len()
            )));
        }
        let hnf = hermite_normal_form(&rows)?;
        Ok(Lattice { rows, hnf })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        Lattice::new(rows).expect("identity matrix is nonsingular")
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn hermite_form(&self) -> &[Vec<i128>] {
        &self.hnf
    }

    /// `|det G|`.
    pub fn volume(&self) -> u64 {
        self.hnf
            .iter()
            .enumerate()
            .map(|(i, r)| r[i] as u64)
            .product()
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        if x.len() != self.n() {
            return false;
        }
        let mut x: Vec<i128> = x.iter().map(|&c| c as i128).collect();
        for (i, row) in self.hnf.iter().enumerate() {
            let pivot = row[i];
            if x[i] % pivot != 0 {
                return false;
            }
            let q = x[i] / pivot;
            if q != 0 {
                for (xj, rj) in x[i..].iter_mut().zip(&row[i..]) {
                    *xj -= q * rj;
                }
            }
        }
        true
    }

    pub fn contains_word(&self, x: &Word) -> bool {
        self.contains(x.coords())
    }

    /// Canonical representative of `x + Λ` with `0 <= r_i < pivot_i`.
    pub fn coset_representative(&self, x: &[i64]) -> Vec<i64> {
        let mut x: Vec<i128> = x.iter().map(|&c| c as i128).collect();
        for (i, row) in self.hnf.iter().enumerate() {
            let q = x[i].div_euclid(row[i]);
            if q != 0 {
                for (xj, rj) in x[i..].iter_mut().zip(&row[i..]) {
                    *xj -= q * rj;
                }
            }
        }
        x.into_iter().map(|c| c as i64).collect()
    }

    /// Smallest `k > 0` with `k·x ∈ Λ`.
    pub fn order_of(&self, x: &[i64]) -> u64 {
        let mut order = self.volume();
        for p in prime_factors(order) {
            while order.is_multiple_of(p) {
                let candidate = order / p;
                let scaled: Vec<i64> = x.iter().map(|&c| c * candidate as i64).collect();
                if self.contains(&scaled) {
                    order = candidate;
                } else {
                    break;
                }
            }
        }
        order
    }

    /// Least common multiple of the per-axis periods `m_i`, each the smallest
    /// positive integer with `m_i·e_i ∈ Λ`.
    pub fn period(&self) -> u64 {
        (0..self.n()).map(|i| self.axis_period(i)).fold(1, lcm)
    }

    pub fn axis_period(&self, axis: usize) -> u64 {
        let mut e = vec![0; self.n()];
        e[axis] = 1;
        self.order_of(&e)
    }

    /// Minimum Manhattan weight of a nonzero lattice point.
    ///
    /// Searches exact-weight shells outward from the origin. Since
    /// `period·e_1 ∈ Λ`, the search never needs to exceed the period.
    pub fn min_manhattan_weight(&self, limits: &Limits) -> Result<u64> {
        let n = self.n();
        let bound = self.period();
        for w in 1..=bound {
            let shell = crate::metrics::lee_sphere_size(n as u64, w);
            crate::metrics::to_u64_capped(&shell, "Manhattan shell search", limits)?;
            if manhattan_shell_any(n, w, &mut |x| self.contains(x)) {
                return Ok(w);
            }
        }
        Ok(bound)
    }

    /// Reduces the lattice modulo its period to a linear Lee code.
    pub fn reduce_to_modular(&self, limits: &Limits) -> Result<LatticeCode> {
        let m = self.period();
        let space = Space::new(self.n(), m)?;
        let count = space.size() / self.volume();
        debug_assert_eq!(count * self.volume(), space.size());
        limits.check("lattice quotient", count)?;
        let mut words = Vec::with_capacity(count as usize);
        let mut partial = vec![0i128; self.n()];
        self.enumerate_box(0, m as i128, &mut partial, &space, &mut words);
        words.sort_unstable();
        let quotient = ModularCode::from_linear_words(space, Metric::Lee, words)?;
        Ok(LatticeCode {
            lattice: self.clone(),
            period: m,
            quotient,
        })
    }

    /// Lattice points in `[0, m)^n`, one per residue class mod `m`.
    fn enumerate_box(
        &self,
        i: usize,
        m: i128,
        partial: &mut [i128],
        space: &Space,
        out: &mut Vec<u64>,
    ) {
        if i == partial.len() {
            out.push(
                partial
                    .iter()
                    .fold(0u64, |acc, &c| acc * space.m() + c as u64),
            );
            return;
        }
        let row = &self.hnf[i];
        let h = row[i];
        let lo = (-partial[i]).div_euclid(h) + i128::from((-partial[i]).rem_euclid(h) != 0);
        let hi = (m - 1 - partial[i]).div_euclid(h);
        for t in lo..=hi {
            for (p, r) in partial[i..].iter_mut().zip(&row[i..]) {
                *p += t * r;
            }
            self.enumerate_box(i + 1, m, partial, space, out);
            for (p, r) in partial[i..].iter_mut().zip(&row[i..]) {
                *p -= t * r;
            }
        }
    }
}

/// A lattice together with its reduction modulo the period.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeCode {
    pub lattice: Lattice,
    pub period: u64,
    pub quotient: ModularCode,
}

/// The `(n, d, v, m)` parameter tuple of a lattice code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CodeParameters {
    pub n: usize,
    pub d: u64,
    pub v: u64,
    pub m: u64,
}

impl LatticeCode {
    pub fn size(&self) -> usize {
        self.quotient.len()
    }

    /// Minimum distance in the Lee metric on the quotient, or in the
    /// Manhattan metric on the lattice itself.
    pub fn min_distance(&self, metric: Metric, limits: &Limits) -> Result<u64> {
        match metric {
            Metric::Manhattan => self.lattice.min_manhattan_weight(limits),
            Metric::Lee => self.quotient.min_distance().ok_or_else(|| {
                Error::Structural("quotient has a single codeword; distance undefined".into())
            }),
            Metric::Hamming => Err(Error::param(
                "lattice codes use the Lee or Manhattan metric",
            )),
        }
    }

    pub fn parameters(&self, limits: &Limits) -> Result<CodeParameters> {
        Ok(CodeParameters {
            n: self.lattice.n(),
            d: self.lattice.min_manhattan_weight(limits)?,
            v: self.lattice.volume(),
            m: self.period,
        })
    }
}

/// Calls `hit` on every vector of exact Manhattan weight `w`; stops at the
/// first `true`.
pub(crate) fn manhattan_shell_any(n: usize, w: u64, hit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
    fn rec(i: usize, left: i64, cur: &mut Vec<i64>, hit: &mut dyn FnMut(&[i64]) -> bool) -> bool {
        let n = cur.len();
        if i == n - 1 {
            for v in [left, -left] {
                cur[i] = v;
                if hit(cur) {
                    return true;
                }
                if left == 0 {
                    break;
                }
            }
            cur[i] = 0;
            return false;
        }
        for v in -left..=left {
            cur[i] = v;
            if rec(i + 1, left - v.abs(), cur, hit) {
                return true;
            }
        }
        cur[i] = 0;
        false
    }
    rec(0, w as i64, &mut vec![0; n], hit)
}

fn hermite_normal_form(rows: &[Vec<i64>]) -> Result<Vec<Vec<i128>>> {
    let n = rows.len();
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&c| c as i128).collect())
        .collect();
    let overflow = || Error::Overflow("Hermite normal form");
    for col in 0..n {
        for r in col + 1..n {
            while a[r][col] != 0 {
                let q = a[col][col] / a[r][col];
                for k in col..n {
                    let sub = q.checked_mul(a[r][k]).ok_or_else(overflow)?;
                    a[col][k] = a[col][k].checked_sub(sub).ok_or_else(overflow)?;
                }
                a.swap(col, r);
            }
        }
        if a[col][col] == 0 {
            return Err(Error::DegenerateLattice);
        }
        if a[col][col] < 0 {
            for v in a[col].iter_mut() {
                *v = -*v;
            }
        }
        for r in 0..col {
            let q = a[r][col].div_euclid(a[col][col]);
            if q != 0 {
                for k in col..n {
                    let sub = q.checked_mul(a[col][k]).ok_or_else(overflow)?;
                    a[r][k] = a[r][k].checked_sub(sub).ok_or_else(overflow)?;
                }
            }
        }
    }
    Ok(a)
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn prime_factors(mut v: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= v {
        if v.is_multiple_of(p) {
            out.push(p);
            while v.is_multiple_of(p) {
                v /= p;
            }
        }
        p += 1;
    }
    if v > 1 {
        out.push(v);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g6() -> Lattice {
        Lattice::new(vec![
            vec![1, 0, 0, 0, 0, 3],
            vec![0, 1, 0, 0, 0, 5],
            vec![0, 0, 1, 0, 0, 7],
            vec![0, 0, 0, 1, 0, 9],
            vec![0, 0, 0, 0, 1, 11],
            vec![0, 0, 0, 0, 0, 24],
        ])
        .unwrap()
    }

    fn minkowski() -> Lattice {
        Lattice::new(vec![vec![1, -2, 3], vec![-2, 3, 1], vec![3, 1, -2]]).unwrap()
    }

    /// Cofactor expansion, independent of the Hermite form.
    fn det3(m: &[Vec<i64>]) -> i64 {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    #[test]
    fn volumes() {
        for n in 1..6 {
            assert_eq!(Lattice::identity(n).volume(), 1);
        }
        assert_eq!(g6().volume(), 24);
        assert_eq!(det3(minkowski().rows()).unsigned_abs(), 38);
        assert_eq!(minkowski().volume(), 38);
    }

    #[test]
    fn singular_and_malformed_generators_are_rejected() {
        assert_eq!(
            Lattice::new(vec![vec![1, 2], vec![2, 4]]).unwrap_err(),
            Error::DegenerateLattice
        );
        assert!(Lattice::new(vec![vec![1, 2]]).is_err());
        assert!(Lattice::new(vec![]).is_err());
    }

    #[test]
    fn membership() {
        let l = g6();
        assert!(l.contains(&[0; 6]));
        for row in l.rows() {
            assert!(l.contains(row));
        }
        assert!(!l.contains(&[1, 0, 0, 0, 0, 0]));
        assert!(l.contains(&[1, 0, 0, 0, 0, -21]));
        assert!(l.contains(&[0, 0, 0, 0, 0, 24]));
    }

    #[test]
    fn periods() {
        assert_eq!(Lattice::identity(3).period(), 1);
        assert_eq!(g6().period(), 24);
        let seed = Lattice::new(vec![vec![2, 2], vec![0, 4]]).unwrap();
        assert_eq!(seed.period(), 4);
        let per = minkowski().period();
        for i in 0..3 {
            let mut v = vec![0; 3];
            v[i] = per as i64;
            assert!(minkowski().contains(&v));
        }
    }

    #[test]
    fn period_is_minimal_over_divisors() {
        for l in [
            g6(),
            minkowski(),
            Lattice::new(vec![vec![3, 1], vec![1, 3]]).unwrap(),
        ] {
            let p = l.period();
            for d in 1..p {
                if p % d == 0 {
                    let works = (0..l.n()).all(|i| {
                        let mut v = vec![0; l.n()];
                        v[i] = d as i64;
                        l.contains(&v)
                    });
                    assert!(!works, "{d} is a smaller common period than {p}");
                }
            }
        }
    }

    #[test]
    fn quotient_sizes() {
        let id = Lattice::identity(3)
            .reduce_to_modular(&Limits::default())
            .unwrap();
        assert_eq!(id.period, 1);
        assert_eq!(id.size(), 1);
        let seed = Lattice::new(vec![vec![2, 2], vec![0, 4]])
            .unwrap()
            .reduce_to_modular(&Limits::default())
            .unwrap();
        let words: Vec<Vec<i64>> = seed.quotient.words().map(|w| w.into_coords()).collect();
        assert_eq!(words, vec![vec![0, 0], vec![2, 2]]);
    }

    #[test]
    fn quotient_matches_box_filter() {
        let l = Lattice::new(vec![vec![3, 1], vec![1, 3]]).unwrap();
        let q = l.reduce_to_modular(&Limits::default()).unwrap();
        let m = q.period as i64;
        let mut brute = vec![];
        for x in 0..m {
            for y in 0..m {
                if l.contains(&[x, y]) {
                    brute.push(vec![x, y]);
                }
            }
        }
        let got: Vec<Vec<i64>> = q.quotient.words().map(|w| w.into_coords()).collect();
        assert_eq!(got, brute);
        assert_eq!(got.len() as u64, (m * m) as u64 / l.volume());
    }

    #[test]
    fn min_distances() {
        let limits = Limits::default();
        assert_eq!(
            Lattice::identity(4).min_manhattan_weight(&limits).unwrap(),
            1
        );
        assert_eq!(g6().min_manhattan_weight(&limits).unwrap(), 4);
        assert_eq!(minkowski().min_manhattan_weight(&limits).unwrap(), 6);
    }

    #[test]
    fn minkowski_distance_by_box_search() {
        let l = minkowski();
        let mut best = u64::MAX;
        for x in -6i64..=6 {
            for y in -6i64..=6 {
                for z in -6i64..=6 {
                    if (x, y, z) != (0, 0, 0) && l.contains(&[x, y, z]) {
                        best = best.min((x.abs() + y.abs() + z.abs()) as u64);
                    }
                }
            }
        }
        assert_eq!(best, 6);
    }

    #[test]
    fn coset_representatives_are_canonical() {
        let l = Lattice::new(vec![vec![2, 2], vec![0, 4]]).unwrap();
        let r1 = l.coset_representative(&[5, -3]);
        let r2 = l.coset_representative(&[5 + 2, -3 + 2]);
        assert_eq!(r1, r2);
        let mut reps = std::collections::HashSet::new();
        for x in -10..10 {
            for y in -10..10 {
                reps.insert(l.coset_representative(&[x, y]));
            }
        }
        assert_eq!(reps.len() as u64, l.volume());
    }
}
