//! Words over `Z_m` or `Z`, and the packed index space used to store large
//! codeword sets compactly.

use std::fmt;

use crate::error::{Error, Result};

/// Alphabet of a word: `Z_m` for some `m >= 2` (or the trivial `Z_1` of a
/// period-one lattice quotient), or the unbounded integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Modulus {
    Mod(u64),
    Unbounded,
}

impl Modulus {
    pub fn is_modular(&self) -> bool {
        matches!(self, Modulus::Mod(_))
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Mod(m) => write!(f, "Z_{m}"),
            Modulus::Unbounded => write!(f, "Z"),
        }
    }
}

/// A length-`n` vector over `Z_m` or `Z`.
///
/// Modular words always hold reduced coordinates `0 <= x_i < m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    coords: Vec<i64>,
    modulus: Modulus,
}

impl Word {
    pub fn modular(coords: Vec<i64>, m: u64) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::dim("words need length n >= 1"));
        }
        if m == 0 {
            return Err(Error::param("modulus must be positive"));
        }
        if let Some(&value) = coords.iter().find(|&&c| c < 0 || c as u64 >= m) {
            return Err(Error::CoordinateRange { value, modulus: m });
        }
        Ok(Word {
            coords,
            modulus: Modulus::Mod(m),
        })
    }

    /// Builds a modular word, reducing every coordinate into `0..m`.
    pub fn reduced(coords: &[i64], m: u64) -> Result<Self> {
        let coords = coords.iter().map(|&c| c.rem_euclid(m as i64)).collect();
        Word::modular(coords, m)
    }

    pub fn unbounded(coords: Vec<i64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::dim("words need length n >= 1"));
        }
        Ok(Word {
            coords,
            modulus: Modulus::Unbounded,
        })
    }

    pub fn zero(n: usize, modulus: Modulus) -> Self {
        Word {
            coords: vec![0; n],
            modulus,
        }
    }

    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.coords
    }

    pub fn modulus(&self) -> Modulus {
        self.modulus
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    /// Coordinate-wise sum, reduced mod `m` for modular words.
    pub fn add(&self, other: &Word) -> Result<Word> {
        self.same_shape(other)?;
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| match self.modulus {
                Modulus::Mod(m) => (a + b).rem_euclid(m as i64),
                Modulus::Unbounded => a + b,
            })
            .collect();
        Ok(Word {
            coords,
            modulus: self.modulus,
        })
    }

    pub(crate) fn same_shape(&self, other: &Word) -> Result<()> {
        if self.coords.len() != other.coords.len() {
            return Err(Error::dim(format!(
                "lengths {} and {}",
                self.coords.len(),
                other.coords.len()
            )));
        }
        if self.modulus != other.modulus {
            return Err(Error::dim(format!(
                "alphabets {} and {}",
                self.modulus, other.modulus
            )));
        }
        Ok(())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// The ambient space `Z_m^n` with a big-endian mixed-radix packing.
///
/// Packed indices sort in the same order as the words they encode
/// lexicographically, which is what keeps serialized code files stable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Space {
    n: usize,
    m: u64,
    size: u64,
}

impl Space {
    pub fn new(n: usize, m: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::dim("length n must be at least 1"));
        }
        if m == 0 {
            return Err(Error::param("alphabet size must be positive"));
        }
        let size = (0..n)
            .try_fold(1u64, |acc, _| acc.checked_mul(m))
            .filter(|&s| s < (1u64 << 62))
            .ok_or(Error::Overflow("space size m^n"))?;
        Ok(Space { n, m, size })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    /// `m^n`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Packs reduced coordinates. Out-of-range values are reduced first.
    pub fn pack(&self, coords: &[i64]) -> u64 {
        debug_assert_eq!(coords.len(), self.n);
        let m = self.m as i64;
        coords
            .iter()
            .fold(0u64, |acc, &c| acc * self.m + c.rem_euclid(m) as u64)
    }

    pub fn unpack_into(&self, mut index: u64, out: &mut [i64]) {
        debug_assert_eq!(out.len(), self.n);
        for slot in out.iter_mut().rev() {
            *slot = (index % self.m) as i64;
            index /= self.m;
        }
    }

    pub fn unpack(&self, index: u64) -> Vec<i64> {
        let mut out = vec![0; self.n];
        self.unpack_into(index, &mut out);
        out
    }

    pub fn word(&self, index: u64) -> Word {
        Word {
            coords: self.unpack(index),
            modulus: Modulus::Mod(self.m),
        }
    }

    /// Packed index of `a + b` where `b` is given as (possibly signed) offsets.
    pub fn add_offset(&self, index: u64, offset: &[i64], scratch: &mut [i64]) -> u64 {
        self.unpack_into(index, scratch);
        for (s, o) in scratch.iter_mut().zip(offset) {
            *s += o;
        }
        self.pack(scratch)
    }

    pub(crate) fn check_word(&self, w: &Word) -> Result<()> {
        if w.len() != self.n || w.modulus() != Modulus::Mod(self.m) {
            return Err(Error::dim(format!(
                "word {w} over {} does not live in Z_{}^{}",
                w.modulus(),
                self.m,
                self.n
            )));
        }
        Ok(())
    }
}

/// Lee weight of a single symbol of `Z_m`.
#[inline]
pub(crate) fn symbol_lee_weight(x: i64, m: u64) -> u64 {
    let r = x.rem_euclid(m as i64) as u64;
    r.min(m - r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modular_words_reject_unreduced_coordinates() {
        assert!(Word::modular(vec![0, 5], 5).is_err());
        assert!(Word::modular(vec![-1], 5).is_err());
        assert!(Word::modular(vec![], 5).is_err());
        assert_eq!(Word::reduced(&[-1, 7], 5).unwrap().coords(), &[4, 2]);
    }

    #[test]
    fn packing_preserves_lexicographic_order() {
        let space = Space::new(3, 4).unwrap();
        let mut last = None;
        for idx in 0..space.size() {
            let w = space.unpack(idx);
            assert_eq!(space.pack(&w), idx);
            if let Some(prev) = last.replace(w.clone()) {
                assert!(prev < w);
            }
        }
    }

    #[test]
    fn space_size_overflow_is_an_error() {
        assert!(Space::new(40, 9).is_err());
        assert_eq!(Space::new(6, 24).unwrap().size(), 191_102_976);
    }
}
