//! Addition and multiplication tables for the small Galois fields used by the
//! Hamming codes.

use crate::error::{Error, Result};

/// Field orders with a built-in table.
pub const SUPPORTED_ORDERS: [u64; 10] = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16];

/// `GF(q)` on element indices `0..q`, with `0` and `1` at indices 0 and 1.
///
/// For `q = p^k` the element with index `Σ c_i p^i` is the polynomial
/// `Σ c_i x^i` modulo a fixed irreducible polynomial of degree `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    q: u64,
    p: u64,
    add: Vec<u8>,
    mul: Vec<u8>,
}

impl FieldTable {
    pub fn new(q: u64) -> Result<Self> {
        let (p, k, modulus): (u64, u32, &[u64]) = match q {
            2 | 3 | 5 | 7 | 11 | 13 => (q, 1, &[]),
            // Low-order coefficients of the monic irreducible polynomial.
            4 => (2, 2, &[1, 1]),        // x^2 + x + 1
            8 => (2, 3, &[1, 1, 0]),     // x^3 + x + 1
            16 => (2, 4, &[1, 1, 0, 0]), // x^4 + x + 1
            9 => (3, 2, &[1, 0]),        // x^2 + 1
            _ => {
                return Err(Error::param(format!(
                    "no built-in field of order {q}; supported: {SUPPORTED_ORDERS:?}"
                )))
            }
        };
        let digits = |mut a: u64| -> Vec<u64> {
            (0..k)
                .map(|_| {
                    let d = a % p;
                    a /= p;
                    d
                })
                .collect()
        };
        let undigits = |d: &[u64]| d.iter().rev().fold(0, |acc, &c| acc * p + c);
        let size = q as usize;
        let mut add = vec![0u8; size * size];
        let mut mul = vec![0u8; size * size];
        for a in 0..q {
            for b in 0..q {
                let (da, db) = (digits(a), digits(b));
                let sum: Vec<u64> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                let mut prod = vec![0u64; 2 * k as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k = -(modulus) reduces degrees from the top down.
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c != 0 && k > 1 {
                        prod[deg] = 0;
                        for (t, &mc) in modulus.iter().enumerate() {
                            let slot = deg - k as usize + t;
                            prod[slot] = (prod[slot] + (p - c) * mc) % p;
                        }
                    }
                }
                let idx = a as usize * size + b as usize;
                add[idx] = undigits(&sum) as u8;
                mul[idx] = undigits(&prod[..k as usize]) as u8;
            }
        }
        let field = FieldTable { q, p, add, mul };
        field.check_axioms()?;
        Ok(field)
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q as usize + b as usize]
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q as usize + b as usize]
    }

    pub fn neg(&self, a: u8) -> u8 {
        (0..self.q as u8)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse")
    }

    pub fn inv(&self, a: u8) -> Option<u8> {
        (1..self.q as u8).find(|&b| self.mul(a, b) == 1)
    }

    fn check_axioms(&self) -> Result<()> {
        let q = self.q as u8;
        let fail = |what: &str| Err(Error::Structural(format!("GF({}) table: {what}", self.q)));
        for a in 0..q {
            if self.add(a, 0) != a || self.mul(a, 1) != a || self.mul(a, 0) != 0 {
                return fail("identities");
            }
            if a != 0 && self.inv(a).is_none() {
                return fail("multiplicative inverse");
            }
            if (0..q).all(|b| self.add(a, b) != 0) {
                return fail("additive inverse");
            }
            for b in 0..q {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail("commutativity");
                }
                for c in 0..q {
                    if self.add(self.add(a, b), c) != self.add(a, self.add(b, c))
                        || self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c))
                    {
                        return fail("associativity");
                    }
                    if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                        return fail("distributivity");
                    }
                }
            }
        }
        Ok(())
    }
}
