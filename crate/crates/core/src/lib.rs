//! Perfect and diameter perfect codes in the Lee, Manhattan and Hamming
//! metrics: lattice and product constructions, doubling, non-periodic
//! strip tilings of the plane, and exhaustive or sampled verification.
//!
//! Codes over `Z_m^n` are [`codes::ModularCode`] values: sorted sets of
//! packed words. Constructions live in [`constructions`]; every check in
//! [`verify`] returns a serializable certificate.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! | example | shows |
//! |---|---|
//! | `spheres_and_anticodes` | sphere and anticode sizes, brute force against closed forms |
//! | `lattice_codes` | generator matrices, HNF, period and reduction to `Z_m^n` |
//! | `golomb_welch` | perfect Lee codes in two dimensions and for radius 1 |
//! | `hamming_product` | Hamming codes, the q-ary product and Phelps doubling |
//! | `lee_doubling` | doubling distance-4 diameter perfect codes |
//! | `lee_product` | perfect Lee codes from an outer Hamming code |
//! | `nonperiodic_tiling` | the strip tiling, window checks and probes |
//! | `counting` | counting and enumerating doubled codes |
//!
//! ```
//! use perfect_lee::constructions::base::lee_single_error_code;
//! use perfect_lee::error::Limits;
//! use perfect_lee::verify::{is_perfect, Mode};
//!
//! let code = lee_single_error_code(3, 1, &Limits::default()).unwrap();
//! assert_eq!(code.len(), 49);
//! assert!(is_perfect(&code, 1, Mode::Exhaustive, &Limits::default()).unwrap().pass);
//! ```

pub mod cli;
pub mod codes;
pub mod constructions;
pub mod enumeration;
pub mod error;
pub mod lattice;
pub mod metrics;
pub mod serial;
pub mod tilings;
pub mod verify;
pub mod word;
