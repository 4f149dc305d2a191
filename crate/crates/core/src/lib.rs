//! Exact combinatorial machinery for deciding admissibility of hyperplane
//! mass-equipartition triples `(d, j, k)`.
//!
//! A triple is *admissible* when every collection of `j` masses in `R^d`
//! can be split into `2^k` equal parts by `k` hyperplanes; `Delta(j, k)`
//! is the least such `d`. This crate computes the combinatorial
//! obstructions that certify admissibility:
//!
//! * [`dihedral`]: the order-8 symmetry group of an oriented hyperplane
//!   pair, its subgroups, and first-homology class arithmetic
//!   (`Z/2 ⊕ Z/2` and `Z/4`).
//! * [`words`]: balanced circular `{A,B}`-word counting: the functions
//!   `R`, `P`, `Q` by Möbius/totient formulas and the self-conjugate
//!   count `A` by exhaustive enumeration.
//! * [`dynamics`]: the moment-curve solution-type state machine for
//!   `k = 2`: free-point transitions, circles, and compression to
//!   signed words.
//! * [`orbits`]: grouping circles into dihedral orbits, stabilizers,
//!   monodromy, orientation/Jacobian signs, and the obstruction totals
//!   for both coefficient modules, plus the `Delta = 0` parity test.
//! * [`jacobian`]: the cut-point configuration of a canonical signed
//!   word and the exact determinant sign of its quadrant-mass matrix.
//! * [`dickson`]: sparse polynomial arithmetic over `F_2`, Dickson
//!   polynomials, and ideal-membership admissibility bounds.
//! * [`bounds`]: synthesis of lower/upper bounds on `Delta(j, k)` with
//!   per-bound provenance.
//!
//! Everything is exact integer/bit arithmetic; there is no floating
//! point anywhere. All values are immutable and all operations pure,
//! so the crate is `no_std` (with `alloc`) and safe to use from
//! concurrent contexts without coordination.
//!
//! ```
//! use equipart_core::orbits::{obstruction_delta1, Conventions};
//!
//! // Five masses in R^8, two hyperplanes: the obstruction total is
//! // the nonzero order-2 element of Z/4, so (8, 5, 2) is admissible.
//! let outcome = obstruction_delta1(5, Conventions::default()).unwrap();
//! assert!(outcome.admissible);
//! assert_eq!(outcome.counters.unwrap().omega(), 2);
//! assert_eq!(equipart_core::dickson::lower_bound(5, 2), 8);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bounds;
pub mod dickson;
pub mod dihedral;
pub mod dynamics;
mod error;
pub mod jacobian;
pub mod orbits;
pub mod words;

pub use error::Error;

/// Largest measure count accepted by the `k = 2` state-machine
/// enumeration (`dynamics`, `orbits`). The state space for `j` is
/// `(j+1) · 4 · C(j+1, (j+1)/2)`, about 8·10^5 at the bound.
pub const MAX_ENUMERATION_J: u32 = 15;
