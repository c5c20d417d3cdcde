//! Linear codes over Z2, Z4 and Z2[u] = F2 + uF2 (u^2 = 0): Gray maps,
//! additive codes over the mixed alphabets Z2^alpha x Z4^beta and
//! Z2^alpha x Z2[u]^beta, duality and MacWilliams transforms, and the
//! characterization of which binary linear codes carry a Z2Z2[u]
//! structure via code-preserving involutions.
//!
//! Quick tour:
//!
//! * [`rings`] — the three alphabets and the symbol-level maps between
//!   them.
//! * [`vectors`] — mixed vectors, inner products, the extended Gray
//!   maps, coordinate pairings.
//! * [`codes`] — spans/closures, membership, enumeration, duals, weight
//!   enumerators, MacWilliams.
//! * [`structure`] — involution checking and search, certificates,
//!   admissible (alpha, beta) parameters, Z4 -> Z2[u] conversion.
//! * [`catalog`] — repetition/even/Hamming/simplex/Hadamard/Golay
//!   constructions and worked-example fixtures.
//! * [`io`] — the text file formats for codes, weight enumerators and
//!   certificates.
//! * [`verify`] — seeded oracle suites re-checking the algebra the fast
//!   paths rely on.

pub mod bits;
pub mod catalog;
pub mod codes;
pub mod corpus;
pub mod error;
pub mod io;
pub mod rings;
pub mod structure;
pub mod vectors;
pub mod verify;

pub use bits::{Bits, Rref};
pub use codes::{
    dual_z2u_bruteforce, is_z2u_additive_set, macwilliams_transform, BinaryLinearCode, Budget,
    WeightEnumerator, Z2uCode, Z4Code,
};
pub use error::{Error, Result};
pub use rings::{Symbol, Z2u, Z4};
pub use structure::{
    admissible_parameters, brute_force_aut_order, check_involution, convert_z2z4, find_involution,
    to_additive, AdmissibleReport, SearchLimits, SearchOutcome, StructureCertificate,
};
pub use vectors::{theta, theta_inv, MixedVector, Pairing};
