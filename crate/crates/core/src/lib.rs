//! Relative generalized Hamming weights (RGHWs) of cyclic codes with two
//! nonzeros, computed along several independent routes.
//!
//! The crate is `no_std` (it needs `alloc`). Everything here is pure and
//! deterministic; threading, timing and file formats live in the `rghw`
//! companion crate.
//!
//! Layout:
//! - [`gf`]: table-driven finite fields (exp/log/Zech), subfield embeddings,
//!   traces, minimal polynomials.
//! - [`codes`]: the two-nonzero code `C = {c(b1, b2)}` and its subcode
//!   `C' = {c(0, b2)}` built from a parameter bundle.
//! - [`subspaces`]: canonical (RREF) subspaces, Gaussian binomials,
//!   deterministic enumeration, projections and trace-form duals.
//! - [`rghw`]: brute force over the definition, the dual-side maximization,
//!   and per-subspace zero counting.
//! - [`charsum`]: multiplicative characters, Gauss sums and the character-sum
//!   evaluation of the per-subspace zero count.
//! - [`closed_forms`]: closed-form evaluators for the three parameter
//!   families with explicit answers.
#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod charsum;
pub mod closed_forms;
pub mod codes;
mod error;
pub mod gf;
pub mod rghw;
pub mod subspaces;

pub use error::{Error, Result};

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
