//! Submodule calculus for finite modules over finite-dimensional algebras
//! over prime fields: products and annihilators of submodules, prime,
//! semiprime, duo and Goldie predicates, endomorphism-ring verdicts, and a
//! theorem battery that checks the implications between them.

use serde::{Deserialize, Serialize};

pub mod algmod;
pub mod battery;
pub mod clitool;
pub mod endoring;
pub mod error;
pub mod fplin;
pub mod homlab;
pub mod latt;
pub mod preds;
pub mod prodann;

pub use error::{Error, Result};

/// Limits on exhaustive work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    /// Largest submodule lattice that may be enumerated.
    pub lattice_cap: usize,
    /// Largest hom space whose elements may be scanned one by one.
    pub scan_limit: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            lattice_cap: latt::DEFAULT_LATTICE_CAP,
            scan_limit: homlab::DEFAULT_SCAN_BUDGET,
        }
    }
}

impl Budget {
    /// A budget that allows no enumeration at all.
    pub fn none() -> Self {
        Budget {
            lattice_cap: 0,
            scan_limit: 0,
        }
    }
}
