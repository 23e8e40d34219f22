use thiserror::Error;

use crate::fplin::LinError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("invalid algebra `{algebra}`: {detail}")]
    InvalidAlgebra { algebra: String, detail: String },
    #[error("invalid module `{module}`: {detail}")]
    InvalidModule { module: String, detail: String },
    #[error("algebra `{0}` is not commutative")]
    NotCommutative(String),
    #[error("modules are over different algebras")]
    AlgebraMismatch,
    #[error("subspace is not closed under the action")]
    NotSubmodule,
    #[error("submodule is not fully invariant")]
    NotFullyInvariant,
    #[error("submodule must be proper")]
    NotProper,
    #[error("submodule is not essential")]
    NotEssential,
    #[error("matrix does not commute with the action")]
    NotEquivariant,
    #[error("lattice exceeds the cap of {cap} elements")]
    LatticeCap { cap: usize },
    #[error("enumeration of {size} elements exceeds the budget of {budget}")]
    Budget { size: u128, budget: u64 },
    #[error("exponent must be nonnegative, got {0}")]
    NegativeExponent(i64),
    #[error("undecided within budget: {0}")]
    Undecided(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("demo is fixture-specific: expected {expected}")]
    DemoFixtureSpecific { expected: String },
}

impl Error {
    /// Errors that mean "ran out of budget" rather than "bad input".
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::LatticeCap { .. } | Error::Budget { .. } | Error::Undecided(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
