//! Exact-arithmetic calculus for ternary (3-ary) Lie brackets.
//!
//! A 3-Lie algebra is a vector space with a totally skew-symmetric ternary
//! bracket satisfying the Fundamental Identity
//!
//! ```text
//! [x1,x2,[x3,x4,x5]] = [[x1,x2,x3],x4,x5] + [x3,[x1,x2,x4],x5] + [x3,x4,[x1,x2,x5]]
//! ```
//!
//! This crate implements the graded calculus built on top of that bracket,
//! over exact rational scalars throughout:
//!
//! - the graded space `C^n = Hom(∧²g ⊗ … ⊗ ∧²g ∧ g, g)` with its insertion
//!   composition and grade commutator bracket, whose degree-1 Maurer-Cartan
//!   elements are exactly the 3-Lie structures ([`cochain`]);
//! - bidegrees and lifts relative to a splitting `g1 ⊕ g2`, and the
//!   five-component decomposition of any degree-1 structure ([`split`]);
//! - twilled structures (both summands closed), their seven compatibility
//!   conditions, product structures, and the correspondence between strict
//!   twilled structures and matched pairs ([`twilled`]);
//! - the L∞-algebra on `⊕ C^m(g2,g1)` obtained from higher derived
//!   brackets, with Maurer-Cartan evaluation ([`homotopy`]);
//! - twisting of split structures by nilpotent lifts of maps `g2 → g1`,
//!   in closed form and component by component ([`twisting`]);
//! - O-operator (relative Rota-Baxter) verification, induced structures,
//!   and exact grid search ([`ooperator`]).
//!
//! Every identity is checked by brute force on basis tuples; checkers return
//! [`report::VerificationReport`]s listing each failing tuple. All
//! enumeration is lexicographic and all arithmetic exact, so outputs are
//! reproducible byte for byte.
//!
//! The `trilie` binary exposes the checkers on JSON inputs; the `examples/`
//! directory shows one runnable program per capability.

pub mod algebra;
pub mod cli;
pub mod cochain;
pub mod corpus;
pub mod format;
pub mod homotopy;
pub mod linalg;
pub mod matched;
pub mod ooperator;
pub mod random;
pub mod report;
pub mod scalar;
pub mod split;
pub mod twilled;
pub mod twisting;

use thiserror::Error as ThisError;

use report::VerificationReport;

/// Crate-wide error type.
///
/// `Parse`, `Dimension`, `InvalidInput` and `BudgetExceeded` are input
/// problems (CLI exit code 2). `Precondition` means a mathematically invalid
/// object was passed where a verified one is required (CLI exit code 1, with
/// the offending residuals attached when available). `Invariant` signals a
/// broken internal invariant and is never expected to fire.
#[derive(Debug, ThisError)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("search budget exceeded: {candidates} candidates over budget {budget}")]
    BudgetExceeded { candidates: u128, budget: u128 },

    #[error("precondition failed: {what}")]
    Precondition {
        what: String,
        report: Option<Box<VerificationReport>>,
    },

    #[error("internal invariant violation: {0}")]
    Invariant(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub fn invalid_input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn precondition(what: impl Into<String>) -> Self {
        Error::Precondition {
            what: what.into(),
            report: None,
        }
    }

    pub fn precondition_with(what: impl Into<String>, report: VerificationReport) -> Self {
        Error::Precondition {
            what: what.into(),
            report: Some(Box::new(report)),
        }
    }

    pub fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }
}
