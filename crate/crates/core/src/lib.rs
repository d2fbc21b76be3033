//! Inequalities of the multiplicative Horn polytope of a simple,
//! simply-connected compact group, computed from Gromov–Witten invariants of
//! the maximal flag varieties `G/P_β` in exact rational arithmetic.
//!
//! The pipeline, bottom-up:
//!
//! * [`rootsys`]: root data of the types A–G with fixed conventions;
//! * [`weyl`]: the Weyl group, lengths, inversion sets, minimal coset
//!   representatives;
//! * [`parabolic`]: `Φ(G/P)`, its grading by characters of the center of the
//!   Levi, `n_β`, and the Peterson–Woodward lift of degrees;
//! * [`schubert`]: Schubert calculus of `G/B` (BGG operators, Chevalley rule)
//!   and the structure constants of `G/P`;
//! * [`quantum`]: the quantum Chevalley rule, quantum products on `G/B`, and
//!   Gromov–Witten invariants of `G/P` through the comparison formula;
//! * [`horn`]: the inequality lists, membership, and the lift-pairing scan;
//! * [`io`] and [`table`]: serialization and the reference count table.
//!
//! Polytope computations live in the `qhorn-polytope` crate.

pub mod horn;
pub mod io;
pub mod parabolic;
pub mod quantum;
pub mod rootsys;
pub mod schubert;
pub mod table;
pub mod weyl;

use thiserror::Error;

pub use num_rational::BigRational as Rational;
pub use qhorn_polytope as polytope;

pub use horn::{HornSystem, Inequality, InequalityKind, Mode};
pub use rootsys::{CartanType, CoweightVec, Family, RootDatum, RootVec, WeightVec};
pub use weyl::{WeylElt, WeylGroup};

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} is not admissible for type {family:?}")]
    InvalidRank { family: Family, rank: usize },
    #[error("unknown group `{0}`")]
    UnknownGroup(String),
    #[error("rank mismatch")]
    RankMismatch,
    #[error("{0:?} is not a root")]
    NotARoot(Vec<i64>),
    #[error("root {0:?} does not lie in Φ(G/P)")]
    NotInUnipotent(Vec<i64>),
    #[error("Weyl group element is not a minimal coset representative")]
    NotMinimal,
    #[error("simple root {0} lies in the Levi")]
    RootInLevi(usize),
    #[error("unsupported mode `{0}`")]
    UnsupportedMode(String),
    #[error("rank {rank} exceeds the configured limit {limit}")]
    RankLimit { rank: usize, limit: usize },
    #[error("malformed point: {0}")]
    MalformedPoint(String),
    #[error("polytope: {0}")]
    Polytope(#[from] qhorn_polytope::PolytopeError),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors caused by user input rather than by the computation.
    pub fn is_config(&self) -> bool {
        matches!(
            self,
            Error::InvalidRank { .. }
                | Error::UnknownGroup(_)
                | Error::UnsupportedMode(_)
                | Error::RankLimit { .. }
                | Error::MalformedPoint(_)
                | Error::RankMismatch
        )
    }
}
