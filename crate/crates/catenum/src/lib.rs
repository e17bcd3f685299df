//! Census machinery for finite categories whose hom-sets all have exactly
//! two morphisms.
//!
//! A category on objects `1..n` in which every hom-set has two elements is
//! determined, up to the naming conventions of [`model::Morphism`], by a
//! boolean invariant `alpha` on ordered triples of distinct objects: alpha
//! records, for each triple `(i, j, k)`, whether the composite of the two
//! distinguished non-absorbing cross morphisms `i -> j -> k` stays
//! non-absorbing. This crate
//!
//! * builds the full composition table of the category attached to an
//!   alpha function ([`compose`]),
//! * decides which alpha functions are admissible ([`conditions`]) and
//!   cross-checks that decision against an independent category-axiom
//!   oracle,
//! * re-derives the two-object classification by scanning every raw
//!   two-object composition table ([`bruteforce`]),
//! * enumerates admissible alpha functions per object count, both with
//!   labeled objects and up to relabeling ([`census`]),
//! * evaluates exact lower/upper bounds on those counts and the growth-rate
//!   estimates they imply ([`bounds`]).
//!
//! The `examples/` directory has one runnable program per capability; the
//! `catenum` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod bruteforce;
pub mod census;
pub mod cli;
pub mod compose;
pub mod conditions;
pub mod model;
pub mod report;

pub use bounds::{bounds_report, build_noninterfering, is_noninterfering, BoundsReport, TripleSet};
pub use census::{
    act, burnside_count, canonical_form, classify_n3, enumerate_ordered, enumerate_reduced,
    Budget, Method, OrderedCensus, ReducedCensus,
};
pub use compose::{build_table, check_axioms, compose, AxiomReport, CategoryTable, Composition};
pub use conditions::{alpha_check, alpha_is_valid, product_identity_check, ConditionReport};
pub use model::{AlphaFunction, MorKind, Morphism, Perm};

use thiserror::Error;

/// Largest object count for which alpha functions (and hence composition
/// tables) can be represented: `n(n-1)(n-2)` must fit in the 128-bit
/// support mask, which holds through n = 6 and fails at n = 7 (210 bits).
pub const MAX_ALPHA_N: usize = 6;

#[derive(Debug, Error)]
pub enum Error {
    #[error("object index {value} out of range 1..={n}")]
    ObjectOutOfRange { value: usize, n: usize },
    #[error("triple ({0}, {1}, {2}) does not have pairwise distinct entries")]
    NotDistinct(u8, u8, u8),
    #[error("triple rank {rank} out of range for n={n} ({count} distinct triples)")]
    RankOutOfRange { rank: usize, n: usize, count: usize },
    #[error("n={n} exceeds the alpha-function capacity (max n={MAX_ALPHA_N})")]
    AlphaTooLarge { n: usize },
    #[error("morphisms not composable: target of {f} is not the source of {g}")]
    NotComposable { g: Morphism, f: Morphism },
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("permutation {0:?} is not a bijection on 1..=n")]
    InvalidPermutation(Vec<u8>),
    #[error("method {method} unavailable for n={n} (cap {max}; raise via CATENUM_BUDGET)")]
    MethodUnavailable {
        method: &'static str,
        n: usize,
        max: usize,
    },
    #[error("census budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("invalid CATENUM_BUDGET value: {0}")]
    BudgetParse(String),
    #[error("oracle disagreement: conditions accept alpha {alpha} but the axiom oracle rejects its table")]
    OracleMismatch { alpha: String },
    #[error("classification failed: {0}")]
    Classification(String),
    #[error("alpha file field `{field}`: {message}")]
    AlphaFile { field: &'static str, message: String },
    #[error("partition sizes {parts:?} do not sum to n={n}")]
    BadPartition { parts: (usize, usize, usize), n: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
