//! The two admissibility conditions on alpha functions, with full
//! violation reporting.
//!
//! An alpha function is valid iff
//!
//! 1. no distinct triple has `alpha(i,j,k) = 1` together with
//!    `alpha(i,k,j) = 1` or `alpha(j,i,k) = 1`, and
//! 2. for every ordered quadruple `(i,j,l,k)` of pairwise distinct
//!    indices, `alpha(i,j,k) = alpha(j,l,k) = 1` holds iff
//!    `alpha(i,j,l) = alpha(i,l,k) = 1` holds.
//!
//! Validity is exactly associativity of the induced composition table;
//! the acceptance suite machine-checks that equivalence against
//! [`crate::compose::check_axioms`] rather than assuming it.

use crate::model::{distinct_triple_count, distinct_triples, triple_rank, AlphaFunction};
use crate::MAX_ALPHA_N;
use std::sync::OnceLock;

/// Precomputed triple ranks for the constraints at a fixed `n`.
#[derive(Debug)]
pub(crate) struct ConstraintTables {
    pub bit_count: usize,
    /// Triples in rank order.
    pub triples: Vec<(u8, u8, u8)>,
    /// Condition-1 exclusions per triple: `(rank(i,j,k), rank(i,k,j), rank(j,i,k))`.
    pub c1: Vec<(u16, u16, u16)>,
    /// Condition-2 instances: the quadruple `(i,j,l,k)` and the ranks of
    /// `(i,j,k), (j,l,k), (i,j,l), (i,l,k)`.
    pub c2: Vec<((u8, u8, u8, u8), [u16; 4])>,
}

impl ConstraintTables {
    fn build(n: usize) -> Self {
        let rank = |i, j, k| triple_rank(n, i, j, k).expect("distinct in range") as u16;
        let triples: Vec<_> = distinct_triples(n).collect();
        let c1 = triples
            .iter()
            .map(|&(i, j, k)| (rank(i, j, k), rank(i, k, j), rank(j, i, k)))
            .collect();
        let mut c2 = Vec::new();
        let objs = 1..=n as u8;
        for i in objs.clone() {
            for j in objs.clone().filter(|&j| j != i) {
                for l in objs.clone().filter(|&l| l != i && l != j) {
                    for k in objs.clone().filter(|&k| k != i && k != j && k != l) {
                        c2.push((
                            (i, j, l, k),
                            [rank(i, j, k), rank(j, l, k), rank(i, j, l), rank(i, l, k)],
                        ));
                    }
                }
            }
        }
        ConstraintTables { bit_count: distinct_triple_count(n), triples, c1, c2 }
    }

    /// Shared tables for `n <= 6`, built once.
    pub(crate) fn get(n: usize) -> &'static ConstraintTables {
        static CACHE: [OnceLock<ConstraintTables>; MAX_ALPHA_N + 1] =
            [const { OnceLock::new() }; MAX_ALPHA_N + 1];
        assert!(n >= 1 && n <= MAX_ALPHA_N);
        CACHE[n].get_or_init(|| ConstraintTables::build(n))
    }
}

#[inline]
fn bit(mask: u128, rank: u16) -> bool {
    mask >> rank & 1 == 1
}

/// Short-circuiting validity check on a raw support mask. Hot path for the
/// enumeration scans.
pub(crate) fn mask_is_valid(tables: &ConstraintTables, mask: u128) -> bool {
    for &(t, swap_jk, swap_ij) in &tables.c1 {
        if bit(mask, t) && (bit(mask, swap_jk) || bit(mask, swap_ij)) {
            return false;
        }
    }
    for &(_, [a, b, c, d]) in &tables.c2 {
        if (bit(mask, a) && bit(mask, b)) != (bit(mask, c) && bit(mask, d)) {
            return false;
        }
    }
    true
}

/// Everything [`alpha_check`] found, with full witness lists.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConditionReport {
    pub valid: bool,
    /// Distinct triples `(i,j,k)` with `alpha(i,j,k)=1` and a forbidden
    /// companion set.
    pub c1_violations: Vec<(u8, u8, u8)>,
    /// Pairwise-distinct quadruples `(i,j,l,k)` where the condition-2
    /// equivalence fails.
    pub c2_violations: Vec<(u8, u8, u8, u8)>,
}

/// Decides validity, materializing every violation of both conditions.
pub fn alpha_check(alpha: &AlphaFunction) -> ConditionReport {
    let tables = ConstraintTables::get(alpha.n());
    let mask = alpha.bits();
    let mut report = ConditionReport::default();
    for (idx, &(t, swap_jk, swap_ij)) in tables.c1.iter().enumerate() {
        if bit(mask, t) && (bit(mask, swap_jk) || bit(mask, swap_ij)) {
            report.c1_violations.push(tables.triples[idx]);
        }
    }
    for &(quad, [a, b, c, d]) in &tables.c2 {
        if (bit(mask, a) && bit(mask, b)) != (bit(mask, c) && bit(mask, d)) {
            report.c2_violations.push(quad);
        }
    }
    report.valid = report.c1_violations.is_empty() && report.c2_violations.is_empty();
    report
}

/// Short-circuiting variant of [`alpha_check`] for callers that only need
/// the verdict.
pub fn alpha_is_valid(alpha: &AlphaFunction) -> bool {
    mask_is_valid(ConstraintTables::get(alpha.n()), alpha.bits())
}

/// Whether `alpha(i,j,k) * alpha(j,l,k) = alpha(i,j,l) * alpha(i,l,k)`
/// holds for every pairwise-distinct quadruple. Kept separate from the
/// condition-2 equivalence so the relationship between the two forms can
/// itself be tested.
pub fn product_identity_check(alpha: &AlphaFunction) -> bool {
    let tables = ConstraintTables::get(alpha.n());
    let mask = alpha.bits();
    tables.c2.iter().all(|&(_, [a, b, c, d])| {
        (bit(mask, a) as u8) * (bit(mask, b) as u8)
            == (bit(mask, c) as u8) * (bit(mask, d) as u8)
    })
}
