//! Exact cardinality bounds, non-interfering triple sets, and growth-rate
//! estimates.
//!
//! The ordered census is bounded below by `2^floor(n/3)^3` via product
//! sets `X1 x X2 x X3` of triples (every subset of such a set is the
//! support of a valid alpha function) and above by `18^C(n,3)` (each
//! 3-element object subset carries at most 18 admissible configurations).
//! Dividing the lower bound by `n!` bounds the reduced census. All bound
//! values are computed in exact integer/rational arithmetic; floating
//! point only enters the logarithmic growth estimates.

use crate::model::AlphaFunction;
use crate::{Error, Result};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeSet;

/// A set of ordered pairwise-distinct triples over `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripleSet {
    n: usize,
    members: BTreeSet<(u8, u8, u8)>,
}

impl TripleSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = (u8, u8, u8)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (i, j, k) in members {
            for v in [i, j, k] {
                if v == 0 || v as usize > n {
                    return Err(Error::ObjectOutOfRange { value: v as usize, n });
                }
            }
            if i == j || j == k || i == k {
                return Err(Error::NotDistinct(i, j, k));
            }
            set.insert((i, j, k));
        }
        Ok(TripleSet { n, members: set })
    }

    pub fn empty(n: usize) -> Self {
        TripleSet { n, members: BTreeSet::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: (u8, u8, u8)) -> bool {
        self.members.contains(&t)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u8, u8, u8)> + '_ {
        self.members.iter().copied()
    }

    /// The subset selected by `mask` over the members in sorted order.
    /// Panics if the set has more than 128 members.
    pub fn subset(&self, mask: u128) -> TripleSet {
        assert!(self.members.len() <= 128);
        let members = self
            .members
            .iter()
            .enumerate()
            .filter(|&(pos, _)| mask >> pos & 1 == 1)
            .map(|(_, &t)| t)
            .collect();
        TripleSet { n: self.n, members }
    }
}

/// Proof that a set interferes: `member` coexists with `conflict`, which
/// either runs from `member`'s start to its middle, or from its middle to
/// its end.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InterferenceWitness {
    pub member: (u8, u8, u8),
    pub conflict: (u8, u8, u8),
}

/// Finds a witness against non-interference, if any: some `(i,j,k)` in the
/// set together with an `(i,u,j)` or a `(j,v,k)` also in the set.
pub fn interference_witness(set: &TripleSet) -> Option<InterferenceWitness> {
    for (i, j, k) in set.iter() {
        for (a, b, c) in set.iter() {
            let into_middle = a == i && c == j; // (i,u,j)
            let from_middle = a == j && c == k; // (j,v,k)
            if into_middle || from_middle {
                return Some(InterferenceWitness { member: (i, j, k), conflict: (a, b, c) });
            }
        }
    }
    None
}

pub fn is_noninterfering(set: &TripleSet) -> bool {
    interference_witness(set).is_none()
}

/// The default block split: two blocks of `floor(n/3)` and the remainder.
pub fn default_split(n: usize) -> (usize, usize, usize) {
    let third = n / 3;
    (third, third, n - 2 * third)
}

/// The non-interfering product set over the consecutive blocks
/// `X1 = 1..=a`, `X2 = a+1..=a+b`, `X3 = a+b+1..=n`, with `a + b + c = n`.
/// Its size is `a * b * c`.
pub fn build_noninterfering(n: usize, parts: (usize, usize, usize)) -> Result<TripleSet> {
    let (a, b, c) = parts;
    if a + b + c != n {
        return Err(Error::BadPartition { parts, n });
    }
    let mut members = BTreeSet::new();
    for i in 1..=a {
        for j in a + 1..=a + b {
            for k in a + b + 1..=n {
                members.insert((i as u8, j as u8, k as u8));
            }
        }
    }
    Ok(TripleSet { n, members })
}

/// The indicator alpha function of a triple set. Validity is not a
/// precondition here; subsets of non-interfering sets always come out
/// valid, anything else is the caller's problem to check.
pub fn alpha_from_subset(set: &TripleSet) -> Result<AlphaFunction> {
    let ones: Vec<_> = set.iter().collect();
    AlphaFunction::from_ones(set.n, &ones)
}

/// `C(n, k)` exactly.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let mut out = BigUint::one();
    for i in 0..k {
        out = out * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// The exact bound values at a given n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    /// `2^floor(n/3)^3 / n!`, kept as an exact rational (it drops below 1
    /// for small n).
    pub lower_reduced: BigRational,
    /// `2^floor(n/3)^3`, a lower bound for the ordered census.
    pub lower_ordered: BigUint,
    /// `18^C(n,3)`, an upper bound for both censuses.
    pub upper: BigUint,
    pub binom: BigUint,
}

pub fn bounds_report(n: usize) -> BoundsReport {
    let third = n / 3;
    let exponent = third * third * third;
    let lower_ordered = BigUint::from(2u32).pow(exponent as u32);
    let binom = binomial(n, 3);
    let upper = BigUint::from(18u32).pow(binom.to_u32().expect("C(n,3) fits u32"));
    let lower_reduced = BigRational::new(
        lower_ordered.clone().into(),
        factorial(n).into(),
    );
    BoundsReport { n, lower_reduced, lower_ordered, upper, binom }
}

/// Analytic window for `limsup log(reduced count) / n^3` plus the
/// finite-n data points available from the censuses.
#[derive(Clone, Debug, PartialEq)]
pub struct SigmaEstimate {
    /// `ln 2 / 27`.
    pub analytic_lower: f64,
    /// `ln 18 / 6`.
    pub analytic_upper: f64,
    /// `(n, ln(reduced count) / n^3)` per computed n.
    pub empirical: Vec<(usize, f64)>,
}

pub fn sigma_estimate(reduced_counts: &[(usize, u64)]) -> SigmaEstimate {
    SigmaEstimate {
        analytic_lower: 2f64.ln() / 27.0,
        analytic_upper: 18f64.ln() / 6.0,
        empirical: reduced_counts
            .iter()
            .map(|&(n, count)| (n, (count as f64).ln() / (n * n * n) as f64))
            .collect(),
    }
}
