//! Enumeration of valid alpha functions: labeled (ordered) counts,
//! orbits under object relabeling (reduced counts), an independent
//! Burnside recount, and the five-class table at n = 3.
//!
//! Two enumeration methods are provided and must agree: a backtracking
//! search that assigns support bits in rank order and prunes as soon as a
//! fully-assigned constraint fails, and a plain exhaustive scan of all
//! `2^(n(n-1)(n-2))` masks (n <= 4). Parallel runs split the search space
//! by bit prefix; partial results merge commutatively, so counts and
//! class lists are identical for any worker count.

use crate::compose::{build_table, is_associative};
use crate::conditions::{mask_is_valid, ConstraintTables};
use crate::model::{triple_rank, AlphaFunction, Perm};
use crate::{Error, Result, MAX_ALPHA_N};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::OnceLock;

/// Caps on what the census functions will attempt. The defaults keep
/// every run interactive; `CATENUM_BUDGET` (see [`Budget::from_env`])
/// raises them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Largest n for the exhaustive method (2^24 masks at the default 4).
    pub max_exhaustive_n: usize,
    /// Largest n for the backtracking method.
    pub max_backtrack_n: usize,
    /// Largest n for orbit grouping and Burnside counting (n! relabelings
    /// per alpha).
    pub max_reduced_n: usize,
    /// Abort an orbit grouping that stores more canonical forms than this.
    pub max_classes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_exhaustive_n: 4,
            max_backtrack_n: 6,
            max_reduced_n: 5,
            max_classes: 4_000_000,
        }
    }
}

impl Budget {
    /// Reads overrides from `CATENUM_BUDGET`, a comma-separated list of
    /// `exhaustive=N`, `backtrack=N`, `reduced=N`, `classes=N` entries.
    /// Unset keys keep their defaults.
    pub fn from_env() -> Result<Self> {
        let mut budget = Budget::default();
        let Ok(raw) = std::env::var("CATENUM_BUDGET") else {
            return Ok(budget);
        };
        for entry in raw.split(',').filter(|e| !e.trim().is_empty()) {
            let (key, value) = entry
                .split_once('=')
                .ok_or_else(|| Error::BudgetParse(format!("`{entry}` is not key=value")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| Error::BudgetParse(format!("`{entry}` has a non-integer value")))?;
            match key.trim() {
                "exhaustive" => budget.max_exhaustive_n = value,
                "backtrack" => budget.max_backtrack_n = value,
                "reduced" => budget.max_reduced_n = value,
                "classes" => budget.max_classes = value,
                other => {
                    return Err(Error::BudgetParse(format!("unknown key `{other}`")));
                }
            }
        }
        Ok(budget)
    }
}

/// How to enumerate the valid alpha functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Backtrack,
    Exhaustive,
}

/// Count of valid alpha functions with labeled objects.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedCensus {
    pub n: usize,
    pub count: u64,
    pub method: Method,
    /// True when every counted alpha was re-checked against the
    /// category-axiom oracle.
    pub certified: bool,
}

/// One relabeling orbit of valid alpha functions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedClass {
    /// Orbit representative: minimal serialized bit string over all
    /// object permutations.
    pub canonical: AlphaFunction,
    pub orbit_size: u64,
}

/// The valid alpha functions grouped into relabeling orbits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedCensus {
    pub n: usize,
    pub count: u64,
    /// Sorted by (orbit size, canonical bit string).
    pub classes: Vec<ReducedClass>,
}

/// A reduced class at n = 3 with its traditional label.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledClass {
    pub label: &'static str,
    pub canonical: AlphaFunction,
    pub orbit_size: u64,
}

/// Relabels an alpha function through an object permutation:
/// `act(sigma, alpha)(i, j, k) = alpha(sigma^-1 i, sigma^-1 j, sigma^-1 k)`,
/// i.e. the support is carried forward through `sigma`.
pub fn act(sigma: &Perm, alpha: &AlphaFunction) -> AlphaFunction {
    let n = alpha.n();
    assert_eq!(sigma.n(), n, "permutation size must match alpha");
    let mut bits = 0u128;
    for (i, j, k) in alpha.ones() {
        let rank = triple_rank(n, sigma.apply(i), sigma.apply(j), sigma.apply(k))
            .expect("permuted triple stays distinct and in range");
        bits |= 1u128 << rank;
    }
    AlphaFunction::from_bits(n, bits).expect("same n")
}

/// All permutations of `1..=n` together with their action on triple
/// ranks: `rank_perms[s][r]` is the rank of the pointwise image of the
/// rank-`r` triple under permutation `s`.
struct SymTables {
    perms: Vec<Perm>,
    rank_perms: Vec<Vec<u16>>,
}

impl SymTables {
    fn build(n: usize) -> Self {
        let perms = Perm::all(n);
        let tables = ConstraintTables::get(n);
        let rank_perms = perms
            .iter()
            .map(|sigma| {
                tables
                    .triples
                    .iter()
                    .map(|&(i, j, k)| {
                        triple_rank(n, sigma.apply(i), sigma.apply(j), sigma.apply(k))
                            .expect("distinct") as u16
                    })
                    .collect()
            })
            .collect();
        SymTables { perms, rank_perms }
    }

    fn get(n: usize) -> &'static SymTables {
        static CACHE: [OnceLock<SymTables>; MAX_ALPHA_N + 1] =
            [const { OnceLock::new() }; MAX_ALPHA_N + 1];
        assert!(n >= 1 && n <= MAX_ALPHA_N);
        CACHE[n].get_or_init(|| SymTables::build(n))
    }
}

fn apply_rank_perm(rank_perm: &[u16], mask: u128) -> u128 {
    let mut out = 0u128;
    let mut m = mask;
    while m != 0 {
        let r = m.trailing_zeros() as usize;
        out |= 1u128 << rank_perm[r];
        m &= m - 1;
    }
    out
}

fn lex_key(bit_count: usize, mask: u128) -> u128 {
    if bit_count == 0 {
        0
    } else {
        mask.reverse_bits() >> (128 - bit_count)
    }
}

fn canonical_mask(sym: &SymTables, bit_count: usize, mask: u128) -> u128 {
    let mut best = mask;
    let mut best_key = lex_key(bit_count, mask);
    for rank_perm in &sym.rank_perms {
        let image = apply_rank_perm(rank_perm, mask);
        let key = lex_key(bit_count, image);
        if key < best_key {
            best_key = key;
            best = image;
        }
    }
    best
}

/// Minimal serialized bit string of `act(sigma, alpha)` over all
/// permutations `sigma`. Constant on orbits and idempotent.
pub fn canonical_form(alpha: &AlphaFunction) -> AlphaFunction {
    let n = alpha.n();
    let tables = ConstraintTables::get(n);
    let mask = canonical_mask(SymTables::get(n), tables.bit_count, alpha.bits());
    AlphaFunction::from_bits(n, mask).expect("same n")
}

/// Per-bit completion lists for the backtracker: constraints are checked
/// at the highest-ranked bit they mention, when all their bits are
/// assigned.
struct SearchTables {
    bit_count: usize,
    /// `c1_partners[p]` holds the ranks `q` such that bits q and p may
    /// not both be 1 and this pair completes at p.
    c1_partners: Vec<Vec<u16>>,
    /// Condition-2 rank quadruples completing at p.
    c2_quads: Vec<Vec<[u16; 4]>>,
}

impl SearchTables {
    fn build(tables: &ConstraintTables) -> Self {
        let bit_count = tables.bit_count;
        let mut c1_partners = vec![Vec::new(); bit_count];
        let mut seen = std::collections::HashSet::new();
        for &(t, swap_jk, swap_ij) in &tables.c1 {
            for other in [swap_jk, swap_ij] {
                let (lo, hi) = (t.min(other), t.max(other));
                if seen.insert((lo, hi)) {
                    c1_partners[hi as usize].push(lo);
                }
            }
        }
        let mut c2_quads = vec![Vec::new(); bit_count];
        for &(_, quad) in &tables.c2 {
            let hi = *quad.iter().max().expect("nonempty") as usize;
            c2_quads[hi].push(quad);
        }
        SearchTables { bit_count, c1_partners, c2_quads }
    }

    fn get(n: usize) -> &'static SearchTables {
        static CACHE: [OnceLock<SearchTables>; MAX_ALPHA_N + 1] =
            [const { OnceLock::new() }; MAX_ALPHA_N + 1];
        assert!(n >= 1 && n <= MAX_ALPHA_N);
        CACHE[n].get_or_init(|| SearchTables::build(ConstraintTables::get(n)))
    }

    /// Whether some constraint completing at `pos` fails under `mask`
    /// (bits above `pos` must be unassigned zeros).
    #[inline]
    fn violates_at(&self, mask: u128, pos: usize) -> bool {
        if mask >> pos & 1 == 1 {
            for &q in &self.c1_partners[pos] {
                if mask >> q & 1 == 1 {
                    return true;
                }
            }
        }
        for &[a, b, c, d] in &self.c2_quads[pos] {
            if (mask >> a & 1 == 1 && mask >> b & 1 == 1)
                != (mask >> c & 1 == 1 && mask >> d & 1 == 1)
            {
                return true;
            }
        }
        false
    }
}

/// Depth-first search over support bits from `pos` upward. `rep`, when
/// present, maps each rank to the smallest rank in its orbit under a
/// fixed permutation; non-representative bits are forced, which restricts
/// the walk to permutation-fixed assignments.
fn dfs(tables: &SearchTables, rep: Option<&[u16]>, pos: usize, mask: u128, f: &mut impl FnMut(u128)) {
    if pos == tables.bit_count {
        f(mask);
        return;
    }
    let forced = rep.and_then(|rep| {
        let r = rep[pos] as usize;
        (r != pos).then(|| mask >> r & 1)
    });
    for value in 0..=1u128 {
        if let Some(v) = forced {
            if v != value {
                continue;
            }
        }
        let next = mask | value << pos;
        if !tables.violates_at(next, pos) {
            dfs(tables, rep, pos + 1, next, f);
        }
    }
}

/// Runs `fold` over every valid support mask. The search is split by the
/// first `split_depth` bits into independent subtrees; per-subtree results
/// are combined with `merge`, which must be commutative and associative
/// so the outcome does not depend on scheduling.
fn backtrack_fold<R: Send>(
    n: usize,
    fold: impl Fn(&mut R, u128) + Sync,
    make: impl Fn() -> R + Send + Sync,
    merge: impl Fn(R, R) -> R + Send + Sync,
) -> R {
    let tables = SearchTables::get(n);
    let split_depth = tables.bit_count.min(12);
    let make = &make;
    (0u64..1 << split_depth)
        .into_par_iter()
        .map(|prefix| {
            let mut acc = make();
            let mask = prefix as u128;
            // Constraints at p only read ranks <= p, so the prefix can be
            // validated bit by bit exactly as the search would have.
            if (0..split_depth).all(|p| !tables.violates_at(mask, p)) {
                dfs(tables, None, split_depth, mask, &mut |m| fold(&mut acc, m));
            }
            acc
        })
        .reduce(make, merge)
}

/// Visits every valid mask sequentially, in increasing support-mask order.
pub(crate) fn for_each_valid(n: usize, mut f: impl FnMut(u128)) {
    let tables = SearchTables::get(n);
    dfs(tables, None, 0, 0, &mut f);
}

/// Every valid alpha function for `n`, in search order. Intended for
/// small n (the list at n = 4 has a few thousand entries).
pub fn valid_alphas(n: usize) -> Result<Vec<AlphaFunction>> {
    if n == 0 || n > MAX_ALPHA_N {
        return Err(Error::AlphaTooLarge { n });
    }
    let mut out = Vec::new();
    for_each_valid(n, |mask| {
        out.push(AlphaFunction::from_bits(n, mask).expect("in range"))
    });
    Ok(out)
}

fn check_alpha_capacity(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ObjectOutOfRange { value: 0, n })
    } else if n > MAX_ALPHA_N {
        Err(Error::AlphaTooLarge { n })
    } else {
        Ok(())
    }
}

/// Counts the valid alpha functions for `n` objects, i.e. the reduced
/// categories with labeled objects.
///
/// With `certify`, every survivor's composition table is re-checked by
/// the exhaustive axiom oracle; any disagreement is an error rather than
/// a count.
pub fn enumerate_ordered(
    n: usize,
    method: Method,
    certify: bool,
    budget: &Budget,
) -> Result<OrderedCensus> {
    check_alpha_capacity(n)?;
    let cap = match method {
        Method::Exhaustive => budget.max_exhaustive_n,
        Method::Backtrack => budget.max_backtrack_n,
    };
    if n > cap {
        return Err(Error::MethodUnavailable {
            method: match method {
                Method::Exhaustive => "exhaustive",
                Method::Backtrack => "backtrack",
            },
            n,
            max: cap,
        });
    }

    // (valid, oracle-confirmed, example disagreement)
    let tally = |acc: &mut (u64, u64, Option<u128>), mask: u128| {
        acc.0 += 1;
        if certify {
            let alpha = AlphaFunction::from_bits(n, mask).expect("in range");
            if is_associative(&build_table(&alpha)) {
                acc.1 += 1;
            } else if acc.2.is_none() {
                acc.2 = Some(mask);
            }
        }
    };
    let merge = |a: (u64, u64, Option<u128>), b: (u64, u64, Option<u128>)| {
        (a.0 + b.0, a.1 + b.1, a.2.or(b.2))
    };

    let (count, confirmed, witness) = match method {
        Method::Backtrack => backtrack_fold(n, tally, || (0, 0, None), merge),
        Method::Exhaustive => {
            let tables = ConstraintTables::get(n);
            if tables.bit_count >= 64 {
                return Err(Error::MethodUnavailable { method: "exhaustive", n, max: 5 });
            }
            (0u64..1 << tables.bit_count)
                .into_par_iter()
                .fold(
                    || (0, 0, None),
                    |mut acc, mask| {
                        if mask_is_valid(tables, mask as u128) {
                            tally(&mut acc, mask as u128);
                        }
                        acc
                    },
                )
                .reduce(|| (0, 0, None), merge)
        }
    };

    if certify && confirmed != count {
        let alpha = AlphaFunction::from_bits(n, witness.unwrap_or(0)).expect("in range");
        return Err(Error::OracleMismatch { alpha: alpha.bits_string() });
    }
    Ok(OrderedCensus { n, count, method, certified: certify })
}

/// Groups the valid alpha functions into relabeling orbits via canonical
/// forms.
pub fn enumerate_reduced(n: usize, budget: &Budget) -> Result<ReducedCensus> {
    check_alpha_capacity(n)?;
    if n > budget.max_reduced_n {
        return Err(Error::MethodUnavailable { method: "reduced", n, max: budget.max_reduced_n });
    }
    let sym = SymTables::get(n);
    let bit_count = ConstraintTables::get(n).bit_count;
    let max_classes = budget.max_classes;

    let classes: HashMap<u128, u64> = backtrack_fold(
        n,
        |map: &mut HashMap<u128, u64>, mask| {
            *map.entry(canonical_mask(sym, bit_count, mask)).or_insert(0) += 1;
        },
        HashMap::new,
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        },
    );
    if classes.len() > max_classes {
        return Err(Error::BudgetExceeded(format!(
            "{} canonical classes at n={n} exceed the cap of {max_classes}",
            classes.len()
        )));
    }

    let mut classes: Vec<ReducedClass> = classes
        .into_iter()
        .map(|(mask, orbit_size)| ReducedClass {
            canonical: AlphaFunction::from_bits(n, mask).expect("in range"),
            orbit_size,
        })
        .collect();
    classes.sort_by_key(|c| (c.orbit_size, c.canonical.lex_key()));
    Ok(ReducedCensus { n, count: classes.len() as u64, classes })
}

/// Independent orbit count: `(1/n!) * sum over sigma of #{valid alpha
/// fixed by sigma}`. Fixed-point sets are enumerated directly by forcing
/// each triple-rank orbit of `sigma` to a single bit, so this never
/// consults [`canonical_form`].
pub fn burnside_count(n: usize, budget: &Budget) -> Result<u64> {
    check_alpha_capacity(n)?;
    if n > budget.max_reduced_n {
        return Err(Error::MethodUnavailable { method: "burnside", n, max: budget.max_reduced_n });
    }
    let sym = SymTables::get(n);
    let tables = SearchTables::get(n);

    let total: u64 = sym
        .rank_perms
        .par_iter()
        .map(|rank_perm| {
            // Smallest rank in each cycle of the induced rank permutation.
            let mut rep: Vec<u16> = (0..rank_perm.len() as u16).collect();
            for start in 0..rank_perm.len() {
                let mut lo = start;
                let mut cur = rank_perm[start] as usize;
                while cur != start {
                    lo = lo.min(cur);
                    cur = rank_perm[cur] as usize;
                }
                rep[start] = lo as u16;
            }
            let mut fixed = 0u64;
            dfs(tables, Some(&rep), 0, 0, &mut |_| fixed += 1);
            fixed
        })
        .sum();

    let order = sym.perms.len() as u64;
    assert_eq!(total % order, 0, "orbit-counting sum must divide by n!");
    Ok(total / order)
}

/// Matches the five reduced classes at n = 3 to their labels by support
/// size and orbit size: A1 empty, A2 a single triple, A3 an antipodal
/// pair, A4 a distance-two pair, A5 an alternating three-cycle.
pub fn classify_n3(census: &ReducedCensus) -> Result<Vec<LabeledClass>> {
    if census.n != 3 {
        return Err(Error::Classification(format!(
            "expected a census at n=3, got n={}",
            census.n
        )));
    }
    let mut out = Vec::new();
    for class in &census.classes {
        let label = match (class.orbit_size, class.canonical.support_size()) {
            (1, 0) => "A1",
            (6, 1) => "A2",
            (3, 2) => "A3",
            (6, 2) => "A4",
            (2, 3) => "A5",
            (orbit, support) => {
                return Err(Error::Classification(format!(
                    "unexpected class: orbit size {orbit}, support size {support}"
                )))
            }
        };
        out.push(LabeledClass {
            label,
            canonical: class.canonical,
            orbit_size: class.orbit_size,
        });
    }
    out.sort_by_key(|c| c.label);
    if out.iter().map(|c| c.label).collect::<Vec<_>>() != ["A1", "A2", "A3", "A4", "A5"] {
        return Err(Error::Classification(
            "census does not contain exactly the five expected classes".into(),
        ));
    }
    Ok(out)
}
