//! Acceptance suite: one test per criterion, each printing a PASS/FAIL
//! line. Run with
//!
//! ```text
//! cargo test --release -p catenum --test acceptance -- --nocapture
//! ```
//!
//! Set `CATENUM_SLOW=1` to extend criterion 3 to the full 2^24 scan at
//! n = 4 and criterion 5 to the n = 5 census (several extra minutes).

use catenum::bounds::{
    alpha_from_subset, bounds_report, build_noninterfering, default_split, is_noninterfering,
    sigma_estimate,
};
use catenum::bruteforce::two_object_census;
use catenum::census::{
    burnside_count, enumerate_ordered, enumerate_reduced, Budget, Method,
};
use catenum::compose::{build_table, check_axioms, is_associative};
use catenum::conditions::{alpha_check, alpha_is_valid};
use catenum::model::AlphaFunction;
use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::HashSet;

/// Values computed once by the exhaustive n = 4 scan and frozen as
/// regression constants; the backtracking search must keep reproducing
/// them.
const N4_ORDERED: u64 = 6278;
const N4_REDUCED: u64 = 289;
/// (orbit size, number of classes) profile of the n = 4 reduced census.
const N4_ORBIT_PROFILE: [(u64, usize); 7] =
    [(1, 1), (3, 1), (4, 1), (6, 7), (8, 3), (12, 35), (24, 241)];

/// Frozen from the first full 2^18 two-object scan.
const TWO_OBJECT_ASSOCIATIVE: u64 = 10;
const TWO_OBJECT_ASSOCIATIVE_REDUCED: u64 = 4;

/// Computed by the n = 5 backtracking census (the ordered count takes
/// tens of seconds, the orbit grouping several minutes); checked only
/// under `CATENUM_SLOW=1`.
const N5_ORDERED: u64 = 77_658_520;
const N5_REDUCED: u64 = 649_409;

const SAMPLE_SEED: u64 = 0xCA7E17;

fn slow_tests_enabled() -> bool {
    std::env::var("CATENUM_SLOW").is_ok_and(|v| !v.is_empty() && v != "0")
}

fn criterion(number: u32, name: &str, ok: bool) {
    println!(
        "criterion {number} {}: {name}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {number} failed: {name}");
}

#[test]
fn criterion_1_paper_constants() {
    let budget = Budget::default();
    let ordered = |n| enumerate_ordered(n, Method::Backtrack, false, &budget).unwrap().count;
    let ok_counts = ordered(1) == 1 && ordered(2) == 1 && ordered(3) == 18;

    let reduced2 = enumerate_reduced(2, &budget).unwrap();
    let reduced3 = enumerate_reduced(3, &budget).unwrap();
    let mut sizes: Vec<u64> = reduced3.classes.iter().map(|c| c.orbit_size).collect();
    sizes.sort_unstable();
    let ok_reduced = reduced2.count == 1 && reduced3.count == 5 && sizes == [1, 2, 3, 6, 6];

    criterion(
        1,
        "census constants: ordered 1/1/18, reduced 1/5, orbits 1+6+3+6+2",
        ok_counts && ok_reduced,
    );
}

#[test]
fn criterion_2_two_object_rederivation() {
    let census = two_object_census();
    let ok = census.raw_tables == 1 << 18
        && census.associative == TWO_OBJECT_ASSOCIATIVE
        && census.associative_reduced == TWO_OBJECT_ASSOCIATIVE_REDUCED
        && census.ordered_classes == 1
        && census.reduced_classes == 1
        && census.matches_rules
        && census.f_idempotent
        && census.g_loop_is_f;
    criterion(
        2,
        "2^18 raw two-object tables collapse to the single rules table",
        ok,
    );
}

#[test]
fn criterion_3_oracle_equivalence() {
    // n = 3: both directions over all 64 alpha functions.
    let mut n3_valid = 0;
    let mut n3_agree = true;
    for mask in 0u128..64 {
        let alpha = AlphaFunction::from_bits(3, mask).unwrap();
        let by_conditions = alpha_is_valid(&alpha);
        let by_oracle = is_associative(&build_table(&alpha));
        n3_agree &= by_conditions == by_oracle;
        n3_valid += u32::from(by_conditions);
    }
    criterion(3, "n=3 equivalence over all 2^6 alphas (18 valid)", n3_agree && n3_valid == 18);

    // n = 4: the oracle confirms every backtracked survivor...
    let budget = Budget::default();
    let certified = enumerate_ordered(4, Method::Backtrack, true, &budget).unwrap();
    criterion(3, "n=4 all survivors oracle-certified", certified.count == N4_ORDERED);

    // ...and seeded samples (mostly rejects) agree in both directions.
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    let mut sampled_valid = 0u32;
    let mut sample_agree = true;
    for _ in 0..1_000_000 {
        let mask = rng.random_range(0u128..1 << 24);
        let alpha = AlphaFunction::from_bits(4, mask).unwrap();
        let by_conditions = alpha_is_valid(&alpha);
        let by_oracle = is_associative(&build_table(&alpha));
        sample_agree &= by_conditions == by_oracle;
        sampled_valid += u32::from(by_conditions);
    }
    criterion(
        3,
        &format!("n=4 equivalence on 10^6 seeded samples (seed {SAMPLE_SEED:#x}, {sampled_valid} valid hits)"),
        sample_agree && sampled_valid > 0,
    );

    if slow_tests_enabled() {
        // Full 2^24 pre-filter; oracle on every survivor and on a seeded
        // sample of 10^5 rejects.
        let exhaustive = enumerate_ordered(4, Method::Exhaustive, true, &budget).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED ^ 1);
        let mut rejects_checked = 0u32;
        let mut rejects_agree = true;
        while rejects_checked < 100_000 {
            let mask = rng.random_range(0u128..1 << 24);
            let alpha = AlphaFunction::from_bits(4, mask).unwrap();
            if alpha_is_valid(&alpha) {
                continue;
            }
            rejects_agree &= !is_associative(&build_table(&alpha));
            rejects_checked += 1;
        }
        criterion(
            3,
            "n=4 exhaustive 2^24 equivalence (slow gate)",
            exhaustive.count == N4_ORDERED && rejects_agree,
        );
    } else {
        println!("criterion 3 NOTE: full 2^24 gate skipped (set CATENUM_SLOW=1)");
    }
}

#[test]
fn criterion_4_n4_self_consistency() {
    let budget = Budget::default();
    let backtrack = enumerate_ordered(4, Method::Backtrack, false, &budget).unwrap();
    let exhaustive = enumerate_ordered(4, Method::Exhaustive, false, &budget).unwrap();
    criterion(
        4,
        &format!("n=4 backtrack = exhaustive = {N4_ORDERED}"),
        backtrack.count == exhaustive.count && backtrack.count == N4_ORDERED,
    );

    let reduced = enumerate_reduced(4, &budget).unwrap();
    let orbit_sum: u64 = reduced.classes.iter().map(|c| c.orbit_size).sum();
    criterion(
        4,
        &format!("n=4 orbit sizes sum to the ordered count ({orbit_sum})"),
        orbit_sum == backtrack.count,
    );

    let burnside = burnside_count(4, &budget).unwrap();
    criterion(
        4,
        &format!("n=4 Burnside recount = reduced count = {N4_REDUCED}"),
        burnside == reduced.count && reduced.count == N4_REDUCED,
    );

    let mut profile: Vec<(u64, usize)> = Vec::new();
    for class in &reduced.classes {
        match profile.last_mut() {
            Some((size, count)) if *size == class.orbit_size => *count += 1,
            _ => profile.push((class.orbit_size, 1)),
        }
    }
    criterion(4, "n=4 orbit-size profile is stable", profile == N4_ORBIT_PROFILE);

    let ordered_rat = BigRational::from_integer(BigUint::from(backtrack.count).into());
    let reduced_rat = BigRational::from_integer(BigUint::from(reduced.count).into());
    let fact24 = BigRational::from_integer(24.into());
    criterion(
        4,
        "n=4 sandwich ordered/4! <= reduced <= ordered",
        &ordered_rat / &fact24 <= reduced_rat && reduced_rat <= ordered_rat,
    );
}

#[test]
fn criterion_5_bounds_sandwich() {
    let budget = Budget::default();
    let mut counts: Vec<(usize, u64, u64)> = Vec::new(); // (n, ordered, reduced)
    for n in 1..=4 {
        let ordered = enumerate_ordered(n, Method::Backtrack, false, &budget).unwrap().count;
        let reduced = enumerate_reduced(n, &budget).unwrap().count;
        counts.push((n, ordered, reduced));
    }
    if slow_tests_enabled() {
        let ordered = enumerate_ordered(5, Method::Backtrack, false, &budget).unwrap().count;
        let reduced = enumerate_reduced(5, &budget).unwrap().count;
        criterion(
            5,
            &format!("n=5 census reproduces ordered {N5_ORDERED} / reduced {N5_REDUCED}"),
            ordered == N5_ORDERED && reduced == N5_REDUCED,
        );
        counts.push((5, ordered, reduced));
    } else {
        println!("criterion 5 NOTE: n=5 census skipped (set CATENUM_SLOW=1)");
    }

    let mut ok = true;
    for &(n, ordered, reduced) in &counts {
        let b = bounds_report(n);
        let reduced_rat = BigRational::from_integer(BigUint::from(reduced).into());
        let upper_rat = BigRational::from_integer(b.upper.clone().into());
        ok &= b.lower_reduced <= reduced_rat && reduced_rat <= upper_rat;
        ok &= b.lower_ordered <= BigUint::from(ordered) && BigUint::from(ordered) <= b.upper;
    }
    let b3 = bounds_report(3);
    ok &= b3.lower_reduced == BigRational::new(1.into(), 3.into())
        && b3.upper == BigUint::from(18u32);
    criterion(
        5,
        "exact sandwich 2^(n/3)^3/n! <= reduced <= 18^C(n,3) for every computed n",
        ok,
    );
}

#[test]
fn criterion_6_noninterfering_machinery() {
    let mut builds_ok = true;
    for n in 1..=6 {
        let set = build_noninterfering(n, default_split(n)).unwrap();
        builds_ok &= is_noninterfering(&set);
    }
    criterion(6, "default product sets pass non-interference for n <= 6", builds_ok);

    // Every subset of every default witness with at most 8 members yields
    // a distinct valid alpha: 2^|H| categories.
    let mut subsets_ok = true;
    for n in 3..=6 {
        let set = build_noninterfering(n, default_split(n)).unwrap();
        assert!(set.len() <= 8, "default split at n={n} stays within the subset gate");
        let mut seen = HashSet::new();
        for mask in 0u128..1 << set.len() {
            let alpha = alpha_from_subset(&set.subset(mask)).unwrap();
            subsets_ok &= alpha_is_valid(&alpha);
            subsets_ok &= seen.insert(alpha);
        }
        subsets_ok &= seen.len() == 1 << set.len();
    }
    criterion(6, "all 2^|H| subsets give distinct valid alphas (|H| <= 8)", subsets_ok);
}

#[test]
fn criterion_7_sigma_containment() {
    let budget = Budget::default();
    let counts: Vec<(usize, u64)> = (1..=4)
        .map(|n| (n, enumerate_reduced(n, &budget).unwrap().count))
        .collect();
    let est = sigma_estimate(&counts);
    let exact = est.analytic_lower == 2f64.ln() / 27.0 && est.analytic_upper == 18f64.ln() / 6.0;
    let window = est.analytic_lower > 0.025672
        && est.analytic_lower < 0.025673
        && est.analytic_upper > 0.481728
        && est.analytic_upper < 0.481729;
    let contained = est.empirical.iter().all(|&(_, v)| v <= est.analytic_upper);
    criterion(
        7,
        "sigma bounds are ln2/27 and ln18/6; empirical values stay below the upper bound",
        exact && window && contained,
    );
}

#[test]
fn criterion_8_determinism_across_worker_counts() {
    let bin = env!("CARGO_BIN_EXE_catenum");
    let run = |args: &[&str]| {
        let out = std::process::Command::new(bin)
            .args(args)
            .output()
            .expect("binary runs");
        assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        out.stdout
    };
    let mut ok = true;
    for mode in ["ordered", "reduced"] {
        let one = run(&["enumerate", "--n", "4", "--mode", mode, "--jobs", "1"]);
        let eight = run(&["enumerate", "--n", "4", "--mode", mode, "--jobs", "8"]);
        ok &= one == eight && !one.is_empty();
    }
    criterion(8, "enumerate --n 4 reports are byte-identical for --jobs 1 and 8", ok);
}

/// Not a numbered criterion: the oracle must also confirm units and
/// reducedness on every valid table (they hold by construction, but the
/// oracle is not allowed to assume that).
#[test]
fn oracle_confirms_units_and_reducedness() {
    for mask in 0u128..64 {
        let alpha = AlphaFunction::from_bits(3, mask).unwrap();
        let report = check_axioms(&build_table(&alpha));
        assert!(report.identity_ok);
        assert!(report.reduced_ok);
        assert_eq!(report.all_ok(), alpha_check(&alpha).valid);
        assert_eq!(report.all_ok(), report.violations.is_empty());
    }
}
