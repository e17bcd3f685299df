//! The n = 5 census: backtracked ordered count (77.6 million valid alpha
//! functions), orbit grouping, Burnside recount, and the bound sandwich.
//! Expect a run time of several minutes.
//!
//! Run with `cargo run --release --example census_n5`.

use catenum::bounds::bounds_report;
use catenum::census::{burnside_count, enumerate_ordered, enumerate_reduced, Budget, Method};
use num_bigint::BigUint;
use std::time::Instant;

fn main() {
    let budget = Budget::default();

    let t = Instant::now();
    let ordered = enumerate_ordered(5, Method::Backtrack, false, &budget).unwrap();
    println!("ordered (backtrack):  {:>10}   [{:.2?}]", ordered.count, t.elapsed());

    let t = Instant::now();
    let reduced = enumerate_reduced(5, &budget).unwrap();
    println!("reduced classes:      {:>10}   [{:.2?}]", reduced.count, t.elapsed());

    let t = Instant::now();
    let burnside = burnside_count(5, &budget).unwrap();
    println!("Burnside recount:     {:>10}   [{:.2?}]", burnside, t.elapsed());
    assert_eq!(burnside, reduced.count);

    let orbit_total: u64 = reduced.classes.iter().map(|c| c.orbit_size).sum();
    assert_eq!(orbit_total, ordered.count);

    let bounds = bounds_report(5);
    println!(
        "bounds: {}/{} <= {} <= {}",
        bounds.lower_reduced.numer(),
        bounds.lower_reduced.denom(),
        reduced.count,
        bounds.upper
    );
    assert!(BigUint::from(ordered.count) >= bounds.lower_ordered);
    assert!(BigUint::from(ordered.count) <= bounds.upper);
}
