//! The full n = 4 census: ordered count by both methods, orbit grouping,
//! Burnside recount, and the orbit-size profile.
//!
//! Run with `cargo run --release --example census_n4`.

use catenum::census::{
    burnside_count, enumerate_ordered, enumerate_reduced, Budget, Method,
};
use std::collections::BTreeMap;
use std::time::Instant;

fn main() {
    let budget = Budget::default();

    let t = Instant::now();
    let backtrack = enumerate_ordered(4, Method::Backtrack, false, &budget).unwrap();
    println!("ordered (backtrack):  {:>8}   [{:.2?}]", backtrack.count, t.elapsed());

    let t = Instant::now();
    let exhaustive = enumerate_ordered(4, Method::Exhaustive, true, &budget).unwrap();
    println!("ordered (exhaustive): {:>8}   [{:.2?}, oracle-certified]", exhaustive.count, t.elapsed());
    assert_eq!(backtrack.count, exhaustive.count);

    let t = Instant::now();
    let reduced = enumerate_reduced(4, &budget).unwrap();
    println!("reduced classes:      {:>8}   [{:.2?}]", reduced.count, t.elapsed());

    let t = Instant::now();
    let burnside = burnside_count(4, &budget).unwrap();
    println!("Burnside recount:     {:>8}   [{:.2?}]", burnside, t.elapsed());
    assert_eq!(burnside, reduced.count);

    let orbit_total: u64 = reduced.classes.iter().map(|c| c.orbit_size).sum();
    assert_eq!(orbit_total, backtrack.count);
    println!("orbit sizes sum to the ordered count: {orbit_total}");

    let mut profile: BTreeMap<u64, usize> = BTreeMap::new();
    for class in &reduced.classes {
        *profile.entry(class.orbit_size).or_insert(0) += 1;
    }
    println!("orbit-size profile (size -> classes): {profile:?}");
}
