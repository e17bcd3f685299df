//! The headline numbers: censuses for one, two and three objects, and the
//! five labeled classes at n = 3.
//!
//! Run with `cargo run --release --example small_censuses`.

use catenum::census::{
    burnside_count, classify_n3, enumerate_ordered, enumerate_reduced, Budget, Method,
};

fn main() {
    let budget = Budget::default();

    println!("n  ordered  reduced  burnside");
    for n in 1..=4 {
        let ordered = enumerate_ordered(n, Method::Backtrack, true, &budget).unwrap();
        let reduced = enumerate_reduced(n, &budget).unwrap();
        let burnside = burnside_count(n, &budget).unwrap();
        println!("{n}  {:>7}  {:>7}  {:>8}", ordered.count, reduced.count, burnside);
        assert_eq!(reduced.count, burnside);
    }

    println!("\nthe five classes at n = 3:");
    let census = enumerate_reduced(3, &budget).unwrap();
    for class in classify_n3(&census).unwrap() {
        println!(
            "  {}: orbit size {}, support {:?}",
            class.label,
            class.orbit_size,
            class.canonical.ones()
        );
    }
}
