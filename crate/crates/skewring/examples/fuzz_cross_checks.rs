//! Seeded random corpus: restriction-of-global partial actions run through
//! every cross-check. Same seed, same summary, byte for byte.
//!
//! Run with: cargo run --example fuzz_cross_checks

use skewring::linalg::PrimeField;
use skewring::report::run_fuzz;

fn main() {
    let field = PrimeField::new(2).unwrap();
    for order in [2, 3, 4] {
        let summary = run_fuzz(7, 50, order, 4, field, 16);
        println!("{summary}\n");
        assert_eq!(summary.failures, 0);
    }
}
