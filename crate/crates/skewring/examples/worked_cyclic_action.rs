//! The worked order-4 example: a partial action of C4 on three points
//! whose skew ring is simple, with every intermediate fact computed.
//!
//! Run with: cargo run --example worked_cyclic_action

use skewring::corpus::c4_three_point_action;
use skewring::linalg::PrimeField;
use skewring::paction::{function_ring_ideals, AlgebraPartialAction};
use skewring::report::analyze_action;
use skewring::ring::SkewRing;

fn main() {
    let action = c4_three_point_action();
    println!("carrier: {:?}", action.points());
    println!("axioms:  {}", action.validate());

    let field = PrimeField::new(2).unwrap();

    // The ideal lattice of R₀ = K^3 is the subset lattice: six proper
    // nonzero ideals, and the action leaves none of them invariant.
    let algebra = AlgebraPartialAction::new(action.clone(), field);
    let ideals = function_ring_ideals(field, action.size());
    let proper: Vec<_> = ideals.iter().filter(|i| !i.is_zero() && !i.is_full()).collect();
    println!("proper nonzero ideals of R₀: {}", proper.len());
    for ideal in &proper {
        assert!(!algebra.is_invariant_ideal(ideal));
    }
    println!("invariant among them: 0, so R₀ is C4-simple: {}", action.is_g_simple());

    let ring = SkewRing::new(algebra).unwrap();
    println!("ring dimension N = {}", ring.dim());
    println!("centralizer of R₀δ₀ has dimension {}", ring.centralizer_of_r0().rank());
    println!("R₀δ₀ maximal commutative: {}", ring.is_maximal_commutative());
    println!("simple (exhaustive oracle): {:?}", ring.is_simple_oracle(16).as_bool());

    // The full report over F_3 as well; all checks and cross-checks.
    let report = analyze_action("c4-example", PrimeField::new(3).unwrap(), &action, 16);
    println!("\nfull report over F_3:\n{report}");
}
