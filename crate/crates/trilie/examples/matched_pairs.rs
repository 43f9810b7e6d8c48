//! Matched pairs, their doubles, and the round trip through strict twilled
//! splittings.
//!
//! Run with: cargo run --example matched_pairs

use trilie::algebra::{adjoint_representation, Representation, ThreeLieAlgebra};
use trilie::corpus;
use trilie::matched::{check_matched_pair, matched_pair_double, MatchedPairData};
use trilie::split::SplitSpace;
use trilie::twilled::{analyze, strict_to_matched_pair};

fn main() {
    // an algebra acting on an abelian space by its adjoint action
    let g = corpus::example_5_6_algebra();
    let pair = MatchedPairData {
        g1: g.clone(),
        g2: ThreeLieAlgebra::abelian(3),
        rho: adjoint_representation(&g),
        mu: Representation::zero(3, 3),
    };
    let report = check_matched_pair(&pair).unwrap();
    println!(
        "matched pair axioms: {}",
        if report.passed() { "pass" } else { "fail" }
    );

    // the double is strict twilled ...
    let double = matched_pair_double(&pair).unwrap();
    let split = SplitSpace::new(3, 3).unwrap();
    let verdict = analyze(&double, &split).unwrap();
    println!(
        "double: twilled {}, strict {}",
        verdict.is_twilled, verdict.is_strict
    );

    // ... and extracting the pair back is the identity on every table
    let recovered = strict_to_matched_pair(&double, &split).unwrap();
    assert_eq!(recovered.g1.table(), pair.g1.table());
    assert_eq!(recovered.g2.table(), pair.g2.table());
    assert_eq!(recovered.rho, pair.rho);
    assert_eq!(recovered.mu, pair.mu);
    println!("round trip double -> pair -> double is the identity");

    // a pair with a bogus reverse action is refused with the equation name
    let mut bad_mu = Representation::zero(3, 3);
    bad_mu
        .set_action(0, 1, trilie::linalg::Matrix::identity(3))
        .unwrap();
    let bad = MatchedPairData {
        g1: ThreeLieAlgebra::abelian(3),
        g2: g,
        rho: Representation::zero(3, 3),
        mu: bad_mu,
    };
    match matched_pair_double(&bad) {
        Err(e) => println!("broken pair refused: {e}"),
        Ok(_) => unreachable!("the broken pair must be refused"),
    }
}
