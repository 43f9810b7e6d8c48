//! Build ternary structure tables and verify them by brute force.
//!
//! Run with: cargo run --example identity_checks

use trilie::algebra::{
    adjoint_representation, check_fundamental_identity, check_representation, semidirect_product,
    ThreeLieAlgebra,
};
use trilie::format;
use trilie::linalg::Vector;

fn main() {
    // a 3-dimensional algebra with a single structure constant,
    // [e1, e2, e3] = e1
    let mut g = ThreeLieAlgebra::abelian(3);
    g.set_bracket(0, 1, 2, Vector::basis(3, 0)).unwrap();
    let report = check_fundamental_identity(&g);
    println!("single-constant table: {}", verdict(report.passed()));

    // the same table as a JSON document
    let text = r#"{ "dim": 3, "brackets": [ { "in": [1,2,3], "out": { "1": "1" } } ] }"#;
    let parsed = format::parse_algebra(text).unwrap();
    assert_eq!(parsed.table(), g.table());
    println!("parsed JSON table agrees with the hand-built one");

    // a table that violates the identity: [e1,e2,e3] = e1 and [e1,e2,e4] = e2
    let mut bad = ThreeLieAlgebra::abelian(4);
    bad.set_bracket(0, 1, 2, Vector::basis(4, 0)).unwrap();
    bad.set_bracket(0, 1, 3, Vector::basis(4, 1)).unwrap();
    let report = check_fundamental_identity(&bad);
    println!(
        "broken table: {} ({} violating tuples, first at {:?})",
        verdict(report.passed()),
        report.total_violations,
        report.violations[0].tuple,
    );

    // the adjoint action of a valid table is a representation, and the
    // semidirect product doubles the space
    let ad = adjoint_representation(&g);
    println!(
        "adjoint action: {}",
        verdict(check_representation(&g, &ad).unwrap().passed())
    );
    let double = semidirect_product(&g, &ad).unwrap();
    println!(
        "semidirect double (dim {}): {}",
        double.dim(),
        verdict(check_fundamental_identity(&double).passed())
    );
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}
