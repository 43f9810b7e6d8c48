//! Verify operators, enumerate them over exact grids, and rebuild the
//! bundled golden tables.
//!
//! Run with: cargo run --example operator_search

use trilie::algebra::adjoint_representation;
use trilie::corpus::{self, ExampleId};
use trilie::matched::check_generalized_rep;
use trilie::ooperator::{
    enumerate_o_operators, example57_cross_check, induced_structures, is_o_operator,
    reproduce_example, GridSearch, MatrixShape, OOperatorCandidate,
};
use trilie::scalar::Scalar;

fn main() {
    let g = corpus::example_5_6_algebra();
    let ad = adjoint_representation(&g);

    // the bundled diagonal operator passes; the identity does not
    let c = OOperatorCandidate::new(g.clone(), ad.clone(), corpus::example_5_6_t()).unwrap();
    println!(
        "diag(1,1,-1): {}",
        if is_o_operator(&c).unwrap().passed() { "operator" } else { "not an operator" }
    );
    let id = OOperatorCandidate::new(g.clone(), ad.clone(), trilie::linalg::Matrix::identity(3))
        .unwrap();
    let report = is_o_operator(&id).unwrap();
    println!(
        "identity: {} residual tuples, first at {:?}",
        report.total_violations, report.violations[0].tuple
    );

    // exact grid enumeration over diagonal matrices
    let grid = GridSearch::new(
        vec![Scalar::from_int(-1), Scalar::zero(), Scalar::one()],
        MatrixShape::Diagonal,
    );
    let found = enumerate_o_operators(&g, &ad, &grid).unwrap();
    println!("diagonal {{-1,0,1}} grid: {} operators", found.len());

    // the induced (rho, nu) of an operator is not a generalized
    // representation, a genuinely ternary phenomenon
    let induced = induced_structures(&c).unwrap();
    let fwd = induced.forward_generalized(&c);
    println!(
        "induced (rho, nu) generalized-representation check: {}",
        if check_generalized_rep(&g, &fwd).unwrap().passed() { "pass" } else { "fail" }
    );

    // the displayed polynomial conditions for the 4-dimensional example
    // agree with the direct check on diagonal operators
    let cross = example57_cross_check(&corpus::example_5_7_t()).unwrap();
    println!(
        "4-dim displayed conditions vs direct check: {} / {}",
        cross.displayed, cross.direct
    );

    // golden tables rebuild bit for bit
    for id in [ExampleId::Ex56, ExampleId::Ex57] {
        let outcome = reproduce_example(id).unwrap();
        println!(
            "example {}: {} rows, diff {}",
            id.label(),
            outcome.computed.len(),
            if outcome.matches() { "empty" } else { "NONEMPTY" }
        );
    }
}
