//! The bracket family of a twilled split and its Maurer-Cartan elements.
//!
//! Run with: cargo run --example derived_brackets

use trilie::algebra::{adjoint_representation, semidirect_product};
use trilie::cochain::from_bracket;
use trilie::corpus;
use trilie::homotopy::{check_linf_identities, check_truncation, DerivedBracketSystem, HomCochain};
use trilie::linalg::Matrix;
use trilie::split::{decompose_by_bidegree, SplitSpace};
use trilie::twisting::{twist, TwistInput};

fn main() {
    let g = corpus::example_5_6_algebra();
    let sd = semidirect_product(&g, &adjoint_representation(&g)).unwrap();
    let split = SplitSpace::new(3, 3).unwrap();

    // on the semidirect system only the ternary bracket survives, and its
    // Maurer-Cartan elements are exactly the operators V -> g
    let dec = decompose_by_bidegree(&from_bracket(&sd), &split).unwrap();
    let system = DerivedBracketSystem::new(&dec).unwrap();
    let t = corpus::example_5_6_t();
    println!(
        "semidirect system: mc(T) = 0: {}, mc(Id) = 0: {}",
        system.mc_value(&t).unwrap().is_zero(),
        system.mc_value(&Matrix::identity(3)).unwrap().is_zero(),
    );

    // twisting by the operator produces a twilled but non-strict system
    let input = TwistInput::new(split, from_bracket(&sd), t).unwrap();
    let twisted = twist(&input).unwrap();
    let dec = decompose_by_bidegree(&twisted, &split).unwrap();
    println!(
        "twisted system: psi vanishes: {} (strictness fails, mixed bracket survives)",
        dec.psi.is_zero()
    );
    let system = DerivedBracketSystem::new(&dec).unwrap();

    // generalized Jacobi identities on the degree-0 basis probes
    let probes = HomCochain::basis_maps(split);
    let run = check_linf_identities(&system, 3, &probes).unwrap();
    println!(
        "generalized Jacobi, arities 1..3: {} ({} tuples)",
        if run.passed() { "pass" } else { "fail" },
        run.tuples_checked
    );

    // the bracket family truncates: arity four dies on probes
    let truncation = check_truncation(&system, &probes).unwrap();
    println!(
        "truncation beyond arity 3: {}",
        if truncation.passed() { "pass" } else { "fail" }
    );
}
