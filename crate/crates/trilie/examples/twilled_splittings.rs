//! Split a structure into its five homogeneous components and test
//! whether both halves are closed.
//!
//! Run with: cargo run --example twilled_splittings

use trilie::algebra::{adjoint_representation, semidirect_product};
use trilie::cochain::from_bracket;
use trilie::corpus;
use trilie::split::{decompose_by_bidegree, SplitSpace};
use trilie::twilled::{analyze, product_structure_check, split_involution};

fn main() {
    let g = corpus::example_5_6_algebra();
    let sd = semidirect_product(&g, &adjoint_representation(&g)).unwrap();
    let split = SplitSpace::new(3, 3).unwrap();

    // the semidirect structure is concentrated in one bidegree
    let dec = decompose_by_bidegree(&from_bracket(&sd), &split).unwrap();
    for (label, component, (l, k)) in dec.components() {
        println!(
            "{label:5} ({l:2}|{k:2}): {} nonzero canonical entries",
            component.support_len()
        );
    }

    let verdict = analyze(&sd, &split).unwrap();
    println!(
        "semidirect double: 3-Lie {}, twilled {}, strict {}",
        verdict.is_3lie, verdict.is_twilled, verdict.is_strict
    );

    // the canonical involution of a twilled split is a product structure
    let e = split_involution(&split);
    println!(
        "Id (+) -Id involution compatible: {}",
        product_structure_check(&sd, &e).unwrap()
    );

    // a split whose second half is not closed: [e2,e3,e4] = e1 against (1,3)
    let g7 = corpus::example_5_7_algebra();
    let bad_split = SplitSpace::new(1, 3).unwrap();
    let verdict = analyze(&g7, &bad_split).unwrap();
    println!(
        "(1,3) split of the 4-dimensional table: twilled {} (closure violations: {})",
        verdict.is_twilled, verdict.closure.total_violations
    );
}
