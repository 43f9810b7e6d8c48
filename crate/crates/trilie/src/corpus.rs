//! Bundled worked examples.
//!
//! Two small algebras with diagonal O-operators ship inside the crate,
//! identified as `5.6` (3-dimensional) and `5.7` (4-dimensional). Each comes
//! with its operator matrix and the golden table of the twisted structure on
//! the doubled space, transcribed once and frozen; `trilie reproduce` and
//! the acceptance suite diff recomputed tables against these.

use std::collections::BTreeMap;

use crate::algebra::ThreeLieAlgebra;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;

/// Identifier for a bundled example.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExampleId {
    Ex56,
    Ex57,
}

impl ExampleId {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "5.6" => Some(ExampleId::Ex56),
            "5.7" => Some(ExampleId::Ex57),
            _ => None,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ExampleId::Ex56 => "5.6",
            ExampleId::Ex57 => "5.7",
        }
    }
}

/// Dimension-3 algebra with `[e1,e2,e3] = e1`.
pub fn example_5_6_algebra() -> ThreeLieAlgebra {
    let mut a = ThreeLieAlgebra::abelian(3);
    a.set_bracket(0, 1, 2, Vector::basis(3, 0)).expect("static table");
    a
}

/// The diagonal operator `diag(1, 1, -1)` on example 5.6.
pub fn example_5_6_t() -> Matrix {
    Matrix::diagonal(&[
        Scalar::from_int(1),
        Scalar::from_int(1),
        Scalar::from_int(-1),
    ])
}

/// Dimension-4 algebra with `[e2,e3,e4] = e1`.
pub fn example_5_7_algebra() -> ThreeLieAlgebra {
    let mut a = ThreeLieAlgebra::abelian(4);
    a.set_bracket(1, 2, 3, Vector::basis(4, 0)).expect("static table");
    a
}

/// The diagonal operator `diag(1, 1, 1, -1)` on example 5.7.
pub fn example_5_7_t() -> Matrix {
    Matrix::diagonal(&[
        Scalar::from_int(1),
        Scalar::from_int(1),
        Scalar::from_int(1),
        Scalar::from_int(-1),
    ])
}

pub fn example_algebra(id: ExampleId) -> ThreeLieAlgebra {
    match id {
        ExampleId::Ex56 => example_5_6_algebra(),
        ExampleId::Ex57 => example_5_7_algebra(),
    }
}

pub fn example_t(id: ExampleId) -> Matrix {
    match id {
        ExampleId::Ex56 => example_5_6_t(),
        ExampleId::Ex57 => example_5_7_t(),
    }
}

fn vec_of(dim: usize, entries: &[(usize, i64)]) -> Vector {
    let mut v = Vector::zero(dim);
    for &(i, c) in entries {
        v.set(i, Scalar::from_int(c));
    }
    v
}

/// Golden twisted table for example 5.6 on the 6-dimensional double,
/// canonicalized to strictly increasing triples (0-based). Triples absent
/// from the map are zero.
pub fn example_5_6_golden() -> BTreeMap<[usize; 3], Vector> {
    let mut t = BTreeMap::new();
    // Source rows, with sign canonicalization applied:
    //   (E1,E2,E3) = E1            (E2,E3,E4) = E4
    //   (E1,E2,E6) = -2 E1 + E4    (E1,E5,E3) = E4   -> (E1,E3,E5) = -E4
    //   (E4,E5,E6) = -E4           (E1,E6,E5) = E1   -> (E1,E5,E6) = -E1
    //   (E3,E4,E5) = 2 E4 - E1     (E4,E2,E6) = -E1  -> (E2,E4,E6) = E1
    t.insert([0, 1, 2], vec_of(6, &[(0, 1)]));
    t.insert([1, 2, 3], vec_of(6, &[(3, 1)]));
    t.insert([0, 1, 5], vec_of(6, &[(0, -2), (3, 1)]));
    t.insert([0, 2, 4], vec_of(6, &[(3, -1)]));
    t.insert([3, 4, 5], vec_of(6, &[(3, -1)]));
    t.insert([0, 4, 5], vec_of(6, &[(0, -1)]));
    t.insert([2, 3, 4], vec_of(6, &[(3, 2), (0, -1)]));
    t.insert([1, 3, 5], vec_of(6, &[(0, 1)]));
    t
}

/// Golden twisted table for example 5.7 on the 8-dimensional double.
pub fn example_5_7_golden() -> BTreeMap<[usize; 3], Vector> {
    let mut t = BTreeMap::new();
    // Source rows, with sign canonicalization applied:
    //   (E2,E3,E4) = E1            (E2,E3,E8) = -2 E1 + E5
    //   (E2,E7,E4) = E5  -> (E2,E4,E7) = -E5
    //   (E6,E3,E4) = E5  -> (E3,E4,E6) = E5
    //   (E6,E7,E8) = -E5           (E6,E7,E4) = 2 E5 - E1 -> (E4,E6,E7) = 2 E5 - E1
    //   (E3,E6,E8) = E1            (E2,E7,E8) = -E1
    t.insert([1, 2, 3], vec_of(8, &[(0, 1)]));
    t.insert([1, 2, 7], vec_of(8, &[(0, -2), (4, 1)]));
    t.insert([1, 3, 6], vec_of(8, &[(4, -1)]));
    t.insert([2, 3, 5], vec_of(8, &[(4, 1)]));
    t.insert([5, 6, 7], vec_of(8, &[(4, -1)]));
    t.insert([3, 5, 6], vec_of(8, &[(4, 2), (0, -1)]));
    t.insert([2, 5, 7], vec_of(8, &[(0, 1)]));
    t.insert([1, 6, 7], vec_of(8, &[(0, -1)]));
    t
}

pub fn example_golden(id: ExampleId) -> BTreeMap<[usize; 3], Vector> {
    match id {
        ExampleId::Ex56 => example_5_6_golden(),
        ExampleId::Ex57 => example_5_7_golden(),
    }
}
