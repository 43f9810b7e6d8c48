//! Seeded generators for randomized test corpora.
//!
//! All randomized suites in this crate run on a fixed-seed ChaCha stream, so
//! every report and every counterexample is reproducible. Entries are small
//! rationals (numerators in a narrow band, denominators 1 or 2) to keep the
//! exact arithmetic legible in failure output.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::ThreeLieAlgebra;
use crate::cochain::Cochain;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::split::SplitSpace;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small random rational; roughly half the draws are zero so generated
/// tables stay sparse.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        return Scalar::zero();
    }
    let num = rng.gen_range(-3i64..=3);
    let den = if rng.gen_bool(0.25) { 2 } else { 1 };
    Scalar::ratio(num, den)
}

fn random_nonzero_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    loop {
        let v = Vector::from_coords((0..dim).map(|_| random_scalar(rng)).collect());
        if !v.is_zero() {
            return v;
        }
    }
}

pub fn random_vector(rng: &mut impl Rng, dim: usize) -> Vector {
    Vector::from_coords((0..dim).map(|_| random_scalar(rng)).collect())
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix {
    let mut m = Matrix::zeros(rows, cols);
    for r in 0..rows {
        for c in 0..cols {
            m.set(r, c, random_scalar(rng));
        }
    }
    m
}

/// A random skew structure-constant table with `entries` nonzero canonical
/// triples (fewer when the dimension has fewer triples). Not filtered by the
/// Fundamental Identity: checkers must see both verdicts.
pub fn random_skew_table(rng: &mut impl Rng, dim: usize, entries: usize) -> ThreeLieAlgebra {
    let mut a = ThreeLieAlgebra::abelian(dim);
    let mut triples = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            for k in (j + 1)..dim {
                triples.push([i, j, k]);
            }
        }
    }
    for _ in 0..entries {
        if triples.is_empty() {
            break;
        }
        let t = triples[rng.gen_range(0..triples.len())];
        let v = random_nonzero_vector(rng, dim);
        a.set_bracket(t[0], t[1], t[2], v).expect("canonical triple");
    }
    a
}

/// A random degree-1 cochain with `entries` nonzero canonical triples.
pub fn random_degree_one(rng: &mut impl Rng, dim: usize, entries: usize) -> Cochain {
    crate::cochain::from_bracket(&random_skew_table(rng, dim, entries))
}

/// A random cochain of the given degree with `entries` nonzero canonical
/// tuples.
pub fn random_cochain(rng: &mut impl Rng, degree: usize, dim: usize, entries: usize) -> Cochain {
    let mut out = Cochain::zero(degree, dim);
    if degree == 0 {
        for _ in 0..entries {
            let t = rng.gen_range(0..dim);
            let v = random_nonzero_vector(rng, dim);
            out.add_value(&[], t, &v).expect("index in range");
        }
        return out;
    }
    for _ in 0..entries {
        let mut pairs = Vec::with_capacity(degree);
        for _ in 0..(degree - 1) {
            let i = rng.gen_range(0..dim);
            let mut j = rng.gen_range(0..dim);
            while j == i {
                j = rng.gen_range(0..dim);
            }
            pairs.push([i, j]);
        }
        // terminal triple needs three distinct indices
        if dim < 3 {
            break;
        }
        let mut triple = [0usize; 3];
        triple[0] = rng.gen_range(0..dim);
        loop {
            triple[1] = rng.gen_range(0..dim);
            if triple[1] != triple[0] {
                break;
            }
        }
        loop {
            triple[2] = rng.gen_range(0..dim);
            if triple[2] != triple[0] && triple[2] != triple[1] {
                break;
            }
        }
        pairs.push([triple[0], triple[1]]);
        let v = random_nonzero_vector(rng, dim);
        out.add_value(&pairs, triple[2], &v).expect("distinct indices");
    }
    out
}

/// A random homogeneous cochain of the given bidegree on a split space:
/// random values on tuples with `l+1` first-half indices valued in the first
/// half, plus tuples with `k+1` second-half indices valued in the second
/// half.
pub fn random_homogeneous(
    rng: &mut impl Rng,
    split: &SplitSpace,
    degree: usize,
    l: i64,
    k: i64,
    entries: usize,
) -> Cochain {
    let dim = split.total();
    let mut out = Cochain::zero(degree, dim);
    let mut candidates_g1: Vec<(Vec<[usize; 2]>, usize)> = Vec::new();
    let mut candidates_g2: Vec<(Vec<[usize; 2]>, usize)> = Vec::new();
    for_each_canonical_tuple(degree, dim, &mut |pairs: &[[usize; 2]], tail: usize| {
        let mut ones = 0usize;
        for p in pairs {
            ones += usize::from(split.in_first(p[0])) + usize::from(split.in_first(p[1]));
        }
        ones += usize::from(split.in_first(tail));
        let twos = 2 * degree + 1 - ones;
        if ones as i64 == l + 1 && twos as i64 == k {
            candidates_g1.push((pairs.to_vec(), tail));
        }
        if ones as i64 == l && twos as i64 == k + 1 {
            candidates_g2.push((pairs.to_vec(), tail));
        }
    });
    for _ in 0..entries {
        if !candidates_g1.is_empty() {
            let (pairs, tail) = &candidates_g1[rng.gen_range(0..candidates_g1.len())];
            let mut v = Vector::zero(dim);
            v.set(rng.gen_range(0..split.dim1()), Scalar::from_int(rng.gen_range(-2i64..=2)));
            out.add_value(pairs, *tail, &v).expect("canonical tuple");
        }
        if !candidates_g2.is_empty() {
            let (pairs, tail) = &candidates_g2[rng.gen_range(0..candidates_g2.len())];
            let mut v = Vector::zero(dim);
            v.set(
                split.dim1() + rng.gen_range(0..split.dim2()),
                Scalar::from_int(rng.gen_range(-2i64..=2)),
            );
            out.add_value(pairs, *tail, &v).expect("canonical tuple");
        }
    }
    out
}

/// Canonical cochain tuples of a given degree: `degree - 1` sorted pairs and
/// a strictly increasing terminal triple (a bare index at degree 0).
fn for_each_canonical_tuple(
    degree: usize,
    dim: usize,
    f: &mut impl FnMut(&[[usize; 2]], usize),
) {
    if degree == 0 {
        for t in 0..dim {
            f(&[], t);
        }
        return;
    }
    let mut all_pairs = Vec::new();
    for i in 0..dim {
        for j in (i + 1)..dim {
            all_pairs.push([i, j]);
        }
    }
    let mut triples = Vec::new();
    for a in 0..dim {
        for b in (a + 1)..dim {
            for c in (b + 1)..dim {
                triples.push([a, b, c]);
            }
        }
    }
    if triples.is_empty() || all_pairs.is_empty() {
        return;
    }
    let slots = degree - 1;
    let mut odometer = vec![0usize; slots];
    loop {
        for t in &triples {
            let mut pairs: Vec<[usize; 2]> = odometer.iter().map(|&i| all_pairs[i]).collect();
            pairs.push([t[0], t[1]]);
            f(&pairs, t[2]);
        }
        let mut s = slots;
        loop {
            if s == 0 {
                return;
            }
            s -= 1;
            odometer[s] += 1;
            if odometer[s] < all_pairs.len() {
                break;
            }
            odometer[s] = 0;
        }
    }
}
