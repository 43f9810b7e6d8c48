//! Splittings `G = g1 ⊕ g2`, bidegrees, lifts, and the five-component
//! decomposition of degree-1 structures.
//!
//! Relative to a split, the argument space of a degree-`n` cochain breaks
//! into summands `g^{l,k}` spanned by basis tuples with `l` indices from
//! `g1` and `k` from `g2` (`l + k = 2n + 1`). A cochain `f` has bidegree
//! `l|k` when
//!
//! ```text
//! (i)   l + k = 2n,
//! (ii)  f(g^{l+1,k}) ⊆ g1,
//! (iii) f(g^{l,k+1}) ⊆ g2,
//! (iv)  f vanishes on every other summand.
//! ```
//!
//! Any degree-1 structure Ω then splits uniquely into five homogeneous
//! pieces of bidegrees `3|-1, 2|0, 1|1, 0|2, -1|3`:
//!
//! ```text
//! Ω = φ̂1 + μ̂1 + ψ̂ + μ̂2 + φ̂2
//! ```
//!
//! with `φ1` the `g2`-valued product of three `g1`-arguments and `φ2` its
//! mirror; both vanish exactly when the two halves are subalgebras.

use std::collections::BTreeMap;

use crate::cochain::{Cochain, PreCochain};
use crate::linalg::{Matrix, Vector};
use crate::Error;

/// A direct-sum presentation by index ranges: `0..dim1` spans the first
/// half, `dim1..dim1+dim2` the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSpace {
    dim1: usize,
    dim2: usize,
}

impl SplitSpace {
    pub fn new(dim1: usize, dim2: usize) -> Result<Self, Error> {
        if dim1 == 0 || dim2 == 0 {
            return Err(Error::invalid_input("split halves must be nonempty"));
        }
        Ok(SplitSpace { dim1, dim2 })
    }

    pub fn dim1(&self) -> usize {
        self.dim1
    }

    pub fn dim2(&self) -> usize {
        self.dim2
    }

    pub fn total(&self) -> usize {
        self.dim1 + self.dim2
    }

    pub fn in_first(&self, index: usize) -> bool {
        index < self.dim1
    }

    /// Global index of the `i`-th basis vector of the second half.
    pub fn embed_second(&self, i: usize) -> usize {
        self.dim1 + i
    }

    /// Number of first-half indices among a flattened key.
    fn count_first(&self, indices: &[usize]) -> usize {
        indices.iter().filter(|&&i| self.in_first(i)).count()
    }

    /// Projection onto the first half, kept in global coordinates.
    pub fn project_first(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(v.dim());
        for (i, c) in v.support() {
            if self.in_first(i) {
                out.set(i, c.clone());
            }
        }
        out
    }

    /// Projection onto the second half, kept in global coordinates.
    pub fn project_second(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero(v.dim());
        for (i, c) in v.support() {
            if !self.in_first(i) {
                out.set(i, c.clone());
            }
        }
        out
    }

    /// First-half part in local coordinates.
    pub fn restrict_first(&self, v: &Vector) -> Vector {
        Vector::from_coords(v.coords()[..self.dim1].to_vec())
    }

    /// Second-half part in local coordinates.
    pub fn restrict_second(&self, v: &Vector) -> Vector {
        Vector::from_coords(v.coords()[self.dim1..].to_vec())
    }

    /// Embeds a local first-half vector into global coordinates.
    pub fn inject_first(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.dim(), self.dim1);
        let mut out = Vector::zero(self.total());
        for (i, c) in v.support() {
            out.set(i, c.clone());
        }
        out
    }

    /// Embeds a local second-half vector into global coordinates.
    pub fn inject_second(&self, v: &Vector) -> Vector {
        debug_assert_eq!(v.dim(), self.dim2);
        let mut out = Vector::zero(self.total());
        for (i, c) in v.support() {
            out.set(self.dim1 + i, c.clone());
        }
        out
    }
}

/// Homogeneity type of a cochain relative to a split.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bidegree {
    /// The zero cochain; every bidegree condition is vacuous on it.
    Zero,
    /// Bidegree `l|k` with `l + k = 2·degree`, `l, k ≥ -1`.
    Homogeneous(i64, i64),
    NotHomogeneous,
}

impl Bidegree {
    pub fn homogeneous(self) -> Option<(i64, i64)> {
        match self {
            Bidegree::Homogeneous(l, k) => Some((l, k)),
            _ => None,
        }
    }
}

/// Determines the bidegree of a cochain by scanning its canonical entries.
///
/// Each nonzero entry constrains `(l, k)`: a `g1`-valued component on a
/// tuple with `a` first-half indices forces `(l, k) = (a-1, b)`, a
/// `g2`-valued component forces `(l, k) = (a, b-1)`. The cochain is
/// homogeneous exactly when all constraints agree.
pub fn bidegree(f: &Cochain, split: &SplitSpace) -> Result<Bidegree, Error> {
    if f.dim() != split.total() {
        return Err(Error::dimension(format!(
            "cochain over dimension {} scanned against split {}+{}",
            f.dim(),
            split.dim1(),
            split.dim2()
        )));
    }
    Ok(bidegree_of_entries(split, f.entries()))
}

/// Bidegree of a composition result; the missing terminal antisymmetry is
/// irrelevant to homogeneity.
pub fn bidegree_pre(f: &PreCochain, split: &SplitSpace) -> Result<Bidegree, Error> {
    if f.dim() != split.total() {
        return Err(Error::dimension("pre-cochain dimension does not match split"));
    }
    Ok(bidegree_of_entries(split, f.entries()))
}

fn bidegree_of_entries<'a>(
    split: &SplitSpace,
    entries: impl Iterator<Item = (&'a [usize], &'a Vector)>,
) -> Bidegree {
    let mut constraint: Option<(i64, i64)> = None;
    for (key, value) in entries {
        let a = split.count_first(key) as i64;
        let b = key.len() as i64 - a;
        let v1 = !split.project_first(value).is_zero();
        let v2 = !split.project_second(value).is_zero();
        for (hit, lk) in [(v1, (a - 1, b)), (v2, (a, b - 1))] {
            if !hit {
                continue;
            }
            match constraint {
                None => constraint = Some(lk),
                Some(prev) if prev == lk => {}
                Some(_) => return Bidegree::NotHomogeneous,
            }
        }
    }
    match constraint {
        None => Bidegree::Zero,
        Some((l, k)) => Bidegree::Homogeneous(l, k),
    }
}

/// Which half a lifted component map lands in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Half {
    First,
    Second,
}

/// Lifts a single component map `g^{l,k} → g1` (or `→ g2`) to a cochain on
/// the whole space, zero outside the designated summand.
///
/// The component is given by its values on canonical tuples of the full
/// space whose membership counts all match; values are local to the target
/// half. The lift of `H: g2 → g1` and the wedge-triple summands of a
/// split-degree-1 structure are all instances.
pub fn lift_component(
    split: &SplitSpace,
    degree: usize,
    target: Half,
    table: &BTreeMap<Vec<usize>, Vector>,
) -> Result<Cochain, Error> {
    let dim = split.total();
    let mut out = Cochain::zero(degree, dim);
    let mut counts: Option<usize> = None;
    let key_len = if degree == 0 { 1 } else { 2 * degree + 1 };
    for (key, value) in table {
        if key.len() != key_len {
            return Err(Error::dimension(format!(
                "component key {key:?} has wrong arity for degree {degree}"
            )));
        }
        let a = split.count_first(key);
        match counts {
            None => counts = Some(a),
            Some(prev) if prev == a => {}
            Some(prev) => {
                return Err(Error::invalid_input(format!(
                    "component table mixes membership counts {prev} and {a}"
                )))
            }
        }
        let global = match target {
            Half::First => {
                if value.dim() != split.dim1() {
                    return Err(Error::dimension("component value not in the first half"));
                }
                split.inject_first(value)
            }
            Half::Second => {
                if value.dim() != split.dim2() {
                    return Err(Error::dimension("component value not in the second half"));
                }
                split.inject_second(value)
            }
        };
        if global.is_zero() {
            continue;
        }
        if degree == 0 {
            out.add_value(&[], key[0], &global)?;
        } else {
            let pairs: Vec<[usize; 2]> = key[..2 * (degree - 1)]
                .chunks(2)
                .map(|c| [c[0], c[1]])
                .chain(std::iter::once([key[key_len - 3], key[key_len - 2]]))
                .collect();
            out.add_value(&pairs, key[key_len - 1], &global)?;
        }
    }
    Ok(out)
}

/// The lift `Ĥ(x, u) = (H(u), 0)` of a linear map `H: g2 → g1`, a degree-0
/// cochain of bidegree `-1|1` with `Ĥ∘Ĥ = 0`.
pub fn lift_linear_map(split: &SplitSpace, h: &Matrix) -> Result<Cochain, Error> {
    if h.nrows() != split.dim1() || h.ncols() != split.dim2() {
        return Err(Error::dimension(format!(
            "map is {}x{}, split expects {}x{}",
            h.nrows(),
            h.ncols(),
            split.dim1(),
            split.dim2()
        )));
    }
    let mut table = BTreeMap::new();
    for u in 0..split.dim2() {
        let col = h.column(u);
        if !col.is_zero() {
            table.insert(vec![split.embed_second(u)], col);
        }
    }
    lift_component(split, 0, Half::First, &table)
}

/// The endomorphism `e^Ĥ = Id + Ĥ` of the split space; exact because the
/// lift of `H: g2 → g1` squares to zero.
pub fn exp_lift(split: &SplitSpace, h: &Matrix) -> Result<Matrix, Error> {
    if h.nrows() != split.dim1() || h.ncols() != split.dim2() {
        return Err(Error::dimension("map shape does not match split"));
    }
    let mut m = Matrix::identity(split.total());
    for u in 0..split.dim2() {
        for x in 0..split.dim1() {
            m.set(x, split.embed_second(u), h.get(x, u).clone());
        }
    }
    Ok(m)
}

/// The five homogeneous components of a degree-1 structure on a split
/// space, in bidegree order `3|-1, 2|0, 1|1, 0|2, -1|3`.
#[derive(Clone, Debug)]
pub struct StructureDecomposition {
    pub split: SplitSpace,
    /// `3|-1`: `g2`-valued product of three `g1` arguments.
    pub phi1: Cochain,
    /// `2|0`: the `g1` product plus the `g1`-pair action on `g2`.
    pub mu1: Cochain,
    /// `1|1`: mixed component.
    pub psi: Cochain,
    /// `0|2`: the `g2` product plus the `g2`-pair action on `g1`.
    pub mu2: Cochain,
    /// `-1|3`: `g1`-valued product of three `g2` arguments.
    pub phi2: Cochain,
}

impl StructureDecomposition {
    /// Recovers Ω as the sum of the five components.
    pub fn sum(&self) -> Cochain {
        self.phi1
            .add(&self.mu1)
            .add(&self.psi)
            .add(&self.mu2)
            .add(&self.phi2)
    }

    /// Components with their labels and expected bidegrees.
    pub fn components(&self) -> [(&'static str, &Cochain, (i64, i64)); 5] {
        [
            ("phi1", &self.phi1, (3, -1)),
            ("mu1", &self.mu1, (2, 0)),
            ("psi", &self.psi, (1, 1)),
            ("mu2", &self.mu2, (0, 2)),
            ("phi2", &self.phi2, (-1, 3)),
        ]
    }

    pub fn is_twilled_shape(&self) -> bool {
        self.phi1.is_zero() && self.phi2.is_zero()
    }

    pub fn is_strict_shape(&self) -> bool {
        self.is_twilled_shape() && self.psi.is_zero()
    }
}

/// Splits a degree-1 cochain into its five homogeneous components by the
/// canonical projections: on a basis triple with `m` first-half indices,
/// the `g1`-valued part belongs to the component of bidegree
/// `(m-1)|(3-m)` and the `g2`-valued part to `m|(2-m)`.
pub fn decompose_by_bidegree(
    omega: &Cochain,
    split: &SplitSpace,
) -> Result<StructureDecomposition, Error> {
    if omega.degree() != 1 {
        return Err(Error::invalid_input(format!(
            "decomposition applies to degree-1 structures, got degree {}",
            omega.degree()
        )));
    }
    if omega.dim() != split.total() {
        return Err(Error::dimension("structure dimension does not match split"));
    }
    let dim = split.total();
    let mut parts = [
        Cochain::zero(1, dim), // phi1
        Cochain::zero(1, dim), // mu1
        Cochain::zero(1, dim), // psi
        Cochain::zero(1, dim), // mu2
        Cochain::zero(1, dim), // phi2
    ];
    for (key, value) in omega.entries() {
        let m = split.count_first(key);
        let v1 = split.project_first(value);
        let v2 = split.project_second(value);
        let pair = [key[0], key[1]];
        let tail = key[2];
        // m first-half arguments: g1 output sits in component index 4-m,
        // g2 output in component index 3-m (phi1=0 … phi2=4).
        if !v1.is_zero() {
            parts[4 - m].add_value(&[pair], tail, &v1)?;
        }
        if !v2.is_zero() {
            parts[3 - m].add_value(&[pair], tail, &v2)?;
        }
    }
    let [phi1, mu1, psi, mu2, phi2] = parts;
    Ok(StructureDecomposition {
        split: *split,
        phi1,
        mu1,
        psi,
        mu2,
        phi2,
    })
}
