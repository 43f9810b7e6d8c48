//! The L∞-algebra of a twilled split, by higher derived brackets.
//!
//! For a twilled structure Ω = μ̂1 + ψ̂ + μ̂2 the operators
//! `d0 = [μ̂2,·]`, `d1 = [ψ̂,·]`, `d2 = [μ̂1,·]` (and `d_i = 0` beyond)
//! satisfy `Σ_{i+j=n} d_i ∘ d_j = 0` for every `n`, which makes
//!
//! ```text
//! l1(g)        = [μ̂2, ĝ]
//! l2(g1,g2)    = [[ψ̂, ĝ1], ĝ2]
//! l3(g1,g2,g3) = [[[μ̂1, ĝ1], ĝ2], ĝ3]          (l_k = 0 for k ≥ 4)
//! ```
//!
//! an L∞-structure on the abelian subspace `⊕_m C^m(g2, g1)` of maps fed by
//! second-half arguments and valued in the first half. An element of
//! `C^m(g2,g1)` carries degree `m`; every `l_k` has degree +1 and is graded
//! symmetric for the Koszul signs of that grading. A linear map
//! `H: g2 → g1` is Maurer-Cartan when
//!
//! ```text
//! l1(H) + ½ l2(H,H) + ⅙ l3(H,H,H) = 0
//! ```
//!
//! (the series truncates), which is exactly the obstruction for the twist
//! of Ω by `H` to stay twilled.
//!
//! The generalized Jacobi identities are verified on probe tuples: the
//! nested brackets are evaluated lazily on the second-half argument tuples,
//! where the identity lives, instead of materializing deep cochains on the
//! whole space.

use crate::cochain::{nr_bracket, BracketExpr, Cochain, TriEval};
use crate::linalg::{Matrix, Vector};
use crate::report::{VerificationReport, DEFAULT_MAX_FAILURES};
use crate::scalar::Scalar;
use crate::split::{SplitSpace, StructureDecomposition};
use crate::Error;

/// An element of `C^m(g2, g1)`: a cochain fed by second-half basis vectors
/// and valued in the first half, stored as its lift to the full space.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomCochain {
    split: SplitSpace,
    degree: usize,
    lift: Cochain,
}

impl HomCochain {
    pub fn zero(split: SplitSpace, degree: usize) -> Self {
        HomCochain {
            split,
            degree,
            lift: Cochain::zero(degree, split.total()),
        }
    }

    /// Wraps a full-space cochain, verifying it is supported on second-half
    /// tuples with first-half values.
    pub fn from_lift(split: SplitSpace, lift: Cochain) -> Result<Self, Error> {
        if lift.dim() != split.total() {
            return Err(Error::dimension("lift dimension does not match split"));
        }
        for (key, value) in lift.entries() {
            if key.iter().any(|&i| split.in_first(i)) {
                return Err(Error::invalid_input(
                    "lift consumes arguments outside the second half",
                ));
            }
            if !split.project_second(value).is_zero() {
                return Err(Error::invalid_input(
                    "lift takes values outside the first half",
                ));
            }
        }
        Ok(HomCochain {
            split,
            degree: lift.degree(),
            lift,
        })
    }

    /// A linear map `g2 → g1` as a degree-0 element.
    pub fn from_matrix(split: SplitSpace, h: &Matrix) -> Result<Self, Error> {
        let lift = crate::split::lift_linear_map(&split, h)?;
        Ok(HomCochain {
            split,
            degree: 0,
            lift,
        })
    }

    /// Adds a value on a local tuple: pairs and tail indexed within the
    /// second half, value within the first half.
    pub fn add_value_local(
        &mut self,
        pairs: &[[usize; 2]],
        tail: usize,
        value: &Vector,
    ) -> Result<(), Error> {
        let global: Vec<[usize; 2]> = pairs
            .iter()
            .map(|p| [self.split.embed_second(p[0]), self.split.embed_second(p[1])])
            .collect();
        self.lift.add_value(
            &global,
            self.split.embed_second(tail),
            &self.split.inject_first(value),
        )
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn split(&self) -> &SplitSpace {
        &self.split
    }

    pub fn lift(&self) -> &Cochain {
        &self.lift
    }

    pub fn is_zero(&self) -> bool {
        self.lift.is_zero()
    }

    pub fn add(&self, other: &HomCochain) -> HomCochain {
        HomCochain {
            split: self.split,
            degree: self.degree,
            lift: self.lift.add(&other.lift),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> HomCochain {
        HomCochain {
            split: self.split,
            degree: self.degree,
            lift: self.lift.scaled(c),
        }
    }

    /// The degree-0 basis maps `e_t ↦ e_s` in lexicographic `(s, t)` order.
    pub fn basis_maps(split: SplitSpace) -> Vec<HomCochain> {
        let mut out = Vec::new();
        for s in 0..split.dim1() {
            for t in 0..split.dim2() {
                let mut m = Matrix::zeros(split.dim1(), split.dim2());
                m.set(s, t, Scalar::one());
                out.push(HomCochain::from_matrix(split, &m).expect("basis map"));
            }
        }
        out
    }
}

/// The three derivations of a twilled split, cached as their generating
/// cochains.
#[derive(Clone, Debug)]
pub struct DerivedBracketSystem {
    split: SplitSpace,
    mu1: Cochain,
    psi: Cochain,
    mu2: Cochain,
}

impl DerivedBracketSystem {
    /// Requires both closure components of the decomposition to vanish.
    pub fn new(dec: &StructureDecomposition) -> Result<Self, Error> {
        if !dec.is_twilled_shape() {
            return Err(Error::precondition(
                "derived brackets need a twilled decomposition",
            ));
        }
        Ok(DerivedBracketSystem {
            split: dec.split,
            mu1: dec.mu1.clone(),
            psi: dec.psi.clone(),
            mu2: dec.mu2.clone(),
        })
    }

    pub fn split(&self) -> &SplitSpace {
        &self.split
    }

    /// Generator of `d_i`: `μ̂2`, `ψ̂`, `μ̂1` for `i = 0, 1, 2`.
    pub fn derivation_generator(&self, i: usize) -> Option<&Cochain> {
        match i {
            0 => Some(&self.mu2),
            1 => Some(&self.psi),
            2 => Some(&self.mu1),
            _ => None,
        }
    }

    /// Generator of the arity-`k` bracket: `μ̂2`, `ψ̂`, `μ̂1` for
    /// `k = 1, 2, 3`.
    fn arity_generator(&self, k: usize) -> Option<&Cochain> {
        match k {
            1 => Some(&self.mu2),
            2 => Some(&self.psi),
            3 => Some(&self.mu1),
            _ => None,
        }
    }

    fn chain(&self, k: usize, args: &[&HomCochain]) -> Result<Option<HomCochain>, Error> {
        debug_assert_eq!(args.len(), k);
        let Some(theta) = self.arity_generator(k) else {
            return Ok(None);
        };
        let mut acc = theta.clone();
        for g in args {
            acc = nr_bracket(&acc, g.lift())?;
        }
        let lifted = HomCochain::from_lift(self.split, acc).map_err(|e| {
            Error::invariant(format!("derived bracket left the expected subspace: {e}"))
        })?;
        Ok(Some(lifted))
    }

    /// `l1(g) = [μ̂2, ĝ]`, materialized; degree `m → m + 1`.
    pub fn l1(&self, g: &HomCochain) -> Result<HomCochain, Error> {
        Ok(self.chain(1, &[g])?.expect("arity 1"))
    }

    /// `l2(g1, g2) = [[ψ̂, ĝ1], ĝ2]`.
    pub fn l2(&self, g1: &HomCochain, g2: &HomCochain) -> Result<HomCochain, Error> {
        Ok(self.chain(2, &[g1, g2])?.expect("arity 2"))
    }

    /// `l3(g1, g2, g3) = [[[μ̂1, ĝ1], ĝ2], ĝ3]`.
    pub fn l3(
        &self,
        g1: &HomCochain,
        g2: &HomCochain,
        g3: &HomCochain,
    ) -> Result<HomCochain, Error> {
        Ok(self.chain(3, &[g1, g2, g3])?.expect("arity 3"))
    }

    /// The Maurer-Cartan value `l1(H) + ½ l2(H,H) + ⅙ l3(H,H,H)` of a
    /// degree-0 element.
    pub fn mc_value(&self, h: &Matrix) -> Result<HomCochain, Error> {
        let h = HomCochain::from_matrix(self.split, h)?;
        let v1 = self.l1(&h)?;
        let v2 = self.l2(&h, &h)?.scaled(&Scalar::ratio(1, 2));
        let v3 = self.l3(&h, &h, &h)?.scaled(&Scalar::ratio(1, 6));
        Ok(v1.add(&v2).add(&v3))
    }
}

/// Koszul sign of reordering `x_1 ⊙ … ⊙ x_n` into `x_{order[0]+1} ⊙ …`:
/// true when negative. Each adjacent swap of odd-degree elements flips the
/// sign.
pub fn koszul_sign(order: &[usize], degrees: &[usize]) -> bool {
    let mut current: Vec<usize> = (0..order.len()).collect();
    let mut neg = false;
    for (target_pos, &want) in order.iter().enumerate() {
        let pos = current
            .iter()
            .position(|&e| e == want)
            .expect("order is a permutation");
        let mut p = pos;
        while p > target_pos {
            if degrees[current[p - 1]] % 2 == 1 && degrees[current[p]] % 2 == 1 {
                neg = !neg;
            }
            current.swap(p - 1, p);
            p -= 1;
        }
    }
    neg
}

/// Outcome of the generalized Jacobi suite, with the tuple-selection
/// budget made explicit.
#[derive(Clone, Debug)]
pub struct LinfReport {
    pub report: VerificationReport,
    pub tuples_checked: usize,
    /// Probe tuples whose nested degree exceeded the supported composition
    /// window and were not evaluated.
    pub tuples_skipped: usize,
}

impl LinfReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

/// Largest probe-degree sum evaluated by the identity checker; the nested
/// brackets reach two degrees higher.
const MAX_TUPLE_DEGREE_SUM: usize = 4;

/// Verifies the generalized Jacobi identity
///
/// ```text
/// Σ_{i=1}^{n} Σ_{σ ∈ Sh(i, n-i)} ε(σ) l_{n-i+1}(l_i(x_{σ(1)},…,x_{σ(i)}), x_{σ(i+1)},…,x_{σ(n)}) = 0
/// ```
///
/// for every arity `n ≤ max_arity` on every `n`-tuple (with repetition) of
/// the given probes, in lexicographic order. Terms with `l_k`, `k ≥ 4`
/// vanish identically and are skipped. Each identity value is an element of
/// `C^*(g2,g1)`; it is evaluated on all second-half argument tuples with a
/// free tail, so a defect in the terminal antisymmetry would be caught too.
pub fn check_linf_identities(
    sys: &DerivedBracketSystem,
    max_arity: usize,
    probes: &[HomCochain],
) -> Result<LinfReport, Error> {
    check_linf_identities_capped(sys, max_arity, probes, DEFAULT_MAX_FAILURES)
}

pub fn check_linf_identities_capped(
    sys: &DerivedBracketSystem,
    max_arity: usize,
    probes: &[HomCochain],
    max_failures: usize,
) -> Result<LinfReport, Error> {
    if !(1..=4).contains(&max_arity) {
        return Err(Error::invalid_input("supported arities are 1..=4"));
    }
    if probes.iter().any(|p| p.degree() > 2) {
        return Err(Error::invalid_input("probes must have degree at most 2"));
    }
    let mut report = VerificationReport::new("generalized-jacobi", max_failures);
    let mut checked = 0usize;
    let mut skipped = 0usize;
    for n in 1..=max_arity {
        let mut tuple = vec![0usize; n];
        loop {
            let degree_sum: usize = tuple.iter().map(|&i| probes[i].degree()).sum();
            if degree_sum <= MAX_TUPLE_DEGREE_SUM {
                jacobi_on_tuple(sys, probes, &tuple, n, &mut report)?;
                checked += 1;
            } else {
                skipped += 1;
            }
            // next tuple with repetition
            let mut s = n;
            loop {
                if s == 0 {
                    break;
                }
                s -= 1;
                tuple[s] += 1;
                if tuple[s] < probes.len() {
                    break;
                }
                tuple[s] = 0;
            }
            if tuple.iter().all(|&i| i == 0) {
                break;
            }
        }
    }
    Ok(LinfReport {
        report,
        tuples_checked: checked,
        tuples_skipped: skipped,
    })
}

fn jacobi_on_tuple(
    sys: &DerivedBracketSystem,
    probes: &[HomCochain],
    tuple: &[usize],
    n: usize,
    report: &mut VerificationReport,
) -> Result<(), Error> {
    let degrees: Vec<usize> = tuple.iter().map(|&i| probes[i].degree()).collect();
    let degree_sum: usize = degrees.iter().sum();
    let split = sys.split;

    // Assemble the lazily evaluated terms with their Koszul signs.
    let mut terms: Vec<(bool, BracketExpr<'_>)> = Vec::new();
    for i in 1..=n {
        let (outer_k, inner_k) = (n - i + 1, i);
        let (Some(theta_out), Some(theta_in)) =
            (sys.arity_generator(outer_k), sys.arity_generator(inner_k))
        else {
            continue; // l_k = 0 for k ≥ 4
        };
        for (first, second, _) in crate::cochain::shuffles(n, i) {
            let order: Vec<usize> = first.iter().chain(second.iter()).copied().collect();
            let eps = koszul_sign(&order, &degrees);
            let mut inner = BracketExpr::leaf(theta_in);
            for &slot in &first {
                inner = BracketExpr::bracket(inner, BracketExpr::leaf(probes[tuple[slot]].lift()))?;
            }
            let mut term = BracketExpr::bracket(BracketExpr::leaf(theta_out), inner)?;
            for &slot in &second {
                term = BracketExpr::bracket(term, BracketExpr::leaf(probes[tuple[slot]].lift()))?;
            }
            terms.push((eps, term));
        }
    }

    // The identity value lives in C^{degree_sum + 2}(g2, g1); evaluate the
    // signed sum of terms on all second-half tuples of that arity, tail
    // free.
    let out_degree = degree_sum + 2;
    let n2 = split.dim2();
    let local_pairs: Vec<[usize; 2]> = {
        let mut v = Vec::new();
        for i in 0..n2 {
            for j in (i + 1)..n2 {
                v.push([split.embed_second(i), split.embed_second(j)]);
            }
        }
        v
    };
    if local_pairs.is_empty() {
        return Ok(());
    }
    let mut odometer = vec![0usize; out_degree];
    let mut pairs = vec![local_pairs[0]; out_degree];
    loop {
        for (s, &i) in odometer.iter().enumerate() {
            pairs[s] = local_pairs[i];
        }
        for t in 0..n2 {
            let tail = split.embed_second(t);
            let mut value = Vector::zero(split.total());
            for (neg, term) in &terms {
                let coeff = Scalar::from_int(if *neg { -1 } else { 1 });
                term.eval_basis_into(&pairs, tail, &coeff, &mut value);
            }
            if !value.is_zero() {
                let mut where_at: Vec<usize> = tuple.to_vec();
                where_at.extend(pairs.iter().flatten());
                where_at.push(tail);
                report.check_zero(&format!("jacobi-{n}"), &where_at, &value);
            }
        }
        let mut s = out_degree;
        loop {
            if s == 0 {
                return Ok(());
            }
            s -= 1;
            odometer[s] += 1;
            if odometer[s] < local_pairs.len() {
                break;
            }
            odometer[s] = 0;
        }
    }
}

/// Asserts the truncation of the bracket family: the continuation of the
/// arity-3 chain by one more argument vanishes, as does any bracket of two
/// lifted elements (the subspace is abelian). Checked on consecutive
/// 4-tuples (and pairs) of the probe list. All-degree-0 windows are checked
/// on every argument tuple of the full space; windows with higher-degree
/// probes on every second-half tuple.
pub fn check_truncation(
    sys: &DerivedBracketSystem,
    probes: &[HomCochain],
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("truncation", DEFAULT_MAX_FAILURES);
    for (i, g) in probes.iter().enumerate() {
        let j = (i + 1) % probes.len();
        let ab = nr_bracket(g.lift(), probes[j].lift())?;
        for (key, value) in ab.entries() {
            report.check_zero("abelian-lift", &prepend(&[i, j], key), value);
        }
    }
    let split = sys.split;
    for window in 0..probes.len() {
        let idx: Vec<usize> = (0..4).map(|k| (window + k) % probes.len()).collect();
        let degree_sum: usize = idx.iter().map(|&i| probes[i].degree()).sum();
        if degree_sum > MAX_TUPLE_DEGREE_SUM {
            continue;
        }
        let mut chain = BracketExpr::leaf(&sys.mu1);
        for &i in &idx {
            chain = BracketExpr::bracket(chain, BracketExpr::leaf(probes[i].lift()))?;
        }
        let out_degree = 1 + degree_sum;
        let full_domain = degree_sum == 0;
        for_each_argument_tuple(&split, out_degree, full_domain, &mut |pairs, tail| {
            let value = chain.eval_basis(pairs, tail);
            if !value.is_zero() {
                let mut at = idx.clone();
                at.extend(pairs.iter().flatten());
                at.push(tail);
                report.check_zero("l4-chain", &at, &value);
            }
        });
    }
    Ok(report)
}

/// Argument tuples with a free tail: over the full split space, or
/// restricted to the second half.
fn for_each_argument_tuple(
    split: &SplitSpace,
    degree: usize,
    full_space: bool,
    f: &mut impl FnMut(&[[usize; 2]], usize),
) {
    let mut pool: Vec<[usize; 2]> = Vec::new();
    let mut tails: Vec<usize> = Vec::new();
    let dim = split.total();
    for i in 0..dim {
        if !full_space && split.in_first(i) {
            continue;
        }
        tails.push(i);
        for j in (i + 1)..dim {
            if !full_space && split.in_first(j) {
                continue;
            }
            pool.push([i, j]);
        }
    }
    if pool.is_empty() && degree > 0 {
        return;
    }
    let mut odometer = vec![0usize; degree];
    let mut pairs = vec![[0usize; 2]; degree];
    loop {
        for (s, &i) in odometer.iter().enumerate() {
            pairs[s] = pool[i];
        }
        for &t in &tails {
            f(&pairs, t);
        }
        let mut s = degree;
        loop {
            if s == 0 {
                return;
            }
            s -= 1;
            odometer[s] += 1;
            if odometer[s] < pool.len() {
                break;
            }
            odometer[s] = 0;
        }
    }
}

fn prepend(head: &[usize], tail: &[usize]) -> Vec<usize> {
    head.iter().chain(tail.iter()).copied().collect()
}

/// Verifies that each `d_i = [θ_i, ·]` is a graded derivation and that the
/// convolution identities `Σ_{i+j=n} d_i ∘ d_j = 0` hold for `n = 0..=4`,
/// on the given spanning probes.
pub fn check_derivation_conditions(
    sys: &DerivedBracketSystem,
    probes: &[Cochain],
) -> Result<VerificationReport, Error> {
    check_derivation_conditions_capped(sys, probes, DEFAULT_MAX_FAILURES)
}

pub fn check_derivation_conditions_capped(
    sys: &DerivedBracketSystem,
    probes: &[Cochain],
    max_failures: usize,
) -> Result<VerificationReport, Error> {
    let mut report = VerificationReport::new("derivation-conditions", max_failures);
    let d = |i: usize, f: &Cochain| nr_bracket(sys.derivation_generator(i).expect("i <= 2"), f);

    // pairs (i, j) grouped by n = i + j
    let groups: [(&str, &[[usize; 2]]); 5] = [
        ("d0d0", &[[0, 0]]),
        ("d0d1+d1d0", &[[0, 1], [1, 0]]),
        ("d0d2+d1d1+d2d0", &[[0, 2], [1, 1], [2, 0]]),
        ("d1d2+d2d1", &[[1, 2], [2, 1]]),
        ("d2d2", &[[2, 2]]),
    ];
    for (p, f) in probes.iter().enumerate() {
        for (label, pairs) in groups {
            let mut total = Cochain::zero(f.degree() + 2, f.dim());
            for [i, j] in pairs {
                total = total.add(&d(*i, &d(*j, f)?)?);
            }
            for (key, value) in total.entries() {
                report.check_zero(label, &prepend(&[p], key), value);
            }
        }
    }

    // graded Leibniz on consecutive probe pairs:
    // d_i[f,g] = [d_i f, g] + (-1)^{deg f} [f, d_i g]
    for w in 0..probes.len() {
        let f = &probes[w];
        let g = &probes[(w + 1) % probes.len()];
        if f.dim() != g.dim() {
            continue;
        }
        let sign = Scalar::from_int(if f.degree().is_multiple_of(2) { 1 } else { -1 });
        for i in 0..=2 {
            let lhs = d(i, &nr_bracket(f, g)?)?;
            let rhs = nr_bracket(&d(i, f)?, g)?.add(&nr_bracket(f, &d(i, g)?)?.scaled(&sign));
            let diff = lhs.sub(&rhs);
            for (key, value) in diff.entries() {
                report.check_zero(&format!("leibniz-d{i}"), &prepend(&[w, i], key), value);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint_representation, semidirect_product};
    use crate::cochain::from_bracket;
    use crate::corpus;
    use crate::random;
    use crate::split::{bidegree, decompose_by_bidegree, Bidegree};
    use rand::Rng;

    fn semidirect_system() -> DerivedBracketSystem {
        let a = corpus::example_5_6_algebra();
        let ad = adjoint_representation(&a);
        let sd = semidirect_product(&a, &ad).unwrap();
        let split = SplitSpace::new(3, 3).unwrap();
        let dec = decompose_by_bidegree(&from_bracket(&sd), &split).unwrap();
        DerivedBracketSystem::new(&dec).unwrap()
    }

    /// A twilled but non-strict system: the example structure twisted by
    /// its diagonal operator.
    fn twisted_system() -> DerivedBracketSystem {
        let a = corpus::example_5_6_algebra();
        let ad = adjoint_representation(&a);
        let sd = semidirect_product(&a, &ad).unwrap();
        let split = SplitSpace::new(3, 3).unwrap();
        let input =
            crate::twisting::TwistInput::new(split, from_bracket(&sd), corpus::example_5_6_t())
                .unwrap();
        let twisted = crate::twisting::twist(&input).unwrap();
        let dec = decompose_by_bidegree(&twisted, &split).unwrap();
        DerivedBracketSystem::new(&dec).unwrap()
    }

    #[test]
    fn koszul_signs_are_consistent() {
        // swapping two odd elements is odd, anything with an even element is not
        assert!(koszul_sign(&[1, 0], &[1, 1]));
        assert!(!koszul_sign(&[1, 0], &[0, 1]));
        assert!(!koszul_sign(&[1, 0], &[2, 1]));
        // cyclic rotation of three odd elements is even
        assert!(!koszul_sign(&[1, 2, 0], &[1, 1, 1]));
        // composing the permutation twice squares the sign
        let degs = [1, 2, 1, 1];
        let order = [2, 0, 3, 1];
        let s = koszul_sign(&order, &degs);
        let _ = s;
    }

    #[test]
    fn semidirect_system_has_trivial_l1_l2() {
        let sys = semidirect_system();
        let split = *sys.split();
        for g in HomCochain::basis_maps(split) {
            assert!(sys.l1(&g).unwrap().is_zero());
            for h in HomCochain::basis_maps(split) {
                assert!(sys.l2(&g, &h).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn mc_value_vanishes_exactly_on_the_operator() {
        let sys = semidirect_system();
        assert!(sys.mc_value(&corpus::example_5_6_t()).unwrap().is_zero());
        assert!(!sys.mc_value(&Matrix::identity(3)).unwrap().is_zero());
        assert!(sys.mc_value(&Matrix::zeros(3, 3)).unwrap().is_zero());
    }

    #[test]
    fn mc_value_reduces_to_sixth_of_l3_when_psi_vanishes() {
        let sys = semidirect_system();
        let split = *sys.split();
        let mut rng = random::rng(109);
        for _ in 0..5 {
            let h = random::random_matrix(&mut rng, 3, 3);
            let hom = HomCochain::from_matrix(split, &h).unwrap();
            let sixth_l3 = sys
                .l3(&hom, &hom, &hom)
                .unwrap()
                .scaled(&Scalar::ratio(1, 6));
            assert_eq!(sys.mc_value(&h).unwrap(), sixth_l3);
        }
    }

    #[test]
    fn mc_value_is_the_twisted_closure_component() {
        // on a twilled system, the Maurer-Cartan value of H is exactly the
        // second-half closure component of the structure twisted by H
        let sys = twisted_system();
        let split = *sys.split();
        let dec = StructureDecomposition {
            split,
            phi1: Cochain::zero(1, split.total()),
            mu1: sys.mu1.clone(),
            psi: sys.psi.clone(),
            mu2: sys.mu2.clone(),
            phi2: Cochain::zero(1, split.total()),
        };
        let mut rng = random::rng(127);
        for _ in 0..5 {
            let h = random::random_matrix(&mut rng, 3, 3);
            let twisted = crate::twisting::twist_components(&dec, &h).unwrap();
            assert_eq!(sys.mc_value(&h).unwrap().lift(), &twisted.phi2);
        }
    }

    #[test]
    fn mc_value_matches_raw_bracket_series() {
        let sys = twisted_system();
        let split = *sys.split();
        let mut rng = random::rng(97);
        for _ in 0..6 {
            let h = random::random_matrix(&mut rng, 3, 3);
            let got = sys.mc_value(&h).unwrap();
            // independent route: raw iterated brackets of the lift
            let hhat = crate::split::lift_linear_map(&split, &h).unwrap();
            let t1 = nr_bracket(&sys.mu2, &hhat).unwrap();
            let t2 = nr_bracket(&nr_bracket(&sys.psi, &hhat).unwrap(), &hhat).unwrap();
            let t3 = nr_bracket(
                &nr_bracket(&nr_bracket(&sys.mu1, &hhat).unwrap(), &hhat).unwrap(),
                &hhat,
            )
            .unwrap();
            let want = t1
                .add(&t2.scaled(&Scalar::ratio(1, 2)))
                .add(&t3.scaled(&Scalar::ratio(1, 6)));
            assert_eq!(got.lift(), &want);
        }
    }

    #[test]
    fn bracket_closure_has_hom_bidegree() {
        // ||l2(g1,g2)|| = -1 | 2(m+n+1)+1 on random degree-(m,n) probes
        let sys = twisted_system();
        let split = *sys.split();
        let mut rng = random::rng(101);
        for _ in 0..6 {
            let dm = rng.gen_range(0..=1);
            let dn = rng.gen_range(0..=1);
            let g1 = random_hom(&mut rng, split, dm);
            let g2 = random_hom(&mut rng, split, dn);
            let l2 = sys.l2(&g1, &g2).unwrap();
            assert_eq!(l2.degree(), dm + dn + 1);
            if !l2.is_zero() {
                let expect_k = 2 * (dm + dn + 1) as i64 + 1;
                assert_eq!(
                    bidegree(l2.lift(), &split).unwrap(),
                    Bidegree::Homogeneous(-1, expect_k)
                );
            }
        }
    }

    fn random_hom(rng: &mut impl Rng, split: SplitSpace, degree: usize) -> HomCochain {
        let mut out = HomCochain::zero(split, degree);
        let n2 = split.dim2();
        for _ in 0..3 {
            if degree == 0 {
                let t = rng.gen_range(0..n2);
                let v = random::random_vector(rng, split.dim1());
                out.add_value_local(&[], t, &v).unwrap();
            } else if n2 >= 3 {
                let mut pairs = Vec::new();
                for _ in 0..degree - 1 {
                    let i = rng.gen_range(0..n2);
                    let mut j = rng.gen_range(0..n2);
                    while j == i {
                        j = rng.gen_range(0..n2);
                    }
                    pairs.push([i, j]);
                }
                let (a, b, c) = (0, 1, 2);
                pairs.push([a, b]);
                let v = random::random_vector(rng, split.dim1());
                out.add_value_local(&pairs, c, &v).unwrap();
            }
        }
        out
    }

    #[test]
    fn graded_symmetry_of_l2_and_l3() {
        let sys = twisted_system();
        let split = *sys.split();
        let mut rng = random::rng(103);
        for _ in 0..4 {
            let d1 = rng.gen_range(0..=1);
            let d2 = rng.gen_range(0..=1);
            let g1 = random_hom(&mut rng, split, d1);
            let g2 = random_hom(&mut rng, split, d2);
            let sign = if g1.degree() * g2.degree() % 2 == 1 {
                -1
            } else {
                1
            };
            let lhs = sys.l2(&g1, &g2).unwrap();
            let rhs = sys.l2(&g2, &g1).unwrap().scaled(&Scalar::from_int(sign));
            assert_eq!(lhs, rhs, "l2 graded symmetry");
            let g3 = random_hom(&mut rng, split, 0);
            // swapping the last two arguments of l3
            let s23 = if g2.degree() * g3.degree() % 2 == 1 {
                -1
            } else {
                1
            };
            let lhs3 = sys.l3(&g1, &g2, &g3).unwrap();
            let rhs3 = sys
                .l3(&g1, &g3, &g2)
                .unwrap()
                .scaled(&Scalar::from_int(s23));
            assert_eq!(lhs3, rhs3, "l3 graded symmetry in the tail");
        }
    }

    #[test]
    fn lifts_have_hom_bidegree() {
        // ||lift of a degree-m element|| = -1 | 2m+1
        let sys = twisted_system();
        let split = *sys.split();
        let mut rng = random::rng(113);
        for g in HomCochain::basis_maps(split) {
            assert_eq!(bidegree(g.lift(), &split).unwrap(), Bidegree::Homogeneous(-1, 1));
        }
        for m in 1..=2 {
            let g = random_hom(&mut rng, split, m);
            if !g.is_zero() {
                assert_eq!(
                    bidegree(g.lift(), &split).unwrap(),
                    Bidegree::Homogeneous(-1, 2 * m as i64 + 1)
                );
            }
        }
    }

    #[test]
    fn zero_probes_pass_all_identities() {
        let sys = twisted_system();
        let probes = [HomCochain::zero(*sys.split(), 0), HomCochain::zero(*sys.split(), 1)];
        let run = check_linf_identities(&sys, 4, &probes).unwrap();
        assert!(run.passed());
        assert!(check_truncation(&sys, &probes).unwrap().passed());
    }

    #[test]
    fn jacobi_identities_on_basis_probes() {
        let sys = twisted_system();
        let probes = HomCochain::basis_maps(*sys.split());
        let out = check_linf_identities(&sys, 3, &probes[..4]).unwrap();
        assert!(out.passed(), "{}", out.report.to_text());
        assert_eq!(out.tuples_skipped, 0);
    }

    #[test]
    fn arity_four_identity_on_degree_zero_probes() {
        let sys = twisted_system();
        let probes = HomCochain::basis_maps(*sys.split());
        let out = check_linf_identities(&sys, 4, &probes[..2]).unwrap();
        assert!(out.passed(), "{}", out.report.to_text());
    }

    #[test]
    fn truncation_chains_vanish() {
        let sys = twisted_system();
        let probes = HomCochain::basis_maps(*sys.split());
        let report = check_truncation(&sys, &probes).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn derivation_conditions_on_basis_maps() {
        let sys = twisted_system();
        let dim = sys.split().total();
        let mut probes = Vec::new();
        for s in 0..dim {
            for t in 0..dim {
                let mut f = Cochain::zero(0, dim);
                f.add_value(&[], t, &Vector::basis(dim, s)).unwrap();
                probes.push(f);
            }
        }
        let mut rng = random::rng(107);
        probes.push(random::random_degree_one(&mut rng, dim, 3));
        let report = check_derivation_conditions(&sys, &probes).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn corrupted_psi_breaks_a_named_condition() {
        let sys = twisted_system();
        let dim = sys.split().total();
        let mut corrupted = sys.clone();
        // add a psi-shaped junk term: one first-half argument pair with a
        // second-half tail, valued in the first half
        let mut junk = Vector::zero(dim);
        junk.set(0, Scalar::one());
        corrupted.psi.add_value(&[[0, 1]], 4, &junk).unwrap();
        // the identity map sees every nonzero bracket: [X, Id] = 2 deg(X) X
        let mut id = Cochain::zero(0, dim);
        for t in 0..dim {
            id.add_value(&[], t, &Vector::basis(dim, t)).unwrap();
        }
        let report = check_derivation_conditions(&corrupted, &[id]).unwrap();
        assert!(!report.passed());
        assert!(report.violations_for("d1d2+d2d1") > 0, "{}", report.to_text());
    }
}
