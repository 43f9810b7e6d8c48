//! O-operators (relative Rota-Baxter operators) and their induced
//! structures.
//!
//! A linear map `T: V → g` against a representation `(V; ρ)` is an
//! O-operator when
//!
//! ```text
//! [Tu, Tv, Tw] = T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)
//! ```
//!
//! for all `u, v, w`. Equivalently, the triple bracket
//! `[[[μ̂1, T̂], T̂], T̂]` of the lifted semidirect structure vanishes, and
//! equivalently again, twisting the semidirect structure by `T` stays
//! twilled. The verifier evaluates the defining residual on every basis
//! triple and cross-checks the bracket route; a disagreement would mean a
//! sign error in one of the two pipelines and is reported as an internal
//! invariant violation.
//!
//! An O-operator induces a bracket on `V`, a representation of it on `g`,
//! and two skew families assembling the full twisted structure block by
//! block:
//!
//! ```text
//! [u,v,w]_T  = ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v
//! ϱ(u,v)x    = [Tu,Tv,x] − T(ρ(x,Tu)v) − T(ρ(Tv,x)u)
//! ν(x)(v,w)  = ρ(Tw,x)v + ρ(x,Tv)w
//! τ(w)(x,y)  = [Tw,x,y] − T(ρ(x,y)w)
//! ```
//!
//! The bundled examples `5.6` and `5.7` ship with frozen golden tables for
//! the twisted structure; `reproduce_example` rebuilds them from scratch
//! and diffs, reporting missing and extra constants both.

use std::collections::BTreeMap;

use crate::algebra::{
    adjoint_representation, check_representation_capped, semidirect_product_unchecked,
    Representation, ThreeLieAlgebra,
};
use crate::cochain::{from_bracket, nr_bracket};
use crate::corpus::{self, ExampleId};
use crate::linalg::{Matrix, Vector};
use crate::matched::{BilinearFamily, GeneralizedMatchedPairData, GeneralizedRepresentation};
use crate::report::{VerificationReport, DEFAULT_MAX_FAILURES};
use crate::scalar::Scalar;
use crate::split::SplitSpace;
use crate::twisting::{twist, TwistInput};
use crate::Error;

/// A candidate operator `T: V → g` (rows indexed by `g`, columns by `V`).
#[derive(Clone, Debug)]
pub struct OOperatorCandidate {
    pub algebra: ThreeLieAlgebra,
    pub rep: Representation,
    pub t: Matrix,
}

impl OOperatorCandidate {
    pub fn new(algebra: ThreeLieAlgebra, rep: Representation, t: Matrix) -> Result<Self, Error> {
        if rep.algebra_dim() != algebra.dim() {
            return Err(Error::dimension("representation is over the wrong algebra"));
        }
        if t.nrows() != algebra.dim() || t.ncols() != rep.rep_dim() {
            return Err(Error::dimension(format!(
                "operator is {}x{}, expected {}x{}",
                t.nrows(),
                t.ncols(),
                algebra.dim(),
                rep.rep_dim()
            )));
        }
        Ok(OOperatorCandidate { algebra, rep, t })
    }

    fn apply_t(&self, u: &Vector) -> Vector {
        self.t.apply(u)
    }

    /// Both sides of the defining equation
    /// `[Tu,Tv,Tw] = T(ρ(Tu,Tv)w + ρ(Tv,Tw)u + ρ(Tw,Tu)v)` on a basis
    /// triple.
    fn sides(&self, u: usize, v: usize, w: usize) -> (Vector, Vector) {
        let nv = self.rep.rep_dim();
        let (eu, ev, ew) = (
            Vector::basis(nv, u),
            Vector::basis(nv, v),
            Vector::basis(nv, w),
        );
        let (tu, tv, tw) = (self.apply_t(&eu), self.apply_t(&ev), self.apply_t(&ew));
        let lhs = self.algebra.bracket(&tu, &tv, &tw);
        let mut sum = self.rep.apply(&tu, &tv, &ew);
        sum.add_assign(&self.rep.apply(&tv, &tw, &eu));
        sum.add_assign(&self.rep.apply(&tw, &tu, &ev));
        (lhs, self.apply_t(&sum))
    }

    fn residual(&self, u: usize, v: usize, w: usize) -> Vector {
        let (lhs, rhs) = self.sides(u, v, w);
        lhs.difference(&rhs)
    }
}

/// Checks the O-operator identity on every basis triple of `V` (with
/// repetition, lexicographic), cross-checking against the vanishing of the
/// triple bracket `[[[μ̂1, T̂], T̂], T̂]`.
pub fn is_o_operator(c: &OOperatorCandidate) -> Result<VerificationReport, Error> {
    is_o_operator_capped(c, DEFAULT_MAX_FAILURES)
}

pub fn is_o_operator_capped(
    c: &OOperatorCandidate,
    max_failures: usize,
) -> Result<VerificationReport, Error> {
    let rep_check = check_representation_capped(&c.algebra, &c.rep, max_failures)?;
    if !rep_check.passed() {
        return Err(Error::precondition_with(
            "operator check requires a representation",
            rep_check,
        ));
    }
    let nv = c.rep.rep_dim();
    let mut report = VerificationReport::new("o-operator", max_failures);
    for u in 0..nv {
        for v in 0..nv {
            for w in 0..nv {
                let (lhs, rhs) = c.sides(u, v, w);
                report.check_equal("o-operator", &[u, v, w], &lhs, &rhs);
            }
        }
    }

    // independent route: the triple bracket of the lifted structure
    let split = SplitSpace::new(c.algebra.dim(), nv)?;
    let mu1 = from_bracket(&semidirect_product_unchecked(&c.algebra, &c.rep));
    let that = crate::split::lift_linear_map(&split, &c.t)?;
    let chain = nr_bracket(
        &nr_bracket(&nr_bracket(&mu1, &that)?, &that)?,
        &that,
    )?;
    if chain.is_zero() != report.passed() {
        return Err(Error::invariant(
            "residual check and triple-bracket check disagree on the operator",
        ));
    }
    Ok(report)
}

/// The structures induced by a verified O-operator.
#[derive(Clone, Debug)]
pub struct InducedStructures {
    /// The bracket `[u,v,w]_T` on `V`.
    pub bracket_vt: ThreeLieAlgebra,
    /// `ϱ: ∧²V → gl(g)`, a representation of `(V, [·,·,·]_T)` on `g`.
    pub varrho: Representation,
    /// `ν: g → Hom(∧²V, V)`.
    pub nu: BilinearFamily,
    /// `τ: V → Hom(∧²g, g)`.
    pub tau: BilinearFamily,
}

impl InducedStructures {
    /// `(V; ρ, ν)` as a candidate generalized representation of `g`; fails
    /// the generalized-representation check for every invertible example.
    pub fn forward_generalized(&self, c: &OOperatorCandidate) -> GeneralizedRepresentation {
        GeneralizedRepresentation {
            rho: c.rep.clone(),
            nu: self.nu.clone(),
        }
    }

    /// The full `(g, V; ρ, ν, ϱ, τ)` package as a candidate generalized
    /// matched pair.
    pub fn as_generalized_matched_pair(&self, c: &OOperatorCandidate) -> GeneralizedMatchedPairData {
        GeneralizedMatchedPairData {
            g1: c.algebra.clone(),
            g2: self.bracket_vt.clone(),
            rho: c.rep.clone(),
            nu: self.nu.clone(),
            varrho: self.varrho.clone(),
            tau: self.tau.clone(),
        }
    }

    /// The assembled twisted structure on `g ⊕ V`, block by block.
    pub fn assembled_structure(&self, c: &OOperatorCandidate) -> crate::cochain::Cochain {
        let (ng, nv) = (c.algebra.dim(), c.rep.rep_dim());
        let dim = ng + nv;
        crate::cochain::Cochain::from_trilinear(dim, |a, b, c_| {
            let firsts = [a, b, c_].iter().filter(|&&i| i < ng).count();
            let mut out = Vector::zero(dim);
            match firsts {
                3 => {
                    for (l, s) in c.algebra.bracket_basis(a, b, c_).support() {
                        out.set(l, s.clone());
                    }
                }
                2 => {
                    // (x, y | w): ρ(x,y)w into V, τ(w)(x,y) into g
                    let w = Vector::basis(nv, c_ - ng);
                    for (l, s) in c.rep.apply_basis(a, b, &w).support() {
                        out.set(ng + l, s.clone());
                    }
                    for (l, s) in self
                        .tau
                        .eval(&w, &Vector::basis(ng, a), &Vector::basis(ng, b))
                        .support()
                    {
                        out.set(l, s.clone());
                    }
                }
                1 => {
                    // (x | v, w): ν(x)(v,w) into V, ϱ(v,w)x into g
                    let x = Vector::basis(ng, a);
                    let v = Vector::basis(nv, b - ng);
                    let w = Vector::basis(nv, c_ - ng);
                    for (l, s) in self.nu.eval(&x, &v, &w).support() {
                        out.set(ng + l, s.clone());
                    }
                    for (l, s) in self.varrho.apply(&v, &w, &x).support() {
                        out.set(l, s.clone());
                    }
                }
                _ => {
                    for (l, s) in self
                        .bracket_vt
                        .bracket_basis(a - ng, b - ng, c_ - ng)
                        .support()
                    {
                        out.set(ng + l, s.clone());
                    }
                }
            }
            out
        })
    }
}

/// Computes the induced structures of a verified O-operator.
pub fn induced_structures(c: &OOperatorCandidate) -> Result<InducedStructures, Error> {
    let report = is_o_operator(c)?;
    if !report.passed() {
        return Err(Error::precondition_with(
            "induced structures require an O-operator",
            report,
        ));
    }
    let (ng, nv) = (c.algebra.dim(), c.rep.rep_dim());
    let t_col = |u: usize| c.t.column(u);

    let mut bracket_vt = ThreeLieAlgebra::abelian(nv);
    for u in 0..nv {
        for v in (u + 1)..nv {
            for w in (v + 1)..nv {
                let mut val = c.rep.apply(&t_col(u), &t_col(v), &Vector::basis(nv, w));
                val.add_assign(&c.rep.apply(&t_col(v), &t_col(w), &Vector::basis(nv, u)));
                val.add_assign(&c.rep.apply(&t_col(w), &t_col(u), &Vector::basis(nv, v)));
                if !val.is_zero() {
                    bracket_vt.set_bracket(u, v, w, val)?;
                }
            }
        }
    }

    let mut varrho = Representation::zero(nv, ng);
    for u in 0..nv {
        for v in (u + 1)..nv {
            let mut m = Matrix::zeros(ng, ng);
            let mut nonzero = false;
            for x in 0..ng {
                let ex = Vector::basis(ng, x);
                let mut col = c.algebra.bracket(&t_col(u), &t_col(v), &ex);
                col.sub_assign(&c.apply_t(&c.rep.apply(&ex, &t_col(u), &Vector::basis(nv, v))));
                col.sub_assign(&c.apply_t(&c.rep.apply(&t_col(v), &ex, &Vector::basis(nv, u))));
                for (r, s) in col.support() {
                    m.set(r, x, s.clone());
                    nonzero = true;
                }
            }
            if nonzero {
                varrho.set_action(u, v, m)?;
            }
        }
    }

    let mut nu = BilinearFamily::zero(ng, nv, nv);
    for x in 0..ng {
        let ex = Vector::basis(ng, x);
        for v in 0..nv {
            for w in (v + 1)..nv {
                let mut val = c.rep.apply(&t_col(w), &ex, &Vector::basis(nv, v));
                val.add_assign(&c.rep.apply(&ex, &t_col(v), &Vector::basis(nv, w)));
                if !val.is_zero() {
                    nu.component_mut(x).set(v, w, val)?;
                }
            }
        }
    }

    let mut tau = BilinearFamily::zero(nv, ng, ng);
    for w in 0..nv {
        for x in 0..ng {
            for y in (x + 1)..ng {
                let (ex, ey) = (Vector::basis(ng, x), Vector::basis(ng, y));
                let mut val = c.algebra.bracket(&t_col(w), &ex, &ey);
                val.sub_assign(&c.apply_t(&c.rep.apply(&ex, &ey, &Vector::basis(nv, w))));
                if !val.is_zero() {
                    tau.component_mut(w).set(x, y, val)?;
                }
            }
        }
    }

    Ok(InducedStructures {
        bracket_vt,
        varrho,
        nu,
        tau,
    })
}

/// The twisted structure of a candidate, via the closed-form twist of the
/// semidirect structure.
pub fn twisted_structure(c: &OOperatorCandidate) -> Result<crate::cochain::Cochain, Error> {
    let split = SplitSpace::new(c.algebra.dim(), c.rep.rep_dim())?;
    let sd = semidirect_product_unchecked(&c.algebra, &c.rep);
    let input = TwistInput::new(split, from_bracket(&sd), c.t.clone())?;
    twist(&input)
}

/// One difference between a computed and a golden structure table.
#[derive(Clone, Debug)]
pub struct TableDiff {
    /// Canonical triple, 0-based.
    pub triple: [usize; 3],
    pub expected: Vector,
    pub actual: Vector,
}

/// Outcome of rebuilding a bundled example.
#[derive(Clone, Debug)]
pub struct ReproduceOutcome {
    pub id: ExampleId,
    pub computed: BTreeMap<[usize; 3], Vector>,
    pub golden: BTreeMap<[usize; 3], Vector>,
    pub diff: Vec<TableDiff>,
}

impl ReproduceOutcome {
    pub fn matches(&self) -> bool {
        self.diff.is_empty()
    }
}

/// Rebuilds a bundled example from its inputs — algebra, adjoint
/// representation, diagonal operator — and diffs the twisted structure
/// against the frozen golden table over every canonical triple.
pub fn reproduce_example(id: ExampleId) -> Result<ReproduceOutcome, Error> {
    let algebra = corpus::example_algebra(id);
    let rep = adjoint_representation(&algebra);
    let t = corpus::example_t(id);
    let c = OOperatorCandidate::new(algebra, rep, t)?;
    let twisted = twisted_structure(&c)?;

    let dim = 2 * c.algebra.dim();
    let golden = corpus::example_golden(id);
    let mut computed = BTreeMap::new();
    let mut diff = Vec::new();
    for a in 0..dim {
        for b in (a + 1)..dim {
            for cc in (b + 1)..dim {
                let actual = twisted.eval_basis(&[[a, b]], cc);
                let expected = golden
                    .get(&[a, b, cc])
                    .cloned()
                    .unwrap_or_else(|| Vector::zero(dim));
                if !actual.is_zero() {
                    computed.insert([a, b, cc], actual.clone());
                }
                if actual != expected {
                    diff.push(TableDiff {
                        triple: [a, b, cc],
                        expected,
                        actual,
                    });
                }
            }
        }
    }
    Ok(ReproduceOutcome {
        id,
        computed,
        golden,
        diff,
    })
}

/// The two displayed polynomial constraints for a 4×4 operator on the
/// algebra `[e2,e3,e4] = e1` with its adjoint representation, transcribed
/// verbatim:
///
/// ```text
/// a22·a33·a44 − a22·a43·a34 − a23·a32·a44 + a24·a32·a43 + a23·a34·a42 − a24·a33·a42
///   = (a22·a33 − a33·a32 − a43·a34 + a33·a44 − a24·a42 + a44·a22) · a11
/// ```
///
/// and the same parenthesized factor annihilating `a21`, `a31`, `a41`.
/// On the diagonal grid these agree with the direct residual check; for
/// general matrices use [`example57_cross_check`], which flags any
/// disagreement instead of correcting the transcription.
pub fn check_example57_conditions(t: &Matrix) -> Result<bool, Error> {
    if t.nrows() != 4 || t.ncols() != 4 {
        return Err(Error::dimension("the displayed constraints are for 4x4 operators"));
    }
    let a = |i: usize, j: usize| t.get(i - 1, j - 1).clone();
    let det = a(2, 2) * a(3, 3) * a(4, 4) - a(2, 2) * a(4, 3) * a(3, 4)
        - a(2, 3) * a(3, 2) * a(4, 4)
        + a(2, 4) * a(3, 2) * a(4, 3)
        + a(2, 3) * a(3, 4) * a(4, 2)
        - a(2, 4) * a(3, 3) * a(4, 2);
    let factor = a(2, 2) * a(3, 3) - a(3, 3) * a(3, 2) - a(4, 3) * a(3, 4) + a(3, 3) * a(4, 4)
        - a(2, 4) * a(4, 2)
        + a(4, 4) * a(2, 2);
    let first = det == factor.clone() * a(1, 1);
    let rest = (factor.clone() * a(2, 1)).is_zero()
        && (factor.clone() * a(3, 1)).is_zero()
        && (factor * a(4, 1)).is_zero();
    Ok(first && rest)
}

/// Displayed-constraint verdict next to the direct residual verdict;
/// `flagged` marks a disagreement in the transcription.
#[derive(Clone, Copy, Debug)]
pub struct Example57CrossCheck {
    pub displayed: bool,
    pub direct: bool,
    pub flagged: bool,
}

pub fn example57_cross_check(t: &Matrix) -> Result<Example57CrossCheck, Error> {
    let displayed = check_example57_conditions(t)?;
    let algebra = corpus::example_5_7_algebra();
    let rep = adjoint_representation(&algebra);
    let c = OOperatorCandidate::new(algebra, rep, t.clone())?;
    let direct = is_o_operator(&c)?.passed();
    Ok(Example57CrossCheck {
        displayed,
        direct,
        flagged: displayed != direct,
    })
}

/// Shape restriction for grid enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatrixShape {
    Diagonal,
    UpperTriangular,
    Full,
}

impl MatrixShape {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "diagonal" => Some(MatrixShape::Diagonal),
            "upper" | "upper-triangular" => Some(MatrixShape::UpperTriangular),
            "full" => Some(MatrixShape::Full),
            _ => None,
        }
    }

    fn free_positions(self, rows: usize, cols: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for r in 0..rows {
            for c in 0..cols {
                let keep = match self {
                    MatrixShape::Diagonal => r == c,
                    MatrixShape::UpperTriangular => r <= c,
                    MatrixShape::Full => true,
                };
                if keep {
                    out.push((r, c));
                }
            }
        }
        out
    }
}

/// Exact grid search over operator matrices.
#[derive(Clone, Debug)]
pub struct GridSearch {
    pub grid: Vec<Scalar>,
    pub shape: MatrixShape,
    pub budget: u128,
}

impl GridSearch {
    pub fn new(grid: Vec<Scalar>, shape: MatrixShape) -> Self {
        GridSearch {
            grid,
            shape,
            budget: 1_000_000,
        }
    }
}

/// Enumerates every matrix over the grid (restricted to the shape) passing
/// the O-operator check, in deterministic odometer order. Refuses when the
/// candidate count exceeds the budget.
pub fn enumerate_o_operators(
    algebra: &ThreeLieAlgebra,
    rep: &Representation,
    cfg: &GridSearch,
) -> Result<Vec<Matrix>, Error> {
    let rep_check = check_representation_capped(algebra, rep, DEFAULT_MAX_FAILURES)?;
    if !rep_check.passed() {
        return Err(Error::precondition_with(
            "grid search requires a representation",
            rep_check,
        ));
    }
    if cfg.grid.is_empty() {
        return Err(Error::invalid_input("empty search grid"));
    }
    let (rows, cols) = (algebra.dim(), rep.rep_dim());
    let positions = cfg.shape.free_positions(rows, cols);
    let candidates = (cfg.grid.len() as u128)
        .checked_pow(positions.len() as u32)
        .unwrap_or(u128::MAX);
    if candidates > cfg.budget {
        return Err(Error::BudgetExceeded {
            candidates,
            budget: cfg.budget,
        });
    }

    let mut found = Vec::new();
    let mut odometer = vec![0usize; positions.len()];
    loop {
        let mut t = Matrix::zeros(rows, cols);
        for (slot, &(r, c)) in positions.iter().enumerate() {
            t.set(r, c, cfg.grid[odometer[slot]].clone());
        }
        let candidate = OOperatorCandidate {
            algebra: algebra.clone(),
            rep: rep.clone(),
            t,
        };
        let mut all_zero = true;
        'outer: for u in 0..cols {
            for v in 0..cols {
                for w in 0..cols {
                    if !candidate.residual(u, v, w).is_zero() {
                        all_zero = false;
                        break 'outer;
                    }
                }
            }
        }
        if all_zero {
            found.push(candidate.t);
        }
        let mut s = positions.len();
        loop {
            if s == 0 {
                return Ok(found);
            }
            s -= 1;
            odometer[s] += 1;
            if odometer[s] < cfg.grid.len() {
                break;
            }
            odometer[s] = 0;
        }
    }
}
