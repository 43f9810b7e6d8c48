//! Twilled structures: splittings whose halves are subalgebras.
//!
//! For a degree-1 structure Ω = φ̂1 + μ̂1 + ψ̂ + μ̂2 + φ̂2 on `g1 ⊕ g2`, the
//! equation `[Ω,Ω] = 0` splits by bidegree into seven independent
//! conditions:
//!
//! ```text
//! [φ̂1,μ̂1] = 0
//! [φ̂1,ψ̂] + ½[μ̂1,μ̂1] = 0
//! [φ̂1,μ̂2] + [ψ̂,μ̂1] = 0
//! [μ̂1,φ̂2] + [ψ̂,μ̂2] = 0
//! [φ̂1,φ̂2] + [μ̂1,μ̂2] + ½[ψ̂,ψ̂] = 0
//! [ψ̂,φ̂2] + ½[μ̂2,μ̂2] = 0
//! [μ̂2,φ̂2] = 0
//! ```
//!
//! The split is *twilled* when `φ1 = φ2 = 0` (both halves closed), in which
//! case only five conditions survive; *strict* when additionally `ψ = 0`.
//! Strict twilled structures are exactly matched pairs, and the extraction
//! in both directions is the identity on structure tables. Twilled-but-not-
//! strict witnesses exist (twisting a semidirect structure by an invertible
//! operator produces one), so strictness is a strictly stronger predicate.

use crate::algebra::ThreeLieAlgebra;
use crate::cochain::{from_bracket, nr_bracket, Cochain};
use crate::linalg::{Matrix, Vector};
use crate::matched::{check_matched_pair, MatchedPairData};
use crate::report::{VerificationReport, DEFAULT_MAX_FAILURES};
use crate::scalar::Scalar;
use crate::algebra::Representation;
use crate::split::{decompose_by_bidegree, SplitSpace, StructureDecomposition};
use crate::Error;

/// Everything `analyze` can say about a split structure.
#[derive(Clone, Debug)]
pub struct TwilledVerdict {
    /// `[Ω,Ω] = 0`, i.e. the table satisfies the Fundamental Identity.
    pub is_3lie: bool,
    /// Nonzero entries of the two closure components `φ1`, `φ2`.
    pub closure: VerificationReport,
    /// Residuals of the seven bidegree-split conditions.
    pub seven_conditions: VerificationReport,
    /// `is_3lie` and both halves closed.
    pub is_twilled: bool,
    /// Twilled with `ψ = 0` as well.
    pub is_strict: bool,
    /// The seven-condition conjunction agrees with `[Ω,Ω] = 0`.
    pub cross_check_ok: bool,
    pub decomposition: StructureDecomposition,
}

fn half(c: &Cochain) -> Cochain {
    c.scaled(&Scalar::ratio(1, 2))
}

/// Records every nonzero canonical entry of `value` under `equation`.
fn residuals_of(report: &mut VerificationReport, equation: &str, value: &Cochain) {
    for (key, v) in value.entries() {
        report.check_zero(equation, key, v);
    }
}

/// Decomposes the structure of `g` along the split and evaluates the seven
/// bidegree conditions independently, cross-checking their conjunction
/// against `[Ω,Ω] = 0`.
pub fn analyze(g: &ThreeLieAlgebra, split: &SplitSpace) -> Result<TwilledVerdict, Error> {
    analyze_capped(g, split, DEFAULT_MAX_FAILURES)
}

pub fn analyze_capped(
    g: &ThreeLieAlgebra,
    split: &SplitSpace,
    max_failures: usize,
) -> Result<TwilledVerdict, Error> {
    if g.dim() != split.total() {
        return Err(Error::dimension(format!(
            "algebra dimension {} does not match split {}+{}",
            g.dim(),
            split.dim1(),
            split.dim2()
        )));
    }
    let omega = from_bracket(g);
    let square = nr_bracket(&omega, &omega)?;
    let is_3lie = square.is_zero();
    let dec = decompose_by_bidegree(&omega, split)?;
    analyze_decomposition(dec, is_3lie, max_failures)
}

fn analyze_decomposition(
    dec: StructureDecomposition,
    is_3lie: bool,
    max_failures: usize,
) -> Result<TwilledVerdict, Error> {
    let mut closure = VerificationReport::new("subalgebra-closure", max_failures);
    residuals_of(&mut closure, "phi1", &dec.phi1);
    residuals_of(&mut closure, "phi2", &dec.phi2);

    let seven = seven_conditions(&dec, max_failures)?;
    let cross_check_ok = seven.passed() == is_3lie;
    let is_twilled = is_3lie && dec.is_twilled_shape();
    let is_strict = is_twilled && dec.psi.is_zero();
    Ok(TwilledVerdict {
        is_3lie,
        closure,
        seven_conditions: seven,
        is_twilled,
        is_strict,
        cross_check_ok,
        decomposition: dec,
    })
}

fn seven_conditions(
    dec: &StructureDecomposition,
    max_failures: usize,
) -> Result<VerificationReport, Error> {
    let b = |p: &Cochain, q: &Cochain| nr_bracket(p, q);
    let mut report = VerificationReport::new("seven-conditions", max_failures);

    let c1 = b(&dec.phi1, &dec.mu1)?;
    residuals_of(&mut report, "[phi1,mu1]", &c1);

    let c2 = b(&dec.phi1, &dec.psi)?.add(&half(&b(&dec.mu1, &dec.mu1)?));
    residuals_of(&mut report, "[phi1,psi]+(1/2)[mu1,mu1]", &c2);

    let c3 = b(&dec.phi1, &dec.mu2)?.add(&b(&dec.psi, &dec.mu1)?);
    residuals_of(&mut report, "[phi1,mu2]+[psi,mu1]", &c3);

    let c4 = b(&dec.mu1, &dec.phi2)?.add(&b(&dec.psi, &dec.mu2)?);
    residuals_of(&mut report, "[mu1,phi2]+[psi,mu2]", &c4);

    let c5 = b(&dec.phi1, &dec.phi2)?
        .add(&b(&dec.mu1, &dec.mu2)?)
        .add(&half(&b(&dec.psi, &dec.psi)?));
    residuals_of(&mut report, "[phi1,phi2]+[mu1,mu2]+(1/2)[psi,psi]", &c5);

    let c6 = b(&dec.psi, &dec.phi2)?.add(&half(&b(&dec.mu2, &dec.mu2)?));
    residuals_of(&mut report, "[psi,phi2]+(1/2)[mu2,mu2]", &c6);

    let c7 = b(&dec.mu2, &dec.phi2)?;
    residuals_of(&mut report, "[mu2,phi2]", &c7);

    Ok(report)
}

/// The five conditions that remain once both halves are closed:
///
/// ```text
/// ½[μ̂1,μ̂1] = 0,  [ψ̂,μ̂1] = 0,  [ψ̂,μ̂2] = 0,
/// [μ̂1,μ̂2] + ½[ψ̂,ψ̂] = 0,  ½[μ̂2,μ̂2] = 0.
/// ```
///
/// Refuses when a closure component is nonzero.
pub fn check_twilled_conditions(
    dec: &StructureDecomposition,
) -> Result<VerificationReport, Error> {
    check_twilled_conditions_capped(dec, DEFAULT_MAX_FAILURES)
}

pub fn check_twilled_conditions_capped(
    dec: &StructureDecomposition,
    max_failures: usize,
) -> Result<VerificationReport, Error> {
    if !dec.is_twilled_shape() {
        return Err(Error::precondition(
            "five-condition form requires both closure components to vanish",
        ));
    }
    let b = |p: &Cochain, q: &Cochain| nr_bracket(p, q);
    let mut report = VerificationReport::new("twilled-conditions", max_failures);
    residuals_of(&mut report, "(1/2)[mu1,mu1]", &half(&b(&dec.mu1, &dec.mu1)?));
    residuals_of(&mut report, "[psi,mu1]", &b(&dec.psi, &dec.mu1)?);
    residuals_of(&mut report, "[psi,mu2]", &b(&dec.psi, &dec.mu2)?);
    residuals_of(
        &mut report,
        "[mu1,mu2]+(1/2)[psi,psi]",
        &b(&dec.mu1, &dec.mu2)?.add(&half(&b(&dec.psi, &dec.psi)?)),
    );
    residuals_of(&mut report, "(1/2)[mu2,mu2]", &half(&b(&dec.mu2, &dec.mu2)?));
    Ok(report)
}

/// Reads a strict twilled structure back as a matched pair:
/// the two restricted tables plus `ρ(x,y)w = μ̂1(x,y,w)` and
/// `μ(v,w)x = μ̂2(v,w,x)`. Inverse to the matched-pair double on the nose.
pub fn strict_to_matched_pair(
    g: &ThreeLieAlgebra,
    split: &SplitSpace,
) -> Result<MatchedPairData, Error> {
    let verdict = analyze(g, split)?;
    if !verdict.is_strict {
        return Err(Error::precondition(format!(
            "structure is not strict twilled (3-Lie: {}, twilled: {}, psi zero: {})",
            verdict.is_3lie,
            verdict.is_twilled,
            verdict.decomposition.psi.is_zero()
        )));
    }
    let (n1, n2) = (split.dim1(), split.dim2());
    let e = |i: usize| Vector::basis(split.total(), i);

    let mut g1 = ThreeLieAlgebra::abelian(n1);
    for i in 0..n1 {
        for j in (i + 1)..n1 {
            for k in (j + 1)..n1 {
                let v = split.restrict_first(&g.bracket_basis(i, j, k));
                if !v.is_zero() {
                    g1.set_bracket(i, j, k, v)?;
                }
            }
        }
    }
    let mut g2 = ThreeLieAlgebra::abelian(n2);
    for i in 0..n2 {
        for j in (i + 1)..n2 {
            for k in (j + 1)..n2 {
                let v = split.restrict_second(&g.bracket_basis(
                    split.embed_second(i),
                    split.embed_second(j),
                    split.embed_second(k),
                ));
                if !v.is_zero() {
                    g2.set_bracket(i, j, k, v)?;
                }
            }
        }
    }

    let mut rho = Representation::zero(n1, n2);
    for x in 0..n1 {
        for y in (x + 1)..n1 {
            let mut m = Matrix::zeros(n2, n2);
            let mut nonzero = false;
            for w in 0..n2 {
                let col = split.restrict_second(&g.bracket(
                    &e(x),
                    &e(y),
                    &e(split.embed_second(w)),
                ));
                for (r, c) in col.support() {
                    m.set(r, w, c.clone());
                    nonzero = true;
                }
            }
            if nonzero {
                rho.set_action(x, y, m)?;
            }
        }
    }
    let mut mu = Representation::zero(n2, n1);
    for v in 0..n2 {
        for w in (v + 1)..n2 {
            let mut m = Matrix::zeros(n1, n1);
            let mut nonzero = false;
            for x in 0..n1 {
                let col = split.restrict_first(&g.bracket(
                    &e(split.embed_second(v)),
                    &e(split.embed_second(w)),
                    &e(x),
                ));
                for (r, c) in col.support() {
                    m.set(r, x, c.clone());
                    nonzero = true;
                }
            }
            if nonzero {
                mu.set_action(v, w, m)?;
            }
        }
    }

    let pair = MatchedPairData { g1, g2, rho, mu };
    let check = check_matched_pair(&pair)?;
    if !check.passed() {
        return Err(Error::invariant(format!(
            "strict twilled structure produced an invalid matched pair (first at {})",
            check.first_equation().unwrap_or("?")
        )));
    }
    Ok(pair)
}

/// Tests `E² = Id` together with the seven-term compatibility
///
/// ```text
/// E[x,y,z] = [Ex,Ey,Ez] + [Ex,y,z] + [x,Ey,z] + [x,y,Ez]
///          − E[Ex,Ey,z] − E[x,Ey,Ez] − E[Ex,y,Ez]
/// ```
///
/// on every basis triple. For a twilled split, `E = Id ⊕ −Id` passes.
pub fn product_structure_check(g: &ThreeLieAlgebra, e: &Matrix) -> Result<bool, Error> {
    let n = g.dim();
    if e.nrows() != n || e.ncols() != n {
        return Err(Error::dimension("endomorphism shape does not match algebra"));
    }
    if e.matmul(e) != Matrix::identity(n) {
        return Ok(false);
    }
    let basis = |i: usize| Vector::basis(n, i);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (ex, ey, ez) = (e.apply(&basis(x)), e.apply(&basis(y)), e.apply(&basis(z)));
                let lhs = e.apply(&g.bracket_basis(x, y, z));
                let mut rhs = g.bracket(&ex, &ey, &ez);
                rhs.add_assign(&g.bracket(&ex, &basis(y), &basis(z)));
                rhs.add_assign(&g.bracket(&basis(x), &ey, &basis(z)));
                rhs.add_assign(&g.bracket(&basis(x), &basis(y), &ez));
                rhs.sub_assign(&e.apply(&g.bracket(&ex, &ey, &basis(z))));
                rhs.sub_assign(&e.apply(&g.bracket(&basis(x), &ey, &ez)));
                rhs.sub_assign(&e.apply(&g.bracket(&ex, &basis(y), &ez)));
                if lhs != rhs {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// The canonical involution `Id ⊕ −Id` of a split.
pub fn split_involution(split: &SplitSpace) -> Matrix {
    let mut m = Matrix::identity(split.total());
    for i in 0..split.dim2() {
        let j = split.embed_second(i);
        m.set(j, j, Scalar::from_int(-1));
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{adjoint_representation, semidirect_product};
    use crate::corpus;
    use crate::matched::matched_pair_double;
    use crate::random;

    fn semidirect_5_6() -> ThreeLieAlgebra {
        let a = corpus::example_5_6_algebra();
        let ad = adjoint_representation(&a);
        semidirect_product(&a, &ad).unwrap()
    }

    #[test]
    fn semidirect_is_strict_twilled() {
        let split = SplitSpace::new(3, 3).unwrap();
        let verdict = analyze(&semidirect_5_6(), &split).unwrap();
        assert!(verdict.is_3lie);
        assert!(verdict.is_twilled);
        assert!(verdict.is_strict);
        assert!(verdict.cross_check_ok);
        assert!(verdict.seven_conditions.passed());
        assert!(verdict.closure.passed());
    }

    #[test]
    fn unclosed_second_half_reports_phi2() {
        // split (1,3) of the 4-dimensional table [e2,e3,e4] = e1: the
        // second half multiplies into the first, so phi2 is nonzero.
        let g = corpus::example_5_7_algebra();
        let split = SplitSpace::new(1, 3).unwrap();
        let verdict = analyze(&g, &split).unwrap();
        assert!(verdict.is_3lie);
        assert!(!verdict.is_twilled);
        assert!(!verdict.closure.passed());
        assert!(verdict.closure.violations_for("phi2") > 0);
        assert_eq!(verdict.closure.violations_for("phi1"), 0);
    }

    #[test]
    fn seven_conditions_match_square_on_random_tables() {
        let split = SplitSpace::new(2, 2).unwrap();
        let mut rng = random::rng(71);
        let mut seen = [false; 2];
        for _ in 0..40 {
            let a = random::random_skew_table(&mut rng, 4, 2);
            let verdict = analyze(&a, &split).unwrap();
            assert!(verdict.cross_check_ok, "disagreement on {a:?}");
            seen[usize::from(verdict.is_3lie)] = true;
        }
        assert!(seen[0] && seen[1], "one-sided random corpus");
    }

    #[test]
    fn five_conditions_refuse_unclosed_split() {
        let g = corpus::example_5_7_algebra();
        let split = SplitSpace::new(1, 3).unwrap();
        let verdict = analyze(&g, &split).unwrap();
        assert!(matches!(
            check_twilled_conditions(&verdict.decomposition),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn five_conditions_pass_on_semidirect() {
        let split = SplitSpace::new(3, 3).unwrap();
        let verdict = analyze(&semidirect_5_6(), &split).unwrap();
        let report = check_twilled_conditions(&verdict.decomposition).unwrap();
        assert!(report.passed(), "{}", report.to_text());
    }

    #[test]
    fn strict_round_trip_from_semidirect() {
        let split = SplitSpace::new(3, 3).unwrap();
        let sd = semidirect_5_6();
        let pair = strict_to_matched_pair(&sd, &split).unwrap();
        assert!(pair.mu.action_basis(0, 1).is_zero());
        let double = matched_pair_double(&pair).unwrap();
        assert_eq!(double.table(), sd.table());
    }

    #[test]
    fn strict_extraction_refuses_non_strict() {
        let g = corpus::example_5_7_algebra();
        let split = SplitSpace::new(1, 3).unwrap();
        assert!(matches!(
            strict_to_matched_pair(&g, &split),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn identity_and_minus_identity_are_product_structures() {
        let g = corpus::example_5_6_algebra();
        assert!(product_structure_check(&g, &Matrix::identity(3)).unwrap());
        assert!(product_structure_check(&g, &Matrix::identity(3).negated()).unwrap());
    }

    #[test]
    fn split_involution_is_product_structure_on_semidirect() {
        let split = SplitSpace::new(3, 3).unwrap();
        let sd = semidirect_5_6();
        assert!(product_structure_check(&sd, &split_involution(&split)).unwrap());
    }

    #[test]
    fn involution_with_unclosed_eigenspace_is_rejected() {
        // diag(-1,1,1,1) on [e2,e3,e4] = e1: the +1 eigenspace multiplies
        // out of itself, so the compatibility equation fails at (e2,e3,e4).
        let g = corpus::example_5_7_algebra();
        let e = Matrix::diagonal(&[
            Scalar::from_int(-1),
            Scalar::one(),
            Scalar::one(),
            Scalar::one(),
        ]);
        assert_eq!(e.matmul(&e), Matrix::identity(4));
        assert!(!product_structure_check(&g, &e).unwrap());
        // a non-involution is rejected outright
        let mut n = Matrix::zeros(4, 4);
        n.set(0, 1, Scalar::one());
        assert!(!product_structure_check(&g, &n).unwrap());
    }
}
