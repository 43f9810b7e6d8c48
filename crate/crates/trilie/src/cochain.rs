//! The graded cochain space of a ternary bracket and its grade commutator.
//!
//! A degree-`n` cochain is a multilinear map
//!
//! ```text
//! C^n = Hom(∧²g ⊗ … ⊗ ∧²g ∧ g, g)        (n wedge-pair factors)
//! ```
//!
//! i.e. it consumes `n` antisymmetric pairs and one extra vector, with the
//! last pair and the extra vector wedged into a fully antisymmetric triple.
//! Degree 0 is `Hom(g, g)`, degree 1 is `Hom(∧³g, g)`.
//!
//! The insertion composition `P∘Q` of `P ∈ C^p`, `Q ∈ C^q` is the shuffle
//! sum with three groups of terms: `Q` fed into the first component of the
//! `k`-th pair slot, into the second component, and into the terminal wedge
//! triple:
//!
//! ```text
//! (P∘Q)(X_1,…,X_{p+q},x) =
//!   Σ_{k=1}^{p} (-1)^{(k-1)q} Σ_{σ∈Sh(k-1,q)} (-1)^σ
//!       P(X_{σ(1)},…,X_{σ(k-1)}, Q(X_{σ(k)},…,X_{σ(k+q-1)}, x_{k+q}) ∧ y_{k+q},
//!         X_{k+q+1},…,X_{p+q}, x)
//! + the mirrored term inserting into y_{k+q}
//! + Σ_{σ∈Sh(p,q)} (-1)^{pq} (-1)^σ
//!       P(X_{σ(1)},…,X_{σ(p)}, Q(X_{σ(p+1)},…,X_{σ(p+q)}, x))
//! ```
//!
//! where `X_i = x_i ∧ y_i`. The grade commutator
//! `[P,Q] = P∘Q - (-1)^{pq} Q∘P` makes `C^*` a graded Lie algebra whose
//! degree-1 Maurer-Cartan elements are exactly the ternary Lie structures:
//! `[π,π] = 0` is the Fundamental Identity.
//!
//! Composition alone is only guaranteed to be antisymmetric inside each pair
//! slot, so it returns a [`PreCochain`]; converting the bracket back into a
//! [`Cochain`] asserts the terminal-triple antisymmetry instead of silently
//! projecting. Storage is canonical throughout: sorted pairs, sorted terminal
//! triple, evaluation canonicalizes by permutation sign.

use std::collections::{BTreeMap, BTreeSet};

use crate::algebra::{canon_triple, ThreeLieAlgebra};
use crate::linalg::Vector;
use crate::scalar::Scalar;
use crate::Error;

/// Longest flattened key we ever build on the stack (degree 8).
const MAX_KEY: usize = 17;

pub(crate) fn canon_pair(i: usize, j: usize) -> Option<([usize; 2], bool)> {
    match i.cmp(&j) {
        std::cmp::Ordering::Less => Some(([i, j], false)),
        std::cmp::Ordering::Greater => Some(([j, i], true)),
        std::cmp::Ordering::Equal => None,
    }
}

/// A canonically stored cochain: `degree - 1` sorted pairs plus a strictly
/// increasing terminal triple (a single index at degree 0). Values are
/// coordinate vectors in the same space.
#[derive(Clone, PartialEq, Eq)]
pub struct Cochain {
    degree: usize,
    dim: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl Cochain {
    pub fn zero(degree: usize, dim: usize) -> Self {
        Cochain {
            degree,
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Canonical entries in lexicographic key order. Keys are flattened:
    /// `[p1a,p1b, …, ta,tb,tc]` for degree ≥ 1, `[t]` for degree 0.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Vector)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn support_len(&self) -> usize {
        self.values.len()
    }

    /// Adds `v` on the argument tuple `(pairs…, tail)`, canonicalizing by
    /// sign. Errors when an index repeats inside a pair or the terminal
    /// triple (the tuple is degenerate, so no value may sit there).
    pub fn add_value(&mut self, pairs: &[[usize; 2]], tail: usize, v: &Vector) -> Result<(), Error> {
        if pairs.len() != self.degree {
            return Err(Error::dimension(format!(
                "degree-{} cochain given {} pairs",
                self.degree,
                pairs.len()
            )));
        }
        if v.dim() != self.dim {
            return Err(Error::dimension("value dimension mismatch"));
        }
        let bound = |i: usize| i < self.dim;
        if !pairs.iter().all(|p| bound(p[0]) && bound(p[1])) || !bound(tail) {
            return Err(Error::invalid_input("cochain tuple index out of range"));
        }
        let mut key = Vec::with_capacity(2 * self.degree + 1);
        let mut neg = false;
        if self.degree == 0 {
            key.push(tail);
        } else {
            for p in &pairs[..self.degree - 1] {
                let ([a, b], n) = canon_pair(p[0], p[1])
                    .ok_or_else(|| Error::invalid_input("repeated index in pair slot"))?;
                neg ^= n;
                key.push(a);
                key.push(b);
            }
            let last = pairs[self.degree - 1];
            let (t, n) = canon_triple(last[0], last[1], tail)
                .ok_or_else(|| Error::invalid_input("repeated index in terminal triple"))?;
            neg ^= n;
            key.extend_from_slice(&t);
        }
        let signed = if neg { v.negated() } else { v.clone() };
        self.add_at_key(key, signed);
        Ok(())
    }

    fn add_at_key(&mut self, key: Vec<usize>, v: Vector) {
        if v.is_zero() {
            return;
        }
        match self.values.get_mut(key.as_slice()) {
            Some(cur) => {
                cur.add_assign(&v);
                if cur.is_zero() {
                    self.values.remove(key.as_slice());
                }
            }
            None => {
                self.values.insert(key, v);
            }
        }
    }

    /// Evaluation on basis arguments, canonicalizing by permutation sign;
    /// zero whenever a pair or the terminal triple repeats an index.
    pub fn eval_basis(&self, pairs: &[[usize; 2]], tail: usize) -> Vector {
        let mut out = Vector::zero(self.dim);
        self.eval_basis_into(pairs, tail, &Scalar::one(), &mut out);
        out
    }

    /// `acc += coeff · f(pairs…, tail)` without intermediate allocation.
    pub fn eval_basis_into(
        &self,
        pairs: &[[usize; 2]],
        tail: usize,
        coeff: &Scalar,
        acc: &mut Vector,
    ) {
        debug_assert_eq!(pairs.len(), self.degree);
        let mut key = [0usize; MAX_KEY];
        let mut neg = false;
        let len = if self.degree == 0 { 1 } else { 2 * self.degree + 1 };
        if self.degree == 0 {
            key[0] = tail;
        } else {
            for (s, p) in pairs[..self.degree - 1].iter().enumerate() {
                match canon_pair(p[0], p[1]) {
                    None => return,
                    Some(([a, b], n)) => {
                        neg ^= n;
                        key[2 * s] = a;
                        key[2 * s + 1] = b;
                    }
                }
            }
            let last = pairs[self.degree - 1];
            match canon_triple(last[0], last[1], tail) {
                None => return,
                Some((t, n)) => {
                    neg ^= n;
                    key[len - 3..len].copy_from_slice(&t);
                }
            }
        }
        if let Some(v) = self.values.get(&key[..len]) {
            let c = if neg { -coeff } else { coeff.clone() };
            acc.add_scaled(&c, v);
        }
    }

    /// Trilinear evaluation of a degree-1 cochain on coordinate vectors.
    pub fn eval_triple(&self, x: &Vector, y: &Vector, z: &Vector) -> Vector {
        assert_eq!(self.degree, 1, "eval_triple needs a degree-1 cochain");
        let mut out = Vector::zero(self.dim);
        for (i, a) in x.support() {
            for (j, b) in y.support() {
                let ab = a * b;
                for (k, c) in z.support() {
                    self.eval_basis_into(&[[i, j]], k, &(&ab * c), &mut out);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.dim, other.dim);
        let mut out = self.clone();
        for (k, v) in &other.values {
            out.add_at_key(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Cochain) -> Cochain {
        self.add(&other.scaled(&Scalar::from_int(-1)))
    }

    pub fn scaled(&self, c: &Scalar) -> Cochain {
        if c.is_zero() {
            return Cochain::zero(self.degree, self.dim);
        }
        Cochain {
            degree: self.degree,
            dim: self.dim,
            values: self
                .values
                .iter()
                .map(|(k, v)| (k.clone(), v.scaled(c)))
                .collect(),
        }
    }

    /// Builds a degree-1 cochain from its values on strictly increasing
    /// basis triples.
    pub fn from_trilinear(dim: usize, f: impl Fn(usize, usize, usize) -> Vector) -> Cochain {
        let mut out = Cochain::zero(1, dim);
        for a in 0..dim {
            for b in (a + 1)..dim {
                for c in (b + 1)..dim {
                    let v = f(a, b, c);
                    if !v.is_zero() {
                        out.values.insert(vec![a, b, c], v);
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Debug for Cochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Cochain(degree {}, dim {}):", self.degree, self.dim)?;
        for (k, v) in &self.values {
            writeln!(f, "  {k:?} -> {v:?}")?;
        }
        Ok(())
    }
}

/// Composition output before the terminal-triple antisymmetry is certified:
/// `degree` sorted pairs plus a free tail index.
#[derive(Clone, PartialEq, Eq)]
pub struct PreCochain {
    degree: usize,
    dim: usize,
    values: BTreeMap<Vec<usize>, Vector>,
}

impl PreCochain {
    pub fn zero(degree: usize, dim: usize) -> Self {
        PreCochain {
            degree,
            dim,
            values: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &Vector)> {
        self.values.iter().map(|(k, v)| (k.as_slice(), v))
    }

    /// Evaluation with pair-slot canonicalization only; the tail is free.
    pub fn eval_basis(&self, pairs: &[[usize; 2]], tail: usize) -> Vector {
        debug_assert_eq!(pairs.len(), self.degree);
        let mut out = Vector::zero(self.dim);
        let mut key = [0usize; MAX_KEY];
        let mut neg = false;
        for (s, p) in pairs.iter().enumerate() {
            match canon_pair(p[0], p[1]) {
                None => return out,
                Some(([a, b], n)) => {
                    neg ^= n;
                    key[2 * s] = a;
                    key[2 * s + 1] = b;
                }
            }
        }
        let len = 2 * self.degree + 1;
        key[len - 1] = tail;
        if let Some(v) = self.values.get(&key[..len]) {
            if neg {
                out.sub_assign(v);
            } else {
                out.add_assign(v);
            }
        }
        out
    }

    /// `self + c · other`, entrywise.
    pub fn linear_combination(&self, other: &PreCochain, c: i64) -> PreCochain {
        assert_eq!(self.degree, other.degree);
        assert_eq!(self.dim, other.dim);
        let c = Scalar::from_int(c);
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            let scaled = v.scaled(&c);
            match values.get_mut(k.as_slice()) {
                Some(cur) => {
                    cur.add_assign(&scaled);
                    if cur.is_zero() {
                        values.remove(k.as_slice());
                    }
                }
                None => {
                    if !scaled.is_zero() {
                        values.insert(k.clone(), scaled);
                    }
                }
            }
        }
        PreCochain {
            degree: self.degree,
            dim: self.dim,
            values,
        }
    }

    /// Certifies that the last pair and the tail assemble into a fully
    /// antisymmetric triple, and rewrites the result on canonical triples.
    /// A violation means the claimed graded-Lie closure failed; it is
    /// reported, never silently projected away.
    pub fn try_into_cochain(&self) -> Result<Cochain, Error> {
        let mut out = Cochain::zero(self.degree, self.dim);
        if self.degree == 0 {
            out.values = self.values.clone();
            return Ok(out);
        }
        let prefix_len = 2 * (self.degree - 1);
        let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
        for (key, value) in &self.values {
            let (a, b, t) = (key[prefix_len], key[prefix_len + 1], key[prefix_len + 2]);
            if t == a || t == b {
                return Err(Error::invariant(format!(
                    "terminal triple degenerate at key {key:?} with nonzero value {value:?}"
                )));
            }
            let (triple, neg) = canon_triple(a, b, t).expect("distinct indices");
            let mut class_key = key[..prefix_len].to_vec();
            class_key.extend_from_slice(&triple);
            if !seen.insert(class_key.clone()) {
                continue;
            }
            // Representative value v on (x<y<z); the three tail positions
            // carry signs +, -, + respectively.
            let rep = if neg { value.negated() } else { value.clone() };
            let [x, y, z] = triple;
            for (pair, tail, positive) in
                [([x, y], z, true), ([x, z], y, false), ([y, z], x, true)]
            {
                let mut sibling = key[..prefix_len].to_vec();
                sibling.extend_from_slice(&pair);
                sibling.push(tail);
                let got = self
                    .values
                    .get(sibling.as_slice())
                    .cloned()
                    .unwrap_or_else(|| Vector::zero(self.dim));
                let expected = if positive { rep.clone() } else { rep.negated() };
                if got != expected {
                    return Err(Error::invariant(format!(
                        "terminal triple not antisymmetric at key {sibling:?}: got {got:?}, expected {expected:?}"
                    )));
                }
            }
            if !rep.is_zero() {
                out.values.insert(class_key, rep);
            }
        }
        Ok(out)
    }
}

impl std::fmt::Debug for PreCochain {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "PreCochain(degree {}, dim {}):", self.degree, self.dim)?;
        for (k, v) in &self.values {
            writeln!(f, "  {k:?} -> {v:?}")?;
        }
        Ok(())
    }
}

/// All `(a, m-a)`-shuffles of `0..m`: ascending first block, ascending
/// second block, and whether the permutation sign is negative. Generated in
/// lexicographic order of the first block; the sign is the parity of the
/// inversion count between blocks.
pub fn shuffles(m: usize, a: usize) -> Vec<(Vec<usize>, Vec<usize>, bool)> {
    let mut out = Vec::new();
    if a > m {
        return out;
    }
    let mut first: Vec<usize> = (0..a).collect();
    loop {
        let second: Vec<usize> = (0..m).filter(|i| !first.contains(i)).collect();
        let mut inversions = 0usize;
        for &f in &first {
            inversions += second.iter().filter(|&&s| s < f).count();
        }
        out.push((first.clone(), second, inversions % 2 == 1));
        // advance `first` to the next combination, lexicographically
        let mut bump = None;
        for i in (0..a).rev() {
            if first[i] < i + m - a {
                bump = Some(i);
                break;
            }
        }
        let Some(i) = bump else { break };
        first[i] += 1;
        for j in (i + 1)..a {
            first[j] = first[j - 1] + 1;
        }
    }
    out
}

/// Calls `f` on every canonical pre-cochain argument tuple of the given
/// degree: each pair slot ranges over sorted pairs in lexicographic order,
/// the tail over all indices, slots nesting left to right.
fn for_each_pre_key(degree: usize, dim: usize, mut f: impl FnMut(&[[usize; 2]], usize)) {
    let all_pairs: Vec<[usize; 2]> = {
        let mut v = Vec::new();
        for i in 0..dim {
            for j in (i + 1)..dim {
                v.push([i, j]);
            }
        }
        v
    };
    if degree == 0 {
        for t in 0..dim {
            f(&[], t);
        }
        return;
    }
    if all_pairs.is_empty() {
        return;
    }
    let mut odometer = vec![0usize; degree];
    let mut pairs = vec![all_pairs[0]; degree];
    loop {
        for (s, &i) in odometer.iter().enumerate() {
            pairs[s] = all_pairs[i];
        }
        for t in 0..dim {
            f(&pairs, t);
        }
        let mut s = degree;
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

/// Anything that evaluates like a cochain on basis tuples. Implemented by
/// stored cochains and by lazy bracket expressions, so the insertion
/// composition has exactly one implementation of its shuffle sums.
pub trait TriEval {
    fn degree(&self) -> usize;
    fn dim(&self) -> usize;
    /// `acc += coeff · self(pairs…, tail)`.
    fn eval_basis_into(&self, pairs: &[[usize; 2]], tail: usize, coeff: &Scalar, acc: &mut Vector);

    fn eval_basis_owned(&self, pairs: &[[usize; 2]], tail: usize) -> Vector {
        let mut out = Vector::zero(self.dim());
        self.eval_basis_into(pairs, tail, &Scalar::one(), &mut out);
        out
    }

    /// Whether any argument tuple starting with these pair slots can reach
    /// the support. `false` lets the composition skip evaluating the other
    /// factor entirely; answering `true` is always sound.
    fn prefix_may_hit(&self, _leading_pairs: &[[usize; 2]]) -> bool {
        true
    }
}

impl TriEval for Cochain {
    fn degree(&self) -> usize {
        self.degree
    }

    fn dim(&self) -> usize {
        self.dim
    }

    fn eval_basis_into(&self, pairs: &[[usize; 2]], tail: usize, coeff: &Scalar, acc: &mut Vector) {
        Cochain::eval_basis_into(self, pairs, tail, coeff, acc);
    }

    fn prefix_may_hit(&self, leading_pairs: &[[usize; 2]]) -> bool {
        if self.values.is_empty() {
            return false;
        }
        if leading_pairs.is_empty() || self.degree == 0 {
            return true;
        }
        // canonicalize the known leading pairs; signs are irrelevant here
        let mut prefix: Vec<usize> = Vec::with_capacity(2 * leading_pairs.len());
        for (s, p) in leading_pairs.iter().enumerate() {
            match canon_pair(p[0], p[1]) {
                None => return false,
                Some(([a, b], _)) => {
                    if s + 1 < self.degree {
                        // free-standing pair slot: exact key prefix
                        prefix.push(a);
                        prefix.push(b);
                    } else {
                        // the final pair slot mixes into the sorted terminal
                        // triple; check membership instead of position
                        return self
                            .values
                            .range(prefix.clone()..)
                            .take_while(|(k, _)| k.starts_with(prefix.as_slice()))
                            .any(|(k, _)| {
                                let triple = &k[k.len() - 3..];
                                triple.contains(&a) && triple.contains(&b)
                            });
                    }
                }
            }
        }
        self.values
            .range(prefix.clone()..)
            .take_while(|(k, _)| k.starts_with(prefix.as_slice()))
            .next()
            .is_some()
    }
}

type Shuffle = (Vec<usize>, Vec<usize>, bool);

/// Hoisted shuffle tables for composing degrees `(p, q)`.
struct ComposeTables {
    /// Per `k = 1..=p`: shuffles of the `k-1+q` slots before the split pair.
    split: Vec<Vec<Shuffle>>,
    /// Shuffles of all `p+q` slots for the terminal-triple insertion.
    tail: Vec<Shuffle>,
}

impl ComposeTables {
    fn new(pd: usize, qd: usize) -> Self {
        ComposeTables {
            split: (1..=pd).map(|k| shuffles(k - 1 + qd, k - 1)).collect(),
            tail: shuffles(pd + qd, pd),
        }
    }
}

/// One evaluation of the composition formula: `acc += coeff · (P∘Q)(pairs…, tail)`.
fn compose_value_into<P: TriEval + ?Sized, Q: TriEval + ?Sized>(
    p: &P,
    q: &Q,
    tables: &ComposeTables,
    pairs: &[[usize; 2]],
    tail: usize,
    coeff: &Scalar,
    acc: &mut Vector,
) {
    let (pd, qd) = (p.degree(), q.degree());
    debug_assert_eq!(pairs.len(), pd + qd);
    let mut q_args: Vec<[usize; 2]> = Vec::with_capacity(qd);
    let mut p_args: Vec<[usize; 2]> = Vec::with_capacity(pd);

    // Q into one component of the k-th pair slot (groups one and two).
    for k in 1..=pd {
        let split = k + qd - 1;
        let k_neg = ((k - 1) * qd) % 2 == 1;
        for (pslots, qslots, sh_neg) in &tables.split[k - 1] {
            // P's argument list starts with the pslot pairs; skip the Q
            // evaluations when no support entry can match them.
            if !pslots.is_empty() {
                p_args.clear();
                p_args.extend(pslots.iter().map(|&s| pairs[s]));
                if !p.prefix_may_hit(&p_args) {
                    continue;
                }
            }
            q_args.clear();
            q_args.extend(qslots.iter().map(|&s| pairs[s]));
            let base_neg = k_neg ^ sh_neg;
            for first_component in [true, false] {
                let q_tail = if first_component {
                    pairs[split][0]
                } else {
                    pairs[split][1]
                };
                let qv = q.eval_basis_owned(&q_args, q_tail);
                if qv.is_zero() {
                    continue;
                }
                for (l, c) in qv.support() {
                    let new_pair = if first_component {
                        [l, pairs[split][1]]
                    } else {
                        [pairs[split][0], l]
                    };
                    p_args.clear();
                    p_args.extend(pslots.iter().map(|&s| pairs[s]));
                    p_args.push(new_pair);
                    p_args.extend_from_slice(&pairs[split + 1..]);
                    let c = if base_neg { -&(c * coeff) } else { c * coeff };
                    p.eval_basis_into(&p_args, tail, &c, acc);
                }
            }
        }
    }

    // Q into the terminal triple (group three).
    let tail_neg = (pd * qd) % 2 == 1;
    for (pslots, qslots, sh_neg) in &tables.tail {
        p_args.clear();
        p_args.extend(pslots.iter().map(|&s| pairs[s]));
        if !p.prefix_may_hit(&p_args) {
            continue;
        }
        q_args.clear();
        q_args.extend(qslots.iter().map(|&s| pairs[s]));
        let qv = q.eval_basis_owned(&q_args, tail);
        if qv.is_zero() {
            continue;
        }
        let neg = tail_neg ^ sh_neg;
        for (l, c) in qv.support() {
            let c = if neg { -&(c * coeff) } else { c * coeff };
            p.eval_basis_into(&p_args, l, &c, acc);
        }
    }
}

/// Degrees whose flattened argument tuples still fit the stack buffers.
const MAX_COMPOSE_DEGREE: usize = (MAX_KEY - 1) / 2;

/// The insertion composition `P∘Q`, materialized on every canonical
/// argument tuple. The result is a [`PreCochain`]: pair slots are
/// antisymmetric by construction, the terminal triple is not yet certified.
pub fn compose(p: &Cochain, q: &Cochain) -> Result<PreCochain, Error> {
    if p.dim != q.dim {
        return Err(Error::dimension(format!(
            "composing cochains over dimensions {} and {}",
            p.dim, q.dim
        )));
    }
    let (pd, qd, dim) = (p.degree, q.degree, p.dim);
    let n = pd + qd;
    if n > MAX_COMPOSE_DEGREE {
        return Err(Error::invalid_input(format!(
            "composition degree {n} exceeds the supported bound {MAX_COMPOSE_DEGREE}"
        )));
    }
    let tables = ComposeTables::new(pd, qd);
    let mut out = PreCochain::zero(n, dim);
    for_each_pre_key(n, dim, |pairs, tail| {
        let mut acc = Vector::zero(dim);
        compose_value_into(p, q, &tables, pairs, tail, &Scalar::one(), &mut acc);
        if !acc.is_zero() {
            let mut key: Vec<usize> = Vec::with_capacity(2 * n + 1);
            for pr in pairs {
                key.push(pr[0]);
                key.push(pr[1]);
            }
            key.push(tail);
            out.values.insert(key, acc);
        }
    });
    Ok(out)
}

/// A lazily evaluated iterated bracket `[…[[a, b], c]…]` over borrowed
/// cochains.
///
/// Deep brackets of sparse cochains are astronomically sparse: materializing
/// them enumerates every canonical tuple of the full space while only a
/// handful of evaluations are ever consulted. This evaluator runs the same
/// composition formula recursively at single tuples, memoizing each node on
/// canonicalized arguments. Used by the L∞ identity checks, where brackets
/// nest four deep but are only read on the `g2`-supported tuples.
///
/// Not thread-safe (interior memoization).
pub enum BracketExpr<'a> {
    Leaf(&'a Cochain),
    Node(Box<BracketNode<'a>>),
}

pub struct BracketNode<'a> {
    left: BracketExpr<'a>,
    right: BracketExpr<'a>,
    degree: usize,
    dim: usize,
    /// `-(-1)^{pq}`: coefficient of the reversed composition in the bracket.
    reverse_coeff: Scalar,
    tables_lr: ComposeTables,
    tables_rl: ComposeTables,
    memo: std::cell::RefCell<BTreeMap<Vec<usize>, Vector>>,
}

impl<'a> BracketExpr<'a> {
    pub fn leaf(c: &'a Cochain) -> Self {
        BracketExpr::Leaf(c)
    }

    /// `[left, right]` as a lazy node.
    pub fn bracket(left: BracketExpr<'a>, right: BracketExpr<'a>) -> Result<Self, Error> {
        if left.dim() != right.dim() {
            return Err(Error::dimension("bracketing cochains over different spaces"));
        }
        let (pd, qd) = (left.degree(), right.degree());
        let degree = pd + qd;
        if degree > MAX_COMPOSE_DEGREE {
            return Err(Error::invalid_input(format!(
                "bracket degree {degree} exceeds the supported bound {MAX_COMPOSE_DEGREE}"
            )));
        }
        let reverse_coeff = Scalar::from_int(if (pd * qd) % 2 == 0 { -1 } else { 1 });
        Ok(BracketExpr::Node(Box::new(BracketNode {
            degree,
            dim: left.dim(),
            tables_lr: ComposeTables::new(pd, qd),
            tables_rl: ComposeTables::new(qd, pd),
            reverse_coeff,
            left,
            right,
            memo: std::cell::RefCell::new(BTreeMap::new()),
        })))
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketExpr::Leaf(c) => c.degree,
            BracketExpr::Node(n) => n.degree,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            BracketExpr::Leaf(c) => c.dim,
            BracketExpr::Node(n) => n.dim,
        }
    }

    pub fn eval_basis(&self, pairs: &[[usize; 2]], tail: usize) -> Vector {
        let mut out = Vector::zero(self.dim());
        self.eval_basis_into(pairs, tail, &Scalar::one(), &mut out);
        out
    }
}

impl TriEval for BracketExpr<'_> {
    fn degree(&self) -> usize {
        BracketExpr::degree(self)
    }

    fn dim(&self) -> usize {
        BracketExpr::dim(self)
    }

    fn prefix_may_hit(&self, leading_pairs: &[[usize; 2]]) -> bool {
        match self {
            BracketExpr::Leaf(c) => c.prefix_may_hit(leading_pairs),
            BracketExpr::Node(_) => true,
        }
    }

    fn eval_basis_into(&self, pairs: &[[usize; 2]], tail: usize, coeff: &Scalar, acc: &mut Vector) {
        match self {
            BracketExpr::Leaf(c) => c.eval_basis_into(pairs, tail, coeff, acc),
            BracketExpr::Node(node) => {
                // canonicalize pair slots, memoize on the canonical key
                let mut key: Vec<usize> = Vec::with_capacity(2 * node.degree + 1);
                let mut neg = false;
                for p in pairs {
                    match canon_pair(p[0], p[1]) {
                        None => return,
                        Some(([a, b], n)) => {
                            neg ^= n;
                            key.push(a);
                            key.push(b);
                        }
                    }
                }
                key.push(tail);
                if let Some(v) = node.memo.borrow().get(key.as_slice()) {
                    let c = if neg { -coeff } else { coeff.clone() };
                    acc.add_scaled(&c, v);
                    return;
                }
                let canon_pairs: Vec<[usize; 2]> = key[..2 * node.degree]
                    .chunks(2)
                    .map(|c| [c[0], c[1]])
                    .collect();
                let mut value = Vector::zero(node.dim);
                compose_value_into(
                    &node.left,
                    &node.right,
                    &node.tables_lr,
                    &canon_pairs,
                    tail,
                    &Scalar::one(),
                    &mut value,
                );
                compose_value_into(
                    &node.right,
                    &node.left,
                    &node.tables_rl,
                    &canon_pairs,
                    tail,
                    &node.reverse_coeff,
                    &mut value,
                );
                let c = if neg { -coeff } else { coeff.clone() };
                acc.add_scaled(&c, &value);
                node.memo.borrow_mut().insert(key, value);
            }
        }
    }
}

/// The grade commutator `[P,Q] = P∘Q - (-1)^{pq} Q∘P`, certified back into
/// a [`Cochain`]. Certification failure surfaces as
/// [`Error::Invariant`].
pub fn nr_bracket(p: &Cochain, q: &Cochain) -> Result<Cochain, Error> {
    let pq = compose(p, q)?;
    let qp = compose(q, p)?;
    let coeff = if (p.degree * q.degree).is_multiple_of(2) { -1 } else { 1 };
    pq.linear_combination(&qp, coeff).try_into_cochain()
}

/// The degree-1 cochain of a structure-constant table.
pub fn from_bracket(a: &ThreeLieAlgebra) -> Cochain {
    let mut out = Cochain::zero(1, a.dim());
    for (key, v) in a.table() {
        out.values.insert(key.to_vec(), v.clone());
    }
    out
}

/// Reads a degree-1 cochain back as a structure-constant table.
pub fn to_bracket(c: &Cochain) -> Result<ThreeLieAlgebra, Error> {
    if c.degree != 1 {
        return Err(Error::invalid_input(format!(
            "degree-{} cochain is not a ternary multiplication",
            c.degree
        )));
    }
    let mut a = ThreeLieAlgebra::abelian(c.dim);
    for (key, v) in &c.values {
        a.set_bracket(key[0], key[1], key[2], v.clone())?;
    }
    Ok(a)
}

/// True when `[π,π] = 0`, i.e. `π` is an exact ternary Lie structure.
pub fn is_maurer_cartan(pi: &Cochain) -> Result<bool, Error> {
    if pi.degree != 1 {
        return Err(Error::invalid_input(format!(
            "Maurer-Cartan test needs degree 1, got {}",
            pi.degree
        )));
    }
    Ok(nr_bracket(pi, pi)?.is_zero())
}

/// The differential `d_π = [π, ·]`. Requires `π` Maurer-Cartan; then
/// `d_π ∘ d_π = 0` and the complex is a differential graded Lie algebra.
pub fn coboundary(pi: &Cochain, f: &Cochain) -> Result<Cochain, Error> {
    if !is_maurer_cartan(pi)? {
        return Err(Error::precondition(
            "coboundary requires a Maurer-Cartan structure",
        ));
    }
    nr_bracket(pi, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::check_fundamental_identity;
    use crate::corpus;
    use crate::random;
    use rand::Rng;

    fn brute_sign(perm: &[usize]) -> bool {
        let mut inv = 0;
        for i in 0..perm.len() {
            for j in (i + 1)..perm.len() {
                if perm[i] > perm[j] {
                    inv += 1;
                }
            }
        }
        inv % 2 == 1
    }

    #[test]
    fn shuffle_signs_match_inversion_parity() {
        for m in 0..=6 {
            for a in 0..=m {
                let shs = shuffles(m, a);
                let binomial =
                    (1..=m).product::<usize>() / ((1..=a).product::<usize>() * (1..=(m - a)).product::<usize>());
                assert_eq!(shs.len(), binomial);
                for (first, second, neg) in shs {
                    let perm: Vec<usize> = first.iter().chain(second.iter()).copied().collect();
                    assert_eq!(neg, brute_sign(&perm), "perm {perm:?}");
                }
            }
        }
    }

    #[test]
    fn degree_zero_composition_is_map_composition() {
        // P sends e1->e2, Q sends e1->3 e1; P∘Q sends e1 -> 3 e2.
        let dim = 3;
        let mut p = Cochain::zero(0, dim);
        p.add_value(&[], 0, &Vector::basis(dim, 1)).unwrap();
        let mut q = Cochain::zero(0, dim);
        q.add_value(&[], 0, &Vector::basis(dim, 0).scaled(&Scalar::from_int(3)))
            .unwrap();
        let pq = compose(&p, &q).unwrap();
        assert_eq!(
            pq.eval_basis(&[], 0),
            Vector::basis(dim, 1).scaled(&Scalar::from_int(3))
        );
        assert!(pq.eval_basis(&[], 1).is_zero());
    }

    #[test]
    fn degree_one_by_degree_zero_is_insertion() {
        let mut rng = random::rng(11);
        for _ in 0..20 {
            let dim = 3;
            let pi = random::random_degree_one(&mut rng, dim, 3);
            let h = random::random_matrix(&mut rng, dim, dim);
            let mut hhat = Cochain::zero(0, dim);
            for t in 0..dim {
                let col = h.column(t);
                if !col.is_zero() {
                    hhat.add_value(&[], t, &col).unwrap();
                }
            }
            let composed = compose(&pi, &hhat).unwrap();
            // (π∘H)(x,y,z) = π(Hx,y,z) + π(x,Hy,z) + π(x,y,Hz), checked on
            // every basis tuple against direct insertion.
            for a in 0..dim {
                for b in 0..dim {
                    for t in 0..dim {
                        let got = composed.eval_basis(&[[a, b]], t);
                        let ea = Vector::basis(dim, a);
                        let eb = Vector::basis(dim, b);
                        let et = Vector::basis(dim, t);
                        let mut want = pi.eval_triple(&h.apply(&ea), &eb, &et);
                        want.add_assign(&pi.eval_triple(&ea, &h.apply(&eb), &et));
                        want.add_assign(&pi.eval_triple(&ea, &eb, &h.apply(&et)));
                        assert_eq!(got, want);
                    }
                }
            }
        }
    }

    #[test]
    fn maurer_cartan_iff_fundamental_identity() {
        let mut rng = random::rng(7);
        let mut both = [0usize; 2];
        for trial in 0..60 {
            let dim = if trial % 2 == 0 { 3 } else { 4 };
            let a = random::random_skew_table(&mut rng, dim, 2);
            let fi = check_fundamental_identity(&a).passed();
            let mc = is_maurer_cartan(&from_bracket(&a)).unwrap();
            assert_eq!(fi, mc, "disagree on {a:?}");
            both[usize::from(fi)] += 1;
        }
        // the corpus must exercise both verdicts
        assert!(both[0] > 0 && both[1] > 0, "one-sided corpus: {both:?}");
    }

    #[test]
    fn bracket_of_example_structure_vanishes() {
        let pi = from_bracket(&corpus::example_5_6_algebra());
        assert!(nr_bracket(&pi, &pi).unwrap().is_zero());
        assert!(is_maurer_cartan(&pi).unwrap());
    }

    #[test]
    fn graded_antisymmetry_on_random_cochains() {
        let mut rng = random::rng(23);
        for _ in 0..12 {
            let dim = 3;
            let dp = rng.gen_range(0..=2);
            let dq = rng.gen_range(0..=2);
            let p = random::random_cochain(&mut rng, dp, dim, 3);
            let q = random::random_cochain(&mut rng, dq, dim, 3);
            let b1 = nr_bracket(&p, &q).unwrap();
            let b2 = nr_bracket(&q, &p).unwrap();
            let sign = if (dp * dq) % 2 == 0 { 1 } else { -1 };
            // [f,g] + (-1)^{pq} [g,f] = 0
            let sum = b1.add(&b2.scaled(&Scalar::from_int(sign)));
            assert!(sum.is_zero(), "antisymmetry failed for degrees {dp},{dq}");
        }
    }

    #[test]
    fn graded_jacobi_on_all_basis_cochain_triples() {
        // exhaustive over basis cochains of degrees (0,0,0), (0,0,1),
        // (0,1,1), (1,1,1) on a 3-dimensional space
        let dim = 3;
        let mut basis0 = Vec::new();
        for s in 0..dim {
            for t in 0..dim {
                let mut c = Cochain::zero(0, dim);
                c.add_value(&[], t, &Vector::basis(dim, s)).unwrap();
                basis0.push(c);
            }
        }
        let mut basis1 = Vec::new();
        for s in 0..dim {
            let mut c = Cochain::zero(1, dim);
            c.add_value(&[[0, 1]], 2, &Vector::basis(dim, s)).unwrap();
            basis1.push(c);
        }
        let pick = |deg: usize| -> &Vec<Cochain> {
            if deg == 0 {
                &basis0
            } else {
                &basis1
            }
        };
        let sgn = |e: usize| Scalar::from_int(if e.is_multiple_of(2) { 1 } else { -1 });
        for degrees in [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)] {
            let (p, q, r) = degrees;
            for f in pick(p) {
                for g in pick(q) {
                    for h in pick(r) {
                        let t1 = nr_bracket(&nr_bracket(f, g).unwrap(), h).unwrap();
                        let t2 = nr_bracket(&nr_bracket(g, h).unwrap(), f).unwrap();
                        let t3 = nr_bracket(&nr_bracket(h, f).unwrap(), g).unwrap();
                        let total = t1
                            .scaled(&sgn(p * r))
                            .add(&t2.scaled(&sgn(q * p)))
                            .add(&t3.scaled(&sgn(r * q)));
                        assert!(total.is_zero(), "jacobi failed at degrees {degrees:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn graded_jacobi_on_random_cochains() {
        let mut rng = random::rng(31);
        for trial in 0..6 {
            let dim = 3;
            let degrees = match trial % 4 {
                0 => (0, 0, 1),
                1 => (0, 1, 1),
                2 => (1, 1, 1),
                _ => (1, 1, 2),
            };
            let f = random::random_cochain(&mut rng, degrees.0, dim, 2);
            let g = random::random_cochain(&mut rng, degrees.1, dim, 2);
            let h = random::random_cochain(&mut rng, degrees.2, dim, 2);
            let (p, q, r) = degrees;
            // (-1)^{pr} [[f,g],h] + (-1)^{qp} [[g,h],f] + (-1)^{rq} [[h,f],g] = 0
            let t1 = nr_bracket(&nr_bracket(&f, &g).unwrap(), &h).unwrap();
            let t2 = nr_bracket(&nr_bracket(&g, &h).unwrap(), &f).unwrap();
            let t3 = nr_bracket(&nr_bracket(&h, &f).unwrap(), &g).unwrap();
            let sgn = |e: usize| if e.is_multiple_of(2) { 1 } else { -1 };
            let total = t1
                .scaled(&Scalar::from_int(sgn(p * r)))
                .add(&t2.scaled(&Scalar::from_int(sgn(q * p))))
                .add(&t3.scaled(&Scalar::from_int(sgn(r * q))));
            assert!(total.is_zero(), "jacobi failed for degrees {degrees:?}");
        }
    }

    #[test]
    fn degree_one_bracket_expands_to_eight_terms() {
        // For degree-1 cochains P, Q the bracket on (U∧V, X∧Y, Z) is
        //   P(Q(u,v,x),y,z) + P(x,Q(u,v,y),z) - P(u,v,Q(x,y,z)) + P(x,y,Q(u,v,z))
        // plus the same four terms with P and Q exchanged.
        let mut rng = random::rng(37);
        let dim = 4;
        for _ in 0..10 {
            let p = random::random_degree_one(&mut rng, dim, 3);
            let q = random::random_degree_one(&mut rng, dim, 3);
            let b = nr_bracket(&p, &q).unwrap();
            let e = |i: usize| Vector::basis(dim, i);
            for u in 0..dim {
                for v in 0..dim {
                    for x in 0..dim {
                        for y in 0..dim {
                            for z in 0..dim {
                                let got = {
                                    let mut acc = Vector::zero(dim);
                                    b.eval_basis_into(&[[u, v], [x, y]], z, &Scalar::one(), &mut acc);
                                    acc
                                };
                                let mut want = Vector::zero(dim);
                                for (f, g) in [(&p, &q), (&q, &p)] {
                                    want.add_assign(&f.eval_triple(
                                        &g.eval_basis(&[[u, v]], x),
                                        &e(y),
                                        &e(z),
                                    ));
                                    want.add_assign(&f.eval_triple(
                                        &e(x),
                                        &g.eval_basis(&[[u, v]], y),
                                        &e(z),
                                    ));
                                    want.sub_assign(&f.eval_triple(
                                        &e(u),
                                        &e(v),
                                        &g.eval_basis(&[[x, y]], z),
                                    ));
                                    want.add_assign(&f.eval_triple(
                                        &e(x),
                                        &e(y),
                                        &g.eval_basis(&[[u, v]], z),
                                    ));
                                }
                                assert_eq!(got, want, "at ({u},{v},{x},{y},{z})");
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coboundary_squares_to_zero_on_basis_maps() {
        let a = corpus::example_5_6_algebra();
        let pi = from_bracket(&a);
        for s in 0..3 {
            for t in 0..3 {
                let mut f = Cochain::zero(0, 3);
                f.add_value(&[], t, &Vector::basis(3, s)).unwrap();
                let df = coboundary(&pi, &f).unwrap();
                let ddf = coboundary(&pi, &df).unwrap();
                assert!(ddf.is_zero(), "d² != 0 on E_{{{s}{t}}}");
            }
        }
    }

    #[test]
    fn coboundary_of_identity_is_twice_pi() {
        // [π, Id] = π∘Id - Id∘π = 3π - π = 2π.
        let pi = from_bracket(&corpus::example_5_6_algebra());
        let mut id = Cochain::zero(0, 3);
        for t in 0..3 {
            id.add_value(&[], t, &Vector::basis(3, t)).unwrap();
        }
        let d_id = coboundary(&pi, &id).unwrap();
        assert_eq!(d_id, pi.scaled(&Scalar::from_int(2)));
    }

    #[test]
    fn coboundary_refuses_non_maurer_cartan() {
        let mut a = crate::algebra::ThreeLieAlgebra::abelian(4);
        a.set_bracket(0, 1, 2, Vector::basis(4, 0)).unwrap();
        a.set_bracket(0, 1, 3, Vector::basis(4, 1)).unwrap();
        let pi = from_bracket(&a);
        assert!(!is_maurer_cartan(&pi).unwrap());
        let f = Cochain::zero(0, 4);
        assert!(matches!(
            coboundary(&pi, &f),
            Err(Error::Precondition { .. })
        ));
    }

    #[test]
    fn bracket_round_trip_table() {
        let a = corpus::example_5_7_algebra();
        let back = to_bracket(&from_bracket(&a)).unwrap();
        assert_eq!(back.table(), a.table());
    }

    #[test]
    fn zero_cochain_composes_to_zero() {
        let pi = from_bracket(&corpus::example_5_6_algebra());
        let z = Cochain::zero(1, 3);
        assert!(compose(&pi, &z).unwrap().is_zero());
        assert!(compose(&z, &pi).unwrap().is_zero());
    }
}
