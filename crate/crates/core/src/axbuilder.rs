//! The brace `A(X)` of a finite cycle set.
//!
//! An element of the free abelian group `Z^(X)` acts on `X` through the
//! recursion `σ(a + x) = σ(a·x) ∘ σ(a)`, where `a·x = σ(a)(x)` stays in `X`.
//! Two vectors acting identically differ by a socle element, so `A(X)` is
//! realised on the set of reachable permutations: the circle operation is
//! composition and the sum `g + h` is obtained by replaying a word for `h`
//! starting from `g`.

use std::collections::HashMap;

use thiserror::Error;

use crate::brace::{BraceError, FiniteBrace};
use crate::cycleset::{CycleSetMorphism, CycleSetTable};
use crate::perm::Permutation;
use crate::permgroup::{GroupError, PermGroup, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AxError {
    #[error("vectors live over different cycle sets")]
    BaseMismatch,
    #[error("additive closure exceeded {0} elements")]
    ClosureCapExceeded(usize),
    #[error("well-definedness failure: {0}")]
    WellDefinednessFailure(String),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("constructed tables are not a brace: {0}")]
    Brace(#[from] BraceError),
    #[error("verification failed: {0}")]
    VerificationFailure(String),
}

/// An element of the free abelian group on a cycle set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeVector<'a> {
    base: &'a CycleSetTable,
    coeffs: Vec<i64>,
}

impl<'a> FreeVector<'a> {
    pub fn zero(base: &'a CycleSetTable) -> Self {
        FreeVector { base, coeffs: vec![0; base.size()] }
    }

    pub fn generator(base: &'a CycleSetTable, x: usize) -> Self {
        let mut v = Self::zero(base);
        v.coeffs[x] = 1;
        v
    }

    pub fn from_coeffs(base: &'a CycleSetTable, coeffs: Vec<i64>) -> Self {
        assert_eq!(coeffs.len(), base.size(), "one coefficient per point");
        FreeVector { base, coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn base(&self) -> &'a CycleSetTable {
        self.base
    }

    fn same_base(&self, other: &FreeVector<'_>) -> Result<(), AxError> {
        if std::ptr::eq(self.base, other.base) || self.base == other.base {
            Ok(())
        } else {
            Err(AxError::BaseMismatch)
        }
    }

    pub fn add(&self, other: &FreeVector<'_>) -> Result<FreeVector<'a>, AxError> {
        self.same_base(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(FreeVector { base: self.base, coeffs })
    }

    pub fn sub(&self, other: &FreeVector<'_>) -> Result<FreeVector<'a>, AxError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> FreeVector<'a> {
        FreeVector { base: self.base, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// The permutation of `X` by which this vector acts, built by adding and
    /// removing one generator at a time. Removing `x` from `a` uses
    /// `σ(a − x) = σ(y)⁻¹ ∘ σ(a)` with `y = T⁻¹(σ(a)(x))` for the square map `T`.
    pub fn perm(&self) -> Permutation {
        let cs = self.base;
        let square_inv = cs.square_map().inverse();
        let mut g = Permutation::identity(cs.size());
        for (x, &c) in self.coeffs.iter().enumerate() {
            for _ in 0..c.unsigned_abs() {
                g = if c > 0 {
                    cs.sigma(g.apply(x)).compose(&g)
                } else {
                    let y = square_inv.apply(g.apply(x));
                    cs.sigma_inv(y).compose(&g)
                };
            }
        }
        g
    }

    fn permuted(&self, p: &Permutation) -> FreeVector<'a> {
        let mut coeffs = vec![0; self.coeffs.len()];
        for (y, &c) in self.coeffs.iter().enumerate() {
            coeffs[p.apply(y)] += c;
        }
        FreeVector { base: self.base, coeffs }
    }

    /// `a·b`: the action of `a` applied to the coordinates of `b`.
    pub fn dot(&self, other: &FreeVector<'_>) -> Result<FreeVector<'a>, AxError> {
        self.same_base(other)?;
        let moved = FreeVector { base: self.base, coeffs: other.coeffs.clone() };
        Ok(moved.permuted(&self.perm()))
    }

    /// `aᵇ = σ(b)⁻¹(a)`
    pub fn exp(&self, other: &FreeVector<'_>) -> Result<FreeVector<'a>, AxError> {
        self.same_base(other)?;
        Ok(self.permuted(&other.perm().inverse()))
    }

    /// `a∘b = aᵇ + b`
    pub fn circle(&self, other: &FreeVector<'_>) -> Result<FreeVector<'a>, AxError> {
        self.exp(other)?.add(other)
    }

    /// `a′ = σ(a)(−a)`, the inverse for `∘`.
    pub fn circle_inv(&self) -> FreeVector<'a> {
        self.neg().permuted(&self.perm())
    }
}

/// `A(X)` realised on permutations of `X`.
#[derive(Debug, Clone)]
pub struct AXBrace {
    base: CycleSetTable,
    brace: FiniteBrace,
    perms: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    sigma: Vec<usize>,
    rep_words: Vec<Vec<usize>>,
    /// `step[g*n + x]` is the element `g + x`.
    step: Vec<usize>,
}

impl AXBrace {
    pub fn brace(&self) -> &FiniteBrace {
        &self.brace
    }

    pub fn base(&self) -> &CycleSetTable {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    /// The permutation of `X` by which element `e` acts.
    pub fn perm_of(&self, e: usize) -> &Permutation {
        &self.perms[e]
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn element_of_perm(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// The element `σ(x)`.
    pub fn sigma(&self, x: usize) -> usize {
        self.sigma[x]
    }

    pub fn sigma_map(&self) -> &[usize] {
        &self.sigma
    }

    /// Shortlex-least word over `X` whose sum is element `e`.
    pub fn rep_word(&self, e: usize) -> &[usize] {
        &self.rep_words[e]
    }

    /// The class of a free vector in `A(X)`.
    pub fn element_of(&self, v: &FreeVector<'_>) -> Result<usize, AxError> {
        if v.base != &self.base {
            return Err(AxError::BaseMismatch);
        }
        self.element_of_perm(&v.perm())
            .ok_or_else(|| AxError::WellDefinednessFailure("vector acts outside A(X)".into()))
    }

    /// Replays `word` starting from element `start`.
    pub fn replay(&self, start: usize, word: &[usize]) -> usize {
        let n = self.base.size();
        word.iter().fold(start, |g, &x| self.step[g * n + x])
    }

    /// The adjoint group as a permutation group on `X`.
    pub fn adjoint_group(&self) -> PermGroup {
        PermGroup::from_elements(self.base.size(), &self.perms).expect("A(X)∘ is a group")
    }
}

pub fn build_ax(cs: &CycleSetTable) -> Result<AXBrace, AxError> {
    build_ax_with_cap(cs, DEFAULT_CAP)
}

pub fn build_ax_with_cap(cs: &CycleSetTable, cap: usize) -> Result<AXBrace, AxError> {
    let n = cs.size();
    let identity = Permutation::identity(n);
    let mut perms = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0)]);
    let mut rep_words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut step = Vec::new();
    let mut head = 0;
    while head < perms.len() {
        for x in 0..n {
            let g = &perms[head];
            let h = cs.sigma(g.apply(x)).compose(g);
            let id = match index.get(&h) {
                Some(&id) => id,
                None => {
                    if perms.len() >= cap {
                        return Err(AxError::ClosureCapExceeded(cap));
                    }
                    let id = perms.len();
                    let mut word = rep_words[head].clone();
                    word.push(x);
                    rep_words.push(word);
                    index.insert(h.clone(), id);
                    perms.push(h);
                    id
                }
            };
            step.push(id);
        }
        head += 1;
    }
    let order = perms.len();
    let replay = |start: usize, word: &[usize]| word.iter().fold(start, |g, &x| step[g * n + x]);
    let mut add = vec![0; order * order];
    for g in 0..order {
        for h in 0..order {
            add[g * order + h] = replay(g, &rep_words[h]);
        }
    }
    for g in 0..order {
        for h in 0..g {
            if add[g * order + h] != add[h * order + g] {
                return Err(AxError::WellDefinednessFailure(format!(
                    "sum of elements {g} and {h} depends on the representative"
                )));
            }
        }
    }
    let mut circle = vec![0; order * order];
    for g in 0..order {
        for h in 0..order {
            let gh = perms[g].compose(&perms[h]);
            circle[g * order + h] = *index.get(&gh).ok_or_else(|| {
                AxError::WellDefinednessFailure("adjoint closure leaves the additive closure".into())
            })?;
        }
    }
    let brace = FiniteBrace::from_flat(order, add, circle)?;
    let sigma: Vec<usize> = (0..n).map(|x| step[x]).collect();
    let ax = AXBrace { base: cs.clone(), brace, perms, index, sigma, rep_words, step };
    check_equivariance(&ax)?;
    if !ax.brace.subset(ax.sigma.iter().copied()).is_cycle_base() {
        return Err(AxError::VerificationFailure("σX is not a cycle base".into()));
    }
    let group = permutation_group(cs).map_err(|e| AxError::VerificationFailure(e.to_string()))?;
    if group.elements() != ax.adjoint_group().elements() {
        return Err(AxError::VerificationFailure("adjoint group differs from G(X)".into()));
    }
    Ok(ax)
}

/// `σ(x·y) = σ(x)·σ(y)` and `σ(σ(x)⁻¹(y)) = σ(x)′·σ(y)` for all `x, y`.
pub fn check_equivariance(ax: &AXBrace) -> Result<(), AxError> {
    let cs = &ax.base;
    let b = &ax.brace;
    for x in 0..cs.size() {
        for y in 0..cs.size() {
            if ax.sigma(cs.op(x, y)) != b.dot(ax.sigma(x), ax.sigma(y)) {
                return Err(AxError::VerificationFailure(format!(
                    "σ(x·y) ≠ σ(x)·σ(y) at ({x},{y})"
                )));
            }
            let back = ax.sigma(cs.sigma_inv(x).apply(y));
            if back != b.dot(b.circle_inv(ax.sigma(x)), ax.sigma(y)) {
                return Err(AxError::VerificationFailure(format!(
                    "σ(σ(x)⁻¹(y)) ≠ σ(x)′·σ(y) at ({x},{y})"
                )));
            }
        }
    }
    Ok(())
}

/// `G(X)`, generated by the rows of the table. Always solvable.
pub fn permutation_group(cs: &CycleSetTable) -> Result<PermGroup, GroupError> {
    let g = PermGroup::close(cs.rows(), cs.size(), DEFAULT_CAP)?;
    debug_assert!(g.is_solvable());
    Ok(g)
}

/// The brace morphism `A(f): A(X) → A(Y)` induced by a surjective morphism.
#[derive(Debug, Clone)]
pub struct InducedMorphism {
    pub source: AXBrace,
    pub target: AXBrace,
    pub map: Vec<usize>,
}

impl InducedMorphism {
    pub fn is_bijective(&self) -> bool {
        self.source.order() == self.target.order() && {
            let mut seen = vec![false; self.target.order()];
            self.map.iter().all(|&e| !std::mem::replace(&mut seen[e], true))
        }
    }
}

/// Sends the class with word `x₁…x_k` to the class with word `f(x₁)…f(x_k)`.
pub fn induced_af(f: &CycleSetMorphism) -> Result<InducedMorphism, AxError> {
    if !f.is_surjective() {
        return Err(AxError::NotSurjective);
    }
    let source = build_ax(&f.source)?;
    let target = build_ax(&f.target)?;
    let map: Vec<usize> = (0..source.order())
        .map(|e| {
            let word: Vec<usize> = source.rep_word(e).iter().map(|&x| f.apply(x)).collect();
            target.replay(0, &word)
        })
        .collect();
    // every Cayley-graph edge gives a second word for its endpoint
    for e in 0..source.order() {
        for x in 0..f.source.size() {
            let via_edge = target.replay(map[e], &[f.apply(x)]);
            if map[source.replay(e, &[x])] != via_edge {
                return Err(AxError::WellDefinednessFailure(format!(
                    "image of element {e} + {x} depends on the word"
                )));
            }
        }
    }
    if !source.brace.is_homomorphism(&target.brace, &map) {
        return Err(AxError::VerificationFailure("A(f) is not a brace morphism".into()));
    }
    let mut hit = vec![false; target.order()];
    for &e in &map {
        hit[e] = true;
    }
    if !hit.into_iter().all(|h| h) {
        return Err(AxError::VerificationFailure("A(f) is not surjective".into()));
    }
    for x in 0..f.source.size() {
        if map[source.sigma(x)] != target.sigma(f.apply(x)) {
            return Err(AxError::VerificationFailure(format!(
                "σ_Y ∘ f ≠ A(f) ∘ σ_X at {x}"
            )));
        }
    }
    Ok(InducedMorphism { source, target, map })
}

/// Whether `σ_Y ∘ f` factors through `σ_X: X → A(X)`, i.e. whether
/// `σ_X(x) = σ_X(x')` forces `σ_Y(f(x)) = σ_Y(f(x'))`. Any morphism, not
/// necessarily surjective.
pub fn sigma_factors_through(f: &CycleSetMorphism) -> Result<bool, AxError> {
    let target = build_ax(&f.target)?;
    let n = f.source.size();
    Ok((0..n).all(|x| {
        (0..n).all(|y| {
            f.source.sigma(x) != f.source.sigma(y)
                || target.sigma(f.apply(x)) == target.sigma(f.apply(y))
        })
    }))
}
