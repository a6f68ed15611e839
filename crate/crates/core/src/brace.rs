//! Finite braces stored as two Cayley tables.
//!
//! `(A, +)` is an abelian group and `(A, ∘)` a group with the same neutral
//! element `0`, linked by `(a + b)∘c = a∘c − c + b∘c`. The cycle-set
//! operation is recovered from `a∘b = aᵇ + b` with `aᵇ = σ(b)⁻¹(a)`, so that
//! `b·c = (c + b)∘b′` and `aᶜ = a∘c − c`.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraceError {
    #[error("malformed tables: {0}")]
    Malformed(String),
    #[error("0 is not the neutral element of both operations")]
    NeutralMismatch,
    #[error("addition is not an abelian group: {0}")]
    AddNotAbelianGroup(String),
    #[error("circle operation is not a group: {0}")]
    CircleNotGroup(String),
    #[error("(a+b)∘c = a∘c − c + b∘c fails at ({a},{b},{c})")]
    GvViolation { a: usize, b: usize, c: usize },
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("invalid decomposition: {0}")]
    DecompositionInvalid(String),
    #[error("mutual action identity fails for a = {a} in I, b = {b} in J: {detail}")]
    Prop2Violation { a: usize, b: usize, detail: &'static str },
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteBrace {
    order: usize,
    add: Vec<usize>,
    circle: Vec<usize>,
    neg: Vec<usize>,
    inv: Vec<usize>,
    /// `dot[a*N + c] = a·c`
    dot: Vec<usize>,
}

impl std::fmt::Debug for FiniteBrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteBrace").field("order", &self.order).finish_non_exhaustive()
    }
}

impl FiniteBrace {
    /// Validates the group axioms of both tables and the compatibility law,
    /// reporting the first failure.
    pub fn verify(add: &[Vec<usize>], circle: &[Vec<usize>]) -> Result<Self, BraceError> {
        let n = add.len();
        if n == 0 {
            return Err(BraceError::Malformed("empty table".into()));
        }
        let flat = |t: &[Vec<usize>], name: &str| -> Result<Vec<usize>, BraceError> {
            if t.len() != n || t.iter().any(|r| r.len() != n) {
                return Err(BraceError::Malformed(format!("{name} table is not {n}x{n}")));
            }
            if t.iter().flatten().any(|&v| v >= n) {
                return Err(BraceError::Malformed(format!("{name} entry out of range")));
            }
            Ok(t.iter().flatten().copied().collect())
        };
        let add = flat(add, "add")?;
        let circle = flat(circle, "circle")?;
        Self::from_flat(n, add, circle)
    }

    pub(crate) fn from_flat(n: usize, add: Vec<usize>, circle: Vec<usize>) -> Result<Self, BraceError> {
        let at = |t: &[usize], a: usize, b: usize| t[a * n + b];
        if (0..n).any(|a| at(&add, 0, a) != a || at(&add, a, 0) != a)
            || (0..n).any(|a| at(&circle, 0, a) != a || at(&circle, a, 0) != a)
        {
            return Err(BraceError::NeutralMismatch);
        }
        let neg = group_inverses(&add, n).map_err(BraceError::AddNotAbelianGroup)?;
        if let Some((a, b)) = first_noncommuting(&add, n) {
            return Err(BraceError::AddNotAbelianGroup(format!("{a}+{b} ≠ {b}+{a}")));
        }
        check_associative(&add, n).map_err(BraceError::AddNotAbelianGroup)?;
        let inv = group_inverses(&circle, n).map_err(BraceError::CircleNotGroup)?;
        check_associative(&circle, n).map_err(BraceError::CircleNotGroup)?;
        for a in 0..n {
            for b in 0..n {
                let ab = at(&add, a, b);
                for c in 0..n {
                    let lhs = at(&circle, ab, c);
                    let rhs = at(&add, at(&add, at(&circle, a, c), neg[c]), at(&circle, b, c));
                    if lhs != rhs {
                        return Err(BraceError::GvViolation { a, b, c });
                    }
                }
            }
        }
        let mut dot = vec![0; n * n];
        for a in 0..n {
            for c in 0..n {
                dot[a * n + c] = at(&circle, at(&add, c, a), inv[a]);
            }
        }
        Ok(FiniteBrace { order: n, add, circle, neg, inv, dot })
    }

    /// The brace on `Z/n` with `a∘b = a + b`.
    pub fn trivial_cyclic(n: usize) -> Self {
        let add: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
        Self::from_flat(n, add.clone(), add).expect("trivial brace")
    }

    /// Componentwise brace on `A × B`, element `(a, b)` indexed `a·|B| + b`.
    pub fn direct_product(&self, other: &FiniteBrace) -> Self {
        let (n, m) = (self.order, other.order);
        let pair = |i: usize| (i / m, i % m);
        let mut add = vec![0; n * m * n * m];
        let mut circle = vec![0; n * m * n * m];
        for i in 0..n * m {
            for j in 0..n * m {
                let ((a1, b1), (a2, b2)) = (pair(i), pair(j));
                add[i * n * m + j] = self.add(a1, a2) * m + other.add(b1, b2);
                circle[i * n * m + j] = self.circle(a1, a2) * m + other.circle(b1, b2);
            }
        }
        Self::from_flat(n * m, add, circle).expect("product of braces")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b]
    }

    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a]
    }

    #[inline]
    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg[b])
    }

    #[inline]
    pub fn circle(&self, a: usize, b: usize) -> usize {
        self.circle[a * self.order + b]
    }

    /// `a′`, the inverse in the adjoint group.
    #[inline]
    pub fn circle_inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    /// The cycle-set operation `a·c = σ(a)(c) = (c + a)∘a′`.
    #[inline]
    pub fn dot(&self, a: usize, c: usize) -> usize {
        self.dot[a * self.order + c]
    }

    /// `aᶜ = σ(c)⁻¹(a) = a∘c − c`.
    #[inline]
    pub fn exponent(&self, a: usize, c: usize) -> usize {
        self.sub(self.circle(a, c), c)
    }

    /// The ring-style product `ab = a∘b − a − b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.sub(self.sub(self.circle(a, b), a), b)
    }

    pub fn sigma(&self, a: usize) -> Permutation {
        let n = self.order;
        Permutation::from_images(self.dot[a * n..(a + 1) * n].to_vec())
            .expect("left translations of a brace are bijective")
    }

    pub fn add_table(&self) -> Vec<Vec<usize>> {
        self.add.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn circle_table(&self) -> Vec<Vec<usize>> {
        self.circle.chunks(self.order).map(<[usize]>::to_vec).collect()
    }

    pub fn multiple(&self, k: usize, a: usize) -> usize {
        (0..k).fold(0, |acc, _| self.add(acc, a))
    }

    pub fn additive_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.add(x, a);
            k += 1;
        }
        k
    }

    pub fn subset(&self, members: impl IntoIterator<Item = usize>) -> BraceSubset<'_> {
        let members: BTreeSet<usize> = members.into_iter().collect();
        BraceSubset { parent: self, members: members.into_iter().collect() }
    }

    pub fn whole(&self) -> BraceSubset<'_> {
        self.subset(0..self.order)
    }

    pub fn zero(&self) -> BraceSubset<'_> {
        self.subset([0])
    }

    /// `{a | a·c = c for all c}`
    pub fn socle(&self) -> BraceSubset<'_> {
        let n = self.order;
        let soc = self.subset((0..n).filter(|&a| (0..n).all(|c| self.dot(a, c) == c)));
        debug_assert!(soc.is_ideal());
        soc
    }

    /// The additive subgroup generated by `gens`.
    pub fn additive_span(&self, gens: &[usize]) -> BraceSubset<'_> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut stack = vec![0];
        while let Some(a) = stack.pop() {
            for &g in gens {
                let b = self.add(a, g);
                if !seen[b] {
                    seen[b] = true;
                    stack.push(b);
                }
            }
        }
        self.subset((0..self.order).filter(|&a| seen[a]))
    }

    /// The `p`-primary components of `(A, +)` for each prime `p` dividing
    /// the order, in increasing order of `p`.
    pub fn primary_decomposition(&self) -> Vec<(usize, BraceSubset<'_>)> {
        prime_factors(self.order)
            .into_iter()
            .map(|(p, _)| {
                let members = (0..self.order).filter(|&a| is_power_of(self.additive_order(a), p));
                (p, self.subset(members))
            })
            .collect()
    }

    /// Invariant factors `d₁ | d₂ | …` of `(A, +)`, omitting 1s.
    pub fn additive_invariant_factors(&self) -> Vec<usize> {
        let mut per_prime: Vec<Vec<usize>> = Vec::new();
        for (p, e) in prime_factors(self.order) {
            // r[k] = log_p |{a : p^k a = 0}|
            let mut r = Vec::with_capacity(e + 1);
            for k in 0..=e {
                let pk = p.pow(k as u32);
                let count = (0..self.order).filter(|&a| self.multiple(pk, a) == 0).count();
                r.push(log_exact(count, p));
            }
            // cyclic factors of order at least p^k: r[k] − r[k−1]
            let at_least: Vec<usize> = (1..=e).map(|k| r[k] - r[k - 1]).collect();
            let mut powers = Vec::new();
            for k in 1..=e {
                let exactly = at_least[k - 1] - at_least.get(k).copied().unwrap_or(0);
                powers.extend(std::iter::repeat(p.pow(k as u32)).take(exactly));
            }
            powers.sort_unstable_by(|a, b| b.cmp(a));
            per_prime.push(powers);
        }
        let len = per_prime.iter().map(Vec::len).max().unwrap_or(0);
        let mut factors: Vec<usize> = (0..len)
            .map(|i| per_prime.iter().map(|ps| ps.get(i).copied().unwrap_or(1)).product())
            .collect();
        factors.sort_unstable();
        factors
    }

    /// The quotient by an ideal. Cosets are numbered by their least member,
    /// so the coset of 0 is 0. Returns the quotient and the projection.
    pub fn quotient(&self, ideal: &BraceSubset<'_>) -> Result<(FiniteBrace, Vec<usize>), BraceError> {
        if !ideal.is_ideal() {
            return Err(BraceError::NotAnIdeal);
        }
        let n = self.order;
        let mut rep = vec![usize::MAX; n];
        for a in 0..n {
            rep[a] = ideal.members.iter().map(|&i| self.add(a, i)).min().unwrap();
        }
        let reps: BTreeSet<usize> = rep.iter().copied().collect();
        let reps: Vec<usize> = reps.into_iter().collect();
        let index_of = |a: usize| reps.binary_search(&rep[a]).unwrap();
        let m = reps.len();
        let mut add = vec![0; m * m];
        let mut circle = vec![0; m * m];
        for (i, &a) in reps.iter().enumerate() {
            for (j, &b) in reps.iter().enumerate() {
                add[i * m + j] = index_of(self.add(a, b));
                circle[i * m + j] = index_of(self.circle(a, b));
            }
        }
        let projection: Vec<usize> = (0..n).map(index_of).collect();
        let q = FiniteBrace::from_flat(m, add, circle)?;
        if !self.is_homomorphism(&q, &projection) {
            return Err(BraceError::Malformed("quotient operations are not well defined".into()));
        }
        Ok((q, projection))
    }

    /// True if `map` preserves both operations.
    pub fn is_homomorphism(&self, target: &FiniteBrace, map: &[usize]) -> bool {
        let n = self.order;
        map.len() == n
            && map.iter().all(|&v| v < target.order)
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    map[self.add(a, b)] == target.add(map[a], map[b])
                        && map[self.circle(a, b)] == target.circle(map[a], map[b])
                })
            })
    }

    /// Checks `b∘a = ᵇa ∘ bᵃ` with `ᵇa = bᵃ·a` for all `a ∈ I`, `b ∈ J`,
    /// where `A = I ⊕ J` with both summands right ideals. If `I` is an ideal
    /// it also checks `a·b = b` and `b·a = b∘a∘b′`.
    pub fn check_prop2(
        &self,
        i: &BraceSubset<'_>,
        j: &BraceSubset<'_>,
    ) -> Result<Prop2Report, BraceError> {
        if !i.is_right_ideal() || !j.is_right_ideal() {
            return Err(BraceError::DecompositionInvalid("summands must be right ideals".into()));
        }
        let meet = i.members.iter().filter(|a| j.contains(**a)).count();
        if meet != 1 || i.len() * j.len() != self.order {
            return Err(BraceError::DecompositionInvalid("A is not the direct sum I ⊕ J".into()));
        }
        let i_is_ideal = i.is_ideal();
        for &a in &i.members {
            for &b in &j.members {
                let b_a = self.exponent(b, a);
                let left_action = self.dot(b_a, a);
                if self.circle(b, a) != self.circle(left_action, b_a) {
                    return Err(BraceError::Prop2Violation { a, b, detail: "b∘a = ᵇa∘bᵃ" });
                }
                if i_is_ideal {
                    if self.dot(a, b) != b {
                        return Err(BraceError::Prop2Violation { a, b, detail: "a·b = b" });
                    }
                    let conj = self.circle(self.circle(b, a), self.circle_inv(b));
                    if self.dot(b, a) != conj {
                        return Err(BraceError::Prop2Violation { a, b, detail: "b·a = b∘a∘b′" });
                    }
                }
            }
        }
        Ok(Prop2Report {
            pairs_checked: i.len() * j.len(),
            ideal_identities_checked: i_is_ideal,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Prop2Report {
    pub pairs_checked: usize,
    /// Whether `I` was an ideal, so the corollary identities were checked too.
    pub ideal_identities_checked: bool,
}

/// A sorted set of elements of a brace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BraceSubset<'a> {
    parent: &'a FiniteBrace,
    members: Vec<usize>,
}

impl<'a> BraceSubset<'a> {
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: usize) -> bool {
        self.members.binary_search(&a).is_ok()
    }

    pub fn is_additive_subgroup(&self) -> bool {
        let b = self.parent;
        self.contains(0)
            && self
                .members
                .iter()
                .all(|&x| self.members.iter().all(|&y| self.contains(b.add(x, y))))
    }

    /// An additive subgroup invariant under every `σ(b)`. For finite braces
    /// this is the same as closure under `a ↦ aᵇ`, since each `σ(b)` then
    /// permutes the subset.
    pub fn is_right_ideal(&self) -> bool {
        let b = self.parent;
        self.is_additive_subgroup()
            && (0..b.order()).all(|g| self.members.iter().all(|&x| self.contains(b.dot(g, x))))
    }

    /// A right ideal that is also normal in the adjoint group.
    pub fn is_ideal(&self) -> bool {
        let b = self.parent;
        self.is_right_ideal()
            && (0..b.order()).all(|g| {
                let g_inv = b.circle_inv(g);
                self.members.iter().all(|&x| self.contains(b.circle(b.circle(g, x), g_inv)))
            })
    }

    /// Invariant under every `σ(a)` and additively generating the brace.
    pub fn is_cycle_base(&self) -> bool {
        let b = self.parent;
        (0..b.order()).all(|g| self.members.iter().all(|&x| self.contains(b.dot(g, x))))
            && b.additive_span(&self.members).len() == b.order()
    }
}

fn group_inverses(table: &[usize], n: usize) -> Result<Vec<usize>, String> {
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        let right = (0..n).filter(|&b| table[a * n + b] == 0).collect::<Vec<_>>();
        match right.as_slice() {
            [b] if table[*b * n + a] == 0 => inv[a] = *b,
            _ => return Err(format!("element {a} has no two-sided inverse")),
        }
    }
    Ok(inv)
}

fn first_noncommuting(table: &[usize], n: usize) -> Option<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .find(|&(a, b)| table[a * n + b] != table[b * n + a])
}

fn check_associative(table: &[usize], n: usize) -> Result<(), String> {
    for a in 0..n {
        for b in 0..n {
            let ab = table[a * n + b];
            for c in 0..n {
                if table[ab * n + c] != table[a * n + table[b * n + c]] {
                    return Err(format!("not associative at ({a},{b},{c})"));
                }
            }
        }
    }
    Ok(())
}

pub(crate) fn prime_factors(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_power_of(mut k: usize, p: usize) -> bool {
    while k % p == 0 {
        k /= p;
    }
    k == 1
}

fn log_exact(mut count: usize, p: usize) -> usize {
    let mut r = 0;
    while count > 1 {
        debug_assert_eq!(count % p, 0);
        count /= p;
        r += 1;
    }
    r
}
