//! Finite permutation groups stored by full element enumeration.
//!
//! Every group here is small (`|G| ≤ 10⁴` in practice), so orbits,
//! stabilizers, normality and derived series are plain exhaustive loops.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::perm::Permutation;

pub const DEFAULT_CAP: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("permutation of degree {got} in a group of degree {expected}")]
    DegreeMismatch { got: usize, expected: usize },
    #[error("subset is not a subgroup")]
    NotASubgroup,
}

#[derive(Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PartialEq for PermGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl Eq for PermGroup {}

impl PermGroup {
    /// Breadth-first closure of `generators`. Elements end up sorted by image
    /// array, so two groups are equal iff their element lists are.
    pub fn close(
        generators: &[Permutation],
        degree: usize,
        cap: usize,
    ) -> Result<PermGroup, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { got: g.degree(), expected: degree });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
        let mut queue = VecDeque::from([identity]);
        while let Some(g) = queue.pop_front() {
            for s in generators {
                let h = s.compose(&g);
                if !seen.contains(&h) {
                    if seen.len() >= cap {
                        return Err(GroupError::CapExceeded(cap));
                    }
                    seen.insert(h.clone());
                    queue.push_back(h);
                }
            }
        }
        let mut gens = generators.to_vec();
        gens.sort();
        gens.dedup();
        Ok(Self::from_sorted(degree, gens, seen.into_iter().collect()))
    }

    /// Validates that `elements` form a group and picks a small generating
    /// set greedily.
    pub fn from_elements(degree: usize, elements: &[Permutation]) -> Result<PermGroup, GroupError> {
        let set: HashSet<&Permutation> = elements.iter().collect();
        for g in elements {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch { got: g.degree(), expected: degree });
            }
        }
        if !is_closed_subset(&set, degree) {
            return Err(GroupError::NotASubgroup);
        }
        let mut sorted: Vec<Permutation> = set.into_iter().cloned().collect();
        sorted.sort();
        let mut gens = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for g in &sorted {
            if !span.contains(g) {
                gens.push(g.clone());
                span = Self::close(&gens, degree, usize::MAX)
                    .expect("closure of a finite subgroup")
                    .elements
                    .into_iter()
                    .collect();
            }
        }
        Ok(Self::from_sorted(degree, gens, sorted))
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::from_sorted(degree, Vec::new(), vec![Permutation::identity(degree)])
    }

    fn from_sorted(degree: usize, generators: Vec<Permutation>, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        let index = elements.iter().cloned().enumerate().map(|(i, g)| (g, i)).collect();
        PermGroup { degree, generators, elements, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.index.contains_key(g)
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn orbit(&self, x: usize) -> Vec<usize> {
        let mut pts: Vec<usize> = self.elements.iter().map(|g| g.apply(x)).collect();
        pts.sort_unstable();
        pts.dedup();
        pts
    }

    /// Orbits listed by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !done[x] {
                let orbit = self.orbit(x);
                for &y in &orbit {
                    done[y] = true;
                }
                out.push(orbit);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn stabilizer(&self, x: usize) -> PermGroup {
        let elements: Vec<Permutation> =
            self.elements.iter().filter(|g| g.apply(x) == x).cloned().collect();
        let stab = Self::from_elements(self.degree, &elements).expect("stabilizers are subgroups");
        assert_eq!(
            self.orbit(x).len() * stab.order(),
            self.order(),
            "orbit-stabilizer law"
        );
        stab
    }

    pub fn is_subgroup(&self, subset: &[Permutation]) -> bool {
        let set: HashSet<&Permutation> = subset.iter().collect();
        set.iter().all(|g| self.contains(g)) && is_closed_subset(&set, self.degree)
    }

    pub fn is_normal(&self, subset: &[Permutation]) -> Result<bool, GroupError> {
        if !self.is_subgroup(subset) {
            return Err(GroupError::NotASubgroup);
        }
        let set: HashSet<&Permutation> = subset.iter().collect();
        Ok(self.generators_or_elements().iter().all(|g| {
            let g_inv = g.inverse();
            subset.iter().all(|h| set.contains(&g.compose(h).compose(&g_inv)))
        }))
    }

    fn generators_or_elements(&self) -> &[Permutation] {
        if self.generators.is_empty() {
            &self.elements
        } else {
            &self.generators
        }
    }

    /// The subgroup generated by all commutators `[g, h] = g⁻¹h⁻¹gh`.
    pub fn commutator_subgroup(&self) -> PermGroup {
        let mut comms: HashSet<Permutation> = HashSet::new();
        for g in &self.elements {
            let g_inv = g.inverse();
            for h in &self.elements {
                comms.insert(g_inv.compose(&h.inverse()).compose(g).compose(h));
            }
        }
        let mut gens: Vec<Permutation> = comms.into_iter().filter(|c| !c.is_identity()).collect();
        gens.sort();
        Self::close(&gens, self.degree, usize::MAX).expect("subgroup of a finite group")
    }

    /// `G ⊇ G' ⊇ G'' ⊇ …` down to the first repeated term.
    pub fn derived_series(&self) -> Vec<PermGroup> {
        let mut series = vec![self.clone()];
        loop {
            let last = series.last().unwrap();
            let next = last.commutator_subgroup();
            if next.order() == last.order() {
                return series;
            }
            series.push(next);
        }
    }

    pub fn is_solvable(&self) -> bool {
        self.derived_series().last().unwrap().order() == 1
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generators_or_elements();
        gens.iter().all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)))
    }

    /// `Some(m)` iff the group is abstractly dihedral of order `2m` with
    /// `m ≥ 3`: an element `a` of order `m` and an involution `b ∉ ⟨a⟩` with
    /// `b a b = a⁻¹` generate it.
    pub fn recognize_dihedral(&self) -> Option<usize> {
        let order = self.order();
        if order % 2 != 0 || order < 6 {
            return None;
        }
        let m = order / 2;
        let a = self.elements.iter().find(|g| g.order() == m)?;
        let a_inv = a.inverse();
        let rotations: HashSet<Permutation> = (0..m).map(|k| a.pow(k)).collect();
        let b = self.elements.iter().find(|b| {
            b.order() == 2 && !rotations.contains(*b) && b.compose(a).compose(b) == a_inv
        })?;
        let generated = Self::close(&[a.clone(), b.clone()], self.degree, order + 1).ok()?;
        (generated.order() == order).then_some(m)
    }
}

fn is_closed_subset(set: &HashSet<&Permutation>, degree: usize) -> bool {
    if !set.contains(&Permutation::identity(degree)) {
        return false;
    }
    // finite and closed under products implies closed under inverses
    set.iter().all(|a| set.iter().all(|b| set.contains(&a.compose(b))))
}
