//! Finite cycle sets: a set `X = {0..n-1}` with an operation `x·y = σ(x)(y)`
//! such that every `σ(x)` is bijective and
//! `(x·y)·(x·z) = (y·x)·(y·z)` holds for all triples.

use std::collections::HashMap;

use thiserror::Error;

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycleSetError {
    #[error("a cycle set needs at least one element")]
    Empty,
    #[error("row {row} has length {len}, expected {n}")]
    Ragged { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({x},{y}) out of range")]
    EntryOutOfRange { x: usize, y: usize, value: usize },
    #[error("row {0} is not a bijection")]
    NonBijectiveRow(usize),
    #[error("cycle-set law fails at (x,y,z) = ({x},{y},{z})")]
    CycleLawViolation { x: usize, y: usize, z: usize },
    #[error("square map x -> x·x is not bijective; finite cycle sets cannot do this")]
    SquareMapNotBijective,
    #[error("subset is not closed under the operation at ({x},{y})")]
    NotClosed { x: usize, y: usize },
    #[error("induced operation on classes is not well defined at ({x},{y})")]
    WellDefinednessFailure { x: usize, y: usize },
    #[error("map is not a morphism at ({x},{y})")]
    NotAMorphism { x: usize, y: usize },
    #[error("map has {got} entries, source has {expected}")]
    MapLength { got: usize, expected: usize },
    #[error("point {0} out of range")]
    PointOutOfRange(usize),
}

/// A validated finite cycle set, stored as its rows `σ(x)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycleSetTable {
    rows: Vec<Permutation>,
    inv_rows: Vec<Permutation>,
}

impl std::fmt::Debug for CycleSetTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.rows.iter()).finish()
    }
}

impl CycleSetTable {
    /// Validates a raw 0-based table `table[x][y] = x·y`.
    ///
    /// Diagnostics name the first violation: rows in order, then triples in
    /// row-major `(x, y, z)` order.
    pub fn verify(table: &[Vec<usize>]) -> Result<Self, CycleSetError> {
        let n = table.len();
        if n == 0 {
            return Err(CycleSetError::Empty);
        }
        let mut rows = Vec::with_capacity(n);
        for (x, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(CycleSetError::Ragged { row: x, len: row.len(), n });
            }
            if let Some((y, &value)) = row.iter().enumerate().find(|(_, &v)| v >= n) {
                return Err(CycleSetError::EntryOutOfRange { x, y, value });
            }
            let perm = Permutation::from_images(row.clone())
                .map_err(|_| CycleSetError::NonBijectiveRow(x))?;
            rows.push(perm);
        }
        Self::from_rows(rows)
    }

    /// Validates a list of left translations `σ(0), σ(1), …`.
    pub fn from_rows(rows: Vec<Permutation>) -> Result<Self, CycleSetError> {
        let n = rows.len();
        if n == 0 {
            return Err(CycleSetError::Empty);
        }
        for (x, r) in rows.iter().enumerate() {
            if r.degree() != n {
                return Err(CycleSetError::Ragged { row: x, len: r.degree(), n });
            }
        }
        if let Some((x, y, z)) = first_cycle_law_violation(&rows) {
            return Err(CycleSetError::CycleLawViolation { x, y, z });
        }
        let squares: Vec<usize> = (0..n).map(|x| rows[x].apply(x)).collect();
        if Permutation::from_images(squares).is_err() {
            return Err(CycleSetError::SquareMapNotBijective);
        }
        let inv_rows = rows.iter().map(Permutation::inverse).collect();
        Ok(CycleSetTable { rows, inv_rows })
    }

    /// The cycle set with `x·y = y` on `n` points.
    pub fn trivial(n: usize) -> Self {
        assert!(n > 0, "cycle sets are non-empty");
        let rows = vec![Permutation::identity(n); n];
        CycleSetTable { inv_rows: rows.clone(), rows }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    /// `x·y`
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.rows[x].apply(y)
    }

    /// `x^y = σ(y)⁻¹(x)`
    #[inline]
    pub fn exp(&self, x: usize, y: usize) -> usize {
        self.inv_rows[y].apply(x)
    }

    #[inline]
    pub fn sigma(&self, x: usize) -> &Permutation {
        &self.rows[x]
    }

    #[inline]
    pub fn sigma_inv(&self, x: usize) -> &Permutation {
        &self.inv_rows[x]
    }

    pub fn rows(&self) -> &[Permutation] {
        &self.rows
    }

    pub fn to_table(&self) -> Vec<Vec<usize>> {
        self.rows.iter().map(|r| r.images().to_vec()).collect()
    }

    /// The square map `T(x) = x·x`.
    pub fn square_map(&self) -> Permutation {
        let images = (0..self.size()).map(|x| self.op(x, x)).collect();
        Permutation::from_images(images).expect("validated at construction")
    }

    /// Orbits of the permutation group generated by all `σ(x)`, each sorted,
    /// listed by least element.
    pub fn orbit_partition(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut block = vec![usize::MAX; n];
        let mut blocks = Vec::new();
        for start in 0..n {
            if block[start] != usize::MAX {
                continue;
            }
            let id = blocks.len();
            block[start] = id;
            let mut members = vec![start];
            let mut i = 0;
            while i < members.len() {
                let y = members[i];
                i += 1;
                for r in &self.rows {
                    let z = r.apply(y);
                    if block[z] == usize::MAX {
                        block[z] = id;
                        members.push(z);
                    }
                }
            }
            members.sort_unstable();
            blocks.push(members);
        }
        debug_assert!(blocks
            .iter()
            .all(|b| self.sub_cycle_set(b).is_ok()));
        blocks
    }

    pub fn is_indecomposable(&self) -> bool {
        self.orbit_partition().len() == 1
    }

    /// True if all rows are pairwise distinct.
    pub fn is_irretractable(&self) -> bool {
        let mut rows: Vec<&Permutation> = self.rows.iter().collect();
        rows.sort();
        rows.windows(2).all(|w| w[0] != w[1])
    }

    /// The induced cycle set on a subset closed under the operation, together
    /// with its inclusion. The subset is relabeled in increasing order.
    pub fn sub_cycle_set(&self, members: &[usize]) -> Result<CycleSetMorphism, CycleSetError> {
        let mut members = members.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut index = HashMap::new();
        for (i, &m) in members.iter().enumerate() {
            if m >= self.size() {
                return Err(CycleSetError::PointOutOfRange(m));
            }
            index.insert(m, i);
        }
        let mut table = Vec::with_capacity(members.len());
        for &x in &members {
            let mut row = Vec::with_capacity(members.len());
            for &y in &members {
                let v = *index
                    .get(&self.op(x, y))
                    .ok_or(CycleSetError::NotClosed { x, y })?;
                row.push(v);
            }
            table.push(row);
        }
        let sub = CycleSetTable::verify(&table)?;
        CycleSetMorphism::new(sub, self.clone(), members)
    }

    /// The retraction: elements with equal `σ` are identified. Classes are
    /// numbered by first occurrence.
    pub fn retraction(&self) -> Result<CycleSetMorphism, CycleSetError> {
        let n = self.size();
        let mut class_of_row: HashMap<&Permutation, usize> = HashMap::new();
        let mut class = Vec::with_capacity(n);
        let mut reps = Vec::new();
        for (x, r) in self.rows.iter().enumerate() {
            let next = class_of_row.len();
            let c = *class_of_row.entry(r).or_insert_with(|| {
                reps.push(x);
                next
            });
            class.push(c);
        }
        let m = reps.len();
        let mut table = vec![vec![usize::MAX; m]; m];
        for x in 0..n {
            for y in 0..n {
                let v = class[self.op(x, y)];
                let cell = &mut table[class[x]][class[y]];
                if *cell == usize::MAX {
                    *cell = v;
                } else if *cell != v {
                    return Err(CycleSetError::WellDefinednessFailure { x, y });
                }
            }
        }
        let target = CycleSetTable::verify(&table)?;
        CycleSetMorphism::new(self.clone(), target, class)
    }

    /// Smallest `k` such that the `k`-fold retraction is a singleton, or
    /// `None` if the retraction stabilises above size one.
    pub fn multipermutation_level(&self) -> Option<usize> {
        let mut current = self.clone();
        let mut level = 0;
        loop {
            if current.size() == 1 {
                return Some(level);
            }
            let next = current
                .retraction()
                .expect("retraction is well defined")
                .target;
            if next.size() == current.size() {
                return None;
            }
            current = next;
            level += 1;
        }
    }

    /// Appends a new point `n` acting trivially (`σ(n) = id`) and fixed by
    /// every `σ(x)`.
    pub fn adjoin_zero(&self) -> CycleSetTable {
        let n = self.size();
        let mut table: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| {
                let mut row = r.images().to_vec();
                row.push(n);
                row
            })
            .collect();
        table.push((0..=n).collect());
        CycleSetTable::verify(&table).expect("adjoining a trivial fixed point preserves the law")
    }

    /// Disjoint union with trivial cross action: `x·y = y` whenever `x` and
    /// `y` come from different summands.
    pub fn disjoint_union(&self, other: &CycleSetTable) -> CycleSetTable {
        let (n, m) = (self.size(), other.size());
        let mut table = Vec::with_capacity(n + m);
        for x in 0..n {
            let mut row: Vec<usize> = self.rows[x].images().to_vec();
            row.extend(n..n + m);
            table.push(row);
        }
        for x in 0..m {
            let mut row: Vec<usize> = (0..n).collect();
            row.extend(other.rows[x].images().iter().map(|&y| y + n));
            table.push(row);
        }
        CycleSetTable::verify(&table).expect("disjoint union of cycle sets")
    }
}

fn first_cycle_law_violation(rows: &[Permutation]) -> Option<(usize, usize, usize)> {
    let n = rows.len();
    for x in 0..n {
        for y in 0..n {
            let xy = rows[x].apply(y);
            let yx = rows[y].apply(x);
            for z in 0..n {
                let lhs = rows[xy].apply(rows[x].apply(z));
                let rhs = rows[yx].apply(rows[y].apply(z));
                if lhs != rhs {
                    return Some((x, y, z));
                }
            }
        }
    }
    None
}

/// A map between cycle sets preserving the operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSetMorphism {
    pub source: CycleSetTable,
    pub target: CycleSetTable,
    pub map: Vec<usize>,
}

impl CycleSetMorphism {
    pub fn new(
        source: CycleSetTable,
        target: CycleSetTable,
        map: Vec<usize>,
    ) -> Result<Self, CycleSetError> {
        if map.len() != source.size() {
            return Err(CycleSetError::MapLength { got: map.len(), expected: source.size() });
        }
        if let Some(&p) = map.iter().find(|&&p| p >= target.size()) {
            return Err(CycleSetError::PointOutOfRange(p));
        }
        for x in 0..source.size() {
            for y in 0..source.size() {
                if map[source.op(x, y)] != target.op(map[x], map[y]) {
                    return Err(CycleSetError::NotAMorphism { x, y });
                }
            }
        }
        Ok(CycleSetMorphism { source, target, map })
    }

    pub fn identity(cs: &CycleSetTable) -> Self {
        CycleSetMorphism {
            source: cs.clone(),
            target: cs.clone(),
            map: (0..cs.size()).collect(),
        }
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn is_surjective(&self) -> bool {
        let mut hit = vec![false; self.target.size()];
        for &y in &self.map {
            hit[y] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.target.size()];
        self.map.iter().all(|&y| !std::mem::replace(&mut seen[y], true))
    }

    /// Sizes of the fibres over each target point.
    pub fn fibre_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.target.size()];
        for &y in &self.map {
            sizes[y] += 1;
        }
        sizes
    }

    /// `other ∘ self`
    pub fn then(&self, other: &CycleSetMorphism) -> Result<CycleSetMorphism, CycleSetError> {
        let map = self.map.iter().map(|&x| other.map[x]).collect();
        CycleSetMorphism::new(self.source.clone(), other.target.clone(), map)
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn dihedral4_matches_cycle_notation() {
        let cs = dihedral4();
        let names: Vec<String> = cs.rows().iter().map(ToString::to_string).collect();
        assert_eq!(names, ["(2,4)", "(1,2,3,4)", "(1,4,3,2)", "(1,3)"]);
    }

    #[test]
    fn trivial_is_valid() {
        for n in 1..6 {
            let table: Vec<Vec<usize>> = (0..n).map(|_| (0..n).collect()).collect();
            assert_eq!(CycleSetTable::verify(&table).unwrap(), CycleSetTable::trivial(n));
        }
    }

    #[test]
    fn law_violation_reports_first_triple() {
        // σ(0) = swap, σ(1) = id
        let err = CycleSetTable::verify(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert_eq!(err, CycleSetError::CycleLawViolation { x: 0, y: 1, z: 0 });
    }

    #[test]
    fn malformed_tables() {
        assert_eq!(CycleSetTable::verify(&[]), Err(CycleSetError::Empty));
        assert_eq!(
            CycleSetTable::verify(&[vec![0, 0], vec![0, 1]]),
            Err(CycleSetError::NonBijectiveRow(0))
        );
        assert!(matches!(
            CycleSetTable::verify(&[vec![0, 2], vec![0, 1]]),
            Err(CycleSetError::EntryOutOfRange { x: 0, y: 1, value: 2 })
        ));
        assert!(matches!(
            CycleSetTable::verify(&[vec![0], vec![0, 1]]),
            Err(CycleSetError::Ragged { row: 0, .. })
        ));
    }

    #[test]
    fn orbits() {
        assert_eq!(dihedral4().orbit_partition(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(
            CycleSetTable::trivial(3).orbit_partition(),
            vec![vec![0], vec![1], vec![2]]
        );
        let two = dihedral4().disjoint_union(&dihedral4());
        assert_eq!(
            two.orbit_partition(),
            vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]]
        );
        assert!(!two.is_indecomposable());
    }

    #[test]
    fn retraction_cases() {
        let r = dihedral4().retraction().unwrap();
        assert_eq!(r.target.size(), 4);
        assert!(dihedral4().is_irretractable());
        let r = CycleSetTable::trivial(3).retraction().unwrap();
        assert_eq!(r.target.size(), 1);
        assert!(r.is_surjective());
    }

    #[test]
    fn multipermutation_levels() {
        assert_eq!(CycleSetTable::trivial(1).multipermutation_level(), Some(0));
        assert_eq!(CycleSetTable::trivial(4).multipermutation_level(), Some(1));
        assert_eq!(swap2().multipermutation_level(), Some(1));
        assert_eq!(dihedral4().multipermutation_level(), None);
    }

    #[test]
    fn adjoin_zero_fixture() {
        let y = dihedral4().adjoin_zero();
        assert_eq!(y.size(), 5);
        assert!(y.is_irretractable());
        assert_eq!(CycleSetTable::trivial(1).adjoin_zero(), CycleSetTable::trivial(2));
        // point 0 (label 1) satisfies 0·0 = 0; together with the new zero it
        // spans a sub-cycle set with two identity rows
        assert_eq!(y.op(0, 0), 0);
        let z = y.sub_cycle_set(&[0, 4]).unwrap();
        assert_eq!(z.source, CycleSetTable::trivial(2));
        assert!(!z.source.is_irretractable());
    }

    #[test]
    fn sub_cycle_set_rejects_open_subsets() {
        assert!(matches!(
            dihedral4().sub_cycle_set(&[0, 1]),
            Err(CycleSetError::NotClosed { .. })
        ));
    }

    #[test]
    fn square_map_is_bijective() {
        assert_eq!(dihedral4().square_map().images(), &[0, 2, 1, 3]);
    }

    #[test]
    fn morphism_checks() {
        let cs = dihedral4();
        assert!(CycleSetMorphism::identity(&cs).is_injective());
        let bad = CycleSetMorphism::new(cs.clone(), CycleSetTable::trivial(4), vec![0, 1, 2, 3]);
        assert!(matches!(bad, Err(CycleSetError::NotAMorphism { .. })));
    }
}
