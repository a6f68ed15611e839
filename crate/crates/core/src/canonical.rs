//! Canonical forms of cycle sets under relabeling.
//!
//! The canonical form is the relabeled table that is lexicographically least
//! in row-major order among all `n!` relabelings. The search fixes the point
//! that receives label 0 and walks row 0 left to right. A cell whose value is
//! an unlabeled point must receive the next fresh label in any minimal
//! relabeling, so labels are only branched on when a column needs a point
//! that no earlier cell has forced. Once row 0 is complete every point has a
//! label and the remaining rows are determined.

use std::cmp::Ordering;

use crate::cycleset::CycleSetTable;
use crate::perm::Permutation;

const UNSET: usize = usize::MAX;

/// The table `t'[π(x)][π(y)] = π(x·y)`.
pub fn relabel(cs: &CycleSetTable, relabeling: &Permutation) -> CycleSetTable {
    let n = cs.size();
    let mut table = vec![vec![0; n]; n];
    for x in 0..n {
        for y in 0..n {
            table[relabeling.apply(x)][relabeling.apply(y)] = relabeling.apply(cs.op(x, y));
        }
    }
    CycleSetTable::verify(&table).expect("relabeling preserves the cycle-set law")
}

/// The canonical form together with one relabeling (old point → new label)
/// that produces it.
pub fn canonical_labeling(cs: &CycleSetTable) -> (CycleSetTable, Permutation) {
    let flat = flatten(cs);
    let (table, labels) = canonical_flat(&flat, cs.size());
    let n = cs.size();
    let rows: Vec<Vec<usize>> = table.chunks(n).map(<[usize]>::to_vec).collect();
    let canon = CycleSetTable::verify(&rows).expect("relabeling preserves the cycle-set law");
    (canon, Permutation::from_images(labels).expect("labeling is a bijection"))
}

pub fn canonical_form(cs: &CycleSetTable) -> CycleSetTable {
    canonical_labeling(cs).0
}

pub fn is_canonical(cs: &CycleSetTable) -> bool {
    let flat = flatten(cs);
    canonical_flat(&flat, cs.size()).0 == flat
}

/// An isomorphism `φ: a → b` with `φ(x·y) = φ(x)·φ(y)`, if one exists.
pub fn is_isomorphic(a: &CycleSetTable, b: &CycleSetTable) -> Option<Permutation> {
    if a.size() != b.size() {
        return None;
    }
    let (ca, la) = canonical_labeling(a);
    let (cb, lb) = canonical_labeling(b);
    (ca == cb).then(|| lb.inverse().compose(&la))
}

fn flatten(cs: &CycleSetTable) -> Vec<usize> {
    cs.rows().iter().flat_map(|r| r.images().iter().copied()).collect()
}

/// Canonical form of a row-major table of size `n × n`, returned as the
/// canonical table and the labeling `old → new`.
pub(crate) fn canonical_flat(table: &[usize], n: usize) -> (Vec<usize>, Vec<usize>) {
    let mut search = Search {
        table,
        n,
        rho: vec![UNSET; n],
        label: vec![UNSET; n],
        next: 0,
        row0: vec![0; n],
        best: None,
        generation: 0,
    };
    for a in 0..n {
        search.rho[0] = a;
        search.label[a] = 0;
        search.next = 1;
        let generation = search.generation;
        search.walk_row0(a, 0, Ordering::Equal, generation);
        search.label[a] = UNSET;
        search.rho[0] = UNSET;
    }
    search.best.expect("at least one labeling exists")
}

struct Search<'a> {
    table: &'a [usize],
    n: usize,
    /// new label → old point
    rho: Vec<usize>,
    /// old point → new label
    label: Vec<usize>,
    next: usize,
    row0: Vec<usize>,
    best: Option<(Vec<usize>, Vec<usize>)>,
    /// Bumped whenever `best` improves. Every frame on the stack shares the
    /// new best's prefix, so a state computed under an older generation is
    /// reset to `Equal`.
    generation: u64,
}

impl Search<'_> {
    fn walk_row0(&mut self, a: usize, col: usize, state: Ordering, generation: u64) {
        let n = self.n;
        let state = self.refresh(state, generation);
        if col == n {
            self.finish(state);
            return;
        }
        if self.rho[col] != UNSET {
            self.fill_cell(a, col, state, self.generation);
            return;
        }
        debug_assert_eq!(self.next, col);
        for w in 0..n {
            if self.label[w] != UNSET {
                continue;
            }
            self.rho[col] = w;
            self.label[w] = col;
            self.next += 1;
            self.fill_cell(a, col, state, generation);
            self.next -= 1;
            self.label[w] = UNSET;
            self.rho[col] = UNSET;
        }
    }

    fn refresh(&self, state: Ordering, generation: u64) -> Ordering {
        if generation == self.generation {
            state
        } else {
            Ordering::Equal
        }
    }

    fn fill_cell(&mut self, a: usize, col: usize, state: Ordering, generation: u64) {
        let state = self.refresh(state, generation);
        let v = self.table[a * self.n + self.rho[col]];
        let forced = self.label[v] == UNSET;
        if forced {
            self.label[v] = self.next;
            self.rho[self.next] = v;
            self.next += 1;
        }
        let value = self.label[v];
        let state = match (state, &self.best) {
            (Ordering::Equal, Some((best, _))) => value.cmp(&best[col]),
            (Ordering::Equal, None) => Ordering::Less,
            (s, _) => s,
        };
        if state != Ordering::Greater {
            self.row0[col] = value;
            self.walk_row0(a, col + 1, state, self.generation);
        }
        if forced {
            self.next -= 1;
            self.rho[self.next] = UNSET;
            self.label[v] = UNSET;
        }
    }

    fn finish(&mut self, mut state: Ordering) {
        let n = self.n;
        let mut candidate = Vec::with_capacity(n * n);
        candidate.extend_from_slice(&self.row0);
        for i in 1..n {
            let x = self.rho[i];
            for j in 0..n {
                let value = self.label[self.table[x * n + self.rho[j]]];
                if state == Ordering::Equal {
                    if let Some((best, _)) = &self.best {
                        state = value.cmp(&best[i * n + j]);
                        if state == Ordering::Greater {
                            return;
                        }
                    }
                }
                candidate.push(value);
            }
        }
        if state == Ordering::Less || self.best.is_none() {
            self.best = Some((candidate, self.label.clone()));
            self.generation += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycleset::fixtures::{dihedral4, swap2};

    /// Least relabeled table over all `n!` relabelings.
    fn brute_force(cs: &CycleSetTable) -> CycleSetTable {
        let n = cs.size();
        let mut best: Option<Vec<Vec<usize>>> = None;
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            let p = Permutation::from_images(perm.clone()).unwrap();
            let t = relabel(cs, &p).to_table();
            if best.as_ref().map_or(true, |b| t < *b) {
                best = Some(t);
            }
            if !next_permutation(&mut perm) {
                break;
            }
        }
        CycleSetTable::verify(&best.unwrap()).unwrap()
    }

    fn next_permutation(v: &mut [usize]) -> bool {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn matches_brute_force_on_fixtures() {
        for cs in [dihedral4(), swap2(), CycleSetTable::trivial(4), dihedral4().adjoin_zero()] {
            assert_eq!(canonical_form(&cs), brute_force(&cs));
        }
    }

    #[test]
    fn relabeled_copy_is_isomorphic() {
        let cs = dihedral4();
        let swap = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let other = relabel(&cs, &swap);
        assert_ne!(other, cs);
        let phi = is_isomorphic(&cs, &other).unwrap();
        for x in 0..4 {
            for y in 0..4 {
                assert_eq!(phi.apply(cs.op(x, y)), other.op(phi.apply(x), phi.apply(y)));
            }
        }
    }

    #[test]
    fn trivial_and_swap_differ() {
        assert!(is_isomorphic(&CycleSetTable::trivial(2), &swap2()).is_none());
        assert_ne!(canonical_form(&CycleSetTable::trivial(2)), canonical_form(&swap2()));
    }

    #[test]
    fn labeling_reproduces_form() {
        let cs = dihedral4().adjoin_zero();
        let (canon, labels) = canonical_labeling(&cs);
        assert_eq!(relabel(&cs, &labels), canon);
        assert!(is_canonical(&canon));
        assert_eq!(canonical_form(&canon), canon);
    }
}
