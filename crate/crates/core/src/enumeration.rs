//! Isomorph-free enumeration of cycle sets and the scans run over it.
//!
//! Rows `σ(0), σ(1), …` are assigned in index order, permutations in lex
//! order. After each assignment the law in the form
//! `σ(x·y)σ(x) = σ(y·x)σ(y)` is propagated over all known pairs: it either
//! fails, or forces the row of `y·x` from the row of `x·y` (and back).
//! Leaves are kept only when they equal their canonical form.
//!
//! Row 0 of a canonical table is the least conjugate of some `σ(b)` that
//! sends `b` to 0, taken over all `b`. So row 0 is restricted to
//! permutations that are their own least such conjugate, and every other
//! row `σ(b)` must have its least conjugate at `b` no smaller than row 0.
//! Relabelings that fix 0 and commute with row 0 keep row 0 in place; a
//! branch is cut once one of them makes the fully known leading rows smaller.

use std::collections::BTreeSet;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::axbuilder::permutation_group;
use crate::canonical::canonical_flat;
use crate::covering::{fundamental_group, ramirez_check, RamirezFlag, RamirezVerdict};
use crate::cycleset::CycleSetTable;
use crate::frobenius::{classify_action, ActionKind};
use crate::json::CycleSetJson;
use crate::perm::gcd;

pub const DEFAULT_MAX_SIZE: usize = 8;
const MAX: usize = 8;

type Row = [u8; MAX];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerationError {
    #[error("size {n} outside 1..={max}")]
    SizeOutOfRange { n: usize, max: usize },
    #[error("could not start worker pool: {0}")]
    ThreadPool(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationConfig {
    pub max_size: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for EnumerationConfig {
    fn default() -> Self {
        EnumerationConfig { max_size: DEFAULT_MAX_SIZE, jobs: None }
    }
}

impl EnumerationConfig {
    fn check(&self, n: usize) -> Result<(), EnumerationError> {
        let max = self.max_size.min(MAX);
        if n == 0 || n > max {
            return Err(EnumerationError::SizeOutOfRange { n, max });
        }
        Ok(())
    }

    fn install<T: Send>(&self, job: impl FnOnce() -> T + Send) -> Result<T, EnumerationError> {
        match self.jobs {
            None => Ok(job()),
            Some(threads) => rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map(|pool| pool.install(job))
                .map_err(|e| EnumerationError::ThreadPool(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Indecomposable,
    Decomposable,
    Irretractable,
    Retractable,
    Multipermutation,
    /// `G(X)` is dihedral of order at least 6.
    Dihedral,
}

impl FromStr for Predicate {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "indecomposable" => Predicate::Indecomposable,
            "decomposable" => Predicate::Decomposable,
            "irretractable" => Predicate::Irretractable,
            "retractable" => Predicate::Retractable,
            "multipermutation" => Predicate::Multipermutation,
            "dihedral" => Predicate::Dihedral,
            other => return Err(format!("unknown filter `{other}`")),
        })
    }
}

impl Predicate {
    pub fn holds(self, cs: &CycleSetTable) -> bool {
        match self {
            Predicate::Indecomposable => cs.is_indecomposable(),
            Predicate::Decomposable => !cs.is_indecomposable(),
            Predicate::Irretractable => cs.is_irretractable(),
            Predicate::Retractable => !cs.is_irretractable(),
            Predicate::Multipermutation => cs.multipermutation_level().is_some(),
            Predicate::Dihedral => permutation_group(cs)
                .map(|g| g.recognize_dihedral().is_some())
                .unwrap_or(false),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerationFilter {
    pub indecomposable_only: bool,
    pub predicates: Vec<Predicate>,
}

impl EnumerationFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn indecomposable() -> Self {
        EnumerationFilter { indecomposable_only: true, predicates: Vec::new() }
    }

    pub fn with(mut self, p: Predicate) -> Self {
        self.predicates.push(p);
        self
    }

    pub fn accepts(&self, cs: &CycleSetTable) -> bool {
        (!self.indecomposable_only || cs.is_indecomposable())
            && self.predicates.iter().all(|p| p.holds(cs))
    }
}

/// One representative per isomorphism class, in canonical form, sorted by
/// row-major table.
pub fn enumerate(n: usize, filter: &EnumerationFilter) -> Result<Vec<CycleSetTable>, EnumerationError> {
    enumerate_with(n, filter, &EnumerationConfig::default())
}

pub fn enumerate_with(
    n: usize,
    filter: &EnumerationFilter,
    config: &EnumerationConfig,
) -> Result<Vec<CycleSetTable>, EnumerationError> {
    config.check(n)?;
    config.install(|| {
        canonical_tables(n)
            .into_par_iter()
            .map(|flat| table_from_flat(&flat, n))
            .filter(|cs| filter.accepts(cs))
            .collect()
    })
}

/// Class counts without a filter, for sizes `1..=n_max`.
pub fn class_counts(n_max: usize, config: &EnumerationConfig) -> Result<Vec<usize>, EnumerationError> {
    (1..=n_max)
        .map(|n| {
            config.check(n)?;
            config.install(|| canonical_tables(n).len())
        })
        .collect()
}

fn table_from_flat(flat: &[usize], n: usize) -> CycleSetTable {
    let rows: Vec<Vec<usize>> = flat.chunks(n).map(<[usize]>::to_vec).collect();
    CycleSetTable::verify(&rows).expect("enumerated tables satisfy the law")
}

fn canonical_tables(n: usize) -> Vec<Vec<usize>> {
    let perms = all_perms(n);
    let mut out: Vec<Vec<usize>> = perms
        .iter()
        .filter(|p| min_conjugate(p, n, 0) == **p)
        .collect::<Vec<_>>()
        .into_par_iter()
        .flat_map_iter(|r0| {
            let allowed: Vec<Vec<Row>> = (0..n)
                .map(|k| {
                    if k == 0 {
                        vec![*r0]
                    } else {
                        perms.iter().filter(|p| min_conjugate(p, n, k) >= *r0).copied().collect()
                    }
                })
                .collect();
            let centralizer: Vec<(Row, Row)> = perms
                .iter()
                .filter(|pi| pi[0] == 0 && compose(pi, r0) == compose(r0, pi))
                .skip(1)
                .map(|pi| (*pi, invert(pi)))
                .collect();
            let mut root = Search::new(n, *r0, &allowed, &centralizer);
            root.rows[0] = *r0;
            root.known[0] = true;
            if n == 1 {
                root.dfs();
                return root.out;
            }
            allowed[1]
                .par_iter()
                .flat_map_iter(|p1| {
                    let mut s = root.clone();
                    if s.assign(1, *p1) {
                        s.dfs();
                    }
                    s.out
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort();
    out
}

fn all_perms(n: usize) -> Vec<Row> {
    fn extend(n: usize, prefix: &mut Vec<u8>, used: &mut [bool; MAX], out: &mut Vec<Row>) {
        if prefix.len() == n {
            let mut row: Row = std::array::from_fn(|i| i as u8);
            row[..n].copy_from_slice(prefix);
            out.push(row);
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                prefix.push(v as u8);
                extend(n, prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    extend(n, &mut Vec::with_capacity(n), &mut [false; MAX], &mut out);
    out
}

/// Least conjugate `πpπ⁻¹` with `π(k) = 0`: the cycle through `k` is labeled
/// first, then the remaining cycles by increasing length.
fn min_conjugate(p: &Row, n: usize, k: usize) -> Row {
    let mut seen = [false; MAX];
    let mut lengths = [0usize; MAX];
    let mut count = 0;
    let mut first = 0;
    for start in std::iter::once(k).chain(0..n) {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x] as usize;
            len += 1;
        }
        if start == k && count == 0 && first == 0 {
            first = len;
        } else {
            lengths[count] = len;
            count += 1;
        }
    }
    lengths[..count].sort_unstable();
    let mut row: Row = std::array::from_fn(|i| i as u8);
    let mut at = 0;
    for len in std::iter::once(first).chain(lengths[..count].iter().copied()) {
        for i in 0..len {
            row[at + i] = (at + (i + 1) % len) as u8;
        }
        at += len;
    }
    row
}

#[inline]
fn compose(a: &Row, b: &Row) -> Row {
    std::array::from_fn(|i| a[b[i] as usize])
}

#[inline]
fn invert(a: &Row) -> Row {
    let mut inv = [0u8; MAX];
    for (i, &v) in a.iter().enumerate() {
        inv[v as usize] = i as u8;
    }
    inv
}

#[derive(Clone)]
struct Search<'a> {
    n: usize,
    r0: Row,
    allowed: &'a [Vec<Row>],
    /// Non-identity relabelings fixing 0 and commuting with row 0, as
    /// `(π, π⁻¹)`.
    centralizer: &'a [(Row, Row)],
    rows: [Row; MAX],
    known: [bool; MAX],
    out: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(n: usize, r0: Row, allowed: &'a [Vec<Row>], centralizer: &'a [(Row, Row)]) -> Self {
        Search { n, r0, allowed, centralizer, rows: [[0; MAX]; MAX], known: [false; MAX], out: Vec::new() }
    }

    fn dfs(&mut self) {
        if self.beaten() {
            return;
        }
        let Some(k) = (0..self.n).find(|&i| !self.known[i]) else {
            self.leaf();
            return;
        };
        let (rows, known) = (self.rows, self.known);
        for p in self.candidates(k) {
            if self.assign(k, p) {
                self.dfs();
            }
            self.rows = rows;
            self.known = known;
        }
    }

    /// Rows allowed at `k`. For known `x` with `a = x·k` known, the law at
    /// `(x, k)` reads `σ(k) = σ(k·x)⁻¹σ(a)σ(x)`, so a candidate whose value at
    /// `x` is a known point is determined outright.
    fn candidates(&self, k: usize) -> Vec<Row> {
        let n = self.n;
        let anchors: Vec<(usize, usize)> = (0..n)
            .filter(|&x| self.known[x] && self.known[self.rows[x][k] as usize])
            .map(|x| (x, self.rows[x][k] as usize))
            .collect();
        if anchors.is_empty() {
            return self.allowed[k].clone();
        }
        let mut out: Vec<Row> = self.allowed[k]
            .iter()
            .filter(|p| anchors.iter().all(|&(x, _)| !self.known[p[x] as usize]))
            .copied()
            .collect();
        for &(x, a) in &anchors {
            let rhs = compose(&self.rows[a], &self.rows[x]);
            for v in (0..n).filter(|&v| self.known[v]) {
                let p = compose(&invert(&self.rows[v]), &rhs);
                if p[x] as usize == v && min_conjugate(&p, n, k) >= self.r0 {
                    out.push(p);
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    fn assign(&mut self, k: usize, p: Row) -> bool {
        self.rows[k] = p;
        self.known[k] = true;
        self.propagate(k)
    }

    /// Processes every pair `(x, y)` of known points that involves a newly
    /// known row as `x`, `y`, `x·y` or `y·x`, checking the law or forcing
    /// the missing row.
    fn propagate(&mut self, start: usize) -> bool {
        let n = self.n;
        let mut queue = [0usize; MAX];
        let (mut head, mut tail) = (0, 1);
        queue[0] = start;
        while head < tail {
            let r = queue[head];
            head += 1;
            for x in 0..n {
                if !self.known[x] {
                    continue;
                }
                for y in x + 1..n {
                    if !self.known[y] {
                        continue;
                    }
                    let a = self.rows[x][y] as usize;
                    let b = self.rows[y][x] as usize;
                    if x != r && y != r && a != r && b != r {
                        continue;
                    }
                    match (self.known[a], self.known[b]) {
                        (true, true) => {
                            if compose(&self.rows[a], &self.rows[x]) != compose(&self.rows[b], &self.rows[y]) {
                                return false;
                            }
                        }
                        (true, false) => {
                            let lhs = compose(&self.rows[a], &self.rows[x]);
                            if !self.force(b, compose(&lhs, &invert(&self.rows[y]))) {
                                return false;
                            }
                            queue[tail] = b;
                            tail += 1;
                        }
                        (false, true) => {
                            let rhs = compose(&self.rows[b], &self.rows[y]);
                            if !self.force(a, compose(&rhs, &invert(&self.rows[x]))) {
                                return false;
                            }
                            queue[tail] = a;
                            tail += 1;
                        }
                        (false, false) => {}
                    }
                }
            }
        }
        true
    }

    /// Whether some relabeling in the centralizer already yields a table
    /// that is smaller on its fully known leading rows.
    fn beaten(&self) -> bool {
        let n = self.n;
        self.centralizer.iter().any(|(pi, inv)| {
            for i in 1..n {
                let src = inv[i] as usize;
                if !self.known[i] || !self.known[src] {
                    return false;
                }
                for j in 0..n {
                    let theirs = pi[self.rows[src][inv[j] as usize] as usize];
                    let ours = self.rows[i][j];
                    if theirs != ours {
                        return theirs < ours;
                    }
                }
            }
            false
        })
    }

    fn force(&mut self, b: usize, row: Row) -> bool {
        if min_conjugate(&row, self.n, b) < self.r0 {
            return false;
        }
        self.rows[b] = row;
        self.known[b] = true;
        true
    }

    fn leaf(&mut self) {
        let n = self.n;
        let flat: Vec<usize> = (0..n)
            .flat_map(|x| self.rows[x][..n].iter().map(|&v| v as usize))
            .collect();
        if canonical_flat(&flat, n).0 == flat {
            self.out.push(flat);
        }
    }
}

/// Brute force over all `(n!)ⁿ` row tuples, deduplicated by canonical form.
/// Independent of the search above; used to cross-check it.
pub fn naive_classes(n: usize) -> Vec<CycleSetTable> {
    assert!((1..=5).contains(&n), "naive enumeration is only feasible for tiny n");
    let perms: Vec<Vec<usize>> = all_perms(n)
        .iter()
        .map(|r| r[..n].iter().map(|&v| v as usize).collect())
        .collect();
    let total = perms.len().pow(n as u32);
    let mut classes = BTreeSet::new();
    for mut code in 0..total {
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|_| {
                let row = perms[code % perms.len()].clone();
                code /= perms.len();
                row
            })
            .collect();
        if CycleSetTable::verify(&rows).is_ok() {
            let flat: Vec<usize> = rows.concat();
            classes.insert(canonical_flat(&flat, n).0);
        }
    }
    classes.iter().map(|flat| table_from_flat(flat, n)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanKind {
    Frobenius,
    Ramirez,
    Rav,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeCount {
    pub size: usize,
    pub cycle_sets: usize,
    pub examined: usize,
    pub flagged: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum HitDetail {
    Frobenius { kernel_order: usize, complement_order: usize },
    Ramirez { verdict: RamirezVerdict, group_order: usize, pi1_order: usize },
    /// A 1-based point whose `σ` has a cycle of length `> 1` coprime to `|X|`.
    Rav { point: usize, cycle_length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanHit {
    pub size: usize,
    pub instance: CycleSetJson,
    pub detail: HitDetail,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanReport {
    pub kind: ScanKind,
    pub min_size: usize,
    pub max_size: usize,
    pub counts: Vec<SizeCount>,
    pub hits: Vec<ScanHit>,
    /// Set when a hit contradicts a theorem.
    pub violation: bool,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl ScanReport {
    /// Re-parses every hit and recomputes its defining predicate.
    pub fn reverify(&self) -> bool {
        self.hits.iter().all(|hit| {
            let Ok(cs) = hit.instance.to_cycle_set() else {
                return false;
            };
            cs.size() == hit.size && examine(self.kind, &cs).as_ref() == Some(&hit.detail)
        })
    }
}

fn examine(kind: ScanKind, cs: &CycleSetTable) -> Option<HitDetail> {
    match kind {
        ScanKind::Frobenius => {
            let g = permutation_group(cs).expect("G(X) fits under the cap for n ≤ 8");
            let c = classify_action(&g);
            (c.kind == ActionKind::Frobenius).then(|| {
                let r = c.report();
                HitDetail::Frobenius {
                    kernel_order: r.kernel_order.unwrap_or(0),
                    complement_order: r.complement_order.unwrap_or(0),
                }
            })
        }
        ScanKind::Ramirez => {
            let verdict = ramirez_check(cs).expect("G(X) fits under the cap for n ≤ 8");
            (verdict.flag != RamirezFlag::NotApplicable).then(|| {
                let group_order = permutation_group(cs).expect("checked above").order();
                let pi1_order = fundamental_group(cs, 0).expect("indecomposable").order();
                HitDetail::Ramirez { verdict, group_order, pi1_order }
            })
        }
        ScanKind::Rav => {
            let n = cs.size();
            if !cs.is_indecomposable() {
                return None;
            }
            (0..n).find_map(|x| {
                cs.sigma(x)
                    .cycle_lengths()
                    .into_iter()
                    .find(|&len| len > 1 && gcd(len, n) == 1)
                    .map(|cycle_length| HitDetail::Rav { point: x + 1, cycle_length })
            })
        }
    }
}

fn is_violation(detail: &HitDetail) -> bool {
    match detail {
        HitDetail::Frobenius { .. } => true,
        HitDetail::Ramirez { verdict, .. } => verdict.flag == RamirezFlag::OddCaseViolation,
        HitDetail::Rav { .. } => false,
    }
}

/// Runs one scan over every size `1..=n_max`.
pub fn scan(kind: ScanKind, n_max: usize, config: &EnumerationConfig) -> Result<ScanReport, EnumerationError> {
    let start = Instant::now();
    for n in 1..=n_max {
        config.check(n)?;
    }
    let mut counts = Vec::new();
    let mut hits = Vec::new();
    for n in 1..=n_max {
        let all = enumerate_with(n, &EnumerationFilter::all(), config)?;
        let examined: Vec<&CycleSetTable> = all
            .iter()
            .filter(|cs| kind == ScanKind::Frobenius || cs.is_indecomposable())
            .collect();
        let found: Vec<ScanHit> = config.install(|| {
            examined
                .par_iter()
                .filter_map(|cs| {
                    examine(kind, cs).map(|detail| ScanHit {
                        size: n,
                        instance: CycleSetJson::from(*cs),
                        detail,
                    })
                })
                .collect()
        })?;
        counts.push(SizeCount {
            size: n,
            cycle_sets: all.len(),
            examined: examined.len(),
            flagged: found.len(),
        });
        hits.extend(found);
    }
    let violation = hits.iter().any(|h| is_violation(&h.detail));
    Ok(ScanReport {
        kind,
        min_size: 1,
        max_size: n_max,
        counts,
        hits,
        violation,
        elapsed: start.elapsed(),
    })
}

/// Every cycle set of size `≤ n_max` checked for a Frobenius action of
/// `G(X)`; any hit is a violation.
pub fn frobenius_scan(n_max: usize, config: &EnumerationConfig) -> Result<ScanReport, EnumerationError> {
    scan(ScanKind::Frobenius, n_max, config)
}

/// Every indecomposable instance with dihedral `G(X)`; an odd-`m` instance
/// with `|X| ≠ 2m` is a violation.
pub fn ramirez_scan(n_max: usize, config: &EnumerationConfig) -> Result<ScanReport, EnumerationError> {
    scan(ScanKind::Ramirez, n_max, config)
}

/// Indecomposable instances where some `σ(x)` has a cycle of length `> 1`
/// coprime to `|X|`; reported only.
pub fn rav_scan(n_max: usize, config: &EnumerationConfig) -> Result<ScanReport, EnumerationError> {
    scan(ScanKind::Rav, n_max, config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::{is_canonical, is_isomorphic};
    use crate::cycleset::fixtures::dihedral4;

    fn row(images: &[u8]) -> Row {
        let mut r: Row = std::array::from_fn(|i| i as u8);
        r[..images.len()].copy_from_slice(images);
        r
    }

    #[test]
    fn least_conjugates() {
        // (0 2)(1 3 4) at 0: 2-cycle first, then the 3-cycle
        assert_eq!(min_conjugate(&row(&[2, 3, 0, 4, 1]), 5, 0), row(&[1, 0, 3, 4, 2]));
        // at a fixed point with other cycles: fixed points come before longer cycles
        assert_eq!(min_conjugate(&row(&[1, 0, 2, 3]), 4, 3), row(&[0, 1, 3, 2]));
        assert_eq!(min_conjugate(&row(&[0, 1, 2]), 3, 1), row(&[0, 1, 2]));
    }

    #[test]
    fn least_conjugate_matches_brute_force() {
        let n = 5;
        let perms = all_perms(n);
        for p in perms.iter().step_by(7) {
            for k in 0..n {
                let best = perms
                    .iter()
                    .filter(|pi| pi[k] == 0)
                    .map(|pi| compose(&compose(pi, p), &invert(pi)))
                    .min()
                    .unwrap();
                assert_eq!(min_conjugate(p, n, k), best);
            }
        }
    }

    #[test]
    fn small_counts_match_naive() {
        for n in 1..=3 {
            let fast = enumerate(n, &EnumerationFilter::all()).unwrap();
            assert_eq!(fast, naive_classes(n), "n = {n}");
        }
        assert_eq!(enumerate(2, &EnumerationFilter::all()).unwrap().len(), 2);
    }

    #[test]
    fn output_is_canonical_and_distinct() {
        let all = enumerate(4, &EnumerationFilter::all()).unwrap();
        assert!(all.iter().all(is_canonical));
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                assert!(is_isomorphic(a, b).is_none());
            }
        }
        assert!(all.iter().any(|cs| is_isomorphic(cs, &dihedral4()).is_some()));
    }

    #[test]
    fn filters() {
        let ind = enumerate(4, &EnumerationFilter::indecomposable()).unwrap();
        assert!(ind.iter().all(CycleSetTable::is_indecomposable));
        let dihedral =
            enumerate(4, &EnumerationFilter::indecomposable().with(Predicate::Dihedral)).unwrap();
        // two classes at size 4 have G(X) ≅ D₈
        assert_eq!(dihedral.len(), 2);
        assert_eq!(dihedral.iter().filter(|cs| is_isomorphic(cs, &dihedral4()).is_some()).count(), 1);
        assert_eq!("irretractable".parse::<Predicate>(), Ok(Predicate::Irretractable));
        assert!("shiny".parse::<Predicate>().is_err());
    }

    #[test]
    fn size_bounds() {
        let err = enumerate(0, &EnumerationFilter::all()).unwrap_err();
        assert_eq!(err, EnumerationError::SizeOutOfRange { n: 0, max: 8 });
        let config = EnumerationConfig { max_size: 5, jobs: None };
        assert!(enumerate_with(6, &EnumerationFilter::all(), &config).is_err());
        assert!(frobenius_scan(6, &config).is_err());
    }

    #[test]
    fn jobs_do_not_change_output() {
        let one = EnumerationConfig { max_size: 8, jobs: Some(1) };
        let four = EnumerationConfig { max_size: 8, jobs: Some(4) };
        assert_eq!(
            enumerate_with(5, &EnumerationFilter::all(), &one).unwrap(),
            enumerate_with(5, &EnumerationFilter::all(), &four).unwrap()
        );
    }

    #[test]
    fn ramirez_scan_finds_the_four_point_class() {
        let report = ramirez_scan(4, &EnumerationConfig::default()).unwrap();
        assert!(!report.violation);
        assert!(report.reverify());
        assert!(report.hits.iter().any(|h| matches!(
            &h.detail,
            HitDetail::Ramirez { verdict, .. } if verdict.flag == RamirezFlag::CounterexampleEvenCase
                && verdict.dihedral_m == Some(4) && h.size == 4
        )));
    }

    #[test]
    fn rav_excludes_decomposables() {
        let report = rav_scan(4, &EnumerationConfig::default()).unwrap();
        assert!(report.reverify());
        for hit in &report.hits {
            assert!(hit.instance.to_cycle_set().unwrap().is_indecomposable());
        }
        // the four-point class has cycle lengths {1, 2, 4} only
        let line = CycleSetJson::from(&crate::canonical::canonical_form(&dihedral4()));
        assert!(report.hits.iter().all(|h| h.instance != line));
    }
}
