//! Fundamental groups and universal coverings of indecomposable cycle sets.
//!
//! For an indecomposable `X` with base point `x`, the universal covering
//! lives on `G(X)` with `g·h := σ(g(x)) ∘ h` and projection `p(g) = g(x)`.
//! The cycle-set law for this operation follows from
//! `σ(a·b)σ(a) = σ(b·a)σ(b)` in `G(X)`, but the construction is still checked
//! against every postcondition before it is returned.

use serde::Serialize;
use thiserror::Error;

use crate::axbuilder::{induced_af, permutation_group, AxError};
use crate::cycleset::{CycleSetMorphism, CycleSetTable};
use crate::frobenius::{classify_action, ActionKind};
use crate::permgroup::{GroupError, PermGroup, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoveringError {
    #[error("cycle set is decomposable")]
    NotIndecomposable,
    #[error("base point {0} out of range")]
    PointOutOfRange(usize),
    #[error("morphism is not surjective")]
    NotSurjective,
    #[error("covering verification failed: {0}")]
    VerificationFailure(String),
    #[error(transparent)]
    Ax(#[from] AxError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// The stabilizer of `x` in `G(X)`.
pub fn fundamental_group(cs: &CycleSetTable, x: usize) -> Result<PermGroup, CoveringError> {
    if x >= cs.size() {
        return Err(CoveringError::PointOutOfRange(x));
    }
    let g = permutation_group(cs)?;
    if !g.is_transitive() {
        return Err(CoveringError::NotIndecomposable);
    }
    let pi1 = g.stabilizer(x);
    assert!(
        (0..cs.size()).all(|y| g.stabilizer(y).order() == pi1.order()),
        "point stabilizers of a transitive group are conjugate"
    );
    Ok(pi1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoveringReport {
    /// 0-based; serialized 1-based like every external point.
    #[serde(serialize_with = "one_based")]
    pub base_point: usize,
    pub size: usize,
    pub group_order: usize,
    pub pi1_order: usize,
    /// Whether `G(X)` acts simply transitively on `X`.
    pub is_simply_transitive: bool,
    pub covering_size: usize,
    pub fibre_size: usize,
    pub covering_action: ActionKind,
    pub induced_brace_map_bijective: bool,
    /// Whether the covering's operation agrees with the brace operation of
    /// `A(X)` on `G(X)`; reported, not required.
    pub matches_brace_dot: bool,
}

fn one_based<S: serde::Serializer>(x: &usize, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_u64(*x as u64 + 1)
}

#[derive(Debug, Clone)]
pub struct UniversalCovering {
    pub covering: CycleSetTable,
    pub projection: CycleSetMorphism,
    pub report: CoveringReport,
}

pub fn universal_covering(cs: &CycleSetTable, x: usize) -> Result<UniversalCovering, CoveringError> {
    let pi1 = fundamental_group(cs, x)?;
    let g = permutation_group(cs)?;
    let elements = g.elements();
    let order = elements.len();
    let fail = |msg: String| CoveringError::VerificationFailure(msg);

    let table: Vec<Vec<usize>> = elements
        .iter()
        .map(|a| {
            let left = cs.sigma(a.apply(x));
            elements
                .iter()
                .map(|b| g.index_of(&left.compose(b)).expect("G(X) is closed"))
                .collect()
        })
        .collect();
    let covering = CycleSetTable::verify(&table).map_err(|e| fail(e.to_string()))?;
    let map: Vec<usize> = elements.iter().map(|a| a.apply(x)).collect();
    let projection = CycleSetMorphism::new(covering.clone(), cs.clone(), map)
        .map_err(|e| fail(format!("projection: {e}")))?;
    if !projection.is_surjective() {
        return Err(fail("projection is not surjective".into()));
    }
    let fibres = projection.fibre_sizes();
    if fibres.iter().any(|&s| s != pi1.order()) {
        return Err(fail(format!("fibre sizes {fibres:?} differ from |π₁| = {}", pi1.order())));
    }
    let upstairs = PermGroup::close(covering.rows(), order, DEFAULT_CAP)?;
    let covering_action = classify_action(&upstairs).kind;
    if covering_action != ActionKind::Regular {
        return Err(fail(format!("covering group acts as {covering_action}, not regularly")));
    }
    let af = induced_af(&projection)?;
    if !af.is_bijective() {
        return Err(fail("induced brace map is not bijective".into()));
    }

    let ax = &af.target;
    let as_element = |i: usize| ax.element_of_perm(&elements[i]).expect("A(X)∘ = G(X)");
    let matches_brace_dot = (0..order).all(|a| {
        (0..order).all(|b| as_element(covering.op(a, b)) == ax.brace().dot(as_element(a), as_element(b)))
    });

    let report = CoveringReport {
        base_point: x,
        size: cs.size(),
        group_order: order,
        pi1_order: pi1.order(),
        is_simply_transitive: pi1.order() == 1,
        covering_size: covering.size(),
        fibre_size: pi1.order(),
        covering_action,
        induced_brace_map_bijective: true,
        matches_brace_dot,
    };
    Ok(UniversalCovering { covering, projection, report })
}

/// A surjective morphism is a covering when the induced brace map is
/// bijective.
pub fn is_covering(f: &CycleSetMorphism) -> Result<bool, CoveringError> {
    if !f.is_surjective() {
        return Err(CoveringError::NotSurjective);
    }
    Ok(induced_af(f)?.is_bijective())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RamirezFlag {
    /// Decomposable, or `G(X)` is not dihedral of order `2m ≥ 6`.
    NotApplicable,
    /// `m` odd and `|X| = 2m`.
    ConjectureWitness,
    /// `m` even and `|X| ≠ 2m`.
    CounterexampleEvenCase,
    /// `m` even and `|X| = 2m`.
    EvenCaseConsistent,
    /// `m` odd and `|X| ≠ 2m`; impossible for a cycle set.
    OddCaseViolation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RamirezVerdict {
    pub flag: RamirezFlag,
    pub size: usize,
    pub dihedral_m: Option<usize>,
    pub size_is_2m: Option<bool>,
}

/// Tests whether an indecomposable cycle set with dihedral `G(X) ≅ D₂ₘ` has
/// `|X| = 2m`.
pub fn ramirez_check(cs: &CycleSetTable) -> Result<RamirezVerdict, CoveringError> {
    let size = cs.size();
    let not_applicable = RamirezVerdict {
        flag: RamirezFlag::NotApplicable,
        size,
        dihedral_m: None,
        size_is_2m: None,
    };
    if !cs.is_indecomposable() {
        return Ok(not_applicable);
    }
    let Some(m) = permutation_group(cs)?.recognize_dihedral() else {
        return Ok(not_applicable);
    };
    let size_is_2m = size == 2 * m;
    let flag = match (m % 2 == 1, size_is_2m) {
        (true, true) => RamirezFlag::ConjectureWitness,
        (true, false) => RamirezFlag::OddCaseViolation,
        (false, true) => RamirezFlag::EvenCaseConsistent,
        (false, false) => RamirezFlag::CounterexampleEvenCase,
    };
    Ok(RamirezVerdict { flag, size, dihedral_m: Some(m), size_is_2m: Some(size_is_2m) })
}

/// Base-point independence of `|π₁(X, x)|`; returns the common order.
pub fn pi1_order_all_points(cs: &CycleSetTable) -> Result<usize, CoveringError> {
    let orders = (0..cs.size())
        .map(|x| fundamental_group(cs, x).map(|g| g.order()))
        .collect::<Result<Vec<_>, _>>()?;
    debug_assert!(orders.windows(2).all(|w| w[0] == w[1]));
    Ok(orders[0])
}
