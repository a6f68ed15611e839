//! Classification of permutation actions and Frobenius kernel/complement
//! checks.
//!
//! A transitive action is Frobenius when every non-identity element fixes at
//! most one point and some non-identity element fixes exactly one. Regular
//! actions (no non-identity element fixes anything) are kept separate.

use std::collections::HashSet;

use serde::Serialize;
use thiserror::Error;

use crate::perm::{gcd, Permutation};
use crate::permgroup::{PermGroup, DEFAULT_CAP};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrobeniusError {
    #[error("action is not Frobenius")]
    NotFrobenius,
    #[error("Frobenius structure violated: {0}")]
    StructureViolation(String),
    #[error("dihedral action needs m >= 3, got {0}")]
    DegreeTooSmall(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ActionKind {
    Intransitive,
    Regular,
    Frobenius,
    #[serde(rename = "Transitive-Other")]
    TransitiveOther,
}

impl std::fmt::Display for ActionKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ActionKind::Intransitive => "Intransitive",
            ActionKind::Regular => "Regular",
            ActionKind::Frobenius => "Frobenius",
            ActionKind::TransitiveOther => "Transitive-Other",
        })
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    /// A non-identity element with at least one fixed point.
    pub fixing: Option<Permutation>,
    /// A non-identity fixed-point-free element.
    pub free: Option<Permutation>,
}

#[derive(Debug, Clone)]
pub struct ActionClassification {
    pub kind: ActionKind,
    /// Fixed-point-free elements together with the identity (Frobenius only).
    pub kernel: Option<Vec<Permutation>>,
    /// Stabilizer of point 0 (Frobenius only).
    pub complement: Option<PermGroup>,
    pub witnesses: Witnesses,
}

/// The JSON view of a classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ActionReport {
    pub kind: ActionKind,
    pub kernel_order: Option<usize>,
    pub complement_order: Option<usize>,
    pub witnesses: Witnesses,
}

impl ActionClassification {
    pub fn report(&self) -> ActionReport {
        ActionReport {
            kind: self.kind,
            kernel_order: self.kernel.as_ref().map(Vec::len),
            complement_order: self.complement.as_ref().map(PermGroup::order),
            witnesses: self.witnesses.clone(),
        }
    }
}

pub fn classify_action(g: &PermGroup) -> ActionClassification {
    let unclassified = |kind| ActionClassification {
        kind,
        kernel: None,
        complement: None,
        witnesses: Witnesses::default(),
    };
    if g.degree() <= 1 {
        return unclassified(ActionKind::Regular);
    }
    if !g.is_transitive() {
        return unclassified(ActionKind::Intransitive);
    }
    let mut witnesses = Witnesses::default();
    let mut max_fixed = 0;
    for h in g.elements().iter().filter(|h| !h.is_identity()) {
        let fixed = h.fixed_point_count();
        max_fixed = max_fixed.max(fixed);
        if fixed == 0 && witnesses.free.is_none() {
            witnesses.free = Some(h.clone());
        }
        if fixed > 0 && witnesses.fixing.as_ref().map_or(true, |w| fixed < w.fixed_point_count()) {
            witnesses.fixing = Some(h.clone());
        }
    }
    let kind = match max_fixed {
        0 => ActionKind::Regular,
        1 => ActionKind::Frobenius,
        _ => ActionKind::TransitiveOther,
    };
    let (kernel, complement) = if kind == ActionKind::Frobenius {
        let kernel = g
            .elements()
            .iter()
            .filter(|h| h.is_identity() || h.fixed_point_count() == 0)
            .cloned()
            .collect();
        (Some(kernel), Some(g.stabilizer(0)))
    } else {
        (None, None)
    };
    ActionClassification { kind, kernel, complement, witnesses }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusReport {
    pub group_order: usize,
    pub kernel_order: usize,
    pub complement_order: usize,
}

/// Checks the conclusions of Frobenius' theorem on a concrete action: the
/// kernel is a normal subgroup, `G = K ⋊ H`, `|H|` divides `|K| − 1` and
/// `gcd(|H|, |K|) = 1`.
pub fn verify_frobenius_structure(
    c: &ActionClassification,
    g: &PermGroup,
) -> Result<FrobeniusReport, FrobeniusError> {
    let (Some(kernel), Some(complement)) = (&c.kernel, &c.complement) else {
        return Err(FrobeniusError::NotFrobenius);
    };
    if c.kind != ActionKind::Frobenius {
        return Err(FrobeniusError::NotFrobenius);
    }
    let violation = |msg: String| Err(FrobeniusError::StructureViolation(msg));
    if !g.is_subgroup(kernel) {
        return violation("kernel is not a subgroup".into());
    }
    if g.is_normal(kernel) != Ok(true) {
        return violation("kernel is not normal".into());
    }
    let k = kernel.len();
    let h = complement.order();
    let kernel_set: HashSet<&Permutation> = kernel.iter().collect();
    let meet = complement.elements().iter().filter(|x| kernel_set.contains(x)).count();
    if meet != 1 {
        return violation(format!("kernel and complement share {meet} elements"));
    }
    if k * h != g.order() {
        return violation(format!("|K|·|H| = {k}·{h} ≠ |G| = {}", g.order()));
    }
    if (k - 1) % h != 0 {
        return violation(format!("|H| = {h} does not divide |K| − 1 = {}", k - 1));
    }
    if gcd(k, h) != 1 {
        return violation(format!("gcd(|H|, |K|) = {} ≠ 1", gcd(k, h)));
    }
    Ok(FrobeniusReport { group_order: g.order(), kernel_order: k, complement_order: h })
}

/// `D₂ₘ` acting on the vertices of an `m`-gon: generated by the rotation
/// `x ↦ x + 1` and the reflection `x ↦ −x (mod m)`.
pub fn dihedral_natural_action(m: usize) -> Result<PermGroup, FrobeniusError> {
    if m < 3 {
        return Err(FrobeniusError::DegreeTooSmall(m));
    }
    let rotation = Permutation::from_images((0..m).map(|x| (x + 1) % m).collect())
        .expect("rotation");
    let reflection = Permutation::from_images((0..m).map(|x| (m - x) % m).collect())
        .expect("reflection");
    Ok(PermGroup::close(&[rotation, reflection], m, DEFAULT_CAP).expect("order 2m"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycleset::fixtures::dihedral4;

    fn rotation_subgroup(m: usize) -> Vec<Permutation> {
        let r = Permutation::from_images((0..m).map(|x| (x + 1) % m).collect()).unwrap();
        let mut rots: Vec<Permutation> = (0..m).map(|k| r.pow(k)).collect();
        rots.sort();
        rots
    }

    #[test]
    fn d6_is_frobenius() {
        let g = dihedral_natural_action(3).unwrap();
        let c = classify_action(&g);
        assert_eq!(c.kind, ActionKind::Frobenius);
        assert_eq!(c.kernel.as_deref(), Some(rotation_subgroup(3).as_slice()));
        let report = verify_frobenius_structure(&c, &g).unwrap();
        assert_eq!((report.kernel_order, report.complement_order), (3, 2));
        assert_eq!(c.witnesses.fixing.as_ref().unwrap().fixed_point_count(), 1);
        assert_eq!(c.witnesses.free.as_ref().unwrap().fixed_point_count(), 0);
    }

    #[test]
    fn odd_dihedral_structure() {
        for m in [5, 7] {
            let g = dihedral_natural_action(m).unwrap();
            let c = classify_action(&g);
            let report = verify_frobenius_structure(&c, &g).unwrap();
            assert_eq!(report.kernel_order, m);
            assert_eq!(report.complement_order, 2);
            assert_eq!((m - 1) % 2, 0);
        }
    }

    #[test]
    fn even_dihedral_is_not_frobenius() {
        for m in [4, 6, 8] {
            let c = classify_action(&dihedral_natural_action(m).unwrap());
            assert_eq!(c.kind, ActionKind::TransitiveOther, "m = {m}");
            assert!(verify_frobenius_structure(&c, &dihedral_natural_action(m).unwrap()).is_err());
        }
        assert_eq!(dihedral_natural_action(2).unwrap_err(), FrobeniusError::DegreeTooSmall(2));
    }

    #[test]
    fn regular_and_intransitive() {
        let z4 = PermGroup::close(&[Permutation::from_images(vec![1, 2, 3, 0]).unwrap()], 4, 100)
            .unwrap();
        assert_eq!(classify_action(&z4).kind, ActionKind::Regular);
        assert_eq!(classify_action(&PermGroup::trivial(3)).kind, ActionKind::Intransitive);
        assert_eq!(classify_action(&PermGroup::trivial(1)).kind, ActionKind::Regular);
    }

    #[test]
    fn dihedral4_permutation_group_is_transitive_other() {
        let cs = dihedral4();
        let g = PermGroup::close(cs.rows(), 4, DEFAULT_CAP).unwrap();
        let c = classify_action(&g);
        assert_eq!(c.kind, ActionKind::TransitiveOther);
        // σ(1) = (2,4) fixes two points
        assert_eq!(cs.sigma(0).fixed_point_count(), 2);
    }

    #[test]
    fn classification_is_label_invariant() {
        let relabel = Permutation::from_images(vec![2, 0, 4, 1, 3]).unwrap();
        let g = dihedral_natural_action(5).unwrap();
        let conj: Vec<Permutation> = g.generators().iter().map(|h| h.conjugate_by(&relabel)).collect();
        let g2 = PermGroup::close(&conj, 5, DEFAULT_CAP).unwrap();
        assert_eq!(classify_action(&g2).kind, classify_action(&g).kind);
    }
}
