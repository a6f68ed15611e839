#![allow(dead_code)]

use cycleset::axbuilder::{build_ax, check_equivariance, AxError, FreeVector};
use cycleset::brace::FiniteBrace;
use cycleset::covering::{fundamental_group, is_covering, universal_covering};
use cycleset::cycleset::CycleSetTable;
use cycleset::json::parse_cycle_set;

/// The four-point cycle set with `G(X)` dihedral of order 8.
pub const FOUR_POINT: &str = r#"{"n": 4, "sigma": [[1,4,3,2],[2,3,4,1],[4,1,2,3],[3,2,1,4]]}"#;

pub fn four_point() -> CycleSetTable {
    parse_cycle_set(FOUR_POINT).unwrap()
}

/// Linearity, the two action laws, the circle/exponent dictionary and both
/// exponent laws over all triples.
pub fn brace_laws(b: &FiniteBrace) -> Result<(), String> {
    let n = b.order();
    for x in 0..n {
        for y in 0..n {
            let exp = b.sigma(y).inverse().apply(x);
            if b.exponent(x, y) != exp || b.circle(x, y) != b.add(exp, y) {
                return Err(format!("a∘b = aᵇ + b fails at ({x},{y})"));
            }
            for z in 0..n {
                if b.dot(x, b.add(y, z)) != b.add(b.dot(x, y), b.dot(x, z)) {
                    return Err(format!("a·(b+c) = a·b + a·c fails at ({x},{y},{z})"));
                }
                if b.dot(b.add(x, y), z) != b.dot(b.dot(x, y), b.dot(x, z)) {
                    return Err(format!("(a+b)·c = (a·b)·(a·c) fails at ({x},{y},{z})"));
                }
                if b.dot(b.circle(x, y), z) != b.dot(x, b.dot(y, z)) {
                    return Err(format!("(a∘b)·c = a·(b·c) fails at ({x},{y},{z})"));
                }
                if b.exponent(b.add(x, y), z) != b.add(b.exponent(x, z), b.exponent(y, z)) {
                    return Err(format!("(a+b)ᶜ = aᶜ + bᶜ fails at ({x},{y},{z})"));
                }
                if b.exponent(x, b.circle(y, z)) != b.exponent(b.exponent(x, y), z) {
                    return Err(format!("a^(b∘c) = (aᵇ)ᶜ fails at ({x},{y},{z})"));
                }
            }
        }
    }
    Ok(())
}

/// The mutual-action identities on `P ⊕ (sum of the other components)` for
/// every primary component `P`.
pub fn primary_identities(b: &FiniteBrace) -> Result<usize, String> {
    let parts = b.primary_decomposition();
    let mut checked = 0;
    for (p, part) in &parts {
        let others: Vec<usize> = parts
            .iter()
            .filter(|(q, _)| q != p)
            .flat_map(|(_, s)| s.members().to_vec())
            .collect();
        let rest = b.additive_span(&others);
        let report = b.check_prop2(part, &rest).map_err(|e| format!("p = {p}: {e}"))?;
        checked += report.pairs_checked;
    }
    Ok(checked)
}

/// Everything demanded of `A(X)` for one cycle set.
pub fn brace_suite(cs: &CycleSetTable) -> Result<(), String> {
    let ax = build_ax(cs).map_err(|e| e.to_string())?;
    let b = ax.brace();
    FiniteBrace::verify(&b.add_table(), &b.circle_table()).map_err(|e| e.to_string())?;
    brace_laws(b)?;
    check_equivariance(&ax).map_err(|e| e.to_string())?;
    primary_identities(b)?;
    if !b.socle().is_ideal() {
        return Err("socle is not an ideal".into());
    }
    if !b.subset(ax.sigma_map().iter().copied()).is_cycle_base() {
        return Err("σX is not a cycle base".into());
    }
    Ok(())
}

/// Postconditions of the universal covering of an indecomposable cycle set.
pub fn covering_suite(cs: &CycleSetTable) -> Result<(), String> {
    let g_order = cycleset::axbuilder::permutation_group(cs).map_err(|e| e.to_string())?.order();
    let pi1 = fundamental_group(cs, 0).map_err(|e| e.to_string())?;
    if pi1.order() * cs.size() != g_order {
        return Err(format!("|π₁|·|X| = {}·{} ≠ |G(X)| = {g_order}", pi1.order(), cs.size()));
    }
    let uc = universal_covering(cs, 0).map_err(|e| e.to_string())?;
    if uc.covering.size() != g_order {
        return Err("covering size differs from |G(X)|".into());
    }
    if !is_covering(&uc.projection).map_err(|e| e.to_string())? {
        return Err("projection is not a covering".into());
    }
    let upstairs = fundamental_group(&uc.covering, 0).map_err(|e| e.to_string())?;
    if upstairs.order() != 1 {
        return Err(format!("π₁ of the covering has order {}", upstairs.order()));
    }
    let again = universal_covering(&uc.covering, 0).map_err(|e| e.to_string())?;
    if !again.projection.is_injective() {
        return Err("covering of the covering is not isomorphic to it".into());
    }
    Ok(())
}

fn e<T>(r: Result<T, AxError>) -> Result<T, String> {
    r.map_err(|err| err.to_string())
}

/// The free-vector laws for one triple.
pub fn free_vector_laws<'a>(a: &FreeVector<'a>, b: &FreeVector<'a>, c: &FreeVector<'a>) -> Result<(), String> {
    fn sum<'a>(x: &FreeVector<'a>, y: &FreeVector<'_>) -> Result<FreeVector<'a>, String> {
        e(x.add(y))
    }
    if e(a.dot(&sum(b, c)?))? != sum(&e(a.dot(b))?, &e(a.dot(c))?)? {
        return Err("a·(b+c) = a·b + a·c".into());
    }
    if e(sum(a, b)?.dot(c))? != e(e(a.dot(b))?.dot(&e(a.dot(c))?))? {
        return Err("(a+b)·c = (a·b)·(a·c)".into());
    }
    let ab = e(a.circle(b))?;
    if ab != sum(&e(a.exp(b))?, b)? || ab.perm() != a.perm().compose(&b.perm()) {
        return Err("a∘b = aᵇ + b".into());
    }
    if e(ab.dot(c))? != e(a.dot(&e(b.dot(c))?))? {
        return Err("(a∘b)·c = a·(b·c)".into());
    }
    if e(sum(a, b)?.exp(c))? != sum(&e(a.exp(c))?, &e(b.exp(c))?)? {
        return Err("(a+b)ᶜ = aᶜ + bᶜ".into());
    }
    if e(a.exp(&e(b.circle(c))?))? != e(e(a.exp(b))?.exp(c))? {
        return Err("a^(b∘c) = (aᵇ)ᶜ".into());
    }
    let b_a = e(b.exp(a))?;
    let left = e(b_a.dot(a))?;
    if e(b.circle(a))? != e(left.circle(&b_a))? {
        return Err("b∘a = ᵇa∘bᵃ".into());
    }
    Ok(())
}
