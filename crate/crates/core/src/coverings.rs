//! Quandle coverings and lifting of biquandle structures along them.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::automorphisms::{biquandle_aut, quandle_aut};
use crate::error::{domain, Result};
use crate::perm::Permutation;
use crate::quandle::{conjugation_quandle, FiniteQuandle};
use crate::report::AxiomReport;
use crate::structures::{biquandle_from_structure, BiquandleStructure};

/// Checks that `p : qt → q` is a surjective homomorphism with
/// `p(x) = p(y) ⇒ S_x = S_y`. Axiom ids: `map` (witness: offending index, or
/// the length of `p` if it is wrong), `surjective` `[y]`, `hom` `[x, y]`,
/// `collapse` `[x, y]`.
pub fn is_quandle_covering(p: &[usize], qt: &FiniteQuandle, q: &FiniteQuandle) -> AxiomReport {
    let mut c = AxiomReport::collector(false);
    if p.len() != qt.n() {
        c.record("map", vec![p.len()]);
        return c.finish();
    }
    if let Some(x) = p.iter().position(|&y| y >= q.n()) {
        c.record("map", vec![x]);
        return c.finish();
    }
    let hit: BTreeSet<usize> = p.iter().copied().collect();
    if let Some(y) = (0..q.n()).find(|y| !hit.contains(y)) {
        c.record("surjective", vec![y]);
    }
    let n = qt.n();
    'hom: for x in 0..n {
        for y in 0..n {
            if p[qt.op(x, y)] != q.op(p[x], p[y]) {
                c.record("hom", vec![x, y]);
                break 'hom;
            }
        }
    }
    'collapse: for x in 0..n {
        for y in x + 1..n {
            if p[x] == p[y] && (0..n).any(|z| qt.op(z, x) != qt.op(z, y)) {
                c.record("collapse", vec![x, y]);
                break 'collapse;
            }
        }
    }
    c.finish()
}

/// The quandle of distinct right translations under `f * g = g f g⁻¹`, in
/// order of first occurrence, and the projection `x ↦ [S_x]`.
#[allow(non_snake_case)]
pub fn image_quandle_SQ(q: &FiniteQuandle) -> (FiniteQuandle, Vec<usize>) {
    let mut perms: Vec<Permutation> = Vec::new();
    let mut proj = Vec::with_capacity(q.n());
    for s in q.translations() {
        let i = match perms.iter().position(|t| *t == s) {
            Some(i) => i,
            None => {
                perms.push(s);
                perms.len() - 1
            }
        };
        proj.push(i);
    }
    let sq = conjugation_quandle(&perms).expect("translations are closed under conjugation");
    (sq, proj)
}

fn require_covering(p: &[usize], qt: &FiniteQuandle, q: &FiniteQuandle) -> Result<()> {
    let r = is_quandle_covering(p, qt, q);
    if !r.passed {
        return domain(format!("not a covering: {r}"));
    }
    Ok(())
}

/// Searches for a fiber-constant family `α` on `qt` with `p α_x = β_{p(x)} p`
/// satisfying both structure conditions; the first one in lexicographic order
/// of the sorted candidate lists. `None` means none was found among
/// fiber-constant families, which by itself says nothing about other lifts.
pub fn lift_structure_search(
    p: &[usize],
    qt: &FiniteQuandle,
    q: &FiniteQuandle,
    a: &BiquandleStructure,
) -> Result<Option<BiquandleStructure>> {
    require_covering(p, qt, q)?;
    if a.base() != q {
        return domain("structure is not on the covered quandle");
    }
    let aut = quandle_aut(qt);
    let n = q.n();
    let cands: Vec<Vec<&Permutation>> = (0..n)
        .map(|y| {
            let b = a.beta(y);
            aut.elements().iter().filter(|al| (0..qt.n()).all(|x| p[al.apply(x)] == b.apply(p[x]))).collect()
        })
        .collect();
    let mut chosen: Vec<&Permutation> = Vec::with_capacity(n);
    if !lift_extend(p, qt, q, a, &cands, &mut chosen) {
        return Ok(None);
    }
    let alphas: Vec<Permutation> = (0..qt.n()).map(|x| chosen[p[x]].clone()).collect();
    let lifted = BiquandleStructure::new(qt.clone(), alphas).expect("search checked both conditions");
    debug_assert!((0..qt.n()).all(|x| (0..qt.n()).all(|y| p[x] != p[y] || lifted.beta(x) == lifted.beta(y))));
    Ok(Some(lifted))
}

fn lift_extend<'a>(
    p: &[usize],
    qt: &FiniteQuandle,
    q: &FiniteQuandle,
    a: &BiquandleStructure,
    cands: &[Vec<&'a Permutation>],
    chosen: &mut Vec<&'a Permutation>,
) -> bool {
    let k = chosen.len();
    if k == q.n() {
        // y ↦ α_y(y) injective on qt
        let mut seen = BTreeSet::new();
        return (0..qt.n()).all(|y| seen.insert(chosen[p[y]].apply(y)));
    }
    for &al in &cands[k] {
        chosen.push(al);
        if lift_consistent(q, a, chosen) && lift_extend(p, qt, q, a, cands, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Condition 1 for fibers `x, y` whose four relevant fibers are chosen, one
/// of them being the newest. The fibers of `α_y(x * y)` and `α_x(y)` are
/// fixed by the structure downstairs.
fn lift_consistent(q: &FiniteQuandle, a: &BiquandleStructure, chosen: &[&Permutation]) -> bool {
    let k = chosen.len() - 1;
    for x in 0..=k {
        for y in 0..=k {
            let r = a.beta(y).apply(q.op(x, y));
            let s = a.beta(x).apply(y);
            if r > k || s > k || x.max(y).max(r).max(s) != k {
                continue;
            }
            if chosen[r].compose(chosen[y]) != chosen[s].compose(chosen[x]) {
                return false;
            }
        }
    }
    true
}

/// Whether `p` is a homomorphism between the biquandles of the two structures.
pub fn verify_covering_biquandle_hom(p: &[usize], lifted: &BiquandleStructure, a: &BiquandleStructure) -> bool {
    biquandle_from_structure(lifted).is_homomorphism_to(&biquandle_from_structure(a), p)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LiftNormalizer {
    /// Every automorphism of `B` has a lift normalizing `{α_x}`.
    Holds,
    /// Some automorphism has lifts, none of which normalizes `{α_x}`.
    Fails,
    /// Some automorphism of `B` has no lift to `Aut(qt)`.
    Inconclusive,
}

/// For each `φ ∈ Aut(B)`, `B` the biquandle of `a`, looks for `φ̃ ∈ Aut(qt)`
/// with `p φ̃ = φ p` normalizing the lifted family.
pub fn verify_lift_normalizer(
    p: &[usize],
    qt: &FiniteQuandle,
    lifted: &BiquandleStructure,
    a: &BiquandleStructure,
) -> Result<LiftNormalizer> {
    require_covering(p, qt, a.base())?;
    if lifted.base() != qt {
        return domain("lifted structure is not on the covering quandle");
    }
    let family: BTreeSet<&Permutation> = lifted.betas().iter().collect();
    let normalizes = |f: &Permutation| family.iter().all(|al| family.contains(&f.conjugate(al)));
    let aut_qt = quandle_aut(qt);
    let mut result = LiftNormalizer::Holds;
    for phi in biquandle_aut(&biquandle_from_structure(a)).elements() {
        let lifts: Vec<&Permutation> =
            aut_qt.elements().iter().filter(|f| (0..qt.n()).all(|x| p[f.apply(x)] == phi.apply(p[x]))).collect();
        if lifts.is_empty() {
            result = LiftNormalizer::Inconclusive;
        } else if !lifts.iter().any(|f| normalizes(f)) {
            return Ok(LiftNormalizer::Fails);
        }
    }
    Ok(result)
}
