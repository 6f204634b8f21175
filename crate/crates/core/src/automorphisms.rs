//! Automorphism groups and checks of the automorphism theorems for the
//! constant, generalized dihedral/Alexander, union, product and holomorph
//! biquandles.
//!
//! "Equal groups" always means equal element sets inside the same symmetric
//! group.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::biquandle::{associated_quandle, FiniteBiquandle};
use crate::combinators::{
    check_conj_homomorphism, disjoint_union, holomorph_biquandle, require_automorphism, semidirect_biquandle,
    union_biquandle_constant,
};
use crate::constructions::{gen_alexander_biquandle, gen_dihedral_biquandle, takasaki};
use crate::error::{domain, Result};
use crate::groups::{automorphism_group, commute, fixed_points, is_fixed_point_free, FiniteGroup, GroupAutomorphism};
use crate::perm::{Permutation, PermutationGroup};
use crate::quandle::{is_connected, is_faithful, orbits, FiniteQuandle};
use crate::search::{isomorphisms, Algebra};
use crate::structures::{biquandle_from_structure, constant_structure, structure_of_biquandle};

pub fn quandle_aut(q: &FiniteQuandle) -> PermutationGroup {
    let ops = [q.flat()];
    let alg = Algebra { n: q.n(), ops: &ops };
    PermutationGroup::from_elements(q.n(), isomorphisms(alg, alg, usize::MAX)).expect("Aut(Q) is a group")
}

pub fn biquandle_aut(b: &FiniteBiquandle) -> PermutationGroup {
    let ops = b.flat_tables();
    let alg = Algebra { n: b.n(), ops: &ops };
    PermutationGroup::from_elements(b.n(), isomorphisms(alg, alg, usize::MAX)).expect("Aut(B) is a group")
}

/// An isomorphism `a → b`, if one exists.
pub fn quandle_isomorphism(a: &FiniteQuandle, b: &FiniteQuandle) -> Option<Permutation> {
    let (oa, ob) = ([a.flat()], [b.flat()]);
    isomorphisms(Algebra { n: a.n(), ops: &oa }, Algebra { n: b.n(), ops: &ob }, 1).pop()
}

/// An isomorphism `a → b` preserving both operations, if one exists.
pub fn biquandle_isomorphism(a: &FiniteBiquandle, b: &FiniteBiquandle) -> Option<Permutation> {
    let (oa, ob) = (a.flat_tables(), b.flat_tables());
    isomorphisms(Algebra { n: a.n(), ops: &oa }, Algebra { n: b.n(), ops: &ob }, 1).pop()
}

pub fn centralizer(g: &PermutationGroup, f: &Permutation) -> Result<PermutationGroup> {
    g.centralizer(f)
}

pub fn normalizer_of_family(g: &PermutationGroup, betas: &[Permutation]) -> PermutationGroup {
    g.normalizer_of_family(betas)
}

/// Whether every automorphism of `B` is one of `𝒬(B)`.
pub fn aut_contained_in_associated(b: &FiniteBiquandle) -> bool {
    let q = associated_quandle(b);
    biquandle_aut(b).elements().iter().all(|f| q.is_automorphism(f))
}

/// `Aut(B) = C_{Aut(Q)}(f)` for the constant structure `f` on `Q`.
pub fn verify_constant_structure_aut(q: &FiniteQuandle, f: &Permutation) -> Result<bool> {
    let b = biquandle_from_structure(&constant_structure(q, f)?);
    let c = quandle_aut(q).centralizer(f)?;
    Ok(biquandle_aut(&b).elements() == c.elements())
}

/// Every element of `C_{Aut(T(G))}(φ)` preserves both tables of `B(G, φ)`.
pub fn verify_gen_dihedral_containment(g: &FiniteGroup, phi: &GroupAutomorphism) -> Result<bool> {
    if !g.is_abelian() {
        return domain("G must be abelian");
    }
    if g.order().is_multiple_of(2) {
        return domain("G must have odd order");
    }
    GroupAutomorphism::new(g, phi.perm().images().to_vec())?;
    let t = takasaki(g)?;
    let c = quandle_aut(&t).centralizer(phi.perm())?;
    let b = gen_dihedral_biquandle(g, phi)?;
    Ok(c.elements().iter().all(|f| b.is_automorphism(f)))
}

/// Outcome of comparing `Aut(A_{ψ,φ}(G))` with `Fix(ψ) ⋊ C_{Aut(G)}(φ, ψ)`.
#[derive(Clone, Debug, Serialize)]
pub struct GenAlexanderReport {
    pub aut_order: usize,
    pub fix_order: usize,
    pub centralizer_order: usize,
    /// Brute-force group equals `{x ↦ t α(x)}` as a set.
    pub sets_equal: bool,
    /// Translations by `Fix(ψ)` form a normal subgroup.
    pub translations_normal: bool,
    /// Translations meet `C(φ, ψ)` only in the identity.
    pub trivial_intersection: bool,
    pub holds: bool,
}

pub fn verify_gen_alexander_aut(
    g: &FiniteGroup,
    phi: &GroupAutomorphism,
    psi: &GroupAutomorphism,
) -> Result<GenAlexanderReport> {
    if !g.is_abelian() {
        return domain("G must be abelian");
    }
    if !commute(phi, psi) {
        return domain("φ and ψ must commute");
    }
    let q = psi.inverse().compose(phi);
    if !is_fixed_point_free(g, &q) {
        return domain("ψ⁻¹φ is not fixed-point-free");
    }
    let b = gen_alexander_biquandle(g, phi, psi)?;
    let aut = biquandle_aut(&b);
    let fix = fixed_points(psi);
    let cent: Vec<GroupAutomorphism> =
        automorphism_group(g).into_iter().filter(|a| commute(a, phi) && commute(a, psi)).collect();
    let n = g.order();
    let translation = |t: usize| Permutation::from_vec_unchecked((0..n).map(|x| g.mul(t, x)).collect());
    let translations: Vec<Permutation> = fix.iter().map(|&t| translation(t)).collect();
    let mut predicted: Vec<Permutation> = Vec::new();
    for tr in &translations {
        for a in &cent {
            predicted.push(tr.compose(a.perm()));
        }
    }
    predicted.sort();
    predicted.dedup();
    let sets_equal = predicted.as_slice() == aut.elements();
    let tr_set: BTreeSet<&Permutation> = translations.iter().collect();
    let translations_normal =
        aut.elements().iter().all(|h| translations.iter().all(|t| tr_set.contains(&h.conjugate(t))));
    let trivial_intersection = cent.iter().filter(|a| tr_set.contains(a.perm())).count() == 1;
    let holds = sets_equal && translations_normal && trivial_intersection && aut.order() == fix.len() * cent.len();
    Ok(GenAlexanderReport {
        aut_order: aut.order(),
        fix_order: fix.len(),
        centralizer_order: cent.len(),
        sets_equal,
        translations_normal,
        trivial_intersection,
        holds,
    })
}

/// Outcome of comparing `Aut(Q1 ⊔ Q2)` with `Aut(Q1) × Aut(Q2)`, extended by
/// the swap when the parts are isomorphic.
#[derive(Clone, Debug)]
pub struct UnionAutReport {
    pub group: PermutationGroup,
    pub isomorphic: bool,
    pub predicted_order: usize,
    pub swap_in_group: bool,
    pub holds: bool,
}

fn union_map(f1: &Permutation, f2: &Permutation) -> Permutation {
    let n1 = f1.degree();
    let img = (0..n1).map(|x| f1.apply(x)).chain((0..f2.degree()).map(|y| f2.apply(y) + n1)).collect();
    Permutation::from_vec_unchecked(img)
}

/// `ι`: `x ↦ α(x)` on `Q1` and `y ↦ α⁻¹(y)` on `Q2`.
fn swap_map(alpha: &Permutation) -> Permutation {
    let n = alpha.degree();
    let inv = alpha.inverse();
    let img = (0..n).map(|x| alpha.apply(x) + n).chain((0..n).map(|y| inv.apply(y))).collect();
    Permutation::from_vec_unchecked(img)
}

pub fn union_quandle_aut(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Result<UnionAutReport> {
    if !is_connected(q1) || !is_connected(q2) {
        return domain("both quandles must be connected");
    }
    let group = quandle_aut(&disjoint_union(q1, q2));
    let (a1, a2) = (quandle_aut(q1), quandle_aut(q2));
    let mut predicted: Vec<Permutation> = Vec::new();
    for f in a1.elements() {
        for g in a2.elements() {
            predicted.push(union_map(f, g));
        }
    }
    let iso = if q1.n() == q2.n() { quandle_isomorphism(q1, q2) } else { None };
    let mut swap_in_group = true;
    if let Some(alpha) = &iso {
        let iota = swap_map(alpha);
        swap_in_group = group.contains(&iota);
        let base = predicted.clone();
        predicted.extend(base.iter().map(|p| iota.compose(p)));
    }
    predicted.sort();
    predicted.dedup();
    let predicted_order = a1.order() * a2.order() * if iso.is_some() { 2 } else { 1 };
    let holds = swap_in_group && predicted.len() == predicted_order && predicted.as_slice() == group.elements();
    Ok(UnionAutReport { group, isomorphic: iso.is_some(), predicted_order, swap_in_group, holds })
}

/// The three cases of the union-biquandle automorphism theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UnionCase {
    /// `Q1 ≇ Q2`.
    NonIsomorphic,
    /// `Q1 ≅ Q2` via `α` but `f1` and `α⁻¹ f2 α` are not conjugate in `Aut(Q1)`.
    NotConjugate,
    /// `α⁻¹ f2 α = ψ⁻¹ f1 ψ` for some `ψ ∈ Aut(Q1)`.
    Conjugate,
}

impl UnionCase {
    pub fn id(self) -> u8 {
        match self {
            UnionCase::NonIsomorphic => 1,
            UnionCase::NotConjugate => 2,
            UnionCase::Conjugate => 3,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnionBiquandleAutReport {
    pub case: UnionCase,
    pub order: usize,
    pub predicted_order: usize,
    pub holds: bool,
}

/// Compares brute-force `Aut` of the constant union biquandle (with `f1`
/// acting on `Q1` and `f2` on `Q2`) against the predicted group.
pub fn verify_union_biquandle_aut(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    f1: &Permutation,
    f2: &Permutation,
) -> Result<UnionBiquandleAutReport> {
    if !is_connected(q1) || !is_connected(q2) {
        return domain("both quandles must be connected");
    }
    require_automorphism(q1, f1, "f1")?;
    require_automorphism(q2, f2, "f2")?;
    let b = union_biquandle_constant(q1, q2, f1, f2)?;
    let aut = biquandle_aut(&b);
    let (a1, a2) = (quandle_aut(q1), quandle_aut(q2));
    let (c1, c2) = (a1.centralizer(f1)?, a2.centralizer(f2)?);
    let mut predicted: Vec<Permutation> = Vec::new();
    for g1 in c1.elements() {
        for g2 in c2.elements() {
            predicted.push(union_map(g1, g2));
        }
    }
    let iso = if q1.n() == q2.n() { quandle_isomorphism(q1, q2) } else { None };
    let case = match &iso {
        None => UnionCase::NonIsomorphic,
        Some(alpha) => {
            // α⁻¹ f2 α as a map on Q1
            let pulled = alpha.inverse().compose(f2).compose(alpha);
            match a1.elements().iter().find(|psi| psi.inverse().compose(f1).compose(psi) == pulled) {
                None => UnionCase::NotConjugate,
                Some(psi) => {
                    let alpha1 = alpha.compose(&psi.inverse());
                    let iota = swap_map(&alpha1);
                    let base = predicted.clone();
                    predicted.extend(base.iter().map(|p| iota.compose(p)));
                    UnionCase::Conjugate
                }
            }
        }
    };
    predicted.sort();
    predicted.dedup();
    let predicted_order = predicted.len();
    let holds = predicted.as_slice() == aut.elements();
    Ok(UnionBiquandleAutReport { case, order: aut.order(), predicted_order, holds })
}

/// Pairs `(α, β) ∈ Aut(Q1) × Aut(Q2)` with `ψ_{β(f)} = α ψ_f α⁻¹` for all `f`,
/// together with the group they form acting on `Q1 × Q2` by `(x,f) ↦ (α(x), β(f))`.
#[derive(Clone, Debug)]
pub struct AutPsi {
    pub pairs: Vec<(Permutation, Permutation)>,
    pub group: PermutationGroup,
}

fn product_map(a: &Permutation, b: &Permutation) -> Permutation {
    let n2 = b.degree();
    let img = (0..a.degree() * n2).map(|p| a.apply(p / n2) * n2 + b.apply(p % n2)).collect();
    Permutation::from_vec_unchecked(img)
}

pub fn aut_psi_subgroup(q1: &FiniteQuandle, q2: &FiniteQuandle, psi: &[Permutation]) -> Result<AutPsi> {
    check_conj_homomorphism(q2, psi, q1, "ψ")?;
    let (a1, a2) = (quandle_aut(q1), quandle_aut(q2));
    let mut pairs = Vec::new();
    for al in a1.elements() {
        for be in a2.elements() {
            if (0..q2.n()).all(|f| psi[be.apply(f)] == al.conjugate(&psi[f])) {
                pairs.push((al.clone(), be.clone()));
            }
        }
    }
    let group =
        PermutationGroup::from_elements(q1.n() * q2.n(), pairs.iter().map(|(a, b)| product_map(a, b)).collect())?;
    Ok(AutPsi { pairs, group })
}

/// `C = C_{Aut(Q1)}(ψ(Q2) ∪ Inn(Q1))`.
fn h_kernel(q1: &FiniteQuandle, psi: &[Permutation]) -> PermutationGroup {
    let mut set: Vec<Permutation> = psi.to_vec();
    set.extend(q1.translations());
    quandle_aut(q1).centralizer_of_set(&set)
}

/// All maps `(x, f) ↦ (α δ_{χ(f)}(x), β(f))` with `(α, β) ∈ Aut_ψ` and one
/// `δ_i ∈ C` per orbit of `Q2`. Fails if one of them is not an automorphism of
/// `B(Q1 ×_ψ Q2)` or if they do not form a group.
pub fn product_h_subgroup(q1: &FiniteQuandle, q2: &FiniteQuandle, psi: &[Permutation]) -> Result<PermutationGroup> {
    let b = semidirect_biquandle(q1, q2, psi)?;
    let aut_psi = aut_psi_subgroup(q1, q2, psi)?;
    let c = h_kernel(q1, psi);
    let orbs = orbits(q2);
    let mut chi = vec![0; q2.n()];
    for (i, o) in orbs.iter().enumerate() {
        for &f in o {
            chi[f] = i;
        }
    }
    let (n1, n2) = (q1.n(), q2.n());
    let k = orbs.len();
    let cs = c.elements();
    let mut out: BTreeSet<Permutation> = BTreeSet::new();
    let mut choice = vec![0usize; k];
    loop {
        for (al, be) in &aut_psi.pairs {
            let img = (0..n1 * n2)
                .map(|p| {
                    let (x, f) = (p / n2, p % n2);
                    al.apply(cs[choice[chi[f]]].apply(x)) * n2 + be.apply(f)
                })
                .collect();
            let m = Permutation::from_vec_unchecked(img);
            if !b.is_automorphism(&m) {
                return domain(format!("{m} is not an automorphism of the semidirect biquandle"));
            }
            out.insert(m);
        }
        // next δ tuple
        let mut i = 0;
        while i < k {
            choice[i] += 1;
            if choice[i] < cs.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == k {
            break;
        }
    }
    PermutationGroup::from_elements(n1 * n2, out.into_iter().collect())
}

fn require_semidirect_hypotheses(q1: &FiniteQuandle, q2: &FiniteQuandle, psi: &[Permutation]) -> Result<()> {
    if !is_connected(q1) {
        return domain("Q1 must be connected");
    }
    if psi.len() != q2.n() || !psi.iter().any(Permutation::is_identity) {
        return domain("the identity must lie in ψ(Q2)");
    }
    Ok(())
}

/// `Aut(B(Q1 ×_ψ Q2)) = H` for connected `Q1` with `id ∈ ψ(Q2)`.
pub fn verify_product_aut_theorem(q1: &FiniteQuandle, q2: &FiniteQuandle, psi: &[Permutation]) -> Result<bool> {
    require_semidirect_hypotheses(q1, q2, psi)?;
    let h = product_h_subgroup(q1, q2, psi)?;
    let b = semidirect_biquandle(q1, q2, psi)?;
    Ok(biquandle_aut(&b).elements() == h.elements())
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub c_order: usize,
    pub orbits: usize,
    pub aut_psi_order: usize,
    pub h_order: usize,
    /// `|C|^k · |Aut_ψ| = |C| · |H|`.
    pub sequence_holds: bool,
    /// Whether every automorphism of `Q2` fixes the first orbit setwise.
    pub orbit_fixed: bool,
    /// `|H| = |C|^{k-1} · |Aut_ψ|`; `None` when `orbit_fixed` is false.
    pub orbit_fixed_holds: Option<bool>,
}

pub fn verify_sequence_cardinality(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    psi: &[Permutation],
) -> Result<SequenceReport> {
    let aut_psi = aut_psi_subgroup(q1, q2, psi)?;
    let h = product_h_subgroup(q1, q2, psi)?;
    let c = h_kernel(q1, psi).order();
    let orbs = orbits(q2);
    let k = orbs.len() as u32;
    let sequence_holds = c.pow(k) * aut_psi.group.order() == c * h.order();
    let first: BTreeSet<usize> = orbs[0].iter().copied().collect();
    let orbit_fixed = quandle_aut(q2).elements().iter().all(|b| orbs[0].iter().all(|&f| first.contains(&b.apply(f))));
    let orbit_fixed_holds = orbit_fixed.then(|| h.order() == c.pow(k - 1) * aut_psi.group.order());
    Ok(SequenceReport {
        c_order: c,
        orbits: orbs.len(),
        aut_psi_order: aut_psi.group.order(),
        h_order: h.order(),
        sequence_holds,
        orbit_fixed,
        orbit_fixed_holds,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct HolomorphReport {
    pub hol_order: usize,
    pub aut_order: usize,
    pub holds: bool,
}

/// `Aut(Hol(Q)) = {(x, f) ↦ (α(x), α f α⁻¹)}` for faithful connected `Q`.
pub fn verify_holomorph_aut(q: &FiniteQuandle) -> Result<HolomorphReport> {
    if !is_faithful(q) || !is_connected(q) {
        return domain("Q must be faithful and connected");
    }
    let hol = holomorph_biquandle(q);
    let auts = quandle_aut(q).elements().to_vec();
    let m = auts.len();
    let predicted: BTreeSet<Permutation> = auts
        .iter()
        .map(|al| {
            let img = (0..q.n() * m)
                .map(|p| {
                    let (x, f) = (p / m, p % m);
                    let g = al.conjugate(&auts[f]);
                    al.apply(x) * m + auts.binary_search(&g).expect("conjugate is an automorphism")
                })
                .collect();
            Permutation::from_vec_unchecked(img)
        })
        .collect();
    let aut = biquandle_aut(&hol);
    let holds = aut.order() == m && aut.elements().iter().eq(predicted.iter());
    Ok(HolomorphReport { hol_order: hol.n(), aut_order: aut.order(), holds })
}

/// Whether automorphisms normalize the family `{β_a}` of a biquandle.
#[derive(Clone, Debug, Serialize)]
pub struct NormalizerReport {
    /// `Aut(B) ≤ N_{Aut(𝒬(B))}{β_a}`.
    pub aut_b_normalizes: bool,
    /// The same with `Aut(𝒬(B))` in place of `Aut(B)`; reported, not required.
    pub aut_q_normalizes: bool,
}

pub fn verify_structure_normalizer(b: &FiniteBiquandle) -> NormalizerReport {
    let s = structure_of_biquandle(b);
    let aut_q = quandle_aut(s.base());
    let norm = aut_q.normalizer_of_family(s.betas());
    NormalizerReport {
        aut_b_normalizes: biquandle_aut(b).is_subgroup_of(&norm),
        aut_q_normalizes: aut_q.is_subgroup_of(&norm),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::biquandle::biquandle_of_quandle;
    use crate::constructions::{alexander_biquandle, dihedral_quandle, trivial_quandle, wada_biquandle};
    use crate::groups::{cyclic_group, power_map};

    #[test]
    fn small_aut_orders() {
        assert_eq!(quandle_aut(&dihedral_quandle(3).unwrap()).order(), 6);
        assert_eq!(quandle_aut(&trivial_quandle(4).unwrap()).order(), 24);
        assert_eq!(biquandle_aut(&biquandle_of_quandle(&dihedral_quandle(3).unwrap())).order(), 6);
        assert_eq!(quandle_aut(&dihedral_quandle(5).unwrap()).order(), 20);
    }

    #[test]
    fn centralizer_and_normalizer() {
        let g = quandle_aut(&trivial_quandle(3).unwrap());
        let id = Permutation::identity(3);
        assert_eq!(centralizer(&g, &id).unwrap().order(), 6);
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert_eq!(centralizer(&g, &c).unwrap().order(), 3);
        assert_eq!(normalizer_of_family(&g, &[id]).order(), 6);
        let outside = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        assert!(centralizer(&quandle_aut(&dihedral_quandle(4).unwrap()), &outside).is_err());
    }

    #[test]
    fn constant_structure_examples() {
        let r5 = dihedral_quandle(5).unwrap();
        let double = Permutation::new((0..5).map(|x| 2 * x % 5).collect()).unwrap();
        assert!(verify_constant_structure_aut(&r5, &double).unwrap());
        let t4 = trivial_quandle(4).unwrap();
        let c4 = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        assert!(verify_constant_structure_aut(&t4, &c4).unwrap());
        let b = biquandle_from_structure(&constant_structure(&t4, &c4).unwrap());
        assert_eq!(biquandle_aut(&b).order(), 4);
    }

    #[test]
    fn gen_dihedral_examples() {
        let z3 = cyclic_group(3).unwrap();
        assert!(verify_gen_dihedral_containment(&z3, &GroupAutomorphism::identity(&z3)).unwrap());
        let z5 = cyclic_group(5).unwrap();
        assert!(verify_gen_dihedral_containment(&z5, &power_map(&z5, 2).unwrap()).unwrap());
        let z9 = cyclic_group(9).unwrap();
        assert!(verify_gen_dihedral_containment(&z9, &power_map(&z9, 2).unwrap()).unwrap());
        let z4 = cyclic_group(4).unwrap();
        assert!(verify_gen_dihedral_containment(&z4, &GroupAutomorphism::identity(&z4)).is_err());
    }

    #[test]
    fn gen_alexander_rejects_equal_maps() {
        let z5 = cyclic_group(5).unwrap();
        let two = power_map(&z5, 2).unwrap();
        assert!(verify_gen_alexander_aut(&z5, &two, &two).is_err());
    }

    #[test]
    fn union_aut_small() {
        let r3 = dihedral_quandle(3).unwrap();
        let t1 = trivial_quandle(1).unwrap();
        let rep = union_quandle_aut(&r3, &t1).unwrap();
        assert!(rep.holds);
        assert_eq!(rep.group.order(), 6);
        assert!(union_quandle_aut(&r3, &trivial_quandle(2).unwrap()).is_err());
    }

    #[test]
    fn normalizer_examples() {
        for b in [
            biquandle_of_quandle(&dihedral_quandle(3).unwrap()),
            wada_biquandle(&cyclic_group(3).unwrap()).unwrap(),
            alexander_biquandle(5, 3, 2).unwrap(),
        ] {
            assert!(verify_structure_normalizer(&b).aut_b_normalizes);
            assert!(aut_contained_in_associated(&b));
        }
    }

    #[test]
    fn isomorphism_witnesses() {
        let z3 = cyclic_group(3).unwrap();
        let alex = crate::constructions::alexander_quandle(&z3, &power_map(&z3, 2).unwrap()).unwrap();
        let r3 = dihedral_quandle(3).unwrap();
        let f = quandle_isomorphism(&r3, &alex).unwrap();
        assert!(r3.is_homomorphism_to(&alex, f.images()));
        let w = wada_biquandle(&z3).unwrap();
        assert!(biquandle_isomorphism(&biquandle_of_quandle(&r3), &w).is_none());
    }
}
