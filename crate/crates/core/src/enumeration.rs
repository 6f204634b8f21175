//! Exhaustive generation of small quandles and of biquandle structures on
//! trivial quandles.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::automorphisms::{biquandle_isomorphism, quandle_isomorphism};
use crate::biquandle::FiniteBiquandle;
use crate::constructions::trivial_quandle;
use crate::error::{Error, Result};
use crate::groups::all_permutations;
use crate::perm::Permutation;
use crate::quandle::{is_connected, FiniteQuandle};
use crate::structures::BiquandleStructure;
use crate::verbal::FreeWord;

pub const DEFAULT_ENUM_CAP: usize = 5;

fn check_enum_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Resource(format!("enumeration of order {n} exceeds cap {cap}")));
    }
    if n == 0 {
        return Err(Error::Malformed("order must be at least 1".into()));
    }
    Ok(())
}

pub fn enumerate_trivial_structures(n: usize) -> Result<Vec<BiquandleStructure>> {
    enumerate_trivial_structures_capped(n, DEFAULT_ENUM_CAP)
}

/// All `(β_0..β_{n-1}) ∈ S_n^n` with `β_{β_y(x)} β_y = β_{β_x(y)} β_x` and
/// `y ↦ β_y(y)` bijective, in lexicographic order of the tuples.
pub fn enumerate_trivial_structures_capped(n: usize, cap: usize) -> Result<Vec<BiquandleStructure>> {
    check_enum_cap(n, cap)?;
    let perms = all_permutations(n);
    let m = perms.len();
    let index: BTreeMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let comp: Vec<usize> = (0..m * m).map(|k| index[&perms[k / m].compose(&perms[k % m])]).collect();
    let ctx = TrivialSearch { n, perms: &perms, comp: &comp };
    let tuples: Vec<Vec<usize>> = (0..m)
        .into_par_iter()
        .flat_map_iter(|first| {
            let mut out = Vec::new();
            let mut chosen = vec![first];
            if ctx.consistent(&chosen) {
                ctx.extend(&mut chosen, &mut out);
            }
            out
        })
        .collect();
    let t = trivial_quandle(n)?;
    Ok(tuples
        .into_iter()
        .map(|tu| {
            BiquandleStructure::new(t.clone(), tu.iter().map(|&i| perms[i].clone()).collect())
                .expect("search output satisfies the structure conditions")
        })
        .collect())
}

struct TrivialSearch<'a> {
    n: usize,
    perms: &'a [Permutation],
    comp: &'a [usize],
}

impl TrivialSearch<'_> {
    /// Checks every condition that became fully determined with the last
    /// assigned position.
    fn consistent(&self, chosen: &[usize]) -> bool {
        let k = chosen.len() - 1;
        let m = self.perms.len();
        let b = |y: usize| &self.perms[chosen[y]];
        let d = b(k).apply(k);
        if (0..k).any(|j| b(j).apply(j) == d) {
            return false;
        }
        for x in 0..=k {
            for y in 0..=k {
                let r = b(y).apply(x);
                let s = b(x).apply(y);
                if x.max(y).max(r).max(s) != k {
                    continue;
                }
                let lhs = self.comp[chosen[r] * m + chosen[y]];
                let rhs = self.comp[chosen[s] * m + chosen[x]];
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn extend(&self, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == self.n {
            out.push(chosen.clone());
            return;
        }
        for i in 0..self.perms.len() {
            chosen.push(i);
            if self.consistent(chosen) {
                self.extend(chosen, out);
            }
            chosen.pop();
        }
    }
}

/// The structures on `T_{m+k} = T_m ⊔ T_k` with `β_y = g` (on the second
/// part) for `y` in the first part and `β_y = f` (on the first part) for `y`
/// in the second, over all `f ∈ S_m`, `g ∈ S_k`.
pub fn union_trivial_structures(m: usize, k: usize) -> Vec<Vec<Permutation>> {
    let n = m + k;
    let mut out = Vec::new();
    for f in all_permutations(m) {
        for g in all_permutations(k) {
            let on_second: Vec<usize> = (0..m).chain((0..k).map(|i| g.apply(i) + m)).collect();
            let on_first: Vec<usize> = (0..m).map(|i| f.apply(i)).chain(m..n).collect();
            let (bg, bf) = (Permutation::from_vec_unchecked(on_second), Permutation::from_vec_unchecked(on_first));
            out.push((0..n).map(|y| if y < m { bg.clone() } else { bf.clone() }).collect());
        }
    }
    out
}

/// `(σ·β)_y = σ β_{σ⁻¹(y)} σ⁻¹`.
pub fn relabel(betas: &[Permutation], sigma: &Permutation) -> Vec<Permutation> {
    let inv = sigma.inverse();
    (0..betas.len()).map(|y| sigma.conjugate(&betas[inv.apply(y)])).collect()
}

/// Groups the indices of `families` into orbits of simultaneous relabeling
/// by `S_n`; orbits are listed by least member.
pub fn relabeling_orbits(families: &[Vec<Permutation>]) -> Vec<Vec<usize>> {
    let Some(first) = families.first() else { return Vec::new() };
    let sym = all_permutations(first.len());
    let canon = |b: &Vec<Permutation>| sym.iter().map(|s| relabel(b, s)).min().expect("S_n nonempty");
    let mut orbits: BTreeMap<Vec<Permutation>, Vec<usize>> = BTreeMap::new();
    for (i, b) in families.iter().enumerate() {
        orbits.entry(canon(b)).or_default().push(i);
    }
    let mut out: Vec<Vec<usize>> = orbits.into_values().collect();
    out.sort();
    out
}

pub const DEFAULT_FREE_DEPTH: usize = 3;

/// Checks the lifted family on the free quandle `FQ_n` restricted to the
/// conjugates `w⁻¹ g_i w` with `|w| ≤ depth`. `β_a` for `a` conjugate to
/// `g_i` permutes the generators by `betas[i]`. Returns `false` at once if
/// `betas` is not a structure on `T_n`.
pub fn lift_structure_to_free_base_check(betas: &[Permutation], depth: usize) -> bool {
    let n = betas.len();
    let Ok(t) = trivial_quandle(n) else { return false };
    match crate::structures::validate_structure(&t, betas) {
        Ok(r) if r.passed => {}
        _ => return false,
    }
    let elems = truncated_free_quandle(n, depth);
    let core = |w: &FreeWord| -> usize {
        // conjugates of g_i have exponent sum 1 in g_i and 0 elsewhere
        let mut sums = vec![0i64; n];
        for &(l, e) in w.syllables() {
            sums[l as usize] += e;
        }
        sums.iter().position(|&s| s == 1).expect("element is a conjugate of a generator")
    };
    let act = |i: usize, w: &FreeWord| w.substitute(|l| FreeWord::letter(betas[i].apply(l as usize) as u8));
    let gens: Vec<FreeWord> = (0..n).map(|i| FreeWord::letter(i as u8)).collect();
    let cores: Vec<usize> = elems.iter().map(core).collect();
    for (xi, xw) in elems.iter().enumerate() {
        for (yi, yw) in elems.iter().enumerate() {
            let prod = yw.invert().multiply(xw).multiply(yw);
            let r = core(&act(cores[yi], &prod));
            let s = core(&act(cores[xi], yw));
            for g in &gens {
                if act(r, &act(cores[yi], g)) != act(s, &act(cores[xi], g)) {
                    return false;
                }
            }
        }
    }
    let mut seen = HashSet::new();
    elems.iter().zip(&cores).all(|(w, &c)| seen.insert(act(c, w)))
}

/// Reduced words `w⁻¹ g_i w` for all `i < n` and reduced `w` with at most `depth` letters.
pub fn truncated_free_quandle(n: usize, depth: usize) -> Vec<FreeWord> {
    let mut words = vec![FreeWord::identity()];
    let mut frontier = vec![FreeWord::identity()];
    for _ in 0..depth {
        let mut next = Vec::new();
        for w in &frontier {
            for l in 0..n as u8 {
                for e in [-1i64, 1] {
                    let v = w.multiply(&FreeWord::from_syllables(&[(l, e)]).expect("nonzero exponent"));
                    if v.length() == w.length() + 1 {
                        next.push(v);
                    }
                }
            }
        }
        words.extend(next.iter().cloned());
        frontier = next;
    }
    let mut out: Vec<FreeWord> = words
        .iter()
        .flat_map(|w| (0..n as u8).map(move |i| w.invert().multiply(&FreeWord::letter(i)).multiply(w)))
        .collect();
    out.sort();
    out.dedup();
    out
}

pub fn enumerate_quandles(n: usize) -> Result<Vec<FiniteQuandle>> {
    enumerate_quandles_capped(n, DEFAULT_ENUM_CAP)
}

/// All quandle tables of order `n`, ordered lexicographically by the tuple of
/// right translations `(S_0, .., S_{n-1})`.
pub fn enumerate_quandles_capped(n: usize, cap: usize) -> Result<Vec<FiniteQuandle>> {
    check_enum_cap(n, cap)?;
    let perms = all_permutations(n);
    // candidates for column b: permutations fixing b
    let cands: Vec<Vec<usize>> =
        (0..n).map(|b| (0..perms.len()).filter(|&i| perms[i].apply(b) == b).collect()).collect();
    let mut out = Vec::new();
    let mut cols: Vec<usize> = Vec::new();
    extend_columns(n, &perms, &cands, &mut cols, &mut out);
    Ok(out
        .into_iter()
        .map(|c| FiniteQuandle::from_fn(n, |a, b| perms[c[b]].apply(a)).expect("search output is a quandle"))
        .collect())
}

fn extend_columns(
    n: usize,
    perms: &[Permutation],
    cands: &[Vec<usize>],
    cols: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let k = cols.len();
    if k == n {
        out.push(cols.clone());
        return;
    }
    for &i in &cands[k] {
        cols.push(i);
        if columns_consistent(perms, cols) {
            extend_columns(n, perms, cands, cols, out);
        }
        cols.pop();
    }
}

/// Self-distributivity `S_c(a * b) = S_c(a) * S_c(b)` wherever the three
/// columns `b`, `c`, `S_c(b)` are already chosen and one of them is the newest.
fn columns_consistent(perms: &[Permutation], cols: &[usize]) -> bool {
    let k = cols.len() - 1;
    let s = |b: usize| &perms[cols[b]];
    let n = s(0).degree();
    for b in 0..=k {
        for c in 0..=k {
            let bc = s(c).apply(b);
            if bc > k || b.max(c).max(bc) != k {
                continue;
            }
            for a in 0..n {
                if s(c).apply(s(b).apply(a)) != s(bc).apply(s(c).apply(a)) {
                    return false;
                }
            }
        }
    }
    true
}

pub fn count_connected(n: usize) -> Result<usize> {
    Ok(enumerate_quandles(n)?.iter().filter(|q| is_connected(q)).count())
}

/// One representative per isomorphism class, in enumeration order.
pub fn quandle_classes(n: usize) -> Result<Vec<FiniteQuandle>> {
    let mut reps: Vec<FiniteQuandle> = Vec::new();
    for q in enumerate_quandles(n)? {
        if !reps.iter().any(|r| quandle_isomorphism(r, &q).is_some()) {
            reps.push(q);
        }
    }
    Ok(reps)
}

/// Algebras that can be compared up to relabeling.
pub trait Relabelable {
    fn isomorphism_to(&self, other: &Self) -> Option<Permutation>;
}

impl Relabelable for FiniteQuandle {
    fn isomorphism_to(&self, other: &Self) -> Option<Permutation> {
        quandle_isomorphism(self, other)
    }
}

impl Relabelable for FiniteBiquandle {
    fn isomorphism_to(&self, other: &Self) -> Option<Permutation> {
        biquandle_isomorphism(self, other)
    }
}

/// A bijection `a → b` preserving every table, if one exists.
pub fn are_isomorphic<T: Relabelable>(a: &T, b: &T) -> Option<Permutation> {
    a.isomorphism_to(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_structure_counts() {
        assert_eq!(enumerate_trivial_structures(1).unwrap().len(), 1);
        let two = enumerate_trivial_structures(2).unwrap();
        let id = Permutation::identity(2);
        let s = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        let got: Vec<Vec<Permutation>> = two.iter().map(|t| t.betas().to_vec()).collect();
        assert_eq!(got, vec![vec![id.clone(), id], vec![s.clone(), s]]);
        assert!(matches!(enumerate_trivial_structures(6), Err(Error::Resource(_))));
    }

    #[test]
    fn union_structures_count() {
        assert_eq!(union_trivial_structures(2, 3).len(), 12);
    }

    #[test]
    fn free_base_check() {
        for s in enumerate_trivial_structures(2).unwrap() {
            assert!(lift_structure_to_free_base_check(s.betas(), 3));
        }
        let c = Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap();
        assert!(lift_structure_to_free_base_check(&vec![c; 3], 2));
        let id = Permutation::identity(2);
        let s = Permutation::from_cycles(2, &[&[0, 1]]).unwrap();
        assert!(!lift_structure_to_free_base_check(&[id, s], 3));
    }

    #[test]
    fn small_quandle_counts() {
        assert_eq!(enumerate_quandles(1).unwrap().len(), 1);
        assert_eq!(enumerate_quandles(2).unwrap().len(), 1);
        assert_eq!(enumerate_quandles(3).unwrap().len(), 5);
        assert_eq!(quandle_classes(3).unwrap().len(), 3);
        assert_eq!(count_connected(3).unwrap(), 1);
    }

    #[test]
    fn isomorphism_examples() {
        use crate::biquandle::biquandle_of_quandle;
        use crate::constructions::{alexander_quandle, dihedral_quandle, wada_biquandle};
        use crate::groups::{cyclic_group, power_map};
        let z3 = cyclic_group(3).unwrap();
        let r3 = dihedral_quandle(3).unwrap();
        let alex = alexander_quandle(&z3, &power_map(&z3, 2).unwrap()).unwrap();
        let f = are_isomorphic(&r3, &alex).unwrap();
        assert!(r3.is_homomorphism_to(&alex, f.images()));
        assert!(are_isomorphic(&biquandle_of_quandle(&r3), &wada_biquandle(&z3).unwrap()).is_none());
        assert!(are_isomorphic(&r3, &trivial_quandle(2).unwrap()).is_none());
    }
}
