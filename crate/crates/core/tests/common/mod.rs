//! Corpora and brute-force oracles shared by the integration tests. The
//! oracles deliberately avoid the library's search code.
#![allow(dead_code)]

use std::collections::BTreeSet;

use biq_core::biquandle::biquandle_of_quandle;
use biq_core::constructions::*;
use biq_core::groups::{
    automorphism_group, commute, cyclic_group, direct_product, is_central_automorphism, power_map, symmetric_group,
};
use biq_core::links::{Crossing, Sign};
use biq_core::{FiniteBiquandle, FiniteGroup, FiniteQuandle, Permutation, PermutationGroup, VirtualLinkDiagram};

/// Cayley table of a closed set of permutations.
pub fn perm_group(degree: usize, gens: &[&[&[usize]]]) -> FiniteGroup {
    let gens: Vec<Permutation> = gens.iter().map(|c| Permutation::from_cycles(degree, c).unwrap()).collect();
    let g = PermutationGroup::generated_by(degree, gens);
    let els = g.elements();
    let mul = els.iter().map(|a| els.iter().map(|b| g.index_of(&a.compose(b)).unwrap()).collect()).collect();
    FiniteGroup::from_table(mul, 64).unwrap()
}

/// Quaternion group with elements `±1, ±i, ±j, ±k`, index `4·sign + unit`.
pub fn quaternion_group() -> FiniteGroup {
    // unit products: (result unit, sign flip)
    let unit = |a: usize, b: usize| -> (usize, bool) {
        match (a, b) {
            (0, u) | (u, 0) => (u, false),
            (x, y) if x == y => (0, true),
            (1, 2) => (3, false),
            (2, 3) => (1, false),
            (3, 1) => (2, false),
            (2, 1) => (3, true),
            (3, 2) => (1, true),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let mul = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (u, flip) = unit(a % 4, b % 4);
                    let neg = (a / 4 == 1) ^ (b / 4 == 1) ^ flip;
                    4 * usize::from(neg) + u
                })
                .collect()
        })
        .collect();
    FiniteGroup::from_table(mul, 64).unwrap()
}

/// Groups of order at most `max`, from a fixed list covering every group of
/// order ≤ 8 and several of order 9..12.
pub fn groups_up_to(max: usize) -> Vec<(String, FiniteGroup)> {
    let z = |n| cyclic_group(n).unwrap();
    let mut out: Vec<(String, FiniteGroup)> = (1..=12).map(|n| (format!("Z{n}"), z(n))).collect();
    out.push(("Z2xZ2".into(), direct_product(&z(2), &z(2)).unwrap()));
    out.push(("Z2xZ4".into(), direct_product(&z(2), &z(4)).unwrap()));
    out.push(("Z2xZ2xZ2".into(), direct_product(&direct_product(&z(2), &z(2)).unwrap(), &z(2)).unwrap()));
    out.push(("S3".into(), symmetric_group(3).unwrap()));
    out.push(("D4".into(), perm_group(4, &[&[&[0, 1, 2, 3]], &[&[1, 3]]])));
    out.push(("Q8".into(), quaternion_group()));
    out.push(("Z3xZ3".into(), direct_product(&z(3), &z(3)).unwrap()));
    out.push(("D5".into(), perm_group(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]])));
    out.push(("Z2xZ6".into(), direct_product(&z(2), &z(6)).unwrap()));
    out.push(("S3xZ2".into(), direct_product(&symmetric_group(3).unwrap(), &z(2)).unwrap()));
    out.push(("A4".into(), perm_group(4, &[&[&[0, 1, 2]], &[&[0, 1], &[2, 3]]])));
    out.retain(|(_, g)| g.order() <= max);
    out
}

/// Quandles built by every quandle constructor over the groups of order ≤ `max`.
pub fn constructed_quandles(max: usize) -> Vec<(String, FiniteQuandle)> {
    let mut out = Vec::new();
    for (name, g) in groups_up_to(max) {
        for k in 0..g.exponent() as i64 {
            out.push((format!("Conj_{k}({name})"), conj_quandle(&g, k).unwrap()));
        }
        out.push((format!("Core({name})"), core_quandle(&g).unwrap()));
        if g.is_abelian() {
            out.push((format!("T({name})"), takasaki(&g).unwrap()));
        }
        for (i, phi) in automorphism_group(&g).iter().enumerate() {
            out.push((format!("Alex({name},#{i})"), alexander_quandle(&g, phi).unwrap()));
        }
    }
    for n in 1..=max {
        out.push((format!("R{n}"), dihedral_quandle(n).unwrap()));
        out.push((format!("T{n}"), trivial_quandle(n).unwrap()));
    }
    out
}

/// Biquandles from every biquandle constructor over the groups of order ≤ `max`,
/// with all admissible parameters.
pub fn constructed_biquandles(max: usize) -> Vec<(String, FiniteBiquandle)> {
    let mut out = Vec::new();
    for (name, g) in groups_up_to(max) {
        out.push((format!("Wada({name})"), wada_biquandle(&g).unwrap()));
        let auts = automorphism_group(&g);
        for (i, phi) in auts.iter().enumerate() {
            if is_central_automorphism(&g, phi) {
                out.push((format!("B({name},#{i})"), gen_dihedral_biquandle(&g, phi).unwrap()));
            }
            for (j, psi) in auts.iter().enumerate() {
                if commute(phi, psi) {
                    out.push((format!("A({name},#{i},#{j})"), gen_alexander_biquandle(&g, phi, psi).unwrap()));
                }
            }
        }
    }
    for n in 1..=max {
        for s in 0..n {
            for t in 0..n {
                if let Ok(b) = alexander_biquandle(n, s, t) {
                    out.push((format!("Alex{n}({s},{t})"), b));
                }
            }
        }
    }
    out
}

/// Group-order-bounded biquandle corpus including `ℬ(Q)` of constructed quandles.
pub fn biquandle_corpus(max: usize) -> Vec<(String, FiniteBiquandle)> {
    let mut out = constructed_biquandles(max);
    for (name, q) in constructed_quandles(max) {
        out.push((format!("B[{name}]"), biquandle_of_quandle(&q)));
    }
    out
}

/// All bijections preserving every table, by naive depth-first assignment.
pub fn naive_automorphisms(n: usize, tables: &[&dyn Fn(usize, usize) -> usize]) -> BTreeSet<Vec<usize>> {
    fn go(
        n: usize,
        tables: &[&dyn Fn(usize, usize) -> usize],
        img: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        let k = img.len();
        if k == n {
            out.insert(img.clone());
            return;
        }
        for c in 0..n {
            if used[c] {
                continue;
            }
            img.push(c);
            let ok = (0..=k).all(|a| {
                (0..=k).all(|b| {
                    tables.iter().all(|t| {
                        let p = t(a, b);
                        p > k || img[p] == t(img[a], img[b])
                    })
                })
            });
            if ok {
                used[c] = true;
                go(n, tables, img, used, out);
                used[c] = false;
            }
            img.pop();
        }
    }
    let mut out = BTreeSet::new();
    go(n, tables, &mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub fn naive_quandle_aut(q: &FiniteQuandle) -> BTreeSet<Vec<usize>> {
    naive_automorphisms(q.n(), &[&|a, b| q.op(a, b)])
}

pub fn naive_biquandle_aut(b: &FiniteBiquandle) -> BTreeSet<Vec<usize>> {
    naive_automorphisms(b.n(), &[&|x, y| b.under(x, y), &|x, y| b.over(x, y)])
}

pub fn as_sets(g: &PermutationGroup) -> BTreeSet<Vec<usize>> {
    g.elements().iter().map(|p| p.images().to_vec()).collect()
}

/// Counts arc labelings by trying every assignment. `holds(iu, io, ou, oo)`
/// is the relation at a positive crossing.
pub fn brute_colorings(d: &VirtualLinkDiagram, size: usize, holds: &dyn Fn(usize, usize, usize, usize) -> bool) -> u64 {
    let arcs = d.arc_count();
    assert!(arcs <= 8, "brute force oracle is for small diagrams");
    let mut lab = vec![0usize; arcs];
    let mut count = 0;
    loop {
        let ok = d.closures().iter().all(|&(a, b)| lab[a] == lab[b])
            && d.crossings().iter().all(|c| match *c {
                Crossing::Virtual { in1, in2, out1, out2 } => lab[in1] == lab[out1] && lab[in2] == lab[out2],
                Crossing::Classical { sign: Sign::Positive, in_under, in_over, out_under, out_over } => {
                    holds(lab[in_under], lab[in_over], lab[out_under], lab[out_over])
                }
                Crossing::Classical { sign: Sign::Negative, in_under, in_over, out_under, out_over } => {
                    holds(lab[out_under], lab[out_over], lab[in_under], lab[in_over])
                }
            });
        count += u64::from(ok);
        let mut i = 0;
        loop {
            if i == arcs {
                return count;
            }
            lab[i] += 1;
            if lab[i] < size {
                break;
            }
            lab[i] = 0;
            i += 1;
        }
    }
}

pub fn brute_biquandle_colorings(d: &VirtualLinkDiagram, b: &FiniteBiquandle) -> u64 {
    brute_colorings(d, b.n(), &|iu, io, ou, oo| ou == b.under(iu, oo) && io == b.over(oo, iu))
}

pub fn brute_quandle_colorings(d: &VirtualLinkDiagram, q: &FiniteQuandle) -> u64 {
    brute_colorings(d, q.n(), &|iu, io, ou, oo| io == oo && ou == q.op(iu, io))
}

/// Biquandle structures on `T_n` by filtering all of `S_n^n`.
pub fn trivial_structures_by_filter(n: usize) -> Vec<Vec<Vec<usize>>> {
    let perms: Vec<Vec<usize>> = biq_core::groups::all_permutations(n).iter().map(|p| p.images().to_vec()).collect();
    let total = perms.len().pow(n as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let tuple: Vec<&Vec<usize>> = (0..n)
            .map(|_| {
                let p = &perms[c % perms.len()];
                c /= perms.len();
                p
            })
            .collect();
        let diag: BTreeSet<usize> = (0..n).map(|y| tuple[y][y]).collect();
        if diag.len() != n {
            continue;
        }
        let ok = (0..n).all(|x| {
            (0..n).all(|y| {
                let (l, r) = (tuple[tuple[y][x]], tuple[tuple[x][y]]);
                (0..n).all(|z| l[tuple[y][z]] == r[tuple[x][z]])
            })
        });
        if ok {
            out.push(tuple.into_iter().cloned().collect());
        }
    }
    out.sort();
    out
}

pub fn affine(n: usize, a: usize, b: usize) -> Permutation {
    Permutation::new((0..n).map(|x| (a * x + b) % n).collect()).unwrap()
}

pub fn times(g: &FiniteGroup, k: i64) -> biq_core::GroupAutomorphism {
    power_map(g, k).unwrap()
}
