//! Isomorphism search between finite algebras given by binary operation
//! tables of equal signature.
//!
//! Elements are first coloured by a joint partition refinement of both
//! algebras (an isomorphism must preserve colours). The backtracking then
//! fixes the image of one element at a time and propagates the forced
//! images `f(a ∘ b) = f(a) ∘ f(b)` through the subalgebra generated by the
//! mapped elements, so branching only happens on generators.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::perm::Permutation;

/// A set `{0..n-1}` with flat row-major binary operation tables.
#[derive(Clone, Copy)]
pub struct Algebra<'a> {
    pub n: usize,
    pub ops: &'a [&'a [usize]],
}

impl Algebra<'_> {
    #[inline]
    fn op(&self, t: usize, a: usize, b: usize) -> usize {
        self.ops[t][a * self.n + b]
    }
}

fn cycle_type_of(n: usize, f: impl Fn(usize) -> usize) -> Vec<usize> {
    // preimage counts if not bijective, marked by a leading sentinel
    let mut hits = vec![0usize; n];
    for i in 0..n {
        hits[f(i)] += 1;
    }
    if hits.iter().any(|&h| h != 1) {
        let mut v: Vec<usize> = hits;
        v.sort_unstable();
        v.insert(0, usize::MAX);
        return v;
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            x = f(x);
            len += 1;
        }
        out.push(len);
    }
    out.sort_unstable();
    out
}

fn initial_signature(alg: &Algebra, a: usize) -> Vec<usize> {
    let n = alg.n;
    let mut sig = Vec::new();
    for t in 0..alg.ops.len() {
        sig.push(usize::from(alg.op(t, a, a) == a));
        sig.push((0..n).filter(|&b| alg.op(t, a, b) == a).count());
        sig.push((0..n).filter(|&b| alg.op(t, b, a) == b).count());
        sig.extend(cycle_type_of(n, |x| alg.op(t, x, a)));
        sig.push(usize::MAX - 1);
        sig.extend(cycle_type_of(n, |x| alg.op(t, a, x)));
        sig.push(usize::MAX - 1);
    }
    sig
}

/// Colours for every element of every algebra, comparable across algebras.
pub(crate) fn joint_colours(algs: &[Algebra]) -> Vec<Vec<usize>> {
    let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut colours: Vec<Vec<usize>> = algs
        .iter()
        .map(|alg| {
            (0..alg.n)
                .map(|a| {
                    let s = initial_signature(alg, a);
                    let next = ids.len();
                    *ids.entry(s).or_insert(next)
                })
                .collect()
        })
        .collect();
    let mut classes = ids.len();
    loop {
        let mut ids: HashMap<Vec<usize>, usize> = HashMap::new();
        let next: Vec<Vec<usize>> = algs
            .iter()
            .zip(&colours)
            .map(|(alg, col)| {
                (0..alg.n)
                    .map(|a| {
                        let mut triples: Vec<(usize, usize, usize, usize)> = Vec::with_capacity(alg.n * alg.ops.len());
                        for t in 0..alg.ops.len() {
                            for b in 0..alg.n {
                                triples.push((t, col[b], col[alg.op(t, a, b)], col[alg.op(t, b, a)]));
                            }
                        }
                        triples.sort_unstable();
                        let mut s = vec![col[a]];
                        for (t, x, y, z) in triples {
                            s.extend([t, x, y, z]);
                        }
                        let next = ids.len();
                        *ids.entry(s).or_insert(next)
                    })
                    .collect()
            })
            .collect();
        colours = next;
        if ids.len() == classes {
            return colours;
        }
        classes = ids.len();
    }
}

struct State<'a> {
    src: Algebra<'a>,
    dst: Algebra<'a>,
    csrc: &'a [usize],
    cdst: &'a [usize],
    f: Vec<usize>,
    finv: Vec<usize>,
    assigned: Vec<usize>,
}

const NONE: usize = usize::MAX;

impl State<'_> {
    /// Maps `a ↦ b` and everything it forces. On conflict the state is
    /// rolled back and `false` returned.
    fn assign(&mut self, a: usize, b: usize) -> bool {
        let mark = self.assigned.len();
        if !self.set(a, b) {
            return false;
        }
        let mut i = mark;
        while i < self.assigned.len() {
            let x = self.assigned[i];
            let fx = self.f[x];
            for j in 0..=i {
                let y = self.assigned[j];
                let fy = self.f[y];
                for t in 0..self.src.ops.len() {
                    for (c, fc) in
                        [(self.src.op(t, x, y), self.dst.op(t, fx, fy)), (self.src.op(t, y, x), self.dst.op(t, fy, fx))]
                    {
                        if self.f[c] == NONE {
                            if !self.set(c, fc) {
                                self.undo(mark);
                                return false;
                            }
                        } else if self.f[c] != fc {
                            self.undo(mark);
                            return false;
                        }
                    }
                }
            }
            i += 1;
        }
        true
    }

    fn set(&mut self, a: usize, b: usize) -> bool {
        if self.finv[b] != NONE || self.csrc[a] != self.cdst[b] {
            return false;
        }
        self.f[a] = b;
        self.finv[b] = a;
        self.assigned.push(a);
        true
    }

    fn undo(&mut self, mark: usize) {
        for a in self.assigned.drain(mark..) {
            self.finv[self.f[a]] = NONE;
            self.f[a] = NONE;
        }
    }
}

fn descend(st: &mut State, order: &[usize], limit: usize, out: &mut Vec<Permutation>) {
    if out.len() >= limit {
        return;
    }
    let Some(&a) = order.iter().find(|&&a| st.f[a] == NONE) else {
        out.push(Permutation::from_vec_unchecked(st.f.clone()));
        return;
    };
    for b in 0..st.dst.n {
        if st.finv[b] == NONE && st.cdst[b] == st.csrc[a] {
            let mark = st.assigned.len();
            if st.assign(a, b) {
                descend(st, order, limit, out);
                st.undo(mark);
                if out.len() >= limit {
                    return;
                }
            }
        }
    }
}

/// Operation-preserving bijections `src → dst`, sorted, at most `limit` of them.
pub fn isomorphisms(src: Algebra, dst: Algebra, limit: usize) -> Vec<Permutation> {
    if src.n != dst.n || src.ops.len() != dst.ops.len() {
        return Vec::new();
    }
    let n = src.n;
    if n == 0 {
        return vec![Permutation::identity(0)];
    }
    let colours = joint_colours(&[src, dst]);
    let (csrc, cdst) = (&colours[0], &colours[1]);
    let mut hs = csrc.clone();
    let mut hd = cdst.clone();
    hs.sort_unstable();
    hd.sort_unstable();
    if hs != hd {
        return Vec::new();
    }
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in csrc {
        *class_size.entry(c).or_default() += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&a| (class_size[&csrc[a]], a));

    let root = order[0];
    let candidates: Vec<usize> = (0..n).filter(|&b| cdst[b] == csrc[root]).collect();
    let run = |b: usize| {
        let mut st = State { src, dst, csrc, cdst, f: vec![NONE; n], finv: vec![NONE; n], assigned: Vec::new() };
        let mut out = Vec::new();
        if st.assign(root, b) {
            descend(&mut st, &order, limit, &mut out);
        }
        out
    };
    let mut out: Vec<Permutation> = if limit == usize::MAX {
        candidates.par_iter().flat_map_iter(|&b| run(b)).collect()
    } else {
        let mut acc = Vec::new();
        for &b in &candidates {
            acc.extend(run(b));
            if acc.len() >= limit {
                break;
            }
        }
        acc.truncate(limit);
        acc
    };
    out.sort();
    out
}
