use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::perm::{Permutation, PermutationGroup};
use crate::report::AxiomReport;

/// A finite quandle on `{0..n-1}` with `table[a][b] = a * b`.
///
/// The right translation `S_b` is column `b`: `S_b(a) = a * b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuandleJson", into = "QuandleJson")]
pub struct FiniteQuandle {
    n: usize,
    table: Vec<usize>,
    // rdiv[a*n + b] = the unique c with c * b = a
    rdiv: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct QuandleJson {
    n: usize,
    table: Vec<Vec<usize>>,
}

impl TryFrom<QuandleJson> for FiniteQuandle {
    type Error = Error;
    fn try_from(j: QuandleJson) -> Result<Self> {
        if j.table.len() != j.n {
            return malformed(format!("n = {} but table has {} rows", j.n, j.table.len()));
        }
        FiniteQuandle::new(j.table)
    }
}

impl From<FiniteQuandle> for QuandleJson {
    fn from(q: FiniteQuandle) -> Self {
        QuandleJson { n: q.n, table: q.rows() }
    }
}

pub(crate) fn check_square(table: &[Vec<usize>]) -> Result<usize> {
    let n = table.len();
    if n == 0 {
        return malformed("empty table");
    }
    if let Some((i, r)) = table.iter().enumerate().find(|(_, r)| r.len() != n) {
        return malformed(format!("row {i} has length {}, expected {n}", r.len()));
    }
    Ok(n)
}

/// Checks entry range, idempotency (q1), column bijectivity (r1) and right
/// self-distributivity (r2), keeping the first witness of each.
pub fn check_quandle(table: &[Vec<usize>]) -> Result<AxiomReport> {
    check_quandle_with(table, false)
}

/// As [`check_quandle`]; with `verbose` every witness is listed.
pub fn check_quandle_with(table: &[Vec<usize>], verbose: bool) -> Result<AxiomReport> {
    let n = check_square(table)?;
    let mut c = AxiomReport::collector(verbose);
    for a in 0..n {
        for b in 0..n {
            if table[a][b] >= n {
                c.record("range", vec![a, b]);
            }
        }
    }
    if !c.wants("range") {
        return Ok(c.finish());
    }
    check_rack_axioms(n, |a, b| table[a][b], &mut c, true);
    Ok(c.finish())
}

pub(crate) fn check_rack_axioms(
    n: usize,
    op: impl Fn(usize, usize) -> usize,
    c: &mut crate::report::Collector,
    idempotent: bool,
) {
    if idempotent {
        for a in 0..n {
            if op(a, a) != a && c.wants("q1") {
                c.record("q1", vec![a]);
            }
        }
    }
    for b in 0..n {
        let mut seen = vec![usize::MAX; n];
        for a in 0..n {
            let x = op(a, b);
            if seen[x] != usize::MAX {
                // two rows collide in column b
                c.record("r1", vec![b, seen[x], a]);
            } else {
                seen[x] = a;
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for d in 0..n {
                if op(op(a, b), d) != op(op(a, d), op(b, d)) && c.wants("r2") {
                    c.record("r2", vec![a, b, d]);
                }
            }
        }
    }
}

impl FiniteQuandle {
    /// Validates `table` (row = left operand) and builds the quandle.
    pub fn new(table: Vec<Vec<usize>>) -> Result<Self> {
        let report = check_quandle(&table)?;
        if !report.passed {
            return Err(Error::Axioms(report));
        }
        let n = table.len();
        Ok(FiniteQuandle::from_flat(n, table.into_iter().flatten().collect()))
    }

    /// Builds from `op` evaluated on all pairs, validating the result.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        FiniteQuandle::new((0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect())
    }

    pub(crate) fn from_flat(n: usize, table: Vec<usize>) -> Self {
        let mut rdiv = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                rdiv[table[a * n + b] * n + b] = a;
            }
        }
        FiniteQuandle { n, table, rdiv }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a * b`.
    #[inline]
    pub fn op(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    /// `a *⁻¹ b`, the unique `c` with `c * b = a`.
    #[inline]
    pub fn op_inv(&self, a: usize, b: usize) -> usize {
        self.rdiv[a * self.n + b]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat(&self) -> &[usize] {
        &self.table
    }

    /// The right translation `S_b : a ↦ a * b`.
    pub fn s(&self, b: usize) -> Permutation {
        Permutation::from_vec_unchecked((0..self.n).map(|a| self.op(a, b)).collect())
    }

    pub fn translations(&self) -> Vec<Permutation> {
        (0..self.n).map(|b| self.s(b)).collect()
    }

    /// Whether `f` preserves the operation.
    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        f.degree() == self.n
            && (0..self.n).all(|a| (0..self.n).all(|b| f.apply(self.op(a, b)) == self.op(f.apply(a), f.apply(b))))
    }

    /// Whether `f : self → other` preserves the operation.
    pub fn is_homomorphism_to(&self, other: &FiniteQuandle, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().all(|&x| x < other.n)
            && (0..self.n).all(|a| (0..self.n).all(|b| f[self.op(a, b)] == other.op(f[a], f[b])))
    }
}

/// The inner group generated by all right translations.
pub fn inner_group(q: &FiniteQuandle) -> PermutationGroup {
    PermutationGroup::generated_by(q.n(), q.translations())
}

/// Inn-orbits, each sorted, listed by least element.
pub fn orbits(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let n = q.n();
    let mut label = vec![usize::MAX; n];
    let mut out = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut orbit = vec![s];
        label[s] = id;
        let mut i = 0;
        while i < orbit.len() {
            let a = orbit[i];
            i += 1;
            for b in 0..n {
                for c in [q.op(a, b), q.op_inv(a, b)] {
                    if label[c] == usize::MAX {
                        label[c] = id;
                        orbit.push(c);
                    }
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

pub fn is_connected(q: &FiniteQuandle) -> bool {
    orbits(q).len() == 1
}

/// Whether `x ↦ S_x` is injective.
pub fn is_faithful(q: &FiniteQuandle) -> bool {
    let mut s = q.translations();
    s.sort();
    s.dedup();
    s.len() == q.n()
}

/// Whether every `S_x` is an involution.
pub fn is_involutory_quandle(q: &FiniteQuandle) -> bool {
    (0..q.n()).all(|a| (0..q.n()).all(|b| q.op(q.op(a, b), b) == a))
}

/// `Conj_{-1}` of a conjugation-closed set of permutations: `f * g = g f g⁻¹`.
pub fn conjugation_quandle(perms: &[Permutation]) -> Result<FiniteQuandle> {
    let index = |p: &Permutation| perms.iter().position(|q| q == p);
    let mut table = Vec::with_capacity(perms.len());
    for f in perms {
        let mut row = Vec::with_capacity(perms.len());
        for g in perms {
            match index(&g.conjugate(f)) {
                Some(i) => row.push(i),
                None => return Err(Error::Domain("set not closed under conjugation".into())),
            }
        }
        table.push(row);
    }
    FiniteQuandle::new(table)
}
