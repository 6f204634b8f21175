//! Oriented virtual link diagrams and their quandle/biquandle coloring counts.
//!
//! At a positive classical crossing a coloring satisfies
//! `out_under = in_under *̲ out_over` and `in_over = out_over *̄ in_under`;
//! for quandles this is `out_under = in_under * over`, the over strand keeping
//! its color. A negative crossing uses the same relations with the inputs and
//! outputs of both strands exchanged.
//!
//! Text format, one item per line (`#` starts a comment):
//! `X + a b c d` classical crossing (sign, in_under in_over out_under out_over),
//! `V a b c d` virtual crossing (in1 in2 out1 out2, strand in1 leaves as out1),
//! `= a b` splice from arc `a` into arc `b`.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::biquandle::FiniteBiquandle;
use crate::error::{Error, Result};
use crate::quandle::FiniteQuandle;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Crossing {
    Classical { sign: Sign, in_under: usize, in_over: usize, out_under: usize, out_over: usize },
    Virtual { in1: usize, in2: usize, out1: usize, out2: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VirtualLinkDiagram {
    arc_names: Vec<String>,
    crossings: Vec<Crossing>,
    closures: Vec<(usize, usize)>,
    components: usize,
}

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

pub fn parse_diagram(text: &str) -> Result<VirtualLinkDiagram> {
    let mut ids: BTreeMap<String, usize> = BTreeMap::new();
    let mut names: Vec<String> = Vec::new();
    let mut first_line: Vec<usize> = Vec::new();
    // per arc: line where it is used as an input / as an output
    let mut as_in: Vec<Option<usize>> = Vec::new();
    let mut as_out: Vec<Option<usize>> = Vec::new();
    let mut crossings = Vec::new();
    let mut closures = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let body = raw.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        let (kind, sign, arcs) = match toks[0] {
            "X" => {
                let sign = match toks.get(1) {
                    Some(&"+") => Sign::Positive,
                    Some(&"-") => Sign::Negative,
                    _ => return parse_err(line, "classical crossing needs a sign + or -"),
                };
                ('X', Some(sign), &toks[2..])
            }
            "V" => ('V', None, &toks[1..]),
            "=" => ('=', None, &toks[1..]),
            other => return parse_err(line, format!("unknown item `{other}`")),
        };
        let want = if kind == '=' { 2 } else { 4 };
        if arcs.len() != want {
            return parse_err(line, format!("expected {want} arcs, found {}", arcs.len()));
        }
        let mut idx = Vec::with_capacity(want);
        for &name in arcs {
            let id = *ids.entry(name.to_string()).or_insert_with(|| {
                names.push(name.to_string());
                first_line.push(line);
                as_in.push(None);
                as_out.push(None);
                names.len() - 1
            });
            idx.push(id);
        }
        let (ins, outs) = idx.split_at(want / 2);
        for &a in ins {
            if let Some(prev) = as_in[a] {
                return parse_err(line, format!("arc `{}` already used as an input on line {prev}", names[a]));
            }
            as_in[a] = Some(line);
        }
        for &a in outs {
            if let Some(prev) = as_out[a] {
                return parse_err(line, format!("arc `{}` already used as an output on line {prev}", names[a]));
            }
            as_out[a] = Some(line);
        }
        match kind {
            'X' => crossings.push(Crossing::Classical {
                sign: sign.expect("set for X"),
                in_under: idx[0],
                in_over: idx[1],
                out_under: idx[2],
                out_over: idx[3],
            }),
            'V' => crossings.push(Crossing::Virtual { in1: idx[0], in2: idx[1], out1: idx[2], out2: idx[3] }),
            _ => closures.push((idx[0], idx[1])),
        }
    }
    for a in 0..names.len() {
        if as_in[a].is_none() || as_out[a].is_none() {
            let role = if as_in[a].is_none() { "input" } else { "output" };
            return parse_err(first_line[a], format!("dangling arc `{}`: never used as an {role}", names[a]));
        }
    }
    let mut d = VirtualLinkDiagram { arc_names: names, crossings, closures, components: 0 };
    d.components = d.count_components();
    Ok(d)
}

/// Class count, class of each arc, and crossings on class ids.
type Reduced = (usize, Vec<usize>, Vec<(bool, [usize; 4])>);

impl VirtualLinkDiagram {
    pub fn arc_count(&self) -> usize {
        self.arc_names.len()
    }

    pub fn arc_names(&self) -> &[String] {
        &self.arc_names
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn closures(&self) -> &[(usize, usize)] {
        &self.closures
    }

    pub fn components(&self) -> usize {
        self.components
    }

    /// The arc that follows `a` along its strand.
    fn successors(&self) -> Vec<usize> {
        let mut next = vec![usize::MAX; self.arc_count()];
        for c in &self.crossings {
            match *c {
                Crossing::Classical { in_under, in_over, out_under, out_over, .. } => {
                    next[in_under] = out_under;
                    next[in_over] = out_over;
                }
                Crossing::Virtual { in1, in2, out1, out2 } => {
                    next[in1] = out1;
                    next[in2] = out2;
                }
            }
        }
        for &(a, b) in &self.closures {
            next[a] = b;
        }
        next
    }

    fn count_components(&self) -> usize {
        let next = self.successors();
        let mut seen = vec![false; next.len()];
        let mut count = 0;
        for start in 0..next.len() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                a = next[a];
            }
        }
        count
    }

    /// Classes of arcs forced equal by splices and virtual crossings, and the
    /// classical crossings rewritten on class ids as
    /// `(positive, in_under, in_over, out_under, out_over)`.
    fn reduce(&self) -> Reduced {
        let n = self.arc_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let join = |p: &mut Vec<usize>, a: usize, b: usize| {
            let (ra, rb) = (find(p, a), find(p, b));
            if ra != rb {
                p[ra.max(rb)] = ra.min(rb);
            }
        };
        for &(a, b) in &self.closures {
            join(&mut parent, a, b);
        }
        for c in &self.crossings {
            if let Crossing::Virtual { in1, in2, out1, out2 } = *c {
                join(&mut parent, in1, out1);
                join(&mut parent, in2, out2);
            }
        }
        let mut class_of = vec![usize::MAX; n];
        let mut classes = 0;
        for a in 0..n {
            let r = find(&mut parent, a);
            if class_of[r] == usize::MAX {
                class_of[r] = classes;
                classes += 1;
            }
            class_of[a] = class_of[r];
        }
        let rels = self
            .crossings
            .iter()
            .filter_map(|c| match *c {
                Crossing::Classical { sign, in_under, in_over, out_under, out_over } => Some((
                    sign == Sign::Positive,
                    [class_of[in_under], class_of[in_over], class_of[out_under], class_of[out_over]],
                )),
                Crossing::Virtual { .. } => None,
            })
            .collect();
        (classes, class_of, rels)
    }
}

/// The colouring rule at a crossing, written for a positive crossing with
/// variables `[in_under, in_over, out_under, out_over]`. Negative crossings
/// reuse it with inputs and outputs exchanged.
trait CrossingRule: Sync {
    fn size(&self) -> usize;
    /// Fills what can be derived from the known entries; `false` on a contradiction.
    fn propagate(&self, v: &mut [Option<usize>; 4]) -> bool;
}

struct QuandleRule<'a>(&'a FiniteQuandle);

impl CrossingRule for QuandleRule<'_> {
    fn size(&self) -> usize {
        self.0.n()
    }

    fn propagate(&self, v: &mut [Option<usize>; 4]) -> bool {
        let q = self.0;
        // over strand passes through unchanged; out_under = in_under * in_over
        match (v[1], v[3]) {
            (Some(a), Some(b)) if a != b => return false,
            (Some(a), None) => v[3] = Some(a),
            (None, Some(b)) => v[1] = Some(b),
            _ => {}
        }
        if let Some(o) = v[1] {
            match (v[0], v[2]) {
                (Some(u), Some(w)) => return q.op(u, o) == w,
                (Some(u), None) => v[2] = Some(q.op(u, o)),
                (None, Some(w)) => v[0] = Some(q.op_inv(w, o)),
                _ => {}
            }
        }
        true
    }
}

struct BiquandleRule<'a>(&'a FiniteBiquandle);

impl CrossingRule for BiquandleRule<'_> {
    fn size(&self) -> usize {
        self.0.n()
    }

    fn propagate(&self, v: &mut [Option<usize>; 4]) -> bool {
        let b = self.0;
        // everything follows from (in_under, out_over); S(in_under, out_over) = (in_over, out_under)
        let key = match *v {
            [Some(u), _, _, Some(d)] => Some((u, d)),
            [Some(u), Some(o), _, _] => Some((u, b.over_inv(o, u))),
            [_, _, Some(w), Some(d)] => Some((b.under_inv(w, d), d)),
            [_, Some(o), Some(w), _] => Some(b.s_inv(o, w)),
            _ => None,
        };
        let Some((u, d)) = key else { return true };
        let full = [u, b.over(d, u), b.under(u, d), d];
        for (slot, val) in v.iter_mut().zip(full) {
            match slot {
                Some(x) if *x != val => return false,
                _ => *slot = Some(val),
            }
        }
        true
    }
}

fn count_with<R: CrossingRule>(d: &VirtualLinkDiagram, rule: &R) -> u64 {
    let (classes, _, rels) = d.reduce();
    if classes == 0 {
        return 1;
    }
    let rels: Vec<[usize; 4]> =
        rels.into_iter().map(|(pos, [a, b, c, e])| if pos { [a, b, c, e] } else { [c, e, a, b] }).collect();
    (0..rule.size())
        .into_par_iter()
        .map(|c| {
            let mut vals = vec![None; classes];
            vals[0] = Some(c);
            search(&rels, rule, &mut vals)
        })
        .sum()
}

fn propagate_all<R: CrossingRule>(rels: &[[usize; 4]], rule: &R, vals: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for r in rels {
            let mut v = [vals[r[0]], vals[r[1]], vals[r[2]], vals[r[3]]];
            if !rule.propagate(&mut v) {
                return false;
            }
            for (k, &cls) in r.iter().enumerate() {
                match (vals[cls], v[k]) {
                    (None, Some(x)) => {
                        vals[cls] = Some(x);
                        changed = true;
                    }
                    (Some(a), Some(b)) if a != b => return false,
                    _ => {}
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search<R: CrossingRule>(rels: &[[usize; 4]], rule: &R, vals: &mut [Option<usize>]) -> u64 {
    if !propagate_all(rels, rule, vals) {
        return 0;
    }
    let Some(free) = vals.iter().position(Option::is_none) else { return 1 };
    let mut total = 0;
    for c in 0..rule.size() {
        let mut next = vals.to_vec();
        next[free] = Some(c);
        total += search(rels, rule, &mut next);
    }
    total
}

/// Number of arc labelings by `q` satisfying the crossing relations.
pub fn coloring_count_quandle(d: &VirtualLinkDiagram, q: &FiniteQuandle) -> u64 {
    count_with(d, &QuandleRule(q))
}

pub fn coloring_count_biquandle(d: &VirtualLinkDiagram, b: &FiniteBiquandle) -> u64 {
    count_with(d, &BiquandleRule(b))
}

pub const UNKNOT: &str = "= a a\n";
pub const KINK_POSITIVE: &str = "X + p q q p\n";
pub const KINK_NEGATIVE: &str = "X - p q q p\n";
pub const HOPF: &str = "X + a1 b1 a2 b2\nX + b2 a2 b1 a1\n";
pub const VIRTUAL_HOPF: &str = "X + b d c a\nV c a b d\n";
/// Closure of the braid `σ₁³`.
pub const TREFOIL: &str = "\
X + R0 L0 L1 R1
X + R1 L1 L2 R2
X + R2 L2 L3 R3
= L3 L0
= R3 R0
";

pub fn unlink_text(k: usize) -> String {
    (0..k).map(|i| format!("= u{i} u{i}\n")).collect()
}

/// Named diagrams: unknot, unlink2, unlink3, kink+, kink-, hopf, trefoil, virtual-hopf.
pub fn builtin_diagrams() -> Vec<(&'static str, VirtualLinkDiagram)> {
    let texts: Vec<(&'static str, String)> = vec![
        ("unknot", UNKNOT.to_string()),
        ("unlink2", unlink_text(2)),
        ("unlink3", unlink_text(3)),
        ("kink+", KINK_POSITIVE.to_string()),
        ("kink-", KINK_NEGATIVE.to_string()),
        ("hopf", HOPF.to_string()),
        ("trefoil", TREFOIL.to_string()),
        ("virtual-hopf", VIRTUAL_HOPF.to_string()),
    ];
    texts.into_iter().map(|(name, t)| (name, parse_diagram(&t).expect("builtin diagrams are valid"))).collect()
}

pub fn builtin_diagram(name: &str) -> Option<VirtualLinkDiagram> {
    builtin_diagrams().into_iter().find(|(n, _)| *n == name).map(|(_, d)| d)
}
