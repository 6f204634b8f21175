//! Free-group words and verbal (bi)quandles: operations on an arbitrary group
//! given by fixed words `w(x, y)`.
//!
//! Convention: `x *̄ y = u(x, y)` and `x *̲ y = v(x, y)`.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::biquandle::FiniteBiquandle;
use crate::error::{domain, malformed, Result};
use crate::groups::FiniteGroup;
use crate::quandle::FiniteQuandle;

pub const X: u8 = 0;
pub const Y: u8 = 1;
pub const Z: u8 = 2;

/// A reduced word in a free group: adjacent syllables have distinct letters
/// and no exponent is zero. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FreeWord {
    syllables: Vec<(u8, i64)>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn letter(l: u8) -> Self {
        FreeWord { syllables: vec![(l, 1)] }
    }

    /// Reduces a syllable list; zero exponents are rejected.
    pub fn from_syllables(syllables: &[(u8, i64)]) -> Result<Self> {
        if let Some((l, _)) = syllables.iter().find(|(_, e)| *e == 0) {
            return malformed(format!("zero exponent on {}", letter_name(*l)));
        }
        let mut w = FreeWord::identity();
        for &(l, e) in syllables {
            w.push(l, e);
        }
        Ok(w)
    }

    /// `y^a x^e y^b`.
    pub fn shaped(a: i64, e: i64, b: i64) -> Self {
        let mut w = FreeWord::identity();
        for (l, k) in [(Y, a), (X, e), (Y, b)] {
            if k != 0 {
                w.push(l, k);
            }
        }
        w
    }

    fn push(&mut self, l: u8, e: i64) {
        match self.syllables.last_mut() {
            Some((last, k)) if *last == l => {
                *k += e;
                if *k == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((l, e)),
        }
    }

    pub fn syllables(&self) -> &[(u8, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Number of letters, `Σ |exponent|`.
    pub fn length(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn multiply(&self, other: &FreeWord) -> FreeWord {
        let mut w = self.clone();
        for &(l, e) in &other.syllables {
            w.push(l, e);
        }
        w
    }

    pub fn invert(&self) -> FreeWord {
        FreeWord { syllables: self.syllables.iter().rev().map(|&(l, e)| (l, -e)).collect() }
    }

    pub fn pow(&self, k: i64) -> FreeWord {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let mut w = FreeWord::identity();
        for _ in 0..k.unsigned_abs() {
            w = w.multiply(&base);
        }
        w
    }

    /// Replaces every letter `l` by `map(l)` and reduces.
    pub fn substitute(&self, map: impl Fn(u8) -> FreeWord) -> FreeWord {
        let mut w = FreeWord::identity();
        for &(l, e) in &self.syllables {
            w = w.multiply(&map(l).pow(e));
        }
        w
    }

    /// `w(p, q)`: substitutes `x ↦ p`, `y ↦ q`; other letters are kept.
    pub fn apply2(&self, p: &FreeWord, q: &FreeWord) -> FreeWord {
        self.substitute(|l| match l {
            X => p.clone(),
            Y => q.clone(),
            other => FreeWord::letter(other),
        })
    }

    /// `(a, e, b)` when the word is `y^a x^e y^b` with `e = ±1`.
    pub fn shape(&self) -> Option<(i64, i64, i64)> {
        let s = &self.syllables;
        let xi = s.iter().position(|&(l, _)| l == X)?;
        if s.iter().any(|&(l, _)| l != X && l != Y) || s.iter().filter(|&&(l, _)| l == X).count() != 1 {
            return None;
        }
        let e = s[xi].1;
        if e.abs() != 1 || xi > 1 || s.len() - xi > 2 {
            return None;
        }
        let a = if xi == 1 { s[0].1 } else { 0 };
        let b = if xi + 1 < s.len() { s[xi + 1].1 } else { 0 };
        Some((a, e, b))
    }

    /// Parses whitespace-separated syllables such as `y^-2 x y^1`; `1` or an
    /// empty string is the identity.
    pub fn parse(text: &str) -> Result<Self> {
        let mut syl = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => {
                    let e: i64 = e.parse().map_err(|_| crate::Error::Malformed(format!("bad exponent in {tok:?}")))?;
                    (n, e)
                }
                None => (tok, 1),
            };
            let l = match name {
                "x" => X,
                "y" => Y,
                "z" => Z,
                _ => match name.strip_prefix('g').and_then(|d| d.parse::<u8>().ok()) {
                    Some(i) => i,
                    None => return malformed(format!("unknown letter {name:?}")),
                },
            };
            syl.push((l, exp));
        }
        FreeWord::from_syllables(&syl)
    }
}

fn letter_name(l: u8) -> String {
    match l {
        X => "x".into(),
        Y => "y".into(),
        Z => "z".into(),
        _ => format!("g{l}"),
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return write!(f, "1");
        }
        for (i, &(l, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "{}", letter_name(l))?;
            } else {
                write!(f, "{}^{e}", letter_name(l))?;
            }
        }
        Ok(())
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

fn x() -> FreeWord {
    FreeWord::letter(X)
}
fn y() -> FreeWord {
    FreeWord::letter(Y)
}
fn z() -> FreeWord {
    FreeWord::letter(Z)
}

/// Shape `y^a x^{±1} y^b`, right self-distributivity in `F(x, y, z)`, and
/// `w(x, x) = x`.
pub fn is_verbal_quandle_word(w: &FreeWord) -> bool {
    if w.shape().is_none() {
        return false;
    }
    let op = |p: &FreeWord, q: &FreeWord| w.apply2(p, q);
    let lhs = op(&op(&x(), &y()), &z());
    let rhs = op(&op(&x(), &z()), &op(&y(), &z()));
    lhs == rhs && op(&x(), &x()) == x()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerbalQuandle {
    /// `y⁻ⁿ x yⁿ`.
    Conj(i64),
    /// `y x⁻¹ y`.
    Core,
}

pub fn classify_verbal_quandle(w: &FreeWord) -> Option<VerbalQuandle> {
    match w.shape()? {
        (a, 1, b) if a == -b => Some(VerbalQuandle::Conj(b)),
        (1, -1, 1) => Some(VerbalQuandle::Core),
        _ => None,
    }
}

/// Shape check on both words, the three exchange identities in `F(x, y, z)`,
/// and `u(x, x) = v(x, x)`.
pub fn is_verbal_birack(u: &FreeWord, v: &FreeWord) -> bool {
    if u.shape().is_none() || v.shape().is_none() {
        return false;
    }
    verbal_exchange_identities(u, v) && u.apply2(&x(), &x()) == v.apply2(&x(), &x())
}

/// Whether the three exchange identities hold for `x *̄ y = u`, `x *̲ y = v`.
pub fn verbal_exchange_identities(u: &FreeWord, v: &FreeWord) -> bool {
    let o = |p: &FreeWord, q: &FreeWord| u.apply2(p, q);
    let un = |p: &FreeWord, q: &FreeWord| v.apply2(p, q);
    let (x, y, z) = (x(), y(), z());
    un(&un(&x, &y), &un(&z, &y)) == un(&un(&x, &z), &o(&y, &z))
        && o(&un(&x, &y), &un(&z, &y)) == un(&o(&x, &z), &o(&y, &z))
        && o(&o(&x, &y), &o(&z, &y)) == o(&o(&x, &z), &un(&y, &z))
}

/// The eight families of verbal biquandles `(u, v)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerbalFamily {
    /// `(x, y^γ x y^{-γ})`.
    F1 { gamma: i64 },
    /// `(y^α x y^{-α}, x)`.
    F2 { alpha: i64 },
    /// `(y⁻¹ x y⁻¹, x⁻¹)`.
    F3,
    /// `(y x⁻¹ y, x)`.
    F4,
    /// `(x y⁻², y x⁻¹ y⁻¹)`.
    F5,
    /// `(y⁻² x, y⁻¹ x⁻¹ y)`.
    F6,
    /// `(x, y x⁻¹ y)`.
    F7,
    /// `(x⁻¹, y⁻¹ x⁻¹ y⁻¹)`.
    F8,
}

impl VerbalFamily {
    pub fn id(self) -> u8 {
        match self {
            VerbalFamily::F1 { .. } => 1,
            VerbalFamily::F2 { .. } => 2,
            VerbalFamily::F3 => 3,
            VerbalFamily::F4 => 4,
            VerbalFamily::F5 => 5,
            VerbalFamily::F6 => 6,
            VerbalFamily::F7 => 7,
            VerbalFamily::F8 => 8,
        }
    }

    /// The pair `(u, v)`.
    pub fn words(self) -> (FreeWord, FreeWord) {
        let s = FreeWord::shaped;
        match self {
            VerbalFamily::F1 { gamma } => (s(0, 1, 0), s(gamma, 1, -gamma)),
            VerbalFamily::F2 { alpha } => (s(alpha, 1, -alpha), s(0, 1, 0)),
            VerbalFamily::F3 => (s(-1, 1, -1), s(0, -1, 0)),
            VerbalFamily::F4 => (s(1, -1, 1), s(0, 1, 0)),
            VerbalFamily::F5 => (s(0, 1, -2), s(1, -1, -1)),
            VerbalFamily::F6 => (s(-2, 1, 0), s(-1, -1, 1)),
            VerbalFamily::F7 => (s(0, 1, 0), s(1, -1, 1)),
            VerbalFamily::F8 => (s(0, -1, 0), s(-1, -1, -1)),
        }
    }

    /// Every family member whose exponents are bounded by `bound`, without
    /// repeating `(x, x)`.
    pub fn instances(bound: i64) -> Vec<(FreeWord, FreeWord)> {
        let mut out = Vec::new();
        for g in -bound..=bound {
            out.push(VerbalFamily::F1 { gamma: g }.words());
            if g != 0 {
                out.push(VerbalFamily::F2 { alpha: g }.words());
            }
        }
        for f in
            [VerbalFamily::F3, VerbalFamily::F4, VerbalFamily::F5, VerbalFamily::F6, VerbalFamily::F7, VerbalFamily::F8]
        {
            let (u, v) = f.words();
            if max_exp(&u).max(max_exp(&v)) <= bound {
                out.push((u, v));
            }
        }
        out
    }
}

// y-exponents only: the x-exponent is always ±1
fn max_exp(w: &FreeWord) -> i64 {
    w.syllables().iter().filter(|(l, _)| *l == Y).map(|(_, e)| e.abs()).max().unwrap_or(0)
}

/// Matches `(u, v)` against the eight families; `(x, x)` is reported as
/// family 1 with `γ = 0`.
pub fn classify_verbal_biquandle(u: &FreeWord, v: &FreeWord) -> Option<VerbalFamily> {
    let (su, sv) = (u.shape()?, v.shape()?);
    if su == (0, 1, 0) {
        if let (g, 1, h) = sv {
            if g == -h {
                return Some(VerbalFamily::F1 { gamma: g });
            }
        }
    }
    if sv == (0, 1, 0) {
        if let (a, 1, b) = su {
            if a == -b {
                return Some(VerbalFamily::F2 { alpha: a });
            }
        }
    }
    [VerbalFamily::F3, VerbalFamily::F4, VerbalFamily::F5, VerbalFamily::F6, VerbalFamily::F7, VerbalFamily::F8]
        .into_iter()
        .find(|f| f.words() == (u.clone(), v.clone()))
}

/// All `(u, v) = (y^a x^e y^b, y^c x^m y^d)` with exponents in `[-bound, bound]`
/// accepted by [`is_verbal_birack`], in grid order.
pub fn enumerate_verbal_biracks(bound: i64) -> Vec<(FreeWord, FreeWord)> {
    let shapes: Vec<FreeWord> = (-bound..=bound)
        .flat_map(|a| {
            [-1i64, 1].into_iter().flat_map(move |e| (-bound..=bound).map(move |b| FreeWord::shaped(a, e, b)))
        })
        .collect();
    shapes
        .par_iter()
        .flat_map_iter(|u| shapes.iter().filter(move |v| is_verbal_birack(u, v)).map(move |v| (u.clone(), v.clone())))
        .collect()
}

/// Evaluates `w` in `G`, letter `l` taking the value `assignment[l]`.
pub fn evaluate_word(w: &FreeWord, g: &FiniteGroup, assignment: &[(u8, usize)]) -> Result<usize> {
    let mut acc = g.identity();
    for &(l, e) in w.syllables() {
        let Some(&(_, val)) = assignment.iter().find(|(k, _)| *k == l) else {
            return domain(format!("letter {} is not assigned", letter_name(l)));
        };
        acc = g.mul(acc, g.pow(val, e));
    }
    Ok(acc)
}

/// The quandle `x * y = w(x, y)` on `G`.
pub fn verbal_quandle(g: &FiniteGroup, w: &FreeWord) -> Result<FiniteQuandle> {
    let n = g.order();
    let mut table = vec![vec![0; n]; n];
    for (a, row) in table.iter_mut().enumerate() {
        for (b, cell) in row.iter_mut().enumerate() {
            *cell = evaluate_word(w, g, &[(X, a), (Y, b)])?;
        }
    }
    FiniteQuandle::new(table)
}

/// Under and over tables.
pub type TablePair = (Vec<Vec<usize>>, Vec<Vec<usize>>);

/// Tables of `x *̲ y = v(x, y)` and `x *̄ y = u(x, y)` on `G`, unvalidated.
pub fn verbal_tables(g: &FiniteGroup, u: &FreeWord, v: &FreeWord) -> Result<TablePair> {
    let n = g.order();
    let mut under = vec![vec![0; n]; n];
    let mut over = vec![vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            under[a][b] = evaluate_word(v, g, &[(X, a), (Y, b)])?;
            over[a][b] = evaluate_word(u, g, &[(X, a), (Y, b)])?;
        }
    }
    Ok((under, over))
}

/// The biquandle `x *̄ y = u(x, y)`, `x *̲ y = v(x, y)` on `G`.
pub fn verbal_biquandle(g: &FiniteGroup, u: &FreeWord, v: &FreeWord) -> Result<FiniteBiquandle> {
    let (under, over) = verbal_tables(g, u, v)?;
    FiniteBiquandle::new(under, over)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::wada_biquandle;
    use crate::groups::{cyclic_group, symmetric_group};

    fn w(s: &str) -> FreeWord {
        FreeWord::parse(s).unwrap()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(w("x y y^-1 x"), w("x^2"));
        let sub = w("x y").substitute(|l| if l == X { z() } else { z().invert() });
        assert!(sub.is_identity());
        assert_eq!(w("y x^-1 y").invert(), w("y^-1 x y^-1"));
        assert!(FreeWord::from_syllables(&[(X, 0)]).is_err());
        assert_eq!(w("y^-2 x y^1").to_string(), "y^-2 x y");
        assert!(FreeWord::parse("q").is_err());
        assert!(FreeWord::parse("x^a").is_err());
    }

    #[test]
    fn shapes() {
        assert_eq!(w("y^-1 x y").shape(), Some((-1, 1, 1)));
        assert_eq!(w("x^-1").shape(), Some((0, -1, 0)));
        assert_eq!(w("x y^-2").shape(), Some((0, 1, -2)));
        assert_eq!(w("x y x").shape(), None);
        assert_eq!(w("x^2").shape(), None);
        assert_eq!(w("y").shape(), None);
        assert_eq!(w("x z").shape(), None);
    }

    #[test]
    fn quandle_words() {
        assert!(is_verbal_quandle_word(&w("y^-1 x y")));
        assert!(is_verbal_quandle_word(&w("y x^-1 y")));
        assert!(!is_verbal_quandle_word(&w("y x y")));
        assert_eq!(classify_verbal_quandle(&w("y^-2 x y^2")), Some(VerbalQuandle::Conj(2)));
        assert_eq!(classify_verbal_quandle(&w("y x^-1 y")), Some(VerbalQuandle::Core));
        assert_eq!(classify_verbal_quandle(&w("x^-1")), None);
        // x⁻¹ is self-distributive but not idempotent
        assert!(!is_verbal_quandle_word(&w("x^-1")));
    }

    #[test]
    fn birack_examples() {
        assert!(is_verbal_birack(&w("y^-2 x"), &w("y^-1 x^-1 y")));
        assert!(is_verbal_birack(&w("x"), &w("y^2 x y^-2")));
        assert!(!is_verbal_birack(&w("x"), &w("x y")));
        assert_eq!(classify_verbal_biquandle(&w("y x^-1 y"), &w("x")), Some(VerbalFamily::F4));
        assert_eq!(classify_verbal_biquandle(&w("x^-1"), &w("y^-1 x^-1 y^-1")), Some(VerbalFamily::F8));
        assert_eq!(classify_verbal_biquandle(&w("y^-1 x y^-1"), &w("x")), None);
        assert_eq!(classify_verbal_biquandle(&w("y^-2 x"), &w("y^-1 x^-1 y^1")), Some(VerbalFamily::F6));
    }

    #[test]
    fn listed_families_symbolically() {
        for (u, v) in VerbalFamily::instances(3) {
            // the eighth listed pair fails the first exchange identity
            let expect = (u.clone(), v.clone()) != VerbalFamily::F8.words();
            assert_eq!(is_verbal_birack(&u, &v), expect, "({u}, {v})");
        }
    }

    #[test]
    fn evaluation() {
        let s3 = symmetric_group(3).unwrap();
        let q = verbal_quandle(&s3, &w("y^-1 x y")).unwrap();
        assert_eq!(q, crate::constructions::conj_quandle(&s3, 1).unwrap());
        let z3 = cyclic_group(3).unwrap();
        let (u, v) = VerbalFamily::F6.words();
        assert_eq!(verbal_biquandle(&z3, &u, &v).unwrap(), wada_biquandle(&z3).unwrap());
        assert_eq!(evaluate_word(&x(), &s3, &[(X, 4)]).unwrap(), 4);
        assert!(evaluate_word(&y(), &s3, &[(X, 4)]).is_err());
    }
}
