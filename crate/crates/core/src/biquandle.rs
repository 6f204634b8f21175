use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};
use crate::perm::Permutation;
use crate::quandle::{check_square, FiniteQuandle};
use crate::report::AxiomReport;

/// A finite biquandle with `under[a][b] = a *̲ b` and `over[a][b] = a *̄ b`.
///
/// `α_b` is column `b` of `under` and `β_b` is column `b` of `over`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "BiquandleJson", into = "BiquandleJson")]
pub struct FiniteBiquandle {
    n: usize,
    under: Vec<usize>,
    over: Vec<usize>,
    under_inv: Vec<usize>,
    over_inv: Vec<usize>,
    // s_inv[p] for p = u*n + v: the pair (x, y), packed, with S(x, y) = (u, v)
    s_inv: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct BiquandleJson {
    n: usize,
    under: Vec<Vec<usize>>,
    over: Vec<Vec<usize>>,
}

impl TryFrom<BiquandleJson> for FiniteBiquandle {
    type Error = Error;
    fn try_from(j: BiquandleJson) -> Result<Self> {
        if j.under.len() != j.n || j.over.len() != j.n {
            return malformed(format!("n = {} does not match table sizes", j.n));
        }
        FiniteBiquandle::new(j.under, j.over)
    }
}

impl From<FiniteBiquandle> for BiquandleJson {
    fn from(b: FiniteBiquandle) -> Self {
        BiquandleJson { n: b.n, under: b.under_rows(), over: b.over_rows() }
    }
}

/// Checks the biquandle axioms: entry range, the diagonal axiom `b1`, column
/// bijectivity of both tables (`b2-under`, `b2-over`), bijectivity of the pair
/// map `S(x,y) = (y *̄ x, x *̲ y)` (`b2-S`), and the exchange laws `b3a`..`b3c`.
pub fn check_biquandle(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<AxiomReport> {
    check_biquandle_with(under, over, false, true)
}

/// Same checks without the diagonal axiom.
pub fn check_birack(under: &[Vec<usize>], over: &[Vec<usize>]) -> Result<AxiomReport> {
    check_biquandle_with(under, over, false, false)
}

pub fn check_biquandle_with(
    under: &[Vec<usize>],
    over: &[Vec<usize>],
    verbose: bool,
    diagonal: bool,
) -> Result<AxiomReport> {
    let n = check_square(under)?;
    if check_square(over)? != n {
        return malformed("under and over tables differ in size");
    }
    let mut c = AxiomReport::collector(verbose);
    for a in 0..n {
        for b in 0..n {
            if under[a][b] >= n || over[a][b] >= n {
                c.record("range", vec![a, b]);
            }
        }
    }
    if !c.wants("range") {
        return Ok(c.finish());
    }
    let u = |a: usize, b: usize| under[a][b];
    let o = |a: usize, b: usize| over[a][b];
    if diagonal {
        for a in 0..n {
            if u(a, a) != o(a, a) {
                c.record("b1", vec![a]);
            }
        }
    }
    for (name, t) in [("b2-under", under), ("b2-over", over)] {
        for b in 0..n {
            let mut seen = vec![usize::MAX; n];
            for a in 0..n {
                let x = t[a][b];
                if seen[x] != usize::MAX {
                    c.record(name, vec![b, seen[x], a]);
                } else {
                    seen[x] = a;
                }
            }
        }
    }
    let mut seen = vec![usize::MAX; n * n];
    for x in 0..n {
        for y in 0..n {
            let img = o(y, x) * n + u(x, y);
            if seen[img] != usize::MAX {
                let p = seen[img];
                c.record("b2-S", vec![p / n, p % n, x, y]);
            } else {
                seen[img] = x * n + y;
            }
        }
    }
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if c.wants("b3a") && u(u(x, y), u(z, y)) != u(u(x, z), o(y, z)) {
                    c.record("b3a", vec![x, y, z]);
                }
                if c.wants("b3b") && o(u(x, y), u(z, y)) != u(o(x, z), o(y, z)) {
                    c.record("b3b", vec![x, y, z]);
                }
                if c.wants("b3c") && o(o(x, y), o(z, y)) != o(o(x, z), u(y, z)) {
                    c.record("b3c", vec![x, y, z]);
                }
            }
        }
    }
    Ok(c.finish())
}

fn column_inverse(n: usize, t: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; n * n];
    for a in 0..n {
        for b in 0..n {
            inv[t[a * n + b] * n + b] = a;
        }
    }
    inv
}

impl FiniteBiquandle {
    pub fn new(under: Vec<Vec<usize>>, over: Vec<Vec<usize>>) -> Result<Self> {
        let report = check_biquandle(&under, &over)?;
        if !report.passed {
            return Err(Error::Axioms(report));
        }
        let n = under.len();
        Ok(FiniteBiquandle::from_flat(n, under.into_iter().flatten().collect(), over.into_iter().flatten().collect()))
    }

    /// Builds from two operations evaluated on all pairs, validating the result.
    pub fn from_fns(
        n: usize,
        under: impl Fn(usize, usize) -> usize,
        over: impl Fn(usize, usize) -> usize,
    ) -> Result<Self> {
        FiniteBiquandle::new(
            (0..n).map(|a| (0..n).map(|b| under(a, b)).collect()).collect(),
            (0..n).map(|a| (0..n).map(|b| over(a, b)).collect()).collect(),
        )
    }

    fn from_flat(n: usize, under: Vec<usize>, over: Vec<usize>) -> Self {
        let under_inv = column_inverse(n, &under);
        let over_inv = column_inverse(n, &over);
        let mut s_inv = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                s_inv[over[y * n + x] * n + under[x * n + y]] = x * n + y;
            }
        }
        FiniteBiquandle { n, under, over, under_inv, over_inv, s_inv }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a *̲ b`.
    #[inline]
    pub fn under(&self, a: usize, b: usize) -> usize {
        self.under[a * self.n + b]
    }

    /// `a *̄ b`.
    #[inline]
    pub fn over(&self, a: usize, b: usize) -> usize {
        self.over[a * self.n + b]
    }

    /// `α_b⁻¹(a)`: the `c` with `c *̲ b = a`.
    #[inline]
    pub fn under_inv(&self, a: usize, b: usize) -> usize {
        self.under_inv[a * self.n + b]
    }

    /// `β_b⁻¹(a)`: the `c` with `c *̄ b = a`.
    #[inline]
    pub fn over_inv(&self, a: usize, b: usize) -> usize {
        self.over_inv[a * self.n + b]
    }

    /// `S(x, y) = (y *̄ x, x *̲ y)`.
    #[inline]
    pub fn s_map(&self, x: usize, y: usize) -> (usize, usize) {
        (self.over(y, x), self.under(x, y))
    }

    /// `S⁻¹(u, v)`.
    #[inline]
    pub fn s_inv(&self, u: usize, v: usize) -> (usize, usize) {
        let p = self.s_inv[u * self.n + v];
        (p / self.n, p % self.n)
    }

    pub fn under_rows(&self) -> Vec<Vec<usize>> {
        self.under.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub fn over_rows(&self) -> Vec<Vec<usize>> {
        self.over.chunks(self.n).map(<[usize]>::to_vec).collect()
    }

    pub(crate) fn flat_tables(&self) -> [&[usize]; 2] {
        [&self.under, &self.over]
    }

    /// `β_b : a ↦ a *̄ b`.
    pub fn beta(&self, b: usize) -> Permutation {
        Permutation::from_vec_unchecked((0..self.n).map(|a| self.over(a, b)).collect())
    }

    /// `α_b : a ↦ a *̲ b`.
    pub fn alpha(&self, b: usize) -> Permutation {
        Permutation::from_vec_unchecked((0..self.n).map(|a| self.under(a, b)).collect())
    }

    pub fn is_automorphism(&self, f: &Permutation) -> bool {
        let n = self.n;
        f.degree() == n
            && (0..n).all(|a| {
                (0..n).all(|b| {
                    f.apply(self.under(a, b)) == self.under(f.apply(a), f.apply(b))
                        && f.apply(self.over(a, b)) == self.over(f.apply(a), f.apply(b))
                })
            })
    }

    /// Whether `f : self → other` preserves both operations.
    pub fn is_homomorphism_to(&self, other: &FiniteBiquandle, f: &[usize]) -> bool {
        f.len() == self.n
            && f.iter().all(|&x| x < other.n)
            && (0..self.n).all(|a| {
                (0..self.n).all(|b| {
                    f[self.under(a, b)] == other.under(f[a], f[b]) && f[self.over(a, b)] == other.over(f[a], f[b])
                })
            })
    }
}

/// Whether all four involutory identities hold.
pub fn is_involutory_biquandle(b: &FiniteBiquandle) -> bool {
    let n = b.n();
    (0..n).all(|x| {
        (0..n).all(|y| {
            b.under(x, b.over(y, x)) == b.under(x, y)
                && b.over(x, b.under(y, x)) == b.over(x, y)
                && b.under(b.under(x, y), y) == x
                && b.over(b.over(x, y), y) == x
        })
    })
}

/// The associated quandle `x * y = (x *̲ y) *̄⁻¹ y`.
pub fn associated_quandle(b: &FiniteBiquandle) -> FiniteQuandle {
    let n = b.n();
    let table = (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).map(|(x, y)| b.over_inv(b.under(x, y), y)).collect();
    FiniteQuandle::from_flat(n, table)
}

/// `ℬ(Q)`: under is the quandle operation, over is the projection `x *̄ y = x`.
pub fn biquandle_of_quandle(q: &FiniteQuandle) -> FiniteBiquandle {
    let n = q.n();
    let over = (0..n).flat_map(|a| std::iter::repeat_n(a, n)).collect();
    FiniteBiquandle::from_flat(n, q.flat().to_vec(), over)
}

/// The pair map `r(u, v) = (w, u *̲ w)` with `w = β_u⁻¹(v)`, packed as
/// `r[u*n + v] = (w, u *̲ w)`.
pub fn yang_baxter_map(b: &FiniteBiquandle) -> Vec<(usize, usize)> {
    let n = b.n();
    let mut r = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let w = b.over_inv(v, u);
            r.push((w, b.under(u, w)));
        }
    }
    r
}

/// Whether `(r×id)(id×r)(r×id) = (id×r)(r×id)(id×r)` on every triple.
pub fn check_ybe(b: &FiniteBiquandle) -> bool {
    ybe_counterexample(b.n(), &yang_baxter_map(b)).is_none()
}

/// First triple on which the braid relation fails for the packed pair map `r`.
pub fn ybe_counterexample(n: usize, r: &[(usize, usize)]) -> Option<[usize; 3]> {
    let r12 = |t: [usize; 3]| {
        let (a, b) = r[t[0] * n + t[1]];
        [a, b, t[2]]
    };
    let r23 = |t: [usize; 3]| {
        let (b, c) = r[t[1] * n + t[2]];
        [t[0], b, c]
    };
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let t = [x, y, z];
                if r12(r23(r12(t))) != r23(r12(r23(t))) {
                    return Some(t);
                }
            }
        }
    }
    None
}

/// The map `r(u, v) = (β_u⁻¹(v), u *̲ β_u⁻¹(v))` built from raw tables whose
/// over-columns are bijective; `None` if some over-column is not.
pub fn yang_baxter_map_of_tables(under: &[Vec<usize>], over: &[Vec<usize>]) -> Option<Vec<(usize, usize)>> {
    let n = under.len();
    let mut over_inv = vec![usize::MAX; n * n];
    for a in 0..n {
        for c in 0..n {
            let v = over[a][c];
            if over_inv[v * n + c] != usize::MAX {
                return None;
            }
            over_inv[v * n + c] = a;
        }
    }
    let mut r = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            let w = over_inv[v * n + u];
            r.push((w, under[u][w]));
        }
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(n: usize, f: impl Fn(usize, usize) -> usize) -> Vec<Vec<usize>> {
        (0..n).map(|a| (0..n).map(|b| f(a, b)).collect()).collect()
    }

    fn wada3() -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
        (table(3, |x, _| (3 - x) % 3), table(3, |x, y| (x + 6 - 2 * y) % 3))
    }

    #[test]
    fn b_of_r3_passes() {
        let r3 = table(3, |a, b| (2 * b + 3 - a) % 3);
        let proj = table(3, |a, _| a);
        assert!(check_biquandle(&r3, &proj).unwrap().passed);
    }

    #[test]
    fn wada_z3_passes_and_is_not_involutory() {
        let (u, o) = wada3();
        assert!(check_biquandle(&u, &o).unwrap().passed);
        let b = FiniteBiquandle::new(u, o).unwrap();
        assert!(!is_involutory_biquandle(&b));
        assert!(check_ybe(&b));
    }

    #[test]
    fn constant_right_fails_bijectivity() {
        let t = table(3, |_, b| b);
        let r = check_biquandle(&t, &t).unwrap();
        assert!(r.violates("b2-under") && r.violates("b2-over"));
    }

    #[test]
    fn size_mismatch_is_malformed() {
        let a = table(2, |a, _| a);
        let b = table(3, |a, _| a);
        assert!(matches!(check_biquandle(&a, &b), Err(Error::Malformed(_))));
    }

    #[test]
    fn functor_round_trip_r5() {
        let r5 = FiniteQuandle::from_fn(5, |a, b| (2 * b + 5 - a) % 5).unwrap();
        let b = biquandle_of_quandle(&r5);
        assert!(check_biquandle(&b.under_rows(), &b.over_rows()).unwrap().passed);
        assert_eq!(associated_quandle(&b), r5);
        assert!(is_involutory_biquandle(&b));
    }

    #[test]
    fn trivial_ybe_map_is_twist_with_op() {
        let t3 = FiniteQuandle::from_fn(3, |a, _| a).unwrap();
        let b = biquandle_of_quandle(&t3);
        let r = yang_baxter_map(&b);
        for u in 0..3 {
            for v in 0..3 {
                assert_eq!(r[u * 3 + v], (v, u));
            }
        }
        assert!(check_ybe(&b));
    }

    #[test]
    fn exchange_failure_breaks_ybe() {
        // x *̲ y = x + y, x *̄ y = x on Z_3 fails b3a
        let u = table(3, |x, y| (x + y) % 3);
        let o = table(3, |x, _| x);
        let rep = check_birack(&u, &o).unwrap();
        assert!(rep.violates("b3a"));
        let r = yang_baxter_map_of_tables(&u, &o).unwrap();
        assert!(ybe_counterexample(3, &r).is_some());
    }

    #[test]
    fn s_inverse_matches() {
        let (u, o) = wada3();
        let b = FiniteBiquandle::new(u, o).unwrap();
        for x in 0..3 {
            for y in 0..3 {
                let (p, q) = b.s_map(x, y);
                assert_eq!(b.s_inv(p, q), (x, y));
            }
        }
    }

    #[test]
    fn json_round_trip() {
        let (u, o) = wada3();
        let b = FiniteBiquandle::new(u, o).unwrap();
        let s = serde_json::to_string(&b).unwrap();
        assert_eq!(s, r#"{"n":3,"under":[[0,0,0],[2,2,2],[1,1,1]],"over":[[0,1,2],[1,2,0],[2,0,1]]}"#);
        let back: FiniteBiquandle = serde_json::from_str(&s).unwrap();
        assert_eq!(back, b);
    }
}
