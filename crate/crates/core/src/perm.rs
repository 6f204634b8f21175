use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{malformed, Error, Result};

/// A bijection of `{0..n-1}` stored as its image array.
///
/// Composition follows function notation: `f.compose(&g)` is `f ∘ g`, i.e.
/// `g` is applied first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return malformed(format!("image {x} of {i} out of range 0..{n}"));
            }
            if seen[x] {
                return malformed(format!("value {x} repeated, not a bijection"));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    /// Caller guarantees `images` is a bijection.
    pub(crate) fn from_vec_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    /// Permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for c in cycles {
            for (i, &a) in c.iter().enumerate() {
                if a >= n {
                    return malformed(format!("cycle entry {a} out of range"));
                }
                images[a] = c[(i + 1) % c.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation { images: other.images.iter().map(|&x| self.images[x]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    /// `self ∘ g ∘ self⁻¹`.
    pub fn conjugate(&self, g: &Permutation) -> Permutation {
        self.compose(g).compose(&self.inverse())
    }

    pub fn pow(&self, k: i64) -> Permutation {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Permutation::identity(self.degree());
        for _ in 0..k.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn order(&self) -> usize {
        let mut l = 1usize;
        for len in self.cycle_type() {
            l = lcm(l, len);
        }
        l
    }

    /// Cycle lengths in decreasing order, fixed points included.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        out.sort_unstable_by(|a, b| b.cmp(a));
        out
    }

    /// All cycles including fixed points, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.images[s];
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.images[x];
            }
            out.push(c);
        }
        out
    }

    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.images[i] == i).collect()
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Permutation::new(v)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.images
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation without fixed points; the identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            any = true;
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

pub(crate) fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

/// A finite permutation group held as an explicit, sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Closure of `generators` under composition.
    pub fn generated_by(degree: usize, generators: Vec<Permutation>) -> Self {
        let elements = closure(degree, &generators);
        PermutationGroup { degree, generators, elements }
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup::generated_by(degree, Vec::new())
    }

    /// Wraps a set of permutations that is supposed to be a group. A generating
    /// set is picked greedily and the closure must reproduce the set exactly.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        let mut set: Vec<Permutation> = elements;
        set.sort();
        set.dedup();
        if set.iter().any(|p| p.degree() != degree) {
            return malformed("permutation of wrong degree");
        }
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for p in &set {
            if !span.contains(p) {
                gens.push(p.clone());
                span = closure(degree, &gens).into_iter().collect();
                if span.len() > set.len() {
                    return Err(Error::Domain("element set is not closed under composition".into()));
                }
            }
        }
        if span.len() != set.len() {
            return Err(Error::Domain("element set is not a group".into()));
        }
        Ok(PermutationGroup { degree, generators: gens, elements: set })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in lexicographic order of their image arrays.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.elements.iter().all(|p| other.contains(p))
    }

    pub fn centralizer(&self, f: &Permutation) -> Result<PermutationGroup> {
        if !self.contains(f) {
            return Err(Error::Domain(format!("{f} is not in the group")));
        }
        Ok(self.centralizer_of_set(std::slice::from_ref(f)))
    }

    /// Elements commuting with every member of `set`; the set need not lie in the group.
    pub fn centralizer_of_set(&self, set: &[Permutation]) -> PermutationGroup {
        let elems =
            self.elements.iter().filter(|g| set.iter().all(|s| g.compose(s) == s.compose(g))).cloned().collect();
        PermutationGroup::from_elements(self.degree, elems).expect("centralizer is a subgroup")
    }

    /// Elements `g` with `g {β} g⁻¹ = {β}` as sets.
    pub fn normalizer_of_family(&self, family: &[Permutation]) -> PermutationGroup {
        let mut set: Vec<Permutation> = family.to_vec();
        set.sort();
        set.dedup();
        let elems = self
            .elements
            .iter()
            .filter(|g| {
                let mut conj: Vec<Permutation> = set.iter().map(|b| g.conjugate(b)).collect();
                conj.sort();
                conj == set
            })
            .cloned()
            .collect();
        PermutationGroup::from_elements(self.degree, elems).expect("normalizer is a subgroup")
    }

    /// Full re-check of the group axioms on the element list.
    pub fn is_group(&self) -> bool {
        if !self.contains(&Permutation::identity(self.degree)) {
            return false;
        }
        self.elements
            .iter()
            .all(|a| self.contains(&a.inverse()) && self.elements.iter().all(|b| self.contains(&a.compose(b))))
    }
}

fn closure(degree: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    let mut out: Vec<Permutation> = seen.into_iter().collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_is_function_composition() {
        let f = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let g = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (f∘g)(1) = f(2) = 2
        assert_eq!(f.compose(&g).apply(1), 2);
        assert_eq!(f.compose(&f.inverse()), Permutation::identity(3));
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0]).is_err());
        assert!(Permutation::new(vec![0, 2]).is_err());
    }

    #[test]
    fn display_cycles() {
        let p = Permutation::from_cycles(5, &[&[0, 2, 4], &[1, 3]]).unwrap();
        assert_eq!(p.to_string(), "(0 2 4)(1 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn symmetric_group_closure() {
        let t = Permutation::from_cycles(4, &[&[0, 1]]).unwrap();
        let c = Permutation::from_cycles(4, &[&[0, 1, 2, 3]]).unwrap();
        let g = PermutationGroup::generated_by(4, vec![t, c.clone()]);
        assert_eq!(g.order(), 24);
        assert!(g.is_group());
        assert_eq!(g.centralizer(&c).unwrap().order(), 4);
        let again = PermutationGroup::from_elements(4, g.elements().to_vec()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn from_elements_rejects_non_group() {
        let t = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        assert!(PermutationGroup::from_elements(
            3,
            vec![
                Permutation::identity(3),
                t.clone(),
                t.pow(3).compose(&Permutation::from_cycles(3, &[&[1, 2]]).unwrap())
            ]
        )
        .is_err());
        assert!(PermutationGroup::from_elements(3, vec![t]).is_err());
    }
}
