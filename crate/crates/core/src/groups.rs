use serde::{Deserialize, Serialize};

use crate::error::{domain, malformed, Error, Result};
use crate::perm::Permutation;

/// Default bound on group orders accepted by the constructors.
pub const DEFAULT_ORDER_CAP: usize = 64;

/// A finite group given by its multiplication table `mul[a][b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GroupJson", into = "GroupJson")]
pub struct FiniteGroup {
    n: usize,
    mul: Vec<usize>,
    e: usize,
    inv: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    n: usize,
    mul: Vec<Vec<usize>>,
}

impl TryFrom<GroupJson> for FiniteGroup {
    type Error = Error;
    fn try_from(j: GroupJson) -> Result<Self> {
        if j.mul.len() != j.n {
            return malformed(format!("n = {} but table has {} rows", j.n, j.mul.len()));
        }
        FiniteGroup::from_table(j.mul, usize::MAX)
    }
}

impl From<FiniteGroup> for GroupJson {
    fn from(g: FiniteGroup) -> Self {
        GroupJson { n: g.n, mul: g.mul.chunks(g.n).map(<[usize]>::to_vec).collect() }
    }
}

fn check_cap(n: usize, cap: usize) -> Result<()> {
    if n > cap {
        return Err(Error::Resource(format!("group order {n} exceeds cap {cap}")));
    }
    Ok(())
}

impl FiniteGroup {
    /// Validates a multiplication table: identity, inverses, associativity.
    pub fn from_table(mul: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let n = crate::quandle::check_square(&mul)?;
        check_cap(n, cap)?;
        if mul.iter().flatten().any(|&x| x >= n) {
            return malformed("entry out of range");
        }
        let flat: Vec<usize> = mul.into_iter().flatten().collect();
        let m = |a: usize, b: usize| flat[a * n + b];
        let Some(e) = (0..n).find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a)) else {
            return domain("no two-sided identity");
        };
        let mut inv = vec![0; n];
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == e && m(b, a) == e) {
                Some(b) => inv[a] = b,
                None => return domain(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return domain(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup { n, mul: flat, e, inv })
    }

    fn from_fn(n: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mul: Vec<usize> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).map(|(a, b)| f(a, b)).collect();
        let e = (0..n).find(|&e| (0..n).all(|a| mul[e * n + a] == a)).expect("identity");
        let inv = (0..n).map(|a| (0..n).find(|&b| mul[a * n + b] == e).expect("inverse")).collect();
        FiniteGroup { n, mul, e, inv }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b]
    }

    pub fn identity(&self) -> usize {
        self.e
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let base = if k < 0 { self.inv(a) } else { a };
        let mut out = self.e;
        for _ in 0..k.unsigned_abs() {
            out = self.mul(out, base);
        }
        out
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.e {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> usize {
        (0..self.n).map(|a| self.element_order(a)).fold(1, crate::perm::lcm)
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n).filter(|&z| (0..self.n).all(|a| self.mul(a, z) == self.mul(z, a))).collect()
    }

    /// Greedy generating set: each element is added if it is not yet generated.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![false; self.n];
        span[self.e] = true;
        for a in 0..self.n {
            if !span[a] {
                gens.push(a);
                span = self.subgroup_generated(&gens);
            }
        }
        gens
    }

    fn subgroup_generated(&self, gens: &[usize]) -> Vec<bool> {
        let mut span = vec![false; self.n];
        span[self.e] = true;
        let mut stack = vec![self.e];
        while let Some(x) = stack.pop() {
            for &g in gens {
                let y = self.mul(x, g);
                if !span[y] {
                    span[y] = true;
                    stack.push(y);
                }
            }
        }
        span
    }
}

pub fn cyclic_group(n: usize) -> Result<FiniteGroup> {
    cyclic_group_capped(n, DEFAULT_ORDER_CAP)
}

/// `ℤ_n` with element `i` the residue `i`.
pub fn cyclic_group_capped(n: usize, cap: usize) -> Result<FiniteGroup> {
    if n == 0 {
        return malformed("group order must be at least 1");
    }
    check_cap(n, cap)?;
    Ok(FiniteGroup::from_fn(n, |a, b| (a + b) % n))
}

pub fn symmetric_group(k: usize) -> Result<FiniteGroup> {
    symmetric_group_capped(k, DEFAULT_ORDER_CAP)
}

/// `S_k` with elements in lexicographic order of their image arrays and
/// product `ab = a ∘ b`.
pub fn symmetric_group_capped(k: usize, cap: usize) -> Result<FiniteGroup> {
    if k > 5 {
        return Err(Error::Resource(format!("symmetric group of degree {k} exceeds degree 5")));
    }
    let order: usize = (1..=k).product();
    check_cap(order, cap)?;
    let perms = all_permutations(k);
    let index = |p: &Permutation| perms.binary_search(p).expect("permutation listed");
    Ok(FiniteGroup::from_fn(order, |a, b| index(&perms[a].compose(&perms[b]))))
}

/// All permutations of `{0..k-1}` in lexicographic order.
pub fn all_permutations(k: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(Permutation::from_vec_unchecked(cur.clone()));
        // next lexicographic permutation
        let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
        let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
    }
    out
}

pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    direct_product_capped(g, h, DEFAULT_ORDER_CAP)
}

/// `G × H` with `(a, b)` at index `a·|H| + b`.
pub fn direct_product_capped(g: &FiniteGroup, h: &FiniteGroup, cap: usize) -> Result<FiniteGroup> {
    let m = h.order();
    let n = g.order() * m;
    check_cap(n, cap)?;
    Ok(FiniteGroup::from_fn(n, |x, y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)))
}

/// An automorphism of a finite group, stored as a permutation of its elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupAutomorphism(Permutation);

impl GroupAutomorphism {
    pub fn new(g: &FiniteGroup, images: Vec<usize>) -> Result<Self> {
        if images.len() != g.order() {
            return malformed(format!("expected {} images, got {}", g.order(), images.len()));
        }
        let p = Permutation::new(images)?;
        for a in 0..g.order() {
            for b in 0..g.order() {
                if p.apply(g.mul(a, b)) != g.mul(p.apply(a), p.apply(b)) {
                    return domain(format!("map does not preserve the product at ({a}, {b})"));
                }
            }
        }
        Ok(GroupAutomorphism(p))
    }

    pub fn identity(g: &FiniteGroup) -> Self {
        GroupAutomorphism(Permutation::identity(g.order()))
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.0.apply(x)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &GroupAutomorphism) -> GroupAutomorphism {
        GroupAutomorphism(self.0.compose(&other.0))
    }

    pub fn inverse(&self) -> GroupAutomorphism {
        GroupAutomorphism(self.0.inverse())
    }
}

/// `x ↦ x^k`; an automorphism exactly when `G` is abelian and `k` is prime
/// to the exponent, and rejected otherwise.
pub fn power_map(g: &FiniteGroup, k: i64) -> Result<GroupAutomorphism> {
    GroupAutomorphism::new(g, (0..g.order()).map(|x| g.pow(x, k)).collect())
}

/// `x ↦ a x a⁻¹`.
pub fn inner_automorphism(g: &FiniteGroup, a: usize) -> GroupAutomorphism {
    let p = (0..g.order()).map(|x| g.mul(g.mul(a, x), g.inv(a))).collect();
    GroupAutomorphism(Permutation::from_vec_unchecked(p))
}

/// All automorphisms, sorted. Images of a greedy generating set are chosen by
/// backtracking among elements of equal order, then extended along the
/// Cayley graph and checked.
pub fn automorphism_group(g: &FiniteGroup) -> Vec<GroupAutomorphism> {
    let gens = g.generating_set();
    let orders: Vec<usize> = (0..g.order()).map(|a| g.element_order(a)).collect();
    let mut out = Vec::new();
    let mut imgs = Vec::with_capacity(gens.len());
    extend_images(g, &gens, &orders, &mut imgs, &mut out);
    out.sort();
    out
}

fn extend_images(
    g: &FiniteGroup,
    gens: &[usize],
    orders: &[usize],
    imgs: &mut Vec<usize>,
    out: &mut Vec<GroupAutomorphism>,
) {
    if imgs.len() == gens.len() {
        if let Some(map) = homomorphism_from_generators(g, gens, imgs) {
            let mut seen = vec![false; g.order()];
            if map.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
                out.push(GroupAutomorphism(Permutation::from_vec_unchecked(map)));
            }
        }
        return;
    }
    let want = orders[gens[imgs.len()]];
    for c in 0..g.order() {
        if orders[c] == want && !imgs.contains(&c) {
            imgs.push(c);
            extend_images(g, gens, orders, imgs, out);
            imgs.pop();
        }
    }
}

/// The endomorphism sending `gens[i] ↦ imgs[i]`, if one exists.
fn homomorphism_from_generators(g: &FiniteGroup, gens: &[usize], imgs: &[usize]) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    map[g.identity()] = g.identity();
    let mut queue = std::collections::VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        for (&s, &t) in gens.iter().zip(imgs) {
            let y = g.mul(x, s);
            let fy = g.mul(map[x], t);
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push_back(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    Some(map)
}

/// `φ` is central when `x⁻¹ φ(x)` lies in the center for every `x`.
pub fn is_central_automorphism(g: &FiniteGroup, phi: &GroupAutomorphism) -> bool {
    let z = g.center();
    (0..g.order()).all(|x| z.contains(&g.mul(g.inv(x), phi.apply(x))))
}

pub fn fixed_points(phi: &GroupAutomorphism) -> Vec<usize> {
    phi.perm().fixed_points()
}

pub fn is_fixed_point_free(g: &FiniteGroup, phi: &GroupAutomorphism) -> bool {
    fixed_points(phi) == vec![g.identity()]
}

pub fn commute(phi: &GroupAutomorphism, psi: &GroupAutomorphism) -> bool {
    phi.compose(psi) == psi.compose(phi)
}

/// Members of `autos` commuting with every member of `set`.
pub fn centralizer_of_set(autos: &[GroupAutomorphism], set: &[GroupAutomorphism]) -> Vec<GroupAutomorphism> {
    autos.iter().filter(|a| set.iter().all(|s| commute(a, s))).cloned().collect()
}
